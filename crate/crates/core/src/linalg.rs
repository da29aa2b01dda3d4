//! Exact row reduction: dense RREF over a field, a sparse incremental
//! echelon basis, and fraction-free rank over `C[q, q^{-1}]`.

use std::collections::BTreeMap;

use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

/// Reduced row echelon form of a dense matrix, in place.
/// Returns the pivot columns in increasing order.
pub fn rref<C: Scalar>(m: &mut [Vec<C>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = C::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = m[r][j].clone();
                    if !v.is_zero() {
                        m[i][j] = m[i][j].clone() - f.clone() * v;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<C: Scalar>(m: &[Vec<C>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Sparse row vector: column index → nonzero coefficient.
pub type SparseRow<C> = BTreeMap<usize, C>;

/// Incrementally maintained echelon basis of a row space. Every stored row is
/// monic at its pivot (its smallest column), and pivots are distinct.
#[derive(Clone, Debug)]
pub struct EchelonBasis<C> {
    rows: BTreeMap<usize, SparseRow<C>>,
}

impl<C: Scalar> Default for EchelonBasis<C> {
    fn default() -> Self {
        EchelonBasis { rows: BTreeMap::new() }
    }
}

impl<C: Scalar> EchelonBasis<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseRow<C>> {
        self.rows.values()
    }

    /// Reduce `row` against the basis; the result has no entry at any pivot.
    pub fn reduce(&self, mut row: SparseRow<C>) -> SparseRow<C> {
        let mut done = SparseRow::new();
        while let Some((&c, _)) = row.iter().next() {
            let v = row.remove(&c).unwrap();
            match self.rows.get(&c) {
                Some(prow) => {
                    for (&j, x) in prow.range(c + 1..) {
                        let e = row.entry(j).or_insert_with(C::zero);
                        *e = e.clone() - v.clone() * x.clone();
                        if e.is_zero() {
                            row.remove(&j);
                        }
                    }
                }
                None => {
                    done.insert(c, v);
                }
            }
        }
        done
    }

    /// Insert a row; returns true if the rank grew.
    pub fn insert(&mut self, row: SparseRow<C>) -> bool {
        let red = self.reduce(row);
        let Some((&c, lead)) = red.iter().next() else { return false };
        let inv = C::one() / lead.clone();
        let monic = red.into_iter().map(|(j, x)| (j, x * inv.clone())).collect();
        self.rows.insert(c, monic);
        true
    }

    pub fn contains(&self, row: SparseRow<C>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Rank over the fraction field `C(q)` of a matrix with Laurent entries, by
/// fraction-free (Bareiss) elimination; every division is exact.
pub fn laurent_rank<C: Scalar>(m: &[Vec<LaurentPoly<C>>]) -> usize {
    let mut a: Vec<Vec<LaurentPoly<C>>> = m.to_vec();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = LaurentPoly::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let piv = a[r][c].clone();
        for i in r + 1..rows {
            let f = a[i][c].clone();
            for j in c..cols {
                let num = &piv * &a[i][j] - &f * &a[r][j];
                a[i][j] = num.div_exact(&prev).expect("Bareiss step must divide exactly");
            }
        }
        prev = piv;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn dense_rank() {
        let m = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)], vec![r(0), r(1), r(1)]];
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn echelon_membership() {
        let mut b = EchelonBasis::<Rational>::new();
        assert!(b.insert([(0, r(1)), (2, r(1))].into()));
        assert!(b.insert([(0, r(1)), (1, r(1))].into()));
        assert!(!b.insert([(1, r(2)), (2, r(-2))].into()));
        assert!(b.contains([(1, r(-1)), (2, r(1))].into()));
        assert_eq!(b.rank(), 2);
        assert_eq!(b.pivots().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn laurent_rank_matches_specialisation() {
        type P = LaurentPoly<Rational>;
        let q = |e| P::q_pow(e);
        // [[q, 1], [1, q^{-1}]] is singular; [[q, 1], [1, q]] is not.
        let sing = vec![vec![q(1), q(0)], vec![q(0), q(-1)]];
        let reg = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert_eq!(laurent_rank(&sing), 1);
        assert_eq!(laurent_rank(&reg), 2);
    }
}
