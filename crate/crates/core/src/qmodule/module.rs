use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::rref;
use crate::rootdata::{DynkinLabels, RootDatum};
use crate::scalar::Scalar;
use crate::Rational;

/// One weight space V(λ)_{λ−β} of the specialized module.
#[derive(Clone, Debug)]
struct Space<C> {
    dim: usize,
    /// `e[b][j]`: coordinates of E_{j+1} b in V_{β−α_{j+1}} (empty when that space is zero).
    e: Vec<Vec<Vec<C>>>,
    /// `f_in[i][r]`: coordinates in this space of F_{i+1} applied to basis
    /// vector `r` of V_{β−α_{i+1}}.
    f_in: Vec<Vec<Vec<C>>>,
}

/// The irreducible module V(λ) with q specialized to a non-root of unity,
/// built weight space by weight space.
///
/// V_{λ−β} is spanned by F_i b for b in a basis of V_{λ−β+α_i}. A vector of
/// nonzero weight below λ is determined by the values E_j of it (otherwise it
/// would generate a proper submodule), so linear relations among the
/// candidates are found from their E-data:
/// E_j F_i b = F_i E_j b + δ_ij [⟨α_i^∨, wt b⟩]_i b.
#[derive(Clone, Debug)]
pub struct WeightModule<C: Scalar> {
    datum: RootDatum,
    labels: Vec<i64>,
    q: C,
    spaces: HashMap<Vec<i64>, Space<C>>,
}

impl<C: Scalar> WeightModule<C> {
    /// Build every nonzero weight space down to height `depth_cap`; errors if
    /// the module is not exhausted by then.
    pub fn new(datum: &RootDatum, labels: &[i64], q: C, depth_cap: usize) -> Result<Self> {
        let n = datum.rank;
        if labels.len() != n {
            return Err(Error::WrongLength { expected: n, got: labels.len() });
        }
        if labels.iter().any(|&x| x < 0) {
            return Err(Error::NotDominant(labels.to_vec()));
        }
        let mut m = WeightModule { datum: datum.clone(), labels: labels.to_vec(), q, spaces: HashMap::new() };
        let zero = vec![0i64; n];
        m.spaces.insert(zero.clone(), Space { dim: 1, e: vec![vec![Vec::new(); n]], f_in: vec![Vec::new(); n] });
        let mut level = vec![zero];
        let mut height = 0;
        while !level.is_empty() {
            if height == depth_cap {
                return Err(Error::DepthCap(depth_cap));
            }
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &level {
                for i in 0..n {
                    let mut b = beta.clone();
                    b[i] += 1;
                    if !next.contains(&b) {
                        next.push(b);
                    }
                }
            }
            next.sort();
            let mut kept = Vec::new();
            for beta in next {
                let sp = m.build(&beta);
                if sp.dim > 0 {
                    m.spaces.insert(beta.clone(), sp);
                    kept.push(beta);
                }
            }
            level = kept;
            height += 1;
        }
        Ok(m)
    }

    fn dim_of(&self, beta: &[i64]) -> usize {
        self.spaces.get(beta).map_or(0, |s| s.dim)
    }

    fn build(&self, beta: &[i64]) -> Space<C> {
        let n = self.datum.rank;
        let minus = |i: usize| -> Option<Vec<i64>> {
            (beta[i] > 0).then(|| {
                let mut g = beta.to_vec();
                g[i] -= 1;
                g
            })
        };
        // E-data layout: block j has length dim V_{β−α_j}.
        let block_len: Vec<usize> = (0..n).map(|j| minus(j).map_or(0, |g| self.dim_of(&g))).collect();
        let offsets: Vec<usize> = block_len
            .iter()
            .scan(0, |acc, &l| {
                let o = *acc;
                *acc += l;
                Some(o)
            })
            .collect();
        let total: usize = block_len.iter().sum();

        let mut cands: Vec<(usize, usize)> = Vec::new();
        let mut data: Vec<Vec<C>> = Vec::new();
        for i in 0..n {
            let Some(gamma) = minus(i) else { continue };
            let Some(src) = self.spaces.get(&gamma) else { continue };
            let hval = self.labels[i] - (0..n).map(|a| self.datum.c(i + 1, a + 1) * gamma[a]).sum::<i64>();
            let scalar = LaurentPoly::<C>::quantum_int(hval, self.datum.d_of(i + 1)).eval(&self.q);
            for r in 0..src.dim {
                let mut row = vec![C::zero(); total];
                for j in 0..n {
                    if block_len[j] == 0 {
                        continue;
                    }
                    // F_i (E_j b_r), landing in V_{β−α_j}
                    let ejb = &src.e[r][j];
                    if !ejb.is_empty() {
                        let target = &self.spaces[&minus(j).unwrap()];
                        for (s, c) in ejb.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            for (t, x) in target.f_in[i][s].iter().enumerate() {
                                if !x.is_zero() {
                                    let cell = &mut row[offsets[j] + t];
                                    *cell = cell.clone() + c.clone() * x.clone();
                                }
                            }
                        }
                    }
                    if i == j {
                        let cell = &mut row[offsets[j] + r];
                        *cell = cell.clone() + scalar.clone();
                    }
                }
                cands.push((i, r));
                data.push(row);
            }
        }
        if cands.is_empty() || total == 0 {
            return Space { dim: 0, e: Vec::new(), f_in: Vec::new() };
        }
        // Columns are candidates: pivots pick a basis, the other columns
        // read off their coordinates.
        let mut mat: Vec<Vec<C>> = (0..total).map(|k| data.iter().map(|row| row[k].clone()).collect()).collect();
        let pivots = rref(&mut mat);
        let dim = pivots.len();
        let e = pivots
            .iter()
            .map(|&p| (0..n).map(|j| data[p][offsets[j]..offsets[j] + block_len[j]].to_vec()).collect())
            .collect();
        let mut f_in: Vec<Vec<Vec<C>>> = vec![Vec::new(); n];
        for (col, &(i, _)) in cands.iter().enumerate() {
            f_in[i].push((0..dim).map(|k| mat[k][col].clone()).collect());
        }
        Space { dim, e, f_in }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// dim V(λ)_{λ−β}.
    pub fn dim(&self, beta: &[i64]) -> usize {
        self.dim_of(beta)
    }

    /// All β with nonzero weight space, sorted, with their dimensions.
    pub fn weights(&self) -> Vec<(Vec<i64>, usize)> {
        let mut v: Vec<_> = self.spaces.iter().map(|(b, s)| (b.clone(), s.dim)).collect();
        v.sort();
        v
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.values().map(|s| s.dim).sum()
    }
}

/// Height cap for the weight-space search: 4 · Σ λ̄_i · max d_i, raised to
/// one past the height 2⟨λ, ρ^∨⟩ of the lowest weight when that is larger.
pub fn default_depth_cap(datum: &RootDatum, labels: &[i64]) -> usize {
    let coarse = 4 * labels.iter().sum::<i64>() * datum.max_d();
    let exact = datum
        .from_dynkin_labels(&DynkinLabels { labels: labels.to_vec() })
        .map(|w| {
            let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
            // Σ_{α>0} ⟨λ, α^∨⟩
            datum.positive_roots().iter().map(|a| dot(&w.twice_coords, a) / dot(a, a)).sum::<i64>()
        })
        .unwrap_or(0);
    coarse.max(exact + 1).max(1) as usize
}

/// Σ_β dim V(λ)_{λ−β}, computed with q = 2.
pub fn character_dim(datum: &RootDatum, labels: &[i64]) -> Result<usize> {
    let q = Rational::from_integer(2.into());
    Ok(WeightModule::new(datum, labels, q, default_depth_cap(datum, labels))?.total_dim())
}
