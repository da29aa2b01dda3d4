//! Cartan data for the classical types and conversions between
//! ε-coordinates and Dynkin labels.
//!
//! Weights are stored doubled so that spin weights stay integral. Node
//! indices are 1-based in every public signature.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl std::fmt::Display for LieType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for LieType {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(format!("unknown Lie type '{other}'")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub lie_type: LieType,
    pub rank: usize,
    /// `cartan[i][j] = ⟨α_i^∨, α_j⟩` (0-based storage).
    pub cartan: Vec<Vec<i64>>,
    /// Minimal positive integer symmetrizer.
    pub d: Vec<i64>,
    /// Simple roots in ε-coordinates.
    pub simple_roots: Vec<Vec<i64>>,
}

/// A weight in ε-coordinates, stored as `2λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightCoords {
    pub lie_type: LieType,
    pub rank: usize,
    pub twice_coords: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinLabels {
    pub labels: Vec<i64>,
}

/// Number of ε-coordinates used for a datum (A_n lives in n+1 coordinates).
pub fn ambient_dim(lie_type: LieType, rank: usize) -> usize {
    match lie_type {
        LieType::A => rank + 1,
        _ => rank,
    }
}

pub fn root_datum(lie_type: LieType, rank: usize) -> Result<RootDatum> {
    let ok = match lie_type {
        LieType::A | LieType::B | LieType::C => rank >= 1,
        LieType::D => rank >= 2,
    };
    if !ok {
        return Err(Error::Unsupported(lie_type, rank));
    }
    let dim = ambient_dim(lie_type, rank);
    let unit = |i: usize| {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        v
    };
    let diff = |i: usize, j: usize, sign: i64| {
        let mut v = unit(i);
        v[j] += sign;
        v
    };
    let n = rank;
    let mut roots = Vec::with_capacity(n);
    for i in 0..n {
        let root = match lie_type {
            LieType::A => diff(i, i + 1, -1),
            LieType::B if i == n - 1 => unit(i),
            LieType::C if i == n - 1 => unit(i).iter().map(|x| 2 * x).collect(),
            LieType::D if i == n - 1 => diff(n - 2, n - 1, 1),
            _ => diff(i, i + 1, -1),
        };
        roots.push(root);
    }
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    let cartan: Vec<Vec<i64>> =
        (0..n).map(|i| (0..n).map(|j| 2 * dot(&roots[i], &roots[j]) / dot(&roots[i], &roots[i])).collect()).collect();
    // (α_i, α_i)/2 under the standard form, made integral and minimal.
    let halves: Vec<i64> = roots.iter().map(|r| dot(r, r)).collect();
    let g = halves.iter().fold(0, |acc, &x| gcd(acc, x));
    let d = halves.iter().map(|x| x / g).collect();
    Ok(RootDatum { lie_type, rank, cartan, d, simple_roots: roots })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl RootDatum {
    pub fn ambient_dim(&self) -> usize {
        ambient_dim(self.lie_type, self.rank)
    }

    /// `c_ij` for 1-based nodes.
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    /// `d_i` for a 1-based node.
    pub fn d_of(&self, i: usize) -> i64 {
        self.d[i - 1]
    }

    /// Symmetrized pairing `(α_i, α_j) = d_i c_ij` in the rescaled form.
    pub fn sym(&self, i: usize, j: usize) -> i64 {
        self.d_of(i) * self.c(i, j)
    }

    pub fn max_d(&self) -> i64 {
        *self.d.iter().max().unwrap()
    }

    /// `(x, y)` of two root-lattice vectors given in simple-root coordinates.
    pub fn root_pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += x[i] * y[j] * self.cartan[i][j] * self.d[i];
            }
        }
        s
    }

    /// `(λ, β)` for `λ` given by Dynkin labels and `β` in simple-root coordinates.
    pub fn weight_root_pairing(&self, labels: &[i64], beta: &[i64]) -> i64 {
        (0..self.rank).map(|i| labels[i] * beta[i] * self.d[i]).sum()
    }

    /// `⟨α_i^∨, λ⟩` for a weight stored doubled in ε-coordinates.
    pub fn coroot_pairing(&self, i: usize, twice: &[i64]) -> i64 {
        let a = &self.simple_roots[i - 1];
        let num: i64 = a.iter().zip(twice).map(|(x, y)| x * y).sum();
        let den: i64 = a.iter().map(|x| x * x).sum();
        debug_assert_eq!(num % den, 0, "weight not in the weight lattice");
        num / den
    }

    /// Positive roots in ε-coordinates, found by closing the simple roots
    /// under simple reflections (in simple-root coordinates).
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut found: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut k = 0;
        while k < found.len() {
            let beta = found[k].clone();
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| self.cartan[i][j] * beta[j]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut refl = beta.clone();
                refl[i] -= pairing;
                if refl.iter().all(|&x| x >= 0) && refl.iter().any(|&x| x > 0) && !found.contains(&refl) {
                    found.push(refl);
                }
            }
            k += 1;
        }
        found.iter().map(|b| self.root_to_eps(b)).collect()
    }

    /// Simple-root coordinates → ε-coordinates.
    pub fn root_to_eps(&self, beta: &[i64]) -> Vec<i64> {
        let mut v = vec![0; self.ambient_dim()];
        for (i, &m) in beta.iter().enumerate() {
            for (x, a) in v.iter_mut().zip(&self.simple_roots[i]) {
                *x += m * a;
            }
        }
        v
    }

    pub fn weight(&self, twice_coords: Vec<i64>) -> Result<WeightCoords> {
        let w = WeightCoords { lie_type: self.lie_type, rank: self.rank, twice_coords };
        self.check_dominant(&w)?;
        Ok(w)
    }

    pub fn check_dominant(&self, w: &WeightCoords) -> Result<()> {
        let t = &w.twice_coords;
        if t.len() != self.ambient_dim() {
            return Err(Error::WrongLength { expected: self.ambient_dim(), got: t.len() });
        }
        let parity_ok = match self.lie_type {
            LieType::A | LieType::C => t.iter().all(|x| x % 2 == 0),
            LieType::B | LieType::D => t.iter().all(|x| (x - t[0]) % 2 == 0),
        };
        let labels_ok = (1..=self.rank).all(|i| {
            let a = &self.simple_roots[i - 1];
            let num: i64 = a.iter().zip(t).map(|(x, y)| x * y).sum();
            let den: i64 = a.iter().map(|x| x * x).sum();
            num % den == 0 && num >= 0
        });
        let b_nonneg = !matches!(self.lie_type, LieType::B | LieType::C) || *t.last().unwrap() >= 0;
        if parity_ok && labels_ok && b_nonneg && w.lie_type == self.lie_type && w.rank == self.rank {
            Ok(())
        } else {
            Err(Error::NotDominant(t.clone()))
        }
    }

    pub fn to_dynkin_labels(&self, w: &WeightCoords) -> Result<DynkinLabels> {
        self.check_dominant(w)?;
        Ok(DynkinLabels { labels: (1..=self.rank).map(|i| self.coroot_pairing(i, &w.twice_coords)).collect() })
    }

    pub fn from_dynkin_labels(&self, labels: &DynkinLabels) -> Result<WeightCoords> {
        let l = &labels.labels;
        let n = self.rank;
        if l.len() != n {
            return Err(Error::WrongLength { expected: n, got: l.len() });
        }
        if l.iter().any(|&x| x < 0) {
            return Err(Error::NotDominant(l.clone()));
        }
        let mut t = vec![0i64; self.ambient_dim()];
        // Fill from the tail: the last one or two coordinates are fixed by
        // the type, the rest by λ_j - λ_{j+1} = λ̄_j.
        let start = match self.lie_type {
            LieType::A => {
                t[n] = 0;
                n
            }
            LieType::B => {
                t[n - 1] = l[n - 1];
                n - 1
            }
            LieType::C => {
                t[n - 1] = 2 * l[n - 1];
                n - 1
            }
            LieType::D => {
                t[n - 2] = l[n - 2] + l[n - 1];
                t[n - 1] = l[n - 1] - l[n - 2];
                n - 2
            }
        };
        for j in (0..start).rev() {
            t[j] = t[j + 1] + 2 * l[j];
        }
        self.weight(t)
    }

    /// Weyl's dimension formula `∏_{α>0} (λ+ρ, α)/(ρ, α)`, exactly.
    pub fn weyl_dim(&self, w: &WeightCoords) -> Result<BigInt> {
        self.check_dominant(w)?;
        let pos = self.positive_roots();
        let mut rho2 = vec![0i64; self.ambient_dim()];
        for a in &pos {
            for (x, y) in rho2.iter_mut().zip(a) {
                *x += y;
            }
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for a in &pos {
            let dot = |v: &[i64]| a.iter().zip(v).map(|(x, y)| x * y).sum::<i64>();
            let shifted: Vec<i64> = w.twice_coords.iter().zip(&rho2).map(|(x, y)| x + y).collect();
            num *= BigInt::from(dot(&shifted));
            den *= BigInt::from(dot(&rho2));
        }
        debug_assert!((&num % &den).is_zero());
        Ok(num / den)
    }

    /// The datum of the rank-(n-1) algebra on nodes 2..n, restricted from
    /// this one so that the symmetrizers agree with the ambient ones (a bare
    /// `root_datum(C, 1)` would have d = 1 instead of 2). `None` when the
    /// restriction is not a root datum of the same family (rank 1, D_2).
    pub fn branch_target(&self) -> Option<RootDatum> {
        let n = self.rank;
        if n == 1 || (self.lie_type == LieType::D && n == 2) || self.lie_type == LieType::A {
            return None;
        }
        let cartan = self.cartan[1..].iter().map(|row| row[1..].to_vec()).collect();
        let simple_roots = self.simple_roots[1..].iter().map(|r| r[1..].to_vec()).collect();
        Some(RootDatum { lie_type: self.lie_type, rank: n - 1, cartan, d: self.d[1..].to_vec(), simple_roots })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(t: LieType, n: usize, twice: &[i64]) -> i64 {
        let dat = root_datum(t, n).unwrap();
        let w = dat.weight(twice.to_vec()).unwrap();
        dat.weyl_dim(&w).unwrap().try_into().unwrap()
    }

    #[test]
    fn cartan_examples() {
        let b2 = root_datum(LieType::B, 2).unwrap();
        assert_eq!(b2.cartan, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(b2.d, vec![2, 1]);
        let a1 = root_datum(LieType::A, 1).unwrap();
        assert_eq!(a1.cartan, vec![vec![2]]);
        assert_eq!(a1.d, vec![1]);
        let c3 = root_datum(LieType::C, 3).unwrap();
        assert_eq!(c3.cartan, vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]);
        assert_eq!(c3.d, vec![1, 1, 2]);
        assert_eq!(root_datum(LieType::B, 4).unwrap().d, vec![2, 2, 2, 1]);
        assert!(root_datum(LieType::D, 1).is_err());
    }

    #[test]
    fn d4_forks_at_node_two() {
        let d4 = root_datum(LieType::D, 4).unwrap();
        assert_eq!(d4.c(2, 3), -1);
        assert_eq!(d4.c(2, 4), -1);
        assert_eq!(d4.c(3, 4), 0);
    }

    #[test]
    fn label_examples() {
        let b2 = root_datum(LieType::B, 2).unwrap();
        let lab = |dat: &RootDatum, t: &[i64]| dat.to_dynkin_labels(&dat.weight(t.to_vec()).unwrap()).unwrap().labels;
        assert_eq!(lab(&b2, &[2, 0]), vec![1, 0]);
        assert_eq!(lab(&b2, &[1, 1]), vec![0, 1]);
        let d3 = root_datum(LieType::D, 3).unwrap();
        assert_eq!(lab(&d3, &[1, 1, 1]), vec![0, 0, 1]);
        assert_eq!(lab(&d3, &[1, 1, -1]), vec![0, 1, 0]);
    }

    #[test]
    fn positive_root_counts() {
        let b2 = root_datum(LieType::B, 2).unwrap();
        let mut r = b2.positive_roots();
        r.sort();
        assert_eq!(r, vec![vec![0, 1], vec![1, -1], vec![1, 0], vec![1, 1]]);
        assert_eq!(root_datum(LieType::A, 1).unwrap().positive_roots().len(), 1);
        assert_eq!(root_datum(LieType::D, 3).unwrap().positive_roots().len(), 6);
        for n in 1..=4 {
            assert_eq!(root_datum(LieType::B, n).unwrap().positive_roots().len(), n * n);
            assert_eq!(root_datum(LieType::C, n).unwrap().positive_roots().len(), n * n);
            assert_eq!(root_datum(LieType::A, n).unwrap().positive_roots().len(), n * (n + 1) / 2);
        }
        for n in 2..=5 {
            assert_eq!(root_datum(LieType::D, n).unwrap().positive_roots().len(), n * (n - 1));
        }
    }

    #[test]
    fn weyl_dimension_examples() {
        assert_eq!(dim(LieType::B, 2, &[2, 0]), 5);
        assert_eq!(dim(LieType::B, 2, &[0, 0]), 1);
        assert_eq!(dim(LieType::C, 2, &[2, 2]), 5);
        assert_eq!(dim(LieType::C, 2, &[2, 0]), 4);
        assert_eq!(dim(LieType::B, 2, &[1, 1]), 4);
        // adjoint representations
        assert_eq!(dim(LieType::B, 3, &[2, 2, 0]), 21);
        assert_eq!(dim(LieType::D, 4, &[2, 2, 0, 0]), 28);
        assert_eq!(dim(LieType::C, 3, &[4, 0, 0]), 21);
        assert_eq!(dim(LieType::A, 2, &[2, 0, 0]), 3);
    }

    #[test]
    fn branch_target_keeps_ambient_symmetrizers() {
        let c2 = root_datum(LieType::C, 2).unwrap();
        let c1 = c2.branch_target().unwrap();
        assert_eq!(c1.d, vec![2]);
        assert_eq!(c1.cartan, vec![vec![2]]);
        let d3 = root_datum(LieType::D, 3).unwrap();
        let d2 = d3.branch_target().unwrap();
        assert_eq!(d2.cartan, vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(d2.simple_roots, vec![vec![1, -1], vec![1, 1]]);
        assert!(d2.branch_target().is_none());
        let b3 = root_datum(LieType::B, 3).unwrap();
        assert_eq!(b3.branch_target().unwrap(), root_datum(LieType::B, 2).unwrap());
    }

    #[test]
    fn rejects_non_dominant() {
        let b2 = root_datum(LieType::B, 2).unwrap();
        assert!(b2.weight(vec![0, 2]).is_err());
        assert!(b2.weight(vec![2, 1]).is_err());
        let c2 = root_datum(LieType::C, 2).unwrap();
        assert!(c2.weight(vec![1, 1]).is_err());
        let d3 = root_datum(LieType::D, 3).unwrap();
        assert!(d3.weight(vec![2, 0, -2]).is_err());
        assert!(d3.weight(vec![2, 2, -2]).is_ok());
    }
}
