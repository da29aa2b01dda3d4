//! Branching combinatorics: interlacing pairs τ(λ), complete Gelfand-Tsetlin
//! patterns, and the lattice maps ξ that encode one branching step.
//!
//! All rows are doubled integers, like [`WeightCoords`].

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{root_datum, LieType, RootDatum, WeightCoords};

/// An element (ν, μ) of τ(λ). `mu` is a weight of the rank-(n−1) algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InterlacingPair {
    pub nu: Vec<i64>,
    pub mu: Vec<i64>,
}

/// Rows λ^(1), ν^(1), λ^(2), ν^(2), … (B, C) or λ^(1), ν^(2), λ^(2), …, ν^(n), λ^(n) (D).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CompletePattern {
    pub lie_type: LieType,
    pub rank: usize,
    pub rows: Vec<Vec<i64>>,
}

/// ξ_{−t,+i} (with ξ_{−1}^c in front for type C).
///
/// Sequences are kept in the order the type's admissibility definition asks
/// for: B and C store `minus` weakly increasing and `plus` weakly decreasing;
/// D applies ξ_+ first and stores `plus` weakly increasing and `minus`
/// weakly decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeMap {
    pub minus: Vec<usize>,
    pub plus: Vec<usize>,
    pub c: usize,
}

impl LatticeMap {
    /// Number of strands labelled 1 in the corresponding special idempotent
    /// (for C this counts the ξ_{−1} steps too).
    pub fn k(&self) -> usize {
        self.minus.len() + self.plus.len() + self.c
    }
}

fn step2(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    debug_assert!(hi < lo || (hi - lo) % 2 == 0);
    (0..).map(move |k| lo + 2 * k).take_while(move |&x| x <= hi)
}

/// Lower and upper bounds for each entry of ν (given λ), then of μ (given ν).
fn nu_bounds(lt: LieType, lam: &[i64]) -> Vec<(i64, i64)> {
    let n = lam.len();
    match lt {
        LieType::B | LieType::C => (0..n)
            .map(|j| {
                if j + 1 < n {
                    (lam[j + 1], lam[j])
                } else if lt == LieType::B {
                    (-lam[j], lam[j])
                } else {
                    (0, lam[j])
                }
            })
            .collect(),
        LieType::D => {
            (0..n - 1).map(|k| if k + 2 < n { (lam[k + 1], lam[k]) } else { (lam[n - 1].abs(), lam[n - 2]) }).collect()
        }
        LieType::A => unreachable!("type A has no branching data here"),
    }
}

fn mu_bounds(lt: LieType, nu: &[i64]) -> Vec<(i64, i64)> {
    match lt {
        LieType::B | LieType::C => {
            let n = nu.len();
            (0..n.saturating_sub(1))
                .map(|k| if k + 2 < n { (nu[k + 1], nu[k]) } else { (nu[n - 1].abs(), nu[n - 2]) })
                .collect()
        }
        LieType::D => {
            let m = nu.len();
            (0..m).map(|k| if k + 1 < m { (nu[k + 1], nu[k]) } else { (-nu[m - 1], nu[m - 1]) }).collect()
        }
        LieType::A => unreachable!(),
    }
}

fn product(bounds: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &(lo, hi) in bounds {
        let mut next = Vec::new();
        for prefix in &out {
            for x in step2(lo, hi) {
                let mut v = prefix.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn check_type(lt: LieType) -> Result<()> {
    if lt == LieType::A {
        Err(Error::Unsupported(lt, 0))
    } else {
        Ok(())
    }
}

/// τ(λ) for a raw doubled row `lam` of a type-`lt` weight (rank = `lam.len()`).
/// D requires `lam.len() ≥ 2`.
pub fn tau_raw(lt: LieType, lam: &[i64]) -> Vec<InterlacingPair> {
    let mut out = Vec::new();
    for nu in product(&nu_bounds(lt, lam)) {
        for mu in product(&mu_bounds(lt, &nu)) {
            out.push(InterlacingPair { nu: nu.clone(), mu });
        }
    }
    out.sort_by(|a, b| a.nu.iter().chain(&a.mu).cmp(b.nu.iter().chain(&b.mu)));
    out
}

pub fn enumerate_tau(w: &WeightCoords) -> Result<Vec<InterlacingPair>> {
    check_type(w.lie_type)?;
    root_datum(w.lie_type, w.rank)?.check_dominant(w)?;
    Ok(tau_raw(w.lie_type, &w.twice_coords))
}

/// Membership test written directly from the inequalities (independent of
/// the bounds used by the enumerator).
pub fn in_tau(lt: LieType, lam: &[i64], p: &InterlacingPair) -> bool {
    let n = lam.len();
    let (nu, mu) = (&p.nu, &p.mu);
    let same_class = |x: i64| match lt {
        LieType::C => x % 2 == 0,
        _ => (x - lam[0]).rem_euclid(2) == 0,
    };
    if !nu.iter().chain(mu).all(|&x| same_class(x)) {
        return false;
    }
    match lt {
        LieType::B | LieType::C => {
            if nu.len() != n || mu.len() != n - 1 {
                return false;
            }
            // λ_1 ≥ ν_1 ≥ λ_2 ≥ ν_2 ≥ … ≥ λ_n ≥ ν_n ≥ −λ_n (or 0 for C)
            let mut chain = Vec::new();
            for j in 0..n {
                chain.push(lam[j]);
                chain.push(nu[j]);
            }
            let floor = if lt == LieType::B { -lam[n - 1] } else { 0 };
            chain.push(floor);
            if !chain.windows(2).all(|w| w[0] >= w[1]) {
                return false;
            }
            // ν_1 ≥ μ_2 ≥ ν_2 ≥ … ≥ μ_n ≥ ν_n ≥ −μ_n (or 0 for C)
            let mut chain = vec![nu[0]];
            for j in 0..n - 1 {
                chain.push(mu[j]);
                chain.push(nu[j + 1]);
            }
            let floor = if lt == LieType::B {
                if n >= 2 {
                    -mu[n - 2]
                } else {
                    i64::MIN
                }
            } else {
                0
            };
            chain.push(floor);
            chain.windows(2).all(|w| w[0] >= w[1])
        }
        LieType::D => {
            if n < 2 || nu.len() != n - 1 || mu.len() != n - 1 {
                return false;
            }
            // λ_1 ≥ ν_2 ≥ λ_2 ≥ … ≥ λ_{n−1} ≥ ν_n ≥ |λ_n|
            let mut chain = vec![lam[0]];
            for k in 0..n - 1 {
                chain.push(nu[k]);
                if k + 1 < n - 1 {
                    chain.push(lam[k + 1]);
                }
            }
            chain.push(lam[n - 1].abs());
            if !chain.windows(2).all(|w| w[0] >= w[1]) {
                return false;
            }
            // ν_2 ≥ μ_2 ≥ ν_3 ≥ … ≥ μ_{n−1} ≥ ν_n ≥ |μ_n|
            let mut chain = vec![nu[0]];
            for k in 0..n - 2 {
                chain.push(mu[k]);
                chain.push(nu[k + 1]);
            }
            chain.push(mu[n - 2].abs());
            chain.windows(2).all(|w| w[0] >= w[1])
        }
        LieType::A => false,
    }
}

/// Dimension of the rank-(n−1) irreducible with highest weight `mu`;
/// rank 0 and the torus left over from D_2 only have 1-dimensional irreducibles.
pub fn sub_weyl_dim(lt: LieType, rank: usize, mu: &[i64]) -> Result<BigInt> {
    if rank == 0 || (lt == LieType::D && rank == 1) {
        return Ok(BigInt::one());
    }
    let dat = root_datum(lt, rank)?;
    dat.weyl_dim(&dat.weight(mu.to_vec())?)
}

/// Dimensions serialize as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchDimCheck {
    #[serde(with = "decimal")]
    pub lhs: BigInt,
    #[serde(with = "decimal")]
    pub rhs: BigInt,
    #[serde(with = "decimal::seq")]
    pub summands: Vec<BigInt>,
    pub equal: bool,
}

mod decimal {
    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }

    pub mod seq {
        use super::*;
        use serde::Serialize;

        pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<String>::deserialize(d)?.iter().map(|x| x.parse().map_err(D::Error::custom)).collect()
        }
    }
}

/// dim V_λ against Σ over τ(λ) of dim V_μ.
pub fn branch_dim_check(w: &WeightCoords) -> Result<BranchDimCheck> {
    let dat = root_datum(w.lie_type, w.rank)?;
    let lhs = dat.weyl_dim(w)?;
    let mut summands = Vec::new();
    for p in enumerate_tau(w)? {
        summands.push(sub_weyl_dim(w.lie_type, w.rank - 1, &p.mu)?);
    }
    let rhs: BigInt = summands.iter().sum();
    Ok(BranchDimCheck { equal: lhs == rhs, lhs, rhs, summands })
}

fn patterns_raw(lt: LieType, lam: &[i64]) -> Vec<Vec<Vec<i64>>> {
    let terminal = match lt {
        LieType::D => lam.len() == 1,
        _ => lam.is_empty(),
    };
    if terminal {
        return vec![if lam.is_empty() { vec![] } else { vec![lam.to_vec()] }];
    }
    let mut out = Vec::new();
    for p in tau_raw(lt, lam) {
        for sub in patterns_raw(lt, &p.mu) {
            let mut rows = vec![lam.to_vec(), p.nu.clone()];
            rows.extend(sub);
            out.push(rows);
        }
    }
    out
}

pub fn enumerate_complete_patterns(w: &WeightCoords) -> Result<Vec<CompletePattern>> {
    check_type(w.lie_type)?;
    root_datum(w.lie_type, w.rank)?.check_dominant(w)?;
    Ok(patterns_raw(w.lie_type, &w.twice_coords)
        .into_iter()
        .map(|rows| CompletePattern { lie_type: w.lie_type, rank: w.rank, rows })
        .collect())
}

impl CompletePattern {
    /// The branching steps (λ^(k), ν, λ^(k+1)) of the pattern, outermost first.
    pub fn steps(&self) -> Vec<(Vec<i64>, InterlacingPair)> {
        let r = &self.rows;
        let mut out = Vec::new();
        let mut k = 0;
        match self.lie_type {
            LieType::D => {
                while k + 2 < r.len() {
                    out.push((r[k].clone(), InterlacingPair { nu: r[k + 1].clone(), mu: r[k + 2].clone() }));
                    k += 2;
                }
            }
            _ => {
                while k + 1 < r.len() {
                    let mu = if k + 2 < r.len() { r[k + 2].clone() } else { Vec::new() };
                    out.push((r[k].clone(), InterlacingPair { nu: r[k + 1].clone(), mu }));
                    k += 2;
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        let n = self.rank;
        let expected_rows = match self.lie_type {
            LieType::D => 2 * n - 1,
            _ => 2 * n,
        };
        if self.rows.len() != expected_rows {
            return false;
        }
        let lengths_ok = self.rows.iter().enumerate().all(|(k, row)| {
            let want = match self.lie_type {
                LieType::D => n - (k + 1) / 2,
                _ => n - k / 2,
            };
            row.len() == want
        });
        lengths_ok && self.steps().iter().all(|(lam, p)| in_tau(self.lie_type, lam, p))
    }
}

fn weakly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

fn weakly_decreasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// Apply ξ to `lam`, returning the intermediate row ν together with μ.
/// Application is total on the lattice; index ranges are the caller's
/// responsibility (checked by [`is_admissible`]).
pub fn xi_pair(lt: LieType, m: &LatticeMap, lam: &[i64]) -> InterlacingPair {
    match lt {
        LieType::B => {
            let mut nu = lam.to_vec();
            for &t in &m.minus {
                nu[t - 1] -= 2;
            }
            let mut mu = nu[1..].to_vec();
            for &i in &m.plus {
                mu[i - 1] += 2;
            }
            InterlacingPair { nu, mu }
        }
        LieType::C => {
            let mut rest = lam[1..].to_vec();
            for &t in &m.minus {
                rest[t - 2] -= 2;
            }
            let mut nu = vec![lam[0] - 2 * m.c as i64];
            nu.extend(&rest);
            let mut mu = rest;
            for &i in &m.plus {
                mu[i - 1] += 2;
            }
            InterlacingPair { nu, mu }
        }
        LieType::D => {
            let mut nu = lam[1..].to_vec();
            for &i in &m.plus {
                nu[i - 1] += 2;
            }
            let mut mu = nu.clone();
            for &t in &m.minus {
                mu[t - 2] -= 2;
            }
            InterlacingPair { nu, mu }
        }
        LieType::A => unreachable!(),
    }
}

/// ξ(λ) as a rank-(n−1) row.
pub fn xi_apply(lt: LieType, m: &LatticeMap, lam: &[i64]) -> Vec<i64> {
    xi_pair(lt, m, lam).mu
}

fn ranges_ok(lt: LieType, n: usize, m: &LatticeMap) -> bool {
    let plus_ok = m.plus.iter().all(|&i| (1..n).contains(&i));
    let minus_lo = if lt == LieType::B { 1 } else { 2 };
    let minus_ok = m.minus.iter().all(|&t| (minus_lo..=n).contains(&t));
    let c_ok = lt == LieType::C || m.c == 0;
    plus_ok && minus_ok && c_ok
}

pub fn is_admissible(lt: LieType, m: &LatticeMap, lam: &[i64]) -> bool {
    let n = lam.len();
    if lt == LieType::A || !ranges_ok(lt, n, m) {
        return false;
    }
    let order_ok = match lt {
        LieType::D => weakly_increasing(&m.plus) && weakly_decreasing(&m.minus),
        _ => weakly_increasing(&m.minus) && weakly_decreasing(&m.plus),
    };
    order_ok && in_tau(lt, lam, &xi_pair(lt, m, lam))
}

/// The unique admissible map realizing a pair of τ(λ).
pub fn tau_to_map(lt: LieType, p: &InterlacingPair, lam: &[i64]) -> Result<LatticeMap> {
    if !in_tau(lt, lam, p) {
        return Err(Error::NotInTau(format!("{p:?}")));
    }
    let n = lam.len();
    let reps = |count: i64, idx: usize| std::iter::repeat(idx).take((count / 2) as usize);
    let mut m = LatticeMap::default();
    match lt {
        LieType::B => {
            for j in 0..n {
                m.minus.extend(reps(lam[j] - p.nu[j], j + 1));
            }
            for j in (1..n).rev() {
                m.plus.extend(reps(p.mu[j - 1] - p.nu[j], j));
            }
        }
        LieType::C => {
            m.c = ((lam[0] - p.nu[0]) / 2) as usize;
            for j in 1..n {
                m.minus.extend(reps(lam[j] - p.nu[j], j + 1));
            }
            for j in (1..n).rev() {
                m.plus.extend(reps(p.mu[j - 1] - p.nu[j], j));
            }
        }
        LieType::D => {
            for k in 0..n - 1 {
                m.plus.extend(reps(p.nu[k] - lam[k + 1], k + 1));
            }
            for k in (0..n - 1).rev() {
                m.minus.extend(reps(p.nu[k] - p.mu[k], k + 2));
            }
        }
        LieType::A => return Err(Error::Unsupported(lt, n)),
    }
    Ok(m)
}

pub fn map_to_tau(lt: LieType, m: &LatticeMap, lam: &[i64]) -> Result<InterlacingPair> {
    if !is_admissible(lt, m, lam) {
        return Err(Error::NotAdmissible(format!("{m:?}")));
    }
    Ok(xi_pair(lt, m, lam))
}

/// Every admissible map for λ, in the order of τ(λ).
pub fn admissible_maps(lt: LieType, lam: &[i64]) -> Vec<LatticeMap> {
    tau_raw(lt, lam).iter().map(|p| tau_to_map(lt, p, lam).expect("enumerated pair lies in tau")).collect()
}

/// Convenience: the rank-(n−1) datum a pair's μ belongs to, when it is one.
pub fn target_datum(dat: &RootDatum) -> Option<RootDatum> {
    dat.branch_target()
}
