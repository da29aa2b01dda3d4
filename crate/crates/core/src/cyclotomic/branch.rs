//! Branching checks: dimensions, restricted weights, block surjections, and
//! the rank of the idempotent Hom matrix against weight multiplicities.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::block::{cyclotomic_block, to_int_terms, value_at_one};
use super::special::map_word;
use crate::error::Result;
use crate::linalg::laurent_rank;
use crate::patterns::{admissible_maps, branch_dim_check, enumerate_tau, xi_apply, BranchDimCheck, LatticeMap};
use crate::qmodule::{default_depth_cap, seq_of, weight_space_dim, Shapovalov, WeightModule};
use crate::rootdata::{root_datum, DynkinLabels, LieType, RootDatum, WeightCoords};
use crate::{QPoly, Rational};

/// Weight multiplicities of V_λ with the first ε coordinate forgotten,
/// against the same for ⊕ over τ(λ) of the rank-(n−1) irreducibles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionCheck {
    pub weights: Vec<RestrictedWeight>,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedWeight {
    /// Doubled ε_2..ε_n coordinates.
    pub weight: Vec<i64>,
    /// Multiplicity in V_λ.
    pub module: usize,
    /// Multiplicity in the sum over τ(λ).
    pub sum: usize,
}

/// One map ξ and one sub-weight ν′: e(p_ξ ·) R^{λ−c} e(p_ξ ·) over ν′
/// against R^{ξ(λ)}(ν′) of the rank-(n−1) algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurjectionCase {
    pub map: LatticeMap,
    pub p: Vec<u8>,
    /// ν′ in the simple roots of the rank-(n−1) algebra.
    pub nu: Vec<i64>,
    pub source_dim: i64,
    pub target_dim: i64,
    pub ok: bool,
}

/// Σ_ξ dim R^{ξ(λ)}(ν′) over the maps whose block lands in R^{λ−c}(β).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurjectionSum {
    pub c: usize,
    pub beta: Vec<i64>,
    pub source_dim: i64,
    pub target_sum: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchReport {
    pub lie_type: LieType,
    pub rank: usize,
    pub lambda_bar: Vec<i64>,
    pub dims: BranchDimCheck,
    pub restriction: RestrictionCheck,
    pub surjections: Vec<SurjectionCase>,
    pub sums: Vec<SurjectionSum>,
    pub ok: bool,
}

fn module_weights(dat: &RootDatum, twice: &[i64]) -> Result<Vec<(Vec<i64>, usize)>> {
    let labels =
        dat.to_dynkin_labels(&WeightCoords { lie_type: dat.lie_type, rank: dat.rank, twice_coords: twice.to_vec() })?;
    let m = WeightModule::new(
        dat,
        &labels.labels,
        Rational::from_integer(2.into()),
        default_depth_cap(dat, &labels.labels),
    )?;
    Ok(m.weights()
        .into_iter()
        .map(|(beta, d)| {
            let eps = dat.root_to_eps(&beta);
            (twice.iter().zip(&eps).map(|(l, e)| l - 2 * e).collect(), d)
        })
        .collect())
}

/// The per-restricted-weight form of the branching rule.
pub fn restriction_check(w: &WeightCoords) -> Result<RestrictionCheck> {
    let dat = root_datum(w.lie_type, w.rank)?;
    let mut weights: BTreeMap<Vec<i64>, (usize, usize)> = BTreeMap::new();
    for (wt, d) in module_weights(&dat, &w.twice_coords)? {
        weights.entry(wt[1..].to_vec()).or_default().0 += d;
    }
    let sub = dat.branch_target();
    for p in enumerate_tau(w)? {
        match &sub {
            Some(s) => {
                for (wt, d) in module_weights(s, &p.mu)? {
                    weights.entry(wt).or_default().1 += d;
                }
            }
            // rank 0, or the torus left from D_2: one-dimensional, weight μ
            None => weights.entry(p.mu.clone()).or_default().1 += 1,
        }
    }
    let equal = weights.values().all(|(a, b)| a == b);
    let weights = weights.into_iter().map(|(weight, (module, sum))| RestrictedWeight { weight, module, sum }).collect();
    Ok(RestrictionCheck { weights, equal })
}

fn nonneg_vectors(n: usize, max_height: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=max_height - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn block_dim_on(dat: &RootDatum, labels: &[i64], beta: &[i64], prefix: &[u8]) -> Result<i64> {
    let b = cyclotomic_block(dat, labels, beta)?;
    Ok(b.pairs
        .iter()
        .filter(|p| p.top.starts_with(prefix) && p.bottom.starts_with(prefix))
        .map(|p| value_at_one(&p.gdim))
        .sum())
}

/// Branching checks for V_λ: (a) dimensions, (b) restricted weights, and
/// (c) for every admissible ξ with at most two strands labelled 1 and every
/// sub-weight ν′ with |p_ξ| + ht ν′ ≤ `max_strands`, the block of R^{λ−c}
/// cut out by e(p_ξ ·) is at least as large as R^{ξ(λ)}(ν′), and summed over
/// ξ these targets fit inside R^{λ−c}(β).
pub fn verify_branch(lt: LieType, n: usize, labels: &[i64], max_strands: usize) -> Result<BranchReport> {
    let dat = root_datum(lt, n)?;
    let w = dat.from_dynkin_labels(&DynkinLabels { labels: labels.to_vec() })?;
    let dims = branch_dim_check(&w)?;
    let restriction = restriction_check(&w)?;

    let mut surjections = Vec::new();
    let mut sums: BTreeMap<(usize, Vec<i64>), i64> = BTreeMap::new();
    if let Some(sub) = dat.branch_target() {
        for m in admissible_maps(lt, &w.twice_coords) {
            if m.k() > 2 {
                continue;
            }
            let p = map_word(lt, n, &m)?;
            if p.len() > max_strands {
                continue;
            }
            let mut src = labels.to_vec();
            src[0] -= m.c as i64;
            let mu = xi_apply(lt, &m, &w.twice_coords);
            let tgt = sub.to_dynkin_labels(&WeightCoords { lie_type: lt, rank: n - 1, twice_coords: mu })?.labels;
            for nu in nonneg_vectors(n - 1, (max_strands - p.len()) as i64) {
                let mut beta = vec![0; n];
                for &l in &p {
                    beta[l as usize - 1] += 1;
                }
                for (a, x) in nu.iter().enumerate() {
                    beta[a + 1] += x;
                }
                let source_dim = block_dim_on(&dat, &src, &beta, &p)?;
                let target_dim = cyclotomic_block(&sub, &tgt, &nu)?.dim();
                *sums.entry((m.c, beta)).or_default() += target_dim;
                surjections.push(SurjectionCase {
                    map: m.clone(),
                    p: p.clone(),
                    nu,
                    source_dim,
                    target_dim,
                    ok: source_dim >= target_dim,
                });
            }
        }
    }
    let mut sum_rows = Vec::new();
    for ((c, beta), target_sum) in sums {
        let mut src = labels.to_vec();
        src[0] -= c as i64;
        let source_dim = cyclotomic_block(&dat, &src, &beta)?.dim();
        sum_rows.push(SurjectionSum { c, beta, source_dim, target_sum, ok: source_dim >= target_sum });
    }
    let ok = dims.equal && restriction.equal && surjections.iter().all(|s| s.ok) && sum_rows.iter().all(|s| s.ok);
    Ok(BranchReport {
        lie_type: lt,
        rank: n,
        lambda_bar: labels.to_vec(),
        dims,
        restriction,
        surjections,
        sums: sum_rows,
        ok,
    })
}

/// One weight β of the K_0 check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub beta: Vec<i64>,
    /// Rank over Q(q) of the matrix gdim e(j′) R^λ e(j), j, j′ ∈ Seq(β).
    pub hom_rank: usize,
    pub weight_space_dim: usize,
    pub gdim: Vec<(i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub lie_type: LieType,
    pub rank: usize,
    pub lambda_bar: Vec<i64>,
    pub cap: usize,
    pub rows: Vec<ConjectureRow>,
    /// Every nonzero weight space of V_λ has height ≤ cap.
    pub covers_module: bool,
    pub ok: bool,
}

/// For every β of height ≤ `cap`, the number of indecomposable projective
/// classes of R^λ(β), read off as the rank of its idempotent Hom matrix,
/// equals dim V(λ)_{λ−β}.
pub fn verify_cyclotomic_conjecture(lt: LieType, n: usize, labels: &[i64], cap: usize) -> Result<ConjectureReport> {
    let dat = root_datum(lt, n)?;
    dat.from_dynkin_labels(&DynkinLabels { labels: labels.to_vec() })?;
    let form = Shapovalov::<Rational>::new(&dat, labels);
    let module = WeightModule::new(&dat, labels, Rational::from_integer(2.into()), default_depth_cap(&dat, labels))?;
    let covers_module = module.weights().iter().all(|(b, _)| b.iter().sum::<i64>() as usize <= cap);
    let mut rows = Vec::new();
    for beta in nonneg_vectors(n, cap as i64) {
        let block = cyclotomic_block(&dat, labels, &beta)?;
        let seqs: Vec<Vec<u8>> = seq_of(&beta).into_iter().map(|s| s.into_iter().map(|x| x as u8).collect()).collect();
        let matrix: Vec<Vec<QPoly>> = seqs
            .iter()
            .map(|t| {
                seqs.iter().map(|b| block.pair(t, b).map(|p| p.gdim.clone()).unwrap_or_else(QPoly::zero)).collect()
            })
            .collect();
        rows.push(ConjectureRow {
            hom_rank: laurent_rank(&matrix),
            weight_space_dim: weight_space_dim(&form, &beta),
            gdim: to_int_terms(&block.gdim()),
            beta,
        });
    }
    let ok = rows.iter().all(|r| r.hom_rank == r.weight_space_dim);
    Ok(ConjectureReport { lie_type: lt, rank: n, lambda_bar: labels.to_vec(), cap, rows, covers_module, ok })
}
