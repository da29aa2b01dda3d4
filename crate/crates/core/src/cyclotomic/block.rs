//! Graded pieces e(j′) R^λ(β) e(j) of the cyclotomic quotient.
//!
//! The ideal is spanned by ψ_{w1} x_1^{λ̄_{i_1}} e(i) ψ_{w2} x^b. In a fixed
//! block and degree D it is therefore the span of the products
//! ψ_{w1} x_1^{λ̄_{i_1}} e(i) ψ_{w2} of degree D together with I_{D−2d_r} x_r,
//! and right multiplication by x_r only raises a dot exponent of a symbol.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::klr::{crossing_degree, dot_vectors, perm, KlrAlgebra, KlrElement, Symbol};
use crate::linalg::{EchelonBasis, SparseRow};
use crate::qmodule::seq_of;
use crate::rootdata::RootDatum;
use crate::{QPoly, Rational};

/// One block e(top) R^λ e(bottom).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairBlock {
    pub top: Vec<u8>,
    pub bottom: Vec<u8>,
    pub gdim: QPoly,
    /// Symbols whose images form a basis, by degree.
    pub basis: BTreeMap<i64, Vec<Symbol>>,
}

/// All of R^λ(β), block by block.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CyclotomicBlock {
    pub labels: Vec<i64>,
    pub beta: Vec<i64>,
    pub pairs: Vec<PairBlock>,
}

/// Serializable summary of a block, coefficients as `[exp, coeff]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub lambda_bar: Vec<i64>,
    pub beta: Vec<i64>,
    pub gdim: Vec<(i64, i64)>,
    pub dim: i64,
    pub frobenius_shift: Option<i64>,
}

pub(crate) fn to_int_terms(p: &QPoly) -> Vec<(i64, i64)> {
    p.terms().map(|(e, c)| (e, i64::try_from(c.to_integer()).expect("dimension overflow"))).collect()
}

pub(crate) fn value_at_one(p: &QPoly) -> i64 {
    to_int_terms(p).iter().map(|t| t.1).sum()
}

impl CyclotomicBlock {
    pub fn gdim(&self) -> QPoly {
        self.pairs.iter().fold(QPoly::zero(), |acc, p| acc + p.gdim.clone())
    }

    pub fn dim(&self) -> i64 {
        value_at_one(&self.gdim())
    }

    pub fn pair(&self, top: &[u8], bottom: &[u8]) -> Option<&PairBlock> {
        self.pairs.iter().find(|p| p.top == top && p.bottom == bottom)
    }

    pub fn report(&self) -> BlockReport {
        let g = self.gdim();
        BlockReport {
            lambda_bar: self.labels.clone(),
            beta: self.beta.clone(),
            gdim: to_int_terms(&g),
            dim: value_at_one(&g),
            frobenius_shift: g.min_exp().zip(g.max_exp()).map(|(a, b)| a + b),
        }
    }
}

fn weight_of_labels(n: usize, labels: &[u8]) -> Vec<i64> {
    let mut b = vec![0; n];
    for &l in labels {
        b[l as usize - 1] += 1;
    }
    b
}

/// Degree of the Frobenius trace, 2(λ, β) − (β, β).
pub fn frobenius_degree(dat: &RootDatum, labels: &[i64], beta: &[i64]) -> i64 {
    2 * dat.weight_root_pairing(labels, beta) - dat.root_pairing(beta, beta)
}

struct Level {
    cols: Vec<Symbol>,
    index: HashMap<Symbol, usize>,
    ideal: EchelonBasis<Rational>,
}

impl Level {
    fn full(&self) -> bool {
        self.ideal.rank() == self.cols.len()
    }

    fn insert(&mut self, terms: impl IntoIterator<Item = (Symbol, i64)>) {
        if self.full() {
            return;
        }
        let mut row = SparseRow::new();
        for (s, c) in terms {
            let j = *self.index.get(&s).expect("term outside its block and degree");
            row.insert(j, Rational::from_integer(c.into()));
        }
        self.ideal.insert(row);
    }
}

fn check_labels(dat: &RootDatum, labels: &[i64], seqs: &[&[u8]]) -> Result<()> {
    if labels.len() != dat.rank {
        return Err(Error::WrongLength { expected: dat.rank, got: labels.len() });
    }
    if labels.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(labels.to_vec()));
    }
    for s in seqs {
        if s.iter().any(|&l| l == 0 || l as usize > dat.rank) {
            return Err(Error::Index(format!("labels {s:?} outside 1..={}", dat.rank)));
        }
    }
    Ok(())
}

/// e(top) R^λ e(bottom) as a quotient of the free block, kept degree by
/// degree so that elements can be reduced to their normal form.
///
/// Within a degree, symbols are ordered with longer permutations and dots
/// further left first, so elimination prefers to keep symbols like
/// x_k^a e(i) in the basis.
pub struct PairQuotient {
    datum: RootDatum,
    top: Vec<u8>,
    bottom: Vec<u8>,
    levels: BTreeMap<i64, Level>,
}

fn column_key(s: &Symbol) -> (std::cmp::Reverse<usize>, std::cmp::Reverse<Vec<u32>>, Vec<u8>) {
    (std::cmp::Reverse(perm::length(&s.perm)), std::cmp::Reverse(s.dots.clone()), s.perm.clone())
}

impl PairQuotient {
    pub fn new(alg: &KlrAlgebra, labels: &[i64], top: &[u8], bottom: &[u8]) -> Result<Self> {
        let dat = alg.datum();
        check_labels(dat, labels, &[top, bottom])?;
        let mut out =
            PairQuotient { datum: dat.clone(), top: top.to_vec(), bottom: bottom.to_vec(), levels: BTreeMap::new() };
        let k = bottom.len();
        let beta = weight_of_labels(dat.rank, bottom);
        if top.len() != k || weight_of_labels(dat.rank, top) != beta {
            return Ok(out);
        }
        if k == 0 {
            let e = Symbol::idempotent(&[]);
            let index = HashMap::from([(e.clone(), 0)]);
            out.levels.insert(0, Level { cols: vec![e], index, ideal: EchelonBasis::new() });
            return Ok(out);
        }
        let lam = |i: u8| labels[i as usize - 1];
        if lam(top[0]) == 0 || lam(bottom[0]) == 0 {
            return Ok(out);
        }

        let perms: Vec<(Vec<u8>, i64)> = perm::all_perms(k)
            .into_iter()
            .filter(|w| perm::top_labels(w, bottom) == top)
            .map(|w| {
                let d = crossing_degree(dat, bottom, &w);
                (w, d)
            })
            .collect();
        let lo = perms.iter().map(|p| p.1).min().unwrap();
        let max_cross = perms.iter().map(|p| p.1).max().unwrap();
        let two_max_d = 2 * dat.max_d();
        let cap = frobenius_degree(dat, labels, &beta) - lo + two_max_d;

        // generators ψ_{w1} x_1^{λ̄} e(i) ψ_{w2} e(bottom), bucketed by degree
        let mut gens: BTreeMap<i64, Vec<(Symbol, Symbol)>> = BTreeMap::new();
        for seq in seq_of(&beta) {
            let i: Vec<u8> = seq.iter().map(|&x| x as u8).collect();
            let m = lam(i[0]) as u32;
            let mid = 2 * dat.d_of(i[0] as usize) * m as i64;
            let up: Vec<Vec<u8>> = perm::all_perms(k).into_iter().filter(|w| perm::top_labels(w, &i) == top).collect();
            let down: Vec<Vec<u8>> =
                perm::all_perms(k).into_iter().filter(|w| perm::top_labels(w, bottom) == i).collect();
            for w1 in &up {
                let d1 = crossing_degree(dat, &i, w1);
                for w2 in &down {
                    let deg = d1 + mid + crossing_degree(dat, bottom, w2);
                    let mut dots = vec![0; k];
                    dots[0] = m;
                    let a = Symbol { labels: i.clone(), perm: w1.clone(), dots };
                    let b = Symbol { labels: bottom.to_vec(), perm: w2.clone(), dots: vec![0; k] };
                    gens.entry(deg).or_default().push((a, b));
                }
            }
        }

        let mut zero_run = 0;
        let mut deg = lo;
        loop {
            let mut cols = Vec::new();
            for (w, cd) in &perms {
                for dots in dot_vectors(dat, bottom, deg - cd) {
                    cols.push(Symbol { labels: bottom.to_vec(), perm: w.clone(), dots });
                }
            }
            cols.sort_by_key(column_key);
            let index = cols.iter().cloned().enumerate().map(|(j, s)| (s, j)).collect();
            let mut level = Level { cols, index, ideal: EchelonBasis::new() };
            if !level.cols.is_empty() {
                for r in 0..k {
                    let below = deg - 2 * dat.d_of(bottom[r] as usize);
                    let Some(prev) = out.levels.get(&below) else { continue };
                    for row in prev.ideal.rows() {
                        if level.full() {
                            break;
                        }
                        let mut shifted = SparseRow::new();
                        for (&j, c) in row {
                            let mut s = prev.cols[j].clone();
                            s.dots[r] += 1;
                            shifted.insert(level.index[&s], c.clone());
                        }
                        level.ideal.insert(shifted);
                    }
                }
                for (a, b) in gens.get(&deg).map(Vec::as_slice).unwrap_or(&[]) {
                    if level.full() {
                        break;
                    }
                    level.insert(alg.mul_sym(a, b));
                }
            }
            if level.full() {
                zero_run += 1;
            } else {
                if deg > cap {
                    return Err(Error::CutoffExceeded { degree: deg, cutoff: cap });
                }
                zero_run = 0;
            }
            out.levels.insert(deg, level);
            // Past the crossing degrees every symbol carries a dot, so 2·max d
            // consecutive zero degrees force zero from then on.
            if deg >= max_cross && zero_run >= two_max_d {
                break;
            }
            deg += 1;
        }
        Ok(out)
    }

    /// Basis symbols of the quotient, by degree.
    pub fn basis(&self) -> BTreeMap<i64, Vec<Symbol>> {
        let mut out = BTreeMap::new();
        for (&d, level) in &self.levels {
            let pivots: std::collections::HashSet<usize> = level.ideal.pivots().collect();
            let free: Vec<Symbol> =
                level.cols.iter().enumerate().filter(|(j, _)| !pivots.contains(j)).map(|(_, s)| s.clone()).collect();
            if !free.is_empty() {
                out.insert(d, free);
            }
        }
        out
    }

    pub fn block(&self) -> PairBlock {
        let basis = self.basis();
        let mut gdim = QPoly::zero();
        for (&d, v) in &basis {
            gdim.add_term(d, Rational::from_integer(v.len().into()));
        }
        PairBlock { top: self.top.clone(), bottom: self.bottom.clone(), gdim, basis }
    }

    /// The image of `e` in the quotient, written in the basis symbols.
    /// Terms outside the block are dropped; degrees past the computed range
    /// vanish in the quotient.
    pub fn reduce(&self, e: &KlrElement<Rational>) -> KlrElement<Rational> {
        let mut rows: BTreeMap<i64, SparseRow<Rational>> = BTreeMap::new();
        for (s, c) in e.terms() {
            if s.labels != self.bottom || s.top_labels() != self.top {
                continue;
            }
            let d = s.degree(&self.datum);
            if let Some(level) = self.levels.get(&d) {
                rows.entry(d).or_default().insert(level.index[s], c.clone());
            }
        }
        let mut out = KlrElement::zero();
        for (d, row) in rows {
            let level = &self.levels[&d];
            for (j, c) in level.ideal.reduce(row) {
                out.add_term(level.cols[j].clone(), c);
            }
        }
        out
    }

    /// Whether the quotient block is zero.
    pub fn is_zero(&self) -> bool {
        self.levels.values().all(Level::full)
    }
}

/// e(top) R^λ e(bottom) with its graded dimension and a basis of symbols.
pub fn pair_block(alg: &KlrAlgebra, labels: &[i64], top: &[u8], bottom: &[u8]) -> Result<PairBlock> {
    Ok(PairQuotient::new(alg, labels, top, bottom)?.block())
}

fn pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match std::env::var("GTKLR_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        Some(n) if n > 0 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(p) => p.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

/// Every block e(j′) R^λ(β) e(j), j and j′ running over Seq(β). Blocks are
/// computed in parallel; `GTKLR_THREADS` caps the worker count.
pub fn cyclotomic_block(dat: &RootDatum, labels: &[i64], beta: &[i64]) -> Result<CyclotomicBlock> {
    if beta.len() != dat.rank {
        return Err(Error::WrongLength { expected: dat.rank, got: beta.len() });
    }
    if beta.iter().any(|&b| b < 0) {
        return Err(Error::Index(format!("negative root coordinate in {beta:?}")));
    }
    check_labels(dat, labels, &[])?;
    let seqs: Vec<Vec<u8>> = seq_of(beta).into_iter().map(|s| s.into_iter().map(|x| x as u8).collect()).collect();
    let jobs: Vec<(Vec<u8>, Vec<u8>)> =
        seqs.iter().flat_map(|t| seqs.iter().map(move |b| (t.clone(), b.clone()))).collect();
    let pairs = pool(|| {
        jobs.par_iter()
            .map_init(|| KlrAlgebra::new(dat), |alg, (t, b)| pair_block(alg, labels, t, b))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(CyclotomicBlock { labels: labels.to_vec(), beta: beta.to_vec(), pairs })
}

/// gdim e(j′) R^λ e(j).
pub fn graded_hom_dim(dat: &RootDatum, labels: &[i64], j: &[u8], jp: &[u8]) -> Result<QPoly> {
    Ok(pair_block(&KlrAlgebra::new(dat), labels, jp, j)?.gdim)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCheck {
    pub lambda_bar: Vec<i64>,
    pub beta: Vec<i64>,
    pub gdim: Vec<(i64, i64)>,
    /// 2(λ, β) − (β, β).
    pub expected_shift: i64,
    /// min + max exponent when the graded dimension is palindromic.
    pub palindromic_shift: Option<i64>,
    pub ok: bool,
}

/// gdim R^λ(β) is palindromic about 2(λ, β) − (β, β) (or zero).
pub fn frobenius_check(dat: &RootDatum, labels: &[i64], beta: &[i64]) -> Result<FrobeniusCheck> {
    let g = cyclotomic_block(dat, labels, beta)?.gdim();
    let expected = frobenius_degree(dat, labels, beta);
    let pal = g.palindromic_shift();
    Ok(FrobeniusCheck {
        lambda_bar: labels.to_vec(),
        beta: beta.to_vec(),
        gdim: to_int_terms(&g),
        expected_shift: expected,
        palindromic_shift: pal,
        ok: g.is_zero() || pal == Some(expected),
    })
}
