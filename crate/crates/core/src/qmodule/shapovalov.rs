use std::cell::RefCell;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::laurent_rank;
use crate::rootdata::RootDatum;
use crate::scalar::Scalar;

/// `F_{i_k} ⋯ F_{i_1} v_λ` for `seq = (i_1, …, i_k)`: the first entry acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FMonomial {
    pub seq: Vec<usize>,
}

impl FMonomial {
    pub fn new(seq: Vec<usize>) -> Self {
        FMonomial { seq }
    }
}

/// α-multiplicities of a label sequence.
pub fn weight_of(rank: usize, seq: &[usize]) -> Vec<i64> {
    let mut beta = vec![0i64; rank];
    for &i in seq {
        beta[i - 1] += 1;
    }
    beta
}

/// seq(β): every label sequence with multiplicities β, in lexicographic order.
pub fn seq_of(beta: &[i64]) -> Vec<Vec<usize>> {
    fn go(left: &mut [i64], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i + 1);
                go(left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut beta.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// ⟨α_i^∨, λ − Σ_{a ∈ prefix} α_a⟩.
fn coroot_value(dat: &RootDatum, labels: &[i64], i: usize, prefix: &[usize]) -> i64 {
    labels[i - 1] - prefix.iter().map(|&a| dat.c(i, a)).sum::<i64>()
}

/// `E_i m` as a combination of monomials one shorter.
pub fn e_action<C: Scalar>(
    dat: &RootDatum,
    labels: &[i64],
    i: usize,
    m: &FMonomial,
) -> Vec<(FMonomial, LaurentPoly<C>)> {
    let mut out: Vec<(FMonomial, LaurentPoly<C>)> = Vec::new();
    for (p, &a) in m.seq.iter().enumerate() {
        if a != i {
            continue;
        }
        let coeff = LaurentPoly::quantum_int(coroot_value(dat, labels, i, &m.seq[..p]), dat.d_of(i));
        if coeff.is_zero() {
            continue;
        }
        let mut rest = m.seq.clone();
        rest.remove(p);
        let rest = FMonomial::new(rest);
        match out.iter_mut().find(|(x, _)| *x == rest) {
            Some((_, c)) => *c += &coeff,
            None => out.push((rest, coeff)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// The q-Shapovalov form on V(λ), evaluated on monomials with memoization.
/// Not `Sync`: use one instance per thread.
pub struct Shapovalov<C: Scalar> {
    datum: RootDatum,
    labels: Vec<i64>,
    memo: RefCell<HashMap<(Vec<usize>, Vec<usize>), LaurentPoly<C>>>,
}

impl<C: Scalar> Shapovalov<C> {
    pub fn new(datum: &RootDatum, labels: &[i64]) -> Self {
        Shapovalov { datum: datum.clone(), labels: labels.to_vec(), memo: RefCell::new(HashMap::new()) }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// ⟨a v_λ, b v_λ⟩, peeling the outermost F off `a` through
    /// φ(F_i) = q_i^{-1} K_{d_i α_i} E_i.
    pub fn pair(&self, a: &[usize], b: &[usize]) -> LaurentPoly<C> {
        if a.len() != b.len() {
            return LaurentPoly::zero();
        }
        if a.is_empty() {
            return LaurentPoly::one();
        }
        let n = self.datum.rank;
        if weight_of(n, a) != weight_of(n, b) {
            return LaurentPoly::zero();
        }
        let key = (a.to_vec(), b.to_vec());
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let k = a.len();
        let i = a[k - 1];
        let prefix = &a[..k - 1];
        let shift = self.datum.d_of(i) * (coroot_value(&self.datum, &self.labels, i, prefix) - 1);
        let mut acc = LaurentPoly::zero();
        for (m, c) in e_action::<C>(&self.datum, &self.labels, i, &FMonomial::new(b.to_vec())) {
            let inner = self.pair(prefix, &m.seq);
            if !inner.is_zero() {
                acc += &(&c * &inner);
            }
        }
        let v = acc.shift(shift);
        self.memo.borrow_mut().insert(key, v.clone());
        v
    }

    /// ⟨a, Σ c_m m⟩ (linear in the second slot).
    pub fn pair_combination(&self, a: &[usize], b: &[(Vec<usize>, LaurentPoly<C>)]) -> LaurentPoly<C> {
        let mut acc = LaurentPoly::zero();
        for (m, c) in b {
            let v = self.pair(a, m);
            if !v.is_zero() {
                acc += &(c * &v);
            }
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GramBlock<C: Scalar> {
    pub labels: Vec<i64>,
    pub beta: Vec<i64>,
    pub basis: Vec<FMonomial>,
    pub gram: Vec<Vec<LaurentPoly<C>>>,
}

pub fn gram_block<C: Scalar>(form: &Shapovalov<C>, beta: &[i64]) -> GramBlock<C> {
    let basis = seq_of(beta);
    let gram = basis.iter().map(|a| basis.iter().map(|b| form.pair(a, b)).collect()).collect();
    GramBlock {
        labels: form.labels.clone(),
        beta: beta.to_vec(),
        basis: basis.into_iter().map(FMonomial::new).collect(),
        gram,
    }
}

/// dim V(λ)_{λ−β}, as the rank over Q(q) of the Gram matrix on seq(β).
pub fn weight_space_dim<C: Scalar>(form: &Shapovalov<C>, beta: &[i64]) -> usize {
    if beta.iter().any(|&x| x < 0) {
        return 0;
    }
    laurent_rank(&gram_block(form, beta).gram)
}

/// Checks that the Serre element Σ_a (−1)^a F_i^{(a)} F_j F_i^{(b)}, applied
/// to v_λ and to every monomial of length ≤ 2, pairs to zero with every
/// monomial of its weight. The element is scaled by [1 − c_ij]_i! to stay
/// inside the Laurent ring.
pub fn serre_radical_check<C: Scalar>(form: &Shapovalov<C>, i: usize, j: usize) -> Result<bool> {
    let dat = &form.datum;
    let n = dat.rank;
    if i == j || !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::Index(format!("Serre pair ({i}, {j}) in rank {n}")));
    }
    let big_n = 1 - dat.c(i, j);
    let di = dat.d_of(i);
    let mut starts: Vec<Vec<usize>> = vec![vec![]];
    for x in 1..=n {
        starts.push(vec![x]);
        for y in 1..=n {
            starts.push(vec![x, y]);
        }
    }
    for m in starts {
        let mut elem: Vec<(Vec<usize>, LaurentPoly<C>)> = Vec::new();
        for a in 0..=big_n {
            let b = big_n - a;
            let mut s = m.clone();
            s.extend(std::iter::repeat(i).take(b as usize));
            s.push(j);
            s.extend(std::iter::repeat(i).take(a as usize));
            let c = LaurentPoly::quantum_binomial(big_n, a, di);
            elem.push((s, if a % 2 == 0 { c } else { -c }));
        }
        let beta = weight_of(n, &elem[0].0);
        for x in seq_of(&beta) {
            if !form.pair_combination(&x, &elem).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
