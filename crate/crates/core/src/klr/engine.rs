use std::cell::RefCell;
use std::collections::HashMap;

use super::perm;
use super::symbol::{KlrElement, Symbol};
use crate::error::{Error, Result};
use crate::rootdata::RootDatum;
use crate::scalar::Scalar;

/// Integer combination of symbols; every structure constant of the
/// rewriting is an integer.
pub(crate) type IElem = HashMap<Symbol, i64>;

/// A monomial in dots at the current level: (1-based position, exponent) pairs.
type Mono = Vec<(u8, u32)>;

fn add_scaled(acc: &mut IElem, other: &IElem, c: i64) {
    if c == 0 {
        return;
    }
    for (s, x) in other {
        let v = x.checked_mul(c).expect("KLR coefficient overflow");
        let e = acc.entry(s.clone()).or_insert(0);
        *e = e.checked_add(v).expect("KLR coefficient overflow");
        if *e == 0 {
            acc.remove(s);
        }
    }
}

fn single(s: Symbol) -> IElem {
    HashMap::from([(s, 1)])
}

/// One-step generators of a diagram word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    /// Crossing of positions r, r+1.
    Psi(u8),
    /// Dot on position r.
    X(u8),
}

/// Rewriting engine for R(β) of one root datum.
///
/// Relations, with labels (u, v) on positions (r, r+1) just below ψ_r:
/// ψ_r² = Q_{uv}(x_r, x_{r+1}) with Q_{uv}(a, b) = a^{−c_uv} + b^{−c_vu}
/// (1 if c_uv = 0, 0 if u = v); x_r ψ_r = ψ_r x_{r+1} + δ_uv and
/// x_{r+1} ψ_r = ψ_r x_r − δ_uv; for labels (i, k, i) with c_ik ≠ 0,
/// ψ_rψ_{r+1}ψ_r − ψ_{r+1}ψ_rψ_{r+1} = Σ_{s+t=−c_ik−1} x_r^s x_{r+2}^t,
/// and every other braid is exact.
///
/// Results are memoized, so an engine is not `Sync`; use one per thread.
pub struct KlrAlgebra {
    datum: RootDatum,
    psi_cache: RefCell<HashMap<(u8, Symbol), IElem>>,
    x_cache: RefCell<HashMap<(u8, Symbol), IElem>>,
    red_cache: RefCell<HashMap<(Vec<u8>, Symbol), IElem>>,
}

impl KlrAlgebra {
    pub fn new(datum: &RootDatum) -> Self {
        KlrAlgebra {
            datum: datum.clone(),
            psi_cache: RefCell::new(HashMap::new()),
            x_cache: RefCell::new(HashMap::new()),
            red_cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    fn c(&self, u: u8, v: u8) -> i64 {
        self.datum.c(u as usize, v as usize)
    }

    /// Q_{uv}(x_r, x_{r+1}) as monomials.
    fn q_poly(&self, u: u8, v: u8, r: u8) -> Vec<(Mono, i64)> {
        if u == v {
            return Vec::new();
        }
        let (cuv, cvu) = (self.c(u, v), self.c(v, u));
        if cuv == 0 {
            return vec![(Vec::new(), 1)];
        }
        vec![(vec![(r, (-cuv) as u32)], 1), (vec![(r + 1, (-cvu) as u32)], 1)]
    }

    fn check_labels(&self, labels: &[u8]) -> Result<()> {
        let n = self.datum.rank;
        if labels.iter().all(|&l| l >= 1 && l as usize <= n) {
            Ok(())
        } else {
            Err(Error::Index(format!("labels {labels:?} outside 1..={n}")))
        }
    }

    // ---- left multiplication by generators ----

    pub(crate) fn lmul_psi(&self, r: u8, e: &IElem) -> IElem {
        let mut out = IElem::new();
        for (s, c) in e {
            let v = self.lmul_psi_sym(r, s);
            add_scaled(&mut out, &v, *c);
        }
        out
    }

    pub(crate) fn lmul_x(&self, p: u8, e: &IElem) -> IElem {
        let mut out = IElem::new();
        for (s, c) in e {
            let v = self.lmul_x_sym(p, s);
            add_scaled(&mut out, &v, *c);
        }
        out
    }

    fn lmul_word(&self, word: &[u8], mut e: IElem) -> IElem {
        for &r in word.iter().rev() {
            if e.is_empty() {
                break;
            }
            e = self.lmul_psi(r, &e);
        }
        e
    }

    fn lmul_mono(&self, m: &Mono, mut e: IElem) -> IElem {
        for &(p, a) in m {
            for _ in 0..a {
                e = self.lmul_x(p, &e);
            }
        }
        e
    }

    fn lmul_poly(&self, poly: &[(Mono, i64)], e: &IElem) -> IElem {
        let mut out = IElem::new();
        for (m, c) in poly {
            let v = self.lmul_mono(m, e.clone());
            add_scaled(&mut out, &v, *c);
        }
        out
    }

    fn lmul_psi_sym(&self, r: u8, s: &Symbol) -> IElem {
        let key = (r, s.clone());
        if let Some(v) = self.psi_cache.borrow().get(&key) {
            return v.clone();
        }
        let base = s.base();
        let out = if perm::is_left_descent(&s.perm, r) {
            let mut word = perm::canonical_word(&s.perm);
            let mut errs = IElem::new();
            self.bring_front(&mut word, 0, r, &base, &mut errs);
            let inner = self.reduced_nf(&word[1..], &base);
            let rest_perm = perm::from_word(&word[1..], s.strands());
            let lv = perm::top_labels(&rest_perm, &s.labels);
            let (u, v) = (lv[r as usize - 1], lv[r as usize]);
            let mut out = self.lmul_poly(&self.q_poly(u, v, r), &inner);
            let e2 = self.lmul_psi(r, &errs);
            add_scaled(&mut out, &e2, 1);
            out
        } else {
            let mut word = vec![r];
            word.extend(perm::canonical_word(&s.perm));
            self.reduced_nf(&word, &base)
        };
        self.psi_cache.borrow_mut().insert(key, out.clone());
        out
    }

    fn lmul_x_sym(&self, p: u8, s: &Symbol) -> IElem {
        let key = (p, s.clone());
        if let Some(v) = self.x_cache.borrow().get(&key) {
            return v.clone();
        }
        let k = s.strands();
        let word = perm::canonical_word(&s.perm);
        // labels[j] = labels just below letter j (levels[len] = bottom)
        let mut levels = vec![s.labels.clone(); word.len() + 1];
        for j in (0..word.len()).rev() {
            let mut l = levels[j + 1].clone();
            l.swap(word[j] as usize - 1, word[j] as usize);
            levels[j] = l;
        }
        let mut out = IElem::new();
        let mut pos = p;
        for (j, &r) in word.iter().enumerate() {
            let below = &levels[j + 1];
            let same = below[r as usize - 1] == below[r as usize];
            let sign = if pos == r {
                pos = r + 1;
                1
            } else if pos == r + 1 {
                pos = r;
                -1
            } else {
                continue;
            };
            if same {
                let suffix =
                    Symbol { labels: s.labels.clone(), perm: perm::from_word(&word[j + 1..], k), dots: s.dots.clone() };
                let v = self.lmul_word(&word[..j], single(suffix));
                add_scaled(&mut out, &v, sign);
            }
        }
        let mut main = s.clone();
        main.dots[pos as usize - 1] += 1;
        add_scaled(&mut out, &single(main), 1);
        self.x_cache.borrow_mut().insert(key, out.clone());
        out
    }

    /// ψ_word x^a e(i) for a reduced `word`, where `base` = x^a e(i).
    fn reduced_nf(&self, word: &[u8], base: &Symbol) -> IElem {
        let k = base.strands();
        let p = perm::from_word(word, k);
        let canon = perm::canonical_word(&p);
        if canon == word {
            return single(Symbol { labels: base.labels.clone(), perm: p, dots: base.dots.clone() });
        }
        let key = (word.to_vec(), base.clone());
        if let Some(v) = self.red_cache.borrow().get(&key) {
            return v.clone();
        }
        let m = canon[0];
        let mut w2 = word.to_vec();
        let mut out = IElem::new();
        self.bring_front(&mut w2, 0, m, base, &mut out);
        let inner = self.reduced_nf(&w2[1..], base);
        let v = self.lmul_psi(m, &inner);
        add_scaled(&mut out, &v, 1);
        self.red_cache.borrow_mut().insert(key, out.clone());
        out
    }

    /// Rewrite the reduced word `word[start..]` into one beginning with its
    /// left descent `m`, accumulating the correction terms so that
    /// ψ_{old word} base = ψ_{new word} base + errs.
    fn bring_front(&self, word: &mut [u8], start: usize, m: u8, base: &Symbol, errs: &mut IElem) {
        let b = word[start];
        if b == m {
            return;
        }
        self.bring_front(word, start + 1, m, base, errs);
        if b.abs_diff(m) > 1 {
            word.swap(start, start + 1);
            return;
        }
        self.bring_front(word, start + 2, b, base, errs);
        self.braid(word, start, base, errs);
    }

    /// Replace (x, y, x) at `p` by (y, x, y).
    fn braid(&self, word: &mut [u8], p: usize, base: &Symbol, errs: &mut IElem) {
        let (x, y) = (word[p], word[p + 1]);
        debug_assert_eq!(word[p + 2], x);
        let lo = x.min(y);
        let suffix = &word[p + 3..];
        let sp = perm::from_word(suffix, base.strands());
        let lv = perm::top_labels(&sp, &base.labels);
        let (i, k, i2) = (lv[lo as usize - 1], lv[lo as usize], lv[lo as usize + 1]);
        if i == i2 && i != k && self.c(i, k) != 0 {
            let n = (-self.c(i, k)) as u32;
            let poly: Vec<(Mono, i64)> = (0..n).map(|s| (vec![(lo, s), (lo + 2, n - 1 - s)], 1)).collect();
            let inner = self.reduced_nf(suffix, base);
            let v = self.lmul_word(&word[..p], self.lmul_poly(&poly, &inner));
            let sign = if x < y { 1 } else { -1 };
            add_scaled(errs, &v, sign);
        }
        word[p] = y;
        word[p + 1] = x;
        word[p + 2] = y;
    }

    // ---- products ----

    pub(crate) fn mul_sym(&self, a: &Symbol, b: &Symbol) -> IElem {
        if a.labels != b.top_labels() {
            return IElem::new();
        }
        let mut e = single(b.clone());
        for (p, &d) in a.dots.iter().enumerate() {
            for _ in 0..d {
                e = self.lmul_x(p as u8 + 1, &e);
            }
        }
        self.lmul_word(&perm::canonical_word(&a.perm), e)
    }

    pub(crate) fn mul_ielem(&self, a: &IElem, b: &IElem) -> IElem {
        let mut out = IElem::new();
        for (sa, ca) in a {
            for (sb, cb) in b {
                let v = self.mul_sym(sa, sb);
                add_scaled(&mut out, &v, ca.checked_mul(*cb).expect("KLR coefficient overflow"));
            }
        }
        out
    }

    pub fn multiply<C: Scalar>(&self, a: &KlrElement<C>, b: &KlrElement<C>) -> KlrElement<C> {
        let mut out = KlrElement::zero();
        for (sa, ca) in a.terms() {
            for (sb, cb) in b.terms() {
                let cc = ca.clone() * cb.clone();
                for (s, x) in self.mul_sym(sa, sb) {
                    out.add_term(s, cc.clone() * C::from_int(x));
                }
            }
        }
        out
    }

    /// Normal form of g_1 g_2 ⋯ g_m e(labels), generators listed top to
    /// bottom, evaluated by left multiplication onto e(labels).
    pub fn normal_form<C: Scalar>(&self, word: &[Gen], labels: &[u8]) -> Result<KlrElement<C>> {
        self.validate(word, labels)?;
        let mut e = single(Symbol::idempotent(labels));
        for g in word.iter().rev() {
            e = match *g {
                Gen::Psi(r) => self.lmul_psi(r, &e),
                Gen::X(p) => self.lmul_x(p, &e),
            };
        }
        Ok(to_element(&e))
    }

    /// The same normal form computed right-first: ((g_1 g_2) g_3) ⋯, each
    /// generator taken with its own idempotent.
    pub fn normal_form_right_first<C: Scalar>(&self, word: &[Gen], labels: &[u8]) -> Result<KlrElement<C>> {
        self.validate(word, labels)?;
        let k = labels.len();
        // idempotent just below each generator
        let mut below = vec![labels.to_vec(); word.len()];
        let mut cur = labels.to_vec();
        for (j, g) in word.iter().enumerate().rev() {
            below[j] = cur.clone();
            if let Gen::Psi(r) = g {
                cur.swap(*r as usize - 1, *r as usize);
            }
        }
        let gen_elem = |j: usize| -> IElem {
            let mut s = Symbol::idempotent(&below[j]);
            match word[j] {
                Gen::Psi(r) => {
                    s.perm = perm::from_word(&[r], k);
                }
                Gen::X(p) => s.dots[p as usize - 1] = 1,
            }
            single(s)
        };
        let mut acc = single(Symbol::idempotent(&cur));
        for j in 0..word.len() {
            acc = self.mul_ielem(&acc, &gen_elem(j));
        }
        Ok(to_element(&acc))
    }

    fn validate(&self, word: &[Gen], labels: &[u8]) -> Result<()> {
        self.check_labels(labels)?;
        let k = labels.len() as u8;
        for g in word {
            let ok = match *g {
                Gen::Psi(r) => r >= 1 && r < k,
                Gen::X(p) => p >= 1 && p <= k,
            };
            if !ok {
                return Err(Error::Index(format!("generator {g:?} on {k} strands")));
            }
        }
        Ok(())
    }

    pub fn idem<C: Scalar>(&self, labels: &[u8]) -> Result<KlrElement<C>> {
        self.check_labels(labels)?;
        Ok(KlrElement::from_symbol(Symbol::idempotent(labels)))
    }

    /// x_r e(labels).
    pub fn dot<C: Scalar>(&self, r: u8, labels: &[u8]) -> Result<KlrElement<C>> {
        self.normal_form(&[Gen::X(r)], labels)
    }

    /// ψ_r e(labels).
    pub fn cross<C: Scalar>(&self, r: u8, labels: &[u8]) -> Result<KlrElement<C>> {
        self.normal_form(&[Gen::Psi(r)], labels)
    }
}

pub(crate) fn to_element<C: Scalar>(e: &IElem) -> KlrElement<C> {
    KlrElement::from_terms(e.iter().map(|(s, c)| (s.clone(), C::from_int(*c))))
}
