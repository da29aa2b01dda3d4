//! The polynomial representation of R(β) on ⊕_i Z[x_1, …, x_k] e(i):
//! dots multiply, and ψ_r acts on f e(i) with (u, v) = (i_r, i_{r+1}) by
//! the divided difference (f − s_r f)/(x_r − x_{r+1}) if u = v, by s_r f if
//! u < v, and by Q_{vu}(x_r, x_{r+1}) s_r f if u > v. It is faithful, so it
//! certifies normal forms independently of the rewriting engine.

use std::collections::BTreeMap;

use gtklr::klr::{Gen, KlrElement, Symbol};
use gtklr::{Rational, RootDatum};
use num_traits::Zero;

pub type Poly = BTreeMap<(Vec<u8>, Vec<u32>), Rational>;

fn add(p: &mut Poly, key: (Vec<u8>, Vec<u32>), c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(key.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&key);
    }
}

pub fn monomial(labels: &[u8], exps: &[u32]) -> Poly {
    let mut p = Poly::new();
    add(&mut p, (labels.to_vec(), exps.to_vec()), Rational::from_integer(1.into()));
    p
}

fn q(dat: &RootDatum, u: u8, v: u8) -> Vec<(u32, u32)> {
    // Q_{uv}(a, b) as (exp a, exp b) terms
    let cuv = dat.c(u as usize, v as usize);
    let cvu = dat.c(v as usize, u as usize);
    if cuv == 0 {
        vec![(0, 0)]
    } else {
        vec![((-cuv) as u32, 0), (0, (-cvu) as u32)]
    }
}

pub fn apply_gen(dat: &RootDatum, g: Gen, p: &Poly) -> Poly {
    let mut out = Poly::new();
    for ((labels, exps), c) in p {
        match g {
            Gen::X(r) => {
                let mut e = exps.clone();
                e[r as usize - 1] += 1;
                add(&mut out, (labels.clone(), e), c.clone());
            }
            Gen::Psi(r) => {
                let (a, b) = (r as usize - 1, r as usize);
                let (u, v) = (labels[a], labels[b]);
                let mut sl = labels.clone();
                sl.swap(a, b);
                let mut se = exps.clone();
                se.swap(a, b);
                if u == v {
                    // x^m y^n − x^n y^m over (x − y)
                    let (m, n) = (exps[a], exps[b]);
                    let (hi, lo, sign) = if m >= n { (m, n, 1) } else { (n, m, -1) };
                    for s in 0..hi - lo {
                        let mut e = exps.clone();
                        e[a] = lo + s;
                        e[b] = lo + (hi - lo - 1 - s);
                        add(&mut out, (labels.clone(), e), c.clone() * Rational::from_integer(sign.into()));
                    }
                } else if u < v {
                    add(&mut out, (sl, se), c.clone());
                } else {
                    for (ea, eb) in q(dat, v, u) {
                        let mut e = se.clone();
                        e[a] += ea;
                        e[b] += eb;
                        add(&mut out, (sl.clone(), e), c.clone());
                    }
                }
            }
        }
    }
    out
}

/// Apply g_1 ⋯ g_m e(labels) (top to bottom) to `p`.
pub fn apply_word(dat: &RootDatum, word: &[Gen], labels: &[u8], p: &Poly) -> Poly {
    let mut cur: Poly = p.iter().filter(|((l, _), _)| l == labels).map(|(k, v)| (k.clone(), v.clone())).collect();
    for g in word.iter().rev() {
        cur = apply_gen(dat, *g, &cur);
    }
    cur
}

pub fn apply_symbol(dat: &RootDatum, s: &Symbol, p: &Poly) -> Poly {
    let mut word: Vec<Gen> = s.word().into_iter().map(Gen::Psi).collect();
    for (r, &a) in s.dots.iter().enumerate() {
        for _ in 0..a {
            word.push(Gen::X(r as u8 + 1));
        }
    }
    apply_word(dat, &word, &s.labels, p)
}

pub fn apply_element(dat: &RootDatum, e: &KlrElement<Rational>, p: &Poly) -> Poly {
    let mut out = Poly::new();
    for (s, c) in e.terms() {
        for (k, v) in apply_symbol(dat, s, p) {
            add(&mut out, k, v * c.clone());
        }
    }
    out
}

/// Test vectors on the given labels: all exponent vectors with entries ≤ `max`.
pub fn test_polys(labels: &[u8], max: u32) -> Vec<Poly> {
    let k = labels.len();
    let mut out = Vec::new();
    let mut e = vec![0u32; k];
    loop {
        out.push(monomial(labels, &e));
        let mut p = 0;
        loop {
            if p == k {
                return out;
            }
            e[p] += 1;
            if e[p] <= max {
                break;
            }
            e[p] = 0;
            p += 1;
        }
    }
}
