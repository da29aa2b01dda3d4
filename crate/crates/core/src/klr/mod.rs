//! The KLR (quiver Hecke) algebra R(β) of a root datum: canonical symbols
//! ψ_w x^a e(i), rewriting to normal form, grading and multiplication.

mod engine;
pub mod perm;
mod symbol;

use std::collections::BTreeMap;

pub use engine::{Gen, KlrAlgebra};
pub use symbol::{KlrElement, Symbol};

use crate::qmodule::seq_of;
use crate::rootdata::RootDatum;

/// Degree of the crossing part of a permutation on bottom labels `labels`.
pub fn crossing_degree(dat: &RootDatum, labels: &[u8], perm: &[u8]) -> i64 {
    Symbol { labels: labels.to_vec(), perm: perm.to_vec(), dots: vec![0; labels.len()] }.degree(dat)
}

/// Dot vectors whose total degree is exactly `deg` on the given labels.
pub fn dot_vectors(dat: &RootDatum, labels: &[u8], deg: i64) -> Vec<Vec<u32>> {
    fn go(w: &[i64], p: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if p == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut a = 0;
        while a * w[p] <= left {
            cur.push(a as u32);
            go(w, p + 1, left - a * w[p], cur, out);
            cur.pop();
            a += 1;
        }
    }
    let w: Vec<i64> = labels.iter().map(|&l| 2 * dat.d_of(l as usize)).collect();
    let mut out = Vec::new();
    if deg >= 0 {
        go(&w, 0, deg, &mut Vec::new(), &mut out);
    }
    out
}

/// Number of canonical symbols of R(β) in each degree of `lo..=hi`.
pub fn graded_dim_free(dat: &RootDatum, beta: &[i64], lo: i64, hi: i64) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for seq in seq_of(beta) {
        let labels: Vec<u8> = seq.iter().map(|&x| x as u8).collect();
        for p in perm::all_perms(labels.len()) {
            let cd = crossing_degree(dat, &labels, &p);
            for deg in lo..=hi {
                let n = dot_vectors(dat, &labels, deg - cd).len() as u64;
                if n > 0 {
                    *out.entry(deg).or_insert(0) += n;
                }
            }
        }
    }
    out
}
