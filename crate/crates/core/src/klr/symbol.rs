use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm;
use crate::rootdata::RootDatum;
use crate::scalar::Scalar;

/// The spanning element ψ_w x^a e(i): dots sit below the crossings and `w`
/// is read through its canonical reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    /// Bottom labels, 1-based nodes.
    pub labels: Vec<u8>,
    /// One-line permutation, bottom position → top position.
    pub perm: Vec<u8>,
    /// Dot exponents by bottom position.
    pub dots: Vec<u32>,
}

impl Symbol {
    pub fn idempotent(labels: &[u8]) -> Self {
        let k = labels.len();
        Symbol { labels: labels.to_vec(), perm: perm::identity(k), dots: vec![0; k] }
    }

    pub fn strands(&self) -> usize {
        self.labels.len()
    }

    pub fn top_labels(&self) -> Vec<u8> {
        perm::top_labels(&self.perm, &self.labels)
    }

    pub fn word(&self) -> Vec<u8> {
        perm::canonical_word(&self.perm)
    }

    /// x^a e(i), forgetting the crossings.
    pub fn base(&self) -> Symbol {
        Symbol { labels: self.labels.clone(), perm: perm::identity(self.strands()), dots: self.dots.clone() }
    }

    pub fn degree(&self, dat: &RootDatum) -> i64 {
        let k = self.strands();
        let node = |p: usize| self.labels[p] as usize;
        let mut deg: i64 = (0..k).map(|p| 2 * dat.d_of(node(p)) * self.dots[p] as i64).sum();
        for p in 0..k {
            for q in p + 1..k {
                if self.perm[p] > self.perm[q] {
                    deg -= dat.sym(node(p), node(q));
                }
            }
        }
        deg
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.word() {
            write!(f, "ψ{r} ")?;
        }
        for (p, &a) in self.dots.iter().enumerate() {
            match a {
                0 => {}
                1 => write!(f, "x{} ", p + 1)?,
                _ => write!(f, "x{}^{} ", p + 1, a)?,
            }
        }
        let labels: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "e({})", labels.join(","))
    }
}

/// A finite combination of canonical symbols.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KlrElement<C> {
    terms: BTreeMap<Symbol, C>,
}

impl<C: Scalar> Default for KlrElement<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> KlrElement<C> {
    pub fn zero() -> Self {
        KlrElement { terms: BTreeMap::new() }
    }

    pub fn from_symbol(s: Symbol) -> Self {
        Self::from_terms([(s, C::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Symbol, C)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (s, c) in it {
            e.add_term(s, c);
        }
        e
    }

    pub fn add_term(&mut self, s: Symbol, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&s) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&s);
                }
            }
            None => {
                self.terms.insert(s, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Symbol, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: &Symbol) -> C {
        self.terms.get(s).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(s, x)| (s.clone(), x.clone() * c.clone())))
    }

    /// The common degree of all terms; `None` if inhomogeneous, `Some(None)`
    /// for zero.
    pub fn degree(&self, dat: &RootDatum) -> Option<Option<i64>> {
        let mut degs = self.terms.keys().map(|s| s.degree(dat));
        match degs.next() {
            None => Some(None),
            Some(d) => degs.all(|e| e == d).then_some(Some(d)),
        }
    }
}

impl<C: Scalar> fmt::Display for KlrElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("({c}) {s}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
