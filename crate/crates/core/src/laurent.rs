//! Sparse Laurent polynomials in one variable `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// `Σ c_e q^e`, with no zero coefficients stored.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Scalar> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    pub fn monomial(exp: i64, coeff: C) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `q^e`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// Quantum integer `[a]` in the variable `q^d`:
    /// `q^{d(a-1)} + q^{d(a-3)} + ... + q^{-d(a-1)}`, and `[-a] = -[a]`.
    pub fn quantum_int(a: i64, d: i64) -> Self {
        let mut p = Self::zero();
        for k in 0..a.abs() {
            p.add_term(d * (a.abs() - 1 - 2 * k), C::one());
        }
        if a < 0 {
            -p
        } else {
            p
        }
    }

    /// Quantum binomial `[n choose k]` in `q^d`, computed by the q-Pascal rule.
    pub fn quantum_binomial(n: i64, k: i64, d: i64) -> Self {
        if k < 0 || k > n {
            return Self::zero();
        }
        // [n, k] = q^{d(n-k)}[n-1, k-1] + q^{-dk}[n-1, k]
        let mut row = vec![Self::one()];
        for m in 1..=n {
            let mut next = Vec::with_capacity(row.len() + 1);
            for j in 0..=m {
                let left = if j >= 1 { row[(j - 1) as usize].shift(d * (m - j)) } else { Self::zero() };
                let right = if j < m { row[j as usize].shift(-d * j) } else { Self::zero() };
                next.push(left + right);
            }
            row = next;
        }
        row[k as usize].clone()
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c = c.clone() + coeff;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + s, c.clone())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())).collect() }
    }

    /// The bar involution `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Evaluate at `q = t`. `t` must be invertible when negative exponents occur.
    pub fn eval(&self, t: &C) -> C {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            acc = acc + c.clone() * pow(t, *e);
        }
        acc
    }

    /// If `q^{-s} p` is bar-invariant for some `s`, return that `s` (which is
    /// `min + max`). The zero polynomial is palindromic with shift 0.
    pub fn palindromic_shift(&self) -> Option<i64> {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Some(0),
        };
        let s = lo + hi;
        if self.bar().shift(s) == *self {
            Some(s)
        } else {
            None
        }
    }

    /// Exact division in `C[q, q^{-1}]`; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_lo = d.min_exp().unwrap();
        let d_hi = d.max_exp().unwrap();
        let lead = d.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division from the top degree; the quotient has degree span
        // equal to span(self) - span(d).
        let self_lo = self.min_exp().unwrap();
        while let Some(r_hi) = rem.max_exp() {
            if r_hi - d_hi < self_lo - d_lo {
                return None;
            }
            let c = rem.coeff(r_hi) / lead.clone();
            let e = r_hi - d_hi;
            for (de, dc) in d.terms() {
                rem.add_term(de + e, -(dc.clone() * c.clone()));
            }
            quot.add_term(e, c);
        }
        Some(quot)
    }
}

fn pow<C: Scalar>(t: &C, e: i64) -> C {
    let mut acc = C::one();
    let base = if e < 0 { C::one() / t.clone() } else { t.clone() };
    for _ in 0..e.unsigned_abs() {
        acc = acc * base.clone();
    }
    acc
}

impl<C: Scalar> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> One for LaurentPoly<C> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<C: Scalar> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Scalar> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<C: Scalar> Add for LaurentPoly<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<C: Scalar> Sub for LaurentPoly<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<C: Scalar> Neg for LaurentPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Scalar> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Scalar> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let unit = c.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{c}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = LaurentPoly<Rational>;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(P::quantum_int(0, 1), P::zero());
        assert_eq!(P::quantum_int(1, 2), P::one());
        let q2 = P::from_terms([(-2, r(1)), (0, r(1)), (2, r(1))]);
        assert_eq!(P::quantum_int(3, 1), q2);
        assert_eq!(P::quantum_int(-3, 1), -q2);
        assert_eq!(P::quantum_int(2, 2), P::from_terms([(-2, r(1)), (2, r(1))]));
    }

    #[test]
    fn binomial_matches_factorials() {
        // [4 choose 2] [2]! [2]! = [4]!
        let fact = |n: i64| (1..=n).fold(P::one(), |acc, k| acc * P::quantum_int(k, 1));
        let lhs = P::quantum_binomial(4, 2, 1) * fact(2) * fact(2);
        assert_eq!(lhs, fact(4));
        assert_eq!(P::quantum_binomial(3, 1, 2), P::quantum_int(3, 2));
    }

    #[test]
    fn exact_division() {
        let a = P::quantum_int(4, 1);
        let b = P::quantum_int(2, 1);
        let qt = a.div_exact(&b).unwrap();
        assert_eq!(&qt * &b, a);
        assert!(P::quantum_int(3, 1).div_exact(&b).is_none());
        let shifted = P::q_pow(-5);
        assert_eq!(a.shift(-5).div_exact(&shifted).unwrap(), a);
    }

    #[test]
    fn palindromes() {
        let p = P::from_terms([(0, r(1)), (2, r(1))]);
        assert_eq!(p.palindromic_shift(), Some(2));
        assert_eq!(P::one().palindromic_shift(), Some(0));
        let bad = P::from_terms([(0, r(1)), (2, r(2))]);
        assert_eq!(bad.palindromic_shift(), None);
    }

    #[test]
    fn evaluation() {
        let p = P::from_terms([(-1, r(1)), (1, r(1))]);
        assert_eq!(p.eval(&r(1)), r(2));
        assert_eq!(p.eval(&r(2)), Rational::new(5.into(), 2.into()));
    }
}
