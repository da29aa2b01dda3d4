//! The projection identities for X_{±i}(j, r) = ψ_k⋯ψ_1 x_1^r ψ_1⋯ψ_k e(p_{±i}, j).
//!
//! X is computed in the free algebra R(β): its normal form is split into the
//! part along the symbols x_{k+1}^s e(p, j) (identity on the p block, no dots
//! there) and the rest. The identity asks that part to be a unit multiple of
//! x_{k+1}^{r̃}, and to vanish when r̃ < 0.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::special::{rule_shift, special_p, table_shift, Sign};
use crate::error::{Error, Result};
use crate::klr::{perm, Gen, KlrAlgebra, KlrElement};
use crate::rootdata::{root_datum, LieType};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionReport {
    pub lie_type: LieType,
    pub rank: usize,
    pub lambda_bar: Vec<i64>,
    pub sign: Sign,
    pub i: usize,
    pub j: usize,
    pub r: i64,
    pub p: Vec<u8>,
    /// r̃ − r from the printed case tables, when they cover the case.
    pub table_shift: Option<i64>,
    /// r̃ − r from −⟨α_j^∨, wt p⟩, i.e. the change of the j-th label under ξ.
    pub rule_shift: i64,
    /// (s, coefficient of x_{k+1}^s e(p, j)) in X.
    pub observed: Vec<(u32, String)>,
    /// Matches the tables (or the rule where they are silent).
    pub ok: bool,
    /// Matches the rule.
    pub ok_rule: bool,
}

fn tail_part(e: &KlrElement<Rational>, k: usize) -> Vec<(u32, Rational)> {
    let mut v: Vec<(u32, Rational)> = e
        .terms()
        .filter(|(s, _)| perm::is_identity(&s.perm) && s.dots[..k].iter().all(|&d| d == 0))
        .map(|(s, c)| (s.dots[k], c.clone()))
        .collect();
    v.sort_by_key(|t| t.0);
    v
}

fn matches(observed: &[(u32, Rational)], r: i64, shift: i64) -> bool {
    let rt = r + shift;
    match observed {
        [] => rt < 0,
        [(s, c)] => rt >= 0 && *s as i64 == rt && c.abs() == Rational::from_integer(1.into()),
        _ => false,
    }
}

pub fn verify_projection_identity(
    lt: LieType,
    n: usize,
    labels: &[i64],
    sign: Sign,
    i: usize,
    j: usize,
    r: i64,
) -> Result<ProjectionReport> {
    let dat = root_datum(lt, n)?;
    if labels.len() != n {
        return Err(Error::WrongLength { expected: n, got: labels.len() });
    }
    if !(2..=n).contains(&j) || r < 0 || r > labels[j - 1] {
        return Err(Error::Index(format!("j = {j}, r = {r} (need 2 ≤ j ≤ n, 0 ≤ r ≤ λ̄_j)")));
    }
    let p = special_p(lt, n, sign, i)?;
    let k = p.len();
    let mut bottom = p.clone();
    bottom.push(j as u8);
    let mut word: Vec<Gen> = (1..=k as u8).rev().map(Gen::Psi).collect();
    word.extend(std::iter::repeat(Gen::X(1)).take(r as usize));
    word.extend((1..=k as u8).map(Gen::Psi));
    let x: KlrElement<Rational> = KlrAlgebra::new(&dat).normal_form(&word, &bottom)?;
    let observed = tail_part(&x, k);

    let ts = table_shift(lt, n, sign, i, j);
    let rs = rule_shift(&dat, &p, j);
    Ok(ProjectionReport {
        lie_type: lt,
        rank: n,
        lambda_bar: labels.to_vec(),
        sign,
        i,
        j,
        r,
        p,
        table_shift: ts,
        rule_shift: rs,
        ok: matches(&observed, r, ts.unwrap_or(rs)),
        ok_rule: matches(&observed, r, rs),
        observed: observed.into_iter().map(|(s, c)| (s, c.to_string())).collect(),
    })
}
