//! Special idempotents p_{±i}, the words e(s) of complete patterns, and the
//! dot shifts of the projection identities.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patterns::{tau_to_map, CompletePattern, LatticeMap};
use crate::rootdata::{LieType, RootDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

fn down(from: usize, to: usize) -> impl Iterator<Item = usize> {
    (to..=from).rev()
}

/// The label word of p_{±i} in rank `n`.
pub fn special_p(lt: LieType, n: usize, sign: Sign, i: usize) -> Result<Vec<u8>> {
    let bad = || Error::NoSpecialIdempotent {
        lie_type: lt,
        rank: n,
        sign: if sign == Sign::Plus { '+' } else { '-' },
        index: i,
    };
    let w: Vec<usize> = match (lt, sign) {
        (LieType::A, _) => return Err(bad()),
        (_, Sign::Plus) => {
            if !(1..n).contains(&i) {
                return Err(bad());
            }
            down(i, 1).collect()
        }
        (LieType::B, Sign::Minus) => {
            if i == 1 {
                down(n, 1).collect()
            } else if (2..=n).contains(&i) {
                (i..=n).chain(down(n, 1)).collect()
            } else {
                return Err(bad());
            }
        }
        (LieType::C, Sign::Minus) => {
            if i == n && n >= 2 {
                down(n, 1).collect()
            } else if (2..n).contains(&i) {
                (i..n).chain(std::iter::once(n)).chain(down(n - 1, 1)).collect()
            } else {
                return Err(bad());
            }
        }
        (LieType::D, Sign::Minus) => {
            if !(2..=n).contains(&i) {
                return Err(bad());
            }
            let head: Vec<usize> = if i == n {
                vec![n]
            } else if i == n - 1 {
                vec![n - 1, n]
            } else {
                (i..=n).collect()
            };
            head.into_iter().chain(down(n.saturating_sub(2), 1)).collect()
        }
    };
    Ok(w.into_iter().map(|x| x as u8).collect())
}

/// The word p_{−t, +i} of an admissible map, in the type's composition
/// order (B, C: minus factors then plus factors; D: plus then minus).
/// For C the ξ_{−1}^c part carries no word; it is kept in the map.
pub fn map_word(lt: LieType, n: usize, m: &LatticeMap) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let minus = m.minus.iter().map(|&t| (Sign::Minus, t));
    let plus = m.plus.iter().map(|&i| (Sign::Plus, i));
    let factors: Vec<(Sign, usize)> = match lt {
        LieType::D => plus.chain(minus).collect(),
        _ => minus.chain(plus).collect(),
    };
    for (s, i) in factors {
        out.extend(special_p(lt, n, s, i)?);
    }
    Ok(out)
}

/// e(s) for a complete pattern: the map words of its branching steps,
/// outermost first, with step k's nodes shifted by k−1 into the ambient
/// diagram. `c` lists the ξ_{−1} counts per step (nonzero only for C).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PatternIdempotent {
    pub word: Vec<u8>,
    pub c: Vec<usize>,
    pub steps: Vec<LatticeMap>,
}

pub fn pattern_idempotent(s: &CompletePattern) -> Result<PatternIdempotent> {
    let mut out = PatternIdempotent { word: Vec::new(), c: Vec::new(), steps: Vec::new() };
    for (k, (lam, pair)) in s.steps().into_iter().enumerate() {
        let rank = lam.len();
        let m = tau_to_map(s.lie_type, &pair, &lam)?;
        let w = map_word(s.lie_type, rank, &m)?;
        out.word.extend(w.into_iter().map(|x| x + k as u8));
        out.c.push(m.c);
        out.steps.push(m);
    }
    Ok(out)
}

/// r̃ − r for X_{±i}(j, r) as printed in the case tables; `None` where the
/// tables are silent (type D, −n).
pub fn table_shift(lt: LieType, n: usize, sign: Sign, i: usize, j: usize) -> Option<i64> {
    let s = match (lt, sign) {
        (LieType::B, Sign::Minus) if i == n => {
            if j == n - 1 {
                1
            } else if j == n {
                -2
            } else {
                0
            }
        }
        (LieType::B, Sign::Plus) if i == n - 1 => {
            if j == n - 1 {
                -1
            } else if j == n {
                2
            } else {
                0
            }
        }
        (LieType::C, Sign::Minus) if i == n => {
            if j == n - 1 {
                1
            } else if j == n {
                -1
            } else {
                0
            }
        }
        (LieType::D, Sign::Minus) if i == n => return None,
        (LieType::D, Sign::Plus) => {
            if j == i {
                -1
            } else if (j == i + 1 && j != n) || (j == n && (i == n - 2 || i == n - 1)) {
                1
            } else {
                0
            }
        }
        (_, Sign::Minus) => {
            if j + 1 == i {
                1
            } else if j == i {
                -1
            } else {
                0
            }
        }
        (_, Sign::Plus) => {
            if j == i {
                -1
            } else if j == i + 1 {
                1
            } else {
                0
            }
        }
    };
    Some(s)
}

/// −⟨α_j^∨, wt(p)⟩: the change of the j-th label caused by the block p.
pub fn rule_shift(dat: &RootDatum, p: &[u8], j: usize) -> i64 {
    -p.iter().map(|&a| dat.c(j, a as usize)).sum::<i64>()
}
