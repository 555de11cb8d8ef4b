//! `v_3(i(K))`.
//!
//! Only `3 | a` matters. Then `F = (x + b)^9 mod 3`: the lift is `x - 1`
//! for `b = 2 mod 3`, `x + 1` for `b = 1 mod 3` and `x` for `3 | b`. The
//! substitution `x -> -x` maps `(a, b)` to `(a, -b)` and swaps the first
//! two cases, so their tables mirror each other.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{class_id, disc_data, find_row, PrimeVerdict, Row, EX0, EX1};
use crate::arith::{residue, val_unchecked};
use crate::engstrom::IndexValuation;
use crate::polygon::SplittingType;
use crate::{Error, Result};

/// `3 | a`, `b = 2 mod 3`, except the three families of `FAMILIES_MINUS`.
/// Rows with an empty splitting make no claim about it.
pub const TABLE_X_MINUS_1: &[Row] = &[
    Row::new(9, &[(0, 2), (0, 5), (3, 8), (3, 2), (6, 8), (6, 5)], EX0, &[]),
    Row::new(9, &[(3, 5), (6, 2)], EX0, &[(1, 1), (8, 1)]),
    Row::new(27, &[(0, 8), (0, 17), (9, 26), (9, 8), (18, 26), (18, 17)], EX0, &[(3, 1), (6, 1)]),
    Row::new(27, &[(0, 26), (9, 17)], EX0, &[(1, 1), (2, 1), (6, 1)]),
    Row::new(81, &[(18, 8), (18, 35), (45, 8), (45, 62), (72, 35), (72, 62)], EX0, &[(3, 1), (6, 1)]),
];

/// `3 | a`, `b = 1 mod 3`, except the three families of `FAMILIES_PLUS`.
pub const TABLE_9: &[Row] = &[
    Row::new(9, &[(0, 4), (0, 7), (3, 1), (3, 7), (6, 1), (6, 4)], EX0, &[]),
    Row::new(9, &[(3, 4), (6, 7)], EX0, &[(1, 1), (8, 1)]),
    Row::new(27, &[(0, 10), (0, 19), (9, 1), (9, 19), (18, 1), (18, 10)], EX0, &[(3, 1), (6, 1)]),
    Row::new(27, &[(0, 1), (9, 10)], EX0, &[(1, 1), (2, 1), (6, 1)]),
    Row::new(81, &[(18, 46), (18, 73), (45, 19), (45, 73), (72, 19), (72, 46)], EX0, &[(3, 1), (6, 1)]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    /// `{(1,3), (6,1)}`
    Cubic,
    /// `{(1,1), (1,2), (6,1)}`
    Quadratic,
    /// Decided by `v_3(disc)` and `disc_3 mod 3`; the named row of the
    /// four index-divisor families.
    Split(&'static str),
}

use Outcome::*;

/// Class mod 81 and the outcome for `a + b = 80, 161, 242 mod 243`.
const FAMILIES_MINUS: &[((u64, u64), [Outcome; 3])] = &[
    ((18, 62), [Quadratic, Cubic, Split("T2.3-row1")]),
    ((45, 35), [Cubic, Split("T2.3-row2"), Quadratic]),
    ((72, 8), [Quadratic, Cubic, Split("T2.3-row1")]),
];

/// Class mod 81 and the outcome for `b - a = 1, 82, 163 mod 243`.
const FAMILIES_PLUS: &[((u64, u64), [Outcome; 3])] = &[
    ((18, 19), [Split("T2.3-row3"), Cubic, Quadratic]),
    ((45, 46), [Quadratic, Split("T2.3-row4"), Cubic]),
    ((72, 73), [Split("T2.3-row3"), Cubic, Quadratic]),
];

fn split(pairs: &[(u32, u32)]) -> Option<SplittingType> {
    (!pairs.is_empty()).then(|| SplittingType::new(pairs.to_vec()))
}

fn verdict(nu: IndexValuation, pairs: &[(u32, u32)], rule: String) -> PrimeVerdict {
    PrimeVerdict::new(3, nu, split(pairs), rule)
}

fn unclassified(a: &BigInt, b: &BigInt) -> Error {
    Error::Unclassified { a: a.to_string(), b: b.to_string(), p: 3 }
}

fn family(a: &BigInt, b: &BigInt, outcome: Outcome, base: String) -> Result<PrimeVerdict> {
    Ok(match outcome {
        Cubic => verdict(EX0, &[(1, 3), (6, 1)], base),
        Quadratic => verdict(EX0, &[(1, 1), (1, 2), (6, 1)], base),
        Split(row) => {
            // the side through (0, v(disc) - 18) and (2, 2) has degree 2 iff
            // v(disc) is even; its residual is y^2 - disc_3 up to a square
            let (v, unit) = disc_data(a, b, 3)?;
            if v % 2 == 1 {
                verdict(EX0, &[(1, 1), (2, 1), (6, 1)], format!("{row};v3(D)odd"))
            } else if residue(&unit, 3) == 1 {
                verdict(EX0, &[(1, 1), (1, 2), (6, 1)], format!("{row};v3(D)even;D3=1mod3"))
            } else {
                verdict(EX1, &[(1, 1), (1, 1), (1, 1), (6, 1)], row.to_string())
            }
        }
    })
}

fn shifted_case(a: &BigInt, b: &BigInt, minus: bool) -> Result<PrimeVerdict> {
    let (rows, families, tag) = if minus {
        (TABLE_X_MINUS_1, FAMILIES_MINUS, "nu3:x-1")
    } else {
        (TABLE_9, FAMILIES_PLUS, "T9")
    };
    if let Some((row, class)) = find_row(rows, a, b) {
        let tag = if row.modulus == 9 && row.split.is_empty() { "T2.1-c3" } else { tag };
        return Ok(verdict(row.nu, row.split, class_id(tag, class, row.modulus)));
    }
    let class = (residue(a, 81), residue(b, 81));
    let (_, outcomes) = families.iter().find(|(c, _)| *c == class).ok_or_else(|| unclassified(a, b))?;
    let (s, label) = if minus {
        (residue(&(a + b), 243), "a+b")
    } else {
        (residue(&(b - a), 243), "b-a")
    };
    let slot = match (minus, s) {
        (true, 80) | (false, 1) => 0,
        (true, 161) | (false, 82) => 1,
        (true, 242) | (false, 163) => 2,
        _ => return Err(unclassified(a, b)),
    };
    let base = format!("{}:{label}={s}mod243", class_id(tag, class, 81));
    match outcomes[slot] {
        Split(row) => family(a, b, Split(row), row.to_string()),
        other => family(a, b, other, base),
    }
}

/// `3 | a` and `3 | b`: polygon of `phi = x` through `(0, v(b))`,
/// `(1, v(a))`, `(9, 0)`.
fn divisible_b(a: &BigInt, b: &BigInt) -> Result<PrimeVerdict> {
    let vb = val_unchecked(3, b).finite().ok_or_else(|| unclassified(a, b))?;
    let va = val_unchecked(3, a).finite();
    if va.is_none_or(|va| 8 * vb < 9 * va) {
        return match vb.gcd(&9) {
            1 => Ok(verdict(EX0, &[(9, 1)], "nu3:x^9:one-side:d=1".into())),
            // residual y^3 + c = (y + c)^3: not regular
            3 => Ok(verdict(EX0, &[], "nu3:x^9:one-side:d=3".into())),
            _ => Err(unclassified(a, b)),
        };
    }
    let va = va.unwrap();
    let au = residue(&(a / num_traits::pow(BigInt::from(3), va as usize)), 3);
    let rule = format!("nu3:x^9:two-sides:v3(a)={va};a3={au}mod3");
    let pairs: &[(u32, u32)] = match (va, au) {
        (va, _) if va % 2 == 1 => &[(1, 1), (8, 1)],
        // residual y^2 + a3
        (2 | 6, 1) => &[(1, 1), (4, 2)],
        (2 | 6, _) => &[(1, 1), (4, 1), (4, 1)],
        // residual y^4 + a3
        (4, 1) => &[(1, 1), (2, 2), (2, 2)],
        (4, _) => &[(1, 1), (2, 1), (2, 1), (2, 2)],
        _ => return Err(unclassified(a, b)),
    };
    Ok(verdict(EX0, pairs, rule))
}

/// `v_3(i(K))` for normalized `(a, b)`, the rule that decided it, and the
/// splitting of 3: the engine's when some lift is regular, else the
/// case-table splitting.
pub fn nu3(a: &BigInt, b: &BigInt) -> Result<PrimeVerdict> {
    let v = nu3_rule(a, b)?;
    Ok(v.with_engine(a, b, false))
}

pub(crate) fn nu3_rule(a: &BigInt, b: &BigInt) -> Result<PrimeVerdict> {
    if !a.is_multiple_of(&BigInt::from(3)) {
        return Ok(verdict(EX0, &[], "nu3:a-not-div-3".into()));
    }
    if b.is_zero() {
        return Err(unclassified(a, b));
    }
    match residue(b, 3) {
        0 => divisible_b(a, b),
        2 => shifted_case(a, b, true),
        _ => shifted_case(a, b, false),
    }
}
