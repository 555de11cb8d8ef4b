//! `v_2(i(K))`.
//!
//! `F mod 2` is squarefree when `b` is odd. For `a` odd and `b`
//! even, `F = x (x + 1)^8 mod 2`; for `a, b` even, `F = x^9 mod 2`. The
//! branches that need more than first-order polygons are resolved by the
//! congruence rows below.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{class_id, disc_data, find_row, PrimeVerdict, Row, EX0, EX1, EX3, GE1};
use crate::arith::{residue, val_unchecked};
use crate::engstrom::IndexValuation;
use crate::polygon::SplittingType;
use crate::{Error, Result};

/// `a = 3 mod 4`, `b = 0 mod 4`, except `(7, 8) mod 16`.
pub const TABLE_3: &[Row] = &[
    Row::new(8, &[(3, 0), (7, 4)], EX0, &[(1, 1), (4, 2)]),
    Row::new(8, &[(3, 4)], GE1, &[(1, 1), (1, 1), (3, 1), (4, 1)]),
    Row::new(16, &[(7, 0), (15, 8)], EX0, &[(1, 1), (2, 2), (4, 1)]),
    // (15, 0) mod 16 has v_2(a + 9) = 3, so the (x - 1)-polygon has slopes
    // 1, 1/2, 1/4 and the first side depends on v_2(a + b + 1): = 4 gives
    // residual y^2 + y + 1, >= 5 gives two sides of degree 1
    Row::new(32, &[(15, 0), (31, 16)], GE1, &[(1, 1), (1, 2), (2, 1), (4, 1)]),
    Row::new(32, &[(15, 16), (31, 0)], GE1, &[(1, 1), (1, 1), (1, 1), (2, 1), (4, 1)]),
];

/// `v_2(a) = 2`, `v_2(b) >= 3`.
pub const TABLE_6: &[Row] = &[
    Row::new(16, &[(4, 8), (12, 8)], EX0, &[(1, 1), (8, 1)]),
    Row::new(32, &[(12, 16), (28, 16)], EX0, &[(1, 1), (8, 1)]),
    Row::new(32, &[(12, 0)], EX0, &[(1, 1), (4, 2)]),
    Row::new(32, &[(28, 0)], GE1, &[(1, 1), (4, 1), (4, 1)]),
    Row::new(32, &[(4, 16), (20, 16)], EX0, &[(1, 1), (8, 1)]),
    Row::new(64, &[(4, 32), (36, 32)], EX0, &[(1, 1), (8, 1)]),
    Row::new(64, &[(36, 0)], EX0, &[(1, 1), (4, 2)]),
    Row::new(64, &[(4, 0)], GE1, &[(1, 1), (4, 1), (4, 1)]),
    Row::new(64, &[(20, 0), (52, 0)], EX0, &[(1, 1), (8, 1)]),
    Row::new(64, &[(20, 32)], EX0, &[(1, 1), (4, 2)]),
    Row::new(64, &[(52, 32)], GE1, &[(1, 1), (4, 1), (4, 1)]),
];

/// `v_2(a) = 4`, `v_2(b) >= 5`.
pub const TABLE_7: &[Row] = &[
    Row::new(64, &[(16, 32), (48, 32)], EX0, &[(1, 1), (8, 1)]),
    Row::new(64, &[(16, 0)], EX0, &[(1, 1), (8, 1)]),
    Row::new(128, &[(48, 64), (112, 64)], EX0, &[(1, 1), (8, 1)]),
    Row::new(128, &[(48, 0)], EX0, &[(1, 1), (4, 2)]),
    Row::new(256, &[(112, 128), (240, 128)], GE1, &[(1, 1), (4, 1), (4, 1)]),
    Row::new(512, &[(112, 0), (368, 0)], EX0, &[(1, 1), (2, 2), (4, 1)]),
    Row::new(512, &[(368, 256)], EX1, &[(1, 1), (2, 2), (2, 2)]),
    Row::new(512, &[(112, 256)], GE1, &[(1, 1), (2, 2), (2, 1), (2, 1)]),
    Row::new(512, &[(240, 256), (496, 256)], EX3, &[(1, 1), (2, 1), (2, 1), (4, 1)]),
    Row::new(512, &[(240, 0)], GE1, &[(1, 1), (2, 1), (2, 1), (2, 2)]),
    Row::new(512, &[(496, 0)], GE1, &[(1, 1), (2, 1), (2, 1), (2, 1), (2, 1)]),
];

/// `v_2(a) = 6`, `v_2(b) >= 7`. The class `(576, 512) mod 1024` stands in
/// for a listed `(566, 512)`, which is not `64 mod 128` and so cannot belong
/// to this family; 576 completes the `{64, 576}` pair.
pub const TABLE_8: &[Row] = &[
    Row::new(256, &[(64, 128), (192, 128)], EX0, &[(1, 1), (8, 1)]),
    Row::new(512, &[(64, 256), (320, 256)], EX0, &[(1, 1), (8, 1)]),
    Row::new(1024, &[(64, 512), (576, 512)], EX0, &[(1, 1), (8, 1)]),
    Row::new(1024, &[(576, 0)], EX0, &[(1, 1), (4, 2)]),
    Row::new(1024, &[(64, 0)], GE1, &[(1, 1), (4, 1), (4, 1)]),
    Row::new(1024, &[(320, 512), (832, 512)], EX0, &[(1, 1), (8, 1)]),
    Row::new(1024, &[(320, 0), (832, 0)], EX0, &[(1, 1), (8, 1)]),
    Row::new(512, &[(192, 256), (448, 256)], EX0, &[(1, 1), (8, 1)]),
    Row::new(512, &[(192, 0)], EX0, &[(1, 1), (4, 2)]),
    Row::new(512, &[(448, 0)], GE1, &[(1, 1), (4, 1), (4, 1)]),
];

const SPLIT_1_1_7: &[(u32, u32)] = &[(1, 1), (1, 1), (7, 1)];
const SPLIT_NU3: &[(u32, u32)] = &[(1, 1), (2, 1), (2, 1), (4, 1)];
const SPLIT_THREE_LINEAR: &[(u32, u32)] = &[(1, 1), (1, 1), (1, 1), (2, 1), (4, 1)];
const SPLIT_QUADRATIC: &[(u32, u32)] = &[(1, 1), (1, 2), (2, 1), (4, 1)];

fn verdict(nu: IndexValuation, split: Option<&[(u32, u32)]>, rule: String) -> PrimeVerdict {
    PrimeVerdict::new(2, nu, split.map(|s| SplittingType::new(s.to_vec())), rule)
}

fn unclassified(a: &BigInt, b: &BigInt) -> Error {
    Error::Unclassified { a: a.to_string(), b: b.to_string(), p: 2 }
}

fn table_verdict(tag: &str, rows: &[Row], a: &BigInt, b: &BigInt) -> Result<PrimeVerdict> {
    let (row, class) = find_row(rows, a, b).ok_or_else(|| unclassified(a, b))?;
    let mut v = verdict(row.nu, Some(row.split), class_id(tag, class, row.modulus));
    if row.modulus == 1024 && class == (576, 512) {
        v.warnings.push("matched row (576,512) mod 1024, which replaces an out-of-family (566,512)".to_string());
    }
    Ok(v)
}

/// `(a, b) = (7, 8) mod 16`: decided by `v_2(disc) >= 28` and `disc_2 mod 8`.
fn seven_eight(a: &BigInt, b: &BigInt) -> Result<PrimeVerdict> {
    let (v, unit) = disc_data(a, b, 2)?;
    let r = residue(&unit, 8);
    let base = "T2.2-c3:(7,8)mod16";
    let out = if v % 2 == 1 {
        verdict(EX3, Some(SPLIT_NU3), format!("{base};v2(D)odd"))
    } else if v == 28 {
        let rule = format!("{base};v2(D)=28;D2={r}mod8");
        match r {
            1 => verdict(GE1, Some(SPLIT_THREE_LINEAR), rule),
            5 => verdict(GE1, Some(SPLIT_QUADRATIC), rule),
            _ => verdict(EX3, Some(SPLIT_NU3), rule),
        }
    } else if v >= 30 {
        let rule = format!("{base};v2(D)even>=30;D2={r}mod8");
        match r {
            7 => verdict(GE1, Some(SPLIT_THREE_LINEAR), rule),
            3 => verdict(GE1, Some(SPLIT_QUADRATIC), rule),
            _ => verdict(EX3, Some(SPLIT_NU3), rule),
        }
    } else {
        return Err(unclassified(a, b));
    };
    Ok(out)
}

/// `a, b` both even, so `F = x^9 mod 2` and the polygon of `phi = x` has
/// vertices among `(0, v(b))`, `(1, v(a))`, `(9, 0)`.
fn both_even(a: &BigInt, b: &BigInt) -> Result<PrimeVerdict> {
    let vb = val_unchecked(2, b).finite().ok_or_else(|| unclassified(a, b))?;
    let va = val_unchecked(2, a).finite();
    let single_side = va.is_none_or(|va| 8 * vb < 9 * va);
    if single_side {
        return match vb.gcd(&9) {
            1 => Ok(verdict(EX0, Some(&[(9, 1)]), "nu2:x^9:one-side:d=1".into())),
            // residual y^3 + 1 = (y + 1)(y^2 + y + 1)
            3 => Ok(verdict(EX0, Some(&[(3, 1), (3, 2)]), "nu2:x^9:one-side:d=3".into())),
            _ => Err(unclassified(a, b)),
        };
    }
    match va.unwrap() {
        va if va % 2 == 1 => Ok(verdict(EX0, Some(&[(1, 1), (8, 1)]), "nu2:x^9:two-sides:v2(a)odd".into())),
        2 => table_verdict("T6", TABLE_6, a, b),
        4 => table_verdict("T7", TABLE_7, a, b),
        6 => table_verdict("T8", TABLE_8, a, b),
        _ => Err(unclassified(a, b)),
    }
}

/// `v_2(i(K))` for normalized `(a, b)`, the rule that decided it, and the
/// splitting of 2: the case-table splitting when the rule has one, else
/// the engine's.
pub fn nu2(a: &BigInt, b: &BigInt) -> Result<PrimeVerdict> {
    let v = nu2_rule(a, b)?;
    Ok(v.with_engine(a, b, true))
}

pub(crate) fn nu2_rule(a: &BigInt, b: &BigInt) -> Result<PrimeVerdict> {
    if b.is_odd() {
        return Ok(verdict(EX0, None, "nu2:b-odd".into()));
    }
    if a.is_even() {
        if b.is_zero() {
            return Err(unclassified(a, b));
        }
        return both_even(a, b);
    }
    match (residue(a, 4), residue(b, 4)) {
        (1, 0) | (3, 2) => Ok(verdict(
            EX0,
            None,
            format!("T2.1-c2:({},{})mod4", residue(a, 4), residue(b, 4)),
        )),
        (1, 2) => Ok(verdict(EX1, Some(SPLIT_1_1_7), "T2.2-c1:(1,2)mod4".into())),
        _ => {
            if (residue(a, 16), residue(b, 16)) == (7, 8) {
                seven_eight(a, b)
            } else {
                table_verdict("T3", TABLE_3, a, b)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engstrom::divides_index;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn rule(a: i64, b: i64) -> PrimeVerdict {
        nu2_rule(&big(a), &big(b)).unwrap()
    }

    #[test]
    fn examples() {
        let v = nu2(&big(15381), &big(6634)).unwrap();
        assert_eq!(v.nu, EX1);
        assert_eq!(v.rule, "T2.2-c1:(1,2)mod4");
        let v = nu2(&big(183), &big(296)).unwrap();
        assert_eq!(v.nu, EX3);
        assert_eq!(v.splitting.unwrap().to_string(), "{(1,1),(2,1),(2,1),(4,1)}");
        assert_eq!(nu2(&big(51), &big(122)).unwrap().nu, EX0);
        assert_eq!(rule(7335, 24184).nu, EX3);
        assert_eq!(rule(1392, 768).nu, EX1);
        assert_eq!(rule(35, 20).nu, GE1);
    }

    #[test]
    fn odd_b_and_eisenstein() {
        assert_eq!(rule(4, 3).rule, "nu2:b-odd");
        let v = nu2(&big(2), &big(2)).unwrap();
        assert_eq!(v.nu, EX0);
        assert_eq!(v.splitting.unwrap().primes(), &[(9, 1)]);
    }

    #[test]
    fn flagged_row_warns() {
        let v = rule(576, 512 + 1024 * 3);
        assert_eq!(v.rule, "T8:(576,512)mod1024");
        assert_eq!(v.warnings.len(), 1);
    }

    /// Both halves of `(15, 0) mod 16` split as the engine computes, with
    /// the first side's residual polynomial deciding between them.
    #[test]
    fn fifteen_zero_depends_on_a_plus_b_plus_one() {
        for (a, b, split) in [
            (15 + 32 * 7, 32 * 11, "{(1,1),(2,1),(4,1),(1,2)}"),
            (31 + 32 * 7, 16 + 32 * 11, "{(1,1),(2,1),(4,1),(1,2)}"),
            (15 + 32 * 7, 16 + 32 * 11, "{(1,1),(1,1),(1,1),(2,1),(4,1)}"),
            (31 + 32 * 7, 32 * 11, "{(1,1),(1,1),(1,1),(2,1),(4,1)}"),
        ] {
            let v = nu2(&big(a), &big(b)).unwrap();
            assert_eq!(v.nu, GE1);
            assert_eq!(v.claimed.as_ref().unwrap().to_string(), split, "({a},{b})");
            assert_eq!(v.engine, v.claimed, "({a},{b})");
        }
    }

    fn all_tables() -> Vec<(&'static str, &'static [Row])> {
        vec![("T3", TABLE_3), ("T6", TABLE_6), ("T7", TABLE_7), ("T8", TABLE_8)]
    }

    #[test]
    fn rows_are_consistent_with_the_index_criterion() {
        for (name, rows) in all_tables() {
            for row in rows {
                let s = row.splitting();
                assert_eq!(s.mass(), 9, "{name} {:?}", row.classes);
                assert_eq!(divides_index(&s, 2), row.nu != EX0, "{name} {:?}", row.classes);
            }
        }
    }

    /// The rows of each table partition the residue classes they govern.
    #[test]
    fn tables_partition_their_classes() {
        let governs: [(&[Row], fn(u64, u64) -> bool); 4] = [
            (TABLE_3, |a, b| a % 4 == 3 && b % 4 == 0 && !(a % 16 == 7 && b % 16 == 8)),
            (TABLE_6, |a, b| a % 8 == 4 && b % 8 == 0),
            (TABLE_7, |a, b| a % 32 == 16 && b % 32 == 0),
            (TABLE_8, |a, b| a % 128 == 64 && b % 128 == 0),
        ];
        for (rows, governed) in governs {
            for a in 0..1024u64 {
                for b in 0..1024u64 {
                    let hits = rows
                        .iter()
                        .filter(|r| r.classes.contains(&(a % r.modulus, b % r.modulus)))
                        .count();
                    assert_eq!(hits, usize::from(governed(a, b)), "({a},{b})");
                }
            }
        }
    }

    /// Divisibility agrees with the nine congruence conditions characterizing
    /// `2 | i(K)` on every normalized class mod 1024.
    #[test]
    fn divisibility_matches_the_nine_conditions() {
        let conditions = |a: u64, b: u64| {
            (a % 4, b % 4) == (1, 2)
                || (a % 8, b % 8) == (3, 4)
                || [(15, 0), (7, 8)].contains(&(a % 16, b % 16))
                || (a % 32, b % 32) == (28, 0)
                || [(4, 0), (52, 32)].contains(&(a % 64, b % 64))
                || (a % 128 == 112 && b % 256 == 128)
                || [(368, 256), (112, 256), (240, 0), (496, 0), (448, 0)].contains(&(a % 512, b % 512))
                || (a % 256 == 240 && b % 512 == 256)
                || (a % 1024, b % 1024) == (64, 0)
        };
        for a in 0..1024i64 {
            for b in 0..1024i64 {
                // stay away from the v(a) >= 8, v(b) >= 9 and b = 0 corners
                let (a_l, b_l) = (a + 1024 * 3, b + 1024 * 5);
                if !super::super::TrinomialParams::new(big(a_l), big(b_l)).normalized {
                    continue;
                }
                let v = rule(a_l, b_l);
                if v.rule.contains("(7,8)mod16") {
                    assert!(v.nu.divides() == Some(true));
                    continue;
                }
                assert_eq!(v.nu.divides(), Some(conditions(a as u64, b as u64)), "({a},{b}) {}", v.rule);
            }
        }
    }
}
