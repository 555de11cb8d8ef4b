//! Common index divisors from splitting types.
//!
//! A prime `p` divides `i(K)` exactly when, for some `f`, more primes of `K`
//! above `p` have residue degree `f` than there are monic irreducible
//! polynomials of degree `f` over `F_p`. The exact valuation is only known
//! for the handful of nonic splitting types listed in [`EXACT_VALUATIONS`].

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::gf::count_monic_irreducible;
use crate::polygon::SplittingType;

/// What is known about `v_p(i(K))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value")]
pub enum IndexValuation {
    Exact(u32),
    AtLeast(u32),
    Unknown,
}

impl IndexValuation {
    pub fn exact(self) -> Option<u32> {
        match self {
            IndexValuation::Exact(v) => Some(v),
            _ => None,
        }
    }

    /// Whether `p` is known to divide `i(K)`; `None` when unknown.
    pub fn divides(self) -> Option<bool> {
        match self {
            IndexValuation::Exact(v) => Some(v > 0),
            IndexValuation::AtLeast(v) if v > 0 => Some(true),
            _ => None,
        }
    }
}

impl fmt::Display for IndexValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValuation::Exact(v) => write!(f, "{v}"),
            IndexValuation::AtLeast(v) => write!(f, ">={v}"),
            IndexValuation::Unknown => f.write_str("unknown"),
        }
    }
}

/// Nonic splitting types with a known index valuation, as `(p, (e, f) pairs, v_p(i(K)))`.
pub const EXACT_VALUATIONS: &[(u64, &[(u32, u32)], u32)] = &[
    // (a, b) = (1, 2) mod 4
    (2, &[(1, 1), (1, 1), (7, 1)], 1),
    // (a, b) = (7, 8) mod 16 on the odd / Delta_2 branches, and
    // a = 240 mod 256, b = 256 mod 512
    (2, &[(1, 1), (2, 1), (2, 1), (4, 1)], 3),
    // (a, b) = (368, 256) mod 512
    (2, &[(1, 1), (2, 2), (2, 2)], 1),
    // the four even-v_3(Delta) families at p = 3 with Delta_3 = -1 mod 3
    (3, &[(1, 1), (1, 1), (1, 1), (6, 1)], 1),
];

/// `p | i(K)` iff some residue degree `f` has more primes than there are
/// monic irreducibles of degree `f` over `F_p`.
pub fn divides_index(split: &SplittingType, p: u64) -> bool {
    split
        .residue_degrees()
        .into_iter()
        .any(|f| BigUint::from(split.count_of_degree(f)) > count_monic_irreducible(p, f))
}

pub fn nu_lookup(split: &SplittingType, p: u64) -> IndexValuation {
    if !divides_index(split, p) {
        return IndexValuation::Exact(0);
    }
    EXACT_VALUATIONS
        .iter()
        .find(|(q, pairs, _)| *q == p && SplittingType::new(pairs.to_vec()) == *split)
        .map_or(IndexValuation::AtLeast(1), |&(_, _, v)| IndexValuation::Exact(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(pairs: &[(u32, u32)]) -> SplittingType {
        SplittingType::new(pairs.to_vec())
    }

    /// Every multiset of `(e, f)` pairs with `sum e f = n`.
    fn all_splittings(n: u32) -> Vec<SplittingType> {
        fn rec(rest: u32, min: (u32, u32), cur: &mut Vec<(u32, u32)>, out: &mut Vec<SplittingType>) {
            if rest == 0 {
                out.push(SplittingType::new(cur.clone()));
                return;
            }
            for f in 1..=rest {
                for e in 1..=rest / f {
                    if (f, e) < min {
                        continue;
                    }
                    cur.push((e, f));
                    rec(rest - e * f, (f, e), cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(n, (0, 0), &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn known_verdicts() {
        assert!(divides_index(&split(&[(1, 1), (1, 1), (7, 1)]), 2));
        assert!(!divides_index(&split(&[(1, 1), (4, 2)]), 2));
        assert_eq!(nu_lookup(&split(&[(1, 1), (1, 1), (7, 1)]), 2), IndexValuation::Exact(1));
        assert_eq!(nu_lookup(&split(&[(1, 1), (2, 1), (2, 1), (4, 1)]), 2), IndexValuation::Exact(3));
        assert_eq!(nu_lookup(&split(&[(1, 1), (1, 1), (1, 1), (6, 1)]), 3), IndexValuation::Exact(1));
        assert_eq!(nu_lookup(&split(&[(1, 1), (1, 1), (1, 1), (2, 1), (4, 1)]), 2), IndexValuation::AtLeast(1));
    }

    #[test]
    fn canonical_order_is_by_degree_then_ramification() {
        assert_eq!(split(&[(4, 2), (1, 1)]).primes(), &[(1, 1), (4, 2)]);
        assert_eq!(split(&[(2, 1), (1, 2), (1, 1)]).primes(), &[(1, 1), (2, 1), (1, 2)]);
    }

    #[test]
    fn nonic_splitting_shapes_are_distinct() {
        let all = all_splittings(9);
        assert!(all.iter().all(|s| s.mass() == 9));
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn large_primes_never_divide() {
        for p in [11u64, 13, 101] {
            for s in all_splittings(9) {
                assert!(!divides_index(&s, p), "{s} at {p}");
                assert_eq!(nu_lookup(&s, p), IndexValuation::Exact(0));
            }
        }
    }

    #[test]
    fn five_and_seven_only_with_many_linear_primes() {
        // at most 9 primes of degree 1, and N_1 = p, so only p = 5, 7 with
        // >= p + 1 degree-one primes can divide
        for p in [5u64, 7] {
            for s in all_splittings(9) {
                let expect = s.count_of_degree(1) > p as usize;
                assert_eq!(divides_index(&s, p), expect, "{s} at {p}");
            }
        }
    }

    #[test]
    fn soundness_and_monotonicity() {
        for p in [2u64, 3, 5, 7] {
            for s in all_splittings(9) {
                let d = divides_index(&s, p);
                assert_eq!(nu_lookup(&s, p) == IndexValuation::Exact(0), !d);
                for f in 1..=4 {
                    let mut bigger = s.primes().to_vec();
                    bigger.push((1, f));
                    assert!(!d || divides_index(&SplittingType::new(bigger), p));
                }
            }
        }
    }

    #[test]
    fn exact_entries_are_the_listed_ones() {
        let mut exact = Vec::new();
        for p in [2u64, 3, 5, 7] {
            for s in all_splittings(9) {
                if let IndexValuation::Exact(v @ 1..) = nu_lookup(&s, p) {
                    exact.push((p, s.to_string(), v));
                }
            }
        }
        exact.sort();
        assert_eq!(
            exact,
            vec![
                (2, "{(1,1),(1,1),(7,1)}".to_string(), 1),
                (2, "{(1,1),(2,1),(2,1),(4,1)}".to_string(), 3),
                (2, "{(1,1),(2,2),(2,2)}".to_string(), 1),
                (3, "{(1,1),(1,1),(1,1),(6,1)}".to_string(), 1),
            ]
        );
        for (p, pairs, _) in EXACT_VALUATIONS {
            let s = split(pairs);
            assert_eq!(s.mass(), 9);
            assert!(divides_index(&s, *p));
        }
    }
}
