//! Irreducibility of `x^9 + a x + b` over `Q`.
//!
//! A monic factor over `Q` of degree `k` lies in `Z[x]` and so splits into
//! `p`-adic factors whose degrees sum to `k`. Those `p`-adic degrees are
//! coarsened by the factor degrees mod `p`, and refined to `e * f` by Ore's
//! theorem when `F` is `p`-regular. If no `k` in `1..=8` is a subset sum at
//! every prime tried, `F` is irreducible.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::floor_root;
use crate::gf::reduce_mod_p;
use crate::intpoly::IntPoly;
use crate::polygon::ore_decompose;

/// Primes tried for degree patterns.
const PRIME_BOUND: u64 = 100;
/// Largest root bound searched for integer roots.
const ROOT_SEARCH_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum Certificate {
    Proven(String),
    Reducible(String),
    Unknown,
}

impl Certificate {
    pub fn is_proven(&self) -> bool {
        matches!(self, Certificate::Proven(_))
    }
}

/// Bitmask of subset sums (bit `k` set iff some sub-multiset sums to `k`).
fn subset_sums(degrees: &[usize]) -> u32 {
    let mut mask = 1u32;
    for &d in degrees {
        mask |= mask << d;
    }
    mask & 0x3ff
}

/// Degrees of the `p`-adic factors, or a coarsening of them.
fn local_degrees(f: &IntPoly, a: &BigInt, b: &BigInt, p: u64, disc_divisible: bool) -> Option<Vec<usize>> {
    if disc_divisible && p <= super::ENGINE_PRIME_LIMIT {
        let hints: Vec<IntPoly> = super::shifted_root(a, b, p).into_iter().collect();
        if let Ok(dec) = ore_decompose(f, p, &hints) {
            return Some(dec.splitting.primes().iter().map(|(e, f)| (e * f) as usize).collect());
        }
    }
    reduce_mod_p(a, b, p).ok()?.factor_degrees().ok()
}

pub fn irreducibility_certificate(a: &BigInt, b: &BigInt) -> Certificate {
    if b.is_zero() {
        return Certificate::Reducible("x divides F".into());
    }
    let d = super::disc(a, b);
    if d.is_zero() {
        return Certificate::Reducible("F has a repeated root".into());
    }
    let f = IntPoly::trinomial(a, b);
    // an integer root r has |r|^8 <= |a| + |b|
    let bound = floor_root(&(a.abs() + b.abs()), 8).to_u64().unwrap_or(u64::MAX);
    if bound <= ROOT_SEARCH_LIMIT {
        for r in 1..=bound as i64 {
            for r in [r, -r] {
                if f.eval(&BigInt::from(r)).is_zero() {
                    return Certificate::Reducible(format!("x = {r} is a root"));
                }
            }
        }
    }
    let mut possible = 0x1feu32; // proper degrees 1..=8
    let mut used = Vec::new();
    for p in (2..=PRIME_BOUND).filter(|&p| crate::arith::is_prime_u64(p)) {
        let divides = (&d % p).is_zero();
        let Some(degrees) = local_degrees(&f, a, b, p, divides) else { continue };
        let sums = subset_sums(&degrees);
        if possible & sums != possible {
            used.push(p);
        }
        possible &= sums;
        if possible == 0 {
            let primes: Vec<String> = used.iter().map(u64::to_string).collect();
            return Certificate::Proven(format!("local degree patterns at p = {}", primes.join(", ")));
        }
    }
    Certificate::Unknown
}
