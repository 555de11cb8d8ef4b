//! Exact integer utilities: p-adic valuations, unit parts, inverses modulo `p^k`.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A p-adic valuation. `Infinite` is the valuation of zero and compares
/// greater than every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinite
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Deterministic primality test for machine-sized integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    // These bases are a proven witness set for all n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `p^k` as a big integer.
pub fn prime_power(p: u64, k: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), k as usize)
}

/// The largest `k` with `p^k | m`, or [`Valuation::Infinite`] for `m = 0`.
pub fn val(p: u64, m: &BigInt) -> Result<Valuation> {
    check_prime(p)?;
    Ok(val_unchecked(p, m))
}

pub(crate) fn val_unchecked(p: u64, m: &BigInt) -> Valuation {
    if m.is_zero() {
        return Valuation::Infinite;
    }
    let pb = BigInt::from(p);
    let mut k = 0;
    let mut rest = m.clone();
    loop {
        let (q, r) = rest.div_rem(&pb);
        if !r.is_zero() {
            return Valuation::Finite(k);
        }
        rest = q;
        k += 1;
    }
}

/// `m / p^val(p, m)`, sign preserved.
pub fn unit_part(p: u64, m: &BigInt) -> Result<BigInt> {
    check_prime(p)?;
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let pb = BigInt::from(p);
    let mut rest = m.clone();
    loop {
        let (q, r) = rest.div_rem(&pb);
        if !r.is_zero() {
            return Ok(rest);
        }
        rest = q;
    }
}

/// The inverse of `x` modulo `p^k`, as a representative in `[0, p^k)`.
pub fn inv_mod_pk(p: u64, x: &BigInt, k: u32) -> Result<BigInt> {
    check_prime(p)?;
    let modulus = prime_power(p, k.max(1));
    let reduced = x.mod_floor(&modulus);
    if (x % BigInt::from(p)).is_zero() {
        return Err(Error::NotInvertible { value: x.to_string(), prime: p });
    }
    let ext = reduced.extended_gcd(&modulus);
    debug_assert!(ext.gcd.is_one());
    Ok(ext.x.mod_floor(&modulus))
}

/// Least non-negative residue of `m` modulo a machine-sized modulus.
pub fn residue(m: &BigInt, modulus: u64) -> u64 {
    let r = m.mod_floor(&BigInt::from(modulus));
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Integer `k`-th root, rounded down, of a non-negative integer.
pub(crate) fn floor_root(n: &BigInt, k: u32) -> BigInt {
    debug_assert!(n.sign() != Sign::Minus);
    num_integer::Roots::nth_root(n, k)
}
