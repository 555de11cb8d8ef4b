//! Bounded-effort integer factorization: trial division, Miller-Rabin and
//! Brent's variant of Pollard's rho. Used to find the prime divisors of
//! discriminants; gives up with [`Error::Indeterminate`] instead of guessing.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Trial division bound.
pub const TRIAL_BOUND: u64 = 1_000_000;
/// Iteration budget for each Pollard rho attempt.
const RHO_BUDGET: u64 = 1 << 20;

pub(crate) fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (2..=n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
    })
}

/// Strong probable-prime test to the first twenty prime bases.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return crate::arith::is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &small_primes()[..20] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits() as u32;
    for k in (2..=bits).rev() {
        let r = n.nth_root(k);
        if r > BigUint::one() && num_traits::pow(r.clone(), k as usize) == *n {
            return Some((r, k));
        }
    }
    None
}

fn brent_rho(n: &BigUint, c: u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let step = |x: &BigUint| (x * x + &c) % n;
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut spent = 0u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let batch = 128.min(r - k);
            for _ in 0..batch {
                y = step(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += batch;
        }
        spent += r;
        r *= 2;
        if spent > RHO_BUDGET {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = step(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n {
        None
    } else {
        Some(g)
    }
}

fn split_large(n: BigUint, out: &mut Vec<(BigUint, u32)>, stuck: &mut Vec<BigUint>, mult: u32) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push((n, mult));
        return;
    }
    if let Some((root, k)) = perfect_power(&n) {
        return split_large(root, out, stuck, mult * k);
    }
    for c in 1..=4 {
        if let Some(d) = brent_rho(&n, c) {
            let other = &n / &d;
            split_large(d, out, stuck, mult);
            return split_large(other, out, stuck, mult);
        }
    }
    stuck.push(n);
}

/// Prime factorization of `|n|` with merged exponents, sorted by prime.
pub fn factor_bounded(n: &BigInt) -> Result<Vec<(BigUint, u32)>> {
    let (primes, stuck) = factor_partial(n)?;
    match stuck.first() {
        Some(c) => Err(Error::Indeterminate(c.to_string())),
        None => Ok(primes),
    }
}

/// Like [`factor_bounded`] but keeps going past composites that resist the
/// effort bound; those are returned separately.
pub fn factor_partial(n: &BigInt) -> Result<(Vec<(BigUint, u32)>, Vec<BigUint>)> {
    let mut rest = n.magnitude().clone();
    if rest.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut k = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            k += 1;
        }
        if k > 0 {
            out.push((pb, k));
        }
    }
    let mut stuck = Vec::new();
    split_large(rest, &mut out, &mut stuck, 1);
    out.sort();
    let mut merged: Vec<(BigUint, u32)> = Vec::new();
    for (p, k) in out {
        match merged.last_mut() {
            Some((q, j)) if *q == p => *j += k,
            _ => merged.push((p, k)),
        }
    }
    Ok((merged, stuck))
}

/// Whether `n != 0` is squarefree. Avoids a full factorization where the
/// cofactor left by trial division is small enough to decide directly.
pub fn is_squarefree(n: &BigInt) -> Result<bool> {
    let mut rest = n.magnitude().clone();
    if rest.is_zero() {
        return Err(Error::ZeroInput);
    }
    for &p in small_primes() {
        if rest.is_one() {
            return Ok(true);
        }
        if (&rest % p).is_zero() {
            rest /= p;
            if (&rest % p).is_zero() {
                return Ok(false);
            }
        }
    }
    if rest.is_one() || is_probable_prime(&rest) {
        return Ok(true);
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        return Ok(false);
    }
    // Every prime factor exceeds the trial bound, so below the cube of the
    // bound the cofactor is a product of two distinct primes.
    let cube = BigUint::from(TRIAL_BOUND).pow(3);
    if rest < cube {
        return Ok(true);
    }
    let factors = factor_bounded(&BigInt::from(rest))?;
    Ok(factors.iter().all(|(_, k)| *k == 1))
}
