//! The classifier for `F = x^9 + a x + b`.
//!
//! `v_2(i(K))` and `v_3(i(K))` come from congruence case trees on `(a, b)`
//! (plus the parity of `v_p(disc)` and the class of `disc / p^v` in a few
//! branches); every other prime has `v_p(i(K)) = 0`. The polygon engine
//! supplies splittings wherever it is regular and is cross-checked against
//! the splittings the case tables assert.

mod certificate;
mod maximality;
mod three;
mod two;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{floor_root, inv_mod_pk, is_prime_u64, prime_power, residue, unit_part, val, val_unchecked};
use crate::engstrom::IndexValuation;
use crate::factor::{factor_partial, small_primes};
use crate::intpoly::IntPoly;
use crate::polygon::{ore_decompose, SplittingType};
use crate::{Error, Result};

pub use certificate::{irreducibility_certificate, Certificate};
pub use maximality::{is_locally_maximal, is_order_maximal, Maximality};
pub use three::{nu3, TABLE_9, TABLE_X_MINUS_1};
pub use two::{nu2, TABLE_3, TABLE_6, TABLE_7, TABLE_8};

/// Largest prime at which [`classify`] runs the polygon engine for primes
/// `p >= 5`; beyond it residue fields get too big for exhaustive splitting.
pub const ENGINE_PRIME_LIMIT: u64 = 7;

/// `(a, b)` for `x^9 + a x + b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TrinomialParams {
    #[serde(with = "decimal")]
    pub a: BigInt,
    #[serde(with = "decimal")]
    pub b: BigInt,
    /// No prime has `v_p(a) >= 8` and `v_p(b) >= 9`.
    pub normalized: bool,
}

impl TrinomialParams {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        let normalized = reducing_prime(&a, &b).is_none();
        TrinomialParams { a, b, normalized }
    }

    pub fn poly(&self) -> IntPoly {
        IntPoly::trinomial(&self.a, &self.b)
    }

    pub fn disc(&self) -> BigInt {
        disc(&self.a, &self.b)
    }
}

impl fmt::Display for TrinomialParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}

/// `disc(x^9 + a x + b) = 2^24 a^9 + 3^18 b^8`.
pub fn disc(a: &BigInt, b: &BigInt) -> BigInt {
    (BigInt::one() << 24u32) * num_traits::pow(a.clone(), 9) + BigInt::from(387_420_489u64) * num_traits::pow(b.clone(), 8)
}

/// `disc / p^v_p(disc)`.
pub fn delta_unit(a: &BigInt, b: &BigInt, p: u64) -> Result<BigInt> {
    let d = disc(a, b);
    if d.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    unit_part(p, &d)
}

/// A prime with `p^8 | a` and `p^9 | b`, searched up to the trial bound.
fn reducing_prime(a: &BigInt, b: &BigInt) -> Option<u64> {
    let g = a.gcd(b);
    if g.is_zero() {
        return None;
    }
    let bound = floor_root(&g, 8).to_u64().unwrap_or(u64::MAX);
    for &p in small_primes().iter().take_while(|&&p| p <= bound) {
        let pb = BigInt::from(p);
        if a.is_multiple_of(&num_traits::pow(pb.clone(), 8)) && b.is_multiple_of(&num_traits::pow(pb, 9)) {
            return Some(p);
        }
    }
    None
}

/// Replaces `(a, b)` by `(a / p^8, b / p^9)` while some prime allows it;
/// `F(p x) / p^9` defines the same field.
pub fn normalize(a: &BigInt, b: &BigInt) -> TrinomialParams {
    let (mut a, mut b) = (a.clone(), b.clone());
    while let Some(p) = reducing_prime(&a, &b) {
        a /= num_traits::pow(BigInt::from(p), 8);
        b /= num_traits::pow(BigInt::from(p), 9);
    }
    TrinomialParams::new(a, b)
}

/// `x - u` with `u = -9b / (8a)` to precision `p^(v_p(disc) + 10)`, when `u`
/// is `p`-integral. This lift isolates the double root of `F mod p`.
pub fn shifted_root(a: &BigInt, b: &BigInt, p: u64) -> Option<IntPoly> {
    if a.is_zero() || !is_prime_u64(p) {
        return None;
    }
    let d = disc(a, b);
    let precision = val_unchecked(p, &d).finite()? + 10;
    let num = -BigInt::from(9) * b;
    let den = BigInt::from(8) * a;
    let v = val_unchecked(p, &den).finite()?;
    if !num.is_zero() && val_unchecked(p, &num).finite()? < v {
        return None;
    }
    let scale = prime_power(p, v);
    let inv = inv_mod_pk(p, &(&den / &scale), precision).ok()?;
    let u = ((num / scale) * inv).mod_floor(&prime_power(p, precision));
    Some(IntPoly::linear(&u))
}

/// One prime's entry in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeVerdict {
    pub prime: u64,
    pub nu: IndexValuation,
    /// Engine splitting, or the table's when the engine is not regular (or
    /// the other way round, depending on the prime; see [`nu2`], [`nu3`]).
    pub splitting: Option<SplittingType>,
    /// Splitting asserted by the matched case-table row.
    pub claimed: Option<SplittingType>,
    /// Splitting from Ore's theorem, when some lift is regular.
    pub engine: Option<SplittingType>,
    pub rule: String,
    pub warnings: Vec<String>,
}

impl PrimeVerdict {
    fn new(prime: u64, nu: IndexValuation, claimed: Option<SplittingType>, rule: String) -> Self {
        PrimeVerdict { prime, nu, splitting: None, claimed, engine: None, rule, warnings: Vec::new() }
    }

    /// Runs the engine and fills `splitting`, preferring the table claim
    /// when `claim_first`.
    fn with_engine(mut self, a: &BigInt, b: &BigInt, claim_first: bool) -> Self {
        let hints: Vec<IntPoly> = shifted_root(a, b, self.prime).into_iter().collect();
        self.engine = ore_decompose(&IntPoly::trinomial(a, b), self.prime, &hints).ok().map(|d| d.splitting);
        if let (Some(c), Some(e)) = (&self.claimed, &self.engine) {
            if c != e {
                self.warnings.push(format!(
                    "p={}: engine splitting {e} differs from the case-table splitting {c} ({})",
                    self.prime, self.rule
                ));
            }
        }
        self.splitting = if claim_first {
            self.claimed.clone().or_else(|| self.engine.clone())
        } else {
            self.engine.clone().or_else(|| self.claimed.clone())
        };
        self
    }
}

/// `v_p(i(K))` for `p >= 5`: always zero.
pub fn nup_large(_a: &BigInt, _b: &BigInt, p: u64) -> Result<IndexValuation> {
    crate::arith::check_prime(p)?;
    if p < 5 {
        return Err(Error::NotPrime(p));
    }
    Ok(IndexValuation::Exact(0))
}

/// A congruence row: `(a, b) mod modulus` in `classes`.
#[derive(Clone, Copy, Debug)]
pub struct Row {
    pub modulus: u64,
    pub classes: &'static [(u64, u64)],
    pub nu: IndexValuation,
    pub split: &'static [(u32, u32)],
}

impl Row {
    pub const fn new(modulus: u64, classes: &'static [(u64, u64)], nu: IndexValuation, split: &'static [(u32, u32)]) -> Self {
        Row { modulus, classes, nu, split }
    }

    pub fn splitting(&self) -> SplittingType {
        SplittingType::new(self.split.to_vec())
    }
}

pub(crate) const EX0: IndexValuation = IndexValuation::Exact(0);
pub(crate) const EX1: IndexValuation = IndexValuation::Exact(1);
pub(crate) const EX3: IndexValuation = IndexValuation::Exact(3);
pub(crate) const GE1: IndexValuation = IndexValuation::AtLeast(1);

/// First row containing `(a, b)`, with the matched class.
pub(crate) fn find_row<'a>(rows: &'a [Row], a: &BigInt, b: &BigInt) -> Option<(&'a Row, (u64, u64))> {
    rows.iter().find_map(|row| {
        let class = (residue(a, row.modulus), residue(b, row.modulus));
        row.classes.contains(&class).then_some((row, class))
    })
}

pub(crate) fn class_id(tag: &str, class: (u64, u64), modulus: u64) -> String {
    format!("{tag}:({},{})mod{modulus}", class.0, class.1)
}

/// `v_p` and the unit part of the discriminant.
pub(crate) fn disc_data(a: &BigInt, b: &BigInt, p: u64) -> Result<(u32, BigInt)> {
    let d = disc(a, b);
    let v = val(p, &d)?.finite().ok_or(Error::ZeroDiscriminant)?;
    Ok((v, unit_part(p, &d)?))
}

/// `i(K)` exactly, or a description of what is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexValue {
    Exact(#[serde(with = "decimal")] BigUint),
    Partial(String),
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Exact(n) => write!(f, "{n}"),
            IndexValue::Partial(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifierReport {
    /// The pair as given.
    pub input: TrinomialParams,
    /// The normalized pair all verdicts refer to.
    pub params: TrinomialParams,
    pub certificate: Certificate,
    #[serde(with = "decimal")]
    pub discriminant: BigInt,
    /// Entries for 2, 3 and every prime `p >= 5` found dividing the discriminant.
    pub entries: Vec<PrimeVerdict>,
    /// Whether `Z[alpha]` is the maximal order; `None` if undecided.
    pub monogenic_order: Option<bool>,
    /// First failing maximality condition, if any.
    pub maximality_detail: Option<String>,
    pub i_k: IndexValue,
    pub warnings: Vec<String>,
}

impl ClassifierReport {
    pub fn entry(&self, p: u64) -> Option<&PrimeVerdict> {
        self.entries.iter().find(|e| e.prime == p)
    }
}

fn index_value(entries: &[PrimeVerdict]) -> IndexValue {
    let mut exact = BigUint::one();
    let mut parts = Vec::new();
    let mut all_exact = true;
    for e in entries {
        match e.nu {
            IndexValuation::Exact(0) => {}
            IndexValuation::Exact(v) => {
                exact *= num_traits::pow(BigUint::from(e.prime), v as usize);
                parts.push(if v == 1 { e.prime.to_string() } else { format!("{}^{v}", e.prime) });
            }
            IndexValuation::AtLeast(v) => {
                all_exact = false;
                parts.push(format!("{}^(>={v})", e.prime));
            }
            IndexValuation::Unknown => {
                all_exact = false;
                parts.push(format!("{}^?", e.prime));
            }
        }
    }
    if all_exact {
        IndexValue::Exact(exact)
    } else {
        IndexValue::Partial(parts.join("*"))
    }
}

/// Full report for `x^9 + a x + b`.
pub fn classify(a: &BigInt, b: &BigInt) -> Result<ClassifierReport> {
    let input = TrinomialParams::new(a.clone(), b.clone());
    let params = normalize(a, b);
    let mut warnings = Vec::new();
    if params.a != input.a || params.b != input.b {
        warnings.push(format!("normalized (a, b) = ({a}, {b}) to ({}, {})", params.a, params.b));
    }
    let certificate = irreducibility_certificate(&params.a, &params.b);
    match &certificate {
        Certificate::Reducible(_) => return Err(Error::Reducible),
        Certificate::Unknown => warnings.push("irreducibility could not be certified".to_string()),
        Certificate::Proven(_) => {}
    }
    let (a, b) = (&params.a, &params.b);
    let discriminant = disc(a, b);
    let mut entries = vec![nu2(a, b)?, nu3(a, b)?];

    let (primes, stuck) = factor_partial(&discriminant)?;
    for c in &stuck {
        warnings.push(format!("discriminant cofactor {c} was not factored; its prime divisors are not listed"));
    }
    for (p, _) in primes {
        let Some(p) = p.to_u64() else {
            warnings.push(format!("prime divisor {p} of the discriminant exceeds 64 bits; v_p(i(K)) = 0 there"));
            continue;
        };
        if p < 5 {
            continue;
        }
        let v = PrimeVerdict::new(p, nup_large(a, b, p)?, None, "T2.4".into());
        entries.push(if p <= ENGINE_PRIME_LIMIT { v.with_engine(a, b, false) } else { v });
    }
    for e in &entries {
        warnings.extend(e.warnings.iter().cloned());
    }

    let (monogenic_order, maximality_detail) = match is_order_maximal(a, b) {
        Ok(m) => (Some(m.maximal), m.failed),
        Err(Error::Indeterminate(c)) => {
            warnings.push(format!("maximality undecided: could not factor {c}"));
            (None, None)
        }
        Err(e) => return Err(e),
    };
    let i_k = index_value(&entries);
    Ok(ClassifierReport { input, params, certificate, discriminant, entries, monogenic_order, maximality_detail, i_k, warnings })
}

/// Serde helpers writing big integers as decimal strings.
pub(crate) mod decimal {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}
