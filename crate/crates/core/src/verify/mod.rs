//! Independent oracles and sweeps over residue classes of `(a, b)`.
//!
//! Every sweep draws its lifts from a seeded ChaCha generator, so a report
//! is reproducible from `(p, modulus, lifts, seed)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::engstrom::{divides_index, nu_lookup, IndexValuation};
use crate::gf::count_monic_irreducible;
use crate::intpoly::IntPoly;
use crate::nonic::{
    self, irreducibility_certificate, is_locally_maximal, normalize, shifted_root, IndexValue, PrimeVerdict, Row,
};
use crate::polygon::{dedekind_divides, ore_decompose, SplittingType};

/// `disc(x^9 + a x + b)` as `(-1)^36 Res(F, F')`, the resultant taken as a
/// 17 x 17 Sylvester determinant.
pub fn disc_resultant(a: &BigInt, b: &BigInt) -> BigInt {
    let f = IntPoly::trinomial(a, b);
    let df = f.derivative();
    // coefficients from the leading one down
    let fc: Vec<BigInt> = f.coeffs().iter().rev().cloned().collect();
    let dc: Vec<BigInt> = df.coeffs().iter().rev().cloned().collect();
    let n = 17;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 0..8 {
        for (j, c) in fc.iter().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..9 {
        for (j, c) in dc.iter().enumerate() {
            m[8 + i][i + j] = c.clone();
        }
    }
    bareiss_det(m)
}

/// Fraction-free Gaussian elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub a: String,
    pub b: String,
    pub expected: String,
    pub got: String,
}

/// One checked (or skipped) lift, as written to CSV.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub a: String,
    pub b: String,
    pub prime: u64,
    pub nu: String,
    pub rule: String,
    pub splitting: String,
    pub status: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub suite: String,
    pub prime: Option<u64>,
    /// `(modulus for a, modulus for b)`.
    pub modulus: (u64, u64),
    pub total: u64,
    pub classes_checked: u64,
    pub mismatches: Vec<Mismatch>,
    /// Skip counts by reason.
    pub skipped: BTreeMap<String, u64>,
    /// Largest number of residue-degree-1 primes seen (agreement sweeps).
    pub max_degree_one_primes: Option<usize>,
    #[serde(skip)]
    pub records: Vec<CaseRecord>,
}

impl SweepReport {
    fn new(suite: &str, prime: Option<u64>, modulus: u64) -> Self {
        SweepReport { suite: suite.into(), prime, modulus: (modulus, modulus), ..Default::default() }
    }

    pub fn skipped_total(&self) -> u64 {
        self.skipped.values().sum()
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// `classes_checked + skipped + mismatches == total`.
    pub fn is_consistent(&self) -> bool {
        self.classes_checked + self.skipped_total() + self.mismatches.len() as u64 == self.total
    }

    /// Folds another report into this one (associative; used per class).
    pub fn merge(&mut self, other: SweepReport) {
        self.total += other.total;
        self.classes_checked += other.classes_checked;
        self.mismatches.extend(other.mismatches);
        for (k, v) in other.skipped {
            *self.skipped.entry(k).or_default() += v;
        }
        self.max_degree_one_primes = match (self.max_degree_one_primes, other.max_degree_one_primes) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (x, y) => x.or(y),
        };
        self.records.extend(other.records);
    }

    fn skip(&mut self, reason: &str, record: CaseRecord) {
        self.total += 1;
        *self.skipped.entry(reason.into()).or_default() += 1;
        self.records.push(CaseRecord { status: format!("skipped: {reason}"), ..record });
    }

    fn ok(&mut self, record: CaseRecord) {
        self.total += 1;
        self.classes_checked += 1;
        self.records.push(CaseRecord { status: "ok".into(), ..record });
    }

    fn mismatch(&mut self, m: Mismatch, record: CaseRecord) {
        self.total += 1;
        self.records.push(CaseRecord { status: format!("mismatch: expected {}, got {}", m.expected, m.got), ..record });
        self.mismatches.push(m);
    }
}

fn record(a: &BigInt, b: &BigInt, prime: u64) -> CaseRecord {
    CaseRecord {
        a: a.to_string(),
        b: b.to_string(),
        prime,
        nu: String::new(),
        rule: String::new(),
        splitting: String::new(),
        status: String::new(),
    }
}

/// Lifts per class that may be tried before a class counts as lacking a
/// certified lift.
const DRAWS_PER_LIFT: usize = 20;

/// Up to `lifts` certified-irreducible, normalized lifts of `(ra, rb) mod m`.
fn certified_lifts(ra: u64, rb: u64, m: u64, lifts: usize, rng: &mut ChaCha8Rng) -> Vec<(BigInt, BigInt)> {
    let span = (1_000_000 / m).max(4) as i64;
    let mut out = Vec::new();
    for _ in 0..lifts * DRAWS_PER_LIFT {
        if out.len() == lifts {
            break;
        }
        let a = BigInt::from(ra) + BigInt::from(m) * rng.gen_range(-span..=span);
        let b = BigInt::from(rb) + BigInt::from(m) * rng.gen_range(-span..=span);
        if !normalize(&a, &b).normalized || nonic::disc(&a, &b).is_zero() {
            continue;
        }
        if irreducibility_certificate(&a, &b).is_proven() {
            out.push((a, b));
        }
    }
    out
}

fn for_each_class(
    report: &mut SweepReport,
    p: u64,
    m: u64,
    lifts: usize,
    seed: u64,
    filter: &dyn Fn(u64, u64) -> bool,
    mut check: impl FnMut(&mut SweepReport, &BigInt, &BigInt),
) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for ra in 0..m {
        for rb in 0..m {
            if !filter(ra, rb) {
                continue;
            }
            let found = certified_lifts(ra, rb, m, lifts, &mut rng);
            if found.is_empty() {
                report.skip("no certified lift", record(&BigInt::from(ra), &BigInt::from(rb), p));
            }
            for (a, b) in &found {
                check(report, a, b);
            }
        }
    }
}

/// Local maximality by the explicit conditions against Dedekind's criterion,
/// over every class `(a, b) mod modulus`.
pub fn sweep_dedekind(p: u64, modulus: u64, lifts: usize, seed: u64) -> SweepReport {
    sweep_dedekind_filtered(p, modulus, lifts, seed, &|_, _| true)
}

pub fn sweep_dedekind_filtered(
    p: u64,
    modulus: u64,
    lifts: usize,
    seed: u64,
    filter: &dyn Fn(u64, u64) -> bool,
) -> SweepReport {
    let mut report = SweepReport::new("dedekind", Some(p), modulus);
    for_each_class(&mut report, p, modulus, lifts, seed, filter, |report, a, b| {
        let f = IntPoly::trinomial(a, b);
        let rec = record(a, b, p);
        let Ok(divides) = dedekind_divides(&f, p) else {
            report.skip("dedekind failed", rec);
            return;
        };
        let local = is_locally_maximal(a, b, p);
        let rec = CaseRecord { nu: if divides { "index>0".into() } else { "index=0".into() }, ..rec };
        if local == !divides {
            report.ok(rec);
        } else {
            let show = |m: bool| if m { "maximal" } else { "not maximal" };
            report.mismatch(
                Mismatch { a: a.to_string(), b: b.to_string(), expected: show(!divides).into(), got: show(local).into() },
                rec,
            );
        }
    });
    report
}

/// The classifier's verdict at `p`, with the engine run.
fn verdict(a: &BigInt, b: &BigInt, p: u64) -> Option<PrimeVerdict> {
    match p {
        2 => nonic::nu2(a, b).ok(),
        3 => nonic::nu3(a, b).ok(),
        _ => {
            let hints: Vec<IntPoly> = shifted_root(a, b, p).into_iter().collect();
            let engine = ore_decompose(&IntPoly::trinomial(a, b), p, &hints).ok().map(|d| d.splitting);
            Some(PrimeVerdict {
                prime: p,
                nu: IndexValuation::Exact(0),
                splitting: engine.clone(),
                claimed: None,
                engine,
                rule: "T2.4".into(),
                warnings: Vec::new(),
            })
        }
    }
}

/// Checks one verdict against its own engine splitting.
fn agreement_problem(v: &PrimeVerdict, engine: &SplittingType) -> Option<(String, String)> {
    let p = v.prime;
    if engine.mass() != 9 {
        return Some(("sum e*f = 9".into(), format!("{engine}")));
    }
    if let Some(c) = &v.claimed {
        if c != engine {
            return Some((format!("{c}"), format!("{engine}")));
        }
    }
    let divides = divides_index(engine, p);
    if let Some(claim) = v.nu.divides() {
        if claim != divides {
            return Some((format!("nu {}", v.nu), format!("divides_index = {divides}")));
        }
    }
    if let (IndexValuation::Exact(w), IndexValuation::Exact(x)) = (v.nu, nu_lookup(engine, p)) {
        if w != x {
            return Some((format!("nu {w}"), format!("nu {x}")));
        }
    }
    if p >= 5 {
        for f in 1..=9u32 {
            let n = count_monic_irreducible(p, f);
            if num_bigint::BigUint::from(engine.count_of_degree(f)) > n {
                return Some((format!("at most {n} primes of degree {f}"), format!("{engine}")));
            }
        }
    }
    None
}

/// Engine splitting against the case tables over every class mod `modulus`.
pub fn sweep_agreement(p: u64, modulus: u64, lifts: usize, seed: u64) -> SweepReport {
    sweep_agreement_filtered(p, modulus, lifts, seed, &|_, _| true)
}

pub fn sweep_agreement_filtered(
    p: u64,
    modulus: u64,
    lifts: usize,
    seed: u64,
    filter: &dyn Fn(u64, u64) -> bool,
) -> SweepReport {
    let mut report = SweepReport::new("agreement", Some(p), modulus);
    for_each_class(&mut report, p, modulus, lifts, seed, filter, |report, a, b| {
        let rec = record(a, b, p);
        let Some(v) = verdict(a, b, p) else {
            report.skip("unclassified", rec);
            return;
        };
        let rec = CaseRecord {
            nu: v.nu.to_string(),
            rule: v.rule.clone(),
            splitting: v.engine.as_ref().map(|s| s.to_string()).unwrap_or_default(),
            ..rec
        };
        let Some(engine) = &v.engine else {
            report.skip("engine not regular", rec);
            return;
        };
        let ones = engine.count_of_degree(1);
        report.max_degree_one_primes = Some(report.max_degree_one_primes.map_or(ones, |m| m.max(ones)));
        match agreement_problem(&v, engine) {
            None => report.ok(rec),
            Some((expected, got)) => {
                report.mismatch(Mismatch { a: a.to_string(), b: b.to_string(), expected, got }, rec)
            }
        }
    });
    report
}

/// The seven worked examples and their index values; `None` means only
/// `2 | i(K)` is asserted.
pub const WORKED_EXAMPLES: [(i64, i64, Option<u32>); 7] = [
    (51, 122, Some(1)),
    (35, 20, None),
    (1392, 768, Some(2)),
    (126, 40130, Some(3)),
    (15381, 6634, Some(6)),
    (183, 296, Some(8)),
    (7335, 24184, Some(24)),
];

pub fn check_worked_examples() -> SweepReport {
    let mut report = SweepReport::new("examples", None, 0);
    report.modulus = (0, 0);
    for (a, b, want) in WORKED_EXAMPLES {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let rec = record(&a, &b, 0);
        let expected = want.map_or("2 | i(K)".to_string(), |w| format!("i(K) = {w}"));
        let got = match nonic::classify(&a, &b) {
            Err(e) => Err(e.to_string()),
            Ok(r) => {
                let two = r.entry(2).map(|e| e.nu.divides() == Some(true)).unwrap_or(false);
                let ok = match (&r.i_k, want) {
                    (IndexValue::Exact(n), Some(w)) => *n == w.into(),
                    (_, None) => two,
                    _ => false,
                };
                if ok {
                    Ok(r.i_k.to_string())
                } else {
                    Err(format!("i(K) = {}", r.i_k))
                }
            }
        };
        let rec = CaseRecord { rule: expected.clone(), ..rec };
        match got {
            Ok(ik) => report.ok(CaseRecord { nu: ik, ..rec }),
            Err(got) => report.mismatch(Mismatch { a: a.to_string(), b: b.to_string(), expected, got }, rec),
        }
    }
    report
}

/// Internal consistency of every table row that asserts a splitting:
/// `sum e*f = 9` and the Engstrom verdict matching the row's valuation.
pub fn check_tables() -> SweepReport {
    let mut report = SweepReport::new("tables", None, 0);
    let tables: [(&str, u64, &[Row]); 6] = [
        ("nu2:mod16", 2, nonic::TABLE_3),
        ("nu2:T6", 2, nonic::TABLE_6),
        ("nu2:T7", 2, nonic::TABLE_7),
        ("nu2:T8", 2, nonic::TABLE_8),
        ("nu3:x-1", 3, nonic::TABLE_X_MINUS_1),
        ("nu3:T9", 3, nonic::TABLE_9),
    ];
    for (name, p, rows) in tables {
        for (i, row) in rows.iter().enumerate() {
            let rec = CaseRecord {
                a: String::new(),
                b: String::new(),
                prime: p,
                nu: row.nu.to_string(),
                rule: format!("{name}#{i}"),
                splitting: String::new(),
                status: String::new(),
            };
            if row.split.is_empty() {
                report.skip("row asserts no splitting", rec);
                continue;
            }
            let s = row.splitting();
            let rec = CaseRecord { splitting: s.to_string(), ..rec };
            let problem = if s.mass() != 9 {
                Some(("sum e*f = 9".to_string(), s.mass().to_string()))
            } else if row.nu.divides() != Some(divides_index(&s, p)) {
                Some((format!("nu {}", row.nu), format!("divides_index = {}", divides_index(&s, p))))
            } else {
                match (row.nu, nu_lookup(&s, p)) {
                    (IndexValuation::Exact(w), IndexValuation::Exact(x)) if w != x => {
                        Some((format!("nu {w}"), format!("nu {x}")))
                    }
                    _ => None,
                }
            };
            match problem {
                None => report.ok(rec),
                Some((expected, got)) => report.mismatch(Mismatch { a: rec.rule.clone(), b: String::new(), expected, got }, rec),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(disc_resultant(&big(0), &big(1)), BigInt::from(3u64.pow(18)));
        assert_eq!(disc_resultant(&big(1), &big(1)), BigInt::from((1u64 << 24) + 3u64.pow(18)));
        assert_eq!(disc_resultant(&big(51), &big(122)), nonic::disc(&big(51), &big(122)));
        assert_eq!(disc_resultant(&big(-9), &big(8)), BigInt::zero());
    }

    #[test]
    fn resultant_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (a, b) = (big(rng.gen_range(-1_000_000..=1_000_000)), big(rng.gen_range(-1_000_000..=1_000_000)));
            assert_eq!(disc_resultant(&a, &b), nonic::disc(&a, &b), "({a},{b})");
        }
    }

    #[test]
    fn examples_pass() {
        let r = check_worked_examples();
        assert!(r.passed(), "{:?}", r.mismatches);
        assert_eq!(r.classes_checked, 7);
    }

    #[test]
    fn tables_pass() {
        let r = check_tables();
        assert!(r.passed(), "{:?}", r.mismatches);
        assert!(r.is_consistent());
    }

    #[test]
    fn small_sweeps() {
        for (p, m) in [(2, 4), (3, 9)] {
            let r = sweep_dedekind(p, m, 2, 1);
            assert!(r.passed(), "{:?}", r.mismatches);
            assert!(r.is_consistent());
        }
        let r = sweep_agreement(5, 5, 1, 1);
        assert!(r.passed(), "{:?}", r.mismatches);
        assert!(r.is_consistent());
    }

    #[test]
    fn sweeps_are_reproducible() {
        let x = sweep_agreement(7, 7, 1, 42);
        let y = sweep_agreement(7, 7, 1, 42);
        assert_eq!(x, y);
    }

    #[test]
    fn merge_adds_counts() {
        let mut x = sweep_dedekind(2, 2, 1, 3);
        let y = sweep_dedekind(2, 2, 1, 4);
        let (tx, ty) = (x.total, y.total);
        x.merge(y);
        assert_eq!(x.total, tx + ty);
        assert!(x.is_consistent());
    }
}
