use num_bigint::BigInt;
use num_traits::Zero;

use nonic_index::nonic::{self, PrimeVerdict, TrinomialParams};
use nonic_index::verify::{check_worked_examples, check_tables, sweep_agreement, sweep_dedekind, sweep_dedekind_filtered};
use nonic_index::{divides_index, disc};

/// Engine splitting and divisibility against the case tables on one pair.
fn consistent(v: &PrimeVerdict) -> Result<bool, String> {
    let Some(engine) = &v.engine else { return Ok(false) };
    if let Some(c) = &v.claimed {
        if c != engine {
            return Err(format!("{}: table {c}, engine {engine}", v.rule));
        }
    }
    if let Some(d) = v.nu.divides() {
        if d != divides_index(engine, v.prime) {
            return Err(format!("{}: nu {}, engine {engine}", v.rule, v.nu));
        }
    }
    Ok(true)
}

/// Every pair in the box, shifted so that `b != 0`, checked wherever the
/// engine is regular.
fn box_sweep(p: u64, a_range: u64, b_range: u64, shift: i64, nu: fn(&BigInt, &BigInt) -> nonic_index::Result<PrimeVerdict>) {
    let (mut regular, mut failures) = (0u64, Vec::new());
    for a in 0..a_range as i64 {
        for b in 0..b_range as i64 {
            let (a, b) = (BigInt::from(a + shift * 3), BigInt::from(b + shift * 5));
            if !TrinomialParams::new(a.clone(), b.clone()).normalized || disc(&a, &b).is_zero() {
                continue;
            }
            match nu(&a, &b).map_err(|e| e.to_string()).and_then(|v| consistent(&v)) {
                Ok(true) => regular += 1,
                Ok(false) => {}
                Err(e) => failures.push(format!("({a},{b}) {e}")),
            }
        }
    }
    assert!(failures.is_empty(), "p={p}: {} failures, first {:?}", failures.len(), &failures[..failures.len().min(5)]);
    assert!(regular > 0);
}

#[test]
fn engine_matches_tables_at_3() {
    box_sweep(3, 243, 243, 243, nonic::nu3);
}

#[test]
fn engine_matches_tables_at_2() {
    box_sweep(2, 1024, 512, 1024, nonic::nu2);
}

#[test]
fn verify_suites_report_no_mismatches() {
    for r in [
        check_worked_examples(),
        check_tables(),
        sweep_dedekind(2, 4, 10, 1),
        sweep_dedekind(3, 9, 10, 1),
        sweep_dedekind_filtered(2, 2, 1, 1, &|a, b| a == 0 && b == 0),
        sweep_agreement(3, 27, 2, 1),
        sweep_agreement(2, 16, 4, 1),
        sweep_agreement(5, 5, 3, 1),
        sweep_agreement(7, 7, 3, 1),
    ] {
        assert!(r.passed(), "{} p={:?}: {:?}", r.suite, r.prime, r.mismatches);
        assert!(r.is_consistent(), "{}", r.suite);
        assert!(r.classes_checked > 0, "{}", r.suite);
    }
}

/// In the classes `(1, b != 0) mod 5` where 5 divides the discriminant,
/// at most two primes above 5 have residue degree 1.
#[test]
fn at_most_two_linear_primes_above_5_when_a_is_1() {
    let r = sweep_dedekind(5, 5, 1, 1);
    assert!(r.passed());
    let mut seen = 0;
    for a in (1..2000i64).step_by(5) {
        for b in (1..200i64).filter(|b| b % 5 != 0) {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            if !(disc(&a, &b) % 5u32).is_zero() {
                continue;
            }
            let hints: Vec<_> = nonic::shifted_root(&a, &b, 5).into_iter().collect();
            let Ok(d) = nonic_index::polygon::ore_decompose(&nonic_index::IntPoly::trinomial(&a, &b), 5, &hints) else {
                continue;
            };
            seen += 1;
            assert!(d.splitting.count_of_degree(1) <= 2, "({a},{b}) {}", d.splitting);
        }
    }
    assert!(seen > 100);
}
