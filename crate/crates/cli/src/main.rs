//! `nonic-index`: classify `x^9 + ax + b`, inspect Newton polygons, run the
//! verification sweeps.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use nonic_index::arith::is_prime_u64;
use nonic_index::nonic::{shifted_root, PrimeVerdict};
use nonic_index::polygon::{analyze_phi, PhiAnalysis};
use nonic_index::verify::{self, SweepReport};
use nonic_index::{classify, ClassifierReport, Error, IndexValuation, IntPoly};

const SCHEMA_VERSION: &str = "1";

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_REDUCIBLE: u8 = 3;

#[derive(Parser)]
#[command(name = "nonic-index", version, about = "Index of nonic number fields defined by x^9 + ax + b")]
struct Cli {
    /// Emit a single JSON envelope on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// v_p(i(K)) for p = 2, 3 and every other prime dividing the discriminant.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        /// Only report this prime.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// The phi-Newton polygon of F at p, its sides and residual polynomials.
    Polygon {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum)]
        phi: Phi,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        prime: Option<u64>,
        /// Residue classes are taken mod this; defaults to prime^2.
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long, default_value_t = 3)]
        lifts: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write one row per checked lift.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Phi {
    #[value(name = "x")]
    X,
    #[value(name = "x-1")]
    XMinus1,
    #[value(name = "x+1")]
    XPlus1,
    /// `x - u` with `u = -9b / (8a)`.
    Shifted,
}

#[derive(Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum Suite {
    Examples,
    Dedekind,
    Agreement,
    Tables,
}

/// A failed run: exit code and message.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, kind: "usage", message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match e {
            Error::Reducible => (EXIT_REDUCIBLE, "reducible"),
            Error::Unclassified { .. } => (EXIT_MISMATCH, "unclassified"),
            Error::NotPrime(_) | Error::PrimeTooLarge(_) | Error::PhiNotAFactor(_) | Error::NotMonic(_) => {
                (EXIT_USAGE, "usage")
            }
            _ => (EXIT_MISMATCH, "error"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

/// What a command produced: the JSON payload, a text rendering, warnings,
/// and the exit code.
struct Output {
    result: Value,
    text: String,
    warnings: Vec<String>,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, input) = describe(&cli.command);
    let outcome = match &cli.command {
        Command::Classify { a, b, prime } => run_classify(a, b, *prime),
        Command::Polygon { a, b, p, phi } => run_polygon(a, b, *p, *phi),
        Command::Verify { suite, prime, modulus, lifts, seed, csv } => {
            run_verify(*suite, *prime, *modulus, *lifts, *seed, csv.as_deref())
        }
    };
    let failed = outcome.is_err();
    let (result, text, warnings, code) = match outcome {
        Ok(o) => (o.result, o.text, o.warnings, o.code),
        Err(f) => {
            let result = json!({ "error": { "kind": f.kind, "message": f.message } });
            (result, format!("error: {}", f.message), Vec::new(), f.code)
        }
    };
    if cli.json {
        let envelope = json!({
            "schema_version": SCHEMA_VERSION,
            "command": name,
            "input": input,
            "result": result,
            "warnings": warnings,
        });
        emit(&serde_json::to_string_pretty(&envelope).expect("JSON values serialize"));
    } else {
        for w in &warnings {
            eprintln!("warning: {w}");
        }
        if failed {
            eprintln!("{text}");
        } else {
            emit(&text);
        }
    }
    ExitCode::from(code)
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn describe(c: &Command) -> (&'static str, Value) {
    match c {
        Command::Classify { a, b, prime } => ("classify", json!({ "a": a.to_string(), "b": b.to_string(), "prime": prime })),
        Command::Polygon { a, b, p, phi } => {
            ("polygon", json!({ "a": a.to_string(), "b": b.to_string(), "p": p, "phi": phi_name(*phi) }))
        }
        Command::Verify { suite, prime, modulus, lifts, seed, csv } => (
            "verify",
            json!({ "suite": suite, "prime": prime, "modulus": modulus, "lifts": lifts, "seed": seed, "csv": csv }),
        ),
    }
}

fn phi_name(phi: Phi) -> &'static str {
    match phi {
        Phi::X => "x",
        Phi::XMinus1 => "x-1",
        Phi::XPlus1 => "x+1",
        Phi::Shifted => "shifted",
    }
}

fn verdict_line(e: &PrimeVerdict) -> String {
    let split = e.splitting.as_ref().map_or("not computed".to_string(), |s| s.to_string());
    format!("  p = {}: v_p(i(K)) = {}  splitting {split}  [{}]", e.prime, e.nu, e.rule)
}

fn classify_text(r: &ClassifierReport) -> String {
    let mut lines = vec![format!("F = {}", r.params)];
    lines.push(format!("disc = {}", r.discriminant));
    lines.push(match &r.certificate {
        nonic_index::nonic::Certificate::Proven(why) => format!("irreducible ({why})"),
        nonic_index::nonic::Certificate::Reducible(why) => format!("reducible ({why})"),
        nonic_index::nonic::Certificate::Unknown => "irreducibility not certified".to_string(),
    });
    lines.extend(r.entries.iter().map(verdict_line));
    lines.push(format!("i(K) = {}", r.i_k));
    lines.push(match (r.monogenic_order, &r.maximality_detail) {
        (Some(true), _) => "Z[alpha] is the ring of integers".to_string(),
        (Some(false), Some(d)) => format!("Z[alpha] is not maximal: {d}"),
        (Some(false), None) => "Z[alpha] is not maximal".to_string(),
        (None, _) => "maximality of Z[alpha] undecided".to_string(),
    });
    lines.join("\n")
}

fn run_classify(a: &BigInt, b: &BigInt, prime: Option<u64>) -> Result<Output, Failure> {
    if let Some(p) = prime {
        if !is_prime_u64(p) {
            return Err(Failure::usage(format!("{p} is not a prime")));
        }
    }
    let report = classify(a, b)?;
    let mut warnings = report.warnings.clone();
    for e in &report.entries {
        if let IndexValuation::AtLeast(v) = e.nu {
            warnings.push(format!("p={}: only v_p(i(K)) >= {v} is determined", e.prime));
        }
    }
    let Some(p) = prime else {
        let text = classify_text(&report);
        return Ok(Output { result: serde_json::to_value(&report).expect("report serializes"), text, warnings, code: 0 });
    };
    let entry = report.entry(p).cloned().unwrap_or_else(|| PrimeVerdict {
        prime: p,
        nu: IndexValuation::Exact(0),
        splitting: None,
        claimed: None,
        engine: None,
        rule: "p-nmid-disc".into(),
        warnings: Vec::new(),
    });
    let text = format!("F = {}\n{}", report.params, verdict_line(&entry));
    Ok(Output { result: serde_json::to_value(&entry).expect("entry serializes"), text, warnings, code: 0 })
}

fn lift(a: &BigInt, b: &BigInt, p: u64, phi: Phi) -> Result<IntPoly, Failure> {
    Ok(match phi {
        Phi::X => IntPoly::linear(&BigInt::from(0)),
        Phi::XMinus1 => IntPoly::linear(&BigInt::from(1)),
        Phi::XPlus1 => IntPoly::linear(&BigInt::from(-1)),
        Phi::Shifted => shifted_root(a, b, p)
            .ok_or_else(|| Failure::usage("-9b/(8a) is not p-integral (or the discriminant is zero)"))?,
    })
}

fn polygon_json(an: &PhiAnalysis, p: u64) -> Value {
    let sides: Vec<Value> = an
        .sides
        .iter()
        .map(|s| {
            json!({
                "start": s.side.start,
                "end": s.side.end,
                "h": s.side.h,
                "e": s.side.e,
                "length": s.side.length,
                "degree": s.side.degree,
                "residual": s.residual.display_var("y").to_string(),
                "factors": s.factors.display_var("y").to_string(),
                "squarefree": s.factors.is_squarefree(),
            })
        })
        .collect();
    let vals: Vec<Option<u32>> = an.expansion.valuations(p).into_iter().map(|v| v.finite()).collect();
    json!({
        "phi": an.phi.to_string(),
        "valuations": vals,
        "vertices": an.polygon.vertices,
        "sides": sides,
        "multiplicity": an.multiplicity(),
        "index": an.index,
        "regular": an.is_regular(),
        "primes": if an.is_regular() { Some(an.primes()) } else { None },
    })
}

fn polygon_text(an: &PhiAnalysis, p: u64) -> String {
    let vals: Vec<String> = an.expansion.valuations(p).iter().map(|v| v.to_string()).collect();
    let mut lines = vec![
        format!("phi = {}", an.phi),
        format!("v_{p}(a_i) = [{}]", vals.join(", ")),
        format!("{}", an.polygon),
    ];
    for s in &an.sides {
        lines.push(format!("  side {}", s.side));
        lines.push(format!("    residual {} = {}", s.residual.display_var("y"), s.factors.display_var("y")));
    }
    lines.push(format!("ind = {}, {}", an.index, if an.is_regular() { "regular" } else { "not regular" }));
    if an.is_regular() {
        let ps: Vec<String> = an.primes().iter().map(|(e, f)| format!("(e={e}, f={f})")).collect();
        lines.push(format!("primes {}", ps.join(" ")));
    }
    lines.join("\n")
}

fn run_polygon(a: &BigInt, b: &BigInt, p: u64, phi: Phi) -> Result<Output, Failure> {
    if ![2, 3, 5, 7].contains(&p) {
        return Err(Failure::usage("p must be one of 2, 3, 5, 7"));
    }
    let f = IntPoly::trinomial(a, b);
    let phi = lift(a, b, p, phi)?;
    let an = analyze_phi(&f, &phi, p).map_err(|e| match e {
        Error::PhiNotAFactor(_) => {
            Failure::usage(format!("{phi} does not reduce to a factor of {f} modulo {p}; pick another --phi"))
        }
        e => e.into(),
    })?;
    Ok(Output { result: polygon_json(&an, p), text: polygon_text(&an, p), warnings: Vec::new(), code: 0 })
}

fn report_text(r: &SweepReport) -> String {
    let mut lines = vec![format!(
        "{} sweep{}{}: {} checked, {} mismatches, {} skipped",
        r.suite,
        r.prime.map_or(String::new(), |p| format!(" p={p}")),
        if r.modulus.0 > 0 { format!(" mod {}", r.modulus.0) } else { String::new() },
        r.classes_checked,
        r.mismatches.len(),
        r.skipped_total()
    )];
    for (why, n) in &r.skipped {
        lines.push(format!("  skipped {n}: {why}"));
    }
    for m in r.mismatches.iter().take(20) {
        lines.push(format!("  MISMATCH ({}, {}): expected {}, got {}", m.a, m.b, m.expected, m.got));
    }
    if let Some(n) = r.max_degree_one_primes {
        lines.push(format!("  at most {n} primes of residue degree 1 seen"));
    }
    lines.join("\n")
}

fn run_verify(
    suite: Suite,
    prime: Option<u64>,
    modulus: Option<u64>,
    lifts: usize,
    seed: u64,
    csv: Option<&std::path::Path>,
) -> Result<Output, Failure> {
    let allowed: &[u64] = match suite {
        Suite::Dedekind => &[2, 3],
        Suite::Agreement => &[2, 3, 5, 7],
        _ => &[],
    };
    let report = if allowed.is_empty() {
        match suite {
            Suite::Examples => verify::check_worked_examples(),
            _ => verify::check_tables(),
        }
    } else {
        let p = prime.ok_or_else(|| Failure::usage("--prime is required for this suite"))?;
        if !allowed.contains(&p) {
            return Err(Failure::usage(format!("--prime must be one of {allowed:?}")));
        }
        let m = modulus.unwrap_or(p * p);
        if m == 0 || m > 4096 {
            return Err(Failure::usage("--modulus must be in 1..=4096"));
        }
        if lifts == 0 {
            return Err(Failure::usage("--lifts must be positive"));
        }
        if suite == Suite::Dedekind {
            verify::sweep_dedekind(p, m, lifts, seed)
        } else {
            verify::sweep_agreement(p, m, lifts, seed)
        }
    };
    if let Some(path) = csv {
        write_csv(path, &report).map_err(|e| Failure { code: EXIT_USAGE, kind: "io", message: e.to_string() })?;
    }
    let code = if report.passed() { 0 } else { EXIT_MISMATCH };
    Ok(Output {
        result: serde_json::to_value(&report).expect("report serializes"),
        text: report_text(&report),
        warnings: Vec::new(),
        code,
    })
}

fn write_csv(path: &std::path::Path, r: &SweepReport) -> Result<(), Box<dyn std::error::Error>> {
    let mut w = csv::Writer::from_path(path)?;
    for rec in &r.records {
        w.serialize(rec)?;
    }
    w.flush()?;
    Ok(())
}
