//! Python bindings: `import pynonic`.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use nonic_index::nonic::{self, IndexValue};
use nonic_index::polygon::{analyze_phi, ore_decompose};
use nonic_index::verify::{self, SweepReport};
use nonic_index::{Error, IndexValuation, IntPoly, SplittingType};

create_exception!(pynonic, NonicError, PyException);
create_exception!(pynonic, ReducibleError, NonicError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Reducible => ReducibleError::new_err(e.to_string()),
        Error::NotPrime(_) | Error::PrimeTooLarge(_) | Error::PhiNotAFactor(_) => PyValueError::new_err(e.to_string()),
        e => NonicError::new_err(e.to_string()),
    }
}

fn json_to_py(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn nu_value(nu: IndexValuation) -> Option<u32> {
    nu.exact()
}

/// One prime's verdict.
#[pyclass(module = "pynonic", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PrimeVerdict {
    prime: u64,
    /// Exact `v_p(i(K))`, or `None` when only a bound is known.
    nu: Option<u32>,
    /// e.g. `"1"`, `">=1"`.
    nu_text: String,
    rule: String,
    splitting: Option<Vec<(u32, u32)>>,
    claimed: Option<Vec<(u32, u32)>>,
    engine: Option<Vec<(u32, u32)>>,
    warnings: Vec<String>,
}

fn pairs(s: &Option<SplittingType>) -> Option<Vec<(u32, u32)>> {
    s.as_ref().map(|s| s.primes().to_vec())
}

impl From<&nonic::PrimeVerdict> for PrimeVerdict {
    fn from(v: &nonic::PrimeVerdict) -> Self {
        PrimeVerdict {
            prime: v.prime,
            nu: nu_value(v.nu),
            nu_text: v.nu.to_string(),
            rule: v.rule.clone(),
            splitting: pairs(&v.splitting),
            claimed: pairs(&v.claimed),
            engine: pairs(&v.engine),
            warnings: v.warnings.clone(),
        }
    }
}

#[pymethods]
impl PrimeVerdict {
    fn __repr__(&self) -> String {
        format!("PrimeVerdict(prime={}, nu={}, rule={:?})", self.prime, self.nu_text, self.rule)
    }
}

/// Classification of `x^9 + a x + b`.
#[pyclass(module = "pynonic", frozen)]
struct Report {
    inner: nonic::ClassifierReport,
}

#[pymethods]
impl Report {
    #[getter]
    fn a(&self) -> BigInt {
        self.inner.params.a.clone()
    }

    #[getter]
    fn b(&self) -> BigInt {
        self.inner.params.b.clone()
    }

    #[getter]
    fn discriminant(&self) -> BigInt {
        self.inner.discriminant.clone()
    }

    /// `i(K)` when every valuation is exact, else `None`.
    #[getter]
    fn index(&self) -> Option<BigInt> {
        match &self.inner.i_k {
            IndexValue::Exact(n) => Some(BigInt::from(n.clone())),
            IndexValue::Partial(_) => None,
        }
    }

    #[getter]
    fn index_text(&self) -> String {
        self.inner.i_k.to_string()
    }

    #[getter]
    fn irreducible(&self) -> Option<bool> {
        match self.inner.certificate {
            nonic::Certificate::Proven(_) => Some(true),
            nonic::Certificate::Reducible(_) => Some(false),
            nonic::Certificate::Unknown => None,
        }
    }

    #[getter]
    fn monogenic_order(&self) -> Option<bool> {
        self.inner.monogenic_order
    }

    #[getter]
    fn entries(&self) -> Vec<PrimeVerdict> {
        self.inner.entries.iter().map(PrimeVerdict::from).collect()
    }

    #[getter]
    fn warnings(&self) -> Vec<String> {
        self.inner.warnings.clone()
    }

    fn entry(&self, p: u64) -> Option<PrimeVerdict> {
        self.inner.entry(p).map(PrimeVerdict::from)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("report serializes")
    }

    fn __repr__(&self) -> String {
        format!("Report(a={}, b={}, index={})", self.inner.params.a, self.inner.params.b, self.inner.i_k)
    }
}

#[pyfunction]
fn classify(a: BigInt, b: BigInt) -> PyResult<Report> {
    nonic_index::classify(&a, &b).map(|inner| Report { inner }).map_err(to_py)
}

#[pyfunction]
fn disc(a: BigInt, b: BigInt) -> BigInt {
    nonic::disc(&a, &b)
}

/// The discriminant recomputed as a Sylvester resultant.
#[pyfunction]
fn disc_resultant(a: BigInt, b: BigInt) -> BigInt {
    verify::disc_resultant(&a, &b)
}

/// `v_p(i(K))` by the case rules for p = 2, 3; 0 for other primes.
#[pyfunction]
fn nu(a: BigInt, b: BigInt, p: u64) -> PyResult<PrimeVerdict> {
    let v = match p {
        2 => nonic::nu2(&a, &b),
        3 => nonic::nu3(&a, &b),
        _ => {
            let nu = nonic::nup_large(&a, &b, p).map_err(to_py)?;
            let engine = splitting_of(&a, &b, p).ok();
            Ok(nonic::PrimeVerdict {
                prime: p,
                nu,
                splitting: engine.clone(),
                claimed: None,
                engine,
                rule: "T2.4".into(),
                warnings: Vec::new(),
            })
        }
    };
    v.map(|v| PrimeVerdict::from(&v)).map_err(to_py)
}

fn splitting_of(a: &BigInt, b: &BigInt, p: u64) -> nonic_index::Result<SplittingType> {
    let hints: Vec<IntPoly> = nonic::shifted_root(a, b, p).into_iter().collect();
    ore_decompose(&IntPoly::trinomial(a, b), p, &hints).map(|d| d.splitting)
}

/// `[(e, f), ...]` for `p Z_K`, by Ore's theorem; raises if no tried lift
/// is regular.
#[pyfunction]
fn splitting(a: BigInt, b: BigInt, p: u64) -> PyResult<Vec<(u32, u32)>> {
    splitting_of(&a, &b, p).map(|s| s.primes().to_vec()).map_err(to_py)
}

#[pyfunction]
fn divides_index(primes: Vec<(u32, u32)>, p: u64) -> bool {
    nonic_index::divides_index(&SplittingType::new(primes), p)
}

/// Exact `v_p(i(K))` from a splitting type when known, else `None`.
#[pyfunction]
fn nu_lookup(primes: Vec<(u32, u32)>, p: u64) -> Option<u32> {
    nonic_index::nu_lookup(&SplittingType::new(primes), p).exact()
}

/// The `phi`-polygon with `phi = x - r`, as a dict.
#[pyfunction]
fn polygon(py: Python<'_>, a: BigInt, b: BigInt, p: u64, r: BigInt) -> PyResult<Py<PyAny>> {
    let an = analyze_phi(&IntPoly::trinomial(&a, &b), &IntPoly::linear(&r), p).map_err(to_py)?;
    let sides: Vec<serde_json::Value> = an
        .sides
        .iter()
        .map(|s| {
            serde_json::json!({
                "start": s.side.start, "end": s.side.end, "h": s.side.h, "e": s.side.e,
                "length": s.side.length, "degree": s.side.degree,
                "residual": s.residual.display_var("y").to_string(),
                "factors": s.factors.display_var("y").to_string(),
            })
        })
        .collect();
    let value = serde_json::json!({
        "phi": an.phi.to_string(),
        "vertices": an.polygon.vertices,
        "sides": sides,
        "index": an.index,
        "regular": an.is_regular(),
    });
    json_to_py(py, &value.to_string())
}

#[pyfunction]
fn is_order_maximal(a: BigInt, b: BigInt) -> PyResult<bool> {
    nonic::is_order_maximal(&a, &b).map(|m| m.maximal).map_err(to_py)
}

fn report(py: Python<'_>, r: &SweepReport) -> PyResult<Py<PyAny>> {
    json_to_py(py, &serde_json::to_string(r).expect("report serializes"))
}

#[pyfunction]
fn check_worked_examples(py: Python<'_>) -> PyResult<Py<PyAny>> {
    report(py, &verify::check_worked_examples())
}

#[pyfunction]
#[pyo3(signature = (p, modulus, lifts = 3, seed = 1))]
fn sweep_dedekind(py: Python<'_>, p: u64, modulus: u64, lifts: usize, seed: u64) -> PyResult<Py<PyAny>> {
    report(py, &verify::sweep_dedekind(p, modulus, lifts, seed))
}

#[pyfunction]
#[pyo3(signature = (p, modulus, lifts = 3, seed = 1))]
fn sweep_agreement(py: Python<'_>, p: u64, modulus: u64, lifts: usize, seed: u64) -> PyResult<Py<PyAny>> {
    if ![2, 3, 5, 7].contains(&p) {
        return Err(PyValueError::new_err("p must be one of 2, 3, 5, 7"));
    }
    report(py, &verify::sweep_agreement(p, modulus, lifts, seed))
}

#[pymodule]
fn pynonic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("NonicError", m.py().get_type::<NonicError>())?;
    m.add("ReducibleError", m.py().get_type::<ReducibleError>())?;
    m.add_class::<Report>()?;
    m.add_class::<PrimeVerdict>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(disc, m)?)?;
    m.add_function(wrap_pyfunction!(disc_resultant, m)?)?;
    m.add_function(wrap_pyfunction!(nu, m)?)?;
    m.add_function(wrap_pyfunction!(splitting, m)?)?;
    m.add_function(wrap_pyfunction!(divides_index, m)?)?;
    m.add_function(wrap_pyfunction!(nu_lookup, m)?)?;
    m.add_function(wrap_pyfunction!(polygon, m)?)?;
    m.add_function(wrap_pyfunction!(is_order_maximal, m)?)?;
    m.add_function(wrap_pyfunction!(check_worked_examples, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_dedekind, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_agreement, m)?)?;
    Ok(())
}
