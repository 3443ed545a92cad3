//! Python bindings for `ordlift`.
//!
//! Build with `--features extension-module` and import as `ordlift`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ordlift::steinhaus::ZnSequence;
use ordlift::Error;

create_exception!(
    ordlift,
    OrdliftError,
    PyValueError,
    "Domain error raised by ordlift."
);
create_exception!(
    ordlift,
    NotCoprimeError,
    OrdliftError,
    "Base is not coprime to the modulus."
);
create_exception!(
    ordlift,
    InvalidPairError,
    OrdliftError,
    "Pair fails the lifting hypothesis."
);

fn to_py(err: Error) -> PyErr {
    let message = err.to_string();
    match err {
        Error::NotCoprime { .. } => NotCoprimeError::new_err(message),
        Error::InvalidPair { .. } => InvalidPairError::new_err(message),
        _ => OrdliftError::new_err(message),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for ordlift::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

/// `O_n(a)` with its modulus and reduced base.
#[pyclass(
    name = "OrderRecord",
    module = "ordlift",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyOrderRecord(ordlift::OrderRecord);

#[pymethods]
impl PyOrderRecord {
    #[getter]
    fn modulus(&self) -> u64 {
        self.0.modulus()
    }

    #[getter]
    fn base(&self) -> u64 {
        self.0.base()
    }

    #[getter]
    fn order(&self) -> u64 {
        self.0.order()
    }

    fn remainder_gcd(&self, n1: u64) -> PyResult<u64> {
        self.0.remainder_gcd(n1).py()
    }

    fn __repr__(&self) -> String {
        format!(
            "OrderRecord(modulus={}, base={}, order={})",
            self.0.modulus(),
            self.0.base(),
            self.0.order()
        )
    }
}

/// A validated `(n1, n2)` lifting pair.
#[pyclass(
    name = "BasePair",
    module = "ordlift",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyBasePair(ordlift::BasePair);

#[pymethods]
impl PyBasePair {
    #[new]
    fn new(n1: u64, n2: u64) -> PyResult<Self> {
        ordlift::make_base_pair(n1, n2).py().map(Self)
    }

    #[getter]
    fn n1(&self) -> u64 {
        self.0.n1()
    }

    #[getter]
    fn n2(&self) -> u64 {
        self.0.n2()
    }

    /// `"small"` when `v2(n1) <= 1`, `"large"` otherwise.
    #[getter]
    fn two_adic_case(&self) -> &'static str {
        match self.0.two_adic_case() {
            ordlift::TwoAdicCase::Small => "small",
            ordlift::TwoAdicCase::Large => "large",
        }
    }

    fn lift_order(&self, a: i64) -> PyResult<u64> {
        ordlift::lift_order(&self.0, a).py()
    }

    fn lift_alpha(&self, a: i64) -> PyResult<u64> {
        ordlift::lift_alpha(&self.0, a).py()
    }

    fn lift_beta(&self, a: i64) -> PyResult<u64> {
        ordlift::lift_beta(&self.0, a).py()
    }

    fn __repr__(&self) -> String {
        format!("BasePair(n1={}, n2={})", self.0.n1(), self.0.n2())
    }
}

/// Residue multiplicities of a Steinhaus triangle.
#[pyclass(name = "TriangleSummary", module = "ordlift", frozen)]
struct PyTriangleSummary(ordlift::TriangleSummary);

#[pymethods]
impl PyTriangleSummary {
    #[getter]
    fn modulus(&self) -> u64 {
        self.0.modulus
    }

    #[getter]
    fn length(&self) -> u64 {
        self.0.length
    }

    #[getter]
    fn counts(&self) -> Vec<u64> {
        self.0.counts.clone()
    }

    #[getter]
    fn total(&self) -> u64 {
        self.0.total
    }

    #[getter]
    fn balanced(&self) -> bool {
        self.0.balanced
    }

    fn __repr__(&self) -> String {
        format!(
            "TriangleSummary(modulus={}, length={}, balanced={})",
            self.0.modulus,
            self.0.length,
            if self.0.balanced { "True" } else { "False" }
        )
    }
}

#[pyfunction]
fn factorize(n: u64) -> PyResult<Vec<(u64, u32)>> {
    Ok(ordlift::factorize(n).py()?.factors().to_vec())
}

#[pyfunction]
fn valuation(n: u64, p: u64) -> PyResult<u32> {
    ordlift::valuation(n, p).py()
}

#[pyfunction]
fn radical(n: u64) -> PyResult<u64> {
    ordlift::radical(n).py()
}

#[pyfunction]
fn gcd_conv(a: i64, n: u64) -> PyResult<u64> {
    ordlift::gcd_conv(a, n).py()
}

#[pyfunction]
fn mod_pow(a: i64, e: u64, n: u64) -> PyResult<u64> {
    ordlift::mod_pow(a, e, n).py()
}

#[pyfunction]
fn euler_phi(n: u64) -> PyResult<u64> {
    ordlift::euler_phi(n).py()
}

#[pyfunction]
fn mult_order(a: i64, n: u64) -> PyResult<PyOrderRecord> {
    ordlift::mult_order(a, n).py().map(PyOrderRecord)
}

#[pyfunction]
fn remainder_gcd(a: i64, n2: u64, n1: u64) -> PyResult<u64> {
    ordlift::remainder_gcd(a, n2, n1).py()
}

#[pyfunction]
fn proj_order(a: i64, n: u64) -> PyResult<u64> {
    ordlift::proj_order(a, n).py()
}

#[pyfunction]
fn alpha(a: i64, n: u64) -> PyResult<u64> {
    ordlift::alpha(a, n).py()
}

#[pyfunction]
fn beta(a: i64, n: u64) -> PyResult<u64> {
    ordlift::beta(a, n).py()
}

#[pyfunction]
fn alpha_oracle(a: i64, n: u64) -> PyResult<u64> {
    ordlift::alpha_oracle(a, n).py()
}

#[pyfunction]
fn beta_oracle(a: i64, n: u64) -> PyResult<u64> {
    ordlift::beta_oracle(a, n).py()
}

#[pyfunction]
fn make_base_pair(n1: u64, n2: u64) -> PyResult<PyBasePair> {
    PyBasePair::new(n1, n2)
}

#[pyfunction]
fn canonical_base(n: u64) -> PyResult<u64> {
    ordlift::canonical_base(n).py()
}

#[pyfunction]
fn alpha_fast(a: i64, n: u64) -> PyResult<u64> {
    ordlift::alpha_fast(a, n).py()
}

#[pyfunction]
fn beta_fast(a: i64, n: u64) -> PyResult<u64> {
    ordlift::beta_fast(a, n).py()
}

#[pyfunction]
fn alpha_prime_power(a: i64, p: u64, k: u32) -> PyResult<u64> {
    ordlift::alpha_prime_power(a, p, k).py()
}

#[pyfunction]
fn beta_prime_power(a: i64, p: u64, k: u32) -> PyResult<u64> {
    ordlift::beta_prime_power(a, p, k).py()
}

/// Runs the lifting-law sweep; returns `{"passed", "n_max", "a_max", "laws"}`
/// where each law is a dict with `name`, `checks`, `failures` and
/// `first_counterexample`.
#[pyfunction]
#[pyo3(signature = (n_max, a_max, workers = 0))]
fn verify_claims<'py>(
    py: Python<'py>,
    n_max: u64,
    a_max: u64,
    workers: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let report = py.detach(|| ordlift::verify_claims_with_workers(n_max, a_max, workers));
    let out = PyDict::new(py);
    out.set_item("passed", report.passed())?;
    out.set_item("n_max", report.n_max)?;
    out.set_item("a_max", report.a_max)?;
    let mut laws = Vec::with_capacity(report.laws.len());
    for law in &report.laws {
        let entry = PyDict::new(py);
        entry.set_item("name", law.name)?;
        entry.set_item("statement", law.statement)?;
        entry.set_item("checks", law.checks)?;
        entry.set_item("failures", law.failures)?;
        entry.set_item("first_counterexample", law.first_counterexample.clone())?;
        laws.push(entry);
    }
    out.set_item("laws", laws)?;
    Ok(out)
}

/// Accepts arbitrary integers and reduces them modulo `modulus`.
#[pyfunction]
fn triangle(modulus: u64, sequence: Vec<i64>) -> PyResult<PyTriangleSummary> {
    let seq = ZnSequence::from_integers(modulus, &sequence).py()?;
    Ok(PyTriangleSummary(ordlift::triangle(&seq)))
}

#[pyfunction]
fn is_balanced(modulus: u64, sequence: Vec<i64>) -> PyResult<bool> {
    let seq = ZnSequence::from_integers(modulus, &sequence).py()?;
    Ok(ordlift::is_balanced(&seq))
}

#[pyfunction]
fn length_admissible(m: u64, n: u64) -> bool {
    ordlift::length_admissible(m, n)
}

#[pyfunction]
fn ap_sequence(c: i64, d: i64, m: usize, n: u64) -> PyResult<Vec<u64>> {
    Ok(ordlift::ap_sequence(c, d, m, n).py()?.elements().to_vec())
}

#[pyfunction]
fn search_balanced_ap(py: Python<'_>, n: u64, m: usize) -> PyResult<Option<(u64, u64)>> {
    py.detach(|| ordlift::search_balanced_ap(n, m)).py()
}

/// Table of `function` values as a list of rows (one per n).
#[pyfunction]
#[pyo3(signature = (function, n_min, n_max, a_min, a_max))]
fn table(
    function: &str,
    n_min: u64,
    n_max: u64,
    a_min: i64,
    a_max: i64,
) -> PyResult<Vec<Vec<u64>>> {
    let function: ordlift::Function = function.parse().map_err(PyValueError::new_err)?;
    let spec =
        ordlift::TableSpec::new(function, n_min..=n_max, a_min..=a_max, ordlift::Format::Csv)
            .map_err(PyValueError::new_err)?;
    Ok(ordlift::Table::compute(&spec).py()?.rows)
}

#[pymodule]
#[pyo3(name = "ordlift")]
fn ordlift_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("OrdliftError", py.get_type::<OrdliftError>())?;
    m.add("NotCoprimeError", py.get_type::<NotCoprimeError>())?;
    m.add("InvalidPairError", py.get_type::<InvalidPairError>())?;
    m.add_class::<PyOrderRecord>()?;
    m.add_class::<PyBasePair>()?;
    m.add_class::<PyTriangleSummary>()?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(valuation, m)?)?;
    m.add_function(wrap_pyfunction!(radical, m)?)?;
    m.add_function(wrap_pyfunction!(gcd_conv, m)?)?;
    m.add_function(wrap_pyfunction!(mod_pow, m)?)?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(mult_order, m)?)?;
    m.add_function(wrap_pyfunction!(remainder_gcd, m)?)?;
    m.add_function(wrap_pyfunction!(proj_order, m)?)?;
    m.add_function(wrap_pyfunction!(alpha, m)?)?;
    m.add_function(wrap_pyfunction!(beta, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(beta_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(make_base_pair, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_base, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_fast, m)?)?;
    m.add_function(wrap_pyfunction!(beta_fast, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_prime_power, m)?)?;
    m.add_function(wrap_pyfunction!(beta_prime_power, m)?)?;
    m.add_function(wrap_pyfunction!(verify_claims, m)?)?;
    m.add_function(wrap_pyfunction!(triangle, m)?)?;
    m.add_function(wrap_pyfunction!(is_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(length_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(ap_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(search_balanced_ap, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    Ok(())
}
