//! Python bindings for the exact Clifford algebra kernel.
//!
//! Rationals cross the boundary as `fractions.Fraction`, spinor scalars as
//! `(re, im)` pairs of fractions, and reports as plain dicts.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

use cl23::embeddings::{embed as embed_cl13, extract as extract_cl23, EmbeddingKind};
use cl23::groups::{adjoint_matrix, classify as classify_element, twisted_adjoint_matrix};
use cl23::json::multivector_to_string;
use cl23::parser::{parse_and_evaluate, render, to_complex, Mode};
use cl23::sampling::DEFAULT_SEED;
use cl23::spinors::{Antimorphism, KMatrix, SpinorSpace as Space};
use cl23::{Multivector as Mv, Rational, Signature};

create_exception!(cl23_py, ParseError, PyValueError);
create_exception!(cl23_py, DomainError, PyValueError);

fn domain(e: cl23::Error) -> PyErr {
    DomainError::new_err(e.to_string())
}

fn signature(pq: Option<(usize, usize)>) -> PyResult<Signature> {
    match pq {
        None | Some((2, 3)) => Ok(Signature::cl23()),
        Some((1, 3)) => Ok(Signature::cl13()),
        Some((p, q)) => Signature::from_pq(p, q).map_err(domain),
    }
}

fn mode(algebra: &str, pq: Option<(usize, usize)>) -> PyResult<Mode> {
    match (algebra, pq) {
        ("cl23", None) => Ok(Mode::Cl23),
        ("cl13c", None) => Ok(Mode::Cl13c),
        ("cl23", Some(_)) => {
            let sig = signature(pq)?;
            Ok(if sig == Signature::cl23() { Mode::Cl23 } else { Mode::Generic(sig) })
        }
        _ => Err(PyValueError::new_err(format!(
            "algebra must be 'cl23' or 'cl13c' without a signature, got {algebra:?}"
        ))),
    }
}

fn kind(name: &str) -> PyResult<EmbeddingKind> {
    match name {
        "trivial" => Ok(EmbeddingKind::Trivial),
        "twisted" => Ok(EmbeddingKind::Twisted),
        _ => Err(PyValueError::new_err(format!("kind must be 'trivial' or 'twisted', got {name:?}"))),
    }
}

fn antimorphism(name: &str) -> PyResult<Antimorphism> {
    match name {
        "conjugation" => Ok(Antimorphism::Conjugation),
        "reversion" => Ok(Antimorphism::Reversion),
        _ => Err(PyValueError::new_err(format!(
            "antimorphism must be 'conjugation' or 'reversion', got {name:?}"
        ))),
    }
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((q.to_string(),))
}

fn json_loads<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.getattr("loads")?.call1((text,))
}

fn k_matrix<'py>(py: Python<'py>, m: &KMatrix) -> PyResult<Bound<'py, PyList>> {
    let rows = PyList::empty(py);
    for i in 0..m.size() {
        let row = PyList::empty(py);
        for j in 0..m.size() {
            let c = m.get(i, j);
            row.append((fraction(py, &c.a)?, fraction(py, &c.b)?))?;
        }
        rows.append(row)?;
    }
    Ok(rows)
}

/// An exact multivector in a real Clifford algebra Cl(p,q).
#[pyclass(name = "Multivector", frozen, eq, skip_from_py_object, module = "cl23_py")]
#[derive(Clone, PartialEq)]
pub struct Multivector {
    inner: Mv,
}

impl From<Mv> for Multivector {
    fn from(inner: Mv) -> Self {
        Multivector { inner }
    }
}

#[pymethods]
impl Multivector {
    /// Parses `text` in Cl(2,3), or in Cl(p,q) when `signature=(p, q)` is given.
    #[new]
    #[pyo3(signature = (text, signature = None))]
    fn new(text: &str, signature: Option<(usize, usize)>) -> PyResult<Self> {
        parse(text, "cl23", signature)
    }

    #[getter]
    fn signature(&self) -> (usize, usize) {
        let sig = self.inner.signature();
        (sig.p(), sig.q())
    }

    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let out = PyList::empty(py);
        for (b, c) in self.inner.terms() {
            out.append((b.indices(), fraction(py, c)?))?;
        }
        Ok(out)
    }

    fn grade(&self, k: usize) -> PyResult<Self> {
        self.inner.grade_projection(k).map(Into::into).map_err(domain)
    }

    fn grade_involution(&self) -> Self {
        self.inner.grade_involution().into()
    }

    fn reversion(&self) -> Self {
        self.inner.reversion().into()
    }

    fn clifford_conjugation(&self) -> Self {
        self.inner.clifford_conjugation().into()
    }

    /// `N(x) = conj(x)·x`.
    fn norm(&self) -> Self {
        self.inner.norm().into()
    }

    fn inverse(&self) -> PyResult<Self> {
        self.inner.inverse().map(Into::into).map_err(domain)
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn to_json(&self) -> String {
        multivector_to_string(&self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Multivector({:?})", self.inner.to_string())
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.inner.try_add(&other.inner).map(Into::into).map_err(domain)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.inner.try_sub(&other.inner).map(Into::into).map_err(domain)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.inner.geometric_product(&other.inner).map(Into::into).map_err(domain)
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __pow__(&self, exp: u32, modulo: Option<Py<PyAny>>) -> PyResult<Self> {
        if modulo.is_some() {
            return Err(PyValueError::new_err("modular power is not supported"));
        }
        Ok(self.inner.pow(exp).into())
    }
}

/// Parses an expression. `algebra` is `"cl23"` or `"cl13c"`; a
/// `signature=(p, q)` selects a generic Cl(p,q) instead.
#[pyfunction]
#[pyo3(signature = (text, algebra = "cl23", signature = None))]
fn parse(text: &str, algebra: &str, signature: Option<(usize, usize)>) -> PyResult<Multivector> {
    let m = mode(algebra, signature)?;
    parse_and_evaluate(text, m)
        .map(Into::into)
        .map_err(|e| ParseError::new_err(e.diagnostic(text)))
}

/// Membership flags and the norm, as a dict.
#[pyfunction]
fn classify<'py>(py: Python<'py>, x: &Multivector) -> PyResult<Bound<'py, PyAny>> {
    let cert = classify_element(&x.inner);
    json_loads(py, &cert.to_json().to_string())
}

/// Matrix of `v ↦ x v x⁻¹` (or the twisted action) on the generators.
#[pyfunction]
#[pyo3(signature = (x, twisted = false))]
fn adjoint<'py>(py: Python<'py>, x: &Multivector, twisted: bool) -> PyResult<Bound<'py, PyList>> {
    let m = if twisted {
        twisted_adjoint_matrix(&x.inner)
    } else {
        adjoint_matrix(&x.inner)
    }
    .map_err(domain)?;
    let n = m.signature().dim();
    let rows = PyList::empty(py);
    for i in 0..n {
        let row = PyList::empty(py);
        for j in 0..n {
            row.append(fraction(py, &m.matrix()[(i, j)])?)?;
        }
        rows.append(row)?;
    }
    Ok(rows)
}

/// Sends a Cl(1,3;C) expression into Cl(2,3).
#[pyfunction]
#[pyo3(signature = (text, kind = "trivial"))]
fn embed(text: &str, kind: &str) -> PyResult<Multivector> {
    let k = self::kind(kind)?;
    let value = parse(text, "cl13c", None)?;
    Ok(embed_cl13(&to_complex(&value.inner), k).into())
}

/// Reads a Cl(2,3) element back as Cl(1,3;C) text.
#[pyfunction]
#[pyo3(signature = (x, kind = "trivial"))]
fn extract(x: &Multivector, kind: &str) -> PyResult<String> {
    let k = self::kind(kind)?;
    extract_cl23(&x.inner, k).map(|z| z.to_string()).map_err(domain)
}

/// Canonical text of a Cl(2,3) element in `gamma`/`I` notation.
#[pyfunction]
fn render_cl13c(x: &Multivector) -> PyResult<String> {
    if x.inner.signature() != Signature::cl23() {
        return Err(DomainError::new_err("expected an element of Cl(2,3)"));
    }
    Ok(render(&x.inner, Mode::Cl13c))
}

/// Minimal left ideal of Cl(2,3) viewed as a right K-module.
#[pyclass(name = "SpinorSpace", frozen, module = "cl23_py")]
pub struct SpinorSpace {
    inner: Space,
}

#[pymethods]
impl SpinorSpace {
    #[new]
    fn new(f: &Multivector) -> PyResult<Self> {
        Space::new(&f.inner).map(|inner| SpinorSpace { inner }).map_err(domain)
    }

    #[staticmethod]
    fn dirac() -> Self {
        SpinorSpace { inner: Space::dirac() }
    }

    #[getter]
    fn idempotent(&self) -> Multivector {
        self.inner.idempotent().clone().into()
    }

    fn k_basis(&self) -> Vec<Multivector> {
        self.inner.k_basis().iter().cloned().map(Into::into).collect()
    }

    fn matrix_rep<'py>(&self, py: Python<'py>, x: &Multivector) -> PyResult<Bound<'py, PyList>> {
        if x.inner.signature() != Signature::cl23() {
            return Err(DomainError::new_err("expected an element of Cl(2,3)"));
        }
        k_matrix(py, &self.inner.matrix_rep(&x.inner))
    }

    #[pyo3(signature = (antimorphism = "conjugation"))]
    fn gram_matrix<'py>(&self, py: Python<'py>, antimorphism: &str) -> PyResult<Bound<'py, PyList>> {
        let anti = self::antimorphism(antimorphism)?;
        k_matrix(py, &self.inner.gram_matrix(anti))
    }

    fn gamma_matrices<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyList>>> {
        self.inner.gamma_matrices().iter().map(|g| k_matrix(py, g)).collect()
    }
}

/// Runs a verification suite and returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (suite = "all", seed = DEFAULT_SEED))]
fn verify<'py>(py: Python<'py>, suite: &str, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let suite = suite.parse().map_err(PyValueError::new_err)?;
    let report = py.detach(|| cl23::verify::run(suite, seed));
    json_loads(py, &report.to_json().to_string())
}

#[pymodule]
pub fn cl23_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("DomainError", py.get_type::<DomainError>())?;
    m.add_class::<Multivector>()?;
    m.add_class::<SpinorSpace>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(adjoint, m)?)?;
    m.add_function(wrap_pyfunction!(embed, m)?)?;
    m.add_function(wrap_pyfunction!(extract, m)?)?;
    m.add_function(wrap_pyfunction!(render_cl13c, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
