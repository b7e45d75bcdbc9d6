//! Python bindings for `spin_young`.

// pyo3 0.22 macros trip this lint on newer toolchains.
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use spin_young::hecke::{self, HElement, JmKind};
use spin_young::report::VerificationReport;
use spin_young::scalar::Scalar;
use spin_young::suite::{self, SuiteOptions};
use spin_young::tableau::{enumerate_standard_shifted, ShiftedTableau, StrictPartition};
use spin_young::tensor;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An element `a + b sqrt2` with rational `a`, `b`.
#[pyclass(name = "Scalar", module = "spin_young", frozen)]
#[derive(Clone)]
pub struct PyScalar(Scalar);

#[pymethods]
impl PyScalar {
    #[new]
    #[pyo3(signature = (num, den = 1))]
    fn new(num: i64, den: i64) -> PyResult<Self> {
        if den == 0 {
            return Err(value_error("zero denominator"));
        }
        Ok(PyScalar(Scalar::from_frac(num, den)))
    }

    #[staticmethod]
    fn sqrt2() -> Self {
        PyScalar(Scalar::sqrt2())
    }

    /// Rational part as a string such as "1/2".
    #[getter]
    fn rational(&self) -> String {
        self.0.rational_part().to_string()
    }

    /// Coefficient of sqrt2 as a string.
    #[getter]
    fn irrational(&self) -> String {
        self.0.sqrt2_part().to_string()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(PyScalar).map_err(value_error)
    }

    fn __add__(&self, other: &PyScalar) -> Self {
        PyScalar(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyScalar) -> Self {
        PyScalar(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PyScalar) -> Self {
        PyScalar(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: &PyScalar) -> PyResult<Self> {
        self.0.div(&other.0).map(PyScalar).map_err(value_error)
    }

    fn __neg__(&self) -> Self {
        PyScalar(-&self.0)
    }

    fn __eq__(&self, other: &PyScalar) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Scalar({})", self.0)
    }
}

/// An element of the Hecke-Clifford algebra `H_k`.
#[pyclass(name = "HElement", module = "spin_young", frozen)]
#[derive(Clone)]
pub struct PyHElement(HElement);

#[pymethods]
impl PyHElement {
    #[staticmethod]
    fn one(k: usize) -> Self {
        PyHElement(HElement::one(k))
    }

    #[staticmethod]
    fn zero(k: usize) -> Self {
        PyHElement(HElement::zero(k))
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    /// `(monomial, coefficient)` pairs in basis order.
    fn terms(&self) -> Vec<(String, String)> {
        self.0.terms().iter().map(|(m, c)| (m.to_string(), c.to_string())).collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn scale(&self, c: &PyScalar) -> Self {
        PyHElement(self.0.scale(&c.0))
    }

    fn pow(&self, n: u32) -> Self {
        PyHElement(self.0.pow(n))
    }

    fn supercommutator(&self, other: &PyHElement) -> PyResult<Self> {
        same_rank(&self.0, &other.0)?;
        Ok(PyHElement(self.0.supercommutator(&other.0)))
    }

    /// `c` with `self = c * other`, or None.
    fn ratio_to(&self, other: &PyHElement) -> Option<PyScalar> {
        self.0.ratio_to(&other.0).map(PyScalar)
    }

    fn __mul__(&self, other: &PyHElement) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(PyHElement).map_err(value_error)
    }

    fn __add__(&self, other: &PyHElement) -> PyResult<Self> {
        same_rank(&self.0, &other.0)?;
        Ok(PyHElement(&self.0 + &other.0))
    }

    fn __sub__(&self, other: &PyHElement) -> PyResult<Self> {
        same_rank(&self.0, &other.0)?;
        Ok(PyHElement(&self.0 - &other.0))
    }

    fn __neg__(&self) -> Self {
        PyHElement(-&self.0)
    }

    fn __eq__(&self, other: &PyHElement) -> bool {
        self.0 == other.0
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("HElement({})", self.0)
    }
}

fn same_rank(x: &HElement, y: &HElement) -> PyResult<()> {
    if x.k() != y.k() {
        return Err(value_error(format!("rank mismatch: {} vs {}", x.k(), y.k())));
    }
    Ok(())
}

/// A filling of a shifted diagram, written like "1,2;3".
#[pyclass(name = "ShiftedTableau", module = "spin_young", frozen)]
#[derive(Clone)]
pub struct PyShiftedTableau(ShiftedTableau);

#[pymethods]
impl PyShiftedTableau {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyShiftedTableau).map_err(value_error)
    }

    /// Column-filled tableau of a strict partition.
    #[staticmethod]
    fn column_filled(shape: Vec<usize>) -> PyResult<Self> {
        let shape = StrictPartition::new(shape).map_err(value_error)?;
        Ok(PyShiftedTableau(ShiftedTableau::column_filled(&shape)))
    }

    /// All standard tableaux of a strict shape.
    #[staticmethod]
    fn standard(shape: Vec<usize>) -> PyResult<Vec<Self>> {
        let shape = StrictPartition::new(shape).map_err(value_error)?;
        Ok(enumerate_standard_shifted(&shape).into_iter().map(PyShiftedTableau).collect())
    }

    #[getter]
    fn shape(&self) -> Vec<usize> {
        self.0.shape().parts().to_vec()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<usize>> {
        self.0.rows().to_vec()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    fn is_standard(&self) -> bool {
        self.0.is_standard()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ShiftedTableau(\"{}\")", self.0)
    }
}

/// The tensor power `V^{⊗k}` of the natural `q(n)`-module.
#[pyclass(name = "TensorSpace", module = "spin_young", frozen)]
pub struct PyTensorSpace(tensor::TensorSpace);

#[pymethods]
impl PyTensorSpace {
    #[new]
    fn new(n: usize, k: usize) -> PyResult<Self> {
        tensor::TensorSpace::new(n, k).map(PyTensorSpace).map_err(value_error)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    /// The vector `v_t`, formatted as a sum of words.
    fn vt(&self, t: &PyShiftedTableau) -> PyResult<String> {
        self.0.vt(&t.0).map(|v| self.0.format(&v)).map_err(value_error)
    }

    /// `x . v_t` for an element `x` of `H_k`.
    fn act_on_vt(&self, x: &PyHElement, t: &PyShiftedTableau) -> PyResult<String> {
        if x.0.k() != self.0.k() {
            return Err(value_error("element and tensor space have different k"));
        }
        let v = self.0.vt(&t.0).map_err(value_error)?;
        Ok(self.0.format(&self.0.act_h(&x.0, &v)))
    }

    /// Dimension of the space of highest weight vectors of weight `lambda`.
    fn highest_weight_dim(&self, lambda: Vec<usize>) -> PyResult<usize> {
        let lambda = StrictPartition::new(lambda).map_err(value_error)?;
        self.0.highest_weight_space(&lambda).map(|e| e.rank()).map_err(value_error)
    }
}

#[pyfunction]
fn s(k: usize, i: usize, j: usize) -> PyResult<PyHElement> {
    hecke::s(k, i, j).map(PyHElement).map_err(value_error)
}

#[pyfunction]
fn p(k: usize, i: usize) -> PyResult<PyHElement> {
    hecke::p(k, i).map(PyHElement).map_err(value_error)
}

#[pyfunction]
fn tau(k: usize, i: usize, j: usize) -> PyResult<PyHElement> {
    hecke::tau(k, i, j).map(PyHElement).map_err(value_error)
}

/// JM elements for `kind` in "classical", "odd", "nazarov".
#[pyfunction]
#[pyo3(signature = (k, kind = "odd"))]
fn jm_elements(k: usize, kind: &str) -> PyResult<Vec<PyHElement>> {
    let kind = match kind {
        "classical" => JmKind::Classical,
        "odd" => JmKind::Odd,
        "nazarov" => JmKind::Nazarov,
        other => return Err(value_error(format!("unknown JM kind {other:?}"))),
    };
    let order: Vec<usize> = (1..=k).collect();
    hecke::jm_elements(k, &order, kind)
        .map(|v| v.into_iter().map(PyHElement).collect())
        .map_err(value_error)
}

#[pyfunction]
fn kappa(t: &PyShiftedTableau) -> PyHElement {
    PyHElement(hecke::kappa_shifted(&t.0))
}

#[pyfunction]
fn rho(t: &PyShiftedTableau) -> PyHElement {
    PyHElement(hecke::rho(&t.0))
}

#[pyfunction]
fn e_t(t: &PyShiftedTableau) -> PyHElement {
    PyHElement(hecke::e_t(&t.0))
}

#[pyfunction]
fn sigma_t(t: &PyShiftedTableau) -> PyHElement {
    PyHElement(hecke::sigma_t(&t.0))
}

#[pyfunction]
fn spin_idempotent(k: usize) -> PyHElement {
    PyHElement(hecke::spin_idempotent(k))
}

fn reports_json(reports: &[VerificationReport]) -> PyResult<String> {
    serde_json::to_string(reports).map_err(value_error)
}

/// Runs every check for rank `k`; returns the reports as a JSON string.
#[pyfunction]
#[pyo3(signature = (k, allow_large = false))]
fn verify(k: usize, allow_large: bool) -> PyResult<String> {
    if k == 0 || k > spin_young::perm::MAX_K {
        return Err(value_error(format!("k = {k} out of range")));
    }
    reports_json(&suite::run_for_k(k, SuiteOptions { allow_large, timings: false }))
}

/// Runs the checks for one strict shape; returns JSON.
#[pyfunction]
#[pyo3(signature = (shape, allow_large = false))]
fn verify_shape(shape: Vec<usize>, allow_large: bool) -> PyResult<String> {
    let shape = StrictPartition::new(shape).map_err(value_error)?;
    reports_json(&suite::run_for_shape(&shape, SuiteOptions { allow_large, timings: false }))
}

/// Decomposition table of `V^{⊗k}` as CSV.
#[pyfunction]
fn decomposition_csv(n: usize, k: usize) -> PyResult<String> {
    let table = suite::decomposition_table(n, k);
    if !table.report.passed() {
        return Err(value_error(format!("decomposition failed: {:?}", table.report.witnesses)));
    }
    Ok(table.to_csv())
}

#[pymodule]
#[pyo3(name = "spin_young")]
pub fn spin_young_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScalar>()?;
    m.add_class::<PyHElement>()?;
    m.add_class::<PyShiftedTableau>()?;
    m.add_class::<PyTensorSpace>()?;
    m.add_function(wrap_pyfunction!(s, m)?)?;
    m.add_function(wrap_pyfunction!(p, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(jm_elements, m)?)?;
    m.add_function(wrap_pyfunction!(kappa, m)?)?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(e_t, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_t, m)?)?;
    m.add_function(wrap_pyfunction!(spin_idempotent, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_shape, m)?)?;
    m.add_function(wrap_pyfunction!(decomposition_csv, m)?)?;
    Ok(())
}
