//! Python bindings for the symspec toolkit.
//!
//! Exposes the core types (`Permutation`, `GroupAlgebraElement`, `Partition`)
//! and the headline operations: the irrep gap scan, full Cayley spectra, the
//! Schreier coset spectrum, the branching-rule lower bound, property (A) and
//! the unit-gap verifier. Structured results come back as plain dicts/lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde_json::Value as JsonValue;

fn err(e: symspec::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py(py: Python<'_>, value: &JsonValue) -> PyResult<Py<PyAny>> {
    match value {
        JsonValue::Null => Ok(py.None()),
        JsonValue::Bool(b) => b.into_py_any(py),
        JsonValue::Number(num) => {
            if let Some(i) = num.as_i64() {
                i.into_py_any(py)
            } else {
                num.as_f64().unwrap_or(f64::NAN).into_py_any(py)
            }
        }
        JsonValue::String(s) => s.into_py_any(py),
        JsonValue::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py_any(py)
        }
        JsonValue::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, json_to_py(py, v)?)?;
            }
            dict.into_py_any(py)
        }
    }
}

fn serialize_to_py<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let json = serde_json::to_value(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, &json)
}

/// A permutation of {1, ..., n}, given by its 1-based image sequence.
#[pyclass(name = "Permutation", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPermutation {
    inner: symspec::Permutation,
}

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        Ok(Self {
            inner: symspec::Permutation::from_images(images).map_err(err)?,
        })
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        Self {
            inner: symspec::Permutation::identity(n),
        }
    }

    /// The initial reversal r_k of degree n.
    #[staticmethod]
    fn initial_reversal(k: usize, n: usize) -> PyResult<Self> {
        Ok(Self {
            inner: symspec::Permutation::initial_reversal(k, n).map_err(err)?,
        })
    }

    #[staticmethod]
    fn transposition(i: usize, j: usize, n: usize) -> PyResult<Self> {
        Ok(Self {
            inner: symspec::Permutation::transposition(i, j, n).map_err(err)?,
        })
    }

    #[getter]
    fn images(&self) -> Vec<usize> {
        self.inner.images().to_vec()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn apply(&self, point: usize) -> PyResult<usize> {
        if point < 1 || point > self.inner.degree() {
            return Err(PyValueError::new_err(format!(
                "point {point} out of range 1..={}",
                self.inner.degree()
            )));
        }
        Ok(self.inner.apply(point))
    }

    /// Composition with q acting first: (p.compose(q))(i) = p(q(i)).
    fn compose(&self, other: &PyPermutation) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.compose(&other.inner).map_err(err)?,
        })
    }

    fn inverse(&self) -> Self {
        Self {
            inner: self.inner.inverse(),
        }
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.inner.images())
    }
}

/// A partition of n (nonincreasing positive parts), indexing an irrep of S_n.
#[pyclass(name = "Partition", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPartition {
    inner: symspec::Partition,
}

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        Ok(Self {
            inner: symspec::Partition::new(parts).map_err(err)?,
        })
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.inner.parts().to_vec()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// All single-box removals (the restriction rule to S_{n-1}).
    fn branch_down(&self) -> PyResult<Vec<PyPartition>> {
        Ok(self
            .inner
            .branch_down()
            .map_err(err)?
            .into_iter()
            .map(|p| PyPartition { inner: p })
            .collect())
    }

    /// The irrep dimension: the number of standard Young tableaux.
    fn dimension(&self) -> usize {
        symspec::tableau::dimension(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.inner.parts())
    }
}

/// A nonnegative-weight element of the group algebra of S_n.
#[pyclass(name = "GroupAlgebraElement", skip_from_py_object)]
#[derive(Clone)]
struct PyGroupAlgebraElement {
    inner: symspec::GroupAlgebraElement,
}

#[pymethods]
impl PyGroupAlgebraElement {
    #[new]
    fn new(n: usize) -> Self {
        Self {
            inner: symspec::GroupAlgebraElement::zero(n),
        }
    }

    /// The initial-reversal element r_1 + ... + r_n.
    #[staticmethod]
    fn reversals(n: usize) -> PyResult<Self> {
        Ok(Self {
            inner: symspec::GroupAlgebraElement::reversal_element(n).map_err(err)?,
        })
    }

    /// Unit weights on a named generating family: "reversals",
    /// "adjacent-transpositions", "all-transpositions" or
    /// "star-transpositions".
    #[staticmethod]
    fn family(name: &str, n: usize) -> PyResult<Self> {
        let z = match name {
            "reversals" => symspec::GeneratingSet::reversals(n),
            "adjacent-transpositions" => symspec::GeneratingSet::adjacent_transpositions(n),
            "all-transpositions" => symspec::GeneratingSet::all_transpositions(n),
            "star-transpositions" => symspec::GeneratingSet::star_transpositions(n),
            other => return Err(PyValueError::new_err(format!("unknown family: {other}"))),
        }
        .map_err(err)?;
        Ok(Self {
            inner: symspec::GroupAlgebraElement::indicator(&z),
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: symspec::GroupAlgebraElement::from_json(text).map_err(err)?,
        })
    }

    fn add_weight(&mut self, perm: &PyPermutation, weight: f64) -> PyResult<()> {
        self.inner
            .add_weight(perm.inner.clone(), weight)
            .map_err(err)
    }

    fn weight(&self, perm: &PyPermutation) -> f64 {
        self.inner.weight(&perm.inner)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn l1_norm(&self) -> f64 {
        self.inner.l1_norm()
    }

    fn is_symmetric(&self) -> bool {
        self.inner.is_symmetric()
    }

    fn support_size(&self) -> usize {
        self.inner.support_size()
    }

    fn embed(&self, n: usize) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.embed(n).map_err(err)?,
        })
    }

    fn to_json(&self) -> PyResult<String> {
        self.inner.to_json().map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "GroupAlgebraElement(n={}, support={}, |w|={})",
            self.inner.degree(),
            self.inner.support_size(),
            self.inner.l1_norm()
        )
    }
}

/// All partitions of n in enumeration order ((n) first).
#[pyfunction]
fn partitions_of(n: usize) -> Vec<PyPartition> {
    symspec::partition::partitions_of(n)
        .into_iter()
        .map(|p| PyPartition { inner: p })
        .collect()
}

/// psi(shape, w) = |w| - lambda_max(T^shape(w)).
#[pyfunction]
fn psi(shape: &PyPartition, w: &PyGroupAlgebraElement) -> PyResult<f64> {
    symspec::cayley::psi(&shape.inner, &w.inner).map_err(err)
}

/// Spectral gap of X(S_n, w) via the irrep scan. Returns a dict with keys
/// "gap", "argmin_partition" and "generates".
#[pyfunction]
fn cayley_gap(py: Python<'_>, w: &PyGroupAlgebraElement) -> PyResult<Py<PyAny>> {
    let scan = symspec::cayley::cayley_gap_irrep(&w.inner).map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item("gap", scan.gap)?;
    dict.set_item("argmin_partition", scan.argmin.parts().to_vec())?;
    dict.set_item("generates", scan.generates)?;
    dict.into_py_any(py)
}

/// Full Cayley Laplacian spectrum assembled from the irrep decomposition
/// (n! eigenvalues, ascending).
#[pyfunction]
fn full_spectrum(w: &PyGroupAlgebraElement) -> PyResult<Vec<f64>> {
    Ok(symspec::cayley::full_spectrum_irrep(&w.inner)
        .map_err(err)?
        .values()
        .to_vec())
}

/// Spectrum of the dense n! x n! Laplacian (subject to the dense cap).
#[pyfunction]
#[pyo3(signature = (w, cap = symspec::DEFAULT_DENSE_CAP))]
fn dense_spectrum(w: &PyGroupAlgebraElement, cap: usize) -> PyResult<Vec<f64>> {
    let lap = symspec::cayley::cayley_laplacian_dense_with_cap(&w.inner, cap).map_err(err)?;
    Ok(symspec::spectrum::sym_eigenvalues(&lap)
        .map_err(err)?
        .values()
        .to_vec())
}

/// Laplacian spectrum of the (n-2,2) Schreier coset graph.
#[pyfunction]
fn schreier_spectrum(w: &PyGroupAlgebraElement) -> PyResult<Vec<f64>> {
    let graph = symspec::schreier::schreier_graph_n22_weighted(&w.inner).map_err(err)?;
    Ok(symspec::schreier::schreier_spectrum(&graph)
        .map_err(err)?
        .values()
        .to_vec())
}

/// Branching-rule lower bound on the gap, via the default decomposition
/// by largest moved point.
#[pyfunction]
fn branching_lower_bound(w: &PyGroupAlgebraElement) -> PyResult<f64> {
    let d = symspec::bounds::default_decomposition(&w.inner).map_err(err)?;
    symspec::bounds::branching_lower_bound(&d).map_err(err)
}

/// Property (A) check. Returns a dict with keys "holds", "worst_partition",
/// "lambda_max_worst" and "lambda_max_hook".
#[pyfunction]
fn has_property_a(py: Python<'_>, w: &PyGroupAlgebraElement) -> PyResult<Py<PyAny>> {
    let result = symspec::bounds::has_property_a(&w.inner).map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item("holds", result.holds)?;
    dict.set_item("worst_partition", result.worst.parts().to_vec())?;
    dict.set_item("lambda_max_worst", result.lambda_max_worst)?;
    dict.set_item("lambda_max_hook", result.lambda_max_hook)?;
    dict.into_py_any(py)
}

/// psi((n-1,1), w) from the defining representation (one n x n eigensolve).
#[pyfunction]
fn psi_hook_via_defining(w: &PyGroupAlgebraElement) -> PyResult<f64> {
    symspec::bounds::psi_n11_via_defining(&w.inner).map_err(err)
}

/// Unit-gap reports for the reversal elements, degrees 3..=n_max, as a list
/// of dicts (one per degree).
#[pyfunction]
#[pyo3(signature = (n_max, use_dense_oracle = false))]
fn verify_unit_gap(py: Python<'_>, n_max: usize, use_dense_oracle: bool) -> PyResult<Py<PyAny>> {
    let reports = symspec::bounds::verify_unit_gap(n_max, use_dense_oracle).map_err(err)?;
    serialize_to_py(py, &reports)
}

/// The full verification battery; returns a dict with "checks" (list of
/// name/passed/detail dicts), "reports" and "all_passed".
#[pyfunction]
fn verify_all(py: Python<'_>, n_max: usize) -> PyResult<Py<PyAny>> {
    let outcome = symspec::verify::verify_all(n_max).map_err(err)?;
    let value = serialize_to_py(py, &outcome)?;
    let bound = value.bind(py);
    let dict = bound
        .cast::<PyDict>()
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    dict.set_item("all_passed", outcome.all_passed())?;
    dict.into_py_any(py)
}

#[pymodule]
fn symspec_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("DEFAULT_DENSE_CAP", symspec::DEFAULT_DENSE_CAP)?;
    m.add("DEFAULT_IRREP_CAP", symspec::DEFAULT_IRREP_CAP)?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyPartition>()?;
    m.add_class::<PyGroupAlgebraElement>()?;
    m.add_function(wrap_pyfunction!(partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    m.add_function(wrap_pyfunction!(cayley_gap, m)?)?;
    m.add_function(wrap_pyfunction!(full_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(dense_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(schreier_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(branching_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(has_property_a, m)?)?;
    m.add_function(wrap_pyfunction!(psi_hook_via_defining, m)?)?;
    m.add_function(wrap_pyfunction!(verify_unit_gap, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
