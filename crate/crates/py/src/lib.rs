//! Python bindings. Structured results are returned as plain dicts in the
//! same JSON schemas the command-line tool prints.

use hirschkit::braid::{self, parse_braid};
use hirschkit::{covering, hirsch, invariants, BraidWord, HirschDescriptor, DEFAULT_BUDGET};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(hirschkit_py, HirschkitError, PyValueError);

fn err(e: hirschkit::Error) -> PyErr {
    HirschkitError::new_err(format!("{}: {e}", e.name()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (to_json(value),))
}

/// A braid word on `strands` strands; letter `i` is σ_i, `-i` its inverse.
#[pyclass(name = "Braid", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyBraid(BraidWord);

#[pymethods]
impl PyBraid {
    #[new]
    fn new(strands: usize, letters: Vec<i64>) -> PyResult<Self> {
        BraidWord::new(strands, letters).map(PyBraid).map_err(err)
    }

    /// Parses "1 -2 1 -2".
    #[staticmethod]
    fn parse(text: &str, strands: usize) -> PyResult<Self> {
        parse_braid(text, strands).map(PyBraid).map_err(err)
    }

    #[staticmethod]
    fn full_twist(strands: usize) -> PyResult<Self> {
        braid::full_twist(strands).map(PyBraid).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(PyBraid)
            .map_err(|e| HirschkitError::new_err(e.to_string()))
    }

    #[getter]
    fn strands(&self) -> usize {
        self.0.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<i32> {
        self.0.letters().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("Braid({}, {:?})", self.0.strands(), self.0.letters())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn to_json(&self) -> String {
        to_json(&self.0)
    }

    fn __mul__(&self, other: &PyBraid) -> PyResult<Self> {
        self.0.compose(&other.0).map(PyBraid).map_err(err)
    }

    fn inverse(&self) -> Self {
        PyBraid(self.0.inverse())
    }

    /// `g⁻¹ · self · g`.
    fn conjugate(&self, g: &PyBraid) -> PyResult<Self> {
        self.0.conjugate(&g.0).map(PyBraid).map_err(err)
    }

    fn __pow__(&self, e: i64, _modulo: Option<i64>) -> Self {
        PyBraid(self.0.pow(e))
    }

    fn free_reduce(&self) -> Self {
        PyBraid(self.0.free_reduce())
    }

    fn exponent_sum(&self) -> i64 {
        self.0.exponent_sum()
    }

    fn markov_stabilize(&self, positive: bool) -> Self {
        PyBraid(self.0.markov_stabilize(positive))
    }

    /// One-based images of the induced strand permutation.
    fn permutation(&self) -> Vec<usize> {
        self.0.permutation().images().iter().map(|x| x + 1).collect()
    }

    fn normal_form(&self) -> String {
        braid::left_normal_form(&self.0).to_string()
    }

    /// Whether the two words represent the same braid.
    fn equals(&self, other: &PyBraid) -> PyResult<bool> {
        braid::braids_equal(&self.0, &other.0).map_err(err)
    }

    fn is_periodic(&self) -> bool {
        braid::is_periodic(&self.0)
    }

    #[pyo3(signature = (other, budget = DEFAULT_BUDGET))]
    fn conjugacy<'py>(&self, py: Python<'py>, other: &PyBraid, budget: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &braid::conjugacy_test(&self.0, &other.0, budget).map_err(err)?)
    }

    fn closure_info<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &invariants::closure_info(&self.0))
    }

    /// Unit-normalized Alexander polynomial as text, e.g. "t^2-3t+1".
    fn alexander(&self) -> PyResult<String> {
        invariants::alexander_knot(&self.0).map(|p| p.to_string()).map_err(err)
    }

    /// Alexander polynomial as `[(exponent, coefficient), ...]`, highest first.
    fn alexander_terms(&self) -> PyResult<Vec<(i32, i64)>> {
        let p = invariants::alexander_knot(&self.0).map_err(err)?;
        Ok(p.terms().rev().collect())
    }

    /// `(lower, upper)` genus bounds from the Bennequin inequality.
    fn bennequin_bounds(&self) -> (i64, i64) {
        let b = invariants::bennequin_bounds(&self.0);
        (b.lower, b.upper)
    }

    #[pyo3(signature = (budget = DEFAULT_BUDGET))]
    fn unknot_check<'py>(&self, py: Python<'py>, budget: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &invariants::unknot_check(&self.0, budget).map_err(err)?)
    }

    #[pyo3(signature = (budget = DEFAULT_BUDGET))]
    fn screen<'py>(&self, py: Python<'py>, budget: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &covering::screen_exchangeable(&self.0, budget))
    }
}

#[pyfunction]
fn dual_fibration_params<'py>(py: Python<'py>, n: i64, k: i64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &hirsch::dual_fibration_params(n, k).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n, k, bound = None))]
fn dual_fibration_bruteforce<'py>(py: Python<'py>, n: i64, k: i64, bound: Option<i64>) -> PyResult<Bound<'py, PyAny>> {
    let bound = bound.unwrap_or(n.saturating_mul(n).saturating_mul(k.saturating_abs() + 2));
    to_py(py, &hirsch::dual_fibration_bruteforce(n, k, bound).map_err(err)?)
}

/// First homology of the glued manifold, e.g. "Z + Z/2 + Z/2".
#[pyfunction]
fn homology_of_m(n: i64, k: i64) -> PyResult<String> {
    hirsch::homology_of_m(n, k).map(|g| g.to_string()).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, k, m_max = 10, lambda_max = 10))]
fn nonisotopy_obstruction(n: i64, k: i64, m_max: u32, lambda_max: i64) -> PyResult<bool> {
    hirsch::nonisotopy_obstruction(n, k, m_max, lambda_max).map_err(err)
}

#[pyfunction]
fn covering_homomorphism<'py>(py: Python<'py>, braid: &PyBraid, k: i64) -> PyResult<Bound<'py, PyAny>> {
    let d = HirschDescriptor::new(braid.0.clone(), k).map_err(err)?;
    to_py(py, &covering::covering_homomorphism(&d).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (strands, max_len, budget = DEFAULT_BUDGET))]
fn enumerate_exchange_candidates<'py>(
    py: Python<'py>,
    strands: usize,
    max_len: usize,
    budget: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let e = py.detach(|| covering::enumerate_exchange_candidates(strands, max_len, budget)).map_err(err)?;
    to_py(py, &e)
}

#[pyfunction]
#[pyo3(signature = (q2_max = 5, p_max = 3))]
fn certify_not_hirsch_example<'py>(py: Python<'py>, q2_max: i64, p_max: i64) -> PyResult<Bound<'py, PyAny>> {
    if q2_max < 1 || p_max < 0 {
        return Err(PyValueError::new_err("need q2_max >= 1 and p_max >= 0"));
    }
    to_py(py, &covering::certify_not_hirsch_example(q2_max, p_max))
}

#[pymodule]
fn hirschkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBraid>()?;
    m.add("HirschkitError", m.py().get_type::<HirschkitError>())?;
    m.add("DEFAULT_BUDGET", DEFAULT_BUDGET)?;
    m.add_function(wrap_pyfunction!(dual_fibration_params, m)?)?;
    m.add_function(wrap_pyfunction!(dual_fibration_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(homology_of_m, m)?)?;
    m.add_function(wrap_pyfunction!(nonisotopy_obstruction, m)?)?;
    m.add_function(wrap_pyfunction!(covering_homomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_exchange_candidates, m)?)?;
    m.add_function(wrap_pyfunction!(certify_not_hirsch_example, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_matches_library_schema() {
        let w = BraidWord::new(3, [1, -2]).unwrap();
        assert_eq!(to_json(&w), r#"{"strands":3,"letters":[1,-2]}"#);
        let p = hirsch::dual_fibration_params(2, 3).unwrap();
        assert_eq!(to_json(&p), r#"{"s":2,"p1":1,"q1":1,"p2":4,"q2":1}"#);
    }

    #[test]
    fn braid_methods_wrap_library() {
        let w = PyBraid::parse("1 -2 1 -2", 3).unwrap();
        assert_eq!(w.alexander().unwrap(), "t^2-3t+1");
        assert_eq!(w.alexander_terms().unwrap(), vec![(2, 1), (1, -3), (0, 1)]);
        assert_eq!(PyBraid::parse("1 2 3", 4).unwrap().permutation(), vec![4, 1, 2, 3]);
        let tw = PyBraid::full_twist(3).unwrap();
        assert!(tw.__mul__(&w).unwrap().equals(&w.__mul__(&tw).unwrap()).unwrap());
    }
}
