//! Python module `zforce_py`.
//!
//! Vertex sets cross the boundary as sorted lists of ints, rules as the
//! strings `"standard"` and `"skew"`, and records as plain dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use zforce::enumeration::{canonical_form, enumerate_graphs};
use zforce::report::{compute_line, run_suite};
use zforce::structure::{find_blockings, recognize_f_one, recognize_f_zero};
use zforce::{ForcingRule, VertexSet};

fn err(e: zforce::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rule(name: &str) -> PyResult<ForcingRule> {
    name.parse().map_err(err)
}

fn set(g: &zforce::Graph, vertices: Vec<usize>) -> PyResult<VertexSet> {
    match vertices.iter().find(|&&v| v >= g.n()) {
        Some(v) => Err(PyValueError::new_err(format!(
            "vertex {v} out of range for {} vertices",
            g.n()
        ))),
        None => Ok(vertices.into_iter().collect()),
    }
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

#[pyclass(name = "Graph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: zforce::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: zforce::Graph::new(n, &edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: zforce::parse_graph6(text.trim()).map_err(err)?,
        })
    }

    fn to_graph6(&self) -> PyResult<String> {
        zforce::emit_graph6(&self.inner).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        set(&self.inner, vec![v])?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        set(&self.inner, vec![v])?;
        Ok(self.inner.degree(v))
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        match zforce::emit_graph6(&self.inner) {
            Ok(g6) => format!("Graph.from_graph6({g6:?})"),
            Err(_) => format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count()),
        }
    }
}

/// Final set, forcing trace and whether everything was forced.
#[pyfunction]
#[pyo3(signature = (g, start, rule_name = "skew"))]
fn closure(py: Python<'_>, g: &PyGraph, start: Vec<usize>, rule_name: &str) -> PyResult<Py<PyAny>> {
    let out = zforce::closure(&g.inner, set(&g.inner, start)?, rule(rule_name)?);
    let value = serde_json::json!({
        "initial": out.initial.to_vec(),
        "final": out.final_set.to_vec(),
        "trace": out.trace.iter().map(|f| (f.forcer, f.forced)).collect::<Vec<_>>(),
        "forced_all": out.forced_all,
    });
    to_py(py, &value)
}

#[pyfunction]
#[pyo3(signature = (g, s, rule_name = "skew"))]
fn is_stalled(g: &PyGraph, s: Vec<usize>, rule_name: &str) -> PyResult<bool> {
    Ok(zforce::is_stalled(
        &g.inner,
        set(&g.inner, s)?,
        rule(rule_name)?,
    ))
}

#[pyfunction]
#[pyo3(signature = (g, c, rule_name = "skew"))]
fn is_fort(g: &PyGraph, c: Vec<usize>, rule_name: &str) -> PyResult<bool> {
    Ok(zforce::is_fort(
        &g.inner,
        set(&g.inner, c)?,
        rule(rule_name)?,
    ))
}

/// `None` when every subset forces the whole graph.
#[pyfunction]
#[pyo3(signature = (g, rule_name = "skew"))]
fn failed_number(g: &PyGraph, rule_name: &str) -> PyResult<Option<usize>> {
    zforce::failed_number(&g.inner, rule(rule_name)?).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, rule_name = "skew"))]
fn forcing_number(g: &PyGraph, rule_name: &str) -> PyResult<usize> {
    zforce::forcing_number(&g.inner, rule(rule_name)?).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, rule_name = "skew"))]
fn min_fort(g: &PyGraph, rule_name: &str) -> PyResult<Option<Vec<usize>>> {
    let f = zforce::min_fort(&g.inner, rule(rule_name)?).map_err(err)?;
    Ok(f.map(|f| f.members.to_vec()))
}

#[pyfunction]
#[pyo3(signature = (g, rule_name = "skew"))]
fn max_stalled_witness(g: &PyGraph, rule_name: &str) -> PyResult<Option<Vec<usize>>> {
    let w = zforce::max_stalled_witness(&g.inner, rule(rule_name)?).map_err(err)?;
    Ok(w.map(|w| w.to_vec()))
}

#[pyfunction]
#[pyo3(signature = (g, rule_name = "skew"))]
fn singleton_stalled_vertices(g: &PyGraph, rule_name: &str) -> PyResult<Vec<usize>> {
    Ok(zforce::singleton_stalled_vertices(&g.inner, rule(rule_name)?).to_vec())
}

/// The per-graph invariant record.
#[pyfunction]
fn compute(py: Python<'_>, g: &PyGraph) -> PyResult<Py<PyAny>> {
    to_py(py, &compute_line(&g.inner).map_err(err)?)
}

/// Recognizer verdicts, oracle value and per-criterion detail.
#[pyfunction]
fn classify(py: Python<'_>, g: &PyGraph) -> PyResult<Py<PyAny>> {
    to_py(py, &recognize_f_one(&g.inner).map_err(err)?)
}

#[pyfunction]
fn is_f_zero(g: &PyGraph) -> bool {
    recognize_f_zero(&g.inner)
}

#[pyfunction]
fn blockings(g: &PyGraph) -> Vec<Vec<usize>> {
    find_blockings(&g.inner)
        .into_iter()
        .map(|b| b.path_vertices)
        .collect()
}

#[pyfunction]
fn is_planar(g: &PyGraph) -> PyResult<bool> {
    zforce::is_planar_desk(&g.inner).map_err(err)
}

#[pyfunction]
fn canonical_graph6(g: &PyGraph) -> PyResult<String> {
    Ok(canonical_form(&g.inner).map_err(err)?.to_graph6())
}

#[pyfunction]
#[pyo3(name = "enumerate_graphs", signature = (n, connected = false))]
fn enumerate(n: usize, connected: bool) -> PyResult<Vec<PyGraph>> {
    let graphs = enumerate_graphs(n, connected).map_err(err)?;
    Ok(graphs.into_iter().map(|inner| PyGraph { inner }).collect())
}

#[pyfunction]
fn verify(py: Python<'_>, suite: &str, max_n: usize) -> PyResult<Py<PyAny>> {
    let report = py.detach(|| run_suite(suite, max_n)).map_err(err)?;
    to_py(py, &report)
}

#[pymodule]
fn zforce_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(closure, m)?)?;
    m.add_function(wrap_pyfunction!(is_stalled, m)?)?;
    m.add_function(wrap_pyfunction!(is_fort, m)?)?;
    m.add_function(wrap_pyfunction!(failed_number, m)?)?;
    m.add_function(wrap_pyfunction!(forcing_number, m)?)?;
    m.add_function(wrap_pyfunction!(min_fort, m)?)?;
    m.add_function(wrap_pyfunction!(max_stalled_witness, m)?)?;
    m.add_function(wrap_pyfunction!(singleton_stalled_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(compute, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(is_f_zero, m)?)?;
    m.add_function(wrap_pyfunction!(blockings, m)?)?;
    m.add_function(wrap_pyfunction!(is_planar, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_graph6, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_names() {
        assert_eq!(rule("skew").unwrap(), ForcingRule::Skew);
        assert_eq!(rule("standard").unwrap(), ForcingRule::Standard);
    }

    #[test]
    fn vertex_lists_are_range_checked() {
        let g = zforce::Graph::path(3);
        assert_eq!(
            set(&g, vec![2, 0]).unwrap(),
            VertexSet::from_vertices([0, 2])
        );
    }
}
