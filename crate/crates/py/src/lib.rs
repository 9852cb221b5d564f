//! Python bindings for the fraccover decision procedures.
//!
//! The module mirrors the Rust API: `Graph` and `DegreeBounds` are thin
//! class wrappers, and every checker or report-producing function returns
//! plain dictionaries shaped exactly like the CLI's JSON output (vertex
//! sets become lists, rationals become `{"num": ..., "den": ...}`).

use pyo3::exceptions::{PyIOError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;

use fraccover as core;
use fraccover::Error;
use serde_json::Value;

fn to_py_err(error: Error) -> PyErr {
    match error {
        Error::Input(_) | Error::Parse { .. } => PyValueError::new_err(error.to_string()),
        Error::Io(_) => PyIOError::new_err(error.to_string()),
        Error::Capacity(_) | Error::Disagreement(_) => PyRuntimeError::new_err(error.to_string()),
    }
}

fn json_to_py(py: Python<'_>, value: &Value) -> PyResult<Py<PyAny>> {
    match value {
        Value::Null => Ok(py.None()),
        Value::Bool(b) => b.into_py_any(py),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_py_any(py)
            } else if let Some(u) = n.as_u64() {
                u.into_py_any(py)
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_py_any(py)
            }
        }
        Value::String(s) => s.into_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py_any(py)
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (key, item) in map {
                dict.set_item(key, json_to_py(py, item)?)?;
            }
            dict.into_py_any(py)
        }
    }
}

fn report_to_py<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let json = serde_json::to_value(value)
        .map_err(|e| PyRuntimeError::new_err(format!("report serialization failed: {e}")))?;
    json_to_py(py, &json)
}

fn checker_config(max_vertices: usize, workers: usize) -> core::CheckerConfig {
    core::CheckerConfig {
        max_vertices,
        workers,
    }
}

fn oracle_config(denominator: i64, max_edges: usize) -> core::OracleConfig {
    core::OracleConfig {
        denominator,
        max_edges,
    }
}

// ----------------------------------------------------------------------------
// Classes
// ----------------------------------------------------------------------------

/// A simple undirected graph on vertices `0..p` with canonical edge order.
#[pyclass(frozen, skip_from_py_object, name = "Graph", module = "fraccover_py")]
#[derive(Clone)]
struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(p: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        core::Graph::new(p, &edges)
            .map(|inner| Self { inner })
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn edgeless(p: usize) -> Self {
        Self {
            inner: core::Graph::edgeless(p),
        }
    }

    #[staticmethod]
    fn complete(p: usize) -> Self {
        Self {
            inner: core::Graph::complete(p),
        }
    }

    #[staticmethod]
    fn matching(t: usize) -> Self {
        Self {
            inner: core::Graph::matching(t),
        }
    }

    /// Join: both graphs plus every edge between them (other is shifted).
    fn join(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.join(&other.inner),
        }
    }

    fn disjoint_union(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.disjoint_union(&other.inner),
        }
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(PyValueError::new_err(format!(
                "vertex {v} is out of range for a {}-vertex graph",
                self.inner.vertex_count()
            )));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.inner.degree(v).map_err(to_py_err)
    }

    fn min_degree(&self) -> PyResult<usize> {
        self.inner.min_degree().map_err(to_py_err)
    }

    fn is_independent(&self, vertices: Vec<usize>) -> PyResult<bool> {
        self.inner
            .is_independent(&core::VertexSet::new(vertices))
            .map_err(to_py_err)
    }

    #[pyo3(signature = (limit = core::DEFAULT_INDEPENDENCE_LIMIT))]
    fn independence_number(&self, limit: usize) -> PyResult<usize> {
        self.inner
            .independence_number_with_limit(limit)
            .map_err(to_py_err)
    }

    /// Deletes the listed vertices; returns the subgraph and the list that
    /// maps each new label back to its original one.
    fn delete_vertices(&self, vertices: Vec<usize>) -> PyResult<(Self, Vec<usize>)> {
        let set = core::VertexSet::new(vertices);
        let (sub, map) = self.inner.delete_vertices(&set).map_err(to_py_err)?;
        let back: Vec<usize> = (0..sub.vertex_count()).map(|v| map.parent_of(v)).collect();
        Ok((Self { inner: sub }, back))
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(p={}, m={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// Per-vertex degree windows 1 <= g(v) <= f(v).
#[pyclass(
    frozen,
    skip_from_py_object,
    name = "DegreeBounds",
    module = "fraccover_py"
)]
#[derive(Clone)]
struct PyDegreeBounds {
    inner: core::DegreeBounds,
}

#[pymethods]
impl PyDegreeBounds {
    #[new]
    fn new(g: Vec<i64>, f: Vec<i64>) -> PyResult<Self> {
        core::DegreeBounds::new(g, f)
            .map(|inner| Self { inner })
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn constant(p: usize, g: i64, f: i64) -> PyResult<Self> {
        core::DegreeBounds::constant(p, g, f)
            .map(|inner| Self { inner })
            .map_err(to_py_err)
    }

    fn g(&self, v: usize) -> PyResult<i64> {
        if v >= self.inner.len() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.g(v))
    }

    fn f(&self, v: usize) -> PyResult<i64> {
        if v >= self.inner.len() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.f(v))
    }

    fn g_values(&self) -> Vec<i64> {
        self.inner.g_values().to_vec()
    }

    fn f_values(&self) -> Vec<i64> {
        self.inner.f_values().to_vec()
    }

    fn is_constant(&self) -> bool {
        self.inner.is_constant()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("DegreeBounds(p={})", self.inner.len())
    }
}

/// One of the two tightness constructions, ready for further checks.
#[pyclass(
    frozen,
    skip_from_py_object,
    name = "ExtremalInstance",
    module = "fraccover_py"
)]
#[derive(Clone)]
struct PyExtremalInstance {
    inner: core::ExtremalGraph,
}

#[pymethods]
impl PyExtremalInstance {
    #[getter]
    fn remark(&self) -> u8 {
        self.inner.remark
    }

    #[getter]
    fn t(&self) -> i64 {
        self.inner.t
    }

    #[getter]
    fn m(&self) -> i64 {
        self.inner.m
    }

    #[getter]
    fn a(&self) -> i64 {
        self.inner.params.a()
    }

    #[getter]
    fn b(&self) -> i64 {
        self.inner.params.b()
    }

    #[getter]
    fn d(&self) -> i64 {
        self.inner.params.d()
    }

    #[getter]
    fn n(&self) -> i64 {
        self.inner.params.n()
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.graph.clone(),
        }
    }

    #[getter]
    fn bounds(&self) -> PyDegreeBounds {
        PyDegreeBounds {
            inner: self.inner.bounds.clone(),
        }
    }

    /// Re-derives every tightness claim; returns the full report dict.
    #[pyo3(signature = (max_vertices = core::DEFAULT_MAX_VERTICES))]
    fn verify(&self, py: Python<'_>, max_vertices: usize) -> PyResult<Py<PyAny>> {
        let config = checker_config(max_vertices, 0);
        let report = core::verify_sharpness(&self.inner, &config).map_err(to_py_err)?;
        report_to_py(py, &report)
    }

    fn __repr__(&self) -> String {
        format!(
            "ExtremalInstance(remark={}, a={}, d={}, n={}, t={}, p={})",
            self.inner.remark,
            self.inner.params.a(),
            self.inner.params.d(),
            self.inner.params.n(),
            self.inner.t,
            self.inner.graph.vertex_count()
        )
    }
}

// ----------------------------------------------------------------------------
// Coverage and criticality
// ----------------------------------------------------------------------------

/// Decides coverage; returns `{"covered": bool, "witness": dict | None}`.
#[pyfunction]
#[pyo3(signature = (graph, bounds, max_vertices = core::DEFAULT_MAX_VERTICES, workers = 0))]
fn is_covered(
    py: Python<'_>,
    graph: &PyGraph,
    bounds: &PyDegreeBounds,
    max_vertices: usize,
    workers: usize,
) -> PyResult<Py<PyAny>> {
    let config = checker_config(max_vertices, workers);
    let verdict = core::is_covered(&graph.inner, &bounds.inner, &config).map_err(to_py_err)?;
    report_to_py(py, &verdict)
}

/// Decides coverage after every possible deletion of `n` vertices.
#[pyfunction]
#[pyo3(signature = (graph, bounds, n, max_vertices = core::DEFAULT_MAX_VERTICES, workers = 0))]
fn is_critical_covered(
    py: Python<'_>,
    graph: &PyGraph,
    bounds: &PyDegreeBounds,
    n: usize,
    max_vertices: usize,
    workers: usize,
) -> PyResult<Py<PyAny>> {
    let config = checker_config(max_vertices, workers);
    let verdict =
        core::is_critical_covered(&graph.inner, &bounds.inner, n, &config).map_err(to_py_err)?;
    report_to_py(py, &verdict)
}

/// Evaluates one subset X: returns y, gamma, epsilon, h_min, violates.
#[pyfunction]
fn evaluate_subset(
    py: Python<'_>,
    graph: &PyGraph,
    bounds: &PyDegreeBounds,
    x: Vec<usize>,
) -> PyResult<Py<PyAny>> {
    let set = core::VertexSet::new(x);
    let eval = core::evaluate_subset(&graph.inner, &bounds.inner, &set).map_err(to_py_err)?;
    let dict = PyDict::new(py);
    dict.set_item("y", eval.y.iter().collect::<Vec<_>>())?;
    dict.set_item("gamma", eval.gamma)?;
    dict.set_item("epsilon", eval.epsilon)?;
    dict.set_item("h_min", eval.h_min)?;
    dict.set_item("violates", eval.violates())?;
    dict.into_py_any(py)
}

// ----------------------------------------------------------------------------
// Exhaustive search oracle
// ----------------------------------------------------------------------------

fn edge_index(graph: &core::Graph, edge: (usize, usize)) -> PyResult<usize> {
    let (u, v) = (edge.0.min(edge.1), edge.0.max(edge.1));
    graph
        .edges()
        .iter()
        .position(|&e| e == (u, v))
        .ok_or_else(|| PyValueError::new_err(format!("({u}, {v}) is not an edge of the graph")))
}

/// Searches the weight grid for a fractional factor; returns the
/// certificate dict or None. `forced_edge` pins one edge to weight 1.
#[pyfunction]
#[pyo3(signature = (graph, bounds, forced_edge = None, denominator = 2, max_edges = core::DEFAULT_MAX_EDGES))]
fn has_fractional_factor(
    py: Python<'_>,
    graph: &PyGraph,
    bounds: &PyDegreeBounds,
    forced_edge: Option<(usize, usize)>,
    denominator: i64,
    max_edges: usize,
) -> PyResult<Py<PyAny>> {
    let forced = forced_edge
        .map(|edge| edge_index(&graph.inner, edge))
        .transpose()?;
    let config = oracle_config(denominator, max_edges);
    let certificate = core::has_fractional_factor(&graph.inner, &bounds.inner, forced, &config)
        .map_err(to_py_err)?;
    match certificate {
        Some(cert) => report_to_py(py, &cert),
        None => Ok(py.None()),
    }
}

/// Independent coverage decision by exhaustive grid search.
#[pyfunction]
#[pyo3(signature = (graph, bounds, denominator = 2, max_edges = core::DEFAULT_MAX_EDGES))]
fn covered_by_search(
    py: Python<'_>,
    graph: &PyGraph,
    bounds: &PyDegreeBounds,
    denominator: i64,
    max_edges: usize,
) -> PyResult<Py<PyAny>> {
    let config = oracle_config(denominator, max_edges);
    let verdict =
        core::covered_by_search(&graph.inner, &bounds.inner, &config).map_err(to_py_err)?;
    report_to_py(py, &verdict)
}

/// Independent criticality decision by exhaustive grid search.
#[pyfunction]
#[pyo3(signature = (graph, bounds, n, denominator = 2, max_edges = core::DEFAULT_MAX_EDGES))]
fn critical_covered_by_search(
    py: Python<'_>,
    graph: &PyGraph,
    bounds: &PyDegreeBounds,
    n: usize,
    denominator: i64,
    max_edges: usize,
) -> PyResult<Py<PyAny>> {
    let config = oracle_config(denominator, max_edges);
    let verdict = core::critical_covered_by_search(&graph.inner, &bounds.inner, n, &config)
        .map_err(to_py_err)?;
    report_to_py(py, &verdict)
}

/// Runs both deciders and raises RuntimeError if they disagree.
#[pyfunction]
#[pyo3(signature = (graph, bounds, max_vertices = core::DEFAULT_MAX_VERTICES, denominator = 2, max_edges = core::DEFAULT_MAX_EDGES))]
fn crosscheck_coverage(
    py: Python<'_>,
    graph: &PyGraph,
    bounds: &PyDegreeBounds,
    max_vertices: usize,
    denominator: i64,
    max_edges: usize,
) -> PyResult<Py<PyAny>> {
    let checker = checker_config(max_vertices, 0);
    let oracle = oracle_config(denominator, max_edges);
    let verdict = core::crosscheck_coverage(&graph.inner, &bounds.inner, &checker, &oracle)
        .map_err(to_py_err)?;
    report_to_py(py, &verdict)
}

/// Criticality counterpart of `crosscheck_coverage`.
#[pyfunction]
#[pyo3(signature = (graph, bounds, n, max_vertices = core::DEFAULT_MAX_VERTICES, denominator = 2, max_edges = core::DEFAULT_MAX_EDGES))]
fn crosscheck_critical(
    py: Python<'_>,
    graph: &PyGraph,
    bounds: &PyDegreeBounds,
    n: usize,
    max_vertices: usize,
    denominator: i64,
    max_edges: usize,
) -> PyResult<Py<PyAny>> {
    let checker = checker_config(max_vertices, 0);
    let oracle = oracle_config(denominator, max_edges);
    let verdict = core::crosscheck_critical(&graph.inner, &bounds.inner, n, &checker, &oracle)
        .map_err(to_py_err)?;
    report_to_py(py, &verdict)
}

// ----------------------------------------------------------------------------
// Sufficient conditions
// ----------------------------------------------------------------------------

/// Checks the degree-window sandwich and the three threshold inequalities.
#[pyfunction]
#[pyo3(signature = (graph, bounds, a, b, d, n, independence_limit = core::DEFAULT_INDEPENDENCE_LIMIT))]
fn check_hypotheses(
    py: Python<'_>,
    graph: &PyGraph,
    bounds: &PyDegreeBounds,
    a: i64,
    b: i64,
    d: i64,
    n: i64,
    independence_limit: usize,
) -> PyResult<Py<PyAny>> {
    let params = core::Params::new(a, b, d, n).map_err(to_py_err)?;
    let report = core::check_hypotheses(&graph.inner, &bounds.inner, &params, independence_limit)
        .map_err(to_py_err)?;
    report_to_py(py, &report)
}

/// Evaluates the three inequalities from raw invariants, exactly.
#[pyfunction]
fn evaluate_thresholds(
    py: Python<'_>,
    p: i64,
    min_degree: i64,
    independence_number: i64,
    a: i64,
    b: i64,
    d: i64,
    n: i64,
) -> PyResult<Py<PyAny>> {
    let params = core::Params::new(a, b, d, n).map_err(to_py_err)?;
    let report = core::evaluate_thresholds(p, min_degree, independence_number, &params);
    report_to_py(py, &report)
}

// ----------------------------------------------------------------------------
// Extremal constructions and IO
// ----------------------------------------------------------------------------

/// Builds the clique-join-matchings instance whose minimum degree just
/// misses its threshold.
#[pyfunction]
fn build_remark1(a: i64, d: i64, n: i64, t: i64) -> PyResult<PyExtremalInstance> {
    core::build_remark1(a, d, n, t)
        .map(|inner| PyExtremalInstance { inner })
        .map_err(to_py_err)
}

/// Builds the instance with extra isolated-in-the-sparse-part vertices
/// whose independence condition holds with equality.
#[pyfunction]
fn build_remark2(a: i64, d: i64, n: i64, t: i64) -> PyResult<PyExtremalInstance> {
    core::build_remark2(a, d, n, t)
        .map(|inner| PyExtremalInstance { inner })
        .map_err(to_py_err)
}

/// Function form of `ExtremalInstance.verify`.
#[pyfunction]
#[pyo3(signature = (instance, max_vertices = core::DEFAULT_MAX_VERTICES))]
fn verify_sharpness(
    py: Python<'_>,
    instance: &PyExtremalInstance,
    max_vertices: usize,
) -> PyResult<Py<PyAny>> {
    instance.verify(py, max_vertices)
}

/// Parses the `p m` / `u v` text format (with `#` comments).
#[pyfunction]
fn parse_graph(text: &str) -> PyResult<PyGraph> {
    core::parse_graph(text)
        .map(|inner| PyGraph { inner })
        .map_err(to_py_err)
}

/// Serializes a graph to the text format parsed by `parse_graph`.
#[pyfunction]
fn emit_graph(graph: &PyGraph) -> String {
    core::emit_graph(&graph.inner)
}

/// Random + dense-family counterexample hunt; returns the report dict.
#[pyfunction]
#[pyo3(signature = (p, a, b, d, n, samples = 50, edge_prob = 0.5, seed = 0))]
fn run_sweep(
    py: Python<'_>,
    p: usize,
    a: i64,
    b: i64,
    d: i64,
    n: i64,
    samples: usize,
    edge_prob: f64,
    seed: u64,
) -> PyResult<Py<PyAny>> {
    let config = core::SweepConfig {
        vertex_count: p,
        samples,
        edge_prob,
        params: core::Params::new(a, b, d, n).map_err(to_py_err)?,
        seed,
    };
    let report = core::run_sweep(&config).map_err(to_py_err)?;
    report_to_py(py, &report)
}

#[pymodule]
fn fraccover_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDegreeBounds>()?;
    m.add_class::<PyExtremalInstance>()?;
    m.add_function(wrap_pyfunction!(is_covered, m)?)?;
    m.add_function(wrap_pyfunction!(is_critical_covered, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_subset, m)?)?;
    m.add_function(wrap_pyfunction!(has_fractional_factor, m)?)?;
    m.add_function(wrap_pyfunction!(covered_by_search, m)?)?;
    m.add_function(wrap_pyfunction!(critical_covered_by_search, m)?)?;
    m.add_function(wrap_pyfunction!(crosscheck_coverage, m)?)?;
    m.add_function(wrap_pyfunction!(crosscheck_critical, m)?)?;
    m.add_function(wrap_pyfunction!(check_hypotheses, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_thresholds, m)?)?;
    m.add_function(wrap_pyfunction!(build_remark1, m)?)?;
    m.add_function(wrap_pyfunction!(build_remark2, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sharpness, m)?)?;
    m.add_function(wrap_pyfunction!(parse_graph, m)?)?;
    m.add_function(wrap_pyfunction!(emit_graph, m)?)?;
    m.add_function(wrap_pyfunction!(run_sweep, m)?)?;
    m.add("DEFAULT_MAX_VERTICES", core::DEFAULT_MAX_VERTICES)?;
    m.add("DEFAULT_MAX_EDGES", core::DEFAULT_MAX_EDGES)?;
    m.add(
        "DEFAULT_INDEPENDENCE_LIMIT",
        core::DEFAULT_INDEPENDENCE_LIMIT,
    )?;
    Ok(())
}
