//! Python bindings: `import graph_spectrum`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;

use spectrum_core::audit::{self, SpectrumPoint};
use spectrum_core::exact::{self, DEFAULT_CLIQUE_COVER_LIMIT, DEFAULT_INDEPENDENCE_LIMIT};
use spectrum_core::graph::graph6::{parse_graph6, write_graph6};
use spectrum_core::graph::{cohom_leq, parse_name, CohomOutcome, DEFAULT_HOM_BUDGET};
use spectrum_core::theta::DEFAULT_THETA_TOL;
use spectrum_core::value::{format_rational, Rational};
use spectrum_core::{frac, haemers, theta, Error};

create_exception!(graph_spectrum, SpectrumError, PyValueError);
create_exception!(graph_spectrum, LimitError, SpectrumError);

fn py_err(e: Error) -> PyErr {
    if e.is_limit() {
        LimitError::new_err(e.to_string())
    } else {
        SpectrumError::new_err(e.to_string())
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((format_rational(r),))
}

fn from_json<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| SpectrumError::new_err(e.to_string()))?;
    py.import("json")?.getattr("loads")?.call1((text,))
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "graph_spectrum", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph(spectrum_core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        spectrum_core::Graph::from_edges(n, &edges)
            .map(PyGraph)
            .map_err(py_err)
    }

    /// `K5`, `K3bar`, `C7`, `P4` or `petersen`.
    #[classmethod]
    fn named(_cls: &Bound<'_, PyType>, name: &str) -> PyResult<Self> {
        parse_name(name).map(PyGraph).map_err(py_err)
    }

    #[classmethod]
    fn from_graph6(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        parse_graph6(text.as_bytes()).map(PyGraph).map_err(py_err)
    }

    fn graph6(&self) -> PyResult<String> {
        write_graph6(&self.0).map_err(py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.0.n() && v < self.0.n() && self.0.has_edge(u, v)
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn disjoint_union(&self, other: &PyGraph) -> Self {
        PyGraph(self.0.disjoint_union(&other.0))
    }

    fn strong_product(&self, other: &PyGraph) -> Self {
        PyGraph(self.0.strong_product(&other.0))
    }

    fn strong_power(&self, k: usize) -> PyResult<Self> {
        self.0.strong_power(k).map(PyGraph).map_err(py_err)
    }

    fn __add__(&self, other: &PyGraph) -> Self {
        self.disjoint_union(other)
    }

    fn __mul__(&self, other: &PyGraph) -> Self {
        self.strong_product(other)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        match write_graph6(&self.0) {
            Ok(g6) => format!("Graph.from_graph6({g6:?})"),
            Err(_) => format!("<Graph on {} vertices>", self.0.n()),
        }
    }
}

#[pyfunction]
fn independence_number(g: &PyGraph) -> PyResult<usize> {
    exact::independence_number(&g.0, DEFAULT_INDEPENDENCE_LIMIT.max(g.0.n().min(64)))
        .map(|s| s.size)
        .map_err(py_err)
}

#[pyfunction]
fn clique_cover_number(g: &PyGraph) -> PyResult<usize> {
    exact::clique_cover_number(&g.0, DEFAULT_CLIQUE_COVER_LIMIT)
        .map(|c| c.number)
        .map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (g, tol = DEFAULT_THETA_TOL))]
fn lovasz_theta(g: &PyGraph, tol: f64) -> PyResult<f64> {
    theta::lovasz_theta(&g.0, tol).map(|t| t.value).map_err(py_err)
}

/// Exact value as a `fractions.Fraction`.
#[pyfunction]
fn fractional_clique_cover<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let r = frac::fractional_clique_cover(&g.0, frac::DEFAULT_MAXIMAL_CLIQUE_LIMIT.max(g.0.n()))
        .map_err(py_err)?;
    fraction(py, &r)
}

/// Returns `(rank, witness rows)`.
#[pyfunction]
#[pyo3(signature = (g, p = 2))]
fn haemers_rank(g: &PyGraph, p: u8) -> PyResult<(usize, Vec<Vec<u8>>)> {
    haemers::haemers_rank(&g.0, p)
        .map(|r| (r.rank, r.witness))
        .map_err(py_err)
}

/// Returns `(value, best_d)`; the value is a `Fraction`.
#[pyfunction]
#[pyo3(signature = (g, p = 2, d_max = 1))]
fn fractional_haemers<'py>(
    py: Python<'py>,
    g: &PyGraph,
    p: u8,
    d_max: usize,
) -> PyResult<(Bound<'py, PyAny>, usize)> {
    let f = haemers::fractional_haemers(&g.0, p, d_max).map_err(py_err)?;
    let r = f.value.as_rational().expect("ranks are exact").clone();
    Ok((fraction(py, &r)?, f.best_d))
}

/// `max_{N <= max_power} α(g^N)^(1/N)` as a dict.
#[pyfunction]
#[pyo3(signature = (g, max_power = 2, vertex_limit = 64))]
fn capacity_lower_bound<'py>(
    py: Python<'py>,
    g: &PyGraph,
    max_power: usize,
    vertex_limit: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let est = exact::capacity_lower_bound(&g.0, max_power, vertex_limit).map_err(py_err)?;
    from_json(py, &est)
}

/// `True`/`False`, or `None` when the search budget runs out.
#[pyfunction]
#[pyo3(signature = (g, h, budget = DEFAULT_HOM_BUDGET))]
fn cohom_leq_py(g: &PyGraph, h: &PyGraph, budget: u64) -> Option<bool> {
    match cohom_leq(&g.0, &h.0, budget) {
        CohomOutcome::Leq(_) => Some(true),
        CohomOutcome::NotLeq => Some(false),
        CohomOutcome::BudgetExceeded => None,
    }
}

fn point(name: &str, tol: f64, p: u8) -> PyResult<SpectrumPoint> {
    Ok(match name {
        "theta" => SpectrumPoint::theta(tol),
        "frac_clique_cover" => SpectrumPoint::frac_clique_cover(),
        "frac_haemers" => SpectrumPoint::frac_haemers(p),
        "alpha" => SpectrumPoint::independence(),
        "clique_cover" => SpectrumPoint::clique_cover(),
        other => return Err(SpectrumError::new_err(format!("unknown point `{other}`"))),
    })
}

/// Audit report as a dict. `point` may also be `"strassen"`.
#[pyfunction]
#[pyo3(signature = (point_name, seed = 1, trials = 50, max_n = 4, tol = DEFAULT_THETA_TOL, p = 2))]
fn audit_point<'py>(
    py: Python<'py>,
    point_name: &str,
    seed: u64,
    trials: usize,
    max_n: usize,
    tol: f64,
    p: u8,
) -> PyResult<Bound<'py, PyAny>> {
    let report = if point_name == "strassen" {
        audit::strassen_axiom_check(seed, trials, max_n, DEFAULT_HOM_BUDGET)
    } else {
        audit::audit_spectrum_point(&point(point_name, tol, p)?, seed, trials, max_n)
    }
    .map_err(py_err)?;
    from_json(py, &report)
}

/// Capacity sandwich against theta and the fractional clique cover.
#[pyfunction]
#[pyo3(signature = (g, n_max = 2, tol = DEFAULT_THETA_TOL))]
fn sandwich<'py>(py: Python<'py>, g: &PyGraph, n_max: usize, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    let points = [SpectrumPoint::theta(tol), SpectrumPoint::frac_clique_cover()];
    let report = audit::sandwich_report(&g.0, n_max, &points, 64).map_err(py_err)?;
    from_json(py, &report)
}

#[pymodule]
fn graph_spectrum(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("SpectrumError", py.get_type::<SpectrumError>())?;
    m.add("LimitError", py.get_type::<LimitError>())?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(independence_number, m)?)?;
    m.add_function(wrap_pyfunction!(clique_cover_number, m)?)?;
    m.add_function(wrap_pyfunction!(lovasz_theta, m)?)?;
    m.add_function(wrap_pyfunction!(fractional_clique_cover, m)?)?;
    m.add_function(wrap_pyfunction!(haemers_rank, m)?)?;
    m.add_function(wrap_pyfunction!(fractional_haemers, m)?)?;
    m.add_function(wrap_pyfunction!(capacity_lower_bound, m)?)?;
    m.add("cohom_leq", wrap_pyfunction!(cohom_leq_py, m)?)?;
    m.add_function(wrap_pyfunction!(audit_point, m)?)?;
    m.add_function(wrap_pyfunction!(sandwich, m)?)?;
    Ok(())
}
