//! Python bindings: instances, solving, verification, and generation.
//!
//! Vertices are 0-based on the Python side, matching the in-memory
//! representation; the text format keeps its 1-based wire convention.

use std::collections::BTreeSet;
use std::time::Duration;

use pyo3::exceptions::{PyTimeoutError, PyValueError};
use pyo3::prelude::*;

use nws_core::io;
use nws_core::oracle::{self, Mode, OracleResult};
use nws_core::reductions::{self, CnfFormula, RandomParams};
use nws_core::select::{auto_select, Algorithm};
use nws_core::stars_fitting::solve_stars_fitting;
use nws_core::stars_twins::solve_stars_twins;
use nws_core::tree_support::solve_forest_support;
use nws_core::{Certificate, Property, Rational, SearchOptions, SolveError, Stop, WeightedGraph};

/// A parsed problem instance.
#[pyclass(name = "Instance", skip_from_py_object)]
#[derive(Clone)]
struct PyInstance {
    inner: nws_core::Instance,
}

#[pymethods]
impl PyInstance {
    /// Parse the line-oriented instance format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = io::parse_instance(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyInstance { inner })
    }

    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PyValueError::new_err(format!("{path}: {e}")))?;
        Self::parse(&text)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.graph().vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.graph().edge_count()
    }

    #[getter]
    fn community_count(&self) -> usize {
        self.inner.community_count()
    }

    #[getter]
    fn ell(&self) -> usize {
        self.inner.ell()
    }

    #[getter]
    fn budget(&self) -> String {
        self.inner.budget().to_string()
    }

    #[getter]
    fn property(&self) -> &'static str {
        self.inner.property().name()
    }

    fn edges(&self) -> Vec<(usize, usize, String)> {
        self.inner
            .graph()
            .edges()
            .iter()
            .map(|e| (e.u, e.v, e.weight.to_string()))
            .collect()
    }

    fn communities(&self) -> Vec<Vec<usize>> {
        self.inner
            .communities()
            .iter()
            .map(|c| c.members().to_vec())
            .collect()
    }

    /// t = ell - n' + x over the covered vertices.
    fn feedback_edge_parameter(&self) -> i64 {
        self.inner.feedback_edge_parameter()
    }

    fn hypergraph_component_count(&self) -> usize {
        self.inner.hypergraph_components().count()
    }

    fn relevant_edge_count(&self) -> usize {
        self.inner.relevant_edges().len()
    }

    /// Serialize back to the instance format.
    fn to_text(&self) -> String {
        io::write_instance(&self.inner)
    }

    /// Same instance with different budgets; the weight budget is a
    /// decimal string or "inf".
    fn with_budgets(&self, ell: usize, budget: &str) -> PyResult<Self> {
        let budget = budget
            .parse()
            .map_err(|e: nws_core::ParseError| PyValueError::new_err(e.to_string()))?;
        Ok(PyInstance {
            inner: self.inner.with_budgets(ell, budget),
        })
    }

    /// Check an edge list (pairs of endpoints) against the instance.
    fn verify<'py>(
        &self,
        py: Python<'py>,
        edges: Vec<(usize, usize)>,
    ) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
        let ids = self.edge_ids(&edges)?;
        let report = nws_core::verify_solution(&self.inner, &ids);
        let dict = pyo3::types::PyDict::new(py);
        dict.set_item("valid", report.valid)?;
        dict.set_item("edge_count", report.edge_count)?;
        dict.set_item("total_weight", report.total_weight.to_string())?;
        dict.set_item(
            "violations",
            report
                .violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>(),
        )?;
        Ok(dict)
    }

    fn __repr__(&self) -> String {
        format!(
            "Instance(n={}, m={}, c={}, property={}, ell={}, b={})",
            self.inner.graph().vertex_count(),
            self.inner.graph().edge_count(),
            self.inner.community_count(),
            self.inner.property().name(),
            self.inner.ell(),
            self.inner.budget(),
        )
    }
}

impl PyInstance {
    fn edge_ids(&self, edges: &[(usize, usize)]) -> PyResult<BTreeSet<usize>> {
        edges
            .iter()
            .map(|&(u, v)| {
                self.inner.graph().edge_id(u, v).ok_or_else(|| {
                    PyValueError::new_err(format!("edge ({u}, {v}) not in instance"))
                })
            })
            .collect()
    }
}

/// A solution: its edges, weight, and per-community certificates.
#[pyclass(name = "Solution", skip_from_py_object)]
#[derive(Clone)]
struct PySolution {
    #[pyo3(get)]
    edges: Vec<(usize, usize)>,
    #[pyo3(get)]
    edge_count: usize,
    #[pyo3(get)]
    total_weight: String,
    #[pyo3(get)]
    certificates: Vec<String>,
    text: String,
}

#[pymethods]
impl PySolution {
    fn to_text(&self) -> String {
        self.text.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "Solution(edges={}, weight={})",
            self.edge_count, self.total_weight
        )
    }
}

fn make_solution(instance: &nws_core::Instance, result: &OracleResult) -> Option<PySolution> {
    result.solution().map(|s| PySolution {
        edges: s.edge_pairs(instance),
        edge_count: s.edge_count(),
        total_weight: s.total_weight(instance).to_string(),
        certificates: s
            .certificates()
            .iter()
            .map(|c| match c {
                Certificate::Center(v) => format!("center {v}"),
                Certificate::Connected => "connected".to_string(),
            })
            .collect(),
        text: io::write_solution(instance, s),
    })
}

/// Solve an instance. Returns a Solution or None for infeasible
/// instances. algo: auto, oracle, deletion, branch-ell, tree-support,
/// stars-xp, stars-fpt-c; mode: decide or optimize.
#[pyfunction]
#[pyo3(signature = (instance, algo="auto", mode="decide", cap=24, timeout=None))]
fn solve(
    instance: &PyInstance,
    algo: &str,
    mode: &str,
    cap: usize,
    timeout: Option<f64>,
) -> PyResult<Option<PySolution>> {
    let ins = &instance.inner;
    let algorithm = if algo == "auto" {
        auto_select(ins).0
    } else {
        Algorithm::parse(algo)
            .ok_or_else(|| PyValueError::new_err(format!("unknown algorithm {algo:?}")))?
    };
    let mode = match mode {
        "decide" => Mode::Decide,
        "optimize" => Mode::Optimize,
        other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
    };
    let opts = SearchOptions {
        stop: match timeout {
            Some(secs) => Stop::after(Duration::from_secs_f64(secs)),
            None => Stop::none(),
        },
        jobs: 1,
    };
    let outcome = match algorithm {
        Algorithm::Oracle => oracle::solve_subset_enumeration(ins, mode, cap, &opts),
        Algorithm::Deletion => {
            let k = ins.graph().edge_count().saturating_sub(ins.ell());
            oracle::solve_by_deletion(ins, k, cap, &opts)
        }
        Algorithm::BranchEll => oracle::solve_branching(ins, &opts),
        Algorithm::TreeSupport => solve_forest_support(ins),
        Algorithm::StarsXp => solve_stars_fitting(ins, mode, &opts),
        Algorithm::StarsFptC => solve_stars_twins(ins, &opts),
    };
    match outcome {
        Ok(result) => Ok(make_solution(ins, &result)),
        Err(SolveError::Interrupted) => Err(PyTimeoutError::new_err("solver timed out")),
        Err(e) => Err(PyValueError::new_err(e.to_string())),
    }
}

/// Name and rationale of the automatically selected algorithm.
#[pyfunction]
fn auto_algorithm(instance: &PyInstance) -> (String, String) {
    let (algo, why) = auto_select(&instance.inner);
    (algo.name().to_string(), why)
}

/// Seeded random instance; weights are integers from weight_range.
#[pyfunction]
#[pyo3(signature = (n, edge_prob, communities, size_range, weight_range, property, seed))]
#[allow(clippy::too_many_arguments)]
fn random_instance(
    n: usize,
    edge_prob: f64,
    communities: usize,
    size_range: (usize, usize),
    weight_range: (u32, u32),
    property: &str,
    seed: u64,
) -> PyResult<PyInstance> {
    let property = match property {
        "stars" => Property::Stars,
        "conn" => Property::Connectivity,
        other => return Err(PyValueError::new_err(format!("unknown property {other:?}"))),
    };
    let params = RandomParams {
        n,
        edge_prob,
        community_count: communities,
        size_range,
        weight_range,
        property,
    };
    reductions::random_instance(&params, seed)
        .map(|inner| PyInstance { inner })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Connectivity instance solvable iff the given graph (as an edge list on
/// n vertices) has a Hamiltonian cycle.
#[pyfunction]
fn hamiltonian_cycle_instance(n: usize, edges: Vec<(usize, usize)>) -> PyResult<PyInstance> {
    let graph = WeightedGraph::new(
        n,
        edges
            .into_iter()
            .map(|(u, v)| (u, v, Rational::one()))
            .collect(),
    )
    .map_err(|e| PyValueError::new_err(e.to_string()))?;
    reductions::from_hamiltonian_cycle(&graph)
        .map(|inner| PyInstance { inner })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Stars instance from a DIMACS 3-CNF formula, solvable iff the formula
/// is satisfiable.
#[pyfunction]
fn sat_stars_instance(dimacs: &str) -> PyResult<PyInstance> {
    let formula =
        CnfFormula::parse_dimacs(dimacs).map_err(|e| PyValueError::new_err(e.to_string()))?;
    reductions::from_3sat_stars(&formula)
        .map(|r| PyInstance { inner: r.instance })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
fn nws_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_class::<PySolution>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(auto_algorithm, m)?)?;
    m.add_function(wrap_pyfunction!(random_instance, m)?)?;
    m.add_function(wrap_pyfunction!(hamiltonian_cycle_instance, m)?)?;
    m.add_function(wrap_pyfunction!(sat_stars_instance, m)?)?;
    Ok(())
}
