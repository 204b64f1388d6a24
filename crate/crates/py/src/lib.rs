//! Python bindings: graphs and matchings, the phase runner and verifier,
//! generators, parameters, replacers and the bench suites. Structured
//! results come back as plain dicts and lists.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyString;
use serde::Serialize;

use phasematch::bench::{run_suite, Suite, SuiteConfig};
use phasematch::families::{
    gen_chain, gen_cograph_lb, gen_path_lb, gen_random, gen_structured, Density, FamilyInstance, StructuredParams,
};
use phasematch::graph::{validate_replacement, AltPath, Graph, Matching};
use phasematch::io::{format_graph, parse_graph};
use phasematch::params::{param_report, GraphClass};
use phasematch::phase::{run_hopcroft_karp, verify_trace, Engine, EngineConfig, PhaseTrace, Plan, Strategy};
use phasematch::replace::{replace_with, Method};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// Accepts a JSON string or any object `json.dumps` can encode.
fn json_text(obj: &Bound<'_, PyAny>) -> PyResult<String> {
    if let Ok(s) = obj.cast::<PyString>() {
        return Ok(s.to_string());
    }
    obj.py().import("json")?.call_method1("dumps", (obj,))?.extract()
}

#[pyclass(name = "Graph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    /// `Graph(n, edges, left=None)`; `left` marks one side of a bipartition.
    #[new]
    #[pyo3(signature = (n, edges, left=None))]
    fn new(n: usize, edges: Vec<(usize, usize)>, left: Option<Vec<usize>>) -> PyResult<Self> {
        let mut g = Graph::new(n, edges).map_err(value_err)?;
        if let Some(left) = left {
            g = g.with_bipartition(&left).map_err(value_err)?;
        }
        Ok(PyGraph { inner: g })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyGraph { inner: Graph::complete(n) }
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        PyGraph { inner: Graph::path(n) }
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        PyGraph { inner: Graph::cycle(n) }
    }

    /// Parses the `p`/`e`/`b` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: parse_graph(text).map_err(value_err)?,
        })
    }

    fn to_text(&self) -> String {
        format_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn is_bipartite_marked(&self) -> bool {
        self.inner.is_bipartite_marked()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

#[pyclass(name = "Matching", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMatching {
    inner: Matching,
}

#[pymethods]
impl PyMatching {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyMatching {
            inner: Matching::from_edges(n, edges).map_err(value_err)?,
        })
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn mate(&self, v: usize) -> Option<usize> {
        self.inner.mates().get(v).copied().flatten()
    }

    fn is_valid_for(&self, g: &PyGraph) -> bool {
        self.inner.validate(&g.inner).is_ok()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Matching(size={})", self.inner.len())
    }
}

/// Runs the phase framework from the empty matching. `strategy` is
/// `greedy-lex`, `random` (uses `seed`), `scripted` (needs `plan`) or
/// `hopcroft-karp`. Returns `(matching, trace)`.
#[pyfunction]
#[pyo3(signature = (graph, strategy="greedy-lex", seed=0, plan=None))]
fn run(
    py: Python<'_>,
    graph: &PyGraph,
    strategy: &str,
    seed: u64,
    plan: Option<&Bound<'_, PyAny>>,
) -> PyResult<(PyMatching, Py<PyAny>)> {
    let g = &graph.inner;
    let engine = Engine::new(g, EngineConfig::default());
    let result = match strategy {
        "greedy-lex" => engine.run(&Strategy::GreedyLex),
        "random" => engine.run(&Strategy::SeededRandom(seed)),
        "scripted" => {
            let plan = plan.ok_or_else(|| value_err("scripted strategy needs a plan"))?;
            let plan: Plan = serde_json::from_str(&json_text(plan)?).map_err(value_err)?;
            engine.run(&Strategy::Scripted(plan))
        }
        "hopcroft-karp" => {
            let g = match g.clone().with_detected_bipartition() {
                Some(b) if !g.is_bipartite_marked() => b,
                _ if g.is_bipartite_marked() => g.clone(),
                _ => return Err(value_err("hopcroft-karp needs a bipartite graph")),
            };
            run_hopcroft_karp(&g)
        }
        other => return Err(value_err(format!("unknown strategy {other:?}"))),
    };
    let (m, trace) = result.map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok((PyMatching { inner: m }, to_py(py, &trace)?))
}

/// Replays a trace (dict or JSON string) and returns the legality report.
#[pyfunction]
fn verify(py: Python<'_>, graph: &PyGraph, trace: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    let trace: PhaseTrace = serde_json::from_str(&json_text(trace)?).map_err(value_err)?;
    let report = verify_trace(&graph.inner, &trace);
    #[derive(Serialize)]
    struct Out<'a> {
        legal: bool,
        #[serde(flatten)]
        report: &'a phasematch::phase::TraceReport,
    }
    to_py(
        py,
        &Out {
            legal: report.legal(),
            report: &report,
        },
    )
}

/// Shortest augmenting path length, or `None` when `matching` is maximum.
#[pyfunction]
fn shortest_aug_length(graph: &PyGraph, matching: &PyMatching) -> PyResult<Option<usize>> {
    matching.inner.validate(&graph.inner).map_err(value_err)?;
    Ok(phasematch::shortest_aug_length(&graph.inner, &matching.inner))
}

/// Matching number by exhaustive search (small graphs only).
#[pyfunction]
fn brute_force_nu(graph: &PyGraph) -> PyResult<usize> {
    phasematch::oracles::brute_force_nu(&graph.inner).map_err(value_err)
}

/// Generates a family instance. Returns `(graph, meta, plan)`, `plan` being
/// `None` for the seeded families.
#[pyfunction]
#[pyo3(signature = (family, k=None, n=None, cls=None, seed=0))]
fn generate(
    py: Python<'_>,
    family: &str,
    k: Option<usize>,
    n: Option<usize>,
    cls: Option<&str>,
    seed: u64,
) -> PyResult<(PyGraph, Py<PyAny>, Option<Py<PyAny>>)> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| value_err(format!("{family} needs {name}")));
    let inst: FamilyInstance = match family {
        "chain" => gen_chain(need(k, "k")?),
        "pathlb" => gen_path_lb(need(k, "k")?),
        "cographlb" => gen_cograph_lb(need(n, "n")?),
        "structured" => {
            let class = cls.ok_or_else(|| value_err("structured needs cls"))?.parse().map_err(value_err)?;
            gen_structured(class, &StructuredParams::default(), k.unwrap_or(0), seed)
        }
        "random" => gen_random(need(n, "n")?, Density::P(0.5), seed, false),
        other => return Err(value_err(format!("unknown family {other:?}"))),
    }
    .map_err(value_err)?;
    let plan = inst.plan.as_ref().map(|p| to_py(py, p)).transpose()?;
    Ok((PyGraph { inner: inst.graph.clone() }, to_py(py, &inst.meta)?, plan))
}

/// Parameter report: nd, alpha, tau, mw, md, class flags and deletion
/// distances to `classes` up to `k_max`.
#[pyfunction]
#[pyo3(signature = (graph, classes=None, k_max=4))]
fn params(py: Python<'_>, graph: &PyGraph, classes: Option<Vec<String>>, k_max: usize) -> PyResult<Py<PyAny>> {
    let names = classes.unwrap_or_else(|| vec!["cluster".into(), "cograph".into(), "star-forest".into()]);
    let targets: Vec<GraphClass> = names.iter().map(|c| c.parse()).collect::<Result<_, _>>().map_err(value_err)?;
    to_py(py, &param_report(&graph.inner, &targets, k_max))
}

/// Shortens the alternating `path` with `method` (`independence:K`,
/// `splex:K`, `nd`, `modular`).
#[pyfunction]
fn replace(py: Python<'_>, graph: &PyGraph, matching: &PyMatching, path: Vec<usize>, method: &str) -> PyResult<Py<PyAny>> {
    let method: Method = method.parse().map_err(value_err)?;
    let p = AltPath::try_new(path).map_err(value_err)?;
    let res = replace_with(&graph.inner, &matching.inner, &p, method).map_err(value_err)?;
    #[derive(Serialize)]
    struct Out<'a> {
        valid: bool,
        within_bound: bool,
        input_length: usize,
        length: usize,
        #[serde(flatten)]
        result: &'a phasematch::replace::ReplaceResult,
    }
    to_py(
        py,
        &Out {
            valid: validate_replacement(&graph.inner, &matching.inner, &p, &res.path),
            within_bound: res.within_bound(),
            input_length: p.len(),
            length: res.path.len(),
            result: &res,
        },
    )
}

/// Runs a bench suite and returns its rows as dicts.
#[pyfunction]
#[pyo3(name = "bench", signature = (suite, seed=0, limit_n=None, runs=None))]
fn bench_suite(py: Python<'_>, suite: &str, seed: u64, limit_n: Option<usize>, runs: Option<usize>) -> PyResult<Py<PyAny>> {
    let suite: Suite = suite.parse().map_err(value_err)?;
    let d = SuiteConfig::default();
    let cfg = SuiteConfig {
        seed,
        limit_n,
        random_runs: runs.unwrap_or(d.random_runs),
        ..d
    };
    let rows = py
        .detach(|| run_suite(suite, &cfg))
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    to_py(py, &rows)
}

#[pymodule]
fn pyphasematch(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyMatching>()?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(shortest_aug_length, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_nu, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(params, m)?)?;
    m.add_function(wrap_pyfunction!(replace, m)?)?;
    m.add_function(wrap_pyfunction!(bench_suite, m)?)?;
    Ok(())
}
