//! Python bindings: `Group`, `Depth`, `Chain` and `Search`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use realgroups::catalog::product_edges;
use realgroups::chain::{self, ChainCertificate};
use realgroups::depth::{self, DepthResult};
use realgroups::length;
use realgroups::oracle::{self, SearchReport, DEFAULT_BUDGET};
use realgroups::realforms::{parse, RealForm, ReductiveDescriptor};
use realgroups::tables;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A connected reductive real group, given by a product expression such as
/// `"SU(2,1)*T(1)"`.
#[pyclass(name = "Group", frozen, eq, skip_from_py_object, module = "realgroups")]
#[derive(Clone, PartialEq)]
struct Group {
    inner: ReductiveDescriptor,
}

impl Group {
    fn simple(&self) -> PyResult<RealForm> {
        self.inner
            .as_simple()
            .copied()
            .ok_or_else(|| value_error(format!("`{}` is not simple", self.inner)))
    }
}

#[pymethods]
impl Group {
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        parse(expr).map(|inner| Self { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        ReductiveDescriptor::from_json(s).map(|inner| Self { inner }).map_err(value_error)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Group('{}')", self.inner)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.inner.to_string().hash(&mut h);
        h.finish()
    }

    #[getter]
    fn dimension(&self) -> u64 {
        self.inner.dimension()
    }

    #[getter]
    fn torus_dim(&self) -> u32 {
        self.inner.torus_dim()
    }

    #[getter]
    fn factors(&self) -> Vec<String> {
        self.inner.factors().iter().map(ToString::to_string).collect()
    }

    #[getter]
    fn is_simple(&self) -> bool {
        self.inner.as_simple().is_some()
    }

    /// l(G).
    fn length(&self) -> u64 {
        length::length_of(&self.inner)
    }

    /// Λ_G from Satake data.
    fn lambda_lower_bound(&self) -> u64 {
        length::lambda_lower_bound(&self.inner)
    }

    /// Bounds on λ(G).
    fn depth(&self) -> Depth {
        Depth::from(depth::depth_product(&self.inner))
    }

    /// Catalogued maximal connected subgroups as `(child, rule)` pairs.
    fn maximal_subgroups(&self) -> Vec<(Group, String)> {
        product_edges(&self.inner)
            .into_iter()
            .map(|e| (Group { inner: e.child }, e.rule.to_string()))
            .collect()
    }

    fn longest_chain(&self) -> PyResult<Chain> {
        Ok(Chain { inner: chain::longest_chain(&self.simple()?) })
    }

    /// A catalogued chain of length depth().upper.
    fn depth_chain(&self) -> PyResult<Chain> {
        let c = chain::depth_chain(&self.simple()?).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        Ok(Chain { inner: c })
    }

    #[pyo3(signature = (budget = DEFAULT_BUDGET))]
    fn oracle(&self, budget: usize) -> PyResult<Search> {
        oracle::enumerate_depth(&self.inner, budget).map(Search::from).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    /// Lengths of all catalogued unrefinable chains.
    #[pyo3(signature = (budget = DEFAULT_BUDGET))]
    fn spectrum(&self, budget: usize) -> PyResult<Vec<u64>> {
        oracle::spectrum(&self.inner, budget)
            .map(|s| s.into_iter().collect())
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }
}

#[pyclass(frozen, get_all, module = "realgroups")]
struct Depth {
    lower: u32,
    upper: u32,
    exact: bool,
    rules: Vec<String>,
}

impl From<DepthResult> for Depth {
    fn from(d: DepthResult) -> Self {
        Self { lower: d.lower, upper: d.upper, exact: d.exact, rules: d.rules_fired.iter().map(|r| r.id.to_string()).collect() }
    }
}

#[pymethods]
impl Depth {
    #[getter]
    fn value(&self) -> Option<u32> {
        self.exact.then_some(self.lower)
    }

    fn __repr__(&self) -> String {
        if self.exact {
            format!("Depth(exact={})", self.lower)
        } else {
            format!("Depth(lower={}, upper={})", self.lower, self.upper)
        }
    }
}

#[pyclass(frozen, module = "realgroups")]
struct Chain {
    inner: ChainCertificate,
}

#[pymethods]
impl Chain {
    #[getter]
    fn total(&self) -> u64 {
        self.inner.claimed_total
    }

    /// `(kind, count, rule, endpoint)` per segment.
    #[getter]
    fn segments(&self) -> Vec<(String, u64, String, String)> {
        self.inner
            .segments
            .iter()
            .map(|s| (s.kind.to_string(), s.count, s.rule.clone(), s.endpoint.to_string()))
            .collect()
    }

    /// `(ok, diagnostics)`.
    fn verify(&self) -> (bool, Vec<String>) {
        let v = chain::verify_chain(&self.inner);
        (v.ok, v.diagnostics)
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __len__(&self) -> usize {
        self.inner.claimed_total as usize
    }
}

#[pyclass(frozen, get_all, module = "realgroups")]
struct Search {
    min_found: u64,
    max_found_reductive: u64,
    edge_count: usize,
    state_count: usize,
    frontier_truncated: bool,
}

impl From<SearchReport> for Search {
    fn from(r: SearchReport) -> Self {
        Self {
            min_found: r.min_found,
            max_found_reductive: r.max_found_reductive,
            edge_count: r.edge_count,
            state_count: r.state_count,
            frontier_truncated: r.frontier_truncated,
        }
    }
}

#[pymethods]
impl Search {
    fn __repr__(&self) -> String {
        format!(
            "Search(min_found={}, max_found_reductive={}, states={}, truncated={})",
            self.min_found,
            self.max_found_reductive,
            self.state_count,
            if self.frontier_truncated { "True" } else { "False" }
        )
    }
}

#[pyfunction]
fn eta(p: u32, q: u32) -> PyResult<u32> {
    if q > p {
        return Err(value_error("eta needs p >= q"));
    }
    Ok(depth::eta(p, q))
}

#[pyfunction]
fn zeta(k: u32) -> u32 {
    depth::zeta(k)
}

/// Checks both summary tables; returns `(entries, failing names)`.
#[pyfunction]
#[pyo3(signature = (max_rank = None))]
fn verify_tables(max_rank: Option<u32>) -> (usize, Vec<String>) {
    let checks: Vec<_> = match max_rank {
        None => tables::verify_tables(14),
        Some(n) => tables::table1(2 * n + 2)
            .iter()
            .filter(|e| e.rank <= n)
            .chain(tables::table2().iter())
            .map(tables::check)
            .collect(),
    };
    let failing = checks.iter().filter(|c| !c.pass()).map(|c| c.entry.name()).collect();
    (checks.len(), failing)
}

#[pymodule]
#[pyo3(name = "realgroups")]
fn realgroups_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<Depth>()?;
    m.add_class::<Chain>()?;
    m.add_class::<Search>()?;
    m.add_function(wrap_pyfunction!(eta, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(verify_tables, m)?)?;
    Ok(())
}
