//! Python bindings: graphs, words, decomposition, and classification.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ::wordrep::modular::{lex_product, maximal_modular_partition, substitute};
use ::wordrep::orientation::{exists_semi_transitive_orientation, is_comparability};
use ::wordrep::representation::{prn as prn_search, rep_number as rep_search};
use ::wordrep::{Caps, Error, Word};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Input(msg) | Error::Domain(msg) => PyValueError::new_err(msg),
        Error::Resource(msg) => PyRuntimeError::new_err(msg),
    }
}

/// Simple undirected graph on vertices 0..n.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: ::wordrep::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self { inner: ::wordrep::Graph::new(n, &edges).map_err(to_py)? })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self { inner: ::wordrep::cli::parse_graph(text).map_err(to_py)? })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        Self { inner: ::wordrep::Graph::complete(n) }
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        Self { inner: ::wordrep::Graph::cycle(n) }
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        Self { inner: ::wordrep::Graph::path(n) }
    }

    /// Hub 0 joined to a rim cycle on 1..=n.
    #[staticmethod]
    fn wheel(n: usize) -> Self {
        Self { inner: ::wordrep::Graph::wheel(n) }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn complement(&self) -> Self {
        Self { inner: self.inner.complement() }
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn to_text(&self) -> String {
        ::wordrep::cli::format_graph(&self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

/// Outcome of `classify`.
#[pyclass(name = "Verdict", frozen, get_all)]
struct PyVerdict {
    status: String,
    witness: Option<Vec<usize>>,
    certificate: Option<Vec<usize>>,
    permutational: Option<Vec<usize>>,
    r: Option<usize>,
    prn: Option<usize>,
    blocks: Vec<Vec<usize>>,
}

#[pymethods]
impl PyVerdict {
    fn __repr__(&self) -> String {
        format!("Verdict(status={:?}, r={:?}, prn={:?})", self.status, self.r, self.prn)
    }
}

#[pyfunction]
#[pyo3(signature = (graph, word_cap = 4, oracle_cap = 24))]
fn classify(graph: &PyGraph, word_cap: usize, oracle_cap: usize) -> PyResult<PyVerdict> {
    let v = ::wordrep::classify(&graph.inner, Caps { word: word_cap, oracle: oracle_cap }).map_err(to_py)?;
    Ok(PyVerdict {
        status: format!("{:?}", v.status),
        witness: v.witness.as_ref().map(|w| w.to_vec()),
        certificate: v.certificate.as_ref().map(|c| c.word().letters().to_vec()),
        permutational: v.permutational.as_ref().map(|c| c.word().letters().to_vec()),
        r: v.numbers.r,
        prn: v.numbers.prn,
        blocks: v.blocks.iter().map(|b| b.to_vec()).collect(),
    })
}

/// Smallest k with a k-uniform representing word, and the word, or None past `cap`.
#[pyfunction]
#[pyo3(signature = (graph, cap = 4))]
fn rep_number(graph: &PyGraph, cap: usize) -> PyResult<Option<(usize, Vec<usize>)>> {
    let found = rep_search(&graph.inner, cap).map_err(to_py)?;
    Ok(found.and_then(|r| Some((r.k()?, r.word().letters().to_vec()))))
}

/// Permutation-representation number with a representing concatenation of permutations.
#[pyfunction]
#[pyo3(signature = (graph, cap = 4))]
fn prn(graph: &PyGraph, cap: usize) -> PyResult<Option<(usize, Vec<usize>)>> {
    let found = prn_search(&graph.inner, cap).map_err(to_py)?;
    Ok(found.and_then(|r| Some((r.k()?, r.word().letters().to_vec()))))
}

#[pyfunction]
fn represents(word: Vec<usize>, graph: &PyGraph) -> PyResult<bool> {
    Word::new(word).represents(&graph.inner).map_err(to_py)
}

#[pyfunction]
fn comparability(graph: &PyGraph) -> bool {
    is_comparability(&graph.inner)
}

#[pyfunction]
#[pyo3(signature = (graph, edge_cap = 24))]
fn semi_transitive(graph: &PyGraph, edge_cap: usize) -> PyResult<bool> {
    exists_semi_transitive_orientation(&graph.inner, edge_cap).map_err(to_py)
}

/// Blocks of the maximal modular partition and the quotient graph.
#[pyfunction]
fn decompose(graph: &PyGraph) -> PyResult<(Vec<Vec<usize>>, PyGraph)> {
    let p = maximal_modular_partition(&graph.inner).map_err(to_py)?;
    let blocks = p.blocks.iter().map(|b| b.to_vec()).collect();
    Ok((blocks, PyGraph { inner: p.quotient }))
}

/// Replace vertex `a` of `g` by a copy of `m`.
#[pyfunction]
#[pyo3(name = "substitute")]
fn py_substitute(g: &PyGraph, a: usize, m: &PyGraph) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: substitute(&g.inner, a, &m.inner).map_err(to_py)?.graph })
}

#[pyfunction]
#[pyo3(name = "lex_product")]
fn py_lex_product(g: &PyGraph, h: &PyGraph) -> PyGraph {
    PyGraph { inner: lex_product(&g.inner, &h.inner).0 }
}

#[pymodule]
fn wordrep(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(rep_number, m)?)?;
    m.add_function(wrap_pyfunction!(prn, m)?)?;
    m.add_function(wrap_pyfunction!(represents, m)?)?;
    m.add_function(wrap_pyfunction!(comparability, m)?)?;
    m.add_function(wrap_pyfunction!(semi_transitive, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(py_substitute, m)?)?;
    m.add_function(wrap_pyfunction!(py_lex_product, m)?)?;
    Ok(())
}
