//! Python bindings. Graphs cross the boundary as `(n, edges)` on vertices
//! `0..n`; results come back as plain dicts and lists.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use unichord_core::coloring::{color_with, verify_coloring, ColorConfig};
use unichord_core::generate::random_composed;
use unichord_core::oracle;
use unichord_core::recognizer::recognize;
use unichord_core::splitter::f_k;
use unichord_core::{Error, Graph, Named, VertexId};

pub type Edges = Vec<(VertexId, VertexId)>;

pub fn graph(n: usize, edges: &Edges) -> Result<Graph, Error> {
    Graph::from_edges(0..n as VertexId, edges.iter().copied())
}

fn as_pair(g: &Graph) -> (usize, Edges) {
    (g.n(), g.edges().map(|(i, j)| (g.id(i), g.id(j))).collect())
}

pub fn recognize_value(n: usize, edges: &Edges) -> Result<Value, Error> {
    let v = recognize(&graph(n, edges)?)?;
    Ok(json!({
        "long_unichord_free": v.long_unichord_free,
        "n": v.n,
        "m": v.m,
        "tree": v.stats,
        "leaf_classes": v.leaf_classes,
        "witness": v.witness,
    }))
}

/// Refuses graphs with a long unichord, like the command-line `color`.
pub fn color_value(n: usize, edges: &Edges, checked: bool) -> Result<Value, Error> {
    let g = graph(n, edges)?;
    if !recognize(&g)?.long_unichord_free {
        return Err(Error::NotInClass("coloring needs a long-unichord-free graph".into()));
    }
    let c = color_with(&g, &ColorConfig { checked, ..ColorConfig::default() })?;
    Ok(json!({ "colors": c.palette_size, "omega": c.omega, "bound": c.bound, "assignment": c.assignment }))
}

pub fn named(name: &str) -> Result<(usize, Edges), Error> {
    Ok(as_pair(&Named::parse(name)?.build()))
}

pub fn composed(seed: u64, n: usize) -> (usize, Edges) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    as_pair(&random_composed(&mut rng, n, 2).graph)
}

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Internal(_) | Error::Budget(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

#[pyfunction(name = "recognize")]
fn py_recognize<'py>(py: Python<'py>, n: usize, edges: Edges) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &recognize_value(n, &edges).map_err(py_err)?)
}

#[pyfunction(name = "color", signature = (n, edges, checked = false))]
fn py_color<'py>(py: Python<'py>, n: usize, edges: Edges, checked: bool) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &color_value(n, &edges, checked).map_err(py_err)?)
}

#[pyfunction(name = "verify_coloring")]
fn py_verify_coloring(n: usize, edges: Edges, assignment: BTreeMap<VertexId, usize>) -> PyResult<bool> {
    Ok(verify_coloring(&graph(n, &edges).map_err(py_err)?, &assignment).is_ok())
}

#[pyfunction(name = "named_graph")]
fn py_named_graph(name: &str) -> PyResult<(usize, Edges)> {
    named(name).map_err(py_err)
}

#[pyfunction(name = "random_composed")]
fn py_random_composed(seed: u64, n: usize) -> (usize, Edges) {
    composed(seed, n)
}

#[pyfunction(name = "find_long_unichord")]
fn py_find_long_unichord<'py>(py: Python<'py>, n: usize, edges: Edges) -> PyResult<Bound<'py, PyAny>> {
    let w = oracle::find_long_unichord(&graph(n, &edges).map_err(py_err)?).map_err(py_err)?;
    to_py(py, &json!(w))
}

#[pyfunction(name = "clique_number")]
fn py_clique_number(n: usize, edges: Edges) -> PyResult<usize> {
    oracle::clique_number_exact(&graph(n, &edges).map_err(py_err)?).map_err(py_err)
}

#[pyfunction(name = "chromatic_number")]
fn py_chromatic_number(n: usize, edges: Edges) -> PyResult<usize> {
    Ok(oracle::chromatic_number_exact(&graph(n, &edges).map_err(py_err)?).map_err(py_err)?.chi)
}

#[pyfunction(name = "f_k")]
fn py_f_k(k: u32, x: u64) -> u64 {
    f_k(k, x)
}

#[pymodule]
fn unichord(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(py_recognize, m)?)?;
    m.add_function(wrap_pyfunction!(py_color, m)?)?;
    m.add_function(wrap_pyfunction!(py_verify_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(py_named_graph, m)?)?;
    m.add_function(wrap_pyfunction!(py_random_composed, m)?)?;
    m.add_function(wrap_pyfunction!(py_find_long_unichord, m)?)?;
    m.add_function(wrap_pyfunction!(py_clique_number, m)?)?;
    m.add_function(wrap_pyfunction!(py_chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(py_f_k, m)?)?;
    Ok(())
}
