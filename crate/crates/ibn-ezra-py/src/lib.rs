//! Python bindings: the main operations with exact integer results
//! (Python ints are unbounded, so values cross the boundary losslessly)
//! and rendered traces.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ibn_ezra as core;
use ibn_ezra::{
    BinomialQuery, CircleConfig, Label, Limits, RenderFormat, Strategy, CLASSICAL_PLANETS,
};

fn to_py_err(err: core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn parse_strategy(name: &str) -> PyResult<Strategy> {
    match name {
        "ibn-ezra" => Ok(Strategy::IbnEzra),
        "eq2-direct" => Ok(Strategy::Eq2WithDirectBase),
        "direct" => Ok(Strategy::DirectOnly),
        other => Err(PyValueError::new_err(format!(
            "unknown strategy '{other}' (expected ibn-ezra, eq2-direct, or direct)"
        ))),
    }
}

fn parse_format(name: &str) -> PyResult<RenderFormat> {
    match name {
        "text" => Ok(RenderFormat::Text),
        "structured" => Ok(RenderFormat::Structured),
        other => Err(PyValueError::new_err(format!(
            "unknown format '{other}' (expected text or structured)"
        ))),
    }
}

/// C(n, k) derived by the given strategy.
#[pyfunction]
#[pyo3(signature = (n, k, strategy = "ibn-ezra"))]
fn binomial(n: u64, k: u64, strategy: &str) -> PyResult<BigUint> {
    let limits = Limits::from_env();
    let query = BinomialQuery::new(n, k, &limits).map_err(to_py_err)?;
    let node = core::binomial_derive(query, parse_strategy(strategy)?, &limits).map_err(to_py_err)?;
    Ok(node.value)
}

/// Rendered derivation trace for C(n, k).
#[pyfunction]
#[pyo3(signature = (n, k, strategy = "ibn-ezra", format = "text"))]
fn binomial_trace(n: u64, k: u64, strategy: &str, format: &str) -> PyResult<String> {
    let limits = Limits::from_env();
    let query = BinomialQuery::new(n, k, &limits).map_err(to_py_err)?;
    let node = core::binomial_derive(query, parse_strategy(strategy)?, &limits).map_err(to_py_err)?;
    Ok(core::render_derivation(&node, parse_format(format)?))
}

/// 1 + 2 + ... + m.
#[pyfunction]
fn sum_one_to(m: u64) -> PyResult<BigUint> {
    core::sum_one_to(m, &Limits::from_env()).map_err(to_py_err)
}

/// C(n, k) from the Pascal-triangle oracle.
#[pyfunction]
fn binomial_pascal(n: u64, k: u64) -> PyResult<BigUint> {
    core::binomial_pascal(n, k, &Limits::from_env()).map_err(to_py_err)
}

/// Conjunction census; returns {"planets", "per_size", "total"}.
#[pyfunction]
#[pyo3(signature = (planets = None, min_size = 2))]
fn conjunction_census(
    py: Python<'_>,
    planets: Option<Vec<String>>,
    min_size: u64,
) -> PyResult<Py<PyAny>> {
    let planets = planets
        .unwrap_or_else(|| CLASSICAL_PLANETS.iter().map(|s| s.to_string()).collect());
    let report = core::conjunction_census(&planets, min_size, false, &Limits::from_env())
        .map_err(to_py_err)?;
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("planets", report.planets)?;
    let per_size = pyo3::types::PyDict::new(py);
    for (size, count) in &report.per_size {
        per_size.set_item(size, count.clone())?;
    }
    dict.set_item("per_size", per_size)?;
    dict.set_item("total", report.total)?;
    Ok(dict.into_any().unbind())
}

/// Elimination order of a circle, 1-based.
#[pyfunction]
#[pyo3(signature = (size, step, start = 1))]
fn elimination_order(size: u64, step: u64, start: u64) -> PyResult<Vec<u64>> {
    let config = CircleConfig::new(size, step, start).map_err(to_py_err)?;
    Ok(core::elimination_order(config).order)
}

/// Good/Bad labels making the first `doomed` eliminations all Bad.
#[pyfunction]
#[pyo3(signature = (size, doomed, step, start = 1))]
fn arrangement(size: u64, doomed: u64, step: u64, start: u64) -> PyResult<Vec<String>> {
    let labels = core::arrangement_for_partition(size, doomed, step, start).map_err(to_py_err)?;
    Ok(labels
        .labels
        .iter()
        .map(|l| if *l == Label::Bad { "Bad".to_string() } else { "Good".to_string() })
        .collect())
}

/// Smallest step whose first eliminations equal the doomed set.
#[pyfunction]
#[pyo3(signature = (size, doomed_positions, start = 1, step_limit = 100))]
fn find_step(
    size: u64,
    doomed_positions: Vec<u64>,
    start: u64,
    step_limit: u64,
) -> PyResult<Option<u64>> {
    let doomed: BTreeSet<u64> = doomed_positions.into_iter().collect();
    core::find_step_for_partition(size, &doomed, start, step_limit).map_err(to_py_err)
}

/// n squared by the medieval recursions.
#[pyfunction]
fn square(n: u64) -> PyResult<BigUint> {
    Ok(core::square_plan(n, &Limits::from_env()).map_err(to_py_err)?.value().clone())
}

/// Rendered squaring plan.
#[pyfunction]
#[pyo3(signature = (n, format = "text"))]
fn square_trace(n: u64, format: &str) -> PyResult<String> {
    let plan = core::square_plan(n, &Limits::from_env()).map_err(to_py_err)?;
    Ok(core::render_square_plan(&plan, parse_format(format)?))
}

/// x * y by reduction to two squarings.
#[pyfunction]
fn multiply(x: u64, y: u64) -> PyResult<BigUint> {
    Ok(core::multiply_plan(x, y, &Limits::from_env()).map_err(to_py_err)?.value)
}

/// Rendered multiplication plan.
#[pyfunction]
#[pyo3(signature = (x, y, format = "text"))]
fn multiply_trace(x: u64, y: u64, format: &str) -> PyResult<String> {
    let plan = core::multiply_plan(x, y, &Limits::from_env()).map_err(to_py_err)?;
    Ok(core::render_multiply_plan(&plan, parse_format(format)?))
}

#[pymodule]
fn ibn_ezra_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CLASSICAL_PLANETS", CLASSICAL_PLANETS.to_vec())?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(binomial_trace, m)?)?;
    m.add_function(wrap_pyfunction!(binomial_pascal, m)?)?;
    m.add_function(wrap_pyfunction!(sum_one_to, m)?)?;
    m.add_function(wrap_pyfunction!(conjunction_census, m)?)?;
    m.add_function(wrap_pyfunction!(elimination_order, m)?)?;
    m.add_function(wrap_pyfunction!(arrangement, m)?)?;
    m.add_function(wrap_pyfunction!(find_step, m)?)?;
    m.add_function(wrap_pyfunction!(square, m)?)?;
    m.add_function(wrap_pyfunction!(square_trace, m)?)?;
    m.add_function(wrap_pyfunction!(multiply, m)?)?;
    m.add_function(wrap_pyfunction!(multiply_trace, m)?)?;
    Ok(())
}
