//! Python bindings. Every function takes DSL text and returns plain Python
//! objects decoded from the same JSON the `weakc` binary prints.

use clap::ValueEnum;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use weakc_core::cli::{self, Kind, Output, Predicate, EXIT_USAGE};
use weakc_core::corpus::{default_corpus, Built, Preset};
use weakc_core::verify::run_suite;
use weakc_core::{dsl, Budget, Field};

fn budget(n: Option<u64>) -> Budget {
    n.map(Budget::new).unwrap_or_default()
}

fn load(text: &str) -> PyResult<Built> {
    dsl::parse(text).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn decode<'py>(py: Python<'py>, json: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (json,))
}

/// Usage errors become `ValueError`; every other exit code carries a JSON
/// document, which is returned with the code under `"exit_code"`.
fn finish<'py>(py: Python<'py>, out: Output) -> PyResult<Bound<'py, PyAny>> {
    if out.code == EXIT_USAGE {
        let msg = out.stderr.trim().trim_start_matches("error: ").to_string();
        return Err(PyValueError::new_err(msg));
    }
    let value = decode(py, &out.stdout)?;
    if let Ok(dict) = value.cast::<PyDict>() {
        dict.set_item("exit_code", out.code)?;
    }
    Ok(value)
}

fn field(p: Option<u64>) -> PyResult<Field> {
    match p {
        None => Ok(Field::Rationals),
        Some(p) => Field::prime(p).map_err(|e| PyValueError::new_err(e.to_string())),
    }
}

/// Parse DSL text; returns the algebra and its named subspaces.
#[pyfunction]
fn parse<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    let built = load(text)?;
    let v = serde_json::json!({
        "algebra": built.algebra.to_json(),
        "subspaces": built.subspaces,
    });
    decode(py, &v.to_string())
}

/// Canonical DSL text for `text`.
#[pyfunction]
fn normalize(text: &str) -> PyResult<String> {
    let built = load(text)?;
    Ok(dsl::print(&built.algebra, &built.subspaces))
}

/// DSL text of a preset such as `heisenberg` or `sl2`, over GF(p) or Q.
#[pyfunction]
#[pyo3(signature = (name, p=None))]
fn preset(name: &str, p: Option<u64>) -> PyResult<String> {
    let preset: Preset = name.parse().map_err(|e: weakc_core::corpus::PresetError| PyValueError::new_err(e.to_string()))?;
    let built = preset.build(field(p)?).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(dsl::print(&built.algebra, &built.subspaces))
}

#[pyfunction]
#[pyo3(signature = (text, predicate, subspace=None, witness=None, budget=None))]
fn check<'py>(
    py: Python<'py>,
    text: &str,
    predicate: &str,
    subspace: Option<&str>,
    witness: Option<std::path::PathBuf>,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    let built = load(text)?;
    let predicate = Predicate::from_str(predicate, false).map_err(PyValueError::new_err)?;
    finish(py, cli::check(&built, predicate, subspace, witness.as_deref(), &self::budget(budget)))
}

#[pyfunction]
#[pyo3(signature = (text, budget=None))]
fn lattice<'py>(py: Python<'py>, text: &str, budget: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let built = load(text)?;
    finish(py, cli::lattice(&built, &self::budget(budget)))
}

/// `kind` is `derived` or `lower-central`.
#[pyfunction]
fn series<'py>(py: Python<'py>, text: &str, kind: &str) -> PyResult<Bound<'py, PyAny>> {
    let built = load(text)?;
    let kind = Kind::from_str(kind, false).map_err(PyValueError::new_err)?;
    finish(py, cli::series(&built, kind))
}

/// Run the verification suite on the default corpus; returns the rows.
#[pyfunction]
#[pyo3(signature = (budget=None))]
fn verify<'py>(py: Python<'py>, budget: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let report = py.detach(|| run_suite(&default_corpus(), self::budget(budget)));
    decode(py, &report.to_json()).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pymodule]
pub fn weakc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(preset, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(lattice, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
