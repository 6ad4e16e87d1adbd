//! Python bindings. Command-level entry points return the same JSON report
//! strings as the CLI; a few helpers expose raw values for quick
//! interactive use. Rationals cross the boundary as "num/den" strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use n2kit::commands::{cmd_classify, cmd_dims, cmd_singular_search, cmd_verify};
use n2kit::pbw::basis_words;
use n2kit::report::{OutputFormat, RunConfig};
use n2kit::spectrum::{w_set, AdmissibleLevel};
use n2kit::{Grade, Rat};

fn parse_rat(s: &str, what: &str) -> PyResult<Rat> {
    s.parse::<Rat>()
        .map_err(|e| PyValueError::new_err(format!("{what}: {e}")))
}

fn config(cutoff: Option<&str>) -> PyResult<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(raw) = cutoff {
        let level = parse_rat(raw, "cutoff")?;
        cfg.cutoff2 = level
            .doubled()
            .filter(|l2| *l2 >= 0)
            .ok_or_else(|| {
                PyValueError::new_err(format!(
                    "cutoff must be a non-negative half-integer, got {level}"
                ))
            })?;
    }
    Ok(cfg)
}

/// Classification report for the level t/u, as a JSON string.
#[pyfunction]
#[pyo3(signature = (t, u, cutoff=None))]
fn classify(t: i64, u: i64, cutoff: Option<&str>) -> PyResult<String> {
    Ok(cmd_classify(t, u, config(cutoff)?).render(OutputFormat::Json))
}

/// Singular-vector search report at one grade, as a JSON string. h, q, c
/// and level are rational strings like "1/2" or "-3".
#[pyfunction]
#[pyo3(signature = (h, q, c, level, charge, cutoff=None, paranoid=false))]
fn singular_search(
    h: &str,
    q: &str,
    c: &str,
    level: &str,
    charge: i64,
    cutoff: Option<&str>,
    paranoid: bool,
) -> PyResult<String> {
    let mut cfg = config(cutoff)?;
    cfg.paranoid = paranoid;
    Ok(cmd_singular_search(
        parse_rat(h, "h")?,
        parse_rat(q, "q")?,
        parse_rat(c, "c")?,
        parse_rat(level, "level")?,
        charge,
        cfg,
    )
    .render(OutputFormat::Json))
}

/// Full audit report at integral level m, as a JSON string.
#[pyfunction]
#[pyo3(signature = (m, cutoff=None, imax=None, paranoid=false, wide_charge=false))]
fn verify(
    m: i64,
    cutoff: Option<&str>,
    imax: Option<u32>,
    paranoid: bool,
    wide_charge: bool,
) -> PyResult<String> {
    let mut cfg = config(cutoff)?;
    cfg.paranoid = paranoid;
    cfg.wide_charge = wide_charge;
    if let Some(n) = imax {
        cfg.i_max_formula = n;
    }
    Ok(cmd_verify(m, cfg).render(OutputFormat::Json))
}

/// Graded-dimension cross-check report, as a JSON string.
#[pyfunction]
#[pyo3(signature = (h, q, c, max_level, cutoff=None))]
fn dims(h: &str, q: &str, c: &str, max_level: &str, cutoff: Option<&str>) -> PyResult<String> {
    Ok(cmd_dims(
        parse_rat(h, "h")?,
        parse_rat(q, "q")?,
        parse_rat(c, "c")?,
        parse_rat(max_level, "max_level")?,
        config(cutoff)?,
    )
    .render(OutputFormat::Json))
}

fn level(t: i64, u: i64) -> PyResult<AdmissibleLevel> {
    AdmissibleLevel::new(t, u).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// c = 3m/(m+2) for the admissible level t/u, as a rational string.
#[pyfunction]
fn central_charge(t: i64, u: i64) -> PyResult<String> {
    Ok(level(t, u)?.central_charge().to_string())
}

/// Weight table of the level t/u as (j, k, h, q) rational-string tuples.
#[pyfunction]
fn w_points(t: i64, u: i64) -> PyResult<Vec<(String, String, String, String)>> {
    Ok(w_set(&level(t, u)?)
        .iter()
        .map(|p| {
            (
                p.j().to_string(),
                p.k().to_string(),
                p.h.to_string(),
                p.q.to_string(),
            )
        })
        .collect())
}

/// Dimension of the Verma-module grade (level, charge); the level is a
/// rational string. Independent of the highest weight.
#[pyfunction]
fn verma_graded_dim(level: &str, charge: i64) -> PyResult<usize> {
    let l = parse_rat(level, "level")?;
    let g = Grade::checked(&l, charge).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(basis_words(g).len())
}

#[pymodule]
fn n2kit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(singular_search, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(dims, m)?)?;
    m.add_function(wrap_pyfunction!(central_charge, m)?)?;
    m.add_function(wrap_pyfunction!(w_points, m)?)?;
    m.add_function(wrap_pyfunction!(verma_graded_dim, m)?)?;
    Ok(())
}
