//! Python bindings.

use std::collections::BTreeMap;
use std::path::PathBuf;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use curve_invariants::curves::{make_standard_curve as make_curve, random_generic_curve as random_curve, Family};
use curve_invariants::laurent::{Coefficient, HalfLaurent};
use curve_invariants::moves::{verify_modification, ModificationPair, MoveReport};
use curve_invariants::selftest::{run_selftest, SelftestOptions};
use curve_invariants::svg::{render_svg as render, Labels};
use curve_invariants::{analyze_curve, AnalyzeOptions, CurveFile, Error, InvariantReport, PolygonalCurve, Tolerances};

create_exception!(curve_invariants_py, CurveError, PyValueError, "Analysis of a curve failed.");
create_exception!(curve_invariants_py, GenericityError, CurveError, "The curve is not a generic immersion.");

fn py_err(e: Error) -> PyErr {
    let msg = format!("[{}] {e}", e.kind());
    if e.is_genericity_violation() {
        GenericityError::new_err(msg)
    } else {
        CurveError::new_err(msg)
    }
}

fn terms<C: Coefficient>(p: &HalfLaurent<C>) -> BTreeMap<i64, C> {
    p.terms().collect()
}

fn tolerances(eps_intersect: f64, eps_angle: f64, eps_coeff: f64) -> PyResult<Tolerances> {
    let t = Tolerances { eps_intersect, eps_angle, eps_coeff };
    t.validate().map_err(py_err)?;
    Ok(t)
}

/// Closed polygonal curve with a base vertex.
#[pyclass(name = "Curve", module = "curve_invariants_py", frozen)]
struct PyCurve {
    inner: PolygonalCurve,
}

#[pymethods]
impl PyCurve {
    #[new]
    #[pyo3(signature = (vertices, base_index = 0))]
    fn new(vertices: Vec<(f64, f64)>, base_index: usize) -> PyResult<Self> {
        let file = CurveFile { vertices: vertices.into_iter().map(|(x, y)| [x, y]).collect(), base_index };
        Ok(PyCurve { inner: file.to_curve().map_err(py_err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file = CurveFile::from_json(text).map_err(py_err)?;
        Ok(PyCurve { inner: file.to_curve().map_err(py_err)? })
    }

    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        let file = CurveFile::load(&path).map_err(py_err)?;
        Ok(PyCurve { inner: file.to_curve().map_err(py_err)? })
    }

    fn to_json(&self) -> String {
        CurveFile::from(&self.inner).to_json()
    }

    #[getter]
    fn vertices(&self) -> Vec<(f64, f64)> {
        self.inner.vertices.iter().map(|p| (p.x, p.y)).collect()
    }

    #[getter]
    fn base_index(&self) -> usize {
        self.inner.base_index
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Curve({} vertices, base_index={})", self.inner.len(), self.inner.base_index)
    }
}

/// Invariants of one curve. Polynomials are dicts from doubled exponent to coefficient.
#[pyclass(name = "Report", module = "curve_invariants_py", frozen)]
struct PyReport {
    inner: InvariantReport,
    json: String,
    text: String,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn rot(&self) -> i64 {
        self.inner.rot
    }

    #[getter]
    fn n_doubles(&self) -> usize {
        self.inner.n_doubles
    }

    #[getter]
    fn st_q(&self) -> BTreeMap<i64, i64> {
        terms(&self.inner.st_q)
    }

    #[getter]
    fn st_q_geom(&self) -> Option<BTreeMap<i64, f64>> {
        self.inner.st_q_geom.as_ref().map(terms)
    }

    #[getter]
    fn p_q(&self) -> BTreeMap<i64, i64> {
        terms(&self.inner.p_q)
    }

    #[getter]
    fn i_q(&self) -> BTreeMap<i64, f64> {
        terms(&self.inner.i_q)
    }

    #[getter]
    fn j_minus(&self) -> i64 {
        self.inner.j_minus
    }

    #[getter]
    fn j_plus(&self) -> i64 {
        self.inner.j_plus
    }

    #[getter]
    fn st(&self) -> i64 {
        self.inner.st
    }

    #[getter]
    fn tabachnikov(&self) -> Vec<i64> {
        self.inner.tabachnikov.clone()
    }

    #[getter]
    fn cross_checks(&self) -> BTreeMap<String, bool> {
        self.inner.cross_checks.clone()
    }

    #[getter]
    fn i_q_integrality_violations(&self) -> Vec<i64> {
        self.inner.i_q_integrality_violations.clone()
    }

    fn all_checks_pass(&self) -> bool {
        self.inner.all_checks_pass()
    }

    fn to_json(&self) -> String {
        self.json.clone()
    }

    fn to_text(&self) -> String {
        self.text.clone()
    }

    fn __repr__(&self) -> String {
        format!("Report(rot={}, n_doubles={}, st_q={})", self.inner.rot, self.inner.n_doubles, self.inner.st_q)
    }
}

/// Jumps of the invariants across one modification pair.
#[pyclass(name = "MoveReport", module = "curve_invariants_py", frozen)]
struct PyMoveReport {
    inner: MoveReport,
}

#[pymethods]
impl PyMoveReport {
    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind.name()
    }

    #[getter]
    fn ind_param(&self) -> i64 {
        self.inner.ind_param
    }

    #[getter]
    fn delta_p_q(&self) -> BTreeMap<i64, i64> {
        terms(&self.inner.delta_p_q)
    }

    #[getter]
    fn delta_i_q(&self) -> BTreeMap<i64, f64> {
        terms(&self.inner.delta_i_q)
    }

    #[getter]
    fn delta_st_q(&self) -> BTreeMap<i64, i64> {
        terms(&self.inner.delta_st_q)
    }

    #[getter]
    fn mismatches(&self) -> Vec<String> {
        self.inner.mismatches.clone()
    }

    #[getter]
    fn passed(&self) -> bool {
        self.inner.pass
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }
}

#[pyfunction]
#[pyo3(signature = (curve, rebase = false, taylor_depth = 6, eps_intersect = 1e-9, eps_angle = 1e-6, eps_coeff = 1e-9))]
fn analyze(
    curve: &PyCurve,
    rebase: bool,
    taylor_depth: usize,
    eps_intersect: f64,
    eps_angle: f64,
    eps_coeff: f64,
) -> PyResult<PyReport> {
    let opts = AnalyzeOptions { rebase, taylor_depth, tolerances: tolerances(eps_intersect, eps_angle, eps_coeff)? };
    let a = analyze_curve(&curve.inner, &opts).map_err(py_err)?;
    let report = curve_invariants::Report::from_analysis(&a);
    Ok(PyReport { inner: a.report, json: report.to_json(), text: report.to_text() })
}

/// SVG picture; `labels` is a comma separated subset of indices,weights,alpha,circles.
#[pyfunction]
#[pyo3(signature = (curve, labels = "indices,weights,alpha,circles", rebase = false))]
fn render_svg(curve: &PyCurve, labels: &str, rebase: bool) -> PyResult<String> {
    let labels: Labels = labels.parse().map_err(py_err)?;
    let opts = AnalyzeOptions { rebase, ..AnalyzeOptions::default() };
    let a = analyze_curve(&curve.inner, &opts).map_err(py_err)?;
    Ok(render(&a.immersion, Some(&a.smoothed), Some(&a.weights), labels))
}

#[pyfunction]
#[pyo3(signature = (family, param = 0, resolution = 64))]
fn make_standard_curve(family: &str, param: usize, resolution: usize) -> PyResult<PyCurve> {
    let family: Family = family.parse().map_err(py_err)?;
    let file = make_curve(family, param, resolution).map_err(py_err)?;
    Ok(PyCurve { inner: file.to_curve().map_err(py_err)? })
}

#[pyfunction]
#[pyo3(signature = (seed, doubles, max_attempts = 2000))]
fn random_generic_curve(seed: u64, doubles: usize, max_attempts: usize) -> PyResult<PyCurve> {
    let file = random_curve(seed, doubles, max_attempts).map_err(py_err)?;
    Ok(PyCurve { inner: file.to_curve().map_err(py_err)? })
}

/// Verify a modification pair given as a JSON document.
#[pyfunction]
fn verify_move(pair_json: &str) -> PyResult<PyMoveReport> {
    let pair = ModificationPair::from_json(pair_json).map_err(py_err)?;
    let inner = verify_modification(&pair, &Tolerances::default()).map_err(py_err)?;
    Ok(PyMoveReport { inner })
}

/// Returns `(all_pass, text_summary)`.
#[pyfunction]
#[pyo3(signature = (curves = 20, seed = 7))]
fn selftest(py: Python<'_>, curves: usize, seed: u64) -> PyResult<(bool, String)> {
    let opts = SelftestOptions { curves, seed, tolerances: Tolerances::default() };
    let summary = py.detach(|| run_selftest(&opts)).map_err(py_err)?;
    Ok((summary.all_pass(), summary.to_text()))
}

#[pymodule]
fn curve_invariants_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CurveError", m.py().get_type::<CurveError>())?;
    m.add("GenericityError", m.py().get_type::<GenericityError>())?;
    m.add_class::<PyCurve>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyMoveReport>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(render_svg, m)?)?;
    m.add_function(wrap_pyfunction!(make_standard_curve, m)?)?;
    m.add_function(wrap_pyfunction!(random_generic_curve, m)?)?;
    m.add_function(wrap_pyfunction!(verify_move, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
