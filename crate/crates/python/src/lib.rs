//! Python bindings for the gpindex library.
//!
//! Exposes molecular graphs, the symmetry-aware descriptors (Graovac-Pisanski
//! index, Wiener index, automorphism groups, vertex orbits), the regression
//! models, and the bundled hydrocarbon data set.
//!
//! Build as a Python module with `cargo build --release -p gpindex-python`,
//! then rename `libgpindex.so` to `gpindex.so` somewhere on `sys.path` (or
//! run `python/run_smoke_test.sh`, which does exactly that).

use std::path::PathBuf;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use gpindex_core::dataset;
use gpindex_core::descriptors;
use gpindex_core::qspr;
use gpindex_core::regression;
use gpindex_core::symmetry;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple, undirected, connected graph with 1-indexed vertices.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct MolecularGraph {
    inner: gpindex_core::MolecularGraph,
}

#[pymethods]
impl MolecularGraph {
    /// MolecularGraph(vertex_count, edges, name=None)
    ///
    /// `edges` is a list of 1-indexed vertex pairs. Raises ValueError for
    /// self-loops, duplicate or out-of-range edges, and disconnected graphs.
    #[new]
    #[pyo3(signature = (vertex_count, edges, name=None))]
    fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        name: Option<String>,
    ) -> PyResult<Self> {
        gpindex_core::MolecularGraph::new(vertex_count, &edges, name)
            .map(|inner| MolecularGraph { inner })
            .map_err(value_error)
    }

    /// The path graph on n vertices (the unbranched alkane skeleton).
    #[staticmethod]
    #[pyo3(signature = (n, name=None))]
    fn path(n: usize, name: Option<String>) -> PyResult<Self> {
        gpindex_core::MolecularGraph::path(n, name)
            .map(|inner| MolecularGraph { inner })
            .map_err(value_error)
    }

    /// Loads the edge-list file format (line 1: vertex count; "u v" lines,
    /// `#` comments). The file stem becomes the graph name.
    #[staticmethod]
    fn from_file(path: PathBuf) -> PyResult<Self> {
        dataset::load_graph_file(&path)
            .map(|inner| MolecularGraph { inner })
            .map_err(value_error)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.inner.name().map(str::to_owned)
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v == 0 || v > self.inner.vertex_count() {
            return Err(value_error(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).collect())
    }

    /// All-pairs shortest-path hop counts as a nested list.
    fn distance_matrix(&self) -> Vec<Vec<u32>> {
        let d = self.inner.distance_matrix();
        let n = self.inner.vertex_count();
        (1..=n)
            .map(|u| (1..=n).map(|v| d.get(u, v)).collect())
            .collect()
    }

    /// The graph serialized in the edge-list file format.
    fn to_file_string(&self) -> String {
        dataset::write_graph_string(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "MolecularGraph(name={:?}, vertex_count={}, edge_count={})",
            self.inner.name().unwrap_or("None"),
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// The symmetry-aware descriptor set of one molecule.
#[pyclass]
struct DescriptorRecord {
    inner: descriptors::DescriptorRecord,
}

#[pymethods]
impl DescriptorRecord {
    #[getter]
    fn name(&self) -> Option<String> {
        self.inner.name.clone()
    }

    /// Graovac-Pisanski index as a float.
    #[getter]
    fn gp(&self) -> f64 {
        self.inner.gp_f64()
    }

    /// Graovac-Pisanski index as an exact rational string ("32" or "7/2").
    #[getter]
    fn gp_exact(&self) -> String {
        self.inner.gp_string()
    }

    #[getter]
    fn wiener(&self) -> u64 {
        self.inner.wiener
    }

    #[getter]
    fn aut_order(&self) -> usize {
        self.inner.aut_order
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count
    }

    #[getter]
    fn orbit_count(&self) -> usize {
        self.inner.orbit_count
    }

    fn __repr__(&self) -> String {
        format!(
            "DescriptorRecord(name={:?}, gp={}, wiener={}, aut_order={}, orbit_count={})",
            self.inner.name.as_deref().unwrap_or("None"),
            self.inner.gp_string(),
            self.inner.wiener,
            self.inner.aut_order,
            self.inner.orbit_count
        )
    }
}

/// Computes GP (by both routes, cross-checked), W, |Aut| and the orbit count.
#[pyfunction]
fn compute_descriptors(graph: &MolecularGraph) -> PyResult<DescriptorRecord> {
    descriptors::descriptor_record(&graph.inner)
        .map(|inner| DescriptorRecord { inner })
        .map_err(value_error)
}

/// Vertex orbits under the automorphism group, as sorted 1-indexed lists.
#[pyfunction]
fn orbits(graph: &MolecularGraph) -> Vec<Vec<usize>> {
    symmetry::automorphisms(&graph.inner)
        .orbit_partition()
        .orbits()
        .to_vec()
}

/// All automorphisms as image vectors: entry `i` is the image of vertex
/// `i + 1`.
#[pyfunction]
fn automorphisms(graph: &MolecularGraph) -> Vec<Vec<usize>> {
    let n = graph.inner.vertex_count();
    symmetry::automorphisms(&graph.inner)
        .members()
        .iter()
        .map(|p| (1..=n).map(|v| p.image_of(v)).collect())
        .collect()
}

/// Wiener index of the graph.
#[pyfunction]
fn wiener_index(graph: &MolecularGraph) -> u64 {
    descriptors::wiener(&graph.inner.distance_matrix())
}

/// Wiener index restricted to a 1-indexed vertex subset.
#[pyfunction]
fn wiener_subset(graph: &MolecularGraph, subset: Vec<usize>) -> PyResult<u64> {
    descriptors::wiener_subset(&graph.inner.distance_matrix(), &subset).map_err(value_error)
}

/// A fitted melting-point model.
#[pyclass]
struct RegressionFit {
    inner: regression::RegressionFit,
}

#[pymethods]
impl RegressionFit {
    /// "log_single", "linear_single" or "multilinear".
    #[getter]
    fn model_kind(&self) -> &'static str {
        self.inner.model_kind.as_str()
    }

    /// Slope-then-intercept for single models, intercept-first for the
    /// multilinear model.
    #[getter]
    fn coefficients(&self) -> Vec<f64> {
        self.inner.coefficients.clone()
    }

    #[getter]
    fn r_squared(&self) -> f64 {
        self.inner.r_squared
    }

    #[getter]
    fn adjusted_r_squared(&self) -> f64 {
        self.inner.adjusted_r_squared
    }

    #[getter]
    fn standard_error(&self) -> f64 {
        self.inner.standard_error
    }

    /// Per-row (name, observed, predicted, residual, percent_residual).
    fn residuals(&self) -> Vec<(String, f64, f64, f64, f64)> {
        self.inner
            .residuals
            .iter()
            .map(|r| {
                (
                    r.name.clone(),
                    r.observed,
                    r.predicted,
                    r.residual,
                    r.percent_residual,
                )
            })
            .collect()
    }

    /// Evaluates the model at one predictor row.
    fn predict(&self, row: Vec<f64>) -> PyResult<f64> {
        regression::predict(&self.inner, &row).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!(
            "RegressionFit(model_kind={:?}, coefficients={:?}, r_squared={:.6})",
            self.inner.model_kind.as_str(),
            self.inner.coefficients,
            self.inner.r_squared
        )
    }
}

/// Fits y = a ln x + b; x must be positive.
#[pyfunction]
fn fit_log(x: Vec<f64>, y: Vec<f64>) -> PyResult<RegressionFit> {
    regression::fit_log_single(&x, &y)
        .map(|inner| RegressionFit { inner })
        .map_err(value_error)
}

/// Fits y = a x + b.
#[pyfunction]
fn fit_linear(x: Vec<f64>, y: Vec<f64>) -> PyResult<RegressionFit> {
    regression::fit_linear_single(&x, &y)
        .map(|inner| RegressionFit { inner })
        .map_err(value_error)
}

/// Fits y = b0 + b1 x1 + ... + bp xp; `rows` holds one predictor list per
/// observation.
#[pyfunction]
fn fit_multilinear(rows: Vec<Vec<f64>>, y: Vec<f64>) -> PyResult<RegressionFit> {
    regression::fit_multilinear(&rows, &y)
        .map(|inner| RegressionFit { inner })
        .map_err(value_error)
}

/// Squared Pearson correlation of two samples.
#[pyfunction]
fn r_squared_between(x: Vec<f64>, y: Vec<f64>) -> PyResult<f64> {
    regression::r_squared_between(&x, &y).map_err(value_error)
}

fn parse_family(family: &str) -> PyResult<dataset::Family> {
    family.parse().map_err(value_error)
}

/// One bundled molecule with its structure and melting point.
#[pyclass]
struct MoleculeEntry {
    #[pyo3(get)]
    name: String,
    #[pyo3(get)]
    family: String,
    #[pyo3(get)]
    split: String,
    #[pyo3(get)]
    melting_point: f64,
    graph: gpindex_core::MolecularGraph,
}

#[pymethods]
impl MoleculeEntry {
    #[getter]
    fn graph(&self) -> MolecularGraph {
        MolecularGraph {
            inner: self.graph.clone(),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "MoleculeEntry(name={:?}, family={:?}, split={:?}, melting_point={})",
            self.name, self.family, self.split, self.melting_point
        )
    }
}

/// Bundled molecules of a family: "alkane" (31), "pah" (20) or
/// "octane_isomer" (14).
#[pyfunction]
fn bundled_family(family: &str) -> PyResult<Vec<MoleculeEntry>> {
    let family = parse_family(family)?;
    Ok(dataset::bundled_family(family)
        .into_iter()
        .map(|e| MoleculeEntry {
            name: e.name,
            family: e.family.as_str().to_string(),
            split: e.split.as_str().to_string(),
            melting_point: e.melting_point,
            graph: e.graph,
        })
        .collect())
}

/// One verification mismatch: (name, quantity, computed, published).
type VerifyFailure = (String, String, String, String);

/// Checks every bundled structure of every family against its published
/// descriptor values. Returns (passed, total, failures) where each failure
/// is (name, quantity, computed, published).
#[pyfunction]
fn verify_bundle() -> (usize, usize, Vec<VerifyFailure>) {
    let report = dataset::verify_bundle();
    let failures = report
        .failures()
        .flat_map(|check| {
            check.mismatches.iter().map(|m| {
                (
                    check.name.clone(),
                    m.quantity.to_string(),
                    m.computed.clone(),
                    m.published.clone(),
                )
            })
        })
        .collect();
    (report.passed(), report.total(), failures)
}

/// Refits a bundled melting-point model, mirroring the CLI `fit` command.
///
/// `model` is "log", "linear" or "multilinear"; `x` selects the predictor
/// for single models ("gp", "aut", "wiener"); `split` defaults to the
/// family's training split where one exists.
#[pyfunction]
#[pyo3(signature = (family, model, x="gp", split=None))]
fn fit_family(family: &str, model: &str, x: &str, split: Option<&str>) -> PyResult<RegressionFit> {
    let family = parse_family(family)?;
    let predictor = match x {
        "gp" => qspr::Predictor::Gp,
        "aut" => qspr::Predictor::AutOrder,
        "wiener" => qspr::Predictor::Wiener,
        other => return Err(value_error(format!("unknown predictor {other:?}"))),
    };
    let split = match split {
        Some(s) => s.parse::<dataset::Split>().map_err(value_error)?,
        None if family == dataset::Family::OctaneIsomer || model == "multilinear" => {
            dataset::Split::All
        }
        None => dataset::Split::Train,
    };
    let inner = match model {
        "multilinear" => {
            if family != dataset::Family::Pah {
                return Err(value_error(
                    "the multilinear model needs the PAH family's #Aut, GP and W columns",
                ));
            }
            qspr::pah_multilinear_fit()
        }
        "log" => {
            qspr::single_predictor_fit(family, predictor, regression::ModelKind::LogSingle, split)
                .map_err(value_error)?
        }
        "linear" => qspr::single_predictor_fit(
            family,
            predictor,
            regression::ModelKind::LinearSingle,
            split,
        )
        .map_err(value_error)?,
        other => return Err(value_error(format!("unknown model {other:?}"))),
    };
    Ok(RegressionFit { inner })
}

/// The octane-isomer correlation study as a dict of R^2 values.
#[pyfunction]
fn octane_correlations(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let c = qspr::octane_correlations();
    let dict = PyDict::new(py);
    dict.set_item("gp_vs_mp", c.gp_vs_mp)?;
    dict.set_item("aut_vs_mp_branched", c.aut_vs_mp_branched)?;
    dict.set_item("gp_vs_mp_without_outlier", c.gp_vs_mp_without_outlier)?;
    dict.set_item("aut_vs_mp_without_outlier", c.aut_vs_mp_without_outlier)?;
    Ok(dict)
}

#[pymodule]
fn gpindex(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<MolecularGraph>()?;
    m.add_class::<DescriptorRecord>()?;
    m.add_class::<RegressionFit>()?;
    m.add_class::<MoleculeEntry>()?;
    m.add_function(wrap_pyfunction!(compute_descriptors, m)?)?;
    m.add_function(wrap_pyfunction!(orbits, m)?)?;
    m.add_function(wrap_pyfunction!(automorphisms, m)?)?;
    m.add_function(wrap_pyfunction!(wiener_index, m)?)?;
    m.add_function(wrap_pyfunction!(wiener_subset, m)?)?;
    m.add_function(wrap_pyfunction!(fit_log, m)?)?;
    m.add_function(wrap_pyfunction!(fit_linear, m)?)?;
    m.add_function(wrap_pyfunction!(fit_multilinear, m)?)?;
    m.add_function(wrap_pyfunction!(r_squared_between, m)?)?;
    m.add_function(wrap_pyfunction!(bundled_family, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bundle, m)?)?;
    m.add_function(wrap_pyfunction!(fit_family, m)?)?;
    m.add_function(wrap_pyfunction!(octane_correlations, m)?)?;
    Ok(())
}
