//! Python bindings: graphs, generators, the solver, constructions,
//! reductions and the claims registry.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Duration;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use signhom_core::constructions as cons;
use signhom_core::hom::{self, SearchConfig};
use signhom_core::reductions::{self as red, GadgetKind};
use signhom_core::{families, io, SwitchSet};

create_exception!(signhom, SignhomError, PyValueError, "Invalid input or failed operation.");

fn err(e: signhom_core::Error) -> PyErr {
    SignhomError::new_err(e.to_string())
}

fn from_json<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

/// A graph with integer edge colours (signs are +1 / -1).
#[pyclass(name = "Graph", module = "signhom", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: signhom_core::Graph,
}

impl From<signhom_core::Graph> for PyGraph {
    fn from(inner: signhom_core::Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (vertices, edges, name = None))]
    fn new(vertices: Vec<String>, edges: Vec<(String, String, i32)>, name: Option<String>) -> PyResult<Self> {
        let g = signhom_core::Graph::new(vertices, edges).map_err(err)?;
        Ok(match name {
            Some(n) => g.with_name(n),
            None => g,
        }
        .into())
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        io::graph_from_json(s).map(Into::into).map_err(err)
    }

    fn to_json(&self) -> String {
        io::graph_to_json(&self.inner)
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.inner.name().map(str::to_string)
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().to_vec()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String, i32)> {
        let g = &self.inner;
        g.edges()
            .iter()
            .map(|e| (g.vertex_name(e.u).to_string(), g.vertex_name(e.v).to_string(), e.colour))
            .collect()
    }

    #[getter]
    fn has_rotation(&self) -> bool {
        self.inner.rotation().is_some()
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph({:?}, {} vertices, {} edges)",
            self.inner.name().unwrap_or(""),
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }

    /// Girth (None for forests), bipartiteness, maximum degree, components.
    fn stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let s = self.inner.stats();
        from_json(
            py,
            &serde_json::json!({
                "girth": s.girth,
                "bipartite": s.bipartite,
                "max_degree": s.max_degree,
                "connected_components": s.connected_components,
            }),
        )
    }

    fn is_balanced(&self) -> PyResult<bool> {
        self.inner.is_balanced().map_err(err)
    }

    fn switch(&self, vertices: BTreeSet<String>) -> PyResult<Self> {
        self.inner.switch(&SwitchSet::new(vertices)).map(Into::into).map_err(err)
    }

    /// A switching set turning this graph into `other`, or None.
    fn switching_equivalent(&self, other: &PyGraph) -> PyResult<Option<BTreeSet<String>>> {
        Ok(self
            .inner
            .switching_equivalent(&other.inner)
            .map_err(err)?
            .map(|s| s.members().clone()))
    }

    /// Face walks of the stored rotation; raises if it is not planar.
    fn certify_embedding(&self) -> PyResult<Vec<Vec<String>>> {
        let g = &self.inner;
        let r = g.rotation().ok_or(signhom_core::Error::MissingEmbedding).map_err(err)?;
        let rep = signhom_core::embedding::certify_embedding(g, r).map_err(err)?;
        Ok(rep
            .faces
            .iter()
            .map(|f| f.vertices.iter().map(|&v| g.vertex_name(v).to_string()).collect())
            .collect())
    }
}

#[pyfunction]
#[pyo3(signature = (t, signs = None))]
fn gen_cycle(t: usize, signs: Option<Vec<i32>>) -> PyResult<PyGraph> {
    families::gen_cycle(t, signs.as_deref()).map(Into::into).map_err(err)
}

#[pyfunction]
fn gen_uc(n: usize) -> PyResult<PyGraph> {
    families::gen_uc(n).map(Into::into).map_err(err)
}

#[pyfunction]
fn gen_cycle_square(t: usize) -> PyResult<PyGraph> {
    families::gen_cycle_square(t).map(Into::into).map_err(err)
}

#[pyfunction]
fn gen_circular_clique(p: usize, q: usize) -> PyResult<PyGraph> {
    families::gen_circular_clique(p, q).map(Into::into).map_err(err)
}

#[pyfunction]
fn gen_complete(n: usize) -> PyResult<PyGraph> {
    families::gen_complete(n).map(Into::into).map_err(err)
}

#[pyfunction]
fn gen_path(n: usize) -> PyResult<PyGraph> {
    families::gen_path(n).map(Into::into).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, p = 0.5, seed = 0))]
fn gen_random_signed(n: usize, p: f64, seed: u64) -> PyResult<PyGraph> {
    families::gen_random_signed(n, p, seed).map(Into::into).map_err(err)
}

fn config(deterministic: bool) -> SearchConfig {
    if deterministic {
        SearchConfig::deterministic()
    } else {
        SearchConfig::default()
    }
}

/// A homomorphism as a vertex-name dict, or None.
#[pyfunction]
#[pyo3(signature = (g, h, deterministic = false))]
fn find_hom(py: Python<'_>, g: &PyGraph, h: &PyGraph, deterministic: bool) -> PyResult<Option<BTreeMap<String, String>>> {
    let (g, h) = (&g.inner, &h.inner);
    let f = py.detach(|| hom::find_hom(g, h, &config(deterministic))).map_err(err)?;
    Ok(f.map(|f| f.to_names(g, h)))
}

/// Up to `limit` homomorphisms; raises when more exist.
#[pyfunction]
#[pyo3(signature = (g, h, limit = 100_000))]
fn enumerate_homs(py: Python<'_>, g: &PyGraph, h: &PyGraph, limit: usize) -> PyResult<Vec<BTreeMap<String, String>>> {
    let (g, h) = (&g.inner, &h.inner);
    let homs = py
        .detach(|| hom::enumerate_homs(g, h, &SearchConfig::default().with_limit(limit)))
        .map_err(err)?;
    Ok(homs.iter().map(|f| f.to_names(g, h)).collect())
}

/// `(switch_set, assignment)` for an s-homomorphism, or None.
#[pyfunction]
fn find_shom(
    py: Python<'_>,
    g: &PyGraph,
    h: &PyGraph,
) -> PyResult<Option<(BTreeSet<String>, BTreeMap<String, String>)>> {
    let (g, h) = (&g.inner, &h.inner);
    let w = py.detach(|| hom::find_shom(g, h, &SearchConfig::default())).map_err(err)?;
    Ok(w.map(|w| (w.switch_set.members().clone(), w.hom.to_names(g, h))))
}

#[pyfunction]
fn find_iso(py: Python<'_>, g: &PyGraph, h: &PyGraph) -> PyResult<Option<BTreeMap<String, String>>> {
    let (g, h) = (&g.inner, &h.inner);
    let f = py.detach(|| hom::find_iso(g, h)).map_err(err)?;
    Ok(f.map(|f| f.to_names(g, h)))
}

#[pyfunction]
fn is_isomorphic(py: Python<'_>, g: &PyGraph, h: &PyGraph) -> PyResult<bool> {
    py.detach(|| hom::is_isomorphic(&g.inner, &h.inner)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, bound = hom::CORE_BOUND))]
fn core_of(py: Python<'_>, g: &PyGraph, bound: usize) -> PyResult<PyGraph> {
    py.detach(|| hom::core_of_bounded(&g.inner, bound)).map(Into::into).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, bound = hom::CORE_BOUND))]
fn score_of(py: Python<'_>, g: &PyGraph, bound: usize) -> PyResult<PyGraph> {
    py.detach(|| hom::score_of_bounded(&g.inner, bound)).map(Into::into).map_err(err)
}

#[pyfunction]
fn rho(h: &PyGraph) -> PyResult<PyGraph> {
    cons::rho(&h.inner).map(Into::into).map_err(err)
}

#[pyfunction]
fn rho_uc_canonical(n: usize) -> PyResult<PyGraph> {
    cons::rho_uc_canonical(n).map(Into::into).map_err(err)
}

/// `H*` for the indicator `(indicator, i, j)`.
#[pyfunction]
fn indicator_apply(py: Python<'_>, h: &PyGraph, indicator: &PyGraph, i: &str, j: &str) -> PyResult<PyGraph> {
    let ind = cons::Indicator::new(indicator.inner.clone(), i, j).map_err(err)?;
    py.detach(|| cons::indicator_apply(&h.inner, &ind)).map(Into::into).map_err(err)
}

#[pyfunction]
fn uc_indicator() -> (PyGraph, String, String) {
    let ind = red::uc_indicator();
    (ind.graph().clone().into(), ind.i_name().to_string(), ind.j_name().to_string())
}

#[pyfunction]
fn cc_indicator(t: usize) -> PyResult<(PyGraph, String, String)> {
    let ind = red::cc_indicator(t).map_err(err)?;
    Ok((ind.graph().clone().into(), ind.i_name().to_string(), ind.j_name().to_string()))
}

/// `{"forced", "hom_exists", "tuples", "vertices"}`.
#[pyfunction]
#[pyo3(signature = (g, vertices, h, limit = None))]
fn check_forcing<'py>(
    py: Python<'py>,
    g: &PyGraph,
    vertices: Vec<String>,
    h: &PyGraph,
    limit: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let rep = py
        .detach(|| cons::check_forcing(&g.inner, &vertices, &h.inner, limit))
        .map_err(err)?;
    from_json(
        py,
        &serde_json::json!({
            "forced": rep.forced,
            "hom_exists": rep.hom_exists,
            "tuples": rep.tuples,
            "vertices": rep.vertices,
        }),
    )
}

/// `(graph, ports, zeros)` for kind `copy`, `split`, `crossing`, `vertex`
/// (needs `d`) or `degree` (needs `k`, `m`).
#[pyfunction]
#[pyo3(signature = (kind, d = None, k = None, m = None))]
fn gadget(
    kind: &str,
    d: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
) -> PyResult<(PyGraph, Vec<(String, String)>, Vec<String>)> {
    let missing = |n: &str| SignhomError::new_err(format!("gadget `{kind}` needs {n}"));
    let kind = match kind {
        "copy" => GadgetKind::Copy,
        "split" => GadgetKind::Split,
        "crossing" => GadgetKind::Crossing,
        "vertex" => GadgetKind::Vertex(d.ok_or_else(|| missing("d"))?),
        "degree" => GadgetKind::Degree {
            k: k.ok_or_else(|| missing("k"))?,
            m: m.ok_or_else(|| missing("m"))?,
        },
        other => return Err(SignhomError::new_err(format!("unknown gadget kind `{other}`"))),
    };
    let gd = red::gadget(kind).map_err(err)?;
    Ok((gd.graph.into(), gd.ports, gd.zeros))
}

/// `(graph, certificate)`; uses the rotation stored with `g`.
#[pyfunction]
fn reduce_3col_to_uc4<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<(PyGraph, Bound<'py, PyAny>)> {
    let g = &g.inner;
    let rot = g.rotation().ok_or(signhom_core::Error::MissingEmbedding).map_err(err)?;
    let (out, cert) = red::reduce_3col_to_uc4(g, rot).map_err(err)?;
    let c = from_json(py, &io::certificate_to_value(&out, &cert))?;
    Ok((out.into(), c))
}

#[pyfunction]
fn reduce_to_cycle_square<'py>(py: Python<'py>, g: &PyGraph, t: usize) -> PyResult<(PyGraph, Bound<'py, PyAny>)> {
    let g = &g.inner;
    let (out, cert) = red::reduce_to_cycle_square(g, t, g.rotation()).map_err(err)?;
    let c = from_json(py, &io::certificate_to_value(&out, &cert))?;
    Ok((out.into(), c))
}

/// Claim reports as dicts `{id, status, evidence, runtime_s}`.
#[pyfunction]
#[pyo3(signature = (pattern = None, budget = 600.0))]
fn run_claims<'py>(py: Python<'py>, pattern: Option<String>, budget: f64) -> PyResult<Bound<'py, PyAny>> {
    let budget = Duration::try_from_secs_f64(budget).map_err(|e| SignhomError::new_err(e.to_string()))?;
    let reports = py
        .detach(|| signhom_core::claims::run_claims(pattern.as_deref(), budget))
        .map_err(err)?;
    let v = serde_json::to_value(&reports).map_err(|e| SignhomError::new_err(e.to_string()))?;
    from_json(py, &v)
}

#[pymodule]
fn signhom(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SignhomError", m.py().get_type::<SignhomError>())?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(gen_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(gen_uc, m)?)?;
    m.add_function(wrap_pyfunction!(gen_cycle_square, m)?)?;
    m.add_function(wrap_pyfunction!(gen_circular_clique, m)?)?;
    m.add_function(wrap_pyfunction!(gen_complete, m)?)?;
    m.add_function(wrap_pyfunction!(gen_path, m)?)?;
    m.add_function(wrap_pyfunction!(gen_random_signed, m)?)?;
    m.add_function(wrap_pyfunction!(find_hom, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_homs, m)?)?;
    m.add_function(wrap_pyfunction!(find_shom, m)?)?;
    m.add_function(wrap_pyfunction!(find_iso, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(core_of, m)?)?;
    m.add_function(wrap_pyfunction!(score_of, m)?)?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(rho_uc_canonical, m)?)?;
    m.add_function(wrap_pyfunction!(indicator_apply, m)?)?;
    m.add_function(wrap_pyfunction!(uc_indicator, m)?)?;
    m.add_function(wrap_pyfunction!(cc_indicator, m)?)?;
    m.add_function(wrap_pyfunction!(check_forcing, m)?)?;
    m.add_function(wrap_pyfunction!(gadget, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_3col_to_uc4, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_to_cycle_square, m)?)?;
    m.add_function(wrap_pyfunction!(run_claims, m)?)?;
    Ok(())
}
