//! Python module `dibchrom`.
//!
//! Structured results (audits, solve outcomes, reports, catalogs) are
//! returned as plain dicts and lists with the same field names as the CLI's
//! JSON payloads.

// pyo3 0.22 method wrappers trip this lint on every PyResult return.
#![allow(clippy::useless_conversion)]

use dib_core::codec::{from_digraph6, from_edge_list, to_digraph6, to_edge_list};
use dib_core::constructions::{
    construct as build, spread_basis_coloring as basis_coloring, spread_vertices as spread,
    FamilySpec,
};
use dib_core::enumeration::{self as lab, PropertyId, Sample};
use dib_core::{Coloring, Error, VertexSet};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyBytes;
use serde::Serialize;

create_exception!(dibchrom, DibError, PyValueError);

fn err(e: Error) -> PyErr {
    DibError::new_err(format!("{}: {e}", e.kind()))
}

/// Converts a serializable value to native Python objects through JSON.
fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<PyObject> {
    let text = serde_json::to_string(value).map_err(|e| DibError::new_err(e.to_string()))?;
    let json = py.import_bound("json")?;
    Ok(json.call_method1("loads", (text,))?.unbind())
}

#[pyclass(frozen, eq, module = "dibchrom")]
#[derive(Clone, PartialEq)]
struct Digraph {
    inner: dib_core::Digraph,
}

impl From<dib_core::Digraph> for Digraph {
    fn from(inner: dib_core::Digraph) -> Self {
        Digraph { inner }
    }
}

#[pymethods]
impl Digraph {
    #[new]
    #[pyo3(signature = (n, darts=Vec::new()))]
    fn new(n: usize, darts: Vec<(usize, usize)>) -> PyResult<Self> {
        dib_core::Digraph::new(n, &darts)
            .map(Into::into)
            .map_err(err)
    }

    #[staticmethod]
    fn from_digraph6(text: &str) -> PyResult<Self> {
        from_digraph6(text).map(Into::into).map_err(err)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        from_edge_list(text).map(Into::into).map_err(err)
    }

    /// Builds a family member from its text form, e.g. `circulant:n=7,J=1+2+3`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(err)?;
        spec.generate().map(Into::into).map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Digraph.from_digraph6({:?})", to_digraph6(&self.inner))
    }

    fn darts(&self) -> Vec<(usize, usize)> {
        self.inner.darts()
    }

    fn has_dart(&self, u: usize, v: usize) -> bool {
        u < self.inner.order() && v < self.inner.order() && self.inner.has_dart(u, v)
    }

    fn out_neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.inner.out_neighbors(v).to_vec())
    }

    fn in_neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.inner.in_neighbors(v).to_vec())
    }

    fn to_digraph6(&self) -> String {
        to_digraph6(&self.inner)
    }

    fn to_edge_list(&self) -> String {
        to_edge_list(&self.inner)
    }

    fn complement(&self) -> Self {
        self.inner.complement().into()
    }

    fn converse(&self) -> Self {
        self.inner.converse().into()
    }

    fn induced(&self, vertices: Vec<usize>) -> PyResult<Self> {
        self.inner
            .induced_by(&vertices)
            .map(Into::into)
            .map_err(err)
    }

    fn relabel(&self, perm: Vec<usize>) -> PyResult<Self> {
        self.inner.relabel(&perm).map(Into::into).map_err(err)
    }

    fn is_acyclic(&self) -> bool {
        self.inner.is_acyclic()
    }

    fn regularity(&self) -> Option<usize> {
        self.inner.regularity()
    }

    /// Strong component of each vertex, numbered in topological order.
    fn strong_components(&self) -> Vec<usize> {
        self.inner.strong_condensation().component
    }
}

impl Digraph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v < self.inner.order() {
            Ok(())
        } else {
            Err(err(Error::VertexOutOfRange {
                vertex: v,
                n: self.inner.order(),
            }))
        }
    }
}

fn coloring(colors: Vec<usize>) -> PyResult<Coloring> {
    Coloring::new(colors).map_err(err)
}

#[pyfunction]
fn audit(py: Python<'_>, d: &Digraph, colors: Vec<usize>) -> PyResult<PyObject> {
    let a = dib_core::audit(&d.inner, &coloring(colors)?).map_err(err)?;
    to_py(py, &a)
}

#[pyfunction]
#[pyo3(signature = (d, order=None))]
fn greedy_acyclic(d: &Digraph, order: Option<Vec<usize>>) -> PyResult<Vec<usize>> {
    let order = order.unwrap_or_else(|| (0..d.inner.order()).collect());
    dib_core::greedy_acyclic(&d.inner, &order)
        .map(|c| c.as_slice().to_vec())
        .map_err(err)
}

#[pyfunction]
fn b_reduce(d: &Digraph, colors: Vec<usize>) -> PyResult<Vec<usize>> {
    dib_core::b_reduce(&d.inner, &coloring(colors)?)
        .map(|c| c.as_slice().to_vec())
        .map_err(err)
}

/// Exact dc, dac or dib; returns the solve outcome with its witness.
#[pyfunction]
#[pyo3(signature = (d, param="dib"))]
fn solve(py: Python<'_>, d: &Digraph, param: &str) -> PyResult<PyObject> {
    let p: dib_core::Parameter = param.parse().map_err(|_| {
        DibError::new_err(format!(
            "unknown parameter `{param}`; expected dc, dac or dib"
        ))
    })?;
    let g = &d.inner;
    let outcome = py
        .allow_threads(|| match p {
            dib_core::Parameter::Dc => dib_core::dc_exact(g),
            dib_core::Parameter::Dac => dib_core::dac_exact(g),
            dib_core::Parameter::Dib => dib_core::dib_exact(g),
        })
        .map_err(err)?;
    to_py(py, &outcome)
}

#[pyfunction]
fn dc(py: Python<'_>, d: &Digraph) -> PyResult<usize> {
    py.allow_threads(|| dib_core::dc_exact(&d.inner))
        .map(|o| o.value)
        .map_err(err)
}

#[pyfunction]
fn dac(py: Python<'_>, d: &Digraph) -> PyResult<usize> {
    py.allow_threads(|| dib_core::dac_exact(&d.inner))
        .map(|o| o.value)
        .map_err(err)
}

#[pyfunction]
fn dib(py: Python<'_>, d: &Digraph) -> PyResult<usize> {
    py.allow_threads(|| dib_core::dib_exact(&d.inner))
        .map(|o| o.value)
        .map_err(err)
}

/// An acyclic b-coloring with exactly `k` colors, or None.
#[pyfunction]
fn b_coloring(py: Python<'_>, d: &Digraph, k: usize) -> PyResult<Option<Vec<usize>>> {
    py.allow_threads(|| dib_core::b_coloring_exists(&d.inner, k))
        .map(|c| c.map(|c| c.as_slice().to_vec()))
        .map_err(err)
}

#[pyfunction]
fn bounds(py: Python<'_>, d: &Digraph) -> PyResult<PyObject> {
    let r = py
        .allow_threads(|| dib_core::bounds_report(&d.inner))
        .map_err(err)?;
    to_py(py, &r)
}

/// Family member with its closed-form coloring: `(digraph, coloring, method)`.
#[pyfunction]
fn construct(spec: &str) -> PyResult<(Digraph, Vec<usize>, &'static str)> {
    let spec: FamilySpec = spec.parse().map_err(err)?;
    let c = build(&spec).map_err(err)?;
    Ok((c.digraph.into(), c.coloring.as_slice().to_vec(), c.method))
}

#[pyfunction]
fn spread_vertices(d: &Digraph, r: usize) -> PyResult<Option<(Vec<usize>, Vec<usize>)>> {
    spread(&d.inner, r)
        .map(|found| found.map(|(p, m)| (p.to_vec(), m.to_vec())))
        .map_err(err)
}

#[pyfunction]
fn spread_basis_coloring(
    d: &Digraph,
    bplus: Vec<usize>,
    bminus: Vec<usize>,
) -> PyResult<Vec<usize>> {
    let n = d.inner.order();
    let p = VertexSet::from_vertices(n, bplus).map_err(err)?;
    let m = VertexSet::from_vertices(n, bminus).map_err(err)?;
    basis_coloring(&d.inner, &p, &m)
        .map(|c| c.as_slice().to_vec())
        .map_err(err)
}

#[pyfunction]
fn canonical_form<'py>(py: Python<'py>, d: &Digraph) -> PyResult<Bound<'py, PyBytes>> {
    let form = lab::canonical_form(&d.inner).map_err(err)?;
    Ok(PyBytes::new_bound(py, &form.0))
}

#[pyfunction]
#[pyo3(signature = (n, r, up_to_iso=true))]
fn enumerate_regular(
    py: Python<'_>,
    n: usize,
    r: usize,
    up_to_iso: bool,
) -> PyResult<Vec<Digraph>> {
    py.allow_threads(|| lab::enumerate_regular(n, r, up_to_iso))
        .map(|all| all.into_iter().map(Into::into).collect())
        .map_err(err)
}

#[pyfunction]
fn conjecture_scan(py: Python<'_>, n_max: usize) -> PyResult<PyObject> {
    let scan = py
        .allow_threads(|| lab::conjecture_scan(n_max))
        .map_err(err)?;
    to_py(py, &scan)
}

/// Exhaustive sweep when `sample` is None, otherwise `sample` random instances.
#[pyfunction]
#[pyo3(signature = (n_max, properties=None, sample=None, seed=0, min_order=1))]
fn property_sweep(
    py: Python<'_>,
    n_max: usize,
    properties: Option<Vec<String>>,
    sample: Option<usize>,
    seed: u64,
    min_order: usize,
) -> PyResult<PyObject> {
    let props: Vec<PropertyId> = match properties {
        None => PropertyId::ALL.to_vec(),
        Some(ids) => ids
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_, _>>()
            .map_err(err)?,
    };
    let sample = sample.map(|count| Sample {
        count,
        seed,
        min_order,
    });
    let reports = py
        .allow_threads(|| lab::property_sweep(n_max, &props, sample))
        .map_err(err)?;
    to_py(py, &reports)
}

#[pymodule]
fn dibchrom(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DibError", m.py().get_type_bound::<DibError>())?;
    m.add_class::<Digraph>()?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_acyclic, m)?)?;
    m.add_function(wrap_pyfunction!(b_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(dc, m)?)?;
    m.add_function(wrap_pyfunction!(dac, m)?)?;
    m.add_function(wrap_pyfunction!(dib, m)?)?;
    m.add_function(wrap_pyfunction!(b_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(spread_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(spread_basis_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_regular, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_scan, m)?)?;
    m.add_function(wrap_pyfunction!(property_sweep, m)?)?;
    Ok(())
}
