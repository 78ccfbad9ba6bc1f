//! Python bindings: `import transdec`.
//!
//! Grid vertices cross the boundary as `(row, col)` tuples, complete-graph
//! vertices as 1-based integer labels, and steps as `(drow, dcol)` tuples.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyTuple};

use transdec::decomposition::{diagonal_fixture_n4, gallai_check, k9_fixture, refine_decomposition};
use transdec::group::{find_fixed_edge, orbit_census as census};
use transdec::{io, Edge, Error, FiniteGroup, Graph, GridGraph, StepArray};

create_exception!(transdec, TransdecError, PyValueError, "Base class for transdec errors.");
create_exception!(transdec, ConstructionError, TransdecError, "A construction check or precondition failed.");
create_exception!(transdec, SchemaError, TransdecError, "Serialized input does not match the schema.");

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::ConstructionInvalid { .. } | Error::PreconditionFailed(_) => ConstructionError::new_err(e.to_string()),
        Error::Schema { .. } => SchemaError::new_err(e.to_string()),
        _ => TransdecError::new_err(e.to_string()),
    }
}

fn grid(n: usize, m: Option<usize>) -> PyResult<GridGraph> {
    GridGraph::new(n, m.unwrap_or(n)).map_err(to_py_err)
}

fn array(g: GridGraph, steps: Vec<(i64, i64)>) -> PyResult<StepArray> {
    StepArray::from_pairs(g, &steps).map_err(to_py_err)
}

fn vertex_py<'py>(py: Python<'py>, graph: &Graph, v: usize) -> PyResult<Bound<'py, PyAny>> {
    match graph {
        Graph::Grid(g) => {
            let x = g.vertex_at(v);
            Ok((x.row(), x.col()).into_pyobject(py)?.into_any())
        }
        Graph::Complete(_) => Ok((v + 1).into_pyobject(py)?.into_any()),
    }
}

fn edge_py<'py>(py: Python<'py>, graph: &Graph, e: Edge) -> PyResult<Bound<'py, PyTuple>> {
    PyTuple::new(py, [vertex_py(py, graph, e.lo())?, vertex_py(py, graph, e.hi())?])
}

fn edges_py<'py>(py: Python<'py>, graph: &Graph, edges: &[Edge]) -> PyResult<Bound<'py, PyList>> {
    let items = edges.iter().map(|&e| edge_py(py, graph, e)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// A decomposition together with the report from verifying it.
#[pyclass(name = "Decomposition", module = "transdec", frozen)]
struct PyDecomposition {
    dec: transdec::Decomposition,
    report: transdec::VerificationReport,
}

impl PyDecomposition {
    fn wrap(dec: transdec::Decomposition) -> Self {
        let report = transdec::verify_decomposition(&dec);
        PyDecomposition { dec, report }
    }
}

#[pymethods]
impl PyDecomposition {
    /// Staircase decomposition of K_n x K_n under the row shift.
    #[staticmethod]
    #[pyo3(signature = (n, force = false))]
    fn staircase(n: usize, force: bool) -> PyResult<Self> {
        let (dec, report) = transdec::staircase_decomposition(n, force).map_err(to_py_err)?;
        Ok(PyDecomposition { dec, report })
    }

    /// One of the worked examples: "k9", "fig3" or "diag4".
    #[staticmethod]
    fn example(name: &str) -> PyResult<Self> {
        let built = match name {
            "k9" => k9_fixture().decompose(),
            "fig3" => transdec::staircase_decomposition(3, false),
            "diag4" => diagonal_fixture_n4().0.decompose(),
            other => return Err(TransdecError::new_err(format!("unknown example {other:?}"))),
        };
        let (dec, report) = built.map_err(to_py_err)?;
        Ok(PyDecomposition { dec, report })
    }

    /// Parses decomposition JSON and re-verifies it from scratch.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::from_json(text).map(Self::wrap).map_err(to_py_err)
    }

    fn to_json(&self) -> String {
        io::to_json(&self.dec, Some(&self.report))
    }

    fn to_dot(&self) -> String {
        io::export_dot(&self.dec)
    }

    fn to_edge_list(&self) -> String {
        io::export_edges(&self.dec.graph, &self.dec.blocks)
    }

    #[getter]
    fn graph(&self) -> String {
        self.dec.graph.describe()
    }

    #[getter]
    fn group_order(&self) -> usize {
        self.dec.group.order()
    }

    fn __len__(&self) -> usize {
        self.dec.blocks.len()
    }

    /// Each block as a sorted list of edges.
    #[getter]
    fn blocks<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let items =
            self.dec.blocks.iter().map(|b| edges_py(py, &self.dec.graph, b.edges())).collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, items)
    }

    /// Base block vertices in path order, or None when the base is not a path.
    #[getter]
    fn base_path<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyList>>> {
        let order = match self.dec.base.trail() {
            Some(t) => Some(t.to_vec()),
            None => self.dec.base.path_order(),
        };
        order
            .map(|vs| {
                let items = vs.iter().map(|&v| vertex_py(py, &self.dec.graph, v)).collect::<PyResult<Vec<_>>>()?;
                PyList::new(py, items)
            })
            .transpose()
    }

    /// Verification flags plus a list of witness strings.
    fn report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (flag, ok) in self.report.flags() {
            d.set_item(flag, ok)?;
        }
        let witnesses: Vec<String> = self.report.witnesses.iter().map(ToString::to_string).collect();
        d.set_item("witnesses", witnesses)?;
        Ok(d)
    }

    fn verified(&self) -> bool {
        self.report.all_passed()
    }

    fn gallai_check(&self) -> bool {
        gallai_check(&self.dec)
    }

    /// Cuts every block into paths of `b` edges.
    fn split<'py>(&self, py: Python<'py>, b: usize) -> PyResult<Bound<'py, PyList>> {
        let paths = refine_decomposition(&self.dec, b).map_err(to_py_err)?;
        let items = paths.iter().map(|p| edges_py(py, &self.dec.graph, p.edges())).collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, items)
    }

    fn __repr__(&self) -> String {
        format!(
            "Decomposition({}, {} blocks, {})",
            self.dec.graph.describe(),
            self.dec.blocks.len(),
            if self.report.all_passed() { "verified" } else { "not verified" }
        )
    }
}

/// Steps of the staircase array for odd n.
#[pyfunction]
fn staircase_array(n: usize) -> PyResult<Vec<(usize, usize)>> {
    let arr = transdec::staircase_array(n).map_err(to_py_err)?;
    Ok(arr.steps().iter().map(|s| (s.drow(), s.dcol())).collect())
}

/// Closed-form sum of steps p..=q (1-based) of stretch k.
#[pyfunction]
fn partial_stretch_sum(n: usize, k: usize, p: usize, q: usize) -> PyResult<(usize, usize)> {
    transdec::partial_stretch_sum(n, k, p, q).map_err(to_py_err)
}

/// Vertices visited from `start` along `steps` on K_n x K_m.
#[pyfunction]
#[pyo3(signature = (n, steps, start = (0, 0), m = None))]
fn walk(n: usize, steps: Vec<(i64, i64)>, start: (usize, usize), m: Option<usize>) -> PyResult<Vec<(usize, usize)>> {
    let g = grid(n, m)?;
    let v0 = g.checked_vertex(start.0, start.1).map_err(to_py_err)?;
    let w = transdec::walk_from_array(v0, &array(g, steps)?).map_err(to_py_err)?;
    Ok(w.vertices().iter().map(|v| (v.row(), v.col())).collect())
}

/// True when the walk along `steps` never revisits a vertex.
#[pyfunction]
#[pyo3(signature = (n, steps, m = None))]
fn is_path(n: usize, steps: Vec<(i64, i64)>, m: Option<usize>) -> PyResult<bool> {
    let g = grid(n, m)?;
    let w = transdec::walk_from_array(g.vertex(0, 0), &array(g, steps)?).map_err(to_py_err)?;
    Ok(transdec::is_path(&w))
}

/// True when no two edges of the walk share a row-shift orbit.
#[pyfunction]
#[pyo3(signature = (n, steps, m = None))]
fn one_edge_per_orbit(n: usize, steps: Vec<(i64, i64)>, m: Option<usize>) -> PyResult<bool> {
    Ok(transdec::one_edge_per_orbit(&array(grid(n, m)?, steps)?))
}

/// Edge orbits as `(label, edges)` pairs.
#[pyfunction]
#[pyo3(signature = (n, m = None, group = "row_shift"))]
fn edge_orbits<'py>(py: Python<'py>, n: usize, m: Option<usize>, group: &str) -> PyResult<Bound<'py, PyList>> {
    let g = grid(n, m)?;
    let fg = match group {
        "row_shift" => FiniteGroup::row_shift(g),
        "diagonal_shift" => FiniteGroup::diagonal_shift(g).map_err(to_py_err)?,
        other => return Err(TransdecError::new_err(format!("unknown group {other:?}"))),
    };
    let graph = Graph::from(g);
    let items = transdec::edge_orbits(&graph, &fg)
        .iter()
        .map(|o| {
            PyTuple::new(
                py,
                [o.id.label(&graph).into_pyobject(py)?.into_any(), edges_py(py, &graph, &o.edges)?.into_any()],
            )
        })
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Row-shift orbit counts by formula, for odd n.
#[pyfunction]
fn orbit_census<'py>(py: Python<'py>, n: usize, m: usize) -> PyResult<Bound<'py, PyDict>> {
    let c = census(n, m).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("horizontal", c.horizontal)?;
    d.set_item("vertical", c.vertical)?;
    d.set_item("orbit_size", c.orbit_size)?;
    d.set_item("total", c.total())?;
    Ok(d)
}

/// An edge fixed by some non-identity row shift, if any.
#[pyfunction]
#[pyo3(signature = (n, m = None))]
fn fixed_edge<'py>(py: Python<'py>, n: usize, m: Option<usize>) -> PyResult<Option<Bound<'py, PyTuple>>> {
    let g = grid(n, m)?;
    let graph = Graph::from(g);
    find_fixed_edge(&graph, &FiniteGroup::row_shift(g)).map(|(_, e)| edge_py(py, &graph, e)).transpose()
}

#[pymodule]
#[pyo3(name = "transdec")]
fn transdec_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("TransdecError", py.get_type::<TransdecError>())?;
    m.add("ConstructionError", py.get_type::<ConstructionError>())?;
    m.add("SchemaError", py.get_type::<SchemaError>())?;
    m.add_class::<PyDecomposition>()?;
    m.add_function(wrap_pyfunction!(staircase_array, m)?)?;
    m.add_function(wrap_pyfunction!(partial_stretch_sum, m)?)?;
    m.add_function(wrap_pyfunction!(walk, m)?)?;
    m.add_function(wrap_pyfunction!(is_path, m)?)?;
    m.add_function(wrap_pyfunction!(one_edge_per_orbit, m)?)?;
    m.add_function(wrap_pyfunction!(edge_orbits, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_census, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_edge, m)?)?;
    Ok(())
}
