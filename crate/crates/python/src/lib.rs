//! Python bindings: lattice polytopes with their predicates, duals, normal
//! forms and lemma checks, plus the named constructions and verifiers.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use reflexive::analysis::{check_lemmas, classify_case, nu_kind, special_facets};
use reflexive::constructions::{casagrande_extremal, classification_list, free_sum};
use reflexive::enumeration::enumerate_reflexive_polygons;
use reflexive::io::{parse_polytope, write_polytope};
use reflexive::verifier::{verify_casagrande, verify_polygon_landscape, verify_theorem, VerificationReport};
use reflexive::{Error, IntVector, LatticePolytope, NamedPolytope};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Internal(_) | Error::Construction { .. } | Error::Enumeration(_) | Error::Taxonomy(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn coords(v: &IntVector) -> Vec<BigInt> {
    v.coords().to_vec()
}

#[pyclass(name = "Polytope", module = "reflexive_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPolytope {
    inner: LatticePolytope,
}

impl From<LatticePolytope> for PyPolytope {
    fn from(inner: LatticePolytope) -> Self {
        PyPolytope { inner }
    }
}

#[pymethods]
impl PyPolytope {
    /// Builds the polytope whose vertices are exactly the given points.
    #[new]
    fn new(vertices: Vec<Vec<BigInt>>) -> PyResult<Self> {
        let vs = vertices.into_iter().map(IntVector::new).collect();
        LatticePolytope::new(vs).map(Self::from).map_err(to_py)
    }

    /// Convex hull of the points, dropping those that are not vertices.
    #[staticmethod]
    fn hull(points: Vec<Vec<BigInt>>) -> PyResult<Self> {
        let pts: Vec<IntVector> = points.into_iter().map(IntVector::new).collect();
        LatticePolytope::hull_of(&pts).map(Self::from).map_err(to_py)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        parse_polytope(text).map(Self::from).map_err(to_py)
    }

    fn to_text(&self) -> String {
        write_polytope(&self.inner)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn vertices(&self) -> Vec<Vec<BigInt>> {
        self.inner.vertices().iter().map(coords).collect()
    }

    /// `(normal, offset, vertex indices)` per facet, sorted by normal.
    fn facets(&self) -> Vec<(Vec<BigInt>, BigInt, Vec<usize>)> {
        self.inner
            .facets()
            .iter()
            .map(|f| (coords(f.normal()), f.offset().clone(), f.vertex_indices().to_vec()))
            .collect()
    }

    fn is_reflexive(&self) -> bool {
        self.inner.is_reflexive()
    }

    fn is_simplicial(&self) -> bool {
        self.inner.is_simplicial()
    }

    fn is_smooth_fano(&self) -> bool {
        self.inner.is_smooth_fano()
    }

    fn vertex_sum(&self) -> Vec<BigInt> {
        coords(&self.inner.vertex_sum())
    }

    fn nu_kind(&self) -> String {
        nu_kind(&self.inner).to_string()
    }

    fn picard_number(&self) -> PyResult<usize> {
        self.inner.picard_number().map_err(to_py)
    }

    /// Dual vertices as `(numerator, denominator)` pairs per coordinate.
    fn dual_vertices(&self) -> Vec<Vec<(BigInt, BigInt)>> {
        self.inner
            .dual()
            .vertices()
            .iter()
            .map(|v| v.coords().iter().map(|c| (c.numer().clone(), c.denom().clone())).collect())
            .collect()
    }

    /// The dual when it is a lattice polytope.
    fn dual(&self) -> PyResult<Option<Self>> {
        match self.inner.dual().to_lattice() {
            None => Ok(None),
            Some(r) => r.map(|p| Some(p.into())).map_err(to_py),
        }
    }

    fn normal_form(&self) -> Vec<Vec<BigInt>> {
        reflexive::normal_form(&self.inner).matrix().rows().iter().map(coords).collect()
    }

    fn is_isomorphic(&self, other: &PyPolytope) -> bool {
        reflexive::is_isomorphic(&self.inner, &other.inner)
    }

    /// `(interior, boundary)` lattice points.
    fn lattice_points(&self) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
        let (i, b) = self.inner.lattice_points();
        (i.iter().map(coords).collect(), b.iter().map(coords).collect())
    }

    fn special_facets(&self) -> PyResult<Vec<usize>> {
        special_facets(&self.inner).map_err(to_py)
    }

    fn classify_case(&self, facet: usize) -> PyResult<String> {
        classify_case(&self.inner, facet).map(|c| c.to_string()).map_err(to_py)
    }

    /// Violation lines; empty when every lemma holds.
    fn check_lemmas(&self) -> PyResult<Vec<String>> {
        let report = check_lemmas(&self.inner).map_err(to_py)?;
        Ok(report.violations.iter().map(|v| v.to_string()).collect())
    }

    fn free_sum(&self, other: &PyPolytope) -> PyResult<Self> {
        free_sum(&self.inner, &other.inner).map(Self::from).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.inner.num_vertices()
    }

    fn __eq__(&self, other: &PyPolytope) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Polytope({})", self.inner)
    }
}

#[pyfunction]
fn construct(name: &str) -> PyResult<PyPolytope> {
    let name: NamedPolytope = name.parse().map_err(to_py)?;
    reflexive::construct(name).map(PyPolytope::from).map_err(to_py)
}

#[pyfunction(name = "classification_list")]
fn py_classification_list(d: usize) -> PyResult<Vec<PyPolytope>> {
    Ok(classification_list(d).map_err(to_py)?.into_iter().map(PyPolytope::from).collect())
}

#[pyfunction(name = "casagrande_extremal")]
fn py_casagrande_extremal(d: usize) -> PyResult<PyPolytope> {
    casagrande_extremal(d).map(PyPolytope::from).map_err(to_py)
}

#[pyfunction]
fn reflexive_polygons() -> PyResult<Vec<PyPolytope>> {
    Ok(enumerate_reflexive_polygons()
        .map_err(to_py)?
        .into_iter()
        .map(|c| PyPolytope::from(c.representative))
        .collect())
}

fn report(r: reflexive::Result<VerificationReport>) -> PyResult<(bool, String)> {
    let r = r.map_err(to_py)?;
    Ok((r.passed(), r.to_text()))
}

/// `(passed, report text)` for the classification list in dimension `d`.
#[pyfunction]
fn verify(d: usize) -> PyResult<(bool, String)> {
    report(verify_theorem(d))
}

#[pyfunction]
fn verify_hexagon_sum(d: usize) -> PyResult<(bool, String)> {
    report(verify_casagrande(d))
}

#[pyfunction]
fn verify_polygons() -> PyResult<(bool, String)> {
    report(verify_polygon_landscape())
}

#[pymodule]
fn reflexive_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolytope>()?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(py_classification_list, m)?)?;
    m.add_function(wrap_pyfunction!(py_casagrande_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(reflexive_polygons, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_hexagon_sum, m)?)?;
    m.add_function(wrap_pyfunction!(verify_polygons, m)?)?;
    Ok(())
}
