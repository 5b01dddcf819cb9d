//! Python bindings.
//!
//! Exposes the main value types and the two halves of the toolkit: the
//! exact-rational determinant side (`Matrix`) and the max-plus side
//! (`Array`, `CornerGrid`, `Pyramid`, `PlanePartition`, `Tableau`) together
//! with the correspondence between arrays and tableau pairs.  All numbers
//! cross the boundary exactly: Python `int` and `fractions.Fraction` in,
//! `fractions.Fraction` out.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use octarsk_core::algebraic::{
    det_elimination, dodgson_condensation, dodgson_determinant, is_totally_positive_solid,
    solid_minor_pyramid, RationalMatrix,
};
use octarsk_core::document;
use octarsk_core::grid::{CornerGrid as CoreCornerGrid, SquareArray};
use octarsk_core::pyramid::PyramidPoint;
use octarsk_core::rsk::{
    classical_rsk as core_classical_rsk, evacuation as core_evacuation, rsk_forward, rsk_inverse,
    PlanePartition as CorePlanePartition, Tableau as CoreTableau,
};
use octarsk_core::tropical::{
    differentiate as core_differentiate, integrate as core_integrate, or_map as core_or_map,
    or_map_inverse as core_or_map_inverse, phi as core_phi, phi_bruteforce as core_phi_bruteforce,
    restrict_alpha, restrict_beta, TropicalPyramid,
};
use octarsk_core::{Error as CoreError, Rat};

fn value_error(e: CoreError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

// Accept plain ints as well as fractions.Fraction for every entry.
#[derive(FromPyObject)]
enum Number {
    Int(BigInt),
    Ratio(Rat),
}

impl Number {
    fn into_rat(self) -> Rat {
        match self {
            Number::Int(v) => Rat::from_integer(v),
            Number::Ratio(v) => v,
        }
    }
}

fn convert_rows(rows: Vec<Vec<Number>>) -> Vec<Vec<Rat>> {
    rows.into_iter()
        .map(|row| row.into_iter().map(Number::into_rat).collect())
        .collect()
}

/// Square array of exact rationals; the row for `j` lists `s(1, j) .. s(n, j)`.
#[pyclass(eq, frozen, skip_from_py_object)]
#[derive(PartialEq, Clone)]
struct Array {
    inner: SquareArray,
}

#[pymethods]
impl Array {
    #[new]
    fn new(rows: Vec<Vec<Number>>) -> PyResult<Self> {
        let inner = SquareArray::from_rows(convert_rows(rows)).map_err(value_error)?;
        Ok(Array { inner })
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn rows(&self) -> Vec<Vec<Rat>> {
        self.inner.rows()
    }

    fn __repr__(&self) -> String {
        format!("Array(n={})", self.inner.n())
    }
}

/// Corner grid vanishing on its south-west boundary: boundary row and
/// column are implicit, only inner rows are passed and returned.
#[pyclass(eq, frozen, skip_from_py_object)]
#[derive(PartialEq, Clone)]
struct CornerGrid {
    inner: CoreCornerGrid,
}

#[pymethods]
impl CornerGrid {
    #[new]
    fn new(rows: Vec<Vec<Number>>) -> PyResult<Self> {
        let inner = CoreCornerGrid::from_inner(convert_rows(rows)).map_err(value_error)?;
        Ok(CornerGrid { inner })
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn inner_rows(&self) -> Vec<Vec<Rat>> {
        self.inner.inner_rows()
    }

    fn get(&self, i: usize, j: usize) -> PyResult<Rat> {
        if i > self.inner.n() || j > self.inner.n() {
            return Err(PyValueError::new_err(format!(
                "index ({i}, {j}) outside the grid 0..={}",
                self.inner.n()
            )));
        }
        Ok(self.inner.get(i, j).clone())
    }

    fn is_supermodular(&self) -> bool {
        self.inner.is_supermodular()
    }

    fn is_inframodular(&self) -> bool {
        self.inner.is_inframodular()
    }

    fn is_discretely_concave(&self) -> bool {
        self.inner.is_discretely_concave()
    }

    fn __repr__(&self) -> String {
        format!("CornerGrid(n={})", self.inner.n())
    }
}

/// Max-plus value file on the pyramid lattice.
#[pyclass(eq, frozen, skip_from_py_object)]
#[derive(PartialEq, Clone)]
struct Pyramid {
    inner: TropicalPyramid,
}

#[pymethods]
impl Pyramid {
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn value(&self, i: i64, j: i64, k: i64) -> PyResult<Rat> {
        let p = PyramidPoint::new(i, j, k);
        if !p.is_valid(self.inner.n()) {
            return Err(PyValueError::new_err(format!(
                "({i}, {j}, {k}) is not a lattice point of the pyramid of side {}",
                self.inner.n()
            )));
        }
        Ok(self.inner.value(p).clone())
    }

    fn apex(&self) -> Rat {
        self.inner.apex().clone()
    }

    fn is_polarized(&self) -> bool {
        self.inner.is_polarized()
    }

    fn restrict_alpha(&self) -> CornerGrid {
        CornerGrid { inner: restrict_alpha(&self.inner) }
    }

    fn restrict_beta(&self) -> CornerGrid {
        CornerGrid { inner: restrict_beta(&self.inner) }
    }

    fn to_text(&self) -> String {
        document::to_text(&document::Document::Pyramid(self.inner.table().clone()))
    }

    fn __repr__(&self) -> String {
        format!("Pyramid(n={})", self.inner.n())
    }
}

/// Square rational matrix; rows are matrix rows, `X(r, 1) .. X(r, n)`.
#[pyclass(eq, frozen, skip_from_py_object)]
#[derive(PartialEq, Clone)]
struct Matrix {
    inner: RationalMatrix,
}

#[pymethods]
impl Matrix {
    #[new]
    fn new(rows: Vec<Vec<Number>>) -> PyResult<Self> {
        let inner = RationalMatrix::from_rows(convert_rows(rows)).map_err(value_error)?;
        Ok(Matrix { inner })
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn rows(&self) -> Vec<Vec<Rat>> {
        self.inner.rows()
    }

    /// Exact determinant; `method` is "auto", "dodgson", or "elimination".
    #[pyo3(signature = (method = "auto"))]
    fn det(&self, method: &str) -> PyResult<Rat> {
        match method {
            "auto" => Ok(dodgson_determinant(&self.inner)),
            "elimination" => Ok(det_elimination(&self.inner)),
            "dodgson" => {
                Ok(dodgson_condensation(&self.inner)
                    .unwrap_or_else(|| det_elimination(&self.inner)))
            }
            other => Err(PyValueError::new_err(format!(
                "unknown method `{other}`; use auto, dodgson, or elimination"
            ))),
        }
    }

    /// Are all solid minors (consecutive rows and columns) strictly positive?
    fn is_totally_positive_solid(&self) -> bool {
        is_totally_positive_solid(&self.inner)
    }

    /// Does the pyramid of solid minors satisfy the condensation relation
    /// at every octahedron center?  (It always should; exposed for checks.)
    fn solid_pyramid_is_polarized(&self) -> bool {
        solid_minor_pyramid(&self.inner).is_polarized()
    }

    fn __repr__(&self) -> String {
        format!("Matrix(n={})", self.inner.n())
    }
}

/// Non-negative table weakly decreasing along rows and columns.
#[pyclass(eq, frozen, skip_from_py_object)]
#[derive(PartialEq, Clone)]
struct PlanePartition {
    inner: CorePlanePartition,
}

#[pymethods]
impl PlanePartition {
    #[new]
    fn new(rows: Vec<Vec<Number>>) -> PyResult<Self> {
        let inner = CorePlanePartition::from_rows(convert_rows(rows)).map_err(value_error)?;
        Ok(PlanePartition { inner })
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn rows(&self) -> Vec<Vec<Rat>> {
        self.inner.rows()
    }

    /// Main diagonal read as a partition, largest part first.
    fn shape(&self) -> PyResult<Vec<u64>> {
        Ok(octarsk_core::rsk::shape(&self.inner)
            .map_err(value_error)?
            .parts()
            .to_vec())
    }

    fn total(&self) -> Rat {
        self.inner.total()
    }

    fn __repr__(&self) -> String {
        format!("PlanePartition(n={})", self.inner.n())
    }
}

/// Semi-standard Young tableau with letters `1..=n`.
#[pyclass(eq, frozen, skip_from_py_object)]
#[derive(PartialEq, Clone)]
struct Tableau {
    inner: CoreTableau,
}

#[pymethods]
impl Tableau {
    #[new]
    fn new(n: usize, rows: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner = CoreTableau::from_rows(n, rows).map_err(value_error)?;
        Ok(Tableau { inner })
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.inner.rows()
    }

    fn shape(&self) -> Vec<u64> {
        self.inner.shape().parts().to_vec()
    }

    /// Multiplicity of each letter, indexed `content()[letter - 1]`.
    fn content(&self) -> Vec<u64> {
        self.inner.content()
    }

    fn __repr__(&self) -> String {
        format!("Tableau(n={}, shape={:?})", self.inner.n(), self.shape())
    }
}

/// Running rectangle sums of an array.
#[pyfunction]
fn integrate(s: &Array) -> CornerGrid {
    CornerGrid { inner: core_integrate(&s.inner) }
}

/// Mixed second differences of a corner grid; inverse of `integrate`.
#[pyfunction]
fn differentiate(g: &CornerGrid) -> Array {
    Array { inner: core_differentiate(&g.inner) }
}

/// Propagate near-face corner data through the pyramid to the far faces.
#[pyfunction]
fn or_map(g: &CornerGrid) -> CornerGrid {
    CornerGrid { inner: core_or_map(&g.inner) }
}

/// Inverse of `or_map`.
#[pyfunction]
fn or_map_inverse(h: &CornerGrid) -> CornerGrid {
    CornerGrid { inner: core_or_map_inverse(&h.inner) }
}

/// Grow the max-plus value file of an array.
#[pyfunction]
fn phi(s: &Array) -> Pyramid {
    Pyramid { inner: core_phi(&s.inner) }
}

/// Like `phi`, but by exhaustive search over disjoint path tuples.
#[pyfunction]
fn phi_bruteforce(s: &Array) -> PyResult<Pyramid> {
    Ok(Pyramid { inner: core_phi_bruteforce(&s.inner).map_err(value_error)? })
}

/// Non-negative integer array to plane partition plus tableau pair.
#[pyfunction]
fn rsk(s: &Array) -> PyResult<(PlanePartition, Tableau, Tableau)> {
    let (p, lower, upper) = rsk_forward(&s.inner).map_err(value_error)?;
    Ok((
        PlanePartition { inner: p },
        Tableau { inner: lower },
        Tableau { inner: upper },
    ))
}

/// Plane partition back to its array.
#[pyfunction]
fn rsk_inverse_map(p: &PlanePartition) -> Array {
    Array { inner: rsk_inverse(&p.inner) }
}

/// Classical two-tableau correspondence, for cross-checking.
#[pyfunction]
fn classical_rsk(s: &Array) -> PyResult<(Tableau, Tableau)> {
    let (ins, rec) = core_classical_rsk(&s.inner).map_err(value_error)?;
    Ok((Tableau { inner: ins }, Tableau { inner: rec }))
}

/// Schuetzenberger involution on tableaux.
#[pyfunction]
fn evacuation(t: &Tableau) -> Tableau {
    Tableau { inner: core_evacuation(&t.inner) }
}

#[pymodule]
fn octarsk_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Array>()?;
    m.add_class::<CornerGrid>()?;
    m.add_class::<Pyramid>()?;
    m.add_class::<Matrix>()?;
    m.add_class::<PlanePartition>()?;
    m.add_class::<Tableau>()?;
    m.add_function(wrap_pyfunction!(integrate, m)?)?;
    m.add_function(wrap_pyfunction!(differentiate, m)?)?;
    m.add_function(wrap_pyfunction!(or_map, m)?)?;
    m.add_function(wrap_pyfunction!(or_map_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(rsk, m)?)?;
    m.add_function(wrap_pyfunction!(rsk_inverse_map, m)?)?;
    m.add_function(wrap_pyfunction!(classical_rsk, m)?)?;
    m.add_function(wrap_pyfunction!(evacuation, m)?)?;
    Ok(())
}
