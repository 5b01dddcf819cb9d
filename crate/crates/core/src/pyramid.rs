//! Geometry of the pyramid lattice.
//!
//! For a side parameter `n >= 1` the pyramid has base corners `(0, 0, 0)`,
//! `(2n, 0, 0)`, `(0, 2n, 0)`, `(2n, 2n, 0)` and apex `(n, n, n)`.  Its
//! lattice consists of the points `(i, j, k)` with
//!
//! * `0 <= k <= n`,
//! * `k <= i <= 2n - k` and `k <= j <= 2n - k`,
//! * `i ≡ j ≡ k (mod 2)`,
//!
//! so level `k` is a square of `(n - k + 1)^2` points with mesh 2.  An
//! elementary octahedron is determined by its center `(i, j, k)`, a non-point
//! of the lattice with `0 < k < n`, `k <= i, j <= 2n - k` and
//! `i ≡ j ≡ k + 1 (mod 2)`; its six vertices `(i±1, j±1, k)`, `(i, j, k±1)`
//! are lattice points.
//!
//! Two charts map a square `(n+1) x (n+1)` index grid onto the boundary:
//! [`alpha`] covers the two faces adjacent to the corner `(0, 0, 0)` and
//! [`beta`] the two faces adjacent to `(2n, 2n, 0)`.  The wavefront schedules
//! returned by [`wavefront_order`] list the octahedra in an order that lets a
//! value file be completed from either pair of faces one point at a time.

use std::fmt;

use crate::Rat;
use num_traits::Zero;

/// Lattice point `(i, j, k)` of the pyramid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PyramidPoint {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl PyramidPoint {
    pub fn new(i: i64, j: i64, k: i64) -> Self {
        PyramidPoint { i, j, k }
    }

    /// Does the point belong to the lattice of the pyramid of side `n`?
    pub fn is_valid(self, n: usize) -> bool {
        let m = 2 * n as i64;
        let (i, j, k) = (self.i, self.j, self.k);
        (0..=n as i64).contains(&k)
            && k <= i
            && i <= m - k
            && k <= j
            && j <= m - k
            && (i - k) % 2 == 0
            && (j - k) % 2 == 0
    }

    /// Mirror through the vertical axis of the pyramid: `(i, j) -> (2n-i, 2n-j)`.
    pub fn mirror(self, n: usize) -> Self {
        let m = 2 * n as i64;
        PyramidPoint::new(m - self.i, m - self.j, self.k)
    }
}

impl fmt::Display for PyramidPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i, self.j, self.k)
    }
}

/// Center of an elementary octahedron.
///
/// Centers are not lattice points: their parity is off by one.  The six
/// surrounding lattice points are reachable through the accessors named
/// after compass directions in the `(i, j)` plane plus [`below`] and
/// [`above`] for the two points on the neighbouring levels.
///
/// [`below`]: OctahedronCenter::below
/// [`above`]: OctahedronCenter::above
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OctahedronCenter {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl OctahedronCenter {
    pub fn new(i: i64, j: i64, k: i64) -> Self {
        OctahedronCenter { i, j, k }
    }

    /// Is this the center of an elementary octahedron of the pyramid of side `n`?
    pub fn is_valid(self, n: usize) -> bool {
        let m = 2 * n as i64;
        let (i, j, k) = (self.i, self.j, self.k);
        0 < k
            && k < n as i64
            && k <= i
            && i <= m - k
            && k <= j
            && j <= m - k
            && (i - k) % 2 != 0
            && (j - k) % 2 != 0
    }

    pub fn sw(self) -> PyramidPoint {
        PyramidPoint::new(self.i - 1, self.j - 1, self.k)
    }

    pub fn ne(self) -> PyramidPoint {
        PyramidPoint::new(self.i + 1, self.j + 1, self.k)
    }

    pub fn nw(self) -> PyramidPoint {
        PyramidPoint::new(self.i - 1, self.j + 1, self.k)
    }

    pub fn se(self) -> PyramidPoint {
        PyramidPoint::new(self.i + 1, self.j - 1, self.k)
    }

    pub fn below(self) -> PyramidPoint {
        PyramidPoint::new(self.i, self.j, self.k - 1)
    }

    pub fn above(self) -> PyramidPoint {
        PyramidPoint::new(self.i, self.j, self.k + 1)
    }

    /// All six vertices, diagonal by diagonal.
    pub fn vertices(self) -> [PyramidPoint; 6] {
        [
            self.sw(),
            self.ne(),
            self.nw(),
            self.se(),
            self.below(),
            self.above(),
        ]
    }
}

impl fmt::Display for OctahedronCenter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i, self.j, self.k)
    }
}

/// First place where a file fails to be polarized: a base-level point with
/// the wrong seed value, or the center of an octahedron whose values break
/// the recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolarizationViolation {
    Base(PyramidPoint),
    Center(OctahedronCenter),
}

impl fmt::Display for PolarizationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolarizationViolation::Base(p) => write!(f, "wrong seed value at base point {p}"),
            PolarizationViolation::Center(c) => {
                write!(f, "recurrence fails at the octahedron centered on {c}")
            }
        }
    }
}

/// Index into an `(n+1) x (n+1)` corner grid; also used 1-based for square
/// arrays and matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridIndex {
    pub i: usize,
    pub j: usize,
}

impl GridIndex {
    pub fn new(i: usize, j: usize) -> Self {
        GridIndex { i, j }
    }
}

impl From<(usize, usize)> for GridIndex {
    fn from((i, j): (usize, usize)) -> Self {
        GridIndex { i, j }
    }
}

/// All lattice points, level-major, then by `i`, then by `j`.
pub fn enumerate_points(n: usize) -> Vec<PyramidPoint> {
    assert!(n >= 1, "side parameter must be at least 1");
    let m = 2 * n as i64;
    let mut out = Vec::new();
    for k in 0..=n as i64 {
        for i in (k..=m - k).step_by(2) {
            for j in (k..=m - k).step_by(2) {
                out.push(PyramidPoint::new(i, j, k));
            }
        }
    }
    out
}

/// All octahedron centers, level-major, then by `i`, then by `j`.
pub fn enumerate_centers(n: usize) -> Vec<OctahedronCenter> {
    assert!(n >= 1, "side parameter must be at least 1");
    let m = 2 * n as i64;
    let mut out = Vec::new();
    for k in 1..n as i64 {
        for i in (k + 1..=m - k - 1).step_by(2) {
            for j in (k + 1..=m - k - 1).step_by(2) {
                out.push(OctahedronCenter::new(i, j, k));
            }
        }
    }
    out
}

/// Chart of the two faces through `(0, 0, 0)` and the apex.
///
/// `alpha(i, j) = (2i - min(i,j), 2j - min(i,j), min(i,j))`; the image is
/// exactly the set of lattice points with `i = k` or `j = k`.
pub fn alpha(n: usize, idx: impl Into<GridIndex>) -> PyramidPoint {
    let idx = idx.into();
    assert!(n >= 1, "side parameter must be at least 1");
    assert!(idx.i <= n && idx.j <= n, "grid index out of range");
    let (i, j) = (idx.i as i64, idx.j as i64);
    let k = i.min(j);
    PyramidPoint::new(2 * i - k, 2 * j - k, k)
}

/// Chart of the two faces through `(2n, 2n, 0)` and the apex.
///
/// `beta(i, j) = (2n - 2i + min(i,j), 2n - 2j + min(i,j), min(i,j))`; the
/// image is exactly the set of lattice points with `i = 2n - k` or
/// `j = 2n - k`.
pub fn beta(n: usize, idx: impl Into<GridIndex>) -> PyramidPoint {
    let idx = idx.into();
    assert!(n >= 1, "side parameter must be at least 1");
    assert!(idx.i <= n && idx.j <= n, "grid index out of range");
    let m = 2 * n as i64;
    let (i, j) = (idx.i as i64, idx.j as i64);
    let k = i.min(j);
    PyramidPoint::new(m - 2 * i + k, m - 2 * j + k, k)
}

/// Which pair of faces seeds the propagation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Seed on the [`alpha`] faces and the base, solve towards `(2n, 2n)`.
    Forward,
    /// Seed on the [`beta`] faces and the base, solve towards `(0, 0)`.
    Backward,
}

/// One propagation step: the octahedron used and the point it determines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WavefrontStep {
    pub center: OctahedronCenter,
    pub unknown: PyramidPoint,
}

/// Schedule of octahedron steps that fills the pyramid from one pair of faces.
///
/// Forward steps determine `(i+1, j+1, k)` from the other five vertices of
/// the center `(i, j, k)`; they are ordered by increasing `i + j` of the
/// unknown, ties broken lexicographically on `(i + j, i, k)`.  Every lattice
/// point outside the base and the seed faces occurs exactly once as an
/// unknown, and the five known vertices of each step are either seed points
/// or unknowns of earlier steps.  The backward schedule is the mirror image:
/// unknown `(i-1, j-1, k)`, decreasing `i + j`.
pub fn wavefront_order(n: usize, direction: Direction) -> Vec<WavefrontStep> {
    let mut steps: Vec<WavefrontStep> = enumerate_centers(n)
        .into_iter()
        .map(|center| WavefrontStep {
            center,
            unknown: match direction {
                Direction::Forward => center.ne(),
                Direction::Backward => center.sw(),
            },
        })
        .collect();
    match direction {
        Direction::Forward => {
            steps.sort_by_key(|s| (s.unknown.i + s.unknown.j, s.unknown.i, s.unknown.k));
        }
        Direction::Backward => {
            steps.sort_by_key(|s| (-(s.unknown.i + s.unknown.j), -s.unknown.i, s.unknown.k));
        }
    }
    steps
}

/// Dense storage for one rational value per lattice point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidTable {
    n: usize,
    values: Vec<Rat>,
}

impl PyramidTable {
    /// Table of side `n` with every value set to `fill`.
    pub fn filled(n: usize, fill: Rat) -> Self {
        assert!(n >= 1, "side parameter must be at least 1");
        let len: usize = (1..=n + 1).map(|m| m * m).sum();
        PyramidTable {
            n,
            values: vec![fill; len],
        }
    }

    /// Table of side `n` filled with zeros.
    pub fn zeros(n: usize) -> Self {
        Self::filled(n, Rat::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn idx(&self, p: PyramidPoint) -> usize {
        debug_assert!(p.is_valid(self.n), "point {p} outside pyramid of side {}", self.n);
        let n = self.n;
        let k = p.k as usize;
        // points on levels below k, then row-major within the level-k square
        let offset: usize = (0..k).map(|m| (n - m + 1) * (n - m + 1)).sum();
        let side = n - k + 1;
        let a = ((p.i - p.k) / 2) as usize;
        let b = ((p.j - p.k) / 2) as usize;
        offset + a * side + b
    }

    pub fn get(&self, p: PyramidPoint) -> &Rat {
        &self.values[self.idx(p)]
    }

    pub fn set(&mut self, p: PyramidPoint, v: Rat) {
        let idx = self.idx(p);
        self.values[idx] = v;
    }

    /// Value at the apex `(n, n, n)`.
    pub fn apex(&self) -> &Rat {
        let n = self.n as i64;
        self.get(PyramidPoint::new(n, n, n))
    }

    pub fn points(&self) -> Vec<PyramidPoint> {
        enumerate_points(self.n)
    }
}
