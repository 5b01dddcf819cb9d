//! Tropical (max-plus) form of the octahedron recurrence.
//!
//! Here the recurrence at an octahedron center reads
//!
//! ```text
//! f(i-1,j-1,k) + f(i+1,j+1,k) = max(f(i,j,k-1) + f(i,j,k+1), f(i-1,j+1,k) + f(i+1,j-1,k)),
//! ```
//!
//! a file satisfying it at every center and vanishing on the base level is
//! called *polarized*.  [`phi`] sends a square array `s` to the polarized
//! file whose value at a point is the best total of `s` over tuples of
//! vertex-disjoint lattice paths, computed in polynomial time by seeding the
//! south-west faces with [`integrate`]\(s) and solving the recurrence along
//! the forward wavefront; [`phi_bruteforce`] enumerates the tuples directly
//! and serves as the oracle.  Restriction to the north-east faces and
//! backward propagation invert each other, giving the OR-map on corner
//! grids and, downstream, the RSK correspondence.

use std::cmp::max;

use num_traits::Zero;

use crate::error::Error;
use crate::grid::{CornerGrid, Level1Grid, SquareArray};
use crate::paths::{for_each_disjoint_tuple, point_specs};
use crate::pyramid::{
    alpha, beta, enumerate_centers, wavefront_order, Direction, PolarizationViolation,
    PyramidPoint, PyramidTable,
};
use crate::Rat;

/// Largest side for which [`phi_bruteforce`] will enumerate path tuples.
pub const BRUTEFORCE_SIDE_LIMIT: usize = 5;

/// Rational value file on the pyramid lattice under the max-plus recurrence.
///
/// The `polarized` flag records provenance from a construction that
/// guarantees the recurrence; [`TropicalPyramid::is_polarized`] checks the
/// property itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalPyramid {
    table: PyramidTable,
    polarized: bool,
}

impl TropicalPyramid {
    /// Wrap raw values; the polarized flag is left unset.
    pub fn from_table(table: PyramidTable) -> Self {
        TropicalPyramid {
            table,
            polarized: false,
        }
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn value(&self, p: PyramidPoint) -> &Rat {
        self.table.get(p)
    }

    pub fn apex(&self) -> &Rat {
        self.table.apex()
    }

    pub fn table(&self) -> &PyramidTable {
        &self.table
    }

    pub fn flagged_polarized(&self) -> bool {
        self.polarized
    }

    /// Does the file vanish on the base level and satisfy the max-plus
    /// recurrence at every octahedron center?
    pub fn is_polarized(&self) -> bool {
        self.first_polarization_violation().is_none()
    }

    /// First failure in scan order: base points first, then centers.
    pub fn first_polarization_violation(&self) -> Option<PolarizationViolation> {
        let n = self.n();
        for p in self.table.points() {
            if p.k == 0 && !self.value(p).is_zero() {
                return Some(PolarizationViolation::Base(p));
            }
        }
        enumerate_centers(n).into_iter().find_map(|c| {
            let lhs = self.value(c.sw()) + self.value(c.ne());
            let vertical = self.value(c.below()) + self.value(c.above());
            let horizontal = self.value(c.nw()) + self.value(c.se());
            (lhs != max(vertical, horizontal)).then_some(PolarizationViolation::Center(c))
        })
    }

    /// Restriction to level 1, indexed by the matrix cell under each point.
    pub fn res1(&self) -> Level1Grid {
        let n = self.n();
        let mut b = Level1Grid::zeros(n).expect("pyramid side is positive");
        for r in 1..=n {
            for c in 1..=n {
                let p = PyramidPoint::new(2 * r as i64 - 1, 2 * c as i64 - 1, 1);
                b.set(r, c, self.value(p).clone());
            }
        }
        b
    }
}

/// Running rectangle sums: `g(i, j) = sum of s(a, b) over a <= i, b <= j`,
/// zero on the boundary.
pub fn integrate(s: &SquareArray) -> CornerGrid {
    let n = s.n();
    let mut g = CornerGrid::zeros(n).expect("array side is positive");
    for j in 1..=n {
        for i in 1..=n {
            let v = s.get(i, j) + g.get(i - 1, j) + g.get(i, j - 1) - g.get(i - 1, j - 1);
            g.set(i, j, v);
        }
    }
    g
}

/// Mixed second difference, the two-sided inverse of [`integrate`] on grids
/// with zero boundary.
pub fn differentiate(g: &CornerGrid) -> SquareArray {
    let n = g.n();
    let mut s = SquareArray::zeros(n).expect("grid side is positive");
    for j in 1..=n {
        for i in 1..=n {
            let v = g.get(i, j) - g.get(i - 1, j) - g.get(i, j - 1) + g.get(i - 1, j - 1);
            s.set(i, j, v);
        }
    }
    s
}

/// Solve the recurrence forward from south-west face data.
///
/// Seeds the base level with 0 and the rest of the south-west faces with the
/// inner values of `g` (the boundary of `g` is ignored; it is zero for every
/// grid produced by this module), then fills each remaining point in
/// wavefront order via
/// `f(ne) = max(f(below) + f(above), f(nw) + f(se)) - f(sw)`.
/// Total: the max-plus step involves no division.
pub fn propagate_forward(g: &CornerGrid) -> TropicalPyramid {
    let n = g.n();
    let mut table = PyramidTable::zeros(n);
    for i in 1..=n {
        for j in 1..=n {
            table.set(alpha(n, (i, j)), g.get(i, j).clone());
        }
    }
    for step in wavefront_order(n, Direction::Forward) {
        let c = step.center;
        let vertical = table.get(c.below()) + table.get(c.above());
        let horizontal = table.get(c.nw()) + table.get(c.se());
        let value = max(vertical, horizontal) - table.get(c.sw());
        table.set(step.unknown, value);
    }
    TropicalPyramid {
        table,
        polarized: true,
    }
}

/// Solve the recurrence backward from north-east face data, the mirror of
/// [`propagate_forward`]: `f(sw) = max(f(below) + f(above), f(nw) + f(se)) - f(ne)`.
pub fn propagate_backward(h: &CornerGrid) -> TropicalPyramid {
    let n = h.n();
    let mut table = PyramidTable::zeros(n);
    for i in 1..=n {
        for j in 1..=n {
            table.set(beta(n, (i, j)), h.get(i, j).clone());
        }
    }
    for step in wavefront_order(n, Direction::Backward) {
        let c = step.center;
        let vertical = table.get(c.below()) + table.get(c.above());
        let horizontal = table.get(c.nw()) + table.get(c.se());
        let value = max(vertical, horizontal) - table.get(c.ne());
        table.set(step.unknown, value);
    }
    TropicalPyramid {
        table,
        polarized: true,
    }
}

/// Pull back along the south-west face chart.
pub fn restrict_alpha(f: &TropicalPyramid) -> CornerGrid {
    let n = f.n();
    let mut g = CornerGrid::zeros(n).expect("pyramid side is positive");
    for i in 0..=n {
        for j in 0..=n {
            g.set(i, j, f.value(alpha(n, (i, j))).clone());
        }
    }
    g
}

/// Pull back along the north-east face chart.
pub fn restrict_beta(f: &TropicalPyramid) -> CornerGrid {
    let n = f.n();
    let mut h = CornerGrid::zeros(n).expect("pyramid side is positive");
    for i in 0..=n {
        for j in 0..=n {
            h.set(i, j, f.value(beta(n, (i, j))).clone());
        }
    }
    h
}

/// South-west corner data to north-east corner data, through the pyramid.
pub fn or_map(g: &CornerGrid) -> CornerGrid {
    restrict_beta(&propagate_forward(g))
}

/// Inverse of [`or_map`]: propagate backward, read the south-west faces.
pub fn or_map_inverse(h: &CornerGrid) -> CornerGrid {
    restrict_alpha(&propagate_backward(h))
}

/// Best-path-tuple transform of a square array, computed by propagation.
///
/// The value at `(i, j, k)` is the maximum, over tuples of vertex-disjoint
/// paths for that point, of the sum of `s` over all nodes of the tuple.
pub fn phi(s: &SquareArray) -> TropicalPyramid {
    propagate_forward(&integrate(s))
}

/// Same contract as [`phi`], by direct tuple enumeration; the oracle.
pub fn phi_bruteforce(s: &SquareArray) -> Result<TropicalPyramid, Error> {
    let n = s.n();
    if n > BRUTEFORCE_SIDE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            n,
            limit: BRUTEFORCE_SIDE_LIMIT,
        });
    }
    let mut table = PyramidTable::zeros(n);
    for p in table.points() {
        if p.k == 0 {
            continue;
        }
        let specs = point_specs(p);
        let mut best: Option<Rat> = None;
        for_each_disjoint_tuple(n, &specs, |tuple| {
            let mut sum = Rat::zero();
            for path in tuple {
                for &(a, b) in path.nodes() {
                    sum += s.get(a, b);
                }
            }
            best = Some(match best.take() {
                Some(cur) => max(cur, sum),
                None => sum,
            });
        });
        table.set(p, best.expect("every pyramid point admits at least one path tuple"));
    }
    Ok(TropicalPyramid {
        table,
        polarized: true,
    })
}

/// Extend a supermodular level-1 grid to a polarized file by summing `b`
/// along diagonals: `f(i, j, k) = b(i-k+1, j-k+1) + b(i-k+3, j-k+3) + ...
/// + b(i+k-1, j+k-1)` in odd lattice coordinates.
pub fn supermodular_to_polarized(b: &Level1Grid) -> Result<TropicalPyramid, Error> {
    if let Some((r, c)) = b.first_supermodular_violation() {
        return Err(Error::NotSupermodular { i: r, j: c });
    }
    let n = b.n();
    let mut table = PyramidTable::zeros(n);
    for p in table.points() {
        if p.k == 0 {
            continue;
        }
        let mut sum = Rat::zero();
        for t in 1..=p.k {
            sum += b.get_odd(p.i - p.k - 1 + 2 * t, p.j - p.k - 1 + 2 * t);
        }
        table.set(p, sum);
    }
    Ok(TropicalPyramid {
        table,
        polarized: true,
    })
}

/// First cell `(i, j)` of `s` (1-based, scanned row by row) with
/// `s(i, j) > s(i+1, j+1)`, i.e. the first witness that `s` is not weakly
/// increasing along diagonals.
pub fn first_md_violation(s: &SquareArray) -> Option<(usize, usize)> {
    let n = s.n();
    for j in 1..n {
        for i in 1..n {
            if s.get(i, j) > s.get(i + 1, j + 1) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Is `s` weakly increasing along diagonals?
pub fn is_in_md(s: &SquareArray) -> bool {
    first_md_violation(s).is_none()
}

/// Closed form for [`phi`] on arrays that are weakly increasing along
/// diagonals: the rectangle-sum difference
/// `g((i+k)/2, (j+k)/2) - g((i-k)/2, (j-k)/2)` with `g = integrate(s)`.
pub fn phi_md_closed_form(s: &SquareArray, p: PyramidPoint) -> Result<Rat, Error> {
    let n = s.n();
    if !p.is_valid(n) {
        return Err(Error::ShapeError(format!(
            "point {p} is outside the pyramid of side {n}"
        )));
    }
    if let Some((i, j)) = first_md_violation(s) {
        return Err(Error::NotInMD { i, j });
    }
    let g = integrate(s);
    let hi = g.get(((p.i + p.k) / 2) as usize, ((p.j + p.k) / 2) as usize);
    let lo = g.get(((p.i - p.k) / 2) as usize, ((p.j - p.k) / 2) as usize);
    Ok(hi - lo)
}

impl CornerGrid {
    /// First inner cell (1-based) whose mixed second difference
    /// `v(i,j) - v(i-1,j) - v(i,j-1) + v(i-1,j-1)` is negative.
    pub fn first_supermodular_violation(&self) -> Option<(usize, usize)> {
        let n = self.n();
        for j in 1..=n {
            for i in 1..=n {
                let diff =
                    self.get(i, j) - self.get(i - 1, j) - self.get(i, j - 1) + self.get(i - 1, j - 1);
                if diff < Rat::zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_supermodular(&self) -> bool {
        self.first_supermodular_violation().is_none()
    }

    /// First anchor cell `(i, j)` at which one of the two inframodularity
    /// inequalities fails:
    /// `h(i,j) + h(i+1,j) >= h(i,j-1) + h(i+1,j+1)` or
    /// `h(i,j) + h(i,j+1) >= h(i-1,j) + h(i+1,j+1)`, wherever all four
    /// cells exist.
    pub fn first_inframodular_violation(&self) -> Option<(usize, usize)> {
        let n = self.n();
        for j in 1..n {
            for i in 0..n {
                if self.get(i, j) + self.get(i + 1, j) < self.get(i, j - 1) + self.get(i + 1, j + 1)
                {
                    return Some((i, j));
                }
            }
        }
        for j in 0..n {
            for i in 1..n {
                if self.get(i, j) + self.get(i, j + 1) < self.get(i - 1, j) + self.get(i + 1, j + 1)
                {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_inframodular(&self) -> bool {
        self.first_inframodular_violation().is_none()
    }

    /// Supermodular and inframodular at once.
    pub fn is_discretely_concave(&self) -> bool {
        self.is_supermodular() && self.is_inframodular()
    }
}

impl Level1Grid {
    /// First matrix cell `(r, c)` with
    /// `b(r,c) + b(r+1,c+1) < b(r+1,c) + b(r,c+1)`, the step-2 analogue of
    /// the corner-grid mixed difference.
    pub fn first_supermodular_violation(&self) -> Option<(usize, usize)> {
        let n = self.n();
        for c in 1..n {
            for r in 1..n {
                if self.get(r, c) + self.get(r + 1, c + 1) < self.get(r + 1, c) + self.get(r, c + 1)
                {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn is_supermodular(&self) -> bool {
        self.first_supermodular_violation().is_none()
    }
}
