//! Algebraic form of the octahedron recurrence.
//!
//! For a square matrix `X` the *solid minor* attached to a pyramid point
//! `(i, j, k)` is the determinant of the `k x k` submatrix on consecutive
//! rows `(i-k)/2 + 1 ..= (i+k)/2` and columns `(j-k)/2 + 1 ..= (j+k)/2`; the
//! empty minor at level 0 is 1.  Filling the pyramid with these values gives
//! a file satisfying the Dodgson condensation identity at every octahedron
//! center,
//!
//! ```text
//! F(i,j,k+1) F(i,j,k-1) = F(i-1,j-1,k) F(i+1,j+1,k) - F(i-1,j+1,k) F(i+1,j-1,k),
//! ```
//!
//! and conversely such a *polarized* file is determined by its values on the
//! seed faces, which is how [`dodgson_propagate`] reconstructs it.  The same
//! values arise as sums over tuples of vertex-disjoint lattice paths through
//! a positive weight array `W` ([`genetic_to_pyramid`]), the
//! Lindström–Gessel–Viennot description that also yields total positivity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::grid::GeneticArray;
use crate::paths::{for_each_disjoint_tuple, point_specs};
use crate::pyramid::{
    alpha, beta, enumerate_centers, wavefront_order, Direction, PolarizationViolation,
    PyramidPoint, PyramidTable,
};
use crate::Rat;

/// Largest side for which path-tuple enumeration is allowed.
pub const GENETIC_SIDE_LIMIT: usize = 6;

/// Square matrix of exact rationals, indexed `(row, column)` from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<Rat>,
}

impl RationalMatrix {
    /// Build from rows: `rows[r-1][c-1] = X(r, c)`.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidSize);
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeError(format!(
                    "row {} has {} entries, expected {}",
                    r + 1,
                    row.len(),
                    n
                )));
            }
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            data.extend(row);
        }
        Ok(RationalMatrix { n, data })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rat(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidSize);
        }
        let mut m = RationalMatrix {
            n,
            data: vec![Rat::zero(); n * n],
        };
        for r in 1..=n {
            m.set(r, r, Rat::one());
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `X(r, c)` with `1 <= r, c <= n`.
    pub fn get(&self, r: usize, c: usize) -> &Rat {
        assert!((1..=self.n).contains(&r) && (1..=self.n).contains(&c));
        &self.data[(r - 1) * self.n + (c - 1)]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        assert!((1..=self.n).contains(&r) && (1..=self.n).contains(&c));
        self.data[(r - 1) * self.n + (c - 1)] = v;
    }

    /// Rows in display order: row `r` contains `X(r, 1) .. X(r, n)`.
    pub fn rows(&self) -> Vec<Vec<Rat>> {
        (1..=self.n)
            .map(|r| (1..=self.n).map(|c| self.get(r, c).clone()).collect())
            .collect()
    }

    /// Submatrix on consecutive rows `r0 ..= r1` and columns `c0 ..= c1`.
    fn solid_submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> RationalMatrix {
        debug_assert!(r0 >= 1 && r1 <= self.n && c0 >= 1 && c1 <= self.n);
        debug_assert_eq!(r1 - r0, c1 - c0);
        let rows = (r0..=r1)
            .map(|r| (c0..=c1).map(|c| self.get(r, c).clone()).collect())
            .collect();
        RationalMatrix::from_rows(rows).expect("solid submatrix is square and non-empty")
    }
}

/// Determinant by fraction-free (Bareiss) elimination, exact.
///
/// Denominators are cleared row by row first, so the elimination itself runs
/// over integers with exactly divisible intermediate quotients.
pub fn det_elimination(m: &RationalMatrix) -> Rat {
    let n = m.n;
    // clear denominators: row r times d_r, an integer matrix remains
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for r in 1..=n {
        let mut lcm = BigInt::one();
        for c in 1..=n {
            lcm = lcm.lcm(m.get(r, c).denom());
        }
        a.push(
            (1..=n)
                .map(|c| {
                    let v = m.get(r, c);
                    v.numer() * (&lcm / v.denom())
                })
                .collect(),
        );
        scale *= &lcm;
    }
    Rat::new(bareiss_int_det(&mut a), scale)
}

// One-step Bareiss elimination with row pivoting; consumes the matrix.
fn bareiss_int_det(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss quotient must be exact");
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Determinant by Dodgson condensation; `None` when an interior value of
/// some condensation stage vanishes, so that the next stage would divide by
/// zero.
pub fn dodgson_condensation(m: &RationalMatrix) -> Option<Rat> {
    let n = m.n;
    // stage t holds the t x t consecutive minors, an (n - t + 1)^2 table
    let mut prev: Vec<Vec<Rat>> = vec![vec![Rat::one(); n + 1]; n + 1];
    let mut cur: Vec<Vec<Rat>> = (1..=n)
        .map(|r| (1..=n).map(|c| m.get(r, c).clone()).collect())
        .collect();
    for _t in 1..n {
        let size = cur.len() - 1;
        let mut next = vec![vec![Rat::zero(); size]; size];
        for r in 0..size {
            for c in 0..size {
                let divisor = &prev[r + 1][c + 1];
                if divisor.is_zero() {
                    return None;
                }
                next[r][c] = (&cur[r][c] * &cur[r + 1][c + 1]
                    - &cur[r][c + 1] * &cur[r + 1][c])
                    / divisor;
            }
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Some(cur[0][0].clone())
}

/// Determinant via condensation, falling back to [`det_elimination`] when a
/// condensation stage hits a zero divisor.  The result is identical either
/// way.
pub fn dodgson_determinant(m: &RationalMatrix) -> Rat {
    dodgson_condensation(m).unwrap_or_else(|| det_elimination(m))
}

/// Corner data of the algebraic recurrence: an `(n+1) x (n+1)` grid of
/// rationals with the convention `G(i, 0) = G(0, j) = 1` on the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussGrid {
    n: usize,
    data: Vec<Rat>,
}

impl GaussGrid {
    /// Unit grid of side `n` (every value 1).
    pub fn ones(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidSize);
        }
        Ok(GaussGrid {
            n,
            data: vec![Rat::one(); (n + 1) * (n + 1)],
        })
    }

    /// Build from the inner rows, unit boundary implied:
    /// `rows[j-1][i-1] = G(i, j)` for `1 <= i, j <= n`.
    pub fn from_inner(rows: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let n = rows.len();
        let mut grid = GaussGrid::ones(n)?;
        for (jm, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeError(format!(
                    "row {} has {} entries, expected {}",
                    jm + 1,
                    row.len(),
                    n
                )));
            }
            for (im, v) in row.into_iter().enumerate() {
                grid.set(im + 1, jm + 1, v);
            }
        }
        Ok(grid)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        assert!(i <= self.n && j <= self.n);
        &self.data[j * (self.n + 1) + i]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        assert!(i <= self.n && j <= self.n);
        self.data[j * (self.n + 1) + i] = v;
    }

    pub fn inner_rows(&self) -> Vec<Vec<Rat>> {
        (1..=self.n)
            .map(|j| (1..=self.n).map(|i| self.get(i, j).clone()).collect())
            .collect()
    }
}

/// Rational value file on the pyramid lattice.
///
/// The `polarized` flag records that the values were produced by a
/// construction guaranteeing the condensation identity at every octahedron
/// center and value 1 on the base; [`AlgebraicPyramid::is_polarized`] checks
/// that property directly regardless of the flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicPyramid {
    table: PyramidTable,
    polarized: bool,
}

impl AlgebraicPyramid {
    /// Wrap raw values; the polarized flag is left unset.
    pub fn from_table(table: PyramidTable) -> Self {
        AlgebraicPyramid {
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

    /// Does the file satisfy the condensation identity at every octahedron
    /// center and equal 1 on the whole base level?
    pub fn is_polarized(&self) -> bool {
        self.first_polarization_violation().is_none()
    }

    /// First failure in scan order: base points first, then centers.
    pub fn first_polarization_violation(&self) -> Option<PolarizationViolation> {
        let n = self.n();
        for p in self.table.points() {
            if p.k == 0 && !self.value(p).is_one() {
                return Some(PolarizationViolation::Base(p));
            }
        }
        enumerate_centers(n).into_iter().find_map(|c| {
            let lhs = self.value(c.above()) * self.value(c.below());
            let rhs =
                self.value(c.sw()) * self.value(c.ne()) - self.value(c.nw()) * self.value(c.se());
            (lhs != rhs).then_some(PolarizationViolation::Center(c))
        })
    }

    /// Values on the two seed faces, pulled back through [`alpha`].
    pub fn extract_g(&self) -> GaussGrid {
        let n = self.n();
        let mut g = GaussGrid::ones(n).expect("pyramid side is positive");
        for i in 0..=n {
            for j in 0..=n {
                g.set(i, j, self.value(alpha(n, (i, j))).clone());
            }
        }
        g
    }

    /// Values on the two far faces, pulled back through [`beta`].
    pub fn extract_h(&self) -> GaussGrid {
        let n = self.n();
        let mut h = GaussGrid::ones(n).expect("pyramid side is positive");
        for i in 0..=n {
            for j in 0..=n {
                h.set(i, j, self.value(beta(n, (i, j))).clone());
            }
        }
        h
    }
}

/// Fill the pyramid with the solid minors of `x` (level 0 gets the empty
/// minor 1); each determinant is computed independently by fraction-free
/// elimination.
pub fn solid_minor_pyramid(x: &RationalMatrix) -> AlgebraicPyramid {
    let n = x.n();
    let mut table = PyramidTable::filled(n, Rat::one());
    for p in table.points() {
        if p.k == 0 {
            continue;
        }
        let k = p.k;
        let r0 = ((p.i - k) / 2 + 1) as usize;
        let r1 = ((p.i + k) / 2) as usize;
        let c0 = ((p.j - k) / 2 + 1) as usize;
        let c1 = ((p.j + k) / 2) as usize;
        let det = det_elimination(&x.solid_submatrix(r0, r1, c0, c1));
        table.set(p, det);
    }
    AlgebraicPyramid {
        table,
        polarized: true,
    }
}

/// Do all solid minors of `x` (all levels from 1 up) come out strictly
/// positive?
pub fn is_totally_positive_solid(x: &RationalMatrix) -> bool {
    let pyramid = solid_minor_pyramid(x);
    pyramid
        .table
        .points()
        .into_iter()
        .filter(|p| p.k > 0)
        .all(|p| pyramid.value(p).is_positive())
}

/// Reconstruct a polarized file from its seed-face values by solving the
/// condensation identity along the forward wavefront.
///
/// Fails with [`Error::DivisionByZero`] at the south-west vertex of the
/// first octahedron whose identity cannot be solved.
pub fn dodgson_propagate(g: &GaussGrid) -> Result<AlgebraicPyramid, Error> {
    let n = g.n();
    for t in 0..=n {
        if !g.get(t, 0).is_one() || !g.get(0, t).is_one() {
            return Err(Error::ShapeError(
                "seed grid must be 1 on the south-west boundary".to_string(),
            ));
        }
    }
    let mut table = PyramidTable::filled(n, Rat::one());
    for i in 0..=n {
        for j in 0..=n {
            table.set(alpha(n, (i, j)), g.get(i, j).clone());
        }
    }
    for step in wavefront_order(n, Direction::Forward) {
        let c = step.center;
        let divisor = table.get(c.sw());
        if divisor.is_zero() {
            return Err(Error::DivisionByZero(c.sw()));
        }
        let value = (table.get(c.below()) * table.get(c.above())
            + table.get(c.nw()) * table.get(c.se()))
            / divisor;
        table.set(step.unknown, value);
    }
    Ok(AlgebraicPyramid {
        table,
        polarized: true,
    })
}

/// Fill the pyramid from a genetic array: the value at a point is the sum,
/// over all tuples of vertex-disjoint paths for that point, of the product
/// of `W` over the nodes of the tuple.
///
/// Capped at side [`GENETIC_SIDE_LIMIT`]; the number of tuples grows too
/// fast beyond that.
pub fn genetic_to_pyramid(w: &GeneticArray) -> Result<AlgebraicPyramid, Error> {
    let n = w.n();
    if n > GENETIC_SIDE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            n,
            limit: GENETIC_SIDE_LIMIT,
        });
    }
    let mut table = PyramidTable::filled(n, Rat::one());
    for p in table.points() {
        if p.k == 0 {
            continue;
        }
        let specs = point_specs(p);
        let mut sum = Rat::zero();
        for_each_disjoint_tuple(n, &specs, |tuple| {
            let mut product = Rat::one();
            for path in tuple {
                for &(a, b) in path.nodes() {
                    product *= w.get(a, b);
                }
            }
            sum += product;
        });
        table.set(p, sum);
    }
    Ok(AlgebraicPyramid {
        table,
        polarized: true,
    })
}

/// Matrix generated by a genetic array: `X(r, c)` is the sum over single
/// paths from column `r` to row `c` of the product of `W` over the nodes.
pub fn matrix_from_genetic(w: &GeneticArray) -> Result<RationalMatrix, Error> {
    let n = w.n();
    if n > GENETIC_SIDE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            n,
            limit: GENETIC_SIDE_LIMIT,
        });
    }
    let mut x = RationalMatrix::identity(n)?;
    for r in 1..=n {
        for c in 1..=n {
            let mut sum = Rat::zero();
            for_each_disjoint_tuple(n, &[(r, c)], |tuple| {
                let mut product = Rat::one();
                for &(a, b) in tuple[0].nodes() {
                    product *= w.get(a, b);
                }
                sum += product;
            });
            x.set(r, c, sum);
        }
    }
    Ok(x)
}

/// Recover the genetic array from the seed-face values:
/// `W(i, j) = G(i, j) G(i-1, j-1) / (G(i-1, j) G(i, j-1))`.
pub fn genetic_from_g(g: &GaussGrid) -> Result<GeneticArray, Error> {
    let n = g.n();
    let mut w = GeneticArray::zeros(n)?;
    for j in 1..=n {
        for i in 1..=n {
            for (di, dj) in [(i - 1, j), (i, j - 1)] {
                if g.get(di, dj).is_zero() {
                    return Err(Error::ZeroCornerValue { i: di, j: dj });
                }
            }
            let value = g.get(i, j) * g.get(i - 1, j - 1) / (g.get(i - 1, j) * g.get(i, j - 1));
            w.set(i, j, value);
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // Cofactor expansion along the first row; exponential-time oracle.
    fn det_cofactor(m: &RationalMatrix) -> Rat {
        let n = m.n();
        if n == 1 {
            return m.get(1, 1).clone();
        }
        let mut det = Rat::zero();
        for c in 1..=n {
            if m.get(1, c).is_zero() {
                continue;
            }
            let minor_rows: Vec<Vec<Rat>> = (2..=n)
                .map(|r| {
                    (1..=n)
                        .filter(|&cc| cc != c)
                        .map(|cc| m.get(r, cc).clone())
                        .collect()
                })
                .collect();
            let minor = RationalMatrix::from_rows(minor_rows).unwrap();
            let term = m.get(1, c) * det_cofactor(&minor);
            if c % 2 == 1 {
                det += term;
            } else {
                det -= term;
            }
        }
        det
    }

    fn random_int_matrix(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> RationalMatrix {
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|_| (0..n).map(|_| rat(rng.random_range(lo..=hi))).collect())
            .collect();
        RationalMatrix::from_rows(rows).unwrap()
    }

    fn random_positive_genetic(rng: &mut ChaCha8Rng, n: usize) -> GeneticArray {
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| ratio(rng.random_range(1..=9), rng.random_range(1..=4)))
                    .collect()
            })
            .collect();
        GeneticArray::from_rows(rows).unwrap()
    }

    #[test]
    fn elimination_matches_cofactor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=5 {
            for _ in 0..20 {
                let m = random_int_matrix(&mut rng, n, -6, 6);
                assert_eq!(det_elimination(&m), det_cofactor(&m));
            }
        }
    }

    #[test]
    fn elimination_handles_rational_entries() {
        let m = RationalMatrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 5), ratio(2, 7)],
        ])
        .unwrap();
        assert_eq!(det_elimination(&m), det_cofactor(&m));
        assert_eq!(det_elimination(&m), ratio(1, 7) - ratio(1, 15));
    }

    #[test]
    fn elimination_handles_zero_pivots() {
        let m = RationalMatrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(det_elimination(&m), rat(-1));
        let m = RationalMatrix::from_int_rows(&[&[0, 1, 2], &[0, 3, 4], &[1, 5, 6]]).unwrap();
        assert_eq!(det_elimination(&m), det_cofactor(&m));
        let singular =
            RationalMatrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).unwrap();
        assert_eq!(det_elimination(&singular), rat(0));
    }

    #[test]
    fn condensation_basics() {
        let m = RationalMatrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(dodgson_determinant(&m), rat(-2));
        assert_eq!(dodgson_condensation(&m), Some(rat(-2)));
        let id = RationalMatrix::identity(4).unwrap();
        assert_eq!(dodgson_determinant(&id), rat(1));
    }

    #[test]
    fn condensation_falls_back_on_zero_interior() {
        // all-ones: the 2x2 consecutive minors vanish, so the next stage
        // would divide by zero
        let ones = RationalMatrix::from_int_rows(&[&[1; 4], &[1; 4], &[1; 4], &[1; 4]]).unwrap();
        assert_eq!(dodgson_condensation(&ones), None);
        assert_eq!(dodgson_determinant(&ones), rat(0));
    }

    #[test]
    fn condensation_matches_elimination_randomly() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..40 {
            let m = random_int_matrix(&mut rng, 5, -4, 4);
            assert_eq!(dodgson_determinant(&m), det_elimination(&m));
        }
    }

    #[test]
    fn solid_minors_of_identity() {
        let pyramid = solid_minor_pyramid(&RationalMatrix::identity(2).unwrap());
        assert_eq!(pyramid.value(PyramidPoint::new(1, 1, 1)), &rat(1));
        assert_eq!(pyramid.value(PyramidPoint::new(1, 3, 1)), &rat(0));
        assert_eq!(pyramid.value(PyramidPoint::new(3, 1, 1)), &rat(0));
        assert_eq!(pyramid.value(PyramidPoint::new(3, 3, 1)), &rat(1));
        assert_eq!(pyramid.apex(), &rat(1));
        assert_eq!(pyramid.value(PyramidPoint::new(2, 0, 0)), &rat(1));
    }

    #[test]
    fn solid_minor_levels() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let x = random_int_matrix(&mut rng, 4, -5, 5);
        let pyramid = solid_minor_pyramid(&x);
        // level 1 reproduces the entries
        for r in 1..=4i64 {
            for c in 1..=4i64 {
                assert_eq!(
                    pyramid.value(PyramidPoint::new(2 * r - 1, 2 * c - 1, 1)),
                    x.get(r as usize, c as usize)
                );
            }
        }
        // a hand-picked 2x2 solid minor: rows 2..3, cols 2..3
        let expected = x.get(2, 2) * x.get(3, 3) - x.get(2, 3) * x.get(3, 2);
        assert_eq!(pyramid.value(PyramidPoint::new(4, 4, 2)), &expected);
        // apex is the full determinant
        assert_eq!(pyramid.apex(), &det_cofactor(&x));
    }

    #[test]
    fn solid_minor_pyramids_are_polarized() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for n in 1..=4 {
            for _ in 0..10 {
                let x = random_int_matrix(&mut rng, n, -5, 5);
                let pyramid = solid_minor_pyramid(&x);
                assert!(pyramid.flagged_polarized());
                assert!(pyramid.is_polarized(), "matrix {:?}", x.rows());
            }
        }
    }

    #[test]
    fn perturbation_breaks_polarization() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let x = random_int_matrix(&mut rng, 3, 1, 5);
        let pyramid = solid_minor_pyramid(&x);
        let mut table = pyramid.table().clone();
        let apex = table.apex().clone();
        table.set(PyramidPoint::new(3, 3, 3), apex + rat(1));
        assert!(!AlgebraicPyramid::from_table(table).is_polarized());
    }

    #[test]
    fn propagate_reconstructs_solid_pyramid() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for n in 1..=4 {
            let w = random_positive_genetic(&mut rng, n);
            let x = matrix_from_genetic(&w).unwrap();
            let solid = solid_minor_pyramid(&x);
            let rebuilt = dodgson_propagate(&solid.extract_g()).unwrap();
            assert_eq!(rebuilt.table(), solid.table());
        }
    }

    #[test]
    fn propagate_unit_grid_counts_path_tuples() {
        // unit rectangle products come from unit path weights, so every
        // value of the propagated file is a disjoint-tuple count
        let g = GaussGrid::ones(3).unwrap();
        let pyramid = dodgson_propagate(&g).unwrap();
        let w = GeneticArray::from_rows(vec![vec![rat(1); 3]; 3]).unwrap();
        let counts = genetic_to_pyramid(&w).unwrap();
        assert_eq!(pyramid.table(), counts.table());
        assert_eq!(pyramid.value(PyramidPoint::new(3, 3, 1)), &rat(2));
    }

    #[test]
    fn propagate_reports_zero_divisor() {
        let mut g = GaussGrid::ones(2).unwrap();
        g.set(1, 1, rat(0));
        assert_eq!(
            dodgson_propagate(&g),
            Err(Error::DivisionByZero(PyramidPoint::new(1, 1, 1)))
        );
    }

    #[test]
    fn genetic_level_one_monomials() {
        // the value over matrix cell (2, 2), at the point (3, 3, 1), is the
        // sum over the two monotone paths from column 2 to row 2
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let w = random_positive_genetic(&mut rng, 2);
        let pyramid = genetic_to_pyramid(&w).unwrap();
        let expected = w.get(2, 1) * w.get(1, 1) * w.get(1, 2)
            + w.get(2, 1) * w.get(2, 2) * w.get(1, 2);
        assert_eq!(pyramid.value(PyramidPoint::new(3, 3, 1)), &expected);
    }

    #[test]
    fn genetic_unit_array_counts_paths() {
        let w = GeneticArray::from_int_rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).unwrap();
        let x = matrix_from_genetic(&w).unwrap();
        let binomials = [[1, 1, 1], [1, 2, 3], [1, 3, 6]];
        for r in 1..=3 {
            for c in 1..=3 {
                assert_eq!(x.get(r, c), &rat(binomials[r - 1][c - 1]));
            }
        }
    }

    #[test]
    fn genetic_size_cap() {
        let w = GeneticArray::zeros(7).unwrap();
        assert_eq!(
            genetic_to_pyramid(&w),
            Err(Error::SizeLimitExceeded { n: 7, limit: 6 })
        );
        assert!(matrix_from_genetic(&w).is_err());
    }

    #[test]
    fn genetic_pyramid_equals_solid_minor_pyramid() {
        // the Lindström–Gessel–Viennot coincidence
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        for n in 1..=3 {
            let w = random_positive_genetic(&mut rng, n);
            let x = matrix_from_genetic(&w).unwrap();
            assert_eq!(
                genetic_to_pyramid(&w).unwrap().table(),
                solid_minor_pyramid(&x).table()
            );
        }
    }

    #[test]
    fn extract_g_of_identity() {
        let pyramid = solid_minor_pyramid(&RationalMatrix::identity(2).unwrap());
        let g = pyramid.extract_g();
        assert_eq!(g.get(1, 1), &rat(1));
        assert_eq!(g.get(2, 1), &rat(0));
        assert_eq!(g.get(1, 2), &rat(0));
        assert_eq!(g.get(2, 2), &rat(1));
        assert_eq!(g.get(2, 0), &rat(1));
    }

    #[test]
    fn extract_g_rectangle_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let w = random_positive_genetic(&mut rng, 4);
        let g = genetic_to_pyramid(&w).unwrap().extract_g();
        for i in 1..=4usize {
            for j in 1..=i {
                let mut expected = Rat::one();
                for a in 1..=i {
                    for b in 1..=j {
                        expected *= w.get(a, b);
                    }
                }
                assert_eq!(g.get(i, j), &expected, "({i}, {j})");
            }
        }
    }

    #[test]
    fn extract_h_reads_far_faces() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let w = random_positive_genetic(&mut rng, 3);
        let pyramid = genetic_to_pyramid(&w).unwrap();
        let h = pyramid.extract_h();
        assert_eq!(h.get(3, 3), pyramid.apex());
        assert_eq!(h.get(1, 1), pyramid.value(PyramidPoint::new(5, 5, 1)));
    }

    #[test]
    fn genetic_recovered_from_corner_data() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in 1..=4 {
            let w = random_positive_genetic(&mut rng, n);
            let g = genetic_to_pyramid(&w).unwrap().extract_g();
            assert_eq!(genetic_from_g(&g).unwrap(), w);
        }
    }

    #[test]
    fn genetic_from_unit_grid() {
        let g = GaussGrid::ones(3).unwrap();
        let w = genetic_from_g(&g).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(w.get(i, j), &rat(1));
            }
        }
    }

    #[test]
    fn genetic_from_g_zero_divisor() {
        let mut g = GaussGrid::ones(2).unwrap();
        g.set(1, 1, rat(0));
        assert_eq!(
            genetic_from_g(&g),
            Err(Error::ZeroCornerValue { i: 1, j: 1 })
        );
    }

    #[test]
    fn total_positivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for n in 1..=4 {
            let w = random_positive_genetic(&mut rng, n);
            let x = matrix_from_genetic(&w).unwrap();
            assert!(is_totally_positive_solid(&x));
        }
        assert!(!is_totally_positive_solid(
            &RationalMatrix::identity(2).unwrap()
        ));
        // positive entries but a negative 2x2 minor
        let m = RationalMatrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        assert!(!is_totally_positive_solid(&m));
    }
}
