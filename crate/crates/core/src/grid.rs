//! Square tables of exact rationals in the three layouts the recurrence uses.
//!
//! Orientation convention, used by every type here and by the plain-text
//! documents: a table is a list of rows indexed by the second coordinate `j`
//! starting at the boundary, and each row lists values for increasing first
//! coordinate `i`.  Row 1 is the row next to the zero boundary of a corner
//! grid; displays in this crate always list row 1 first.

use crate::error::Error;
use crate::Rat;
use num_traits::Zero;

/// `n x n` array `s(i, j)`, `1 <= i, j <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareArray {
    n: usize,
    data: Vec<Rat>,
}

/// Genetic array `W` of an algebraic pyramid; same layout as [`SquareArray`].
pub type GeneticArray = SquareArray;

impl SquareArray {
    /// Build from rows: `rows[j-1][i-1] = s(i, j)`.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidSize);
        }
        for (j, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeError(format!(
                    "row {} has {} entries, expected {}",
                    j + 1,
                    row.len(),
                    n
                )));
            }
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            data.extend(row);
        }
        Ok(SquareArray { n, data })
    }

    /// Build from integer rows; test/demo convenience.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        SquareArray::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rat(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidSize);
        }
        Ok(SquareArray {
            n,
            data: vec![Rat::zero(); n * n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `s(i, j)` with `1 <= i, j <= n`.
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        &self.data[(j - 1) * self.n + (i - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        self.data[(j - 1) * self.n + (i - 1)] = v;
    }

    /// Rows in display order: row `j` contains `s(1, j) .. s(n, j)`.
    pub fn rows(&self) -> Vec<Vec<Rat>> {
        (1..=self.n)
            .map(|j| (1..=self.n).map(|i| self.get(i, j).clone()).collect())
            .collect()
    }

    /// Index of the first negative entry, if any.
    pub fn first_negative(&self) -> Option<(usize, usize)> {
        self.cells().find(|&(i, j)| self.get(i, j) < &Rat::zero())
    }

    /// Index of the first non-integer entry, if any.
    pub fn first_non_integer(&self) -> Option<(usize, usize)> {
        self.cells().find(|&(i, j)| !self.get(i, j).is_integer())
    }

    /// Sum of all entries.
    pub fn total(&self) -> Rat {
        self.data.iter().fold(Rat::zero(), |acc, v| acc + v)
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..=n).flat_map(move |j| (1..=n).map(move |i| (i, j)))
    }
}

/// `(n+1) x (n+1)` grid `v(i, j)`, `0 <= i, j <= n`.
///
/// Grids produced by the recurrence vanish on the south-west boundary
/// (`v(i, 0) = v(0, j) = 0`); the predicates in [`crate::tropical`] do not
/// assume it, so arbitrary grids can be built with [`CornerGrid::from_full`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerGrid {
    n: usize,
    data: Vec<Rat>,
}

impl CornerGrid {
    /// Zero grid of side `n`.
    pub fn zeros(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidSize);
        }
        Ok(CornerGrid {
            n,
            data: vec![Rat::zero(); (n + 1) * (n + 1)],
        })
    }

    /// Build from the inner rows, zero boundary implied:
    /// `rows[j-1][i-1] = v(i, j)` for `1 <= i, j <= n`.
    pub fn from_inner(rows: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let n = rows.len();
        let mut grid = CornerGrid::zeros(n)?;
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

    /// Build from all `(n+1)` rows including the boundary row and column.
    pub fn from_full(rows: Vec<Vec<Rat>>) -> Result<Self, Error> {
        if rows.len() < 2 {
            return Err(Error::InvalidSize);
        }
        let n = rows.len() - 1;
        let mut grid = CornerGrid::zeros(n)?;
        for (j, row) in rows.into_iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::ShapeError(format!(
                    "row {} has {} entries, expected {}",
                    j,
                    row.len(),
                    n + 1
                )));
            }
            for (i, v) in row.into_iter().enumerate() {
                grid.set(i, j, v);
            }
        }
        Ok(grid)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        CornerGrid::from_inner(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rat(v)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `v(i, j)` with `0 <= i, j <= n`.
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        assert!(i <= self.n && j <= self.n);
        &self.data[j * (self.n + 1) + i]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        assert!(i <= self.n && j <= self.n);
        self.data[j * (self.n + 1) + i] = v;
    }

    /// Inner rows in display order (boundary stripped).
    pub fn inner_rows(&self) -> Vec<Vec<Rat>> {
        (1..=self.n)
            .map(|j| (1..=self.n).map(|i| self.get(i, j).clone()).collect())
            .collect()
    }

    /// Does the grid vanish on the south-west boundary?
    pub fn has_zero_boundary(&self) -> bool {
        (0..=self.n).all(|i| self.get(i, 0).is_zero()) && (0..=self.n).all(|j| self.get(0, j).is_zero())
    }
}

/// Values attached to the odd points `(2r - 1, 2c - 1, 1)` of level 1,
/// indexed matrix-style by `(r, c)` with `1 <= r, c <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level1Grid {
    n: usize,
    data: Vec<Rat>,
}

impl Level1Grid {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let inner = SquareArray::from_rows(rows)?;
        Ok(Level1Grid {
            n: inner.n,
            data: inner.data,
        })
    }

    pub fn zeros(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidSize);
        }
        Ok(Level1Grid {
            n,
            data: vec![Rat::zero(); n * n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Value over the matrix cell `(r, c)`, i.e. at the point `(2r-1, 2c-1, 1)`.
    pub fn get(&self, r: usize, c: usize) -> &Rat {
        assert!((1..=self.n).contains(&r) && (1..=self.n).contains(&c));
        &self.data[(c - 1) * self.n + (r - 1)]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        assert!((1..=self.n).contains(&r) && (1..=self.n).contains(&c));
        self.data[(c - 1) * self.n + (r - 1)] = v;
    }

    /// Value at an odd level-1 lattice point `(i, j, 1)`.
    pub fn get_odd(&self, i: i64, j: i64) -> &Rat {
        assert!(i % 2 == 1 && j % 2 == 1, "level-1 points have odd coordinates");
        self.get(((i + 1) / 2) as usize, ((j + 1) / 2) as usize)
    }

    /// Rows in display order, matching [`SquareArray::rows`]: row `c` lists
    /// `r = 1..n`.
    pub fn rows(&self) -> Vec<Vec<Rat>> {
        (1..=self.n)
            .map(|c| (1..=self.n).map(|r| self.get(r, c).clone()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn square_array_layout() {
        let s = SquareArray::from_int_rows(&[&[2, 3, 1], &[1, 1, 5], &[1, 2, 2]]).unwrap();
        assert_eq!(s.get(1, 1), &rat(2));
        assert_eq!(s.get(2, 1), &rat(3));
        assert_eq!(s.get(3, 2), &rat(5));
        assert_eq!(s.get(3, 3), &rat(2));
        assert_eq!(s.total(), rat(18));
        assert_eq!(s.rows()[1], vec![rat(1), rat(1), rat(5)]);
    }

    #[test]
    fn rejects_empty_and_ragged() {
        assert_eq!(SquareArray::from_rows(vec![]), Err(Error::InvalidSize));
        assert!(matches!(
            SquareArray::from_rows(vec![vec![rat(1)], vec![rat(1)]]),
            Err(Error::ShapeError(_))
        ));
    }

    #[test]
    fn corner_grid_boundary() {
        let g = CornerGrid::from_int_rows(&[&[2, 5, 6], &[3, 7, 13], &[4, 10, 18]]).unwrap();
        assert!(g.has_zero_boundary());
        assert_eq!(g.get(0, 0), &rat(0));
        assert_eq!(g.get(3, 0), &rat(0));
        assert_eq!(g.get(1, 1), &rat(2));
        assert_eq!(g.get(3, 3), &rat(18));
        let full = CornerGrid::from_full(g.clone().full_rows()).unwrap();
        assert_eq!(full, g);
    }

    impl CornerGrid {
        fn full_rows(&self) -> Vec<Vec<Rat>> {
            (0..=self.n)
                .map(|j| (0..=self.n).map(|i| self.get(i, j).clone()).collect())
                .collect()
        }
    }

    #[test]
    fn level1_odd_indexing() {
        let mut b = Level1Grid::zeros(3).unwrap();
        b.set(2, 1, rat(7));
        assert_eq!(b.get_odd(3, 1), &rat(7));
        assert_eq!(b.get_odd(1, 1), &rat(0));
    }
}
