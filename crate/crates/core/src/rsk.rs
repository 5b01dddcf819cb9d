//! Plane partitions, semi-standard Young tableaux, and the correspondence
//! between non-negative arrays and tableau pairs.
//!
//! The chain is: integrate an array, push the corner data through the
//! pyramid with the max-plus recurrence, read the far faces, and take
//! diagonal differences.  The result is a plane partition, whose two
//! diagonal triangles unfold into a pair of interlacing partition chains,
//! i.e. a pair of tableaux of the same shape.  Every step is invertible.
//! [`classical_rsk`] implements the textbook bumping construction as an
//! independent oracle, and [`evacuation`] the Schützenberger involution
//! used when comparing the two constructions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::grid::{CornerGrid, SquareArray};
use crate::tropical::{differentiate, integrate, or_map, or_map_inverse};
use crate::Rat;

/// Largest array entry [`classical_rsk`] will expand into individual cells.
pub const MAX_CLASSICAL_ENTRY: u64 = 1_000_000;

/// Weakly decreasing non-negative table: `p(i,j) >= p(i+1,j)` and
/// `p(i,j) >= p(i,j+1)`.  Entries are exact rationals; the tableau
/// operations additionally require integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanePartition {
    inner: SquareArray,
}

impl PlanePartition {
    /// Build from rows (`rows[j-1][i-1] = p(i, j)`), validating the
    /// invariants.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let inner = SquareArray::from_rows(rows)?;
        PlanePartition::from_array(inner)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        let inner = SquareArray::from_int_rows(rows)?;
        PlanePartition::from_array(inner)
    }

    pub fn from_array(inner: SquareArray) -> Result<Self, Error> {
        if let Some((i, j)) = inner.first_negative() {
            return Err(Error::NegativeEntries { i, j });
        }
        let n = inner.n();
        for j in 1..=n {
            for i in 1..=n {
                let east_ok = i == n || inner.get(i, j) >= inner.get(i + 1, j);
                let north_ok = j == n || inner.get(i, j) >= inner.get(i, j + 1);
                if !east_ok || !north_ok {
                    return Err(Error::NotWeaklyDecreasing { i, j });
                }
            }
        }
        Ok(PlanePartition { inner })
    }

    pub fn zeros(n: usize) -> Result<Self, Error> {
        Ok(PlanePartition {
            inner: SquareArray::zeros(n)?,
        })
    }

    pub fn n(&self) -> usize {
        self.inner.n()
    }

    /// `p(i, j)` with `1 <= i, j <= n`.
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        self.inner.get(i, j)
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        self.inner.rows()
    }

    pub fn first_non_integer(&self) -> Option<(usize, usize)> {
        self.inner.first_non_integer()
    }

    /// Sum of all entries.
    pub fn total(&self) -> Rat {
        self.inner.total()
    }
}

/// Weakly decreasing non-negative integer parts; trailing zeros are
/// trimmed, so `(3, 1)` and `(3, 1, 0)` are the same partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ShapeError(
                "partition parts must be weakly decreasing".to_string(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// `r`-th part, 1-based; zero beyond the last part.
    pub fn part(&self, r: usize) -> u64 {
        assert!(r >= 1);
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Do `self` and the finer partition interlace:
    /// `self_1 >= other_1 >= self_2 >= other_2 >= ...`?
    pub fn interlaces(&self, finer: &Partition) -> bool {
        let rows = self.len().max(finer.len()) + 1;
        (1..=rows).all(|r| self.part(r) >= finer.part(r) && finer.part(r) >= self.part(r + 1))
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (idx, part) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

/// Semi-standard Young tableau on the alphabet `1..=n`, stored as the chain
/// of shapes `chain[t]` = shape of the cells with letters `<= n - t`.
///
/// The chain runs from the full shape `chain[0]` down to the empty
/// partition `chain[n]`; consecutive shapes interlace, which is equivalent
/// to the filling having weakly increasing rows and strictly increasing
/// columns (each strip `chain[t] \ chain[t+1]` is a horizontal strip
/// carrying the letter `n - t`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    n: usize,
    chain: Vec<Partition>,
}

impl Tableau {
    pub fn from_chain(n: usize, chain: Vec<Partition>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidSize);
        }
        if chain.len() != n + 1 {
            return Err(Error::ShapeError(format!(
                "chain has {} partitions, expected {}",
                chain.len(),
                n + 1
            )));
        }
        if !chain[n].is_empty() {
            return Err(Error::ShapeError(
                "chain must end with the empty partition".to_string(),
            ));
        }
        for t in 0..n {
            if !chain[t].interlaces(&chain[t + 1]) {
                return Err(Error::NotInterlacing { step: t });
            }
        }
        Ok(Tableau { n, chain })
    }

    /// Build from the row filling (`rows[r-1]` lists the letters of row `r`
    /// left to right), validating against the chain form.
    pub fn from_rows(n: usize, mut rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidSize);
        }
        while rows.last().is_some_and(|row| row.is_empty()) {
            rows.pop();
        }
        for (rm, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::ShapeError(format!("row {} is empty", rm + 1)));
            }
            if row.iter().any(|&x| x < 1 || x > n) {
                return Err(Error::ShapeError(format!(
                    "row {} contains a letter outside 1..={}",
                    rm + 1,
                    n
                )));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::ShapeError(format!(
                    "row {} is not weakly increasing",
                    rm + 1
                )));
            }
        }
        let mut chain = Vec::with_capacity(n + 1);
        for t in 0..=n {
            let cap = n - t;
            let parts: Vec<u64> = rows
                .iter()
                .map(|row| row.iter().take_while(|&&x| x <= cap).count() as u64)
                .collect();
            chain.push(Partition::new(parts)?);
        }
        let tableau = Tableau::from_chain(n, chain)?;
        if tableau.rows() != rows {
            return Err(Error::ShapeError(
                "rows do not form a semi-standard filling".to_string(),
            ));
        }
        Ok(tableau)
    }

    pub fn empty(n: usize) -> Result<Self, Error> {
        Tableau::from_chain(n, vec![Partition::empty(); n + 1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.chain[0]
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn is_empty(&self) -> bool {
        self.chain[0].is_empty()
    }

    /// Row filling: row `r` lists its letters left to right.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows = Vec::with_capacity(self.chain[0].len());
        for r in 1..=self.chain[0].len() {
            let mut row = Vec::with_capacity(self.chain[0].part(r) as usize);
            for letter in 1..=self.n {
                let t = self.n - letter;
                let count = self.chain[t].part(r) - self.chain[t + 1].part(r);
                row.extend(std::iter::repeat_n(letter, count as usize));
            }
            rows.push(row);
        }
        rows
    }

    /// Letter multiplicities: `content()[L-1]` is the number of cells
    /// holding the letter `L`.
    pub fn content(&self) -> Vec<u64> {
        (1..=self.n)
            .map(|letter| {
                let t = self.n - letter;
                self.chain[t].size() - self.chain[t + 1].size()
            })
            .collect()
    }
}

/// The two diagonal triangles of a plane partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleSide {
    /// Cells on and below the main diagonal (`i >= j`).
    Alpha,
    /// Cells on and above the main diagonal (`j >= i`).
    Beta,
}

/// Diagonal difference `p(i, j) = h(i, j) - h(i-1, j-1)` of inframodular
/// corner data; the inequalities defining inframodularity are exactly the
/// weak decrease of `p`, and the corner condition `h(n-1,n-1) <= h(n,n)`
/// pins `p(n, n) >= 0`.
pub fn diagonal_difference(h: &CornerGrid) -> Result<PlanePartition, Error> {
    if !h.has_zero_boundary() {
        return Err(Error::ShapeError(
            "corner grid must vanish on the south-west boundary".to_string(),
        ));
    }
    if let Some((i, j)) = h.first_inframodular_violation() {
        return Err(Error::NotInframodular { i, j });
    }
    let n = h.n();
    if h.get(n, n) < h.get(n - 1, n - 1) {
        return Err(Error::NegativeCorner);
    }
    let rows: Vec<Vec<Rat>> = (1..=n)
        .map(|j| (1..=n).map(|i| h.get(i, j) - h.get(i - 1, j - 1)).collect())
        .collect();
    PlanePartition::from_rows(rows)
}

/// Inverse of [`diagonal_difference`]: running sums along diagonals,
/// `h(i, j) = p(i, j) + p(i-1, j-1) + ...`.
pub fn diagonal_sum(p: &PlanePartition) -> CornerGrid {
    let n = p.n();
    let mut h = CornerGrid::zeros(n).expect("plane partition side is positive");
    for j in 1..=n {
        for i in 1..=n {
            let v = p.get(i, j) + h.get(i - 1, j - 1);
            h.set(i, j, v);
        }
    }
    h
}

fn entry_to_u64(v: &Rat, i: usize, j: usize) -> Result<u64, Error> {
    if !v.is_integer() {
        return Err(Error::NonIntegerEntries { i, j });
    }
    u64::try_from(v.to_integer()).map_err(|_| Error::EntryTooLarge { i, j })
}

/// Main diagonal of a plane partition, the common shape of its two tableaux.
pub fn shape(p: &PlanePartition) -> Result<Partition, Error> {
    let parts = (1..=p.n())
        .map(|t| entry_to_u64(p.get(t, t), t, t))
        .collect::<Result<Vec<u64>, Error>>()?;
    Partition::new(parts)
}

/// Unfold one diagonal triangle of an integer plane partition into a
/// tableau: the `t`-th chain entry is the `t`-th sub-diagonal (alpha side)
/// or super-diagonal (beta side).
pub fn half_tableau(p: &PlanePartition, side: TriangleSide) -> Result<Tableau, Error> {
    let n = p.n();
    let mut chain = Vec::with_capacity(n + 1);
    for t in 0..=n {
        let parts = (1..=n - t)
            .map(|r| {
                let (i, j) = match side {
                    TriangleSide::Alpha => (r + t, r),
                    TriangleSide::Beta => (r, r + t),
                };
                entry_to_u64(p.get(i, j), i, j)
            })
            .collect::<Result<Vec<u64>, Error>>()?;
        chain.push(Partition::new(parts)?);
    }
    Tableau::from_chain(n, chain)
}

/// Refold two same-shape tableaux into the plane partition whose diagonal
/// triangles they describe; inverse of taking both [`half_tableau`]s.
pub fn plane_partition_from_tableaux(
    alpha_side: &Tableau,
    beta_side: &Tableau,
) -> Result<PlanePartition, Error> {
    if alpha_side.n() != beta_side.n() || alpha_side.shape() != beta_side.shape() {
        return Err(Error::ShapeMismatch);
    }
    let n = alpha_side.n();
    let mut rows = vec![vec![Rat::zero(); n]; n];
    for t in 0..=n {
        for r in 1..=n - t {
            let a = Rat::from_integer(BigInt::from(alpha_side.chain()[t].part(r)));
            let b = Rat::from_integer(BigInt::from(beta_side.chain()[t].part(r)));
            rows[r - 1][r + t - 1] = a;
            rows[r + t - 1][r - 1] = b;
        }
    }
    PlanePartition::from_rows(rows)
}

/// Array to plane partition and tableau pair, through the pyramid.
///
/// Returns `(p, alpha-side tableau, beta-side tableau)`; the alpha-side
/// content equals the column sums of `s` and the beta-side content the row
/// sums.
pub fn rsk_forward(s: &SquareArray) -> Result<(PlanePartition, Tableau, Tableau), Error> {
    if let Some((i, j)) = s.first_negative() {
        return Err(Error::NegativeEntries { i, j });
    }
    if let Some((i, j)) = s.first_non_integer() {
        return Err(Error::NonIntegerEntries { i, j });
    }
    let p = diagonal_difference(&or_map(&integrate(s)))?;
    let alpha_side = half_tableau(&p, TriangleSide::Alpha)?;
    let beta_side = half_tableau(&p, TriangleSide::Beta)?;
    Ok((p, alpha_side, beta_side))
}

/// Plane partition back to the array: undo the diagonal sums, propagate
/// backward, differentiate.
pub fn rsk_inverse(p: &PlanePartition) -> SquareArray {
    differentiate(&or_map_inverse(&diagonal_sum(p)))
}

// Column insertion: place x in the topmost cell of the column that is >= x,
// bumping the displaced entry into the next column; returns the 1-based
// (row, column) of the cell added at the end of the bumping chain.
fn column_insert(cols: &mut Vec<Vec<usize>>, mut x: usize) -> (usize, usize) {
    let mut c = 0;
    loop {
        if c == cols.len() {
            cols.push(vec![x]);
            return (1, c + 1);
        }
        match cols[c].iter().position(|&v| v >= x) {
            Some(idx) => {
                x = std::mem::replace(&mut cols[c][idx], x);
                c += 1;
            }
            None => {
                cols[c].push(x);
                return (cols[c].len(), c + 1);
            }
        }
    }
}

// Row insertion: place x in the leftmost cell of the row that is > x,
// bumping the displaced entry into the next row.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut x: usize) {
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![x]);
            return;
        }
        match rows[r].iter().position(|&v| v > x) {
            Some(idx) => {
                x = std::mem::replace(&mut rows[r][idx], x);
                r += 1;
            }
            None => {
                rows[r].push(x);
                return;
            }
        }
    }
}

fn cols_to_rows(cols: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let nrows = cols.first().map_or(0, |col| col.len());
    (0..nrows)
        .map(|r| {
            cols.iter()
                .take_while(|col| col.len() > r)
                .map(|col| col[r])
                .collect()
        })
        .collect()
}

/// Textbook bumping construction, the oracle for [`rsk_forward`].
///
/// The biword of `s` lists the pair `(i, j)` with multiplicity `s(i, j)`,
/// ordered by `j` ascending and `i` descending within each `j`; the `i`
/// letters are column-inserted into the first tableau while the second
/// records where each new cell appears.  Returns `(P, Q)` with
/// `content(P)` = column sums and `content(Q)` = row sums of `s`.
pub fn classical_rsk(s: &SquareArray) -> Result<(Tableau, Tableau), Error> {
    if let Some((i, j)) = s.first_negative() {
        return Err(Error::NegativeEntries { i, j });
    }
    if let Some((i, j)) = s.first_non_integer() {
        return Err(Error::NonIntegerEntries { i, j });
    }
    let n = s.n();
    let mut p_cols: Vec<Vec<usize>> = Vec::new();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for j in 1..=n {
        for i in (1..=n).rev() {
            let mult = entry_to_u64(s.get(i, j), i, j)?;
            if mult > MAX_CLASSICAL_ENTRY {
                return Err(Error::EntryTooLarge { i, j });
            }
            for _ in 0..mult {
                let (r, _c) = column_insert(&mut p_cols, i);
                if r > q_rows.len() {
                    q_rows.push(vec![j]);
                } else {
                    q_rows[r - 1].push(j);
                }
            }
        }
    }
    let p = Tableau::from_rows(n, cols_to_rows(&p_cols))?;
    let q = Tableau::from_rows(n, q_rows)?;
    Ok((p, q))
}

/// Schützenberger involution: reverse the reading word, complement each
/// letter (`x` to `n + 1 - x`), and re-insert.  Shape-preserving and
/// content-reversing.
pub fn evacuation(t: &Tableau) -> Tableau {
    let n = t.n();
    let rows = t.rows();
    let mut word: Vec<usize> = Vec::new();
    for row in rows.iter().rev() {
        word.extend(row.iter().copied());
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &x in word.iter().rev() {
        row_insert(&mut out, n + 1 - x);
    }
    Tableau::from_rows(n, out).expect("insertion of a word yields a valid tableau")
}
