//! Monotone lattice paths and vertex-disjoint path tuples.
//!
//! A path *from column `a` to row `b`* is a node sequence starting at
//! `(a, 1)`, ending at `(1, b)`, whose consecutive differences are `(-1, 0)`
//! or `(0, 1)`.  Nodes live on the `n x n` grid that also indexes square
//! arrays, so a node `(a, b)` carries the array value `s(a, b)` (tropical) or
//! `W(a, b)` (algebraic).
//!
//! A pyramid point `(i, j, k)` selects `k` start columns and `k` end rows
//! (see [`point_specs`]); both flavours of the recurrence evaluate that point
//! by folding over all tuples of pairwise vertex-disjoint paths for those
//! endpoints, which is what [`for_each_disjoint_tuple`] enumerates.

use crate::error::Error;
use crate::pyramid::PyramidPoint;

/// Largest grid side the bitmask-based enumeration supports.
pub const MAX_PATH_SIDE: usize = 8;

/// Monotone path from `(a, 1)` to `(1, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    nodes: Vec<(usize, usize)>,
}

impl LatticePath {
    /// Validate a node sequence: positive coordinates, starts on row 1, ends
    /// on column 1, unit west/north steps only.
    pub fn new(nodes: Vec<(usize, usize)>) -> Result<Self, Error> {
        let check = |ok: bool, msg: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::ShapeError(msg.to_string()))
            }
        };
        check(!nodes.is_empty(), "path must have at least one node")?;
        check(nodes[0].1 == 1, "path must start on row 1")?;
        check(nodes[nodes.len() - 1].0 == 1, "path must end on column 1")?;
        for w in nodes.windows(2) {
            let ((a0, b0), (a1, b1)) = (w[0], w[1]);
            let west = a1 + 1 == a0 && b1 == b0;
            let north = a1 == a0 && b1 == b0 + 1;
            check(west || north, "steps must be (-1, 0) or (0, 1)")?;
        }
        check(
            nodes.iter().all(|&(a, b)| a >= 1 && b >= 1),
            "nodes must have positive coordinates",
        )?;
        Ok(LatticePath { nodes })
    }

    pub fn nodes(&self) -> &[(usize, usize)] {
        &self.nodes
    }

    /// Start column `a` of the initial node `(a, 1)`.
    pub fn from_col(&self) -> usize {
        self.nodes[0].0
    }

    /// End row `b` of the final node `(1, b)`.
    pub fn to_row(&self) -> usize {
        self.nodes[self.nodes.len() - 1].1
    }
}

/// Tuple of pairwise vertex-disjoint paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTuple {
    paths: Vec<LatticePath>,
}

impl PathTuple {
    pub fn new(paths: Vec<LatticePath>) -> Result<Self, Error> {
        let mut seen = std::collections::HashSet::new();
        for path in &paths {
            for node in path.nodes() {
                if !seen.insert(*node) {
                    return Err(Error::ShapeError(format!(
                        "paths share the node ({}, {})",
                        node.0, node.1
                    )));
                }
            }
        }
        Ok(PathTuple { paths })
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }
}

/// Endpoint pairs `(from column, to row)` of the `k` paths attached to a
/// pyramid point: the `t`-th path runs from column `(i-k)/2 + t` to row
/// `(j-k)/2 + t`.
pub fn point_specs(p: PyramidPoint) -> Vec<(usize, usize)> {
    let k = p.k;
    (1..=k)
        .map(|t| (((p.i - k) / 2 + t) as usize, ((p.j - k) / 2 + t) as usize))
        .collect()
}

/// All monotone paths from column `from_col` to row `to_row`.
pub fn enumerate_paths(n: usize, from_col: usize, to_row: usize) -> Vec<LatticePath> {
    assert!(
        (1..=n).contains(&from_col) && (1..=n).contains(&to_row),
        "endpoints outside the grid"
    );
    let mut out = Vec::new();
    let mut nodes = vec![(from_col, 1)];
    extend(to_row, &mut nodes, &mut out);
    out
}

fn extend(to_row: usize, nodes: &mut Vec<(usize, usize)>, out: &mut Vec<LatticePath>) {
    let (a, b) = *nodes.last().unwrap();
    if (a, b) == (1, to_row) {
        out.push(LatticePath {
            nodes: nodes.clone(),
        });
        return;
    }
    if a > 1 {
        nodes.push((a - 1, b));
        extend(to_row, nodes, out);
        nodes.pop();
    }
    if b < to_row {
        nodes.push((a, b + 1));
        extend(to_row, nodes, out);
        nodes.pop();
    }
}

/// Call `f` once per tuple of pairwise vertex-disjoint paths with the given
/// endpoint pairs.  An empty endpoint list yields a single empty tuple.
pub fn for_each_disjoint_tuple<F>(n: usize, specs: &[(usize, usize)], f: F)
where
    F: FnMut(&[LatticePath]),
{
    assert!(n <= MAX_PATH_SIDE, "grid side exceeds bitmask capacity");
    for &(a, b) in specs {
        assert!(
            (1..=n).contains(&a) && (1..=n).contains(&b),
            "endpoints outside the grid"
        );
    }
    let mut walker = Walker {
        n,
        specs,
        used: 0,
        tuple: Vec::with_capacity(specs.len()),
        current: Vec::new(),
        f,
    };
    walker.start_path(0);
}

struct Walker<'a, F> {
    n: usize,
    specs: &'a [(usize, usize)],
    used: u64,
    tuple: Vec<LatticePath>,
    current: Vec<(usize, usize)>,
    f: F,
}

impl<F: FnMut(&[LatticePath])> Walker<'_, F> {
    fn start_path(&mut self, t: usize) {
        if t == self.specs.len() {
            (self.f)(&self.tuple);
            return;
        }
        self.visit(t, self.specs[t].0, 1);
    }

    fn visit(&mut self, t: usize, a: usize, b: usize) {
        let bit = 1u64 << ((a - 1) * self.n + (b - 1));
        if self.used & bit != 0 {
            return;
        }
        self.used |= bit;
        self.current.push((a, b));
        let to_row = self.specs[t].1;
        if (a, b) == (1, to_row) {
            self.tuple.push(LatticePath {
                nodes: self.current.clone(),
            });
            let parked = std::mem::take(&mut self.current);
            self.start_path(t + 1);
            self.current = parked;
            self.tuple.pop();
        } else {
            if a > 1 {
                self.visit(t, a - 1, b);
            }
            if b < to_row {
                self.visit(t, a, b + 1);
            }
        }
        self.current.pop();
        self.used &= !bit;
    }
}
