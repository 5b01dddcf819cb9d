//! Octahedron recurrence on a pyramid lattice, in two coupled flavours.
//!
//! The lattice is the set of integer points of a pyramid with a square base
//! of side `2n` and apex height `n`.  A value file on that lattice can be
//! propagated level by level through the local octahedron relation, either
//!
//! * algebraically, where the relation is the Dodgson condensation identity
//!   between solid minors of a matrix (exact rational arithmetic throughout), or
//! * tropically, where products become sums and sums become `max`, and the
//!   relation transports corner-sum data of a square array.
//!
//! The tropical transport, read off on the far faces of the pyramid, factors
//! through plane partitions and pairs of semistandard Young tableaux; the
//! [`rsk`] module packages that bijection and cross-checks it against the
//! classical bumping construction.
//!
//! Modules:
//!
//! * [`pyramid`]: lattice geometry, octahedron centers, face charts, and the
//!   wavefront schedules used by every propagation routine.
//! * [`grid`]: square arrays, corner grids and level-1 grids of exact rationals.
//! * [`paths`]: tuples of vertex-disjoint monotone lattice paths (the
//!   Lindström–Gessel–Viennot side of both flavours).
//! * [`algebraic`]: solid-minor pyramids, condensation determinants, genetic
//!   arrays and total positivity.
//! * [`tropical`]: max-plus propagation, the array-to-pyramid transform and
//!   its brute-force oracle, concavity predicates.
//! * [`rsk`]: plane partitions, tableaux, the forward/inverse correspondence,
//!   classical bumping and evacuation.
//! * [`document`]: the plain-text interchange format used by the CLI.

pub mod algebraic;
pub mod document;
pub mod error;
pub mod grid;
pub mod paths;
pub mod pyramid;
pub mod rsk;
pub mod tropical;

pub use error::Error;

/// Exact rational scalar used for every lattice value.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

/// Shorthand for the fraction `p/q` in lowest terms.  Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}
