//! Witt vectors over arbitrary coefficient rings.
//!
//! Ring operations evaluate integral structure polynomials, so they are valid
//! over every ring, including those like ℤ/4 where the ghost map loses
//! information. Components are indexed by the members of a [`TruncationSet`].

mod artin_hasse;
mod series;
mod structpolys;
mod trunc;
mod vector;

pub use artin_hasse::{artin_hasse, NestedWittVector};
pub use series::{series_of, witt_of_series, PowerSeries};
pub use structpolys::{
    compute_structure_polys, frobenius_polys, ghost_poly, structure_polys, witt_var, StructPolys,
};
pub use trunc::TruncationSet;
pub use vector::{from_ghost, teichmuller, GhostVector, WittVector};
