//! Exact computer algebra for symmetric functions, plethysm, Witt vectors
//! and δ-rings.

pub mod error;
pub mod exactalg;
pub mod partitions;

pub use error::{AlgebraError, Result};
pub use exactalg::{parse_poly, Monomial, MultiPoly, RingDescriptor, RingElement, Value, Var};
pub use partitions::{partitions_of, Partition};
pub mod symfunc;

pub use symfunc::{Basis, CoeffRing, SymFunc};
pub mod witt;
pub use witt::{GhostVector, TruncationSet, WittVector};
pub mod deltaplet;
