//! Exact arithmetic kernel: coefficient rings and sparse multivariate
//! polynomials over them.

mod monomial;
mod poly;
mod ring;
mod text;

pub use monomial::{Monomial, Var};
pub use poly::MultiPoly;
pub use ring::{RingDescriptor, RingElement, Value};
pub use text::parse_poly;

pub(crate) use ring::format_rational;
