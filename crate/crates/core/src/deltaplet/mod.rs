//! The p-typical layer `Λ_p = ℤ[θ_0, θ_1, …]` with `θ_n = w_{p^n}`.
//!
//! A δ-structure on a p-torsion-free ring is the same thing as a lift of
//! Frobenius, and either one gives an action of `Λ_p`. Here the three views
//! are: a [`FrobeniusLift`], the operator [`delta_op`] with
//! `f(x) = x^p + p·δ(x)`, and the ring map [`dwork_action`] into Witt vectors.

mod lift;
mod newton;
mod report;
mod theta;

pub use lift::{delta_op, dwork_action, FrobeniusLift};
pub use newton::{lambda_from_adams, NewtonRing};
pub use report::{linearization_report, Check, Status, THETA_ITERATES};
pub use theta::{lambda_p_membership, theta_as_symfunc, ThetaWord};
