//! Front end for the plethora algebra kernel: an expression language for
//! symmetric functions, Witt vector commands, δ-ring demonstrations and the
//! identity suites behind `plethora check`.

pub mod app;
pub mod expr;
pub mod suites;

pub use app::run;
