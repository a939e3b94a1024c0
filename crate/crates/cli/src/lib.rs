//! Command-line surface for the `hypersimplex` library: output rendering and
//! the cross-check runner. The binary in `main.rs` is a thin wrapper.

pub mod crosscheck;
pub mod render;

pub use crosscheck::{run_crosscheck, CrosscheckConfig, CrosscheckReport, InjectedFault};
pub use render::{render_polynomial, render_table, Format, PolynomialDocument};
