//! Exact Ehrhart polynomials of hypersimplices and weighted Lah numbers.
//!
//! The hypersimplex `Δ(k,n)` is the slice of the unit cube `[0,1]^n` cut out by
//! `x_1 + ... + x_n = k`. This crate computes its Ehrhart polynomial `E(k,n; t)`
//! by four independent routes (alternating binomial sum, Stirling-number
//! coefficient formula, weighted Lah / Eulerian expansion, and brute-force lattice
//! counting followed by interpolation), and the weighted Lah numbers `W(l,n,m)` by
//! five (enumeration, two recurrences, a closed form and a bivariate generating
//! function). Everything is exact: integers are [`num_bigint::BigInt`] and
//! rationals are [`num_rational::BigRational`].
//!
//! ```
//! use hypersimplex::{ehrhart_polynomial, EhrhartMethod};
//!
//! let e = ehrhart_polynomial(2, 4, EhrhartMethod::Wlah).unwrap();
//! assert_eq!(e.poly.to_string(), "1 + 7/3 t + 2 t^2 + 2/3 t^3");
//! ```

pub mod arith;
pub mod ehrhart;
mod error;
pub mod poly;
pub mod series;
pub mod wlah;

pub use arith::{
    binomial, eulerian, factorial, lah, stirling1_unsigned, sym_range_product, Integer, Rational,
};
pub use ehrhart::{
    cnm_polynomial, ehrhart_coefficient_stirling, ehrhart_coefficient_wlah, ehrhart_interpolated,
    ehrhart_katzman, ehrhart_polynomial, f_coefficient, lattice_point_count, EhrhartMethod,
    EhrhartResult, HypersimplexParams, LatticeStrategy,
};
pub use error::{Error, Result};
pub use poly::{lagrange_interpolate, t_binomial, Polynomial};
pub use series::BivariateSeries;
pub use wlah::{
    enumerate_ordered_partitions, partition_weight, wlah, wlah_row, wlah_table,
    OrderedSetPartition, WlahMethod, WlahTable,
};
