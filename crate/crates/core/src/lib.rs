//! Exact representation numbers of integers by sums of squares and by even
//! positive-definite quadratic forms, computed from theta-series generating
//! functions, together with the charge and obstruction arithmetic for
//! singular `SU(n+1)` connections that consumes them.
//!
//! * [`qseries`]: truncated power series with unbounded integer coefficients.
//! * [`repnum`]: `r_k`, `R_k`, `r_Q`, `R_Q`, divisor formulas and brute-force oracles.
//! * [`gauge`]: holonomy classes, Chern-Weil charge, Chern-Simons value, charge extrema.
//! * [`obstruct`]: flat-connection constraints and the irreducibility obstruction.
//! * [`cli`]: the `thetarep` command-line frontend.

pub mod cli;
pub mod error;
pub mod gauge;
pub mod obstruct;
pub mod qseries;
pub mod repnum;

pub use error::{Error, Result};
pub use qseries::QSeries;
pub use repnum::{QuadForm, RepKind, RepTable};
