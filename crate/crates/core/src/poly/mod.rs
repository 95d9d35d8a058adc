//! Exact polynomial arithmetic: `Z[q]`, Laurent polynomials in `q^{1/2}`,
//! and power series in an auxiliary variable.

mod laurent;
mod qpoly;
mod series;

pub use laurent::HalfLaurent;
pub use qpoly::{q_fibonacci, Degree, QPoly};
pub use series::{rational_series_coeff, series_prefix, zpoly_mul, ThreeRowSeries, ZPoly};
