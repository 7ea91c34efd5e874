//! Field-generic polynomials, canonical rational functions and truncated
//! power-series expansion.

mod poly;
mod ratfunc;
pub mod render;
mod series;

pub use poly::Polynomial;
pub use ratfunc::{sum_all, RationalFunction};
pub use series::PowerSeries;
