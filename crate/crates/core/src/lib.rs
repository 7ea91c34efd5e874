//! Exact closed forms for powers of second-order recurrence sequences.
//!
//! For `U_{n+1} = a U_n + b U_{n-1}` with `a^2 + 4b != 0` this crate builds
//!
//! * the generating function `sum U_n^r x^n` as a canonical rational function ([`gfpow`]),
//! * partial sums `sum_{i<=n} U_i^r x^i` and the classical Pell sums ([`partsum`]),
//! * binomial-weighted sums `sum C(n,i) U_i^r x^i` and their Fibonacci/Lucas
//!   specializations and congruences ([`binsum`]),
//!
//! and checks every published closed form against brute-force evaluation
//! ([`audit`]). All arithmetic is exact: big-integer rationals and the quadratic
//! field Q(sqrt(a^2 + 4b)).

pub mod audit;
pub mod binsum;
pub mod compare;
pub mod error;
pub mod gfpow;
pub mod partsum;
pub mod polyrat;
pub mod qfield;
pub mod seq;

pub use error::{Error, Result};
pub use qfield::{Field, QuadElem, Rational, RecurrenceSpec};
