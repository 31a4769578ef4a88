//! Exact arithmetic kernel: multivariate rational functions over ℚ.
//!
//! Every [`RationalFunction`] is kept in canonical form, so `==` decides
//! mathematical equality and `is_zero` is an exact zero test. Coefficients
//! are arbitrary-precision; nothing in this crate touches floating point.

mod coords;
mod error;
mod heugcd;
mod parse;
mod poly;
mod print;
mod ratfun;

pub use coords::CoordinateSystem;
pub use error::{CasError, Result};
pub use parse::{parse_expr, parse_rational};
pub use poly::{Monomial, Polynomial};
pub use print::Printed;
pub use ratfun::RationalFunction;

/// Arbitrary-precision rational number; always reduced with positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub use num_bigint::BigInt;
