//! Exact arithmetic: rationals, the field Q(√2, √3, √5), cyclotomic numbers,
//! polynomials, truncated power series and small matrices.

mod complex;
mod cyclotomic;
mod literal;
mod matrix;
mod poly;
mod quad;
mod rational;

pub use complex::QuadComplex;
pub use cyclotomic::Cyclotomic;
pub use literal::{format_complex, format_quad, parse_complex, parse_quad};
pub use matrix::{charpoly_reciprocal, charpoly_reciprocal_int, RationalMatrix};
pub use poly::{
    series_div_truncate, IntPolynomial, Polynomial, QuadPolynomial, TruncatedSeries,
};
pub use quad::{quad_to_rational, QuadField, QUAD_RADICANDS};
pub use rational::Rational;

use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

/// Coefficient ring for polynomials and series.
pub trait Ring:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn from_i64(n: i64) -> Self {
        n
    }
}
