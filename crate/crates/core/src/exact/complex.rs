use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{Cyclotomic, QuadField, Rational, Ring};
use crate::Result;

/// re + i·im with both parts in Q(√2, √3, √5). Character values of the
/// covers live here; on odd classes they can be purely imaginary.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadComplex {
    pub re: QuadField,
    pub im: QuadField,
}

impl QuadComplex {
    pub fn new(re: QuadField, im: QuadField) -> Self {
        QuadComplex { re, im }
    }

    pub fn real(re: QuadField) -> Self {
        QuadComplex { re, im: QuadField::zero() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadComplex { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadComplex { re: self.re.scale(r), im: self.im.scale(r) }
    }

    /// Splits a cyclotomic number into real and imaginary parts.
    pub fn from_cyclotomic(c: &Cyclotomic) -> Result<Self> {
        let half = Rational::new(1, 2)?;
        let bar = c.conj();
        let re = (c.clone() + bar.clone()).scale(&half);
        // (c − c̄)/(2i) = −i(c − c̄)/2
        let im = (Cyclotomic::zeta(4, 3) * (c.clone() - bar)).scale(&half);
        Ok(QuadComplex { re: re.to_quad()?, im: im.to_quad()? })
    }
}

impl Ring for QuadComplex {
    fn zero() -> Self {
        QuadComplex::default()
    }
    fn one() -> Self {
        QuadComplex::real(QuadField::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        QuadComplex::real(QuadField::from_int(n))
    }
}

impl Add for QuadComplex {
    type Output = QuadComplex;
    fn add(self, rhs: QuadComplex) -> QuadComplex {
        QuadComplex { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for QuadComplex {
    type Output = QuadComplex;
    fn sub(self, rhs: QuadComplex) -> QuadComplex {
        QuadComplex { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Neg for QuadComplex {
    type Output = QuadComplex;
    fn neg(self) -> QuadComplex {
        QuadComplex { re: -self.re, im: -self.im }
    }
}

impl<'a> Mul<&'a QuadComplex> for &'a QuadComplex {
    type Output = QuadComplex;
    fn mul(self, rhs: &'a QuadComplex) -> QuadComplex {
        if self.is_real() && rhs.is_real() {
            return QuadComplex::real(&self.re * &rhs.re);
        }
        QuadComplex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for QuadComplex {
    type Output = QuadComplex;
    fn mul(self, rhs: QuadComplex) -> QuadComplex {
        &self * &rhs
    }
}

impl fmt::Debug for QuadComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format_complex(self))
    }
}

impl fmt::Display for QuadComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format_complex(self))
    }
}
