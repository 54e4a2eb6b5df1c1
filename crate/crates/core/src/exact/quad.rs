use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Ring};
use crate::{Error, Result};

/// Radicands of the basis elements of Q(√2, √3, √5), indexed by a bitmask
/// over the primes (bit 0 = 2, bit 1 = 3, bit 2 = 5).
pub const QUAD_RADICANDS: [u32; 8] = [1, 2, 3, 6, 5, 10, 15, 30];

const PRIMES: [i64; 3] = [2, 3, 5];

/// An element of the multiquadratic field Q(√2, √3, √5).
///
/// Stored as eight rational coordinates on the basis √r for r in
/// [`QUAD_RADICANDS`]. The field is closed under the products of basis
/// elements, e.g. √6·√10 = 2√15.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadField {
    coeffs: [Rational; 8],
}

fn basis_factor(a: usize, b: usize) -> i64 {
    let common = a & b;
    (0..3).filter(|k| common >> k & 1 == 1).map(|k| PRIMES[k]).product()
}

fn index_of_radicand(r: u32) -> Option<usize> {
    QUAD_RADICANDS.iter().position(|&x| x == r)
}

impl QuadField {
    pub fn from_rational(r: Rational) -> Self {
        let mut q = QuadField::zero();
        q.coeffs[0] = r;
        q
    }

    pub fn from_int(n: i64) -> Self {
        QuadField::from_rational(Rational::from_int(n))
    }

    /// `c·√radicand` for a squarefree radicand dividing 30.
    pub fn from_term(c: Rational, radicand: u32) -> Result<Self> {
        let idx = index_of_radicand(radicand)
            .ok_or_else(|| Error::Arithmetic(alloc::format!("√{radicand} is not a basis element")))?;
        let mut q = QuadField::zero();
        q.coeffs[idx] = c;
        Ok(q)
    }

    /// The positive square root of a non-negative integer, if it lies in the field.
    pub fn sqrt_of(n: u64) -> Option<Self> {
        if n == 0 {
            return Some(QuadField::zero());
        }
        let mut rest = n;
        let mut square_root: i64 = 1;
        let mut radicand = 1u32;
        for p in [2u64, 3, 5] {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            square_root *= (p as i64).pow(e / 2);
            if e % 2 == 1 {
                radicand *= p as u32;
            }
        }
        let s = num_integer::Roots::sqrt(&rest);
        if s * s != rest {
            return None;
        }
        square_root *= s as i64;
        QuadField::from_term(Rational::from_int(square_root), radicand).ok()
    }

    /// Coefficient of √radicand.
    pub fn coeff(&self, radicand: u32) -> &Rational {
        &self.coeffs[index_of_radicand(radicand).expect("radicand must divide 30")]
    }

    /// Coefficients in bitmask order (see [`QUAD_RADICANDS`]).
    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn from_coeffs(coeffs: [Rational; 8]) -> Self {
        QuadField { coeffs }
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Ring::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadField { coeffs: core::array::from_fn(|i| &self.coeffs[i] * r) }
    }

    /// Flips the sign of √p for `p` in {2, 3, 5}.
    fn conjugate_at(&self, bit: usize) -> Self {
        QuadField {
            coeffs: core::array::from_fn(|i| {
                if i >> bit & 1 == 1 {
                    -self.coeffs[i].clone()
                } else {
                    self.coeffs[i].clone()
                }
            }),
        }
    }

    /// Multiplicative inverse, via the product of Galois conjugates.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Arithmetic("inverse of zero in Q(√2,√3,√5)".into()));
        }
        let mut numerator = QuadField::one();
        let mut current = self.clone();
        for bit in 0..3 {
            let c = current.conjugate_at(bit);
            numerator = numerator * c.clone();
            current = current * c;
        }
        debug_assert!(current.is_rational());
        let norm = current.coeffs[0].recip()?;
        Ok(numerator.scale(&norm))
    }
}

/// Returns the rational value of `x`, or fails if any irrational coordinate is nonzero.
pub fn quad_to_rational(x: &QuadField) -> Result<Rational> {
    if x.is_rational() {
        Ok(x.coeffs[0].clone())
    } else {
        Err(Error::NotRational(alloc::format!("{} is irrational", super::format_quad(x))))
    }
}

impl Ring for QuadField {
    fn zero() -> Self {
        QuadField::default()
    }
    fn one() -> Self {
        QuadField::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
    fn from_i64(n: i64) -> Self {
        QuadField::from_int(n)
    }
}

impl Add for QuadField {
    type Output = QuadField;
    fn add(self, rhs: QuadField) -> QuadField {
        &self + &rhs
    }
}

impl<'a> Add<&'a QuadField> for &'a QuadField {
    type Output = QuadField;
    fn add(self, rhs: &'a QuadField) -> QuadField {
        QuadField { coeffs: core::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]) }
    }
}

impl Sub for QuadField {
    type Output = QuadField;
    fn sub(self, rhs: QuadField) -> QuadField {
        QuadField { coeffs: core::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]) }
    }
}

impl Neg for QuadField {
    type Output = QuadField;
    fn neg(self) -> QuadField {
        QuadField { coeffs: self.coeffs.map(|c| -c) }
    }
}

impl<'a> Mul<&'a QuadField> for &'a QuadField {
    type Output = QuadField;
    fn mul(self, rhs: &'a QuadField) -> QuadField {
        let mut out = QuadField::zero();
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let term = &(x * y) * &Rational::from_int(basis_factor(a, b));
                out.coeffs[a ^ b] += &term;
            }
        }
        out
    }
}

impl Mul for QuadField {
    type Output = QuadField;
    fn mul(self, rhs: QuadField) -> QuadField {
        &self * &rhs
    }
}

impl fmt::Debug for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format_quad(self))
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format_quad(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(c: [i64; 8]) -> QuadField {
        QuadField::from_coeffs(c.map(Rational::from_int))
    }

    fn arb_quad() -> impl Strategy<Value = QuadField> {
        proptest::array::uniform8(-4i64..=4).prop_map(q)
    }

    #[test]
    fn basis_relations() {
        let r2 = QuadField::sqrt_of(2).unwrap();
        let r3 = QuadField::sqrt_of(3).unwrap();
        let r5 = QuadField::sqrt_of(5).unwrap();
        assert_eq!(r2.clone() * r3.clone(), QuadField::sqrt_of(6).unwrap());
        assert_eq!(r2.clone() * r5.clone(), QuadField::sqrt_of(10).unwrap());
        assert_eq!(r3.clone() * r5.clone(), QuadField::sqrt_of(15).unwrap());
        assert_eq!(r2.clone() * r3 * r5, QuadField::sqrt_of(30).unwrap());
        assert_eq!(QuadField::sqrt_of(6).unwrap() * QuadField::sqrt_of(10).unwrap(),
            QuadField::from_term(Rational::from_int(2), 15).unwrap());
        assert_eq!(QuadField::sqrt_of(72).unwrap(), QuadField::from_term(Rational::from_int(6), 2).unwrap());
        assert!(QuadField::sqrt_of(7).is_none());
    }

    #[test]
    fn quad_to_rational_examples() {
        let x = QuadField::from_rational(Rational::new(3, 2).unwrap());
        assert_eq!(quad_to_rational(&x).unwrap(), Rational::new(3, 2).unwrap());
        let r2 = QuadField::sqrt_of(2).unwrap();
        assert!(matches!(quad_to_rational(&r2), Err(Error::NotRational(_))));
        let half = QuadField::from_rational(Rational::new(1, 2).unwrap());
        assert_eq!(quad_to_rational(&(r2.clone() * r2 * half)).unwrap(), Rational::one());
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_quad(), b in arb_quad(), c in arb_quad()) {
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.inverse().unwrap(), QuadField::one());
            }
        }
    }
}
