use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use super::{QuadField, Ring};
use crate::{Error, Result};

/// Dense univariate polynomial; trailing zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Polynomial<i64>;
pub type QuadPolynomial = Polynomial<QuadField>;

impl<T: Ring> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::new(vec![T::one()])
    }

    /// `c·t^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Polynomial::new(coeffs)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// True iff coefficient k equals coefficient n−k for every k (and the
    /// degree does not exceed n).
    pub fn is_palindromic(&self, n: usize) -> bool {
        if self.degree().is_some_and(|d| d > n) {
            return false;
        }
        (0..=n).all(|k| self.coeff(k) == self.coeff(n - k))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }
}

impl IntPolynomial {
    /// `∏ (1 − t^{d})` over the given degrees.
    pub fn product_one_minus(degrees: &[u32]) -> Self {
        degrees.iter().fold(Polynomial::one(), |acc, &d| {
            acc * (Polynomial::one() - Polynomial::monomial(1, d as usize))
        })
    }

    /// `∏ (1 + t^{e})` over the given exponents.
    pub fn product_one_plus(exponents: &[u32]) -> Self {
        exponents.iter().fold(Polynomial::one(), |acc, &e| {
            acc * (Polynomial::one() + Polynomial::monomial(1, e as usize))
        })
    }
}

impl<T: Ring> Add for Polynomial<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Ring> Sub for Polynomial<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Ring> Neg for Polynomial<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<T: Ring> Mul for Polynomial<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

/// Power series known exactly up to and including `t^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> TruncatedSeries<T> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![T::zero(); order + 1] }
    }

    pub fn from_polynomial(p: &Polynomial<T>, order: usize) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(|k| p.coeff(k)).collect() }
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Arithmetic("a truncated series needs at least one coefficient".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn to_polynomial(&self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> TruncatedSeries<U> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Result<U>) -> Result<TruncatedSeries<U>> {
        Ok(TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()? })
    }

    fn check_order(&self, other: usize) -> Result<()> {
        if self.order() != other {
            return Err(Error::Arithmetic(alloc::format!(
                "series orders differ ({} vs {other})",
                self.order()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs.order())?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    /// Product with a polynomial, truncated to the same order.
    pub fn mul_polynomial(&self, p: &Polynomial<T>) -> Self {
        let order = self.order();
        let mut out = vec![T::zero(); order + 1];
        for (j, b) in p.coeffs().iter().enumerate().take(order + 1) {
            if b.is_zero() {
                continue;
            }
            for i in 0..=order - j {
                out[i + j] = out[i + j].clone() + self.coeffs[i].clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Quotient by an integer polynomial with constant term ±1.
    pub fn div_unit_polynomial(&self, denom: &IntPolynomial) -> Result<Self> {
        let d0 = denom.coeff(0);
        match d0 {
            0 => return Err(Error::Arithmetic("denominator has zero constant term".into())),
            1 | -1 => {}
            _ => {
                return Err(Error::Arithmetic(alloc::format!(
                    "denominator constant term {d0} is not a unit"
                )))
            }
        }
        let order = self.order();
        let mut q: Vec<T> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k.min(denom.degree().unwrap_or(0)) {
                let dj = denom.coeff(j);
                if dj != 0 {
                    acc = acc - q[k - j].clone() * T::from_i64(dj);
                }
            }
            q.push(if d0 == 1 { acc } else { -acc });
        }
        Ok(TruncatedSeries { coeffs: q })
    }
}

/// Power-series quotient `numer / denom` to the given order.
pub fn series_div_truncate(
    numer: &IntPolynomial,
    denom: &IntPolynomial,
    order: usize,
) -> Result<TruncatedSeries<i64>> {
    TruncatedSeries::from_polynomial(numer, order).div_unit_polynomial(denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn geometric_series() {
        let s = series_div_truncate(&p(&[1]), &p(&[1, -1]), 3).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 1, 1]);
    }

    #[test]
    fn zero_numerator_gives_zero_series() {
        let s = series_div_truncate(&IntPolynomial::zero(), &p(&[1, 3, 1]), 5).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.order(), 5);
    }

    #[test]
    fn non_unit_constant_rejected() {
        assert!(series_div_truncate(&p(&[1]), &p(&[0, 1]), 3).is_err());
        assert!(series_div_truncate(&p(&[1]), &p(&[2, 1]), 3).is_err());
        // −1 constant term is a unit.
        let s = series_div_truncate(&p(&[1]), &p(&[-1, 1]), 2).unwrap();
        assert_eq!(s.coeffs(), &[-1, -1, -1]);
    }

    #[test]
    fn degree_sentinel_and_trimming() {
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[1, 2, 0]).coeffs(), &[1, 2]);
    }

    #[test]
    fn palindromes() {
        assert!(p(&[1, 1, 0, 0, 0, 1, 1]).is_palindromic(6));
        assert!(!p(&[1, 1]).is_palindromic(2));
        assert!(IntPolynomial::zero().is_palindromic(7));
        assert!(!p(&[1, 0, 0, 1]).is_palindromic(2));
    }

    proptest! {
        #[test]
        fn division_undoes_multiplication(
            num in proptest::collection::vec(-5i64..=5, 0..6),
            tail in proptest::collection::vec(-3i64..=3, 0..5),
            unit in prop_oneof![Just(1i64), Just(-1i64)],
            order in 0usize..10,
        ) {
            let numer = p(&num);
            let mut d = vec![unit];
            d.extend(tail);
            let denom = p(&d);
            let q = series_div_truncate(&(numer.clone() * denom.clone()), &denom, order).unwrap();
            prop_assert_eq!(q, TruncatedSeries::from_polynomial(&numer, order));
        }
    }
}
