use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use super::{QuadField, Rational, Ring, QUAD_RADICANDS};
use crate::{Error, Result};

/// An element of the cyclotomic field Q(ζₙ), written as Σ cₖ ζₙᵏ.
///
/// The coefficient map is always the remainder modulo the n-th cyclotomic
/// polynomial Φₙ, so exponents satisfy k < φ(n) and the representation is
/// canonical for a fixed conductor.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: BTreeMap<u32, Rational>,
}

/// Monic integer coefficients of Φₙ, lowest degree first.
fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n − 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            poly = exact_div(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

impl Cyclotomic {
    /// Builds Σ cₖ ζₙᵏ for arbitrary integer exponents, reducing as needed.
    pub fn from_terms(conductor: u32, terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        assert!(conductor > 0, "conductor must be positive");
        let n = conductor as usize;
        let mut dense = vec![Rational::zero(); n];
        for (k, c) in terms {
            let k = k.rem_euclid(n as i64) as usize;
            dense[k] += &c;
        }
        Cyclotomic::reduce(conductor, dense)
    }

    fn reduce(conductor: u32, mut dense: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let deg = phi.len() - 1;
        for k in (deg..dense.len()).rev() {
            let c = core::mem::take(&mut dense[k]);
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    let v = &c * &Rational::from_int(pj);
                    dense[k - deg + j] -= &v;
                }
            }
        }
        let coeffs = dense
            .into_iter()
            .take(deg)
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c))
            .collect();
        Cyclotomic { conductor, coeffs }
    }

    pub fn zeta(conductor: u32, k: i64) -> Self {
        Cyclotomic::from_terms(conductor, [(k, Rational::one())])
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic::from_terms(1, [(0, r)])
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Nonzero coefficients of the canonical representation.
    pub fn coeffs(&self) -> &BTreeMap<u32, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The same number viewed in Q(ζ_m); `m` must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> Result<Self> {
        if m % self.conductor != 0 {
            return Err(Error::Arithmetic(alloc::format!(
                "cannot embed Q(ζ{}) into Q(ζ{m})",
                self.conductor
            )));
        }
        let step = (m / self.conductor) as i64;
        Ok(Cyclotomic::from_terms(m, self.coeffs.iter().map(|(&k, c)| (k as i64 * step, c.clone()))))
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.conductor.lcm(&other.conductor);
        (self.embed(m).unwrap(), other.embed(m).unwrap())
    }

    /// Complex conjugate, ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        Cyclotomic::from_terms(
            self.conductor,
            self.coeffs.iter().map(|(&k, c)| (-(k as i64), c.clone())),
        )
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    fn dense(&self) -> Vec<Rational> {
        let phi = euler_phi(self.conductor) as usize;
        let mut v = vec![Rational::zero(); phi];
        for (&k, c) in &self.coeffs {
            v[k as usize] = c.clone();
        }
        v
    }

    /// Images of the eight basis elements of Q(√2,√3,√5) in Q(ζ₁₂₀).
    fn quad_basis() -> [Cyclotomic; 8] {
        let one = Rational::one;
        let two = || Rational::from_int(2);
        let r2 = Cyclotomic::from_terms(8, [(1, one()), (7, one())]);
        let r3 = Cyclotomic::from_terms(12, [(1, one()), (11, one())]);
        let r5 = Cyclotomic::from_terms(5, [(0, one()), (1, two()), (4, two())]);
        let mut basis: [Cyclotomic; 8] = core::array::from_fn(|_| Cyclotomic::from_rational(one()));
        for (idx, b) in basis.iter_mut().enumerate() {
            let mut x = Cyclotomic::from_rational(one());
            if idx & 1 != 0 {
                x = x * r2.clone();
            }
            if idx & 2 != 0 {
                x = x * r3.clone();
            }
            if idx & 4 != 0 {
                x = x * r5.clone();
            }
            *b = x.embed(120).unwrap();
        }
        debug_assert_eq!(QUAD_RADICANDS.len(), basis.len());
        basis
    }

    pub fn from_quad(q: &QuadField) -> Self {
        let mut acc = Cyclotomic::from_rational(Rational::zero()).embed(120).unwrap();
        for (c, b) in q.coeffs().iter().zip(Cyclotomic::quad_basis()) {
            if !c.is_zero() {
                acc = acc + b.scale(c);
            }
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Cyclotomic { conductor: self.conductor, coeffs: BTreeMap::new() };
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c * r)).collect(),
        }
    }

    /// Converts to Q(√2,√3,√5); fails if the number does not lie in that field.
    pub fn to_quad(&self) -> Result<QuadField> {
        let m = self.conductor.lcm(&120);
        let target = self.embed(m)?.dense();
        let columns: Vec<Vec<Rational>> =
            Cyclotomic::quad_basis().iter().map(|b| b.embed(m).unwrap().dense()).collect();
        let rows = target.len();
        // Augmented system [basis | target], reduced to row echelon form.
        let mut a: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> = columns.iter().map(|col| col[r].clone()).collect();
                row.push(target[r].clone());
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..8 {
            let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
            a.swap(rank, p);
            let inv = a[rank][col].recip()?;
            for x in a[rank].iter_mut() {
                *x *= &inv;
            }
            for r in 0..rows {
                if r != rank && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..=8 {
                        let v = &a[rank][j] * &f;
                        a[r][j] -= &v;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        if a[rank..].iter().any(|row| !row[8].is_zero()) {
            return Err(Error::NotRational(alloc::format!(
                "{self:?} does not lie in Q(√2,√3,√5)"
            )));
        }
        let mut coeffs: [Rational; 8] = Default::default();
        for (r, &col) in pivots.iter().enumerate() {
            coeffs[col] = a[r][8].clone();
        }
        Ok(QuadField::from_coeffs(coeffs))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(&rhs);
        let n = a.conductor;
        Cyclotomic::from_terms(
            n,
            a.coeffs.into_iter().chain(b.coeffs).map(|(k, c)| (k as i64, c)),
        )
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(&Rational::from_int(-1))
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self + (-rhs)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(&rhs);
        let n = a.conductor;
        let mut dense = vec![Rational::zero(); n as usize];
        for (&i, x) in &a.coeffs {
            for (&j, y) in &b.coeffs {
                dense[((i + j) % n) as usize] += &(x * y);
            }
        }
        Cyclotomic::reduce(n, dense)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})z{}^{k}", self.conductor)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn canonical_zero() {
        // 1 + ζ₃ + ζ₃² = 0
        let s = Cyclotomic::from_terms(3, (0..3).map(|k| (k, Rational::one())));
        assert!(s.is_zero());
        // ζ₅ summed over all powers is zero, seen through Q(ζ₁₅).
        let s = Cyclotomic::from_terms(15, (0..5).map(|k| (3 * k, Rational::one())));
        assert!(s.is_zero());
    }

    #[test]
    fn real_values_convert() {
        // ζ₈ + ζ₈⁻¹ = √2
        let r2 = Cyclotomic::from_terms(8, [(1, Rational::one()), (-1, Rational::one())]);
        assert!(r2.is_real());
        assert_eq!(r2.to_quad().unwrap(), QuadField::sqrt_of(2).unwrap());
        // ζ₃ + ζ₃⁻¹ = −1
        let m1 = Cyclotomic::from_terms(3, [(1, Rational::one()), (2, Rational::one())]);
        assert_eq!(m1.to_quad().unwrap(), QuadField::from_int(-1));
        // i is not real and not in the field.
        let i = Cyclotomic::zeta(4, 1);
        assert!(!i.is_real());
        assert!(i.to_quad().is_err());
        // 2cos(2π/9) is real but cubic.
        let c9 = Cyclotomic::from_terms(9, [(1, Rational::one()), (-1, Rational::one())]);
        assert!(c9.is_real());
        assert!(c9.to_quad().is_err());
    }

    proptest! {
        #[test]
        fn quad_round_trip(c in proptest::array::uniform8(-6i64..=6)) {
            let q = QuadField::from_coeffs(c.map(Rational::from_int));
            let z = Cyclotomic::from_quad(&q);
            prop_assert!(z.is_real());
            prop_assert_eq!(z.to_quad().unwrap(), q);
        }

        #[test]
        fn multiplication_matches_quad(a in proptest::array::uniform8(-3i64..=3), b in proptest::array::uniform8(-3i64..=3)) {
            let qa = QuadField::from_coeffs(a.map(Rational::from_int));
            let qb = QuadField::from_coeffs(b.map(Rational::from_int));
            let prod = Cyclotomic::from_quad(&qa) * Cyclotomic::from_quad(&qb);
            prop_assert_eq!(prod.to_quad().unwrap(), qa * qb);
        }
    }
}
