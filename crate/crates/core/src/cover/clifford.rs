use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg};

use crate::exact::{QuadField, Ring};

/// Sign of e_A·e_B = ±e_{A△B} for an orthonormal basis with eᵢ² = 1.
#[inline]
pub(crate) fn blade_sign(a: u32, b: u32) -> i64 {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        swaps += (a >> (bit + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Element of the Clifford algebra of the ambient Euclidean space with
/// coefficients in Q(√2,√3,√5). Basis blades e_S are indexed by bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordElement {
    dim: usize,
    coeffs: BTreeMap<u32, QuadField>,
}

impl CliffordElement {
    pub fn scalar(dim: usize, c: QuadField) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        CliffordElement { dim, coeffs }
    }

    pub fn one(dim: usize) -> Self {
        CliffordElement::scalar(dim, QuadField::one())
    }

    pub fn vector(coords: &[QuadField]) -> Self {
        let coeffs = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (1u32 << i, c.clone()))
            .collect();
        CliffordElement { dim: coords.len(), coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, blade: u32) -> QuadField {
        self.coeffs.get(&blade).cloned().unwrap_or_else(QuadField::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &QuadField)> {
        self.coeffs.iter().map(|(&b, c)| (b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scalar_part(&self) -> QuadField {
        self.coeff(0)
    }

    /// `Some(0)` / `Some(1)` for homogeneous even / odd elements.
    pub fn parity(&self) -> Option<u32> {
        let mut grades = self.coeffs.keys().map(|b| b.count_ones() % 2);
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    /// The reversal anti-automorphism (e_{i₁}⋯e_{iₖ} ↦ e_{iₖ}⋯e_{i₁}).
    pub fn reverse(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&b, c)| {
                let k = b.count_ones();
                let c = if (k * (k.saturating_sub(1)) / 2) % 2 == 0 { c.clone() } else { -c.clone() };
                (b, c)
            })
            .collect();
        CliffordElement { dim: self.dim, coeffs }
    }

    pub fn scale(&self, c: &QuadField) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&b, x)| (b, x * c))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        CliffordElement { dim: self.dim, coeffs }
    }

    /// Σ c_S², which is 1 for a product of unit vectors.
    pub fn norm_squared(&self) -> QuadField {
        self.coeffs.values().fold(QuadField::zero(), |acc, c| acc + c * c)
    }

    /// If `self = s·other` with s = ±1, returns s.
    pub fn sign_relative_to(&self, other: &CliffordElement) -> Option<i8> {
        if *self == *other {
            Some(1)
        } else if *self == -other.clone() {
            Some(-1)
        } else {
            None
        }
    }

    /// Twisted adjoint action on a vector: v ↦ (−1)^{parity} x v x⁻¹, with
    /// x⁻¹ = reverse(x) for a product of unit vectors.
    pub fn act_on_vector(&self, v: &[QuadField]) -> Option<Vec<QuadField>> {
        let parity = self.parity()?;
        let image = self.clone() * CliffordElement::vector(v) * self.reverse();
        let image = if parity == 1 { -image } else { image };
        (0..self.dim).map(|i| Some(image.coeff(1 << i))).collect::<Option<Vec<_>>>().filter(|_| {
            image.coeffs.keys().all(|b| b.count_ones() == 1)
        })
    }
}

impl Add for CliffordElement {
    type Output = CliffordElement;
    fn add(mut self, rhs: CliffordElement) -> CliffordElement {
        for (b, c) in rhs.coeffs {
            let sum = self.coeff(b) + c;
            if sum.is_zero() {
                self.coeffs.remove(&b);
            } else {
                self.coeffs.insert(b, sum);
            }
        }
        self
    }
}

impl Neg for CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        CliffordElement { dim: self.dim, coeffs: self.coeffs.into_iter().map(|(b, c)| (b, -c)).collect() }
    }
}

impl Mul for CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: CliffordElement) -> CliffordElement {
        let mut out: BTreeMap<u32, QuadField> = BTreeMap::new();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                let term = x * y;
                let term = if blade_sign(a, b) < 0 { -term } else { term };
                let slot = out.entry(a ^ b).or_insert_with(QuadField::zero);
                *slot = &*slot + &term;
            }
        }
        out.retain(|_, c| !c.is_zero());
        CliffordElement { dim: self.dim.max(rhs.dim), coeffs: out }
    }
}
