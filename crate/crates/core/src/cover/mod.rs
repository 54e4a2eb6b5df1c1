//! The distinguished double cover W̃ inside the Clifford algebra of the
//! ambient space: each simple reflection sᵢ lifts to the unit vector
//! tᵢ = αᵢ/√(αᵢ,αᵢ), so that (tᵢtⱼ)^{mᵢⱼ} = (−1)^{mᵢⱼ+1}.

mod classes;
mod clifford;
mod group;

pub use classes::{CoverClass, CoverClasses};
pub use clifford::CliffordElement;
pub use group::{CoverElt, CoverGroup};

use alloc::vec::Vec;

use crate::exact::{QuadField, Rational};
use crate::rootsystem::RootSystem;
use crate::weyl::GroupElement;
use crate::{Error, Result};

/// dim of the basic spin module: 2^{n/2} for even rank n, and the sum of
/// both spinor modules, 2^{(n+1)/2}, for odd rank.
pub fn trace_factor(rank: usize) -> i64 {
    1 << rank.div_ceil(2)
}

/// The unit vector tᵢ for simple root i (0-based).
pub fn unit_root(rs: &RootSystem, i: usize) -> CliffordElement {
    let inv_len = QuadField::sqrt_of(rs.norm2(i).to_i64().expect("integral norms") as u64)
        .expect("root norms lie in the field")
        .inverse()
        .expect("nonzero");
    let coords: Vec<QuadField> = rs.root(i).into_iter().map(|c| QuadField::from_rational(c) * inv_len.clone()).collect();
    CliffordElement::vector(&coords)
}

/// t_{i₁}⋯t_{iₖ} for a 1-based word; the empty word lifts to 1.
pub fn lift_word(word: &[u8], rs: &RootSystem) -> Result<CliffordElement> {
    word.iter().try_fold(CliffordElement::one(rs.ambient_dim()), |acc, &g| {
        if g == 0 || g as usize > rs.rank() {
            return Err(Error::Arithmetic(alloc::format!("generator {g} out of range")));
        }
        Ok(acc * unit_root(rs, g as usize - 1))
    })
}

/// An element x̃ of W̃ together with its image θ(x̃) in W.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverElement {
    pub base: GroupElement,
    pub lift: CliffordElement,
}

impl CoverElement {
    pub fn from_word(rs: &RootSystem, word: &[u8]) -> Result<Self> {
        Ok(CoverElement { base: GroupElement::from_word(rs, word)?, lift: lift_word(word, rs)? })
    }

    pub fn negate(&self) -> Self {
        CoverElement { base: self.base.clone(), lift: -self.lift.clone() }
    }
}

/// Trace of x̃ on the basic spin module.
pub fn basic_spin_trace(c: &CoverElement, rs: &RootSystem) -> QuadField {
    c.lift.scalar_part().scale(&Rational::from_int(trace_factor(rs.rank())))
}

/// The sign s ∈ {±1} with w̃·x̃·w̃⁻¹ = s·x̃, for w centralizing θ(x̃).
pub fn sign_cocycle(w: &GroupElement, x: &CoverElement, rs: &RootSystem) -> Result<i8> {
    let conj = w.mul(&x.base, rs).mul(&w.inverse(rs), rs);
    if conj.key() != x.base.key() {
        return Err(Error::Arithmetic("w does not centralize x in W".into()));
    }
    let lw = lift_word(w.word(), rs)?;
    let y = lw.clone() * x.lift.clone() * lw.reverse();
    y.sign_relative_to(&x.lift)
        .ok_or_else(|| Error::Verification("conjugate lift is not ±x̃".into()))
}
