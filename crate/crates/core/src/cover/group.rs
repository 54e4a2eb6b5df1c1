//! The double cover W̃ as signed elements ±L(w), where L(w) is the Clifford
//! lift of the stored reduced word of w.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use super::clifford::blade_sign;
use super::trace_factor;
use crate::exact::{QuadField, Rational};
use crate::weyl::WeylGroup;
use crate::{Error, Result};

/// `sign·L(w)` for the element with storage index `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverElt {
    pub w: u32,
    pub sign: i8,
}

impl CoverElt {
    pub const IDENTITY: CoverElt = CoverElt { w: 0, sign: 1 };
    /// The nontrivial central element z.
    pub const Z: CoverElt = CoverElt { w: 0, sign: -1 };

    pub fn negate(self) -> Self {
        CoverElt { w: self.w, sign: -self.sign }
    }
}

/// Integer multivector proportional (by a positive factor) to a Clifford lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntLift(Vec<i64>);

impl IntLift {
    pub(crate) fn one(dim: usize) -> Self {
        let mut v = vec![0; 1 << dim];
        v[0] = 1;
        IntLift(v)
    }

    pub(crate) fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// Primitive part of v·self.
    pub(crate) fn left_vector(&self, v: &[i64]) -> Result<IntLift> {
        let mut out = vec![0i128; self.0.len()];
        for (t, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (k, &x) in v.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let bit = 1u32 << k;
                let s = blade_sign(bit, t as u32);
                out[t ^ bit as usize] += (s * x) as i128 * c as i128;
            }
        }
        let g = out.iter().fold(0i128, |g, &x| g.gcd(&x));
        if g == 0 {
            return Err(Error::Verification("Clifford product vanished".into()));
        }
        out.into_iter()
            .map(|x| i64::try_from(x / g).map_err(|_| Error::Arithmetic("Clifford lift coefficient overflow".into())))
            .collect::<Result<Vec<_>>>()
            .map(IntLift)
    }

    fn first_nonzero(&self) -> usize {
        self.0.iter().position(|&c| c != 0).expect("lifts are nonzero")
    }

    /// One coefficient of v·self (or self·v).
    fn coefficient_with_vector(&self, v: &[i64], blade: usize, vector_on_left: bool) -> i128 {
        let mut acc = 0i128;
        for (k, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let bit = 1usize << k;
            let t = blade ^ bit;
            let c = self.0[t];
            if c == 0 {
                continue;
            }
            let s = if vector_on_left { blade_sign(bit as u32, t as u32) } else { blade_sign(t as u32, bit as u32) };
            acc += (s * x) as i128 * c as i128;
        }
        acc
    }

    pub(crate) fn norm2(&self) -> Result<i64> {
        let n: i128 = self.0.iter().map(|&c| c as i128 * c as i128).sum();
        i64::try_from(n).map_err(|_| Error::Arithmetic("lift norm overflow".into()))
    }
}

/// The sign s with v·a = s·λ·b (λ > 0), given that the two are proportional.
fn relative_sign(a: &IntLift, v: &[i64], b: &IntLift, vector_on_left: bool) -> Result<i8> {
    let blade = b.first_nonzero();
    let c = a.coefficient_with_vector(v, blade, vector_on_left);
    if c == 0 {
        return Err(Error::Verification("lifts of adjacent elements are not proportional".into()));
    }
    Ok(if (c > 0) == (b.0[blade] > 0) { 1 } else { -1 })
}

/// Multiplication data for W̃ on top of an enumerated Weyl group.
#[derive(Clone, Debug)]
pub struct CoverGroup {
    weyl: WeylGroup,
    /// tᵢ·L(w) = left_sign·L(sᵢw)
    left_sign: Vec<i8>,
    /// L(w)·tᵢ = right_sign·L(wsᵢ)
    right_sign: Vec<i8>,
    /// Scalar coefficient of the primitive integer lift.
    scalar: Vec<i64>,
    /// 1/√norm2 for each distinct norm, with the per-element index into it.
    inv_norms: Vec<QuadField>,
    norm_index: Vec<u16>,
}

impl CoverGroup {
    pub fn new(weyl: WeylGroup) -> Result<Self> {
        let rs = weyl.root_system();
        let n = rs.rank();
        let dim = rs.ambient_dim();
        let simple: Vec<Vec<i64>> = (0..n).map(|i| rs.scaled_root(i).to_vec()).collect();
        let order = weyl.order();
        let mut left_sign = vec![0i8; order * n];
        let mut right_sign = vec![0i8; order * n];
        let mut scalar = vec![0i64; order];
        let mut norm2 = vec![0i64; order];
        scalar[0] = 1;
        norm2[0] = 1;

        let mut prev: Vec<IntLift> = vec![IntLift::one(dim)];
        let mut prev_range = weyl.level(0);
        for l in 1..=weyl.max_length() {
            let range = weyl.level(l);
            let mut cur = Vec::with_capacity(range.len());
            for w in range.clone() {
                let (p, g) = weyl.parent(w);
                let lift = prev[p - prev_range.start].left_vector(&simple[g])?;
                scalar[w] = lift.coeffs()[0];
                norm2[w] = lift.norm2()?;
                cur.push(lift);
            }
            for w in range.clone() {
                let lw = &cur[w - range.start];
                for i in 0..n {
                    let u = weyl.left_mul(i, w);
                    if weyl.length(u) + 1 == l {
                        let s = relative_sign(&prev[u - prev_range.start], &simple[i], lw, true)?;
                        left_sign[u * n + i] = s;
                        left_sign[w * n + i] = s;
                    }
                    let u = weyl.right_mul(w, i);
                    if weyl.length(u) + 1 == l {
                        let s = relative_sign(&prev[u - prev_range.start], &simple[i], lw, false)?;
                        right_sign[u * n + i] = s;
                        right_sign[w * n + i] = s;
                    }
                }
            }
            prev = cur;
            prev_range = range;
        }
        if left_sign.iter().chain(&right_sign).any(|&s| s == 0) {
            return Err(Error::Verification("cover sign table incomplete".into()));
        }
        let mut distinct: Vec<i64> = norm2.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let inv_norms = distinct
            .iter()
            .map(|&n| {
                QuadField::sqrt_of(n as u64)
                    .and_then(|r| r.inverse().ok())
                    .ok_or_else(|| Error::Verification(alloc::format!("lift norm {n} has no square root in the field")))
            })
            .collect::<Result<Vec<_>>>()?;
        let norm_index = norm2.iter().map(|n| distinct.binary_search(n).unwrap() as u16).collect();
        Ok(CoverGroup { weyl, left_sign, right_sign, scalar, inv_norms, norm_index })
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn order(&self) -> usize {
        2 * self.weyl.order()
    }

    #[inline]
    pub fn left_gen(&self, i: usize, x: CoverElt) -> CoverElt {
        let n = self.weyl.rank();
        let w = x.w as usize;
        CoverElt { w: self.weyl.left_mul(i, w) as u32, sign: x.sign * self.left_sign[w * n + i] }
    }

    #[inline]
    pub fn right_gen(&self, x: CoverElt, i: usize) -> CoverElt {
        let n = self.weyl.rank();
        let w = x.w as usize;
        CoverElt { w: self.weyl.right_mul(w, i) as u32, sign: x.sign * self.right_sign[w * n + i] }
    }

    /// tᵢ·x·tᵢ⁻¹ (tᵢ is an involution).
    #[inline]
    pub fn conj_gen(&self, i: usize, x: CoverElt) -> CoverElt {
        self.right_gen(self.left_gen(i, x), i)
    }

    pub fn mul(&self, x: CoverElt, y: CoverElt) -> CoverElt {
        let word = self.weyl.word0(x.w as usize);
        let r = word.iter().rev().fold(y, |acc, &g| self.left_gen(g as usize, acc));
        CoverElt { w: r.w, sign: r.sign * x.sign }
    }

    pub fn inverse(&self, x: CoverElt) -> CoverElt {
        let word = self.weyl.word0(x.w as usize);
        let r = word.iter().fold(CoverElt::IDENTITY, |acc, &g| self.left_gen(g as usize, acc));
        CoverElt { w: r.w, sign: r.sign * x.sign }
    }

    /// x⁻¹·y without materializing x⁻¹.
    pub fn inv_mul(&self, x: CoverElt, y: CoverElt) -> CoverElt {
        let word = self.weyl.word0(x.w as usize);
        let r = word.iter().fold(y, |acc, &g| self.left_gen(g as usize, acc));
        CoverElt { w: r.w, sign: r.sign * x.sign }
    }

    pub fn pow(&self, x: CoverElt, k: usize) -> CoverElt {
        (0..k).fold(CoverElt::IDENTITY, |acc, _| self.mul(x, acc))
    }

    pub fn element_order(&self, x: CoverElt) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != CoverElt::IDENTITY {
            y = self.mul(x, y);
            k += 1;
        }
        k
    }

    /// Scalar part of the normalized lift ±L(w).
    pub fn lift_scalar(&self, x: CoverElt) -> QuadField {
        let w = x.w as usize;
        if self.scalar[w] == 0 {
            return QuadField::default();
        }
        self.inv_norms[self.norm_index[w] as usize].scale(&Rational::from_int(self.scalar[w] * x.sign as i64))
    }

    /// Trace of x on the basic spin module.
    pub fn basic_spin_trace(&self, x: CoverElt) -> QuadField {
        self.lift_scalar(x).scale(&Rational::from_int(trace_factor(self.weyl.rank())))
    }

    /// The sign s with L(w)·x·L(w)⁻¹ = s·x; requires w to centralize x in W.
    pub fn sign_cocycle(&self, w: usize, x: CoverElt) -> Result<i8> {
        let lw = CoverElt { w: w as u32, sign: 1 };
        let y = self.mul(self.mul(lw, x), self.inverse(lw));
        if y.w != x.w {
            return Err(Error::Arithmetic("conjugating element does not centralize x in W".into()));
        }
        Ok(y.sign * x.sign)
    }

    /// Splitness by scanning the centralizer of the class representative.
    pub fn is_split_by_centralizer(&self, rep: usize) -> bool {
        let x = CoverElt { w: rep as u32, sign: 1 };
        (0..self.weyl.order()).all(|w| {
            let wx = self.weyl.multiply(w, rep);
            let xw = self.weyl.multiply(rep, w);
            wx != xw || self.sign_cocycle(w, x) == Ok(1)
        })
    }
}
