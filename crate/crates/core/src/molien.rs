//! The spin Molien formula and the spin fake degrees
//! P(χ, t) = H(χ, t)·∏(1 − t^{dᵢ}), with
//! H(χ, t) = Σ over even split classes χ(x̃)·tr_B(x̃) / (|C_x|·det(1 − tx)).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cover::{trace_factor, CoverClasses, CoverElt, CoverGroup};
use crate::exact::{quad_to_rational, IntPolynomial, QuadComplex, Rational, Ring, TruncatedSeries};
use crate::rootsystem::{CartanType, RootSystem};
use crate::spinchar::{CharKind, SpinCharacterTable, SplitClass};
use crate::weyl::{Parity, WeylGroup};
use crate::{Error, Result};

/// How a type Q graded character is formed from its ungraded pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QNormalization {
    /// χ + χ′
    Sum,
    /// (χ + χ′)/2
    Half,
}

impl QNormalization {
    pub fn factor(self) -> Rational {
        match self {
            QNormalization::Sum => Rational::from_int(1),
            QNormalization::Half => Rational::new(1, 2).expect("nonzero"),
        }
    }
}

impl core::fmt::Display for QNormalization {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            QNormalization::Sum => "sum",
            QNormalization::Half => "half",
        })
    }
}

fn inverse_charpoly_series(charpoly: &IntPolynomial, order: usize) -> Result<TruncatedSeries<i64>> {
    TruncatedSeries::from_polynomial(&IntPolynomial::one(), order).div_unit_polynomial(charpoly)
}

/// Σ_k c_k / det(1 − t·x_k) where the scalars are grouped by charpoly.
fn weighted_series(groups: BTreeMap<Vec<i64>, QuadComplex>, order: usize) -> Result<TruncatedSeries<QuadComplex>> {
    let mut acc = TruncatedSeries::<QuadComplex>::zero(order);
    for (charpoly, c) in groups {
        if c.is_zero() {
            continue;
        }
        let s = inverse_charpoly_series(&IntPolynomial::new(charpoly), order)?;
        acc = acc.try_add(&s.map(|&a| c.scale(&Rational::from_int(a))))?;
    }
    Ok(acc)
}

/// Converts each coefficient to a non-negative integer or fails.
fn gate(series: &TruncatedSeries<QuadComplex>, what: &str) -> Result<TruncatedSeries<i64>> {
    series.try_map(|c| {
        if !c.is_real() {
            return Err(Error::NotRational(format!("{what}: non-real coefficient {c}")));
        }
        let r = quad_to_rational(&c.re).map_err(|_| Error::NotRational(format!("{what}: irrational coefficient {c}")))?;
        match r.to_i64() {
            Some(n) if n >= 0 => Ok(n),
            Some(n) => Err(Error::Verification(format!("{what}: negative coefficient {n}"))),
            None => Err(Error::NotRational(format!("{what}: non-integral coefficient {r}"))),
        }
    })
}

/// H(χ, t) to `order`, with `chi[k]` the graded value on split class k
/// (odd classes are ignored).
pub fn spin_molien_h(chi: &[QuadComplex], classes: &[SplitClass], weyl_order: u64, order: usize) -> Result<TruncatedSeries<i64>> {
    if chi.len() != classes.len() {
        return Err(Error::Verification(format!("{} values for {} classes", chi.len(), classes.len())));
    }
    let mut groups: BTreeMap<Vec<i64>, QuadComplex> = BTreeMap::new();
    for (c, v) in classes.iter().zip(chi) {
        if c.parity != Parity::Even || v.is_zero() || c.trace.is_zero() {
            continue;
        }
        // 1/|C_x| = |class|/|W|
        let w = Rational::new(c.size as i64, weyl_order as i64)?;
        let term = (v * &QuadComplex::real(c.trace.clone())).scale(&w);
        let slot = groups.entry(c.charpoly.coeffs().to_vec()).or_default();
        *slot = slot.clone() + term;
    }
    gate(&weighted_series(groups, order)?, "H")
}

/// P(χ, t) = H·∏(1 − t^{dᵢ}); must have degree at most N.
pub fn spin_fake_degree(chi: &[QuadComplex], classes: &[SplitClass], weyl_order: u64, degrees: &[u32]) -> Result<(IntPolynomial, TruncatedSeries<i64>)> {
    let n: usize = degrees.iter().map(|&d| d as usize - 1).sum();
    let h = spin_molien_h(chi, classes, weyl_order, n + 1)?;
    let p = h.mul_polynomial(&IntPolynomial::product_one_minus(degrees));
    if *p.coeff(n + 1) != 0 {
        return Err(Error::Verification(format!("fake degree has a term t^{} beyond N", n + 1)));
    }
    if let Some(c) = p.coeffs().iter().find(|&&c| c < 0) {
        return Err(Error::Verification(format!("fake degree has a negative coefficient {c}")));
    }
    Ok((p.to_polynomial(), h))
}

/// The same series averaged over all 2|W| elements of W̃ directly, with the
/// graded character given on cover classes.
pub fn full_cover_oracle_h(chi: &[QuadComplex], cover: &CoverGroup, classes: &CoverClasses, order: usize) -> Result<TruncatedSeries<i64>> {
    let g = cover.weyl();
    let mut groups: BTreeMap<Vec<i64>, QuadComplex> = BTreeMap::new();
    for w in 0..g.order() {
        let mut sum = QuadComplex::zero();
        for sign in [1i8, -1] {
            let x = CoverElt { w: w as u32, sign };
            let v = &chi[classes.class_of(x)];
            if v.is_zero() {
                continue;
            }
            let tr = cover.basic_spin_trace(x);
            if tr.is_zero() {
                continue;
            }
            sum = sum + v * &QuadComplex::real(tr);
        }
        if sum.is_zero() {
            continue;
        }
        let slot = groups.entry(g.charpoly(w).coeffs().to_vec()).or_default();
        *slot = slot.clone() + sum;
    }
    let scale = Rational::new(1, 2 * g.order() as i64)?;
    let groups = groups.into_iter().map(|(k, v)| (k, v.scale(&scale))).collect();
    gate(&weighted_series(groups, order)?, "oracle H")
}

/// m·∏(1 + t^{dᵢ−1}), m = 1 for even rank and 2 for odd rank.
pub fn basic_spin_closed_form(rank: usize, degrees: &[u32]) -> IntPolynomial {
    let exps: Vec<u32> = degrees.iter().map(|d| d - 1).collect();
    let m = if rank % 2 == 0 { 1 } else { 2 };
    IntPolynomial::product_one_plus(&exps).scale(&m)
}

/// (1/|W|)·Σ_w 1/det(1 − tw) = ∏ 1/(1 − t^{dᵢ}) through `order`.
pub fn poincare_identity_check(g: &WeylGroup, degrees: &[u32], order: usize) -> bool {
    let mut counts: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for w in 0..g.order() {
        *counts.entry(g.charpoly(w).coeffs().to_vec()).or_default() += 1;
    }
    let mut lhs = TruncatedSeries::<i64>::zero(order);
    for (cp, n) in counts {
        let Ok(s) = inverse_charpoly_series(&IntPolynomial::new(cp), order) else { return false };
        let Ok(sum) = lhs.try_add(&s.scale(&n)) else { return false };
        lhs = sum;
    }
    let Ok(rhs) = inverse_charpoly_series(&IntPolynomial::product_one_minus(degrees), order) else { return false };
    lhs == rhs.scale(&(g.order() as i64))
}

/// Coefficient k equals coefficient N − k for all k (and deg P ≤ N).
pub fn palindrome_check(p: &IntPolynomial, n: usize) -> bool {
    p.is_palindromic(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FakeDegreeRow {
    pub label: String,
    pub kind: CharKind,
    pub graded_degree: u64,
    pub p: IntPolynomial,
    pub h: TruncatedSeries<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FakeDegreeTable {
    pub cartan: CartanType,
    /// Number of reflections.
    pub n: usize,
    pub normalization: QNormalization,
    pub rows: Vec<FakeDegreeRow>,
}

impl FakeDegreeTable {
    /// Runs the Molien formula on every character and checks palindromicity.
    pub fn compute(table: &SpinCharacterTable, degrees: &[u32], normalization: QNormalization) -> Result<Self> {
        let n: usize = degrees.iter().map(|&d| d as usize - 1).sum();
        let mut rows = Vec::with_capacity(table.characters.len());
        for (row, ch) in table.characters.iter().enumerate() {
            let chi = graded_values(table, row, normalization);
            let (p, h) = spin_fake_degree(&chi, &table.classes, table.weyl_order, degrees)
                .map_err(|e| Error::Verification(format!("{}: {e}", ch.label)))?;
            if !palindrome_check(&p, n) {
                return Err(Error::Verification(format!("{}: fake degree is not palindromic", ch.label)));
            }
            rows.push(FakeDegreeRow { label: ch.label.clone(), kind: ch.kind, graded_degree: table.graded_degree(row)?, p, h });
        }
        Ok(FakeDegreeTable { cartan: table.cartan, n, normalization, rows })
    }

    /// Σ deg(χ)·P_χ(1)/dim End(χ), with dim End = 2 for type Q under the
    /// sum convention.
    pub fn mass(&self) -> Rational {
        let mut total = Rational::from_int(0);
        for r in &self.rows {
            let m = Rational::from_int(r.graded_degree as i64 * r.p.eval(&1));
            total += &match (r.kind, self.normalization) {
                (CharKind::Q, QNormalization::Sum) => m * Rational::new(1, 2).expect("nonzero"),
                _ => m,
            };
        }
        total
    }

    /// Coefficient k of every column.
    pub fn row_at(&self, k: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r.p.coeff(k)).collect()
    }
}

/// Graded values on all split classes under the given normalization.
pub fn graded_values(table: &SpinCharacterTable, row: usize, normalization: QNormalization) -> Vec<QuadComplex> {
    let factor = match table.characters[row].kind {
        CharKind::M => Rational::from_int(1),
        CharKind::Q => normalization.factor(),
    };
    (0..table.classes.len()).map(|k| table.graded_value(row, k).scale(&factor)).collect()
}

/// dim(B_W)·|W|, the right side of the mass identity.
pub fn mass_target(rs: &RootSystem, weyl_order: u64) -> i64 {
    trace_factor(rs.rank()) * weyl_order as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Polynomial;
    use crate::spinchar::{identify_basic_spin, SpinComputation};
    use crate::weyl::DEFAULT_BUDGET;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(name.parse::<CartanType>().unwrap()).unwrap()
    }

    #[test]
    fn closed_forms() {
        let g2 = rs("G2");
        assert_eq!(basic_spin_closed_form(2, g2.degrees()).coeffs(), &[1, 1, 0, 0, 0, 1, 1]);
        let e7 = rs("E7");
        let p = basic_spin_closed_form(7, e7.degrees());
        assert_eq!(p.coeff(0), 2);
        assert_eq!(p.coeff(12), 4);
        let e8 = rs("E8");
        let p = basic_spin_closed_form(8, e8.degrees());
        assert_eq!((p.coeff(18), p.coeff(19)), (2, 2));
    }

    #[test]
    fn palindromes() {
        assert!(palindrome_check(&Polynomial::new(alloc::vec![1, 1, 0, 0, 0, 1, 1]), 6));
        assert!(!palindrome_check(&Polynomial::new(alloc::vec![1, 1]), 2));
        assert!(palindrome_check(&IntPolynomial::zero(), 5));
    }

    #[test]
    fn poincare() {
        let g = WeylGroup::enumerate(&rs("G2"), DEFAULT_BUDGET).unwrap();
        assert!(poincare_identity_check(&g, &[2, 6], 12));
        assert!(!poincare_identity_check(&g, &[2, 5], 12));
        let g = WeylGroup::enumerate(&rs("F4"), DEFAULT_BUDGET).unwrap();
        assert!(poincare_identity_check(&g, &[2, 6, 8, 12], 24));
    }

    #[test]
    fn g2_fake_degrees_and_oracle() {
        let r = rs("G2");
        let s = SpinComputation::new(&r, DEFAULT_BUDGET).unwrap();
        let table = FakeDegreeTable::compute(&s.spin, r.degrees(), QNormalization::Sum).unwrap();
        let basic = identify_basic_spin(&s.spin).unwrap();
        assert_eq!(table.rows[basic].p, basic_spin_closed_form(2, r.degrees()));
        assert_eq!(table.mass(), Rational::from_int(mass_target(&r, 12)));
        for row in 0..table.rows.len() {
            let oracle = full_cover_oracle_h(&s.graded_cover_values(row), &s.cover, &s.classes, 7).unwrap();
            assert_eq!(oracle, table.rows[row].h);
        }
        let zero = alloc::vec![QuadComplex::zero(); s.classes.len()];
        assert!(full_cover_oracle_h(&zero, &s.cover, &s.classes, 7).unwrap().is_zero());
    }

    #[test]
    fn g2_h_series_matches_rational_function() {
        // (1+t)(1+t⁵)/((1−t²)(1−t⁶))
        let r = rs("G2");
        let s = SpinComputation::new(&r, DEFAULT_BUDGET).unwrap();
        let basic = identify_basic_spin(&s.spin).unwrap();
        let chi = graded_values(&s.spin, basic, QNormalization::Sum);
        let h = spin_molien_h(&chi, &s.spin.classes, 12, 7).unwrap();
        let expected = crate::exact::series_div_truncate(
            &basic_spin_closed_form(2, &[2, 6]),
            &IntPolynomial::product_one_minus(&[2, 6]),
            7,
        )
        .unwrap();
        assert_eq!(h, expected);
        assert_eq!(*h.coeff(0), 1);
    }
}
