use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::dixon::{CharacterTable, CoverClassData};
use crate::cover::{lift_word, trace_factor};
use crate::exact::{quad_to_rational, IntPolynomial, QuadComplex, QuadField, Rational, Ring};
use crate::rootsystem::{CartanType, RootSystem};
use crate::weyl::{GroupElement, Parity};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharKind {
    M,
    Q,
}

impl fmt::Display for CharKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharKind::M => "M",
            CharKind::Q => "Q",
        })
    }
}

impl FromStr for CharKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(CharKind::M),
            "Q" => Ok(CharKind::Q),
            _ => Err(Error::Parse(format!("character type `{s}` (expected M or Q)"))),
        }
    }
}

/// A split class of W, carrying the data the Molien formula needs. Values
/// of spin characters refer to the lift of `word`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitClass {
    pub name: String,
    pub parity: Parity,
    pub size: u64,
    /// 1-based generator word of the representative.
    pub word: Vec<u8>,
    /// det(1 − t·x) on V.
    pub charpoly: IntPolynomial,
    /// Basic-spin trace of the lift of `word`.
    pub trace: QuadField,
    pub carter: Option<String>,
}

impl SplitClass {
    pub fn from_word(rs: &RootSystem, name: String, size: u64, word: Vec<u8>) -> Result<Self> {
        let element = GroupElement::from_word(rs, &word)?;
        let lift = lift_word(&word, rs)?;
        let trace = lift.scalar_part().scale(&Rational::from_int(trace_factor(rs.rank())));
        Ok(SplitClass {
            name,
            parity: element.parity(),
            size,
            charpoly: element.charpoly(rs),
            trace,
            word,
            carter: None,
        })
    }
}

/// A graded simple spin character. For type Q, `values` is one ungraded
/// constituent; the graded character is the sum with its partner, which
/// agrees on even classes and changes sign on odd ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinCharacter {
    pub label: String,
    pub kind: CharKind,
    pub values: Vec<QuadComplex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinCharacterTable {
    pub cartan: CartanType,
    pub weyl_order: u64,
    pub classes: Vec<SplitClass>,
    pub characters: Vec<SpinCharacter>,
}

impl SpinCharacterTable {
    pub fn even_classes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.classes.len()).filter(|&k| self.classes[k].parity == Parity::Even)
    }

    pub fn odd_classes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.classes.len()).filter(|&k| self.classes[k].parity == Parity::Odd)
    }

    fn identity_class(&self) -> Result<usize> {
        self.classes
            .iter()
            .position(|c| c.word.is_empty())
            .ok_or_else(|| Error::Verification("identity class missing from split classes".into()))
    }

    /// Degree of the ungraded constituent.
    pub fn degree(&self, row: usize) -> Result<u64> {
        let v = &self.characters[row].values[self.identity_class()?];
        let d = if v.is_real() { quad_to_rational(&v.re).ok().and_then(|r| r.to_i64()) } else { None };
        d.filter(|&d| d > 0).map(|d| d as u64).ok_or_else(|| {
            Error::Verification(format!("character {} has a non-integral degree", self.characters[row].label))
        })
    }

    pub fn graded_degree(&self, row: usize) -> Result<u64> {
        let d = self.degree(row)?;
        Ok(match self.characters[row].kind {
            CharKind::M => d,
            CharKind::Q => 2 * d,
        })
    }

    /// Value of the graded character (sum convention) on split class k.
    pub fn graded_value(&self, row: usize, k: usize) -> QuadComplex {
        let ch = &self.characters[row];
        match (ch.kind, self.classes[k].parity) {
            (CharKind::M, _) => ch.values[k].clone(),
            (CharKind::Q, Parity::Odd) => QuadComplex::zero(),
            (CharKind::Q, Parity::Even) => ch.values[k].scale(&Rational::from_int(2)),
        }
    }

    pub fn type_census(&self) -> (usize, usize) {
        let q = self.characters.iter().filter(|c| c.kind == CharKind::Q).count();
        (self.characters.len() - q, q)
    }

    /// ⟨χ, χ′⟩ over W̃ restricted to split classes: Σ (|C|/|W|) χ(x̃) conj χ′(x̃).
    pub fn inner_product(&self, a: &[QuadComplex], b: &[QuadComplex]) -> Result<QuadComplex> {
        let mut s = QuadComplex::zero();
        for (k, c) in self.classes.iter().enumerate() {
            let w = Rational::new(c.size as i64, self.weyl_order as i64)?;
            s = s + (&a[k] * &b[k].conj()).scale(&w);
        }
        Ok(s)
    }

    /// Every consistency failure, one line each; empty means valid.
    pub fn check(&self) -> Vec<String> {
        let mut report = Vec::new();
        let n = self.characters.len();
        for ch in &self.characters {
            if ch.values.len() != self.classes.len() {
                report.push(format!("character {} has {} values for {} classes", ch.label, ch.values.len(), self.classes.len()));
            }
        }
        if !report.is_empty() {
            return report;
        }
        let size_sum: u64 = self.classes.iter().map(|c| c.size).sum();
        if size_sum > self.weyl_order {
            report.push(format!("split class sizes sum to {size_sum} > |W| = {}", self.weyl_order));
        }
        for a in 0..n {
            for b in a..n {
                let expected = if a == b { QuadComplex::one() } else { QuadComplex::zero() };
                match self.inner_product(&self.characters[a].values, &self.characters[b].values) {
                    Ok(v) if v == expected => {}
                    Ok(v) => report.push(format!(
                        "orthogonality failure: <{}, {}> = {} (expected {})",
                        self.characters[a].label, self.characters[b].label, v, expected
                    )),
                    Err(e) => report.push(format!("orthogonality: {e}")),
                }
            }
        }
        // Column relations over both constituents of every type Q pair:
        // Σ χ(x̃)·conj χ(ỹ) = δ·|W|/|C_x|.
        for x in 0..self.classes.len() {
            for y in x..self.classes.len() {
                let mut s = QuadComplex::zero();
                for ch in &self.characters {
                    let term = &ch.values[x] * &ch.values[y].conj();
                    s = s + match ch.kind {
                        CharKind::M => term,
                        CharKind::Q if self.classes[x].parity == self.classes[y].parity => term.scale(&Rational::from_int(2)),
                        CharKind::Q => QuadComplex::zero(),
                    };
                }
                let expected = if x == y {
                    match Rational::new(self.weyl_order as i64, self.classes[x].size.max(1) as i64) {
                        Ok(r) => QuadComplex::real(QuadField::from_rational(r)),
                        Err(_) => continue,
                    }
                } else {
                    QuadComplex::zero()
                };
                if s != expected {
                    report.push(format!(
                        "column orthogonality failure: <{}, {}> = {} (expected {})",
                        self.classes[x].name, self.classes[y].name, s, expected
                    ));
                }
            }
        }
        for ch in &self.characters {
            if ch.kind == CharKind::M {
                for k in self.odd_classes() {
                    if !ch.values[k].is_zero() {
                        report.push(format!(
                            "type M character {} is nonzero on odd class {}",
                            ch.label, self.classes[k].name
                        ));
                    }
                }
            }
        }
        let even = self.even_classes().count();
        let odd = self.odd_classes().count();
        let (_, q) = self.type_census();
        if n != even {
            report.push(format!("count recipe: {n} characters but {even} even split classes"));
        }
        if q != odd {
            report.push(format!("count recipe: {q} type Q characters but {odd} odd split classes"));
        }
        report
    }

    /// Canonical labels `<graded degree>_s…` (with `^Q` for type Q), after
    /// sorting by graded degree and then by the given fake degrees.
    pub fn assign_canonical_labels(&mut self, fake_degrees: &[IntPolynomial]) -> Result<Vec<usize>> {
        let mut keys = Vec::with_capacity(self.characters.len());
        for (row, p) in fake_degrees.iter().enumerate() {
            keys.push((self.graded_degree(row)?, p.coeffs().to_vec(), row));
        }
        keys.sort();
        let order: Vec<usize> = keys.iter().map(|k| k.2).collect();
        let mut characters = Vec::with_capacity(order.len());
        let mut last_degree = 0;
        let mut repeat = 0;
        for (degree, _, row) in keys {
            repeat = if degree == last_degree { repeat + 1 } else { 1 };
            last_degree = degree;
            let mut ch = self.characters[row].clone();
            ch.label = format!("{degree}_{}", "s".repeat(repeat));
            if ch.kind == CharKind::Q {
                ch.label.push_str("^Q");
            }
            characters.push(ch);
        }
        self.characters = characters;
        Ok(order)
    }
}

/// Rows of the cover table with χ(z) = −χ(1).
pub fn extract_spin(table: &CharacterTable, data: &CoverClassData) -> Vec<usize> {
    let z = data.z_class;
    (0..table.len()).filter(|&r| table.values[r][z] == -table.values[r][0].clone()).collect()
}

/// Pairing result: for each graded simple, its type and ungraded rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRows {
    pub kind: CharKind,
    pub rows: Vec<usize>,
}

/// Type M rows vanish on odd classes; every other row pairs with the unique
/// row agreeing on even and negated on odd classes.
pub fn classify_and_pair(values: &[Vec<QuadComplex>], parities: &[Parity]) -> Result<Vec<GradedRows>> {
    let odd: Vec<usize> = (0..parities.len()).filter(|&k| parities[k] == Parity::Odd).collect();
    let mut used = alloc::vec![false; values.len()];
    let mut out = Vec::new();
    for a in 0..values.len() {
        if used[a] {
            continue;
        }
        used[a] = true;
        if odd.iter().all(|&k| values[a][k].is_zero()) {
            out.push(GradedRows { kind: CharKind::M, rows: alloc::vec![a] });
            continue;
        }
        let twisted: Vec<QuadComplex> = values[a]
            .iter()
            .zip(parities)
            .map(|(v, p)| if *p == Parity::Odd { -v.clone() } else { v.clone() })
            .collect();
        let partners: Vec<usize> = (0..values.len()).filter(|&b| !used[b] && values[b] == twisted).collect();
        match partners.as_slice() {
            [b] => {
                used[*b] = true;
                out.push(GradedRows { kind: CharKind::Q, rows: alloc::vec![a, *b] });
            }
            _ => {
                return Err(Error::Verification(format!(
                    "spin character {a} has {} candidate partners for type Q pairing",
                    partners.len()
                )))
            }
        }
    }
    Ok(out)
}

/// The unique graded character equal to the basic-spin trace on every even
/// split class.
pub fn identify_basic_spin(table: &SpinCharacterTable) -> Result<usize> {
    let even: Vec<usize> = table.even_classes().collect();
    let mut found = Vec::new();
    for row in 0..table.characters.len() {
        let mut matches = true;
        for &k in &even {
            if table.graded_value(row, k) != QuadComplex::real(table.classes[k].trace.clone()) {
                matches = false;
                break;
            }
        }
        if matches {
            found.push(row);
        }
    }
    match found.as_slice() {
        [row] => Ok(*row),
        _ => Err(Error::Verification(format!("{} characters match the basic spin traces", found.len()))),
    }
}
