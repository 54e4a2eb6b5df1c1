//! Character tables of the double cover and the graded spin character table.

mod dixon;
mod modular;
mod table;

pub use dixon::{character_table, CharacterTable, CoverClassData};
pub use table::{
    classify_and_pair, extract_spin, identify_basic_spin, CharKind, GradedRows, SplitClass, SpinCharacter,
    SpinCharacterTable,
};

use alloc::format;
use alloc::vec::Vec;

use crate::cover::{CoverClasses, CoverGroup, CoverElt};
use crate::exact::{QuadComplex, Ring};
use crate::rootsystem::RootSystem;
use crate::weyl::{Parity, WeylGroup};
use crate::Result;

/// Everything computed from scratch for an enumerable type: the cover, its
/// full character table and the graded spin table derived from it.
#[derive(Clone, Debug)]
pub struct SpinComputation {
    pub cover: CoverGroup,
    pub classes: CoverClasses,
    pub class_data: CoverClassData,
    pub ordinary: CharacterTable,
    pub spin: SpinCharacterTable,
    /// Rows of `ordinary` making up each graded character of `spin`.
    pub graded_rows: Vec<GradedRows>,
}

impl SpinComputation {
    pub fn new(rs: &RootSystem, budget: u64) -> Result<Self> {
        let weyl = WeylGroup::enumerate(rs, budget)?;
        let cover = CoverGroup::new(weyl)?;
        let classes = CoverClasses::new(&cover);
        let class_data = CoverClassData::new(&cover, &classes);
        let ordinary = character_table(&cover, &classes, &class_data)?;
        let spin_rows = extract_spin(&ordinary, &class_data);

        let g = cover.weyl();
        let mut split_classes = Vec::new();
        let mut columns = Vec::new();
        for (c, cls) in classes.weyl.classes.iter().enumerate() {
            if !classes.is_split(c) {
                continue;
            }
            let x = CoverElt { w: cls.rep_index as u32, sign: 1 };
            split_classes.push(SplitClass {
                name: format!("C{}", c + 1),
                parity: cls.parity,
                size: cls.size as u64,
                word: g.element(cls.rep_index).word().to_vec(),
                charpoly: cls.charpoly.clone(),
                trace: cover.basic_spin_trace(x).clone(),
                carter: cls.carter_label.clone(),
            });
            columns.push(classes.lifted_class(c));
        }
        let values: Vec<Vec<QuadComplex>> =
            spin_rows.iter().map(|&r| columns.iter().map(|&k| ordinary.values[r][k].clone()).collect()).collect();
        let parities: Vec<Parity> = split_classes.iter().map(|c| c.parity).collect();
        let pairing = classify_and_pair(&values, &parities)?;
        let characters = pairing
            .iter()
            .enumerate()
            .map(|(i, p)| SpinCharacter { label: format!("chi{}", i + 1), kind: p.kind, values: values[p.rows[0]].clone() })
            .collect();
        let graded_rows =
            pairing.into_iter().map(|p| GradedRows { kind: p.kind, rows: p.rows.iter().map(|&i| spin_rows[i]).collect() }).collect();
        let spin = SpinCharacterTable { cartan: rs.cartan(), weyl_order: g.order() as u64, classes: split_classes, characters };
        Ok(SpinComputation { cover, classes, class_data, ordinary, spin, graded_rows })
    }

    /// The graded character of row `row` on every cover class, summing the
    /// ungraded constituents directly.
    pub fn graded_cover_values(&self, row: usize) -> Vec<QuadComplex> {
        (0..self.ordinary.values[0].len())
            .map(|k| self.graded_rows[row].rows.iter().fold(QuadComplex::zero(), |acc, &r| acc + self.ordinary.values[r][k].clone()))
            .collect()
    }

    /// Reorders the graded characters as `order` (old row indices) dictates.
    pub fn reorder(&mut self, order: &[usize]) {
        self.graded_rows = order.iter().map(|&i| self.graded_rows[i].clone()).collect();
    }
}

#[cfg(test)]
mod tests;
