use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{GroupElement, WeylGroup};
use crate::exact::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_length(len: usize) -> Self {
        if len % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A conjugacy class of W.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Storage index of the representative (least (length, word) in the class).
    pub rep_index: usize,
    pub rep: GroupElement,
    pub size: usize,
    pub parity: Parity,
    /// det(1 − t·rep) on V.
    pub charpoly: IntPolynomial,
    /// `None` until the cover has been examined.
    pub split: Option<bool>,
    pub carter_label: Option<String>,
}

impl ConjugacyClass {
    /// |C_x| = |W| / |class|.
    pub fn centralizer_order(&self, group_order: usize) -> usize {
        group_order / self.size
    }
}

/// Partition of an enumerated group into conjugacy classes.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    pub classes: Vec<ConjugacyClass>,
    /// Class index of every element.
    pub class_of: Vec<u32>,
    /// Members of each class, in discovery order (representative first).
    pub members: Vec<Vec<u32>>,
}

/// Orbits of the conjugation action of the simple generators.
pub fn conjugacy_classes(g: &WeylGroup) -> ClassPartition {
    const UNSEEN: u32 = u32::MAX;
    let mut class_of = vec![UNSEEN; g.order()];
    let mut classes = Vec::new();
    let mut members = Vec::new();
    for seed in 0..g.order() {
        if class_of[seed] != UNSEEN {
            continue;
        }
        let id = classes.len() as u32;
        class_of[seed] = id;
        let mut orbit = vec![seed as u32];
        let mut head = 0;
        while head < orbit.len() {
            let w = orbit[head] as usize;
            head += 1;
            for i in 0..g.rank() {
                let c = g.right_mul(g.left_mul(i, w), i);
                if class_of[c] == UNSEEN {
                    class_of[c] = id;
                    orbit.push(c as u32);
                }
            }
        }
        classes.push(ConjugacyClass {
            rep_index: seed,
            rep: g.element(seed),
            size: orbit.len(),
            parity: g.parity(seed),
            charpoly: g.charpoly(seed),
            split: None,
            carter_label: None,
        });
        members.push(orbit);
    }
    ClassPartition { classes, class_of, members }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::RootSystem;
    use crate::weyl::DEFAULT_BUDGET;

    fn group(s: &str) -> WeylGroup {
        WeylGroup::enumerate(&RootSystem::new(s.parse().unwrap()).unwrap(), DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn class_counts() {
        for (t, count) in [("G2", 6), ("F4", 25), ("A4", 7), ("B2", 5), ("D4", 13), ("B4", 20)] {
            let g = group(t);
            let p = conjugacy_classes(&g);
            assert_eq!(p.classes.len(), count, "{t}");
            assert_eq!(p.classes.iter().map(|c| c.size).sum::<usize>(), g.order());
        }
    }

    #[test]
    fn identity_class() {
        let g = group("G2");
        let p = conjugacy_classes(&g);
        let id = &p.classes[0];
        assert_eq!(id.size, 1);
        assert_eq!(id.charpoly.coeffs(), &[1, -2, 1]);
        assert_eq!(id.centralizer_order(12), 12);
    }

    #[test]
    fn class_invariants_brute_force() {
        // Classes agree with brute-force conjugation by every element, and
        // parity and charpoly are constant on classes.
        let g = group("B3");
        let p = conjugacy_classes(&g);
        for (c, cls) in p.classes.iter().enumerate() {
            let mut orbit: Vec<usize> = (0..g.order())
                .map(|x| g.multiply(g.multiply(x, cls.rep_index), g.inverse(x)))
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            assert_eq!(orbit.len(), cls.size);
            for &w in &orbit {
                assert_eq!(p.class_of[w] as usize, c);
                assert_eq!(g.parity(w), cls.parity);
                assert_eq!(g.charpoly(w), cls.charpoly);
            }
            assert!(orbit.iter().all(|&w| w >= cls.rep_index));
        }
    }
}
