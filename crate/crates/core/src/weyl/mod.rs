//! Weyl group elements, enumeration, group order and conjugacy classes.

mod classes;
mod schreier_sims;

pub use classes::{conjugacy_classes, ClassPartition, ConjugacyClass, Parity};
pub use schreier_sims::permutation_group_order;

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::exact::{charpoly_reciprocal_int, IntPolynomial};
use crate::rootsystem::RootSystem;
use crate::{Error, Result};

/// Default enumeration budget (number of group elements).
pub const DEFAULT_BUDGET: u64 = 3_000_000;

/// A Weyl group element is determined by the images of the simple roots;
/// unused slots hold `u16::MAX`.
pub type Key = [u16; 8];

/// An element of W: its action on the roots plus a word in the simple
/// generators (1-based indices) witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    key: Key,
    word: Vec<u8>,
}

impl GroupElement {
    pub fn identity(rs: &RootSystem) -> Self {
        let mut key = [u16::MAX; 8];
        for (j, slot) in key.iter_mut().enumerate().take(rs.rank()) {
            *slot = j as u16;
        }
        GroupElement { key, word: Vec::new() }
    }

    /// The element s_{i₁}⋯s_{iₖ} for a 1-based word.
    pub fn from_word(rs: &RootSystem, word: &[u8]) -> Result<Self> {
        let mut key = GroupElement::identity(rs).key;
        for &g in word.iter().rev() {
            if g == 0 || g as usize > rs.rank() {
                return Err(Error::Arithmetic(alloc::format!(
                    "generator {g} out of range 1..={}",
                    rs.rank()
                )));
            }
            key = left_key(rs, g as usize - 1, &key);
        }
        Ok(GroupElement { key, word: word.to_vec() })
    }

    pub fn key(&self) -> &Key {
        &self.key
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// (−1)^{word length}.
    pub fn parity(&self) -> Parity {
        Parity::of_length(self.word.len())
    }

    /// Permutation of the root indices.
    pub fn perm(&self, rs: &RootSystem) -> Vec<u16> {
        let mut perm: Vec<u16> = (0..rs.num_roots() as u16).collect();
        for &g in self.word.iter().rev() {
            for p in perm.iter_mut() {
                *p = rs.reflect_index(g as usize - 1, *p as usize) as u16;
            }
        }
        perm
    }

    /// Matrix on V in the simple-root basis (row-major).
    pub fn matrix(&self, rs: &RootSystem) -> Vec<i64> {
        key_matrix(rs, &self.key)
    }

    /// det(1 − t·w) on V.
    pub fn charpoly(&self, rs: &RootSystem) -> IntPolynomial {
        charpoly_reciprocal_int(&self.matrix(rs), rs.rank())
    }

    pub fn mul(&self, rhs: &GroupElement, rs: &RootSystem) -> GroupElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&rhs.word);
        GroupElement::from_word(rs, &word).expect("words of valid elements are valid")
    }

    pub fn inverse(&self, rs: &RootSystem) -> GroupElement {
        let word: Vec<u8> = self.word.iter().rev().copied().collect();
        GroupElement::from_word(rs, &word).expect("words of valid elements are valid")
    }
}

fn left_key(rs: &RootSystem, i: usize, key: &Key) -> Key {
    let mut out = *key;
    for slot in out.iter_mut().take(rs.rank()) {
        *slot = rs.reflect_index(i, *slot as usize) as u16;
    }
    out
}

fn right_key(rs: &RootSystem, i: usize, key: &Key) -> Key {
    // w·sᵢ = s_{w(αᵢ)}·w
    let mirror = key[i] as usize;
    let mut out = *key;
    for slot in out.iter_mut().take(rs.rank()) {
        *slot = rs.reflect_index(mirror, *slot as usize) as u16;
    }
    out
}

fn key_matrix(rs: &RootSystem, key: &Key) -> Vec<i64> {
    let n = rs.rank();
    let mut m = vec![0i64; n * n];
    for j in 0..n {
        for (row, &c) in rs.simple_coords(key[j] as usize).iter().enumerate() {
            m[row * n + j] = c;
        }
    }
    m
}

/// |W| from a stabilizer chain of the root permutation action.
pub fn group_order(rs: &RootSystem) -> u128 {
    let gens: Vec<Vec<u16>> = (0..rs.rank())
        .map(|i| (0..rs.num_roots()).map(|r| rs.reflect_index(i, r) as u16).collect())
        .collect();
    permutation_group_order(&gens, rs.num_roots())
}

/// Every element of an enumerated Weyl group, in order of (length, word)
/// with lexicographically least reduced words.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    keys: Vec<Key>,
    index: HashMap<Key, u32>,
    /// `w = s_{gen}·parent`; the identity is its own parent.
    parent: Vec<(u32, u8)>,
    lengths: Vec<u8>,
    level_starts: Vec<usize>,
    left: Vec<u32>,
    right: Vec<u32>,
}

impl WeylGroup {
    /// Breadth-first closure over the simple generators, refusing groups
    /// larger than `budget`.
    pub fn enumerate(rs: &RootSystem, budget: u64) -> Result<Self> {
        let order = group_order(rs);
        if order > budget as u128 {
            return Err(Error::BudgetExceeded { order, budget });
        }
        let n = rs.rank();
        let id = GroupElement::identity(rs).key;
        let mut keys = vec![id];
        let mut index: HashMap<Key, u32> = HashMap::with_capacity(order as usize);
        index.insert(id, 0);
        let mut parent = vec![(0u32, 0u8)];
        let mut lengths = vec![0u8];
        let mut level_starts = vec![0usize];
        let mut level = 0..1usize;
        while !level.is_empty() {
            let start = keys.len();
            // Generators in the outer loop keep each level sorted by word.
            for i in 0..n {
                for p in level.clone() {
                    let k = left_key(rs, i, &keys[p]);
                    if let hashbrown::hash_map::Entry::Vacant(e) = index.entry(k) {
                        e.insert(keys.len() as u32);
                        keys.push(k);
                        parent.push((p as u32, i as u8));
                        lengths.push(lengths[p] + 1);
                    }
                }
            }
            level = start..keys.len();
            if !level.is_empty() {
                level_starts.push(start);
            }
        }
        level_starts.push(keys.len());
        if keys.len() as u128 != order {
            return Err(Error::Verification(alloc::format!(
                "enumerated {} elements but the stabilizer chain gives {order}",
                keys.len()
            )));
        }
        let mut left = vec![0u32; keys.len() * n];
        let mut right = vec![0u32; keys.len() * n];
        for (w, key) in keys.iter().enumerate() {
            for i in 0..n {
                left[w * n + i] = index[&left_key(rs, i, key)];
                right[w * n + i] = index[&right_key(rs, i, key)];
            }
        }
        Ok(WeylGroup { rs: rs.clone(), keys, index, parent, lengths, level_starts, left, right })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.keys.len()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn key(&self, w: usize) -> &Key {
        &self.keys[w]
    }

    pub fn index_of(&self, key: &Key) -> Option<usize> {
        self.index.get(key).map(|&i| i as usize)
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w] as usize
    }

    pub fn parity(&self, w: usize) -> Parity {
        Parity::of_length(self.length(w))
    }

    /// `(parent, generator)` with `w = s_generator · parent` (generator 0-based).
    pub fn parent(&self, w: usize) -> (usize, usize) {
        let (p, g) = self.parent[w];
        (p as usize, g as usize)
    }

    /// Elements of length `l` occupy `level(l)` in storage order.
    pub fn level(&self, l: usize) -> core::ops::Range<usize> {
        self.level_starts[l]..self.level_starts[l + 1]
    }

    pub fn max_length(&self) -> usize {
        self.level_starts.len() - 2
    }

    /// Index of sᵢ·w (0-based generator).
    #[inline]
    pub fn left_mul(&self, i: usize, w: usize) -> usize {
        self.left[w * self.rank() + i] as usize
    }

    /// Index of w·sᵢ.
    #[inline]
    pub fn right_mul(&self, w: usize, i: usize) -> usize {
        self.right[w * self.rank() + i] as usize
    }

    /// Lexicographically least reduced word (0-based generators).
    pub fn word0(&self, mut w: usize) -> Vec<u8> {
        let mut word = Vec::with_capacity(self.length(w));
        while w != 0 {
            let (p, g) = self.parent(w);
            word.push(g as u8);
            w = p;
        }
        word
    }

    pub fn element(&self, w: usize) -> GroupElement {
        GroupElement { key: self.keys[w], word: self.word0(w).iter().map(|g| g + 1).collect() }
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.word0(a).iter().rev().fold(b, |acc, &g| self.left_mul(g as usize, acc))
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.word0(a).iter().fold(0, |acc, &g| self.left_mul(g as usize, acc))
    }

    pub fn matrix(&self, w: usize) -> Vec<i64> {
        key_matrix(&self.rs, &self.keys[w])
    }

    pub fn charpoly(&self, w: usize) -> IntPolynomial {
        charpoly_reciprocal_int(&self.matrix(w), self.rank())
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains_key(g.key())
    }

    pub fn iter(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|w| self.element(w))
    }
}
