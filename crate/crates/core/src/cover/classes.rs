use alloc::vec;
use alloc::vec::Vec;

use super::group::{CoverElt, CoverGroup};
use crate::weyl::{conjugacy_classes, ClassPartition};

/// A conjugacy class of W̃.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverClass {
    pub weyl_class: usize,
    /// +1: the class of x̃ = L(rep); −1: the class of z·x̃; 0: non-split (both).
    pub lift_sign: i8,
    pub size: usize,
    pub rep: CoverElt,
}

/// Classes of W̃ over the classes of W, with split status determined.
#[derive(Clone, Debug)]
pub struct CoverClasses {
    pub weyl: ClassPartition,
    /// For split classes, `sigma[w]·L(w)` is conjugate to L(rep); 0 otherwise.
    pub sigma: Vec<i8>,
    pub classes: Vec<CoverClass>,
    first_cover_class: Vec<usize>,
}

impl CoverClasses {
    /// Conjugation orbits of the generators tᵢ, tracking lift signs: a class
    /// splits iff no orbit path returns to an element with the opposite sign.
    pub fn new(cover: &CoverGroup) -> Self {
        let g = cover.weyl();
        let mut weyl = conjugacy_classes(g);
        let mut sigma = vec![0i8; g.order()];
        let mut classes = Vec::new();
        let mut first_cover_class = Vec::new();
        for (c, members) in weyl.members.iter().enumerate() {
            let rep = weyl.classes[c].rep_index;
            sigma[rep] = 1;
            let mut queue = vec![CoverElt { w: rep as u32, sign: 1 }];
            let mut head = 0;
            let mut split = true;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for i in 0..g.rank() {
                    let y = cover.conj_gen(i, x);
                    let seen = sigma[y.w as usize];
                    if seen == 0 {
                        sigma[y.w as usize] = y.sign;
                        queue.push(y);
                    } else if seen != y.sign {
                        split = false;
                    }
                }
            }
            debug_assert_eq!(queue.len(), members.len());
            if !split {
                for &w in members {
                    sigma[w as usize] = 0;
                }
            }
            weyl.classes[c].split = Some(split);
            first_cover_class.push(classes.len());
            let size = members.len();
            let x = CoverElt { w: rep as u32, sign: 1 };
            if split {
                classes.push(CoverClass { weyl_class: c, lift_sign: 1, size, rep: x });
                classes.push(CoverClass { weyl_class: c, lift_sign: -1, size, rep: x.negate() });
            } else {
                classes.push(CoverClass { weyl_class: c, lift_sign: 0, size: 2 * size, rep: x });
            }
        }
        CoverClasses { weyl, sigma, classes, first_cover_class }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Cover class containing x.
    #[inline]
    pub fn class_of(&self, x: CoverElt) -> usize {
        let c = self.weyl.class_of[x.w as usize] as usize;
        let base = self.first_cover_class[c];
        match self.sigma[x.w as usize] * x.sign {
            0 | 1 => base,
            _ => base + 1,
        }
    }

    /// Cover class of L(rep) for W-class `c`.
    pub fn lifted_class(&self, c: usize) -> usize {
        self.first_cover_class[c]
    }

    pub fn is_split(&self, c: usize) -> bool {
        self.weyl.classes[c].split == Some(true)
    }

    /// Elements of cover class `k`.
    pub fn elements(&self, k: usize) -> impl Iterator<Item = CoverElt> + '_ {
        let cls = &self.classes[k];
        let lift_sign = cls.lift_sign;
        self.weyl.members[cls.weyl_class].iter().flat_map(move |&w| {
            let s = self.sigma[w as usize];
            let signs: &'static [i8] = match (lift_sign, s) {
                (0, _) => &[1, -1],
                (1, 1) | (-1, -1) => &[1],
                _ => &[-1],
            };
            signs.iter().map(move |&sign| CoverElt { w, sign })
        })
    }
}
