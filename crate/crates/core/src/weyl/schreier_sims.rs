//! Group order of a permutation group via a stabilizer chain (Knuth's
//! sift/extend formulation of Schreier–Sims).

use alloc::vec;
use alloc::vec::Vec;

type Perm = Vec<u16>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // (a ∘ b)(x) = a(b(x))
    b.iter().map(|&x| a[x as usize]).collect()
}

fn invert(a: &Perm) -> Perm {
    let mut inv = vec![0u16; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u16;
    }
    inv
}

fn is_identity(a: &Perm) -> bool {
    a.iter().enumerate().all(|(i, &x)| i == x as usize)
}

struct Chain {
    degree: usize,
    /// `transversal[k][j]` maps k to j and fixes 0..k pointwise.
    transversal: Vec<Vec<Option<(Perm, Perm)>>>,
    generators: Vec<Vec<Perm>>,
}

impl Chain {
    fn new(degree: usize) -> Self {
        let identity: Perm = (0..degree as u16).collect();
        let mut transversal = vec![vec![None; degree]; degree];
        for (k, row) in transversal.iter_mut().enumerate() {
            row[k] = Some((identity.clone(), identity.clone()));
        }
        Chain { degree, transversal, generators: vec![Vec::new(); degree] }
    }

    fn sifts(&self, from: usize, g: &Perm) -> bool {
        let mut g = g.clone();
        for level in from..self.degree {
            let j = g[level] as usize;
            match &self.transversal[level][j] {
                None => return false,
                Some((_, inv)) => g = compose(inv, &g),
            }
        }
        debug_assert!(is_identity(&g));
        true
    }

    fn add(&mut self, k: usize, g: Perm) {
        if self.sifts(k, &g) {
            return;
        }
        self.generators[k].push(g.clone());
        let reps: Vec<Perm> = self.transversal[k].iter().flatten().map(|(t, _)| t.clone()).collect();
        for t in reps {
            self.extend(k, compose(&g, &t));
        }
    }

    fn extend(&mut self, k: usize, tau: Perm) {
        let j = tau[k] as usize;
        match &self.transversal[k][j] {
            None => {
                let inv = invert(&tau);
                self.transversal[k][j] = Some((tau.clone(), inv));
                let gens = self.generators[k].clone();
                for s in gens {
                    self.extend(k, compose(&s, &tau));
                }
            }
            Some((_, inv)) => {
                let h = compose(inv, &tau);
                if k + 1 < self.degree {
                    self.add(k + 1, h);
                }
            }
        }
    }

    fn order(&self) -> u128 {
        self.transversal.iter().map(|row| row.iter().flatten().count() as u128).product()
    }
}

/// Order of the group generated by permutations of `0..degree`.
pub fn permutation_group_order(generators: &[Vec<u16>], degree: usize) -> u128 {
    let mut chain = Chain::new(degree);
    for g in generators {
        assert_eq!(g.len(), degree, "generator has the wrong degree");
        chain.add(0, g.clone());
    }
    chain.order()
}
