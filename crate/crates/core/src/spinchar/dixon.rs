//! Dixon–Schneider: simultaneous eigenvectors of the class matrices over F_p,
//! lifted to exact cyclotomic values through power maps.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use super::modular::{charpoly, choose_prime, nullspace, roots, rref, Fp};
use crate::cover::{CoverClasses, CoverElt, CoverGroup};
use crate::exact::{quad_to_rational, Cyclotomic, QuadComplex, QuadField, Rational, Ring};
use crate::{Error, Result};

/// Class data of W̃ needed by the character table computation.
#[derive(Clone, Debug)]
pub struct CoverClassData {
    pub sizes: Vec<u64>,
    /// Cover class of x⁻¹ for x in class k.
    pub inverse_class: Vec<usize>,
    /// `power_maps[k][l]` is the class of g_k^l, 0 ≤ l < ord(g_k).
    pub power_maps: Vec<Vec<usize>>,
    pub z_class: usize,
}

impl CoverClassData {
    pub fn new(cover: &CoverGroup, classes: &CoverClasses) -> Self {
        let mut inverse_class = Vec::with_capacity(classes.len());
        let mut power_maps = Vec::with_capacity(classes.len());
        for cls in &classes.classes {
            inverse_class.push(classes.class_of(cover.inverse(cls.rep)));
            let mut map = vec![0];
            let mut y = cls.rep;
            while y != CoverElt::IDENTITY {
                map.push(classes.class_of(y));
                y = cover.mul(cls.rep, y);
            }
            power_maps.push(map);
        }
        CoverClassData {
            sizes: classes.classes.iter().map(|c| c.size as u64).collect(),
            inverse_class,
            power_maps,
            z_class: classes.class_of(CoverElt::Z),
        }
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn exponent(&self) -> u64 {
        self.power_maps.iter().fold(1u64, |e, m| e.lcm(&(m.len() as u64)))
    }
}

/// Structure constants: entry [k][i] counts x ∈ C_j with x⁻¹g_i ∈ C_k.
fn class_matrix(cover: &CoverGroup, classes: &CoverClasses, f: Fp, j: usize) -> Vec<Vec<u64>> {
    let r = classes.len();
    let mut counts = vec![vec![0u64; r]; r];
    let reps: Vec<CoverElt> = classes.classes.iter().map(|c| c.rep).collect();
    for x in classes.elements(j) {
        for (i, &g) in reps.iter().enumerate() {
            counts[classes.class_of(cover.inv_mul(x, g))][i] += 1;
        }
    }
    for row in counts.iter_mut() {
        for v in row.iter_mut() {
            *v %= f.0;
        }
    }
    counts
}

/// The ordinary character table of W̃: rows are irreducible characters
/// sorted by degree, columns follow the cover class order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub prime: u64,
    pub values: Vec<Vec<QuadComplex>>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degree(&self, row: usize) -> u64 {
        as_int(&self.values[row][0]).expect("degrees are integers") as u64
    }
}

fn as_int(c: &QuadComplex) -> Option<i64> {
    if !c.is_real() {
        return None;
    }
    quad_to_rational(&c.re).ok().and_then(|r| r.to_i64())
}

struct Subspace {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn split(f: Fp, space: Subspace, a: &[Vec<u64>]) -> Result<Vec<Subspace>> {
    let d = space.basis.len();
    let r = a.len();
    // B[t][s] = coordinate t of A·b_s
    let images: Vec<Vec<u64>> = space
        .basis
        .iter()
        .map(|b| (0..r).map(|k| a[k].iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))).collect())
        .collect();
    let mut b = vec![vec![0u64; d]; d];
    for (s, img) in images.iter().enumerate() {
        for (t, &pc) in space.pivots.iter().enumerate() {
            b[t][s] = img[pc];
        }
    }
    let eigenvalues = roots(f, &charpoly(f, &b));
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in eigenvalues {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|t| (0..d).map(|s| if s == t { f.sub(b[t][s], lambda) } else { b[t][s] }).collect())
            .collect();
        let coords = nullspace(f, shifted, d);
        total += coords.len();
        let vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|y| {
                let mut v = vec![0u64; r];
                for (s, &ys) in y.iter().enumerate() {
                    if ys != 0 {
                        for (vk, &bk) in v.iter_mut().zip(&space.basis[s]) {
                            *vk = f.add(*vk, f.mul(ys, bk));
                        }
                    }
                }
                v
            })
            .collect();
        let (basis, pivots) = rref(f, vectors);
        out.push(Subspace { basis, pivots });
    }
    if total != d {
        return Err(Error::Verification("class matrix not diagonalizable modulo p".into()));
    }
    Ok(out)
}

/// Computes all irreducible characters of W̃ and checks both orthogonality
/// relations exactly.
pub fn character_table(cover: &CoverGroup, classes: &CoverClasses, data: &CoverClassData) -> Result<CharacterTable> {
    let r = data.len();
    let order = cover.order() as u64;
    let sizes = &data.sizes;
    let exponent = data.exponent();
    let bound = 2 * (num_integer::Roots::sqrt(&order) + 1);
    let f = Fp(choose_prime(exponent, bound));

    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect();
    let mut spaces = vec![Subspace { pivots: (0..r).collect(), basis: identity }];
    let mut by_size: Vec<usize> = (1..r).collect();
    by_size.sort_by_key(|&j| (sizes[j], j));
    for &j in &by_size {
        if spaces.iter().all(|s| s.basis.len() == 1) {
            break;
        }
        let a = class_matrix(cover, classes, f, j);
        let mut next = Vec::new();
        for s in spaces {
            if s.basis.len() == 1 {
                next.push(s);
            } else {
                next.extend(split(f, s, &a)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::Verification("class matrices did not separate all characters".into()));
    }

    let generator = f.primitive_root();
    let mut converted: BTreeMap<(u32, Vec<(u32, Rational)>), QuadComplex> = BTreeMap::new();
    let mut values = Vec::with_capacity(r);
    for s in spaces {
        let v = &s.basis[0];
        if v[0] == 0 {
            return Err(Error::Verification("central character vanishes at the identity".into()));
        }
        let inv0 = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, inv0)).collect();
        let mut denom = 0;
        for i in 0..r {
            let term = f.mul(f.mul(omega[i], omega[data.inverse_class[i]]), f.inv(sizes[i] % f.0));
            denom = f.add(denom, term);
        }
        let deg2 = f.mul(order % f.0, f.inv(denom));
        let root = f.sqrt(deg2).ok_or_else(|| Error::Verification("degree is not a square mod p".into()))?;
        let degree = root.min(f.0 - root);
        let modular: Vec<u64> =
            (0..r).map(|i| f.mul(f.mul(omega[i], degree), f.inv(sizes[i] % f.0))).collect();
        let mut row = Vec::with_capacity(r);
        for i in 0..r {
            let exact = lift(f, generator, &modular, &data.power_maps[i], degree)?;
            let key = (exact.conductor(), exact.coeffs().iter().map(|(&k, c)| (k, c.clone())).collect());
            let value = match converted.get(&key) {
                Some(v) => v.clone(),
                None => {
                    let v = QuadComplex::from_cyclotomic(&exact)?;
                    converted.insert(key, v.clone());
                    v
                }
            };
            row.push(value);
        }
        values.push((degree, row));
    }
    values.sort_by_key(|(degree, _)| *degree);
    let values = values.into_iter().map(|(_, row)| row).collect();
    let table = CharacterTable { prime: f.0, values };
    check_orthogonality(&table, sizes, order)?;
    Ok(table)
}

/// Recovers χ(g) = Σ m_k ζ_o^k from χ mod p on the powers of g.
fn lift(f: Fp, generator: u64, modular: &[u64], power_map: &[usize], degree: u64) -> Result<Cyclotomic> {
    let o = power_map.len() as u64;
    let z = f.pow(generator, (f.0 - 1) / o);
    let z_inv = f.inv(z);
    let o_inv = f.inv(o % f.0);
    let mut terms = Vec::new();
    let mut total = 0;
    for k in 0..o {
        let step = f.pow(z_inv, k);
        let mut acc = 0;
        let mut w = 1;
        for &cls in power_map {
            acc = f.add(acc, f.mul(modular[cls], w));
            w = f.mul(w, step);
        }
        let m = f.mul(acc, o_inv);
        if m > degree {
            return Err(Error::Verification("eigenvalue multiplicity out of range".into()));
        }
        total += m;
        if m != 0 {
            terms.push((k as i64, Rational::from_int(m as i64)));
        }
    }
    if total != degree {
        return Err(Error::Verification("eigenvalue multiplicities do not sum to the degree".into()));
    }
    Ok(Cyclotomic::from_terms(o as u32, terms))
}

fn check_orthogonality(table: &CharacterTable, sizes: &[u64], order: u64) -> Result<()> {
    let r = sizes.len();
    let conj: Vec<Vec<QuadComplex>> = table.values.iter().map(|row| row.iter().map(QuadComplex::conj).collect()).collect();
    let weighted: Vec<Vec<QuadComplex>> = table
        .values
        .iter()
        .map(|row| row.iter().zip(sizes).map(|(v, &h)| v.scale(&Rational::from_int(h as i64))).collect())
        .collect();
    for a in 0..r {
        for b in a..r {
            let s = (0..r).fold(QuadComplex::zero(), |acc, i| acc + &weighted[a][i] * &conj[b][i]);
            let expected = if a == b { order as i64 } else { 0 };
            if s != QuadComplex::from_i64(expected) {
                return Err(Error::Verification(alloc::format!("row orthogonality fails for characters {a}, {b}")));
            }
        }
    }
    for i in 0..r {
        for j in i..r {
            let s = (0..r).fold(QuadComplex::zero(), |acc, row| acc + &table.values[row][i] * &conj[row][j]);
            let expected = if i == j { Rational::new(order as i64, sizes[i] as i64)? } else { Rational::from_int(0) };
            if s != QuadComplex::real(QuadField::from_rational(expected)) {
                return Err(Error::Verification(alloc::format!("column orthogonality fails for classes {i}, {j}")));
            }
        }
    }
    Ok(())
}
