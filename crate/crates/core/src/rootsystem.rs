//! Crystallographic root systems with rational coordinates.
//!
//! Simple roots are numbered as in Bourbaki's tables:
//!
//! | type | realization | simple roots |
//! |------|-------------|--------------|
//! | Aₙ   | sum-zero hyperplane of Qⁿ⁺¹ | eᵢ − eᵢ₊₁ |
//! | Bₙ   | Qⁿ | eᵢ − eᵢ₊₁ (i < n), eₙ |
//! | D₄   | Q⁴ | e₁−e₂, e₂−e₃, e₃−e₄, e₃+e₄ |
//! | G₂   | sum-zero plane of Q³ | e₁−e₂ (short), −2e₁+e₂+e₃ (long) |
//! | F₄   | Q⁴ | e₂−e₃, e₃−e₄, e₄, ½(e₁−e₂−e₃−e₄) |
//! | E₆₋₈ | Q⁸ | ½(e₁+e₈−e₂−…−e₇), e₁+e₂, e₂−e₁, e₃−e₂, … |

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use hashbrown::HashMap;

use crate::exact::Rational;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    G,
}

/// A supported Cartan type such as `E6` or `B4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=7).contains(&rank),
            Family::B => (2..=4).contains(&rank),
            Family::D => rank == 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{family:?}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }

    /// Fundamental invariant degrees in increasing order.
    pub fn degrees(&self) -> Vec<u32> {
        let n = self.rank as u32;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B => (1..=n).map(|k| 2 * k).collect(),
            Family::D => {
                let mut d: Vec<u32> = (1..n).map(|k| 2 * k).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            Family::G => vec![2, 6],
            Family::F => vec![2, 6, 8, 12],
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
        }
    }

    /// All supported types, in a fixed order.
    pub fn all() -> Vec<CartanType> {
        let mut v = Vec::new();
        for r in 1..=7 {
            v.push(CartanType { family: Family::A, rank: r });
        }
        for r in 2..=4 {
            v.push(CartanType { family: Family::B, rank: r });
        }
        v.push(CartanType { family: Family::D, rank: 4 });
        for r in 6..=8 {
            v.push(CartanType { family: Family::E, rank: r });
        }
        v.push(CartanType { family: Family::F, rank: 4 });
        v.push(CartanType { family: Family::G, rank: 2 });
        v
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedType(String::from(s));
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank).map_err(|_| bad())
    }
}

/// A closed root system together with the data the rest of the crate needs.
///
/// Coordinates are stored as integers after multiplying by `scale` (2 for the
/// types with half-integral roots), so `root = scaled_root / scale`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanType,
    ambient_dim: usize,
    scale: i64,
    roots: Vec<Vec<i64>>,
    /// Coordinates of each root in the basis of simple roots.
    simple_coords: Vec<Vec<i64>>,
    coxeter: Vec<Vec<u32>>,
    degrees: Vec<u32>,
    /// `reflections[r][s]` = index of s_{root r}(root s).
    reflections: Vec<Vec<u16>>,
    negation: Vec<u16>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reflect(v: &[i64], r: &[i64]) -> Vec<i64> {
    let k = 2 * dot(v, r) / dot(r, r);
    v.iter().zip(r).map(|(x, y)| x - k * y).collect()
}

fn simple_roots(t: CartanType) -> (usize, i64, Vec<Vec<i64>>) {
    let n = t.rank;
    let unit = |dim: usize, pairs: &[(usize, i64)]| {
        let mut v = vec![0i64; dim];
        for &(i, c) in pairs {
            v[i] += c;
        }
        v
    };
    match t.family {
        Family::A => (n + 1, 1, (0..n).map(|i| unit(n + 1, &[(i, 1), (i + 1, -1)])).collect()),
        Family::B => {
            let mut s: Vec<_> = (0..n - 1).map(|i| unit(n, &[(i, 1), (i + 1, -1)])).collect();
            s.push(unit(n, &[(n - 1, 1)]));
            (n, 1, s)
        }
        Family::D => {
            let mut s: Vec<_> = (0..n - 1).map(|i| unit(n, &[(i, 1), (i + 1, -1)])).collect();
            s.push(unit(n, &[(n - 2, 1), (n - 1, 1)]));
            (n, 1, s)
        }
        Family::G => (3, 1, vec![unit(3, &[(0, 1), (1, -1)]), unit(3, &[(0, -2), (1, 1), (2, 1)])]),
        Family::F => (
            4,
            2,
            vec![
                unit(4, &[(1, 2), (2, -2)]),
                unit(4, &[(2, 2), (3, -2)]),
                unit(4, &[(3, 2)]),
                vec![1, -1, -1, -1],
            ],
        ),
        Family::E => {
            let mut s = vec![
                vec![1, -1, -1, -1, -1, -1, -1, 1],
                unit(8, &[(0, 2), (1, 2)]),
                unit(8, &[(1, 2), (0, -2)]),
            ];
            for i in 2..7 {
                s.push(unit(8, &[(i, 2), (i - 1, -2)]));
            }
            s.truncate(n);
            (8, 2, s)
        }
    }
}

/// Solves `g·x = b` over Q for the Gram matrix of the simple roots.
fn solve_rational(g: &[Vec<i64>], b: &[i64]) -> Vec<Rational> {
    let n = g.len();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = g[i].iter().map(|&x| Rational::from_int(x)).collect();
            row.push(Rational::from_int(b[i]));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !crate::exact::Ring::is_zero(&a[r][col])).expect("Gram matrix is nonsingular");
        a.swap(col, p);
        let inv = a[col][col].recip().unwrap();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col].clone();
                for j in 0..=n {
                    let v = &a[col][j] * &f;
                    a[r][j] -= &v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n].clone()).collect()
}

impl RootSystem {
    pub fn new(cartan: CartanType) -> Result<Self> {
        let (ambient_dim, scale, simple) = simple_roots(cartan);
        let n = cartan.rank;

        // Closure under simple reflections.
        let mut roots: Vec<Vec<i64>> = simple.clone();
        let mut index: HashMap<Vec<i64>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut head = 0;
        while head < roots.len() {
            for s in &simple {
                let img = reflect(&roots[head], s);
                if !index.contains_key(&img) {
                    index.insert(img.clone(), roots.len());
                    roots.push(img);
                }
            }
            head += 1;
        }

        let gram: Vec<Vec<i64>> = simple.iter().map(|a| simple.iter().map(|b| dot(a, b)).collect()).collect();
        let mut simple_coords = Vec::with_capacity(roots.len());
        for r in &roots {
            let rhs: Vec<i64> = simple.iter().map(|a| dot(r, a)).collect();
            let coords = solve_rational(&gram, &rhs);
            let ints: Option<Vec<i64>> = coords.iter().map(Rational::to_i64).collect();
            let ints = ints.ok_or_else(|| Error::Verification(format!("root {r:?} is not an integral combination of simple roots")))?;
            let all_nonneg = ints.iter().all(|&c| c >= 0);
            let all_nonpos = ints.iter().all(|&c| c <= 0);
            if !(all_nonneg || all_nonpos) {
                return Err(Error::Verification(format!("root {r:?} is neither positive nor negative")));
            }
            simple_coords.push(ints);
        }

        let coxeter = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            return 1;
                        }
                        let a = &simple[i];
                        let b = &simple[j];
                        let num = 4 * dot(a, b) * dot(a, b);
                        let den = dot(a, a) * dot(b, b);
                        match (num / den, num % den) {
                            (0, 0) => 2,
                            (1, 0) => 3,
                            (2, 0) => 4,
                            (3, 0) => 6,
                            _ => 0,
                        }
                    })
                    .collect()
            })
            .collect();

        let reflections: Vec<Vec<u16>> = roots
            .iter()
            .map(|r| roots.iter().map(|v| index[&reflect(v, r)] as u16).collect())
            .collect();
        let negation = roots
            .iter()
            .map(|r| index[&r.iter().map(|x| -x).collect::<Vec<_>>()] as u16)
            .collect();

        let rs = RootSystem {
            cartan,
            ambient_dim,
            scale,
            roots,
            simple_coords,
            coxeter,
            degrees: cartan.degrees(),
            reflections,
            negation,
        };
        rs.check()?;
        Ok(rs)
    }

    fn check(&self) -> Result<()> {
        let n_pos = self.num_positive_roots();
        if self.roots.len() != 2 * n_pos {
            return Err(Error::Verification(format!("{}: root count is odd", self.cartan)));
        }
        let reflections_sum: u32 = self.degrees.iter().map(|d| d - 1).sum();
        if reflections_sum as usize != n_pos {
            return Err(Error::Verification(format!(
                "{}: Σ(dᵢ − 1) = {reflections_sum} but there are {n_pos} positive roots",
                self.cartan
            )));
        }
        for row in &self.coxeter {
            if row.contains(&0) {
                return Err(Error::Verification(format!("{}: non-crystallographic angle", self.cartan)));
            }
        }
        for i in 0..self.roots.len() {
            let n2 = self.norm2(i);
            if !matches!(n2.to_i64(), Some(1 | 2 | 6)) {
                return Err(Error::Verification(format!("{}: root norm² {n2} outside {{1,2,6}}", self.cartan)));
            }
        }
        Ok(())
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// N, the number of positive roots (= number of reflections).
    pub fn num_positive_roots(&self) -> usize {
        self.simple_coords.iter().filter(|c| c.iter().all(|&x| x >= 0)).count()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter
    }

    /// Rational coordinates of root `i` in the ambient space.
    pub fn root(&self, i: usize) -> Vec<Rational> {
        self.roots[i].iter().map(|&x| Rational::new(x, self.scale).unwrap()).collect()
    }

    /// Integer coordinates of root `i`, multiplied by [`RootSystem::scale`].
    pub fn scaled_root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn simple_coords(&self, i: usize) -> &[i64] {
        &self.simple_coords[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.simple_coords[i].iter().all(|&x| x >= 0)
    }

    /// (αᵢ, αⱼ) for the standard dot product.
    pub fn form(&self, i: usize, j: usize) -> Rational {
        Rational::new(dot(&self.roots[i], &self.roots[j]), self.scale * self.scale).unwrap()
    }

    pub fn norm2(&self, i: usize) -> Rational {
        self.form(i, i)
    }

    /// Index of the image of root `target` under the reflection in root `mirror`.
    pub fn reflect_index(&self, mirror: usize, target: usize) -> usize {
        self.reflections[mirror][target] as usize
    }

    pub fn negate_index(&self, i: usize) -> usize {
        self.negation[i] as usize
    }

    pub fn index_of(&self, scaled: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == scaled)
    }

    /// Matrix of the simple reflection sᵢ on V in the simple-root basis
    /// (row-major, column j = coordinates of sᵢ(αⱼ)).
    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<i64> {
        let n = self.rank();
        let mut m = vec![0i64; n * n];
        for j in 0..n {
            let img = self.reflect_index(i, j);
            for (row, &c) in self.simple_coords[img].iter().enumerate() {
                m[row * n + j] = c;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Ring;
    use alloc::string::ToString;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn root_counts() {
        assert_eq!(rs("G2").num_roots(), 12);
        assert_eq!(rs("A4").num_roots(), 20);
        assert_eq!(rs("E8").num_roots(), 240);
        assert_eq!(rs("E8").num_positive_roots(), 120);
        assert_eq!(rs("E6").num_roots(), 72);
        assert_eq!(rs("E7").num_roots(), 126);
        assert_eq!(rs("F4").num_roots(), 48);
        assert_eq!(rs("B4").num_roots(), 32);
        assert_eq!(rs("D4").num_roots(), 24);
    }

    #[test]
    fn realizations_and_norms() {
        let g2 = rs("G2");
        assert_eq!(g2.ambient_dim(), 3);
        let mut norms: Vec<i64> = (0..12).map(|i| g2.norm2(i).to_i64().unwrap()).collect();
        norms.sort_unstable();
        norms.dedup();
        assert_eq!(norms, vec![2, 6]);
        let b3 = rs("B3");
        assert_eq!(b3.norm2(2), Rational::one());
        assert_eq!(rs("A4").ambient_dim(), 5);
    }

    #[test]
    fn coxeter_matrices() {
        assert_eq!(rs("G2").coxeter_matrix()[0][1], 6);
        assert_eq!(rs("F4").coxeter_matrix()[1][2], 4);
        assert_eq!(rs("B2").coxeter_matrix()[0][1], 4);
        let e8 = rs("E8");
        // Bourbaki: 1–3, 2–4, 3–4, 4–5, 5–6, 6–7, 7–8.
        let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
        for i in 0..8 {
            for j in 0..8 {
                let expected = if i == j {
                    1
                } else if edges.contains(&(i.min(j), i.max(j))) {
                    3
                } else {
                    2
                };
                assert_eq!(e8.coxeter_matrix()[i][j], expected, "({i},{j})");
            }
        }
    }

    #[test]
    fn simple_reflections_permute_roots_and_preserve_form() {
        for t in CartanType::all() {
            let r = RootSystem::new(t).unwrap();
            for i in 0..r.rank() {
                let mut seen = vec![false; r.num_roots()];
                for j in 0..r.num_roots() {
                    let k = r.reflect_index(i, j);
                    assert!(!seen[k], "{t}: s{i} not injective");
                    seen[k] = true;
                    for l in 0..r.num_roots() {
                        assert_eq!(r.form(j, l), r.form(k, r.reflect_index(i, l)), "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn degree_identities() {
        for t in CartanType::all() {
            let r = RootSystem::new(t).unwrap();
            let s: u32 = r.degrees().iter().map(|d| d - 1).sum();
            assert_eq!(s as usize, r.num_positive_roots(), "{t}");
        }
        assert_eq!(CartanType::from_str("D4").unwrap().degrees(), vec![2, 4, 4, 6]);
    }

    #[test]
    fn type_parsing() {
        assert!("E9".parse::<CartanType>().is_err());
        assert!("H3".parse::<CartanType>().is_err());
        assert!("B5".parse::<CartanType>().is_err());
        assert_eq!("e6".parse::<CartanType>().unwrap().to_string(), "E6");
        let m = rs("A2").simple_reflection_matrix(0);
        assert_eq!(m, vec![-1, 1, 0, 1]);
        assert!(rs("A2").form(0, 1) + Rational::one() == Rational::zero());
    }
}
