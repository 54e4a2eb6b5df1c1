//! Linear algebra over F_p for the Dixon–Schneider eigenspace splitting.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Fp(pub u64);

impl Fp {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }
    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }
    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.0;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.0 != 0);
        self.pow(a, self.0 - 2)
    }
    #[cfg(test)]
    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.0 as i64) as u64
    }
    /// A square root of a, if one exists (brute force; p is small).
    pub fn sqrt(self, a: u64) -> Option<u64> {
        (0..self.0).find(|&x| self.mul(x, x) == a)
    }

    pub fn primitive_root(self) -> u64 {
        let factors = prime_factors(self.0 - 1);
        (2..self.0)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (self.0 - 1) / q) != 1))
            .expect("prime modulus has a primitive root")
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime p ≡ 1 (mod exponent) with p > bound.
pub(crate) fn choose_prime(exponent: u64, bound: u64) -> u64 {
    let mut p = exponent + 1;
    while p <= bound || !is_prime(p) {
        p += exponent;
    }
    p
}

/// Row-reduces `rows` in place and returns them trimmed to a basis in
/// reduced echelon form, together with the pivot columns.
pub(crate) fn rref(f: Fp, mut rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let factor = rows[k][c];
                for j in 0..cols {
                    let v = f.mul(factor, rows[r][j]);
                    rows[k][j] = f.sub(rows[k][j], v);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of the right null space {x : A x = 0} of an m×n matrix.
pub(crate) fn nullspace(f: Fp, a: Vec<Vec<u64>>, n: usize) -> Vec<Vec<u64>> {
    let (rows, pivots) = if a.is_empty() { (a, Vec::new()) } else { rref(f, a) };
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut x = vec![0u64; n];
        x[free] = 1;
        for (row, &pc) in rows.iter().zip(&pivots) {
            x[pc] = f.sub(0, row[free]);
        }
        basis.push(x);
    }
    basis
}

/// Characteristic polynomial det(λI − B) by Hessenberg-free Faddeev–LeVerrier
/// (valid for d < p). Coefficients in ascending degree.
pub(crate) fn charpoly(f: Fp, b: &[Vec<u64>]) -> Vec<u64> {
    let d = b.len();
    let mut coeffs = vec![0u64; d + 1];
    coeffs[d] = 1;
    let mut m = vec![vec![0u64; d]; d];
    for k in 1..=d {
        // M ← B·M + c_{d−k+1} I
        let mut next = vec![vec![0u64; d]; d];
        for i in 0..d {
            for l in 0..d {
                if b[i][l] == 0 {
                    continue;
                }
                for j in 0..d {
                    next[i][j] = f.add(next[i][j], f.mul(b[i][l], m[l][j]));
                }
            }
            next[i][i] = f.add(next[i][i], coeffs[d - k + 1]);
        }
        m = next;
        // c_{d−k} = −tr(B·M)/k
        let mut tr = 0;
        for i in 0..d {
            for l in 0..d {
                tr = f.add(tr, f.mul(b[i][l], m[l][i]));
            }
        }
        coeffs[d - k] = f.mul(f.sub(0, tr), f.inv(k as u64 % f.0));
    }
    coeffs
}

pub(crate) fn roots(f: Fp, poly: &[u64]) -> Vec<u64> {
    (0..f.0)
        .filter(|&x| poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c)) == 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        assert_eq!(choose_prime(12, 20), 37);
        assert_eq!(choose_prime(720, 644), 2161);
        assert!(is_prime(2161));
    }

    #[test]
    fn charpoly_and_roots() {
        let f = Fp(13);
        let b = vec![vec![2, 1], vec![0, 5]];
        let cp = charpoly(f, &b);
        assert_eq!(cp, vec![10, f.from_i64(-7), 1]);
        assert_eq!(roots(f, &cp), vec![2, 5]);
    }

    #[test]
    fn nullspace_dimension() {
        let f = Fp(7);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(f, a.clone(), 3);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for row in &a {
                let s = row.iter().zip(x).fold(0, |acc, (&r, &v)| f.add(acc, f.mul(r, v)));
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn primitive_root_generates() {
        let f = Fp(37);
        let g = f.primitive_root();
        let mut seen = (1..37).map(|k| f.pow(g, k)).collect::<Vec<_>>();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 36);
    }
}
