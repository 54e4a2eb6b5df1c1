use alloc::vec;
use alloc::vec::Vec;

use super::{IntPolynomial, Polynomial, Rational, Ring};
use crate::{Error, Result};

/// Small dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Arithmetic(alloc::format!(
                "{} entries do not fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    pub fn from_ints(rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        RationalMatrix::new(rows, cols, data.iter().map(|&x| Rational::from_int(x)).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rational::one();
        }
        RationalMatrix { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Arithmetic("matrix shapes do not compose".into()));
        }
        let mut data = vec![Rational::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    data[i * rhs.cols + j] += &(a * rhs.get(k, j));
                }
            }
        }
        Ok(RationalMatrix { rows: self.rows, cols: rhs.cols, data })
    }

    fn trace(&self) -> Rational {
        (0..self.rows).fold(Rational::zero(), |acc, i| acc + self.get(i, i).clone())
    }
}

/// `det(I − tM)` for a square rational matrix whose result has integer
/// coefficients (the matrix of a finite-order lattice automorphism).
pub fn charpoly_reciprocal(m: &RationalMatrix) -> Result<IntPolynomial> {
    if m.rows != m.cols {
        return Err(Error::Arithmetic(alloc::format!(
            "characteristic polynomial of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    // Faddeev–LeVerrier: det(λI − M) = Σ c_k λ^k with c_n = 1.
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut aux = RationalMatrix { rows: n, cols: n, data: vec![Rational::zero(); n * n] };
    for k in 1..=n {
        let mut next = m.mul(&aux)?;
        for i in 0..n {
            next.data[i * n + i] += &c[n - k + 1];
        }
        let tr = m.mul(&next)?.trace();
        c[n - k] = -(tr / Rational::from_int(k as i64));
        aux = next;
    }
    // det(I − tM) = Σ_k c_{n−k} t^k.
    let coeffs = (0..=n)
        .map(|k| {
            c[n - k].to_i64().ok_or_else(|| {
                Error::NotRational(alloc::format!(
                    "coefficient {} of det(1 − tM) is not an integer; matrix is not crystallographic",
                    c[n - k]
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

/// Integer fast path of [`charpoly_reciprocal`] for a row-major `n×n` matrix.
pub fn charpoly_reciprocal_int(m: &[i64], n: usize) -> IntPolynomial {
    assert_eq!(m.len(), n * n, "charpoly_reciprocal_int: not an n×n matrix");
    let matmul = |a: &[i64], b: &[i64]| -> Vec<i64> {
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += x * b[k * n + j];
                }
            }
        }
        out
    };
    let mut c = vec![0i64; n + 1];
    c[n] = 1;
    let mut aux = vec![0i64; n * n];
    for k in 1..=n {
        let mut next = matmul(m, &aux);
        for i in 0..n {
            next[i * n + i] += c[n - k + 1];
        }
        let prod = matmul(m, &next);
        let tr: i64 = (0..n).map(|i| prod[i * n + i]).sum();
        debug_assert_eq!(tr % k as i64, 0);
        c[n - k] = -tr / k as i64;
        aux = next;
    }
    Polynomial::new((0..=n).map(|k| c[n - k]).collect())
}
