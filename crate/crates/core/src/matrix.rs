//! Dense square matrices over exact rings: determinants, characteristic
//! polynomials and inertia counts.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::Zero;

use crate::gauss::GaussInt;
use crate::ring::Ring;

/// Square matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

/// Square matrix of arbitrary-precision integers.
pub type IntMatrix = Matrix<BigInt>;

/// Square matrix of Gaussian integers.
pub type GaussMatrix = Matrix<GaussInt>;

impl<T: Ring> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Matrix { dim, data: vec![T::zero_elt(); dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Matrix { dim, data }
    }

    /// Builds from rows; panics unless the rows form a square array.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim, "matrix rows must form a square array");
            data.extend(r);
        }
        Matrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.dim).map(|i| self.data[i * self.dim..(i + 1) * self.dim].to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        Matrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        Matrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, k: &T) -> Self {
        Matrix { dim: self.dim, data: self.data.iter().map(|a| a.mul(k)).collect() }
    }

    /// Deletes row and column `k`.
    pub fn minor(&self, k: usize) -> Self {
        let keep: Vec<usize> = (0..self.dim).filter(|&i| i != k).collect();
        Matrix::from_fn(self.dim - 1, |i, j| self.get(keep[i], keep[j]).clone())
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let n = self.dim + o.dim;
        Matrix::from_fn(n, |i, j| {
            if i < self.dim && j < self.dim {
                self.get(i, j).clone()
            } else if i >= self.dim && j >= self.dim {
                o.get(i - self.dim, j - self.dim).clone()
            } else {
                T::zero_elt()
            }
        })
    }

    /// Characteristic polynomial `det(x I - M)` by Berkowitz's
    /// division-free algorithm. Coefficients are returned with the
    /// leading coefficient first (`result[0] = 1`).
    pub fn char_poly(&self) -> Vec<T> {
        let n = self.dim;
        if n == 0 {
            return vec![T::one_elt()];
        }
        let mut c = vec![T::one_elt(), self.get(0, 0).neg()];
        for r in 1..n {
            let mut q = vec![T::zero_elt(); r + 2];
            q[0] = T::one_elt();
            q[1] = self.get(r, r).neg();
            let mut v: Vec<T> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for qk in q.iter_mut().skip(2) {
                let mut dot = T::zero_elt();
                for (j, vj) in v.iter().enumerate() {
                    dot = dot.add(&self.get(r, j).mul(vj));
                }
                *qk = dot.neg();
                let mut nv = vec![T::zero_elt(); r];
                for (i, nvi) in nv.iter_mut().enumerate() {
                    let mut s = T::zero_elt();
                    for (j, vj) in v.iter().enumerate() {
                        s = s.add(&self.get(i, j).mul(vj));
                    }
                    *nvi = s;
                }
                v = nv;
            }
            let mut nc = vec![T::zero_elt(); r + 2];
            for (i, nci) in nc.iter_mut().enumerate() {
                let mut s = T::zero_elt();
                for (j, cj) in c.iter().enumerate() {
                    if j <= i {
                        s = s.add(&q[i - j].mul(cj));
                    }
                }
                *nci = s;
            }
            c = nc;
        }
        c
    }

    /// Determinant via the characteristic polynomial (division-free).
    pub fn det(&self) -> T {
        let c = self.char_poly();
        let last = c[self.dim].clone();
        if self.dim % 2 == 1 {
            last.neg()
        } else {
            last
        }
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det_bareiss(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::from(1);
        }
        let mut a = self.rows();
        let mut sign = 1i32;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }
}

impl GaussMatrix {
    pub fn is_hermitian(&self) -> bool {
        (0..self.dim).all(|i| (0..=i).all(|j| *self.get(i, j) == self.get(j, i).conj()))
    }
}

/// Inertia of a symmetric or Hermitian matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn nullity(&self) -> usize {
        self.zero
    }
}

/// Error for inertia computations on matrices that are not self-adjoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotSelfAdjoint;

impl fmt::Display for NotSelfAdjoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("matrix is not symmetric/Hermitian")
    }
}

fn sign_changes<'a>(it: impl Iterator<Item = &'a BigInt>) -> usize {
    let mut last = Sign::NoSign;
    let mut n = 0;
    for c in it {
        let s = c.sign();
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Eigenvalue sign counts from a real-rooted characteristic polynomial
/// (leading coefficient first). Descartes' rule is exact here.
pub fn inertia_from_char_poly(c: &[BigInt]) -> Inertia {
    let n = c.len() - 1;
    let zero = c.iter().rev().take_while(|x| x.is_zero()).count();
    let core = &c[..=n - zero];
    let positive = sign_changes(core.iter());
    // p(-x): coefficient of x^k picks up (-1)^k; k = n - index
    let flipped: Vec<BigInt> =
        core.iter().enumerate().map(|(i, x)| if (n - i) % 2 == 1 { -x } else { x.clone() }).collect();
    let negative = sign_changes(flipped.iter());
    Inertia { positive, negative, zero }
}

/// Exact inertia of an integer symmetric matrix.
pub fn symmetric_inertia(m: &IntMatrix) -> Result<Inertia, NotSelfAdjoint> {
    if !m.is_symmetric() {
        return Err(NotSelfAdjoint);
    }
    Ok(inertia_from_char_poly(&m.char_poly()))
}

/// Exact inertia of a Hermitian Gaussian-integer matrix.
pub fn hermitian_inertia(m: &GaussMatrix) -> Result<Inertia, NotSelfAdjoint> {
    if !m.is_hermitian() {
        return Err(NotSelfAdjoint);
    }
    let cp = m.char_poly();
    let real: Vec<BigInt> = cp
        .into_iter()
        .map(|g| {
            debug_assert!(g.im.is_zero(), "Hermitian characteristic polynomial must be real");
            g.re
        })
        .collect();
    Ok(inertia_from_char_poly(&real))
}

/// `(signature, nullity)` of a symmetric integer matrix.
pub fn symmetric_signature(m: &IntMatrix) -> Result<(i64, usize), NotSelfAdjoint> {
    symmetric_inertia(m).map(|i| (i.signature(), i.nullity()))
}
