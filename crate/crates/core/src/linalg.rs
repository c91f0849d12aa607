//! Dense complex vectors and matrices.
//!
//! This is the brute-force reference representation. Every structured fast
//! path in the crate (DFT-based circulant products, the O(n) tridiagonal
//! stencil, half-size centro-symmetric solves) is checked against plain
//! dense arithmetic built from the types here.
//!
//! Indices are 0-based. Mathematical statements written with 1-based indices
//! map entry `i` to storage index `i - 1`.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

pub use num_complex::Complex64 as Complex;

use crate::error::{mismatch, Error, Result};

pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);
pub(crate) const ONE: Complex = Complex::new(1.0, 0.0);

fn check_finite(entries: &[Complex]) -> Result<()> {
    match entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
        Some(index) => Err(Error::NonFinite { index }),
        None => Ok(()),
    }
}

/// Absolute and relative tolerances used by predicates and solvers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_eps: 1e-10,
            rel_eps: 1e-10,
        }
    }
}

impl Tolerance {
    pub fn new(abs_eps: f64, rel_eps: f64) -> Result<Self> {
        let ok = |x: f64| x.is_finite() && x >= 0.0;
        if !ok(abs_eps) {
            return Err(Error::NonFinite { index: 0 });
        }
        if !ok(rel_eps) {
            return Err(Error::NonFinite { index: 1 });
        }
        Ok(Self { abs_eps, rel_eps })
    }

    /// Same value for both the absolute and the relative part.
    pub fn uniform(eps: f64) -> Result<Self> {
        Self::new(eps, eps)
    }
}

/// A complex column vector of fixed length `n >= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexVector(Vec<Complex>);

impl ComplexVector {
    pub fn new(entries: Vec<Complex>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSize {
                n: 0,
                reason: "vectors need at least one entry",
            });
        }
        check_finite(&entries)?;
        Ok(Self(entries))
    }

    pub fn from_real(entries: &[f64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    /// Caller guarantees a non-empty, finite buffer.
    pub(crate) fn from_vec(entries: Vec<Complex>) -> Self {
        debug_assert!(!entries.is_empty());
        Self(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_vec(vec![ZERO; n.max(1)])
    }

    pub fn ones(n: usize) -> Self {
        Self::from_vec(vec![ONE; n.max(1)])
    }

    /// Standard basis vector with a one at storage index `k`.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = vec![ZERO; n.max(1)];
        v[k] = ONE;
        Self::from_vec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex> {
        self.0.iter()
    }

    pub fn into_inner(self) -> Vec<Complex> {
        self.0
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Hermitian inner product `<self, other> = sum conj(self_i) other_i`.
    pub fn inner(&self, other: &Self) -> Complex {
        assert_eq!(self.len(), other.len(), "inner: length mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum()
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn normalized(&self) -> Self {
        let nrm = self.norm();
        if nrm == 0.0 {
            return self.clone();
        }
        self * Complex::new(1.0 / nrm, 0.0)
    }

    pub fn map(&self, f: impl Fn(Complex) -> Complex) -> Self {
        Self::from_vec(self.0.iter().map(|&z| f(z)).collect())
    }
}

impl Index<usize> for ComplexVector {
    type Output = Complex;
    fn index(&self, i: usize) -> &Complex {
        &self.0[i]
    }
}

impl<'a> IntoIterator for &'a ComplexVector {
    type Item = &'a Complex;
    type IntoIter = std::slice::Iter<'a, Complex>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

fn zip_vec(a: &ComplexVector, b: &ComplexVector, f: impl Fn(Complex, Complex) -> Complex) -> ComplexVector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    ComplexVector::from_vec(a.0.iter().zip(&b.0).map(|(&x, &y)| f(x, y)).collect())
}

impl Add for &ComplexVector {
    type Output = ComplexVector;
    fn add(self, rhs: &ComplexVector) -> ComplexVector {
        zip_vec(self, rhs, |x, y| x + y)
    }
}

impl Sub for &ComplexVector {
    type Output = ComplexVector;
    fn sub(self, rhs: &ComplexVector) -> ComplexVector {
        zip_vec(self, rhs, |x, y| x - y)
    }
}

impl Mul<Complex> for &ComplexVector {
    type Output = ComplexVector;
    fn mul(self, rhs: Complex) -> ComplexVector {
        self.map(|z| z * rhs)
    }
}

impl Neg for &ComplexVector {
    type Output = ComplexVector;
    fn neg(self) -> ComplexVector {
        self.map(|z| -z)
    }
}

/// Row-major dense complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexDense {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexDense {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(mismatch(format!("{} entries", rows * cols), data.len()));
        }
        check_finite(&data)?;
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from rows of real numbers.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(mismatch(format!("{cols} columns"), format!("{} in row {i}", r.len())));
            }
            data.extend(r.iter().map(|&x| Complex::new(x, 0.0)));
        }
        Self::new(rows.len(), cols, data)
    }

    pub fn from_rows<R: AsRef<[Complex]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(mismatch(format!("{cols} columns"), format!("{} in row {i}", r.len())));
            }
            data.extend_from_slice(r);
        }
        Self::new(rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[ComplexVector]) -> Result<Self> {
        let rows = columns.first().map_or(0, |c| c.len());
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(mismatch(format!("columns of length {rows}"), bad.len()));
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i]))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn diag(values: &[Complex]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i] } else { ZERO })
    }

    /// Rank-one matrix `u v^T` (no conjugation).
    pub fn outer(u: &ComplexVector, v: &ComplexVector) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> ComplexVector {
        ComplexVector::from_vec((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(Complex) -> Complex) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    /// Horizontal concatenation `(self, other)`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(mismatch(format!("{} rows", self.rows), other.rows));
        }
        let c = self.cols;
        Ok(Self::from_fn(self.rows, c + other.cols, |i, j| {
            if j < c {
                self.get(i, j)
            } else {
                other.get(i, j - c)
            }
        }))
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(mismatch(format!("{} rows on the right", self.cols), other.rows));
        }
        let mut data = vec![ZERO; self.rows * other.cols];
        for i in 0..self.rows {
            let out = &mut data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == ZERO {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in out.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mat_vec(&self, x: &ComplexVector) -> Result<ComplexVector> {
        if self.cols != x.len() {
            return Err(mismatch(format!("vector of length {}", self.cols), x.len()));
        }
        let y = (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(x.iter())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect();
        Ok(ComplexVector::from_vec(y))
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// `self^k` by repeated squaring; `self^0 = I`.
    pub fn matrix_power(&self, mut k: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut result = Self::identity(n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mat_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mat_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// `true` iff `||U U* - I||_F` and `||U* U - I||_F` are both within
    /// `abs_eps + rel_eps * n`.
    pub fn is_unitary(&self, tol: Tolerance) -> Result<bool> {
        let n = self.require_square()?;
        let adj = self.conj_transpose();
        let eye = Self::identity(n);
        let left = (&self.mat_mul(&adj)? - &eye).frobenius_norm();
        let right = (&adj.mat_mul(self)? - &eye).frobenius_norm();
        Ok(left.max(right) <= tol.abs_eps + tol.rel_eps * n as f64)
    }

    /// Imaginary parts are all within `abs_eps`.
    pub fn is_real(&self, tol: Tolerance) -> bool {
        self.data.iter().all(|z| z.im.abs() <= tol.abs_eps)
    }

    /// Orthonormal-ish basis of the null space, read off a row echelon form.
    ///
    /// Pivots with modulus at most `abs_eps + rel_eps * max_abs` count as
    /// zero. The returned vectors are unit-norm but not mutually orthogonal.
    pub fn null_space(&self, tol: Tolerance) -> Vec<ComplexVector> {
        let (m, n) = (self.rows, self.cols);
        let threshold = tol.abs_eps + tol.rel_eps * self.max_abs();
        let mut a = self.data.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            if row == m {
                break;
            }
            let (best, best_abs) = (row..m)
                .map(|r| (r, a[r * n + col].norm()))
                .fold((row, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best_abs <= threshold {
                continue;
            }
            for j in 0..n {
                a.swap(row * n + j, best * n + j);
            }
            let p = a[row * n + col];
            for j in 0..n {
                a[row * n + j] /= p;
            }
            for r in 0..m {
                if r == row {
                    continue;
                }
                let f = a[r * n + col];
                if f == ZERO {
                    continue;
                }
                for j in 0..n {
                    let v = a[row * n + j];
                    a[r * n + j] -= f * v;
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![ZERO; n];
                v[fc] = ONE;
                for (r, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = -a[r * n + fc];
                }
                ComplexVector::from_vec(v).normalized()
            })
            .collect()
    }
}

impl Index<(usize, usize)> for ComplexDense {
    type Output = Complex;
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.data[i * self.cols + j]
    }
}

fn zip_mat(a: &ComplexDense, b: &ComplexDense, f: impl Fn(Complex, Complex) -> Complex) -> ComplexDense {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "matrix shape mismatch");
    ComplexDense {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(&x, &y)| f(x, y)).collect(),
    }
}

impl Add for &ComplexDense {
    type Output = ComplexDense;
    fn add(self, rhs: &ComplexDense) -> ComplexDense {
        zip_mat(self, rhs, |x, y| x + y)
    }
}

impl Sub for &ComplexDense {
    type Output = ComplexDense;
    fn sub(self, rhs: &ComplexDense) -> ComplexDense {
        zip_mat(self, rhs, |x, y| x - y)
    }
}

impl Mul<Complex> for &ComplexDense {
    type Output = ComplexDense;
    fn mul(self, rhs: Complex) -> ComplexDense {
        self.map(|z| z * rhs)
    }
}

impl Neg for &ComplexDense {
    type Output = ComplexDense;
    fn neg(self) -> ComplexDense {
        self.map(|z| -z)
    }
}

pub(crate) fn fmt_complex(z: Complex) -> String {
    let clean = |x: f64| if x == 0.0 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re}")
    } else if im < 0.0 {
        format!("{re}-{}i", -im)
    } else {
        format!("{re}+{im}i")
    }
}

impl fmt::Display for ComplexDense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|&z| fmt_complex(z)).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// LU factorization with partial pivoting, `P A = L U`.
#[derive(Clone, Debug)]
pub struct Lu {
    n: usize,
    lu: Vec<Complex>,
    perm: Vec<usize>,
}

impl Lu {
    /// Factors a square matrix. A pivot with modulus at most
    /// `abs_eps + rel_eps * max_abs(A)` is treated as zero.
    pub fn factor(a: &ComplexDense, tol: Tolerance) -> Result<Self> {
        let n = a.require_square()?;
        let threshold = tol.abs_eps + tol.rel_eps * a.max_abs();
        let mut lu = a.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let (p, pabs) =
                (k..n)
                    .map(|r| (r, lu[r * n + k].norm()))
                    .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if pabs <= threshold {
                return Err(Error::SingularMatrix { step: k, pivot: pabs });
            }
            if p != k {
                for j in 0..n {
                    lu.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
            }
            let pivot = lu[k * n + k];
            for r in k + 1..n {
                let l = lu[r * n + k] / pivot;
                lu[r * n + k] = l;
                if l == ZERO {
                    continue;
                }
                for j in k + 1..n {
                    let u = lu[k * n + j];
                    lu[r * n + j] -= l * u;
                }
            }
        }
        Ok(Self { n, lu, perm })
    }

    pub fn solve(&self, w: &ComplexVector) -> Result<ComplexVector> {
        let n = self.n;
        if w.len() != n {
            return Err(mismatch(format!("right-hand side of length {n}"), w.len()));
        }
        let mut y: Vec<Complex> = self.perm.iter().map(|&p| w[p]).collect();
        for i in 0..n {
            let s: Complex = (0..i).map(|j| self.lu[i * n + j] * y[j]).sum();
            y[i] -= s;
        }
        for i in (0..n).rev() {
            let s: Complex = (i + 1..n).map(|j| self.lu[i * n + j] * y[j]).sum();
            y[i] = (y[i] - s) / self.lu[i * n + i];
        }
        Ok(ComplexVector::from_vec(y))
    }
}

/// Solves `A z = w` by LU with partial pivoting.
pub fn solve_dense(a: &ComplexDense, w: &ComplexVector, tol: Tolerance) -> Result<ComplexVector> {
    if a.cols != w.len() {
        return Err(mismatch(format!("right-hand side of length {}", a.cols), w.len()));
    }
    Lu::factor(a, tol)?.solve(w)
}
