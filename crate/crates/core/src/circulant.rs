//! Circulant and skew-circulant matrices stored by their first row.
//!
//! `Circ(c)` equals `p_c(pi)` and `SCirc(a)` equals `p_a(eta)`, where `pi`
//! is the cyclic up-shift, `eta` the same shift with `-1` wrapping into the
//! lower-left corner, and `p_a(t) = a_1 + a_2 t + ... + a_n t^(n-1)`.
//! Products stay in the coefficient domain; matrix-vector products and
//! spectra go through the Fourier transform.

use crate::dft::{dft_apply, h_apply, make_fourier_pack, RootOfUnity};
use crate::error::{mismatch, Error, Result};
use crate::linalg::{Complex, ComplexDense, ComplexVector, ZERO};

/// Horner evaluation of `p_a(t)`.
pub fn poly_eval(a: &ComplexVector, t: Complex) -> Complex {
    a.iter().rev().fold(ZERO, |acc, &coef| acc * t + coef)
}

/// An eigenvalue with a unit-norm eigenvector.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenPair {
    pub value: Complex,
    pub vector: ComplexVector,
}

impl EigenPair {
    /// `||M v - lambda v||`.
    pub fn residual(&self, m: &ComplexDense) -> Result<f64> {
        let mv = m.mat_vec(&self.vector)?;
        Ok((&mv - &(&self.vector * self.value)).norm())
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(mismatch(format!("length {expected}"), found))
    }
}

fn basic_coeffs(n: usize) -> Result<ComplexVector> {
    if n < 2 {
        return Err(Error::InvalidSize {
            n,
            reason: "the basic shift needs n >= 2",
        });
    }
    Ok(ComplexVector::unit(n, 1))
}

/// `Circ(c_1, ..., c_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Circulant {
    coeffs: ComplexVector,
}

impl Circulant {
    pub fn new(coeffs: ComplexVector) -> Self {
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Ok(Self::new(ComplexVector::from_real(coeffs)?))
    }

    /// The basic circulant `Circ(0, 1, 0, ..., 0)`.
    pub fn basic(n: usize) -> Result<Self> {
        Ok(Self::new(basic_coeffs(n)?))
    }

    pub fn identity(n: usize) -> Self {
        Self::new(ComplexVector::unit(n, 0))
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &ComplexVector {
        &self.coeffs
    }

    pub fn dense(&self) -> ComplexDense {
        let n = self.n();
        ComplexDense::from_fn(n, n, |i, j| self.coeffs[(j + n - i) % n])
    }

    /// Coefficients `(c_1, c_n, c_(n-1), ..., c_2)`.
    pub fn transpose(&self) -> Self {
        let n = self.n();
        Self::new(ComplexVector::from_vec(
            (0..n).map(|k| self.coeffs[(n - k) % n]).collect(),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_len(self.n(), other.n())?;
        Ok(Self::new(&self.coeffs + &other.coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_len(self.n(), other.n())?;
        Ok(Self::new(&self.coeffs - &other.coeffs))
    }

    /// Cyclic convolution of the coefficient vectors.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.n();
        check_len(n, other.n())?;
        let mut out = vec![ZERO; n];
        for (j, &a) in self.coeffs.iter().enumerate() {
            for (k, &b) in other.coeffs.iter().enumerate() {
                out[(j + k) % n] += a * b;
            }
        }
        Ok(Self::new(ComplexVector::from_vec(out)))
    }

    /// `p_c(w^k)` for `k = 0..n`, read off one inverse transform.
    pub fn eigenvalues(&self) -> Vec<Complex> {
        let scale = (self.n() as f64).sqrt();
        dft_apply(&self.coeffs, true).iter().map(|&z| z * scale).collect()
    }

    /// `Circ(c) x = F* p_c(Omega) F x`.
    pub fn matvec(&self, x: &ComplexVector) -> Result<ComplexVector> {
        check_len(self.n(), x.len())?;
        let lambda = self.eigenvalues();
        let fx = dft_apply(x, false);
        let scaled = ComplexVector::from_vec(fx.iter().zip(&lambda).map(|(a, b)| a * b).collect());
        Ok(dft_apply(&scaled, true))
    }

    /// Pair `k` is `(p_c(w^k), column k of F*)`.
    pub fn eigenpairs(&self) -> Vec<EigenPair> {
        let pack = make_fourier_pack(self.n()).expect("n >= 1");
        self.eigenvalues()
            .into_iter()
            .enumerate()
            .map(|(k, value)| EigenPair {
                value,
                vector: pack.f_star.column(k),
            })
            .collect()
    }
}

/// `SCirc(a_1, ..., a_n)`: `Circ(a)` with the strict lower triangle negated.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewCirculant {
    coeffs: ComplexVector,
}

impl SkewCirculant {
    pub fn new(coeffs: ComplexVector) -> Self {
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Ok(Self::new(ComplexVector::from_real(coeffs)?))
    }

    /// The basic skew-circulant `SCirc(0, 1, 0, ..., 0)`.
    pub fn basic(n: usize) -> Result<Self> {
        Ok(Self::new(basic_coeffs(n)?))
    }

    pub fn identity(n: usize) -> Self {
        Self::new(ComplexVector::unit(n, 0))
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &ComplexVector {
        &self.coeffs
    }

    pub fn dense(&self) -> ComplexDense {
        let n = self.n();
        ComplexDense::from_fn(n, n, |i, j| {
            if j >= i {
                self.coeffs[j - i]
            } else {
                -self.coeffs[j + n - i]
            }
        })
    }

    /// Coefficients `(a_1, -a_n, -a_(n-1), ..., -a_2)`.
    pub fn transpose(&self) -> Self {
        let n = self.n();
        Self::new(ComplexVector::from_vec(
            (0..n)
                .map(|k| if k == 0 { self.coeffs[0] } else { -self.coeffs[n - k] })
                .collect(),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_len(self.n(), other.n())?;
        Ok(Self::new(&self.coeffs + &other.coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_len(self.n(), other.n())?;
        Ok(Self::new(&self.coeffs - &other.coeffs))
    }

    /// Negacyclic convolution (products modulo `t^n + 1`).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.n();
        check_len(n, other.n())?;
        let mut out = vec![ZERO; n];
        for (j, &a) in self.coeffs.iter().enumerate() {
            for (k, &b) in other.coeffs.iter().enumerate() {
                if j + k < n {
                    out[j + k] += a * b;
                } else {
                    out[j + k - n] -= a * b;
                }
            }
        }
        Ok(Self::new(ComplexVector::from_vec(out)))
    }

    /// `p_a(s^(2k+1))` for `k = 0..n`, i.e. `sqrt(n) F* Omega^(1/2) a`.
    pub fn eigenvalues(&self) -> Vec<Complex> {
        let n = self.n();
        let root = RootOfUnity::new(n).expect("n >= 1");
        let twisted = ComplexVector::from_vec(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, &a)| root.sigma_pow(j as i64) * a)
                .collect(),
        );
        let scale = (n as f64).sqrt();
        dft_apply(&twisted, true).iter().map(|&z| z * scale).collect()
    }

    /// `SCirc(a) x = H* p_a(s Omega) H x`.
    pub fn matvec(&self, x: &ComplexVector) -> Result<ComplexVector> {
        check_len(self.n(), x.len())?;
        let lambda = self.eigenvalues();
        let hx = h_apply(x, false);
        let scaled = ComplexVector::from_vec(hx.iter().zip(&lambda).map(|(a, b)| a * b).collect());
        Ok(h_apply(&scaled, true))
    }

    /// Pair `k` is `(p_a(s^(2k+1)), column k of H*)`.
    pub fn eigenpairs(&self) -> Vec<EigenPair> {
        let pack = make_fourier_pack(self.n()).expect("n >= 1");
        self.eigenvalues()
            .into_iter()
            .enumerate()
            .map(|(k, value)| EigenPair {
                value,
                vector: pack.h_star.column(k),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ONE;

    fn re(x: f64) -> Complex {
        Complex::new(x, 0.0)
    }

    fn rows(m: &[&[f64]]) -> ComplexDense {
        ComplexDense::from_real_rows(m).unwrap()
    }

    #[test]
    fn basic_circulant_pictures() {
        let pi4 = rows(&[
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
            &[1.0, 0.0, 0.0, 0.0],
        ]);
        assert_eq!(Circulant::basic(4).unwrap().dense(), pi4);
        let eta4 = rows(&[
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
            &[-1.0, 0.0, 0.0, 0.0],
        ]);
        assert_eq!(SkewCirculant::basic(4).unwrap().dense(), eta4);
        assert!(Circulant::basic(1).is_err());
        assert!(SkewCirculant::basic(0).is_err());
    }

    #[test]
    fn small_dense_realizations() {
        let c = Complex::new(2.5, -1.0);
        let one = ComplexVector::new(vec![c]).unwrap();
        assert_eq!(Circulant::new(one.clone()).dense(), ComplexDense::diag(&[c]));
        assert_eq!(SkewCirculant::new(one).dense(), ComplexDense::diag(&[c]));
        assert_eq!(Circulant::identity(4).dense(), ComplexDense::identity(4));
        assert_eq!(
            SkewCirculant::from_real(&[0.0, 1.0]).unwrap().dense(),
            rows(&[&[0.0, 1.0], &[-1.0, 0.0]])
        );
    }

    #[test]
    fn general_circ_layout() {
        let c = Circulant::from_real(&[1.0, 2.0, 3.0]).unwrap().dense();
        assert_eq!(c, rows(&[&[1.0, 2.0, 3.0], &[3.0, 1.0, 2.0], &[2.0, 3.0, 1.0]]));
        let s = SkewCirculant::from_real(&[1.0, 2.0, 3.0]).unwrap().dense();
        assert_eq!(s, rows(&[&[1.0, 2.0, 3.0], &[-3.0, 1.0, 2.0], &[-2.0, -3.0, 1.0]]));
    }

    #[test]
    fn poly_eval_examples() {
        let a = ComplexVector::from_real(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(poly_eval(&a, re(2.0)), re(17.0));
        let t = Complex::new(0.3, -0.7);
        assert_eq!(poly_eval(&ComplexVector::unit(5, 1), t), t);
        assert_eq!(poly_eval(&ComplexVector::new(vec![re(4.0)]).unwrap(), t), re(4.0));
    }

    #[test]
    fn matvec_examples() {
        let x = ComplexVector::from_real(&[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        let y = Circulant::basic(5).unwrap().matvec(&x).unwrap();
        let want = ComplexVector::from_real(&[2.0, 3.0, 4.0, 5.0, 1.0]).unwrap();
        assert!((&y - &want).norm() < 1e-13);

        let id = Circulant::identity(5).matvec(&x).unwrap();
        assert!((&id - &x).norm() < 1e-13);

        let c = Circulant::from_real(&[1.0, -2.0, 0.5, 3.0]).unwrap();
        let y = c.matvec(&ComplexVector::ones(4)).unwrap();
        assert!((&y - &(&ComplexVector::ones(4) * re(2.5))).norm() < 1e-13);

        let eta2 = SkewCirculant::basic(2).unwrap();
        let y = eta2.matvec(&ComplexVector::unit(2, 0)).unwrap();
        assert!((&y - &ComplexVector::from_real(&[0.0, -1.0]).unwrap()).norm() < 1e-14);

        let eta4 = SkewCirculant::basic(4).unwrap();
        let x = ComplexVector::new(vec![re(1.0), Complex::new(0.0, 2.0), re(-1.0), re(0.5)]).unwrap();
        let mut y = x.clone();
        for _ in 0..4 {
            y = eta4.matvec(&y).unwrap();
        }
        assert!((&y + &x).norm() < 1e-13);

        assert!(Circulant::identity(3).matvec(&ComplexVector::ones(4)).is_err());
        assert!(SkewCirculant::identity(3).matvec(&ComplexVector::ones(2)).is_err());
    }

    #[test]
    fn basic_circulant_spectrum() {
        let vals = Circulant::basic(4).unwrap().eigenvalues();
        let want = [re(1.0), Complex::new(0.0, 1.0), re(-1.0), Complex::new(0.0, -1.0)];
        for (v, w) in vals.iter().zip(want) {
            assert!((v - w).norm() < 1e-14);
        }
        let scalar = Circulant::new(&ComplexVector::unit(6, 0) * re(3.0));
        assert!(scalar.eigenvalues().iter().all(|v| (v - re(3.0)).norm() < 1e-14));
    }

    #[test]
    fn antisymmetric_shift_spectrum() {
        let c = Circulant::from_real(&[0.0, 1.0, 0.0, 0.0, -1.0]).unwrap();
        let dense = c.dense();
        for (k, pair) in c.eigenpairs().iter().enumerate() {
            let want = Complex::new(0.0, 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 5.0).sin());
            assert!((pair.value - want).norm() < 1e-13);
            assert!(pair.residual(&dense).unwrap() < 1e-12);
        }
    }

    #[test]
    fn basic_skew_spectrum() {
        let vals = SkewCirculant::basic(2).unwrap().eigenvalues();
        assert!((vals[0] - Complex::new(0.0, 1.0)).norm() < 1e-15);
        assert!((vals[1] - Complex::new(0.0, -1.0)).norm() < 1e-15);

        let eta4 = SkewCirculant::basic(4).unwrap();
        let dense = eta4.dense();
        for (k, pair) in eta4.eigenpairs().iter().enumerate() {
            let theta = (2 * k + 1) as f64 * std::f64::consts::PI / 4.0;
            assert!((pair.value - Complex::new(theta.cos(), theta.sin())).norm() < 1e-14);
            assert!(pair.residual(&dense).unwrap() < 1e-13);
        }
        let scalar = SkewCirculant::new(&ComplexVector::unit(3, 0) * Complex::new(1.0, 1.0));
        assert!(scalar
            .eigenvalues()
            .iter()
            .all(|v| (v - Complex::new(1.0, 1.0)).norm() < 1e-14));
    }

    #[test]
    fn products() {
        let pi2 = Circulant::basic(2).unwrap();
        assert_eq!(pi2.mul(&pi2).unwrap(), Circulant::identity(2));
        let eta2 = SkewCirculant::basic(2).unwrap();
        assert_eq!(
            eta2.mul(&eta2).unwrap(),
            SkewCirculant::new(ComplexVector::from_real(&[-1.0, 0.0]).unwrap())
        );
        let a = Circulant::from_real(&[1.0, 2.0, -3.0, 0.5]).unwrap();
        assert_eq!(a.mul(&Circulant::identity(4)).unwrap(), a);
        assert_eq!(a.mul(&a).unwrap().dense(), a.dense().mat_mul(&a.dense()).unwrap());
        let s = SkewCirculant::from_real(&[1.0, 2.0, -3.0, 0.5]).unwrap();
        assert_eq!(s.mul(&s).unwrap().dense(), s.dense().mat_mul(&s.dense()).unwrap());
        assert!(a.mul(&Circulant::identity(3)).is_err());
        assert!(s.mul(&SkewCirculant::identity(2)).is_err());
    }

    #[test]
    fn transposes_stay_structured() {
        let c = Circulant::from_real(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(c.transpose().dense(), c.dense().transpose());
        let s = SkewCirculant::from_real(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(s.transpose().dense(), s.dense().transpose());
        assert_eq!(c.transpose().coeffs().as_slice(), &[ONE, re(4.0), re(3.0), re(2.0)]);
    }
}
