//! Roots of unity, the unitary Fourier matrix and its skew twist.
//!
//! Conventions: `F*(j, k) = w^(j k) / sqrt(n)` with `w = exp(2 pi i / n)`
//! (0-based `j`, `k`), so `F` is the forward transform with the negative
//! exponent. `Omega = Diag(1, w, ..., w^(n-1))`, `Omega^(1/2)` uses
//! `s = exp(pi i / n)` in place of `w`, and `H* = Omega^(1/2) F*`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::{Complex, ComplexDense, ComplexVector};

/// The primitive roots `w = exp(2 pi i / n)` and `s = exp(pi i / n)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootOfUnity {
    n: usize,
    pub omega: Complex,
    pub sigma: Complex,
}

impl RootOfUnity {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize {
                n,
                reason: "roots of unity need n >= 1",
            });
        }
        let mut r = Self {
            n,
            omega: Complex::new(1.0, 0.0),
            sigma: Complex::new(1.0, 0.0),
        };
        r.omega = r.omega_pow(1);
        r.sigma = r.sigma_pow(1);
        Ok(r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `w^k`, evaluated from the reduced angle rather than by repeated
    /// multiplication.
    pub fn omega_pow(&self, k: i64) -> Complex {
        let m = k.rem_euclid(self.n as i64);
        turn(m, self.n as i64)
    }

    /// `s^k` with `s^n = -1`.
    pub fn sigma_pow(&self, k: i64) -> Complex {
        let m = k.rem_euclid(2 * self.n as i64);
        turn(m, 2 * self.n as i64)
    }
}

/// `exp(2 pi i m / d)` for `0 <= m < d`; quarter turns are exact.
fn turn(m: i64, d: i64) -> Complex {
    if (4 * m) % d == 0 {
        return match 4 * m / d {
            0 => Complex::new(1.0, 0.0),
            1 => Complex::new(0.0, 1.0),
            2 => Complex::new(-1.0, 0.0),
            _ => Complex::new(0.0, -1.0),
        };
    }
    let (s, c) = (2.0 * PI * m as f64 / d as f64).sin_cos();
    Complex::new(c, s)
}

/// Dense Fourier data of order `n`.
#[derive(Clone, Debug)]
pub struct FourierPack {
    pub n: usize,
    pub f_star: ComplexDense,
    pub omega_diag: ComplexVector,
    pub omega_half_diag: ComplexVector,
    pub h_star: ComplexDense,
}

impl FourierPack {
    /// The forward matrix `F = (F*)*`.
    pub fn f(&self) -> ComplexDense {
        self.f_star.conj_transpose()
    }

    pub fn h(&self) -> ComplexDense {
        self.h_star.conj_transpose()
    }

    pub fn omega(&self) -> ComplexDense {
        ComplexDense::diag(self.omega_diag.as_slice())
    }

    pub fn omega_half(&self) -> ComplexDense {
        ComplexDense::diag(self.omega_half_diag.as_slice())
    }
}

pub fn make_fourier_pack(n: usize) -> Result<FourierPack> {
    let root = RootOfUnity::new(n)?;
    let scale = 1.0 / (n as f64).sqrt();
    let f_star = ComplexDense::from_fn(n, n, |j, k| root.omega_pow((j * k) as i64) * scale);
    let omega_diag = ComplexVector::from_vec((0..n).map(|k| root.omega_pow(k as i64)).collect());
    let omega_half_diag = ComplexVector::from_vec((0..n).map(|k| root.sigma_pow(k as i64)).collect());
    let h_star = ComplexDense::from_fn(n, n, |j, k| omega_half_diag[j] * f_star.get(j, k));
    Ok(FourierPack {
        n,
        f_star,
        omega_diag,
        omega_half_diag,
        h_star,
    })
}

/// Reference transform by direct O(n^2) summation: `F x` when `inverse` is
/// false, `F* x` otherwise.
pub fn dft_direct(x: &ComplexVector, inverse: bool) -> ComplexVector {
    let n = x.len();
    let root = RootOfUnity::new(n).expect("vectors are non-empty");
    let sign = if inverse { 1 } else { -1 };
    let scale = 1.0 / (n as f64).sqrt();
    let out = (0..n)
        .map(|j| {
            let s: Complex = x
                .iter()
                .enumerate()
                .map(|(k, &xk)| root.omega_pow(sign * ((j * k) % n) as i64) * xk)
                .sum();
            s * scale
        })
        .collect();
    ComplexVector::from_vec(out)
}

/// Unitary DFT: `F x` (forward) or `F* x` (inverse). Uses an in-place
/// radix-2 transform when `n` is a power of two and the direct sum otherwise.
pub fn dft_apply(x: &ComplexVector, inverse: bool) -> ComplexVector {
    let n = x.len();
    if n >= 2 && n.is_power_of_two() {
        radix2(x, inverse)
    } else {
        dft_direct(x, inverse)
    }
}

fn radix2(x: &ComplexVector, inverse: bool) -> ComplexVector {
    let n = x.len();
    let root = RootOfUnity::new(n).expect("n >= 2");
    let bits = n.trailing_zeros();
    let mut a: Vec<Complex> = x.as_slice().to_vec();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if i < j {
            a.swap(i, j);
        }
    }
    let sign: i64 = if inverse { 1 } else { -1 };
    let mut len = 2;
    while len <= n {
        let stride = n / len;
        let half = len / 2;
        let twiddles: Vec<Complex> = (0..half).map(|m| root.omega_pow(sign * (m * stride) as i64)).collect();
        for start in (0..n).step_by(len) {
            for (m, &w) in twiddles.iter().enumerate() {
                let u = a[start + m];
                let v = a[start + m + half] * w;
                a[start + m] = u + v;
                a[start + m + half] = u - v;
            }
        }
        len <<= 1;
    }
    let scale = 1.0 / (n as f64).sqrt();
    ComplexVector::from_vec(a.into_iter().map(|z| z * scale).collect())
}

/// `H x = F (conj(Omega^(1/2)) x)` when `inverse` is false,
/// `H* x = Omega^(1/2) (F* x)` otherwise.
pub fn h_apply(x: &ComplexVector, inverse: bool) -> ComplexVector {
    let n = x.len();
    let root = RootOfUnity::new(n).expect("vectors are non-empty");
    if inverse {
        let y = dft_apply(x, true);
        ComplexVector::from_vec(
            y.iter()
                .enumerate()
                .map(|(k, &v)| root.sigma_pow(k as i64) * v)
                .collect(),
        )
    } else {
        let twisted = ComplexVector::from_vec(
            x.iter()
                .enumerate()
                .map(|(k, &v)| root.sigma_pow(-(k as i64)) * v)
                .collect(),
        );
        dft_apply(&twisted, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Tolerance;

    fn close(a: Complex, b: Complex, eps: f64) -> bool {
        (a - b).norm() <= eps
    }

    #[test]
    fn roots_have_unit_modulus() {
        for n in 1..=64 {
            let r = RootOfUnity::new(n).unwrap();
            assert!((r.omega.norm() - 1.0).abs() <= 1e-15);
            assert!((r.sigma.norm() - 1.0).abs() <= 1e-15);
            assert!(close(r.sigma * r.sigma, r.omega, 1e-14));
            assert!(close(r.sigma_pow(n as i64), Complex::new(-1.0, 0.0), 1e-15));
        }
        assert!(RootOfUnity::new(0).is_err());
        assert!(make_fourier_pack(0).is_err());
    }

    #[test]
    fn degenerate_pack() {
        let p = make_fourier_pack(1).unwrap();
        assert_eq!(p.f_star, ComplexDense::identity(1));
        assert_eq!(p.omega_diag.as_slice(), &[Complex::new(1.0, 0.0)]);
        let x = ComplexVector::new(vec![Complex::new(3.0, -1.0)]).unwrap();
        assert_eq!(h_apply(&x, false), x);
        assert_eq!(h_apply(&x, true), x);
    }

    #[test]
    fn order_two_pack() {
        let p = make_fourier_pack(2).unwrap();
        let r = 1.0 / 2f64.sqrt();
        let expect = ComplexDense::from_real_rows(&[[r, r], [r, -r]]).unwrap();
        assert!(p.f_star.max_abs_diff(&expect) < 1e-15);
        // first column of H* is (1, s)/sqrt 2 with s = i
        let col = p.h_star.column(0);
        assert!(close(col[0], Complex::new(r, 0.0), 1e-15));
        assert!(close(col[1], Complex::new(0.0, r), 1e-15));
        let e1 = ComplexVector::unit(2, 0);
        let via_apply = h_apply(&e1, true);
        assert!((&via_apply - &col).norm() < 1e-15);
    }

    #[test]
    fn order_four_omega() {
        let p = make_fourier_pack(4).unwrap();
        let expect = [
            Complex::new(1.0, 0.0),
            Complex::new(0.0, 1.0),
            Complex::new(-1.0, 0.0),
            Complex::new(0.0, -1.0),
        ];
        for (got, want) in p.omega_diag.iter().zip(expect) {
            assert!(close(*got, want, 1e-15));
        }
    }

    #[test]
    fn forward_examples() {
        let y = dft_apply(&ComplexVector::unit(4, 0), false);
        for z in &y {
            assert!(close(*z, Complex::new(0.5, 0.0), 1e-15));
        }
        let y = dft_apply(&ComplexVector::ones(4), false);
        assert!(close(y[0], Complex::new(2.0, 0.0), 1e-15));
        for z in &y.as_slice()[1..] {
            assert!(z.norm() < 1e-15);
        }
    }

    #[test]
    fn fourier_matrices_are_unitary_and_symmetric() {
        let tol = Tolerance::new(0.0, 1e-11).unwrap();
        for n in [1, 2, 3, 7, 16, 31] {
            let p = make_fourier_pack(n).unwrap();
            assert!(p.f_star.is_unitary(tol).unwrap());
            assert!(p.h_star.is_unitary(tol).unwrap());
            let f = p.f();
            assert_eq!(f, f.transpose());
        }
    }

    #[test]
    fn radix2_matches_direct() {
        for n in [2, 4, 8, 32, 64] {
            let x = ComplexVector::from_vec(
                (0..n)
                    .map(|k| Complex::new((k as f64 * 0.37).sin(), (k as f64 * 1.3).cos()))
                    .collect(),
            );
            for inverse in [false, true] {
                let d = (&radix2(&x, inverse) - &dft_direct(&x, inverse)).max_abs();
                assert!(d < 1e-12, "n={n} diff={d}");
            }
        }
    }
}
