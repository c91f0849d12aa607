//! The near-Toeplitz tridiagonal operator `R_n` and its circulant
//! restrictions.
//!
//! `R_n` has `-1` on the subdiagonal, `+1` on the superdiagonal and diagonal
//! `(-1, 0, ..., 0, +1)`. It is centro-skew, and on even vectors it acts as
//! `pi - pi^T` while on odd vectors it acts as `eta - eta^T`:
//!
//! ```text
//! R_n = (pi - pi^T) E_+ + (eta - eta^T) E_-
//! ```
//!
//! The defects `R - (pi - pi^T) = (e_n + e_1)(e_n - e_1)^T` and
//! `R - (eta - eta^T) = (e_n - e_1)(e_n + e_1)^T` are rank one and vanish on
//! the even and odd subspace respectively.

use std::f64::consts::PI;

use crate::centro::even_odd_split;
use crate::circulant::{poly_eval, Circulant, SkewCirculant};
use crate::dft::RootOfUnity;
use crate::error::{mismatch, Error, Result};
use crate::linalg::{Complex, ComplexDense, ComplexVector, Tolerance, ONE, ZERO};

fn require_two(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidSize {
            n,
            reason: "R_n is defined for n >= 2",
        })
    } else {
        Ok(())
    }
}

/// `R_n`, stored by its dimension only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecialTridiag {
    n: usize,
}

impl SpecialTridiag {
    pub fn new(n: usize) -> Result<Self> {
        require_two(n)?;
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dense(&self) -> ComplexDense {
        let n = self.n;
        ComplexDense::from_fn(n, n, |i, j| {
            let v = if j == i + 1 || (i == j && i == n - 1) {
                1.0
            } else if i == j + 1 || (i == j && i == 0) {
                -1.0
            } else {
                0.0
            };
            Complex::new(v, 0.0)
        })
    }

    /// O(n) stencil `y_i = x_(i+1) - x_(i-1)` with the corner diagonal terms.
    pub fn apply(&self, x: &ComplexVector) -> Result<ComplexVector> {
        let n = self.n;
        if x.len() != n {
            return Err(mismatch(format!("vector of length {n}"), x.len()));
        }
        let y = (0..n)
            .map(|i| {
                let up = if i + 1 < n { x[i + 1] } else { x[i] };
                let down = if i > 0 { x[i - 1] } else { x[i] };
                up - down
            })
            .collect();
        Ok(ComplexVector::from_vec(y))
    }

    /// Applies `R_n` as `(pi - pi^T)` on the even part plus `(eta - eta^T)`
    /// on the odd part, both through the Fourier diagonalizations.
    pub fn apply_via_relation(&self, x: &ComplexVector) -> Result<ComplexVector> {
        let n = self.n;
        if x.len() != n {
            return Err(mismatch(format!("vector of length {n}"), x.len()));
        }
        let split = even_odd_split(x);
        let even = pi_minus_pit_coeffs(n)?.matvec(&split.even)?;
        let odd = eta_minus_etat_coeffs(n)?.matvec(&split.odd)?;
        Ok(&even + &odd)
    }
}

pub fn r_dense(n: usize) -> Result<ComplexDense> {
    Ok(SpecialTridiag::new(n)?.dense())
}

/// The lower shift `Z_n` (ones on the subdiagonal).
pub fn lower_shift_dense(n: usize) -> ComplexDense {
    ComplexDense::from_fn(n, n, |i, j| if i == j + 1 { ONE } else { ZERO })
}

/// `pi_n - pi_n^T` as the circulant with coefficients `(0, 1, 0, ..., 0, -1)`.
pub fn pi_minus_pit_coeffs(n: usize) -> Result<Circulant> {
    let pi = Circulant::basic(n)?;
    pi.sub(&pi.transpose())
}

/// `eta_n - eta_n^T` as the skew-circulant with coefficients
/// `(0, 1, 0, ..., 0, 1)`.
pub fn eta_minus_etat_coeffs(n: usize) -> Result<SkewCirculant> {
    let eta = SkewCirculant::basic(n)?;
    eta.sub(&eta.transpose())
}

/// The two rank-one defects of the relation.
#[derive(Clone, Debug, PartialEq)]
pub struct RankOneDefects {
    /// `R_n - (pi - pi^T)`, equal to `(e_n + e_1)(e_n - e_1)^T`.
    pub even_defect: ComplexDense,
    /// `R_n - (eta - eta^T)`, equal to `(e_n - e_1)(e_n + e_1)^T`.
    pub odd_defect: ComplexDense,
}

/// Computes both defects and checks them entry-for-entry against their
/// rank-one forms.
pub fn rank_one_defects(n: usize) -> Result<RankOneDefects> {
    let r = r_dense(n)?;
    let even_defect = &r - &pi_minus_pit_coeffs(n)?.dense();
    let odd_defect = &r - &eta_minus_etat_coeffs(n)?.dense();

    let e1 = ComplexVector::unit(n, 0);
    let en = ComplexVector::unit(n, n - 1);
    let plus = &en + &e1;
    let minus = &en - &e1;
    if even_defect != ComplexDense::outer(&plus, &minus) {
        return Err(Error::IdentityViolation(format!(
            "R - (pi - pi^T) != (e_n + e_1)(e_n - e_1)^T at n = {n}"
        )));
    }
    if odd_defect != ComplexDense::outer(&minus, &plus) {
        return Err(Error::IdentityViolation(format!(
            "R - (eta - eta^T) != (e_n - e_1)(e_n + e_1)^T at n = {n}"
        )));
    }
    Ok(RankOneDefects {
        even_defect,
        odd_defect,
    })
}

/// Eigenvalues of `R_n` restricted to even and to odd vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct RestrictionSpectra {
    /// `2i sin(2 pi k / n)`, `k = 0..n`: spectrum of `pi - pi^T`.
    pub even: Vec<Complex>,
    /// `2i sin((2k + 1) pi / n)`, `k = 0..n`: spectrum of `eta - eta^T`.
    pub odd: Vec<Complex>,
}

/// Evaluates both spectra with `poly_eval` at the roots of unity and
/// cross-checks them against the transform-based eigenvalues.
pub fn restriction_spectra(n: usize) -> Result<RestrictionSpectra> {
    let circ = pi_minus_pit_coeffs(n)?;
    let skew = eta_minus_etat_coeffs(n)?;
    let root = RootOfUnity::new(n)?;
    let even: Vec<Complex> = (0..n)
        .map(|k| poly_eval(circ.coeffs(), root.omega_pow(k as i64)))
        .collect();
    let odd: Vec<Complex> = (0..n)
        .map(|k| poly_eval(skew.coeffs(), root.sigma_pow(2 * k as i64 + 1)))
        .collect();

    let bound = 1e-12 * n as f64;
    let check = |direct: &[Complex], fast: Vec<Complex>, what: &str| -> Result<()> {
        let worst = direct
            .iter()
            .zip(&fast)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        if worst > bound {
            return Err(Error::IdentityViolation(format!(
                "{what} spectrum disagrees with transform by {worst:e} at n = {n}"
            )));
        }
        Ok(())
    };
    check(&even, circ.eigenvalues(), "even")?;
    check(&odd, skew.eigenvalues(), "odd")?;
    Ok(RestrictionSpectra { even, odd })
}

/// Closed forms of the restriction spectra, for comparison.
pub fn restriction_spectra_closed_form(n: usize) -> (Vec<Complex>, Vec<Complex>) {
    let nf = n as f64;
    let even = (0..n)
        .map(|k| Complex::new(0.0, 2.0 * (2.0 * PI * k as f64 / nf).sin()))
        .collect();
    let odd = (0..n)
        .map(|k| Complex::new(0.0, 2.0 * ((2 * k + 1) as f64 * PI / nf).sin()))
        .collect();
    (even, odd)
}

/// A square matrix over `{-1, 0, +1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignPattern {
    n: usize,
    entries: Vec<i8>,
}

impl SignPattern {
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(mismatch(format!("{} entries", n * n), entries.len()));
        }
        let entries = entries
            .into_iter()
            .enumerate()
            .map(|(index, value)| match value {
                -1..=1 => Ok(value as i8),
                _ => Err(Error::InvalidSignEntry { index, value }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn dense(&self) -> ComplexDense {
        ComplexDense::from_fn(self.n, self.n, |i, j| Complex::new(f64::from(self.get(i, j)), 0.0))
    }
}

/// Entrywise signum of a real square matrix with dead zone
/// `|a| <= abs_eps` mapped to zero.
pub fn sign_pattern_of(a: &ComplexDense, tol: Tolerance) -> Result<SignPattern> {
    let n = a.require_square()?;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let z = a.get(i, j);
            if z.im.abs() > tol.abs_eps {
                return Err(Error::ComplexEntries {
                    row: i,
                    col: j,
                    magnitude: z.im.abs(),
                });
            }
            entries.push(if z.re > tol.abs_eps {
                1
            } else if z.re < -tol.abs_eps {
                -1
            } else {
                0
            });
        }
    }
    Ok(SignPattern { n, entries })
}

pub fn has_sign_pattern(a: &ComplexDense, pattern: &SignPattern, tol: Tolerance) -> Result<bool> {
    if a.rows() != pattern.n() || a.cols() != pattern.n() {
        return Ok(false);
    }
    Ok(sign_pattern_of(a, tol)? == *pattern)
}

/// The positive diagonal `f_k = 1 / (2 sin theta_k)`,
/// `theta_k = (2k - 1) pi / (2n)` for `k = 1..n`.
#[derive(Clone, Debug, PartialEq)]
pub struct NilpotentScaling {
    pub n: usize,
    pub f: ComplexVector,
}

impl NilpotentScaling {
    /// `Diag(f) R_n`.
    pub fn scaled_operator(&self) -> ComplexDense {
        let r = r_dense(self.n).expect("n >= 2");
        ComplexDense::from_fn(self.n, self.n, |i, j| self.f[i] * r.get(i, j))
    }
}

pub fn nilpotent_scaling(n: usize) -> Result<NilpotentScaling> {
    require_two(n)?;
    let f = (1..=n)
        .map(|k| {
            let theta = (2 * k - 1) as f64 * PI / (2 * n) as f64;
            Complex::new(1.0 / (2.0 * theta.sin()), 0.0)
        })
        .collect();
    Ok(NilpotentScaling {
        n,
        f: ComplexVector::from_vec(f),
    })
}

pub const NILPOTENT_TOL: f64 = 1e-8;

/// Outcome of powering a matrix to its dimension.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NilpotencyCheck {
    /// `||A^n||_F`
    pub power_norm: f64,
    /// `tol * max(1, ||A||_F)^n`
    pub bound: f64,
}

impl NilpotencyCheck {
    pub fn passed(&self) -> bool {
        self.power_norm <= self.bound
    }
}

pub fn nilpotency_check(a: &ComplexDense, tol: f64) -> Result<NilpotencyCheck> {
    let n = a.require_square()?;
    let power_norm = a.matrix_power(n as u32)?.frobenius_norm();
    let bound = tol * a.frobenius_norm().max(1.0).powi(n as i32);
    Ok(NilpotencyCheck { power_norm, bound })
}

/// `||A^n||_F <= 1e-8 * max(1, ||A||_F)^n`.
pub fn verify_nilpotent(a: &ComplexDense) -> Result<bool> {
    Ok(nilpotency_check(a, NILPOTENT_TOL)?.passed())
}
