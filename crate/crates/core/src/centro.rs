//! Exchange-matrix symmetry: even/odd vectors, centro-symmetric and
//! centro-skew matrices, and the orthonormal even/odd block form.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::circulant::EigenPair;
use crate::error::{mismatch, Error, Result};
use crate::linalg::{Complex, ComplexDense, ComplexVector, Lu, Tolerance, ONE, ZERO};

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidSize {
            n,
            reason: "the exchange matrix needs n >= 1",
        })
    } else {
        Ok(())
    }
}

/// `E_n(i, j) = 1` iff `i + j = n - 1` (0-based).
pub fn exchange_dense(n: usize) -> Result<ComplexDense> {
    require_positive(n)?;
    Ok(ComplexDense::from_fn(
        n,
        n,
        |i, j| if i + j == n - 1 { ONE } else { ZERO },
    ))
}

/// `E x` without forming `E`.
pub fn reverse(x: &ComplexVector) -> ComplexVector {
    let mut v = x.clone().into_inner();
    v.reverse();
    ComplexVector::from_vec(v)
}

/// `E X E`, i.e. `X` rotated by a half turn.
pub fn flip(x: &ComplexDense) -> Result<ComplexDense> {
    let n = x.require_square()?;
    Ok(ComplexDense::from_fn(n, n, |i, j| x.get(n - 1 - i, n - 1 - j)))
}

/// The dense projections `E_+ = (I + E)/2` and `E_- = (I - E)/2`.
pub fn projectors(n: usize) -> Result<(ComplexDense, ComplexDense)> {
    let e = exchange_dense(n)?;
    let eye = ComplexDense::identity(n);
    let half = Complex::new(0.5, 0.0);
    Ok((&(&eye + &e) * half, &(&eye - &e) * half))
}

/// `x = even + odd` with `E even = even` and `E odd = -odd`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvenOddSplit {
    pub even: ComplexVector,
    pub odd: ComplexVector,
}

pub fn even_odd_split(x: &ComplexVector) -> EvenOddSplit {
    let r = reverse(x);
    let half = Complex::new(0.5, 0.0);
    EvenOddSplit {
        even: &(x + &r) * half,
        odd: &(x - &r) * half,
    }
}

/// `X = sym + skew` with `E sym E = sym` and `E skew E = -skew`.
#[derive(Clone, Debug, PartialEq)]
pub struct CentroSplit {
    pub sym: ComplexDense,
    pub skew: ComplexDense,
}

pub fn centro_split(x: &ComplexDense) -> Result<CentroSplit> {
    let f = flip(x)?;
    let half = Complex::new(0.5, 0.0);
    Ok(CentroSplit {
        sym: &(x + &f) * half,
        skew: &(x - &f) * half,
    })
}

fn entry_bound(x: &ComplexDense, tol: Tolerance) -> f64 {
    tol.abs_eps + tol.rel_eps * x.max_abs()
}

/// Largest entrywise deviation of `X` from `E X E`.
pub fn centro_symmetric_deviation(x: &ComplexDense) -> Result<f64> {
    Ok(x.max_abs_diff(&flip(x)?))
}

/// Largest entrywise deviation of `X` from `-E X E`.
pub fn centro_skew_deviation(x: &ComplexDense) -> Result<f64> {
    Ok(x.max_abs_diff(&-&flip(x)?))
}

pub fn is_centro_symmetric(x: &ComplexDense, tol: Tolerance) -> Result<bool> {
    Ok(centro_symmetric_deviation(x)? <= entry_bound(x, tol))
}

pub fn is_centro_skew(x: &ComplexDense, tol: Tolerance) -> Result<bool> {
    Ok(centro_skew_deviation(x)? <= entry_bound(x, tol))
}

/// Orthonormal bases `P` of the even and `Q` of the odd subspace.
///
/// Paired columns `(e_k +- e_(n+1-k))/sqrt 2` come first in ascending `k`;
/// for odd `n` the middle unit vector is the last column of `P`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvenOddBasis {
    pub p_cols: ComplexDense,
    pub q_cols: ComplexDense,
}

impl EvenOddBasis {
    pub fn n(&self) -> usize {
        self.p_cols.rows()
    }

    pub fn r(&self) -> usize {
        self.p_cols.cols()
    }

    pub fn s(&self) -> usize {
        self.q_cols.cols()
    }

    /// The unitary matrix `(P, Q)`.
    pub fn unitary(&self) -> ComplexDense {
        self.p_cols.hstack(&self.q_cols).expect("same row count")
    }

    /// `P P*`, the projection onto even vectors.
    pub fn even_projector(&self) -> ComplexDense {
        self.p_cols.mat_mul(&self.p_cols.conj_transpose()).expect("conformant")
    }

    /// `Q Q*`, the projection onto odd vectors.
    pub fn odd_projector(&self) -> ComplexDense {
        self.q_cols.mat_mul(&self.q_cols.conj_transpose()).expect("conformant")
    }
}

pub fn even_odd_basis(n: usize) -> Result<EvenOddBasis> {
    require_positive(n)?;
    let half = n / 2;
    let r = n - half;
    let h = Complex::new(FRAC_1_SQRT_2, 0.0);
    let p_cols = ComplexDense::from_fn(n, r, |i, j| {
        if j < half {
            if i == j || i == n - 1 - j {
                h
            } else {
                ZERO
            }
        } else if i == half {
            ONE
        } else {
            ZERO
        }
    });
    let q_cols = ComplexDense::from_fn(n, half, |i, j| {
        if i == j {
            h
        } else if i == n - 1 - j {
            -h
        } else {
            ZERO
        }
    });
    Ok(EvenOddBasis { p_cols, q_cols })
}

/// `X` expressed in the basis `(P, Q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockForm {
    /// `P* X P`
    pub x11: ComplexDense,
    /// `P* X Q`
    pub x12: ComplexDense,
    /// `Q* X P`
    pub x21: ComplexDense,
    /// `Q* X Q`
    pub x22: ComplexDense,
}

impl BlockForm {
    /// `(P, Q) [[X11, X12], [X21, X22]] (P, Q)*`.
    pub fn reassemble(&self, basis: &EvenOddBasis) -> Result<ComplexDense> {
        let (p, q) = (&basis.p_cols, &basis.q_cols);
        let (ps, qs) = (p.conj_transpose(), q.conj_transpose());
        let a = p.mat_mul(&self.x11)?.mat_mul(&ps)?;
        let b = p.mat_mul(&self.x12)?.mat_mul(&qs)?;
        let c = q.mat_mul(&self.x21)?.mat_mul(&ps)?;
        let d = q.mat_mul(&self.x22)?.mat_mul(&qs)?;
        Ok(&(&a + &b) + &(&c + &d))
    }
}

pub fn block_form(x: &ComplexDense, basis: &EvenOddBasis) -> Result<BlockForm> {
    let n = x.require_square()?;
    if n != basis.n() {
        return Err(mismatch(
            format!("{}x{} matrix", basis.n(), basis.n()),
            format!("{n}x{n}"),
        ));
    }
    let (p, q) = (&basis.p_cols, &basis.q_cols);
    let (ps, qs) = (p.conj_transpose(), q.conj_transpose());
    let xp = x.mat_mul(p)?;
    let xq = x.mat_mul(q)?;
    Ok(BlockForm {
        x11: ps.mat_mul(&xp)?,
        x12: ps.mat_mul(&xq)?,
        x21: qs.mat_mul(&xp)?,
        x22: qs.mat_mul(&xq)?,
    })
}

/// Solves `A z = w` for centro-symmetric `A` through the two half-size
/// systems `(P* A P) y1 = P* w` and `(Q* A Q) y2 = Q* w`.
pub fn solve_centro_symmetric(a: &ComplexDense, w: &ComplexVector, tol: Tolerance) -> Result<ComplexVector> {
    let n = a.require_square()?;
    if w.len() != n {
        return Err(mismatch(format!("right-hand side of length {n}"), w.len()));
    }
    let deviation = centro_symmetric_deviation(a)?;
    if deviation > entry_bound(a, tol) {
        return Err(Error::NotCentroSymmetric { deviation });
    }
    let basis = even_odd_basis(n)?;
    let blocks = block_form(a, &basis)?;
    let (p, q) = (&basis.p_cols, &basis.q_cols);

    let y1 = Lu::factor(&blocks.x11, tol)?.solve(&p.conj_transpose().mat_vec(w)?)?;
    let mut z = p.mat_vec(&y1)?;
    if basis.s() > 0 {
        let y2 = Lu::factor(&blocks.x22, tol)?.solve(&q.conj_transpose().mat_vec(w)?)?;
        z = &z + &q.mat_vec(&y2)?;
    }
    Ok(z)
}

fn residual_bound(m: &ComplexDense, tol: Tolerance) -> f64 {
    tol.abs_eps + tol.rel_eps * m.frobenius_norm()
}

fn checked_residual(m: &ComplexDense, pair: &EigenPair, tol: Tolerance) -> Result<f64> {
    let residual = pair.residual(m)?;
    let bound = residual_bound(m, tol);
    if residual > bound {
        return Err(Error::ResidualViolation { residual, bound });
    }
    Ok(residual)
}

/// For centro-skew `K`, maps the eigen-pair `(lambda, z)` to `(-lambda, E z)`.
pub fn reflect_eigenpair(k: &ComplexDense, pair: &EigenPair, tol: Tolerance) -> Result<EigenPair> {
    let deviation = centro_skew_deviation(k)?;
    if deviation > entry_bound(k, tol) {
        return Err(Error::NotCentroSkew { deviation });
    }
    checked_residual(k, pair, tol)?;
    let out = EigenPair {
        value: -pair.value,
        vector: reverse(&pair.vector),
    };
    checked_residual(k, &out, tol)?;
    Ok(out)
}

/// For centro-symmetric `A` with eigen-pair `(lambda, z)`, the normalized
/// even part `E_+ z` and odd part `E_- z` are eigenvectors for the same
/// `lambda`. A part whose norm is within `abs_eps` is reported as `None`.
pub fn split_symmetric_eigenpair(
    a: &ComplexDense,
    pair: &EigenPair,
    tol: Tolerance,
) -> Result<(Option<EigenPair>, Option<EigenPair>)> {
    let deviation = centro_symmetric_deviation(a)?;
    if deviation > entry_bound(a, tol) {
        return Err(Error::NotCentroSymmetric { deviation });
    }
    checked_residual(a, pair, tol)?;
    let split = even_odd_split(&pair.vector);
    let lift = |v: ComplexVector| {
        (v.norm() > tol.abs_eps).then(|| EigenPair {
            value: pair.value,
            vector: v.normalized(),
        })
    };
    Ok((lift(split.even), lift(split.odd)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(v: &[f64]) -> ComplexVector {
        ComplexVector::from_real(v).unwrap()
    }

    #[test]
    fn exchange_pictures() {
        let e4 = ComplexDense::from_real_rows(&[
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
        ])
        .unwrap();
        assert_eq!(exchange_dense(4).unwrap(), e4);
        assert_eq!(exchange_dense(1).unwrap(), ComplexDense::identity(1));
        assert_eq!(e4.mat_mul(&e4).unwrap(), ComplexDense::identity(4));
        assert!(exchange_dense(0).is_err());
    }

    #[test]
    fn reverse_examples() {
        let even = real(&[1.0, 2.0, 3.0, 2.0, 1.0]);
        assert_eq!(reverse(&even), even);
        assert_eq!(
            reverse(&real(&[1.0, 2.0, 0.0, -2.0, -1.0])),
            real(&[-1.0, -2.0, 0.0, 2.0, 1.0])
        );
        let x = real(&[3.0, 1.0, 4.0, 1.0]);
        assert_eq!(reverse(&reverse(&x)), x);
    }

    #[test]
    fn split_examples() {
        let even = real(&[1.0, 2.0, 3.0, 2.0, 1.0]);
        let s = even_odd_split(&even);
        assert_eq!(s.even, even);
        assert_eq!(s.odd, ComplexVector::zeros(5));

        let s = even_odd_split(&real(&[1.0, 0.0, 0.0, 0.0, 0.0]));
        assert_eq!(s.even, real(&[0.5, 0.0, 0.0, 0.0, 0.5]));
        assert_eq!(s.odd, real(&[0.5, 0.0, 0.0, 0.0, -0.5]));

        let s = even_odd_split(&real(&[1.0, 2.0, 3.0, 4.0]));
        assert_eq!(s.even, real(&[2.5, 2.5, 2.5, 2.5]));
        assert_eq!(s.odd, real(&[-1.5, -0.5, 0.5, 1.5]));
    }

    #[test]
    fn split_of_exchange_is_symmetric() {
        let e4 = exchange_dense(4).unwrap();
        let s = centro_split(&e4).unwrap();
        assert_eq!(s.sym, e4);
        assert_eq!(s.skew, ComplexDense::zeros(4, 4));
        assert!(centro_split(&ComplexDense::zeros(2, 3)).is_err());
    }

    #[test]
    fn displayed_patterns() {
        let tol = Tolerance::default();
        let a: Vec<f64> = (1..=8).map(f64::from).collect();
        let sym = ComplexDense::from_real_rows(&[
            [a[0], a[1], a[2], a[3]],
            [a[4], a[5], a[6], a[7]],
            [a[7], a[6], a[5], a[4]],
            [a[3], a[2], a[1], a[0]],
        ])
        .unwrap();
        assert!(is_centro_symmetric(&sym, tol).unwrap());
        assert!(!is_centro_skew(&sym, tol).unwrap());
        let skew = ComplexDense::from_real_rows(&[
            [a[0], a[1], a[2], a[3]],
            [a[4], a[5], a[6], a[7]],
            [-a[7], -a[6], -a[5], -a[4]],
            [-a[3], -a[2], -a[1], -a[0]],
        ])
        .unwrap();
        assert!(is_centro_skew(&skew, tol).unwrap());
        assert!(!is_centro_symmetric(&skew, tol).unwrap());
        let zero = ComplexDense::zeros(4, 4);
        assert!(is_centro_symmetric(&zero, tol).unwrap());
        assert!(is_centro_skew(&zero, tol).unwrap());
        assert!(is_centro_skew(&ComplexDense::zeros(2, 3), tol).is_err());
    }

    #[test]
    fn basis_shapes() {
        let b = even_odd_basis(2).unwrap();
        let h = FRAC_1_SQRT_2;
        assert_eq!(b.p_cols, ComplexDense::from_real_rows(&[[h], [h]]).unwrap());
        assert_eq!(b.q_cols, ComplexDense::from_real_rows(&[[h], [-h]]).unwrap());
        let b = even_odd_basis(3).unwrap();
        assert_eq!((b.r(), b.s()), (2, 1));
        assert_eq!(b.p_cols.column(1), ComplexVector::unit(3, 1));
        let b = even_odd_basis(1).unwrap();
        assert_eq!((b.r(), b.s()), (1, 0));
        assert!(even_odd_basis(0).is_err());
        for n in 1..=9 {
            let u = even_odd_basis(n).unwrap().unitary();
            assert!(u.is_unitary(Tolerance::default()).unwrap());
        }
    }

    #[test]
    fn identity_blocks() {
        let b = even_odd_basis(5).unwrap();
        let f = block_form(&ComplexDense::identity(5), &b).unwrap();
        assert!(f.x11.max_abs_diff(&ComplexDense::identity(3)) < 1e-15);
        assert!(f.x22.max_abs_diff(&ComplexDense::identity(2)) < 1e-15);
        assert!(f.x12.max_abs() < 1e-15 && f.x21.max_abs() < 1e-15);
        assert!(block_form(&ComplexDense::identity(4), &b).is_err());
    }

    #[test]
    fn solve_small_cases() {
        let tol = Tolerance::default();
        let w = real(&[1.0, 2.0, 3.0, 4.0]);
        let z = solve_centro_symmetric(&ComplexDense::identity(4), &w, tol).unwrap();
        assert!((&z - &w).norm() < 1e-14);
        let z = solve_centro_symmetric(&exchange_dense(4).unwrap(), &w, tol).unwrap();
        assert!((&z - &real(&[4.0, 3.0, 2.0, 1.0])).norm() < 1e-14);
        let z = solve_centro_symmetric(&ComplexDense::identity(1), &real(&[2.0]), tol).unwrap();
        assert_eq!(z, real(&[2.0]));
    }

    #[test]
    fn solve_rejects_asymmetric_and_singular() {
        let tol = Tolerance::default();
        let a = ComplexDense::from_real_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        assert!(matches!(
            solve_centro_symmetric(&a, &real(&[1.0, 1.0]), tol),
            Err(Error::NotCentroSymmetric { .. })
        ));
        // P* A P = 0 here
        let a = ComplexDense::from_real_rows(&[[1.0, -1.0], [-1.0, 1.0]]).unwrap();
        assert!(matches!(
            solve_centro_symmetric(&a, &real(&[1.0, 0.0]), tol),
            Err(Error::SingularMatrix { .. })
        ));
    }

    #[test]
    fn reflect_examples() {
        let tol = Tolerance::default();
        let k = ComplexDense::from_real_rows(&[[0.0, 2.0], [-2.0, 0.0]]).unwrap();
        let h = FRAC_1_SQRT_2;
        let pair = EigenPair {
            value: Complex::new(0.0, 2.0),
            vector: ComplexVector::new(vec![Complex::new(h, 0.0), Complex::new(0.0, h)]).unwrap(),
        };
        let out = reflect_eigenpair(&k, &pair, tol).unwrap();
        assert_eq!(out.value, Complex::new(0.0, -2.0));
        assert_eq!(
            out.vector,
            ComplexVector::new(vec![Complex::new(0.0, h), Complex::new(h, 0.0)]).unwrap()
        );

        let bad = EigenPair {
            value: Complex::new(1.0, 0.0),
            vector: pair.vector.clone(),
        };
        assert!(matches!(
            reflect_eigenpair(&k, &bad, tol),
            Err(Error::ResidualViolation { .. })
        ));
        let not_skew = ComplexDense::identity(2);
        assert!(matches!(
            reflect_eigenpair(&not_skew, &pair, tol),
            Err(Error::NotCentroSkew { .. })
        ));
    }

    #[test]
    fn zero_eigenvalue_reflection() {
        let tol = Tolerance::default();
        let k = ComplexDense::from_real_rows(&[[1.0, -1.0], [1.0, -1.0]]).unwrap();
        assert!(is_centro_skew(&k, tol).unwrap());
        let z = real(&[1.0, 1.0]).normalized();
        let out = reflect_eigenpair(
            &k,
            &EigenPair {
                value: ZERO,
                vector: z.clone(),
            },
            tol,
        )
        .unwrap();
        assert_eq!(out.value, -ZERO);
        assert_eq!(out.vector, z);
    }
}
