//! Circulant, skew-circulant and centro-symmetric matrix algebra built around
//! the near-Toeplitz tridiagonal operator `R_n`.
//!
//! `R_n` has `-1` on the subdiagonal, `+1` on the superdiagonal and diagonal
//! `(-1, 0, ..., 0, +1)`. On even vectors (`E x = x`) it coincides with the
//! circulant `pi - pi^T`; on odd vectors (`E x = -x`) with the
//! skew-circulant `eta - eta^T`. Both are diagonalized by Fourier-type
//! unitary matrices, so [`relation::SpecialTridiag::apply_via_relation`] can
//! apply `R_n` through two transforms.
//!
//! Modules:
//!
//! - [`linalg`]: dense complex reference arithmetic (products, LU, powers).
//! - [`dft`]: roots of unity, `F*`, `Omega`, `Omega^(1/2)`, `H*`, transforms.
//! - [`circulant`]: `Circ(c)`, `SCirc(a)`, products, fast matvec, spectra.
//! - [`centro`]: exchange matrix, even/odd projections, block forms, solves.
//! - [`relation`]: `R_n`, rank-one defects, sign patterns, nilpotent scaling.
//! - [`verify`], [`report`], [`cli`]: seeded suites and the command line.

pub mod centro;
pub mod circulant;
pub mod cli;
pub mod dft;
pub mod error;
pub mod linalg;
pub mod relation;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{Complex, ComplexDense, ComplexVector, Tolerance};
