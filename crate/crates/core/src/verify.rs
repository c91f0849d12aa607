//! Seeded invariant suites behind `centroskew verify`.
//!
//! Randomness comes from ChaCha8 seeded with `seed`; each `(suite, n)` pair
//! reads its own ChaCha stream, so `verify all` produces the same numbers as
//! running the suites one at a time.

use std::ops::RangeInclusive;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::centro::{
    block_form, centro_skew_deviation, centro_split, centro_symmetric_deviation, even_odd_basis, even_odd_split,
    projectors, reverse, solve_centro_symmetric,
};
use crate::circulant::{Circulant, SkewCirculant};
use crate::dft::make_fourier_pack;
use crate::error::Result;
use crate::linalg::{solve_dense, Complex, ComplexDense, ComplexVector, Tolerance};
use crate::relation::{
    eta_minus_etat_coeffs, has_sign_pattern, nilpotency_check, nilpotent_scaling, pi_minus_pit_coeffs, r_dense,
    rank_one_defects, restriction_spectra, sign_pattern_of, SpecialTridiag, NILPOTENT_TOL,
};
use crate::report::Metric;

/// Random samples drawn per `n` by the relation suite.
pub const RELATION_SAMPLES: usize = 100;
/// Random instances per `n` by the centro and unitary suites.
pub const INSTANCE_SAMPLES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Relation,
    Nilpotent,
    Centro,
    Unitary,
    All,
}

impl Suite {
    fn stream_id(self) -> u64 {
        match self {
            Suite::Relation => 1,
            Suite::Nilpotent => 2,
            Suite::Centro => 3,
            Suite::Unitary => 4,
            Suite::All => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relation => "relation",
            Suite::Nilpotent => "nilpotent",
            Suite::Centro => "centro",
            Suite::Unitary => "unitary",
            Suite::All => "all",
        }
    }
}

/// Seeded random vectors and matrices with entries uniform in `[-1, 1)^2`.
pub mod sampling {
    use super::*;

    /// RNG for one `(stream, n)` cell of a seeded run.
    pub fn rng_for(seed: u64, stream: u64, n: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream((stream << 16) | n as u64);
        rng
    }

    pub fn complex(rng: &mut impl Rng) -> Complex {
        Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    }

    pub fn vector(rng: &mut impl Rng, n: usize) -> ComplexVector {
        ComplexVector::new((0..n).map(|_| complex(rng)).collect()).expect("finite, non-empty")
    }

    pub fn dense(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexDense {
        let data = (0..rows * cols).map(|_| complex(rng)).collect();
        ComplexDense::new(rows, cols, data).expect("finite")
    }
}

/// Palindromic test vector `(1, 2, 3, ..., 2, 1)`.
pub fn ramp_even(n: usize) -> ComplexVector {
    let v: Vec<f64> = (1..=n).map(|k| k.min(n + 1 - k) as f64).collect();
    ComplexVector::from_real(&v).expect("finite")
}

/// Anti-palindromic test vector `(1, 2, ..., 0, ..., -2, -1)`.
pub fn ramp_odd(n: usize) -> ComplexVector {
    let v: Vec<f64> = (1..=n)
        .map(|k| {
            let mirror = n + 1 - k;
            if k < mirror {
                k as f64
            } else if k > mirror {
                -(mirror as f64)
            } else {
                0.0
            }
        })
        .collect();
    ComplexVector::from_real(&v).expect("finite")
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, f64::max)
}

fn metric(suite: &str, n: usize, what: &str, value: f64, bound: f64) -> Metric {
    Metric::new(format!("{suite}/n={n}/{what}"), value, bound)
}

pub fn run_suite(suite: Suite, range: RangeInclusive<usize>, seed: u64, tol: Tolerance) -> Result<Vec<Metric>> {
    if suite == Suite::All {
        let mut all = Vec::new();
        for s in [Suite::Relation, Suite::Nilpotent, Suite::Centro, Suite::Unitary] {
            all.extend(run_suite(s, range.clone(), seed, tol)?);
        }
        return Ok(all);
    }
    let mut metrics = Vec::new();
    for n in range {
        let mut rng = sampling::rng_for(seed, suite.stream_id(), n);
        let batch = match suite {
            Suite::Relation => relation_suite(n, &mut rng)?,
            Suite::Nilpotent => nilpotent_suite(n, tol)?,
            Suite::Centro => centro_suite(n, &mut rng, tol)?,
            Suite::Unitary => unitary_suite(n, &mut rng)?,
            Suite::All => unreachable!(),
        };
        metrics.extend(batch);
    }
    Ok(metrics)
}

fn relation_suite(n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let r = SpecialTridiag::new(n)?;
    let nf = n as f64;
    let mut xs = vec![ramp_even(n), ramp_odd(n)];
    xs.extend((0..RELATION_SAMPLES).map(|_| sampling::vector(rng, n)));

    let mut ratio = 0.0f64;
    for x in &xs {
        let diff = (&r.apply(x)? - &r.apply_via_relation(x)?).norm();
        ratio = ratio.max(diff / x.norm());
    }

    let (identity_ok, annihilation) = match rank_one_defects(n) {
        Ok(d) => {
            let mut worst = 0.0f64;
            for x in &xs {
                let s = even_odd_split(x);
                worst = worst.max(d.even_defect.mat_vec(&s.even)?.norm());
                worst = worst.max(d.odd_defect.mat_vec(&s.odd)?.norm());
            }
            (0.0, worst)
        }
        Err(_) => (1.0, f64::INFINITY),
    };

    let spectra = restriction_spectra(n)?;
    let circ = pi_minus_pit_coeffs(n)?;
    let skew = eta_minus_etat_coeffs(n)?;
    let (cd, sd) = (circ.dense(), skew.dense());
    let mut spectral = 0.0f64;
    for (pair, value) in circ.eigenpairs().iter().zip(&spectra.even) {
        let v = &pair.vector;
        spectral = spectral.max((&cd.mat_vec(v)? - &(v * *value)).norm());
    }
    for (pair, value) in skew.eigenpairs().iter().zip(&spectra.odd) {
        let v = &pair.vector;
        spectral = spectral.max((&sd.mat_vec(v)? - &(v * *value)).norm());
    }

    Ok(vec![
        metric("relation", n, "max_residual_over_norm", ratio, 1e-10 * nf),
        metric("relation", n, "rank_one_identity_failures", identity_ok, 0.0),
        metric("relation", n, "defect_on_own_subspace", annihilation, 1e-12 * nf),
        metric("relation", n, "restriction_eigen_residual", spectral, 1e-10 * nf),
    ])
}

fn nilpotent_suite(n: usize, tol: Tolerance) -> Result<Vec<Metric>> {
    let a = nilpotent_scaling(n)?.scaled_operator();
    let check = nilpotency_check(&a, NILPOTENT_TOL)?;
    let pattern = sign_pattern_of(&r_dense(n)?, tol)?;
    let keeps = if has_sign_pattern(&a, &pattern, tol)? { 0.0 } else { 1.0 };
    Ok(vec![
        metric("nilpotent", n, "power_norm", check.power_norm, check.bound),
        metric("nilpotent", n, "sign_pattern_mismatch", keeps, 0.0),
    ])
}

fn centro_suite(n: usize, rng: &mut ChaCha8Rng, tol: Tolerance) -> Result<Vec<Metric>> {
    let (ep, em) = projectors(n)?;
    let basis = even_odd_basis(n)?;
    let (pp, qq) = (basis.even_projector(), basis.odd_projector());

    let mut projection = 0.0f64;
    let mut table = 0.0f64;
    let mut parity = 0.0f64;
    let mut four_term = 0.0f64;
    let mut blocks = 0.0f64;
    let mut solutions = 0.0f64;
    let mut solve_gap = 0.0f64;

    for _ in 0..INSTANCE_SAMPLES {
        let x = sampling::vector(rng, n);
        let s = even_odd_split(&x);
        let (even, odd) = (&s.even, &s.odd);
        projection = projection.max(max_of([
            (&(even + odd) - &x).norm(),
            (&even_odd_split(even).even - even).norm(),
            (&even_odd_split(odd).odd - odd).norm(),
            even_odd_split(even).odd.norm(),
            even_odd_split(odd).even.norm(),
            (&reverse(even) - even).norm(),
            (&reverse(odd) + odd).norm(),
        ]));

        let a1 = centro_split(&sampling::dense(rng, n, n))?.sym;
        let a2 = centro_split(&sampling::dense(rng, n, n))?.sym;
        let k1 = centro_split(&sampling::dense(rng, n, n))?.skew;
        let k2 = centro_split(&sampling::dense(rng, n, n))?.skew;
        let scaled = |d: f64, m: &ComplexDense| d / (1.0 + m.max_abs());
        let ss = a1.mat_mul(&a2)?;
        let sk = a1.mat_mul(&k1)?;
        let ks = k1.mat_mul(&a1)?;
        let kk = k1.mat_mul(&k2)?;
        table = table.max(max_of([
            scaled(centro_symmetric_deviation(&ss)?, &ss),
            scaled(centro_skew_deviation(&sk)?, &sk),
            scaled(centro_skew_deviation(&ks)?, &ks),
            scaled(centro_symmetric_deviation(&kk)?, &kk),
        ]));

        let ae = a1.mat_vec(even)?;
        let ao = a1.mat_vec(odd)?;
        let ke = k1.mat_vec(even)?;
        let ko = k1.mat_vec(odd)?;
        parity = parity.max(max_of([
            (&reverse(&ae) - &ae).norm(),
            (&reverse(&ao) + &ao).norm(),
            (&reverse(&ke) + &ke).norm(),
            (&reverse(&ko) - &ko).norm(),
        ]));

        let l = sampling::dense(rng, n, n);
        let sandwich = |left: &ComplexDense, right: &ComplexDense| left.mat_mul(&l)?.mat_mul(right);
        let rebuilt = &(&sandwich(&pp, &pp)? + &sandwich(&pp, &qq)?) + &(&sandwich(&qq, &pp)? + &sandwich(&qq, &qq)?);
        let via_e = &(&sandwich(&ep, &ep)? + &sandwich(&ep, &em)?) + &(&sandwich(&em, &ep)? + &sandwich(&em, &em)?);
        four_term = four_term.max(rebuilt.max_abs_diff(&l).max(via_e.max_abs_diff(&l)));

        let fs = block_form(&a1, &basis)?;
        let fk = block_form(&k1, &basis)?;
        blocks = blocks.max(max_of([
            fs.x12.frobenius_norm(),
            fs.x21.frobenius_norm(),
            fk.x11.frobenius_norm(),
            fk.x22.frobenius_norm(),
            fs.reassemble(&basis)?.max_abs_diff(&a1),
            fk.reassemble(&basis)?.max_abs_diff(&k1),
        ]));

        let z = sampling::vector(rng, n);
        let w = k1.mat_vec(&z)?;
        let zs = even_odd_split(&z);
        let ws = even_odd_split(&w);
        let gap = (&k1.mat_vec(&zs.even)? - &ws.odd).norm() + (&k1.mat_vec(&zs.odd)? - &ws.even).norm();
        solutions = solutions.max(gap / (1.0 + w.norm()));

        let w = sampling::vector(rng, n);
        let fast = solve_centro_symmetric(&a1, &w, tol)?;
        let full = solve_dense(&a1, &w, tol)?;
        solve_gap = solve_gap.max((&fast - &full).norm() / (1.0 + full.norm()));
    }

    Ok(vec![
        metric("centro", n, "projection_algebra", projection, 1e-12),
        metric("centro", n, "multiplication_table", table, 1e-12),
        metric("centro", n, "action_parity", parity, 1e-12),
        metric("centro", n, "four_term_decomposition", four_term, 1e-12),
        metric("centro", n, "block_characterization", blocks, 1e-12),
        metric("centro", n, "solution_decomposition", solutions, 1e-12),
        metric("centro", n, "half_size_solve_vs_lu", solve_gap, 1e-8),
    ])
}

fn unitary_suite(n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let nf = n as f64;
    let pack = make_fourier_pack(n)?;
    let eye = ComplexDense::identity(n);
    let defect = |u: &ComplexDense| -> Result<f64> {
        let adj = u.conj_transpose();
        Ok((&u.mat_mul(&adj)? - &eye)
            .frobenius_norm()
            .max((&adj.mat_mul(u)? - &eye).frobenius_norm()))
    };
    let f_defect = defect(&pack.f_star)?;
    let h_defect = defect(&pack.h_star)?;

    let mut circ_worst = 0.0f64;
    let mut skew_worst = 0.0f64;
    for _ in 0..INSTANCE_SAMPLES {
        let coeffs = sampling::vector(rng, n);
        let norm = coeffs.norm();
        let c = Circulant::new(coeffs.clone());
        let cd = c.dense();
        for pair in c.eigenpairs() {
            circ_worst = circ_worst.max(pair.residual(&cd)? / norm);
        }
        let s = SkewCirculant::new(coeffs);
        let sd = s.dense();
        for pair in s.eigenpairs() {
            skew_worst = skew_worst.max(pair.residual(&sd)? / norm);
        }
    }

    Ok(vec![
        metric("unitary", n, "fourier_unitarity_defect", f_defect, 1e-11 * nf),
        metric("unitary", n, "h_unitarity_defect", h_defect, 1e-11 * nf),
        metric(
            "unitary",
            n,
            "circulant_eigen_residual_over_norm",
            circ_worst,
            1e-10 * nf,
        ),
        metric(
            "unitary",
            n,
            "skew_circulant_eigen_residual_over_norm",
            skew_worst,
            1e-10 * nf,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ramps_match_the_five_point_examples() {
        assert_eq!(
            ramp_even(5),
            ComplexVector::from_real(&[1.0, 2.0, 3.0, 2.0, 1.0]).unwrap()
        );
        assert_eq!(
            ramp_odd(5),
            ComplexVector::from_real(&[1.0, 2.0, 0.0, -2.0, -1.0]).unwrap()
        );
        assert_eq!(ramp_even(4), ComplexVector::from_real(&[1.0, 2.0, 2.0, 1.0]).unwrap());
        assert_eq!(ramp_odd(4), ComplexVector::from_real(&[1.0, 2.0, -2.0, -1.0]).unwrap());
        for n in 2..10 {
            assert_eq!(reverse(&ramp_even(n)), ramp_even(n));
            assert_eq!(reverse(&ramp_odd(n)), -&ramp_odd(n));
        }
    }

    #[test]
    fn streams_are_independent_of_run_grouping() {
        let tol = Tolerance::default();
        let alone = run_suite(Suite::Centro, 3..=4, 11, tol).unwrap();
        let all = run_suite(Suite::All, 3..=4, 11, tol).unwrap();
        for m in &alone {
            assert!(all.contains(m), "{} missing", m.name);
        }
    }

    #[test]
    fn small_suites_pass() {
        let tol = Tolerance::default();
        for m in run_suite(Suite::All, 2..=5, 1, tol).unwrap() {
            assert!(m.passed(), "{} = {:e} > {:e}", m.name, m.value, m.bound);
        }
    }
}
