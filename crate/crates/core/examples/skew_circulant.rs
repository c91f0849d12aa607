//! Skew-circulant matrices: negacyclic products, the twisted Fourier
//! basis and the similarity between the two basic shifts.

use centroskew::circulant::{Circulant, SkewCirculant};
use centroskew::dft::{make_fourier_pack, RootOfUnity};

fn main() -> centroskew::Result<()> {
    let n = 6;
    let a = SkewCirculant::from_real(&[1.0, 2.0, 0.0, -1.0, 0.0, 3.0])?;
    let dense = a.dense();
    println!("SCirc(a) =\n{dense}");
    let worst = a
        .eigenpairs()
        .iter()
        .map(|p| p.residual(&dense))
        .collect::<centroskew::Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    println!("max eigen-pair residual: {worst:.2e}");

    let eta = SkewCirculant::basic(n)?.dense();
    println!(
        "eta^n = -I: {}",
        eta.matrix_power(n as u32)? == -&centroskew::ComplexDense::identity(n)
    );

    let pack = make_fourier_pack(n)?;
    let sigma = RootOfUnity::new(n)?.sigma;
    let half = pack.omega_half();
    let pi = Circulant::basic(n)?.dense();
    let twisted = &half.mat_mul(&pi)?.mat_mul(&half.conj())? * sigma;
    println!("sigma W^1/2 pi conj(W^1/2) vs eta: {:.2e}", twisted.max_abs_diff(&eta));
    println!("H* unitary: {}", pack.h_star.is_unitary(Default::default())?);
    Ok(())
}
