//! Even/odd splitting of vectors and matrices, the block form in the
//! even/odd basis, and the half-size centro-symmetric solve.

use centroskew::centro::{block_form, centro_split, even_odd_basis, even_odd_split, solve_centro_symmetric};
use centroskew::linalg::solve_dense;
use centroskew::verify::sampling;
use centroskew::{ComplexDense, ComplexVector, Tolerance};

fn main() -> centroskew::Result<()> {
    let x = ComplexVector::from_real(&[3.0, 1.0, 4.0, 1.0, 5.0])?;
    let s = even_odd_split(&x);
    println!("x    = {:?}", x.iter().map(|z| z.re).collect::<Vec<_>>());
    println!("even = {:?}", s.even.iter().map(|z| z.re).collect::<Vec<_>>());
    println!("odd  = {:?}", s.odd.iter().map(|z| z.re).collect::<Vec<_>>());

    let n = 6;
    let mut rng = sampling::rng_for(42, 0, n);
    let m = sampling::dense(&mut rng, n, n);
    let parts = centro_split(&m)?;
    let basis = even_odd_basis(n)?;
    let sym = block_form(&parts.sym, &basis)?;
    let skew = block_form(&parts.skew, &basis)?;
    println!(
        "centro-symmetric part: off-diagonal blocks {:.1e}, {:.1e}",
        sym.x12.frobenius_norm(),
        sym.x21.frobenius_norm()
    );
    println!(
        "centro-skew part: diagonal blocks {:.1e}, {:.1e}",
        skew.x11.frobenius_norm(),
        skew.x22.frobenius_norm()
    );

    let a = &parts.sym + &ComplexDense::identity(n).map(|z| z * 3.0);
    let w = sampling::vector(&mut rng, n);
    let tol = Tolerance::default();
    let half = solve_centro_symmetric(&a, &w, tol)?;
    let full = solve_dense(&a, &w, tol)?;
    println!("half-size solve vs full LU: {:.2e}", (&half - &full).norm());
    println!("residual: {:.2e}", (&a.mat_vec(&half)? - &w).norm());
    Ok(())
}
