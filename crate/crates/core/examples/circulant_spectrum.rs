//! Eigenvalues of a circulant from its coefficients, checked against the
//! dense matrix, and the fast product through the transform.

use centroskew::circulant::poly_eval;
use centroskew::circulant::Circulant;
use centroskew::dft::RootOfUnity;
use centroskew::ComplexVector;

fn main() -> centroskew::Result<()> {
    let c = Circulant::from_real(&[4.0, 1.0, 0.0, 0.0, 1.0])?;
    let dense = c.dense();
    let root = RootOfUnity::new(c.n())?;
    println!("Circ(c) =\n{dense}");
    for (k, pair) in c.eigenpairs().iter().enumerate() {
        let direct = poly_eval(c.coeffs(), root.omega_pow(k as i64));
        println!(
            "k = {k}: lambda = {:.6}  p_c(w^k) = {:.6}  residual = {:.2e}",
            pair.value,
            direct,
            pair.residual(&dense)?
        );
    }

    let x = ComplexVector::from_real(&[1.0, -1.0, 2.0, 0.5, 3.0])?;
    let fast = c.matvec(&x)?;
    let slow = dense.mat_vec(&x)?;
    println!("fast vs dense product gap: {:.2e}", (&fast - &slow).norm());

    let d = Circulant::from_real(&[0.0, 2.0, 0.0, 1.0, 0.0])?;
    let cd = c.mul(&d)?;
    println!(
        "Circ(c) Circ(d) stays circulant: gap {:.2e}",
        cd.dense().max_abs_diff(&dense.mat_mul(&d.dense())?)
    );
    Ok(())
}
