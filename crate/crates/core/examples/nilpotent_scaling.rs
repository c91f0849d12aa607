//! Diag(f) R is nilpotent with the sign pattern of R.

use centroskew::relation::{
    has_sign_pattern, nilpotency_check, nilpotent_scaling, r_dense, sign_pattern_of, NILPOTENT_TOL,
};
use centroskew::Tolerance;

fn main() -> centroskew::Result<()> {
    let tol = Tolerance::default();
    for n in 2..=10 {
        let scaling = nilpotent_scaling(n)?;
        let a = scaling.scaled_operator();
        let check = nilpotency_check(&a, NILPOTENT_TOL)?;
        let pattern = sign_pattern_of(&r_dense(n)?, tol)?;
        println!(
            "n = {n:2}: ||(DR)^n|| = {:.2e} (bound {:.1e})  sign pattern kept: {}",
            check.power_norm,
            check.bound,
            has_sign_pattern(&a, &pattern, tol)?
        );
    }
    let f: Vec<String> = nilpotent_scaling(4)?.f.iter().map(|z| format!("{:.6}", z.re)).collect();
    println!("f for n = 4: [{}]", f.join(", "));
    Ok(())
}
