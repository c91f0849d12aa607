//! R = (pi - pi^T) E+ + (eta - eta^T) E-, the rank-one defects, and the
//! restriction spectra.

use centroskew::relation::{rank_one_defects, restriction_spectra, SpecialTridiag};
use centroskew::verify::{ramp_even, ramp_odd};

fn main() -> centroskew::Result<()> {
    let n = 5;
    let r = SpecialTridiag::new(n)?;
    for x in [ramp_even(n), ramp_odd(n)] {
        let direct = r.apply(&x)?;
        let via = r.apply_via_relation(&x)?;
        println!(
            "x = {:?}  Rx = {:?}  gap {:.1e}",
            x.iter().map(|z| z.re).collect::<Vec<_>>(),
            direct.iter().map(|z| z.re).collect::<Vec<_>>(),
            (&direct - &via).norm()
        );
    }

    let d = rank_one_defects(n)?;
    println!("R - (pi - pi^T) =\n{}", d.even_defect);
    println!("R - (eta - eta^T) =\n{}", d.odd_defect);

    let s = restriction_spectra(n)?;
    println!(
        "spectrum of pi - pi^T:   {:?}",
        s.even.iter().map(|z| format!("{:.4}", z.im)).collect::<Vec<_>>()
    );
    println!(
        "spectrum of eta - eta^T: {:?}",
        s.odd.iter().map(|z| format!("{:.4}", z.im)).collect::<Vec<_>>()
    );
    Ok(())
}
