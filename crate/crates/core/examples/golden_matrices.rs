//! Prints the small structured matrices: R, the two basic shifts, the
//! exchange matrix and the lower shift.
//!
//! cargo run --example golden_matrices -- 5

use centroskew::centro::exchange_dense;
use centroskew::circulant::{Circulant, SkewCirculant};
use centroskew::relation::{lower_shift_dense, r_dense};

fn main() -> centroskew::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    println!("R_{n}:\n{}", r_dense(n)?);
    println!("pi_{n} = Circ(0, 1, 0, ...):\n{}", Circulant::basic(n)?.dense());
    println!("eta_{n} = SCirc(0, 1, 0, ...):\n{}", SkewCirculant::basic(n)?.dense());
    println!("E_{n}:\n{}", exchange_dense(n)?);
    println!("Z_{n}:\n{}", lower_shift_dense(n));
    Ok(())
}
