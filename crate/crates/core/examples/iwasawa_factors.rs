//! Factor a transfer matrix as K(φ)·A(ξ)·N(ν) and rebuild it.
//!
//!     cargo run --example iwasawa_factors

use su11_multilayer::iwasawa::{decompose, recompose};
use su11_multilayer::{Complex64, Su11Matrix};

fn main() -> su11_multilayer::Result<()> {
    let m = Su11Matrix::normalized(Complex64::new(1.3, -0.4), Complex64::new(0.2, 0.85))?;
    let f = decompose(&m);
    println!("phi = {:.12}", f.phi);
    println!("xi  = {:.12}  (magnification {:.6})", f.xi, f.magnification());
    println!("nu  = {:.12}", f.nu);
    let back = recompose(&f);
    println!("max |K A N - M| = {:.3e}", back.max_entry_distance(&m));
    Ok(())
}
