//! Map a quarter-wave stack to a real ABCD matrix and read off its
//! rotation, magnifier and lens factors.
//!
//!     cargo run --example abcd_bridge

use su11_multilayer::iwasawa::decompose;
use su11_multilayer::sl2r::{physical_reading, real_iwasawa, to_sl2r};
use su11_multilayer::tolerance::DET_TOL;
use su11_multilayer::LayerStack;

fn main() -> su11_multilayer::Result<()> {
    let m = LayerStack::new(1.0, 600.0).with_layer(1.5, 100.0).build_matrix()?;
    let abcd = to_sl2r(&m);
    println!("ABCD = {abcd}");
    println!("det  = {:.15}", abcd.determinant());
    let f = real_iwasawa(&abcd, DET_TOL)?;
    let g = decompose(&m);
    println!(
        "same factors as the complex picture: {}",
        (f.phi - g.phi).abs() < 1e-12 && (f.xi - g.xi).abs() < 1e-12
    );
    print!("{}", physical_reading(&f));
    Ok(())
}
