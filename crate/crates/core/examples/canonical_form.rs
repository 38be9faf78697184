//! Conjugate matrices of each class into their canonical rotation,
//! magnifier or lens form.
//!
//!     cargo run --example canonical_form

use su11_multilayer::classify::conjugate;
use su11_multilayer::iwasawa::{make_a, make_k, make_n};
use su11_multilayer::{reduce_to_canonical, Complex64, Su11Matrix};

fn main() -> su11_multilayer::Result<()> {
    let r = Su11Matrix::normalized(Complex64::new(1.1, 0.3), Complex64::new(-0.4, 0.5))?;
    for g in [make_k(1.2), make_a(-0.7), make_n(2.5)] {
        let m = conjugate(&g, &r);
        let red = reduce_to_canonical(&m)?;
        let class = red.classification.class;
        println!("{class}: parameter {:.9}, sign {:+}", red.parameter(), red.sign());
        println!("  conjugator family: {}", red.conjugator.description);
        println!(
            "  off-form residual {:.2e}, trace change {:.2e}",
            red.off_form_residual(),
            (red.canonical.trace() - m.trace()).abs()
        );
    }
    Ok(())
}
