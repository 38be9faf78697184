//! Build quarter- and half-wave single layers and a Bragg mirror, and print
//! their reflectance and trace class.
//!
//!     cargo run --example quarter_wave_stack

use su11_multilayer::stack::coefficients;
use su11_multilayer::{classify, LayerStack, Polarization};

fn main() -> su11_multilayer::Result<()> {
    let (n0, n1, lambda) = (1.0, 1.5, 600.0);
    let quarter = LayerStack::new(n0, lambda).with_layer(n1, lambda / (4.0 * n1));
    let half = LayerStack::new(n0, lambda).with_layer(n1, lambda / (2.0 * n1));
    let mut mirror = LayerStack::new(n0, lambda)
        .with_angle(20.0)
        .with_polarization(Polarization::P);
    for _ in 0..6 {
        mirror = mirror
            .with_layer(2.35, lambda / (4.0 * 2.35))
            .with_layer(1.46, lambda / (4.0 * 1.46));
    }
    let analytic = ((n0 * n0 - n1 * n1) / (n0 * n0 + n1 * n1)).powi(2);
    println!("quarter-wave analytic |R|^2 = {analytic:.12}");
    for (name, stack) in [("quarter-wave", quarter), ("half-wave", half), ("mirror", mirror)] {
        let m = stack.build_matrix()?;
        let c = coefficients(&m);
        let cls = classify(&m);
        println!(
            "{name:>12}: |R|^2 = {:.12}  |T|^2 = {:.12}  class {}{}",
            c.reflectance(),
            c.transmittance(),
            cls.class,
            if cls.degenerate { " (degenerate)" } else { "" }
        );
    }
    Ok(())
}
