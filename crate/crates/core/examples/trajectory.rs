//! Iterate a hyperbolic transfer matrix and watch the field quotient run to
//! its attracting fixed point on the unit circle.
//!
//!     cargo run --example trajectory

use su11_multilayer::classify::conjugate;
use su11_multilayer::iwasawa::make_a;
use su11_multilayer::{fixed_points, iterate, Complex64, DiscPoint, Su11Matrix};

fn main() -> su11_multilayer::Result<()> {
    let r = Su11Matrix::normalized(Complex64::new(1.2, 0.3), Complex64::new(0.4, -0.6))?;
    let m = conjugate(&make_a(0.9), &r);
    let fixed = fixed_points(&m).points();
    let t = iterate(&m, DiscPoint::new(0.0, 0.0), 25);
    for (k, z) in t.points.iter().enumerate().step_by(5) {
        let d = fixed.iter().map(|f| f.distance(z)).fold(f64::INFINITY, f64::min);
        println!("step {k:>2}: {z}  distance to nearest fixed point {d:.3e}");
    }
    Ok(())
}
