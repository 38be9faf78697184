//! Classify a few transfer matrices by their trace and list the fixed points
//! of the induced Möbius map.
//!
//!     cargo run --example classify_matrix

use su11_multilayer::{classify, fixed_points, Complex64, FixedPointSet, Su11Matrix};

fn main() -> su11_multilayer::Result<()> {
    let samples = [
        ("rotation-like", Complex64::new(0.6, 0.8), Complex64::new(0.0, 0.0)),
        (
            "magnifier-like",
            Complex64::new(2.0, 0.0),
            Complex64::new(3f64.sqrt(), 0.0),
        ),
        ("lens-like", Complex64::new(1.0, -0.75), Complex64::new(0.75, 0.0)),
        ("tilted", Complex64::new(1.2, 0.9), Complex64::new(0.5, -1.0)),
    ];
    for (name, alpha, beta) in samples {
        let m = Su11Matrix::normalized(alpha, beta)?;
        let c = classify(&m);
        println!(
            "{name}: trace {:.6}, class {}, degenerate {}",
            c.trace, c.class, c.degenerate
        );
        match fixed_points(&m) {
            FixedPointSet::InsideOutside { inside, outside } => {
                println!("  inside {inside}\n  outside {outside}")
            }
            FixedPointSet::BoundaryPair { first, second } => {
                println!("  on the unit circle: {first} and {second}")
            }
            FixedPointSet::DoubleBoundary(z) => println!("  double point on the unit circle: {z}"),
            FixedPointSet::AllPoints => println!("  every point is fixed"),
        }
    }
    Ok(())
}
