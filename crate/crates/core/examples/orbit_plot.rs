//! Draw K, A and N orbits through a handful of seeds, one SVG per subgroup.
//!
//!     cargo run --example orbit_plot -- [output-dir]

use std::path::PathBuf;

use su11_multilayer::cli::plot::{orbits_svg, subgroup_fixed_points};
use su11_multilayer::orbits::default_range;
use su11_multilayer::{orbit, DiscPoint, Subgroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let seeds = [(0.2, 0.0), (0.45, 0.1), (0.7, -0.2), (-0.3, -0.5), (0.0, -0.85)];
    for (g, name) in [(Subgroup::K, "k"), (Subgroup::A, "a"), (Subgroup::N, "n")] {
        let orbits = seeds
            .iter()
            .map(|&(re, im)| orbit(g, DiscPoint::new(re, im), default_range(g), 400))
            .collect::<Result<Vec<_>, _>>()?;
        let path = dir.join(format!("orbits_{name}.svg"));
        std::fs::write(&path, orbits_svg(&orbits, &subgroup_fixed_points(g)))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
