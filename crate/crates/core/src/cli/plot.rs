//! CSV and static SVG renderings of orbits.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::iwasawa::Subgroup;
use crate::numfmt::num;
use crate::orbits::Orbit;
use crate::su11::DiscPoint;

pub const VIEWPORT: f64 = 512.0;

/// `parameter,re,im` rows; the point at infinity prints as `inf,inf`.
pub fn orbit_csv(orbit: &Orbit) -> String {
    let mut out = String::from("parameter,re,im\n");
    for (p, z) in &orbit.samples {
        match z.value() {
            Some(z) => writeln!(out, "{},{},{}", num(*p), num(z.re), num(z.im)),
            None => writeln!(out, "{},inf,inf", num(*p)),
        }
        .expect("write to string");
    }
    out
}

/// Fixed points of the subgroup's action: the origin for K, `±i` for A and
/// `+i` for N.
pub fn subgroup_fixed_points(subgroup: Subgroup) -> Vec<Complex64> {
    match subgroup {
        Subgroup::K => vec![Complex64::new(0.0, 0.0)],
        Subgroup::A => vec![Complex64::i(), -Complex64::i()],
        Subgroup::N => vec![Complex64::i()],
    }
}

fn to_view(z: Complex64) -> (f64, f64) {
    let half = VIEWPORT / 2.0;
    (half + half * z.re, half - half * z.im)
}

/// 512×512 drawing with the unit disc inscribed, one polyline per orbit and
/// small markers at `markers`.
pub fn orbits_svg(orbits: &[Orbit], markers: &[Complex64]) -> String {
    let half = VIEWPORT / 2.0;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{v}\" height=\"{v}\" viewBox=\"0 0 {v} {v}\">",
        v = VIEWPORT
    );
    let _ = writeln!(
        out,
        "  <rect width=\"{v}\" height=\"{v}\" fill=\"white\"/>",
        v = VIEWPORT
    );
    let _ = writeln!(
        out,
        "  <circle cx=\"{half}\" cy=\"{half}\" r=\"{half}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>"
    );
    for orbit in orbits {
        let mut d = String::new();
        let mut pen_down = false;
        for z in orbit.points() {
            match z {
                DiscPoint::Finite(z) => {
                    let (x, y) = to_view(z);
                    let _ = write!(d, "{}{:.3} {:.3} ", if pen_down { "L" } else { "M" }, x, y);
                    pen_down = true;
                }
                DiscPoint::Infinity => pen_down = false,
            }
        }
        let _ = writeln!(
            out,
            "  <path d=\"{}\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>",
            d.trim_end()
        );
    }
    for m in markers {
        let (x, y) = to_view(*m);
        let _ = writeln!(out, "  <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\" fill=\"#c0392b\"/>");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::orbit;

    #[test]
    fn csv_layout() {
        let o = orbit(
            Subgroup::K,
            DiscPoint::new(0.5, 0.0),
            (0.0, std::f64::consts::PI * 2.0),
            3,
        )
        .unwrap();
        let csv = orbit_csv(&o);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "parameter,re,im");
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[1], "0,0.5,0");
        assert!(lines[3].starts_with("6.28318530718,0.5,"));
    }

    #[test]
    fn svg_layout() {
        let o = orbit(Subgroup::N, DiscPoint::new(0.2, 0.1), (-5.0, 5.0), 16).unwrap();
        let svg = orbits_svg(&[o], &subgroup_fixed_points(Subgroup::N));
        assert!(svg.contains("viewBox=\"0 0 512 512\""));
        assert!(svg.contains("<path d=\"M"));
        assert!(svg.contains("<circle cx=\"256.000\" cy=\"0.000\" r=\"3\""));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
