//! Subgroup orbits and iterated trajectories in the complex plane.
//!
//! K-orbits are circles about the origin, A-orbits are circular arcs from
//! `+i` to `−i` through the seed, and N-orbits are circles through `+i`
//! joining the seed `z` and `−z*`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iwasawa::Subgroup;
use crate::su11::{DiscPoint, Su11Matrix};
use crate::tolerance::GEO_TOL;

pub const DEFAULT_SAMPLES: usize = 256;

/// Parameter range that draws a visually complete orbit: `[0, 4π]` for K
/// (the full SU(1,1) period), `[−6, 6]` for A and `[−20, 20]` for N.
pub fn default_range(subgroup: Subgroup) -> (f64, f64) {
    match subgroup {
        Subgroup::K => (0.0, 4.0 * std::f64::consts::PI),
        Subgroup::A => (-6.0, 6.0),
        Subgroup::N => (-20.0, 20.0),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Orbit {
    pub subgroup: Subgroup,
    pub seed: DiscPoint,
    /// `(parameter, point)` with strictly increasing parameters.
    pub samples: Vec<(f64, DiscPoint)>,
}

impl Orbit {
    pub fn points(&self) -> impl Iterator<Item = DiscPoint> + '_ {
        self.samples.iter().map(|(_, z)| *z)
    }
}

/// Samples `G(p_k) · seed` for `n_samples` parameters spaced uniformly over
/// `[lo, hi]`, endpoints included.
pub fn orbit(subgroup: Subgroup, seed: DiscPoint, range: (f64, f64), n_samples: usize) -> Result<Orbit> {
    let (lo, hi) = range;
    if n_samples < 2 {
        return Err(Error::InvalidRange(format!("need at least 2 samples, got {n_samples}")));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidRange(format!("expected lo < hi, got [{lo}, {hi}]")));
    }
    if seed.is_infinite() {
        return Err(Error::InvalidRange("seed must be a finite point".to_string()));
    }
    let step = (hi - lo) / (n_samples - 1) as f64;
    let samples = (0..n_samples)
        .map(|k| {
            let p = if k == n_samples - 1 { hi } else { lo + step * k as f64 };
            (p, subgroup.element(p).apply(seed))
        })
        .collect();
    Ok(Orbit {
        subgroup,
        seed,
        samples,
    })
}

/// `z₀ = seed`, `z_{k+1} = Φ[M, z_k]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub matrix: Su11Matrix,
    pub points: Vec<DiscPoint>,
}

/// Returns `n_steps + 1` points starting at the seed.
pub fn iterate(m: &Su11Matrix, seed: DiscPoint, n_steps: usize) -> Trajectory {
    let points = std::iter::successors(Some(seed), |z| Some(m.apply(*z)))
        .take(n_steps + 1)
        .collect();
    Trajectory { matrix: *m, points }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CircleFit {
    Circle {
        center: Complex64,
        radius: f64,
    },
    /// The three points are collinear: the line through `point` along the
    /// unit vector `direction`.
    Line {
        point: Complex64,
        direction: Complex64,
    },
}

impl CircleFit {
    /// Distance from `z` to the fitted curve.
    pub fn distance(&self, z: Complex64) -> f64 {
        match *self {
            CircleFit::Circle { center, radius } => ((z - center).norm() - radius).abs(),
            CircleFit::Line { point, direction } => ((z - point) * direction.conj()).im.abs(),
        }
    }
}

/// Circumcircle of three points; a line when the triangle area is at most
/// [`GEO_TOL`].
pub fn fit_circle(p1: DiscPoint, p2: DiscPoint, p3: DiscPoint) -> Result<CircleFit> {
    let (Some(a), Some(b), Some(c)) = (p1.value(), p2.value(), p3.value()) else {
        return Err(Error::InvalidRange("circle fit needs finite points".to_string()));
    };
    if a == b || b == c || a == c {
        return Err(Error::DuplicatePoints);
    }
    let (u, v) = (b - a, c - a);
    let cross = u.re * v.im - u.im * v.re;
    if 0.5 * cross.abs() <= GEO_TOL {
        let (p, q) = farthest_pair(a, b, c);
        return Ok(CircleFit::Line {
            point: p,
            direction: (q - p) / (q - p).norm(),
        });
    }
    let (uu, vv) = (u.norm_sqr(), v.norm_sqr());
    let offset = Complex64::new(v.im * uu - u.im * vv, u.re * vv - v.re * uu) / (2.0 * cross);
    Ok(CircleFit::Circle {
        center: a + offset,
        radius: offset.norm(),
    })
}

fn farthest_pair(a: Complex64, b: Complex64, c: Complex64) -> (Complex64, Complex64) {
    [(a, b), (b, c), (a, c)]
        .into_iter()
        .max_by(|x, y| (x.1 - x.0).norm().total_cmp(&(y.1 - y.0).norm()))
        .expect("three pairs")
}
