//! Trace classification, fixed points and reduction to canonical form.
//!
//! A transfer matrix is of class K when `Tr² < 4`, class A when `Tr² > 4`
//! and class N when `Tr² = 4` (numerically: within [`CLASS_TOL`]). The class
//! fixes the fixed-point geometry of the Möbius action:
//!
//! | class | fixed points                                     |
//! |-------|--------------------------------------------------|
//! | K     | one inside the disc, its inversion outside       |
//! | A     | two distinct points on the unit circle           |
//! | N     | one double point on the unit circle              |
//!
//! Conjugating by an SU(1,1) element `C` that moves those fixed points to the
//! ones of `K(φ)` (origin), `A(ξ)` (`±i`) or `N(ν)` (`+i`) turns the matrix
//! into a pure subgroup element, up to an overall sign when the trace is
//! negative.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iwasawa::{make_k, Subgroup};
use crate::su11::{DiscPoint, Su11Matrix};
use crate::tolerance::{CLASS_TOL, DET_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceSign {
    Plus,
    Minus,
}

impl TraceSign {
    pub fn of(trace: f64) -> Self {
        if trace >= 0.0 {
            TraceSign::Plus
        } else {
            TraceSign::Minus
        }
    }

    pub fn factor(self) -> f64 {
        match self {
            TraceSign::Plus => 1.0,
            TraceSign::Minus => -1.0,
        }
    }
}

impl fmt::Display for TraceSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TraceSign::Plus => "+",
            TraceSign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub class: Subgroup,
    pub trace: f64,
    pub trace_sign: TraceSign,
    /// Set only for `±I`, which the criterion places in class N.
    pub degenerate: bool,
}

impl Classification {
    pub fn trace_squared(&self) -> f64 {
        self.trace * self.trace
    }
}

pub fn classify(m: &Su11Matrix) -> Classification {
    classify_with(m, CLASS_TOL, DET_TOL)
}

/// Trace criterion with an explicit band `class_tol` on `Tr² − 4` and
/// tolerance `det_tol` for recognizing `±I`.
pub fn classify_with(m: &Su11Matrix, class_tol: f64, det_tol: f64) -> Classification {
    let trace = m.trace();
    let gap = trace * trace - 4.0;
    let class = if gap < -class_tol {
        Subgroup::K
    } else if gap > class_tol {
        Subgroup::A
    } else {
        Subgroup::N
    };
    let alpha = m.alpha();
    let degenerate = class == Subgroup::N
        && m.beta().norm() <= det_tol
        && alpha.im.abs() <= det_tol
        && (alpha.re * alpha.re - 1.0).abs() <= det_tol;
    Classification {
        class,
        trace,
        trace_sign: TraceSign::of(trace),
        degenerate,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedPointSet {
    /// Class K. `outside = 1/inside*`, infinity when `inside = 0`.
    InsideOutside { inside: DiscPoint, outside: DiscPoint },
    /// Class A. `first` and `second` come from the `+` and `−` roots.
    BoundaryPair { first: DiscPoint, second: DiscPoint },
    /// Class N.
    DoubleBoundary(DiscPoint),
    /// `±I`: every point is fixed.
    AllPoints,
}

impl FixedPointSet {
    pub fn points(&self) -> Vec<DiscPoint> {
        match *self {
            FixedPointSet::InsideOutside { inside, outside } => vec![inside, outside],
            FixedPointSet::BoundaryPair { first, second } => vec![first, second],
            FixedPointSet::DoubleBoundary(z) => vec![z],
            FixedPointSet::AllPoints => Vec::new(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FixedPointSet::InsideOutside { .. } => "inside/outside pair",
            FixedPointSet::BoundaryPair { .. } => "boundary pair",
            FixedPointSet::DoubleBoundary(_) => "double boundary point",
            FixedPointSet::AllPoints => "all points",
        }
    }
}

/// Solutions of `Φ[M, z] = z`,
/// `z = (−i Im α ± √((Re α)² − 1)) / β`.
///
/// The variant follows [`classify`]. A matrix with `β = 0` exactly is a pure
/// rotation and reports `{0, ∞}` (the single exception is a rotation so close
/// to `±I` that it falls in the class-N band without being degenerate; it
/// still reports `{0, ∞}`).
pub fn fixed_points(m: &Su11Matrix) -> FixedPointSet {
    fixed_points_for(m, &classify(m))
}

pub fn fixed_points_for(m: &Su11Matrix, class: &Classification) -> FixedPointSet {
    if class.degenerate {
        return FixedPointSet::AllPoints;
    }
    let alpha = m.alpha();
    let beta = m.beta();
    if beta.norm_sqr() == 0.0 {
        return FixedPointSet::InsideOutside {
            inside: DiscPoint::Finite(Complex64::new(0.0, 0.0)),
            outside: DiscPoint::Infinity,
        };
    }
    let disc = alpha.re * alpha.re - 1.0;
    let shift = Complex64::new(0.0, -alpha.im);
    match class.class {
        Subgroup::K => {
            // Take the root without cancellation, then the other from the
            // product of roots −β*/β.
            let root = (-disc).max(0.0).sqrt();
            let s = if alpha.im >= 0.0 { -1.0 } else { 1.0 };
            let far = (shift + Complex64::new(0.0, s * root)) / beta;
            let near = -beta.conj() / (beta * far);
            FixedPointSet::InsideOutside {
                inside: near.into(),
                outside: far.into(),
            }
        }
        Subgroup::A => {
            let root = disc.max(0.0).sqrt();
            FixedPointSet::BoundaryPair {
                first: ((shift + root) / beta).into(),
                second: ((shift - root) / beta).into(),
            }
        }
        Subgroup::N => FixedPointSet::DoubleBoundary((shift / beta).into()),
    }
}

/// `C M C⁻¹`.
pub fn conjugate(m: &Su11Matrix, c: &Su11Matrix) -> Su11Matrix {
    *c * *m * c.inverse()
}

/// A distinguished conjugator together with the freedom left in choosing it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjugatorFamily {
    pub canonical_member: Su11Matrix,
    pub description: String,
    pub residual_subgroup: Subgroup,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CanonicalReduction {
    pub conjugator: ConjugatorFamily,
    /// `C M C⁻¹`.
    pub canonical: Su11Matrix,
    pub classification: Classification,
}

impl CanonicalReduction {
    /// Parameter of the canonical form: `φ̂`, `ξ̂` or `ν̂`, read so that
    /// `canonical ≈ sign · G(param)` with `sign` the trace sign (always `+`
    /// for class K).
    pub fn parameter(&self) -> f64 {
        let s = self.sign();
        let alpha = self.canonical.alpha();
        let beta = self.canonical.beta();
        match self.classification.class {
            Subgroup::K => 2.0 * alpha.arg(),
            Subgroup::A => 2.0 * (s * beta.im).asinh(),
            Subgroup::N => 2.0 * s * beta.re,
        }
    }

    /// Overall sign in front of the subgroup element.
    pub fn sign(&self) -> f64 {
        match self.classification.class {
            Subgroup::K => 1.0,
            _ => self.classification.trace_sign.factor(),
        }
    }

    /// `sign · G(param)` for the recovered parameter.
    pub fn ideal_form(&self) -> Su11Matrix {
        let g = self.classification.class.element(self.parameter());
        if self.sign() < 0.0 {
            Su11Matrix::from_parts_unchecked(-g.alpha(), -g.beta())
        } else {
            g
        }
    }

    /// Largest entry that must vanish in the target form.
    ///
    /// K: `|β̂|`. A: `|Re β̂|`, `|Im α̂|`. N: `|Re α̂ ∓ 1|`, `|Im β̂|`,
    /// `|Im α̂ + Re β̂|`.
    pub fn off_form_residual(&self) -> f64 {
        let alpha = self.canonical.alpha();
        let beta = self.canonical.beta();
        match self.classification.class {
            Subgroup::K => beta.norm(),
            Subgroup::A => beta.re.abs().max(alpha.im.abs()),
            Subgroup::N => (alpha.re - self.sign())
                .abs()
                .max(beta.im.abs())
                .max((alpha.im + beta.re).abs()),
        }
    }
}

/// Conjugates `m` into `K(φ̂)`, `±A(ξ̂)` or `±N(ν̂)`.
///
/// Canonical members:
/// * K: `C = [[a, −a z*], [−a z, a]]` with `a = 1/√(1−|z|²)`, sending the
///   inside fixed point `z` to the origin.
/// * A: among the conjugators sending the fixed points to `±i`, the one of
///   least Frobenius norm with `Re a > 0`; the pair is ordered so that
///   `ξ̂ ≥ 0`.
/// * N: `C = K(arg z − π/2)`, rotating the double fixed point to `+i`.
pub fn reduce_to_canonical(m: &Su11Matrix) -> Result<CanonicalReduction> {
    let classification = classify(m);
    if classification.degenerate {
        return Err(Error::DegenerateMatrix);
    }
    let points = fixed_points_for(m, &classification);
    let (c, description) = match (classification.class, points) {
        (Subgroup::K, FixedPointSet::InsideOutside { inside, .. }) => {
            let z = inside.value().unwrap_or_default();
            let a = (1.0 - z.norm_sqr()).sqrt().recip();
            (
                Su11Matrix::from_parts_unchecked(Complex64::new(a, 0.0), -z.conj() * a),
                "K(chi) * C for any chi",
            )
        }
        (Subgroup::A, FixedPointSet::BoundaryPair { first, second }) => {
            let (z1, z2) = (first.value().unwrap_or_default(), second.value().unwrap_or_default());
            let mut c = boundary_pair_conjugator(z1, z2);
            let s = classification.trace_sign.factor();
            if s * conjugate(m, &c).beta().im < 0.0 {
                c = boundary_pair_conjugator(z2, z1);
            }
            (c, "A(xi') * C for any xi'")
        }
        (Subgroup::N, FixedPointSet::DoubleBoundary(z)) => {
            let psi = z.value().unwrap_or_default().arg() - FRAC_PI_2;
            (
                make_k(psi),
                "N(nu') * C for any nu' (A(xi') * C rescales nu by exp(-xi'))",
            )
        }
        // A pure rotation that fell in the N band; it is already diagonal.
        (_, FixedPointSet::InsideOutside { .. }) => (Su11Matrix::IDENTITY, "K(chi) * C for any chi"),
        _ => return Err(Error::DegenerateMatrix),
    };
    let residual_subgroup = classification.class;
    Ok(CanonicalReduction {
        conjugator: ConjugatorFamily {
            canonical_member: c,
            description: description.to_string(),
            residual_subgroup,
        },
        canonical: conjugate(m, &c),
        classification,
    })
}

/// SU(1,1) element sending the boundary points `z1 ↦ +i`, `z2 ↦ −i`.
///
/// Writing `C = (a, b)` as a real 4-vector, the two conditions
/// `b* + a* z = t (a + b z)` are real-linear and leave a two-dimensional
/// kernel (the conjugators `A(ξ')C` and their disc-reversing partners). The
/// form `|a|² − |b|²` restricted to that kernel is indefinite; its positive
/// eigenvector gives the member of least norm.
fn boundary_pair_conjugator(z1: Complex64, z2: Complex64) -> Su11Matrix {
    let i = Complex64::i();
    let condition = |x: [f64; 4], z: Complex64, t: Complex64| {
        let a = Complex64::new(x[0], x[1]);
        let b = Complex64::new(x[2], x[3]);
        b.conj() + a.conj() * z - t * (a + b * z)
    };
    let mut system = [[0.0; 4]; 4];
    for col in 0..4 {
        let mut e = [0.0; 4];
        e[col] = 1.0;
        let f1 = condition(e, z1, i);
        let f2 = condition(e, z2, -i);
        system[0][col] = f1.re;
        system[1][col] = f1.im;
        system[2][col] = f2.re;
        system[3][col] = f2.im;
    }
    let [v1, v2] = kernel_of_rank_two(system);

    let form = |x: &[f64; 4], y: &[f64; 4]| x[0] * y[0] + x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
    let (q11, q12, q22) = (form(&v1, &v1), form(&v1, &v2), form(&v2, &v2));
    // Largest eigenvalue of [[q11, q12], [q12, q22]].
    let mean = 0.5 * (q11 + q22);
    let half_gap = (0.25 * (q11 - q22).powi(2) + q12 * q12).sqrt();
    let lambda = mean + half_gap;
    let (e1, e2) = if (q11 - lambda).abs() + q12.abs() >= (q22 - lambda).abs() + q12.abs() {
        (q12, lambda - q11)
    } else {
        (lambda - q22, q12)
    };
    let mut x = [0.0; 4];
    for k in 0..4 {
        x[k] = e1 * v1[k] + e2 * v2[k];
    }
    let scale = form(&x, &x).sqrt().recip();
    let sign = if x[0] < 0.0 || (x[0] == 0.0 && x[1] < 0.0) {
        -1.0
    } else {
        1.0
    };
    Su11Matrix::from_parts_unchecked(
        Complex64::new(x[0], x[1]) * (sign * scale),
        Complex64::new(x[2], x[3]) * (sign * scale),
    )
}

/// Orthonormal basis of the null space of a 4×4 matrix known to have rank 2.
///
/// Gaussian elimination with full pivoting; the two columns left after two
/// pivots are the free variables.
fn kernel_of_rank_two(mut a: [[f64; 4]; 4]) -> [[f64; 4]; 2] {
    let mut cols = [0usize, 1, 2, 3];
    for step in 0..2 {
        let (mut pr, mut pc, mut best) = (step, step, -1.0);
        for (r, row) in a.iter().enumerate().skip(step) {
            for (c, v) in row.iter().enumerate().skip(step) {
                if v.abs() > best {
                    best = v.abs();
                    pr = r;
                    pc = c;
                }
            }
        }
        a.swap(step, pr);
        for row in a.iter_mut() {
            row.swap(step, pc);
        }
        cols.swap(step, pc);
        let pivot = a[step][step];
        for v in a[step].iter_mut() {
            *v /= pivot;
        }
        let pivot_row = a[step];
        for (r, row) in a.iter_mut().enumerate() {
            if r != step {
                let f = row[step];
                for (v, p) in row.iter_mut().zip(pivot_row.iter()) {
                    *v -= f * p;
                }
            }
        }
    }
    // Reduced rows: x_p + a[p][2] x_f0 + a[p][3] x_f1 = 0 for p = 0, 1.
    let mut basis = [[0.0; 4]; 2];
    for (k, v) in basis.iter_mut().enumerate() {
        let free = 2 + k;
        v[cols[free]] = 1.0;
        v[cols[0]] = -a[0][free];
        v[cols[1]] = -a[1][free];
    }
    let norm = |v: &[f64; 4]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let n0 = norm(&basis[0]);
    basis[0].iter_mut().for_each(|x| *x /= n0);
    let proj: f64 = basis[0].iter().zip(basis[1].iter()).map(|(x, y)| x * y).sum();
    let b0 = basis[0];
    basis[1].iter_mut().zip(b0.iter()).for_each(|(y, x)| *y -= proj * x);
    let n1 = norm(&basis[1]);
    basis[1].iter_mut().for_each(|x| *x /= n1);
    basis
}

/// Wraps an angle difference into `(−2π, 2π]`, the period of `K(φ)`.
pub fn wrap_k_angle(phi: f64) -> f64 {
    let period = 4.0 * PI;
    let mut r = phi.rem_euclid(period);
    if r > 2.0 * PI {
        r -= period;
    }
    r
}
