//! Iwasawa factorization `M = K(φ) A(ξ) N(ν)`.
//!
//! The factors are recovered in closed form from the pivot `u = α + iβ`,
//! which equals `e^{iφ/2} e^{−ξ/2}` for any product `K(φ)A(ξ)N(ν)`:
//!
//! ```text
//! φ = 2 arg u,   ξ = −2 ln |u|,   ν = −Im((α − iβ)/u)
//! ```
//!
//! `u` never vanishes on the group, so the extraction is total. `φ` lands in
//! `(−2π, 2π]`; note that `K(2π) = −I`, so `φ` and `φ ± 4π` name the same
//! matrix while `φ` and `φ ± 2π` differ by an overall sign.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::su11::Su11Matrix;

/// The three one-parameter subgroups. Also used as the class tag of the
/// trace criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subgroup {
    /// Compact: `K(φ)`, rotations about the origin.
    K,
    /// Abelian: `A(ξ)`, fixed points `±i`.
    A,
    /// Nilpotent: `N(ν)`, double fixed point `+i`.
    N,
}

impl Subgroup {
    pub fn element(self, param: f64) -> Su11Matrix {
        match self {
            Subgroup::K => make_k(param),
            Subgroup::A => make_a(param),
            Subgroup::N => make_n(param),
        }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subgroup::K => "K",
            Subgroup::A => "A",
            Subgroup::N => "N",
        })
    }
}

/// `K(φ) = diag(e^{iφ/2}, e^{−iφ/2})`.
pub fn make_k(phi: f64) -> Su11Matrix {
    Su11Matrix::from_parts_unchecked(Complex64::from_polar(1.0, phi / 2.0), Complex64::new(0.0, 0.0))
}

/// `A(ξ) = [[cosh(ξ/2), i sinh(ξ/2)], [−i sinh(ξ/2), cosh(ξ/2)]]`.
pub fn make_a(xi: f64) -> Su11Matrix {
    let h = xi / 2.0;
    Su11Matrix::from_parts_unchecked(Complex64::new(h.cosh(), 0.0), Complex64::new(0.0, h.sinh()))
}

/// `N(ν) = [[1 − iν/2, ν/2], [ν/2, 1 + iν/2]]`.
pub fn make_n(nu: f64) -> Su11Matrix {
    Su11Matrix::from_parts_unchecked(Complex64::new(1.0, -nu / 2.0), Complex64::new(nu / 2.0, 0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IwasawaFactors {
    /// Rotation angle in radians, in `(−2π, 2π]`.
    pub phi: f64,
    pub xi: f64,
    pub nu: f64,
}

impl IwasawaFactors {
    pub fn new(phi: f64, xi: f64, nu: f64) -> Self {
        IwasawaFactors { phi, xi, nu }
    }

    pub fn decompose(m: &Su11Matrix) -> Self {
        decompose(m)
    }

    pub fn recompose(&self) -> Su11Matrix {
        recompose(self)
    }

    /// Scale factor `exp(ξ/2)` of the abelian factor.
    pub fn magnification(&self) -> f64 {
        (self.xi / 2.0).exp()
    }
}

/// The pivot `α + iβ`.
pub fn pivot(m: &Su11Matrix) -> Complex64 {
    m.alpha() + Complex64::i() * m.beta()
}

pub fn decompose(m: &Su11Matrix) -> IwasawaFactors {
    let u = pivot(m);
    let w = (m.alpha() - Complex64::i() * m.beta()) / u;
    IwasawaFactors {
        phi: 2.0 * u.arg(),
        xi: -2.0 * u.norm().ln(),
        nu: -w.im,
    }
}

pub fn recompose(f: &IwasawaFactors) -> Su11Matrix {
    make_k(f.phi) * (make_a(f.xi) * make_n(f.nu))
}
