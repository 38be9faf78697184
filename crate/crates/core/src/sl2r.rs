//! The real picture: `𝓜 = U M U⁻¹` with `U = (1/√2)[[1, i], [i, 1]]`.
//!
//! Conjugation by `U` carries SU(1,1) onto SL(2,R) and the three Iwasawa
//! subgroups onto rotations, diagonal magnifiers and lower-triangular lenses,
//! the building blocks of first-order (ABCD) ray optics.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt::{self, Write as _};
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iwasawa::{decompose, IwasawaFactors};
use crate::numfmt;
use crate::su11::{DiscPoint, Su11Matrix};

/// Real 2×2 matrix with unit determinant, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sl2rMatrix {
    entries: [[f64; 2]; 2],
}

impl Sl2rMatrix {
    pub const IDENTITY: Sl2rMatrix = Sl2rMatrix {
        entries: [[1.0, 0.0], [0.0, 1.0]],
    };

    pub fn new(a11: f64, a12: f64, a21: f64, a22: f64, tol: f64) -> Result<Self> {
        let m = Sl2rMatrix {
            entries: [[a11, a12], [a21, a22]],
        };
        let deviation = (m.determinant() - 1.0).abs();
        if deviation <= tol {
            Ok(m)
        } else {
            Err(Error::DeterminantViolation {
                deviation,
                tolerance: tol,
            })
        }
    }

    pub fn entries(&self) -> [[f64; 2]; 2] {
        self.entries
    }

    pub fn determinant(&self) -> f64 {
        let [[a, b], [c, d]] = self.entries;
        a * d - b * c
    }

    pub fn trace(&self) -> f64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn max_entry_distance(&self, other: &Sl2rMatrix) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.entries[r][c] - other.entries[r][c]).abs());
            }
        }
        worst
    }

    /// Rotation `[[cos(φ/2), sin(φ/2)], [−sin(φ/2), cos(φ/2)]]`.
    pub fn rotation(phi: f64) -> Self {
        let (s, c) = (phi / 2.0).sin_cos();
        Sl2rMatrix {
            entries: [[c, s], [-s, c]],
        }
    }

    /// Magnifier `diag(e^{ξ/2}, e^{−ξ/2})`.
    pub fn magnifier(xi: f64) -> Self {
        let m = (xi / 2.0).exp();
        Sl2rMatrix {
            entries: [[m, 0.0], [0.0, m.recip()]],
        }
    }

    /// Thin lens `[[1, 0], [ν, 1]]`.
    pub fn lens(nu: f64) -> Self {
        Sl2rMatrix {
            entries: [[1.0, 0.0], [nu, 1.0]],
        }
    }

    pub fn apply(&self, v: &FieldVector) -> FieldVector {
        let [[a, b], [c, d]] = self.entries;
        FieldVector {
            plus: v.plus * a + v.minus * b,
            minus: v.plus * c + v.minus * d,
        }
    }
}

impl Mul for Sl2rMatrix {
    type Output = Sl2rMatrix;

    fn mul(self, rhs: Sl2rMatrix) -> Sl2rMatrix {
        let (l, r) = (self.entries, rhs.entries);
        let mut out = [[0.0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = l[i][0] * r[0][j] + l[i][1] * r[1][j];
            }
        }
        Sl2rMatrix { entries: out }
    }
}

/// `U M U⁻¹`, expanded in closed form.
pub fn to_sl2r(m: &Su11Matrix) -> Sl2rMatrix {
    let (a, b) = (m.alpha(), m.beta());
    Sl2rMatrix {
        entries: [[a.re + b.im, a.im + b.re], [b.re - a.im, a.re - b.im]],
    }
}

pub fn from_sl2r(r: &Sl2rMatrix, tol: f64) -> Result<Su11Matrix> {
    let [[a11, a12], [a21, a22]] = r.entries;
    Su11Matrix::new(
        Complex64::new(0.5 * (a11 + a22), 0.5 * (a12 - a21)),
        Complex64::new(0.5 * (a12 + a21), 0.5 * (a11 - a22)),
        tol,
    )
}

/// Field amplitudes `(E⁺, E⁻)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldVector {
    pub plus: Complex64,
    pub minus: Complex64,
}

impl FieldVector {
    pub fn new(plus: Complex64, minus: Complex64) -> Self {
        FieldVector { plus, minus }
    }

    /// Field quotient `E⁻/E⁺`.
    pub fn quotient(&self) -> DiscPoint {
        if self.plus.norm_sqr() == 0.0 {
            DiscPoint::Infinity
        } else {
            (self.minus / self.plus).into()
        }
    }

    pub fn transformed_by(&self, m: &Su11Matrix) -> FieldVector {
        let [[a, b], [c, d]] = m.entries();
        FieldVector {
            plus: a * self.plus + b * self.minus,
            minus: c * self.plus + d * self.minus,
        }
    }
}

/// `ℰ = U C E`.
pub fn transform_field_vector(e: &FieldVector, c: &Su11Matrix) -> FieldVector {
    let v = e.transformed_by(c);
    let i = Complex64::i();
    FieldVector {
        plus: (v.plus + i * v.minus) * FRAC_1_SQRT_2,
        minus: (i * v.plus + v.minus) * FRAC_1_SQRT_2,
    }
}

/// Parameters of `𝓜 = 𝒦(φ) 𝒜(ξ) 𝒩(ν)`; identical to the SU(1,1) ones.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealIwasawaFactors {
    pub phi: f64,
    pub xi: f64,
    pub nu: f64,
}

impl RealIwasawaFactors {
    pub fn recompose(&self) -> Sl2rMatrix {
        Sl2rMatrix::rotation(self.phi) * Sl2rMatrix::magnifier(self.xi) * Sl2rMatrix::lens(self.nu)
    }

    pub fn magnification(&self) -> f64 {
        (self.xi / 2.0).exp()
    }
}

impl From<IwasawaFactors> for RealIwasawaFactors {
    fn from(f: IwasawaFactors) -> Self {
        RealIwasawaFactors {
            phi: f.phi,
            xi: f.xi,
            nu: f.nu,
        }
    }
}

pub fn real_iwasawa(r: &Sl2rMatrix, tol: f64) -> Result<RealIwasawaFactors> {
    Ok(decompose(&from_sl2r(r, tol)?).into())
}

/// One line per non-trivial factor, read as ray-optics elements.
///
/// Factors below `1e-12` in magnitude are treated as absent.
pub fn physical_reading(f: &RealIwasawaFactors) -> String {
    let eps = 1e-12;
    let mut out = String::new();
    if f.phi.abs() <= eps && f.xi.abs() <= eps && f.nu.abs() <= eps {
        out.push_str("identity system\n");
        return out;
    }
    if f.phi.abs() > eps {
        let _ = writeln!(out, "rotation by phi = {} rad", numfmt::num(f.phi));
    }
    if f.xi.abs() > eps {
        let _ = writeln!(
            out,
            "magnifier with m = exp(xi/2) = {} (x scaled by m, p by 1/m)",
            numfmt::num(f.magnification())
        );
    }
    if f.nu.abs() > eps {
        let _ = writeln!(out, "lens of power {}", numfmt::num(f.nu));
    }
    out
}

impl fmt::Display for Sl2rMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.entries;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}
