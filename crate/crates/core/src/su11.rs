//! The SU(1,1) transfer matrix and its Möbius action on the complex plane.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::DISC_TOL;

/// A point of the extended complex plane.
///
/// Field quotients `z = E⁻/E⁺` live here. The point at infinity is kept as a
/// separate variant so that the Möbius action is total.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscPoint {
    Finite(Complex64),
    Infinity,
}

/// Invariant regions of the SU(1,1) action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Inside,
    Boundary,
    Outside,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::Inside => "inside",
            Region::Boundary => "boundary",
            Region::Outside => "outside",
        })
    }
}

impl fmt::Display for DiscPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiscPoint::Finite(z) => f.write_str(&crate::numfmt::complex(*z)),
            DiscPoint::Infinity => f.write_str("inf"),
        }
    }
}

impl DiscPoint {
    /// Builds a point; non-finite components collapse to [`DiscPoint::Infinity`].
    pub fn new(re: f64, im: f64) -> Self {
        Complex64::new(re, im).into()
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, DiscPoint::Infinity)
    }

    pub fn value(&self) -> Option<Complex64> {
        match *self {
            DiscPoint::Finite(z) => Some(z),
            DiscPoint::Infinity => None,
        }
    }

    /// `|z|`, infinite for the point at infinity.
    pub fn modulus(&self) -> f64 {
        self.value().map_or(f64::INFINITY, |z| z.norm())
    }

    pub fn region(&self) -> Region {
        self.region_with(DISC_TOL)
    }

    pub fn region_with(&self, tol: f64) -> Region {
        let r = self.modulus();
        if r < 1.0 - tol {
            Region::Inside
        } else if r > 1.0 + tol {
            Region::Outside
        } else {
            Region::Boundary
        }
    }

    /// Euclidean distance; zero between two infinities, infinite between a
    /// finite point and infinity.
    pub fn distance(&self, other: &DiscPoint) -> f64 {
        match (self, other) {
            (DiscPoint::Finite(a), DiscPoint::Finite(b)) => (a - b).norm(),
            (DiscPoint::Infinity, DiscPoint::Infinity) => 0.0,
            _ => f64::INFINITY,
        }
    }

    /// Reflection in the unit circle, `z ↦ 1/z*`.
    pub fn inversion(&self) -> DiscPoint {
        match *self {
            DiscPoint::Infinity => DiscPoint::Finite(Complex64::new(0.0, 0.0)),
            DiscPoint::Finite(z) if z == Complex64::new(0.0, 0.0) => DiscPoint::Infinity,
            DiscPoint::Finite(z) => (1.0 / z.conj()).into(),
        }
    }
}

impl From<Complex64> for DiscPoint {
    fn from(z: Complex64) -> Self {
        if z.re.is_finite() && z.im.is_finite() {
            DiscPoint::Finite(z)
        } else {
            DiscPoint::Infinity
        }
    }
}

/// Transfer matrix of a lossless multilayer, `[[α, β], [β*, α*]]` with
/// `|α|² − |β|² = 1`.
///
/// Only the pair `(α, β)` is stored, so the SU(1,1) structure can only be
/// violated through the determinant, which is checked on construction.
/// Products are not renormalized; call [`Su11Matrix::renormalize`] on long
/// chains if drift matters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Su11Matrix {
    alpha: Complex64,
    beta: Complex64,
}

impl Su11Matrix {
    pub const IDENTITY: Su11Matrix = Su11Matrix {
        alpha: Complex64::new(1.0, 0.0),
        beta: Complex64::new(0.0, 0.0),
    };

    /// Validates `||α|² − |β|² − 1| ≤ tol`. The pair is stored as given.
    pub fn new(alpha: Complex64, beta: Complex64, tol: f64) -> Result<Self> {
        let deviation = (alpha.norm_sqr() - beta.norm_sqr() - 1.0).abs();
        // NaN deviations must fail too.
        if deviation <= tol {
            Ok(Su11Matrix { alpha, beta })
        } else {
            Err(Error::DeterminantViolation {
                deviation,
                tolerance: tol,
            })
        }
    }

    /// Scales an arbitrary pair onto the group, failing when
    /// `|α|² − |β|² ≤ 0`.
    pub fn normalized(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let det = alpha.norm_sqr() - beta.norm_sqr();
        if !(det > 0.0 && det.is_finite()) {
            return Err(Error::DeterminantViolation {
                deviation: (det - 1.0).abs(),
                tolerance: 0.0,
            });
        }
        let s = det.sqrt().recip();
        Ok(Su11Matrix::from_parts_unchecked(alpha * s, beta * s))
    }

    /// Transfer matrix `[[1/T, R*/T*], [R/T, 1/T*]]` from the overall
    /// reflection and transmission coefficients.
    pub fn from_coefficients(r: Complex64, t: Complex64, tol: f64) -> Result<Self> {
        if t.norm_sqr() == 0.0 {
            return Err(Error::ZeroTransmission);
        }
        Su11Matrix::new(t.inv(), r.conj() / t.conj(), tol)
    }

    /// Caller guarantees the constraint up to rounding.
    pub(crate) fn from_parts_unchecked(alpha: Complex64, beta: Complex64) -> Self {
        Su11Matrix { alpha, beta }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// Full matrix, row-major.
    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        [[self.alpha, self.beta], [self.beta.conj(), self.alpha.conj()]]
    }

    /// `|α|² − |β|²`.
    pub fn determinant(&self) -> f64 {
        self.alpha.norm_sqr() - self.beta.norm_sqr()
    }

    pub fn determinant_deviation(&self) -> f64 {
        (self.determinant() - 1.0).abs()
    }

    pub fn renormalize(&self) -> Self {
        let s = self.determinant().sqrt().recip();
        Su11Matrix::from_parts_unchecked(self.alpha * s, self.beta * s)
    }

    pub fn inverse(&self) -> Self {
        Su11Matrix::from_parts_unchecked(self.alpha.conj(), -self.beta)
    }

    /// `Tr M = 2 Re α`.
    pub fn trace(&self) -> f64 {
        2.0 * self.alpha.re
    }

    /// Largest entrywise difference between the two full matrices.
    pub fn max_entry_distance(&self, other: &Su11Matrix) -> f64 {
        (self.alpha - other.alpha).norm().max((self.beta - other.beta).norm())
    }

    /// Bilinear action `z ↦ (β* + α* z)/(α + β z)`.
    ///
    /// Infinity maps to `α*/β` (or stays at infinity when `β = 0`); a pole
    /// `α + β z = 0` maps to infinity.
    pub fn apply(&self, z: DiscPoint) -> DiscPoint {
        match z {
            DiscPoint::Finite(z) => {
                let den = self.alpha + self.beta * z;
                if den.norm_sqr() == 0.0 {
                    return DiscPoint::Infinity;
                }
                ((self.beta.conj() + self.alpha.conj() * z) / den).into()
            }
            DiscPoint::Infinity => {
                if self.beta.norm_sqr() == 0.0 {
                    DiscPoint::Infinity
                } else {
                    (self.alpha.conj() / self.beta).into()
                }
            }
        }
    }

    /// Overall reflection coefficient `R = β*/α`.
    pub fn reflection(&self) -> Complex64 {
        self.beta.conj() / self.alpha
    }

    /// Overall transmission coefficient `T = 1/α`.
    pub fn transmission(&self) -> Complex64 {
        self.alpha.inv()
    }
}

impl Default for Su11Matrix {
    fn default() -> Self {
        Su11Matrix::IDENTITY
    }
}

impl Mul for Su11Matrix {
    type Output = Su11Matrix;

    fn mul(self, rhs: Su11Matrix) -> Su11Matrix {
        Su11Matrix::from_parts_unchecked(
            self.alpha * rhs.alpha + self.beta * rhs.beta.conj(),
            self.alpha * rhs.beta + self.beta * rhs.alpha.conj(),
        )
    }
}

impl Mul<&Su11Matrix> for &Su11Matrix {
    type Output = Su11Matrix;

    fn mul(self, rhs: &Su11Matrix) -> Su11Matrix {
        *self * *rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iwasawa::{make_a, make_k};
    use crate::tolerance::{DET_TOL, GEO_TOL};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sqrt3() -> Complex64 {
        c(3f64.sqrt(), 0.0)
    }

    #[test]
    fn points_display() {
        assert_eq!(DiscPoint::new(0.5, -0.25).to_string(), "0.5 - 0.25i");
        assert_eq!(DiscPoint::Infinity.to_string(), "inf");
    }

    #[test]
    fn construction() {
        let id = Su11Matrix::new(c(1.0, 0.0), c(0.0, 0.0), DET_TOL).unwrap();
        assert_eq!(id, Su11Matrix::IDENTITY);
        assert!(Su11Matrix::new(c(2.0, 0.0), sqrt3(), DET_TOL).is_ok());
        assert!(matches!(
            Su11Matrix::new(c(1.0, 0.0), c(1.0, 0.0), DET_TOL),
            Err(Error::DeterminantViolation { .. })
        ));
        assert!(Su11Matrix::new(c(f64::NAN, 0.0), c(0.0, 0.0), DET_TOL).is_err());
    }

    #[test]
    fn stored_pair_is_not_renormalized() {
        let m = Su11Matrix::new(c(1.0 + 1e-10, 0.0), c(0.0, 0.0), DET_TOL).unwrap();
        assert_eq!(m.alpha().re, 1.0 + 1e-10);
        assert!(m.renormalize().determinant_deviation() < 1e-15);
    }

    #[test]
    fn coefficients_constructor() {
        let id = Su11Matrix::from_coefficients(c(0.0, 0.0), c(1.0, 0.0), DET_TOL).unwrap();
        assert_eq!(id, Su11Matrix::IDENTITY);

        let m = Su11Matrix::from_coefficients(c(0.6, 0.0), c(0.0, 0.8), DET_TOL).unwrap();
        assert!((m.alpha() - c(0.0, -1.25)).norm() < 1e-15);
        assert!((m.beta() - c(0.0, 0.75)).norm() < 1e-15);
        assert!(m.determinant_deviation() < DET_TOL);
        assert!((m.reflection() - c(0.6, 0.0)).norm() < 1e-15);
        assert!((m.transmission() - c(0.0, 0.8)).norm() < 1e-15);

        assert!(matches!(
            Su11Matrix::from_coefficients(c(0.5, 0.0), c(0.5, 0.0), DET_TOL),
            Err(Error::DeterminantViolation { .. })
        ));
        assert_eq!(
            Su11Matrix::from_coefficients(c(1.0, 0.0), c(0.0, 0.0), DET_TOL),
            Err(Error::ZeroTransmission)
        );
    }

    #[test]
    fn products_and_inverses() {
        let m = Su11Matrix::new(c(2.0, 0.0), sqrt3(), DET_TOL).unwrap();
        assert_eq!(Su11Matrix::IDENTITY * m, m);
        assert!((m * m.inverse()).max_entry_distance(&Su11Matrix::IDENTITY) < DET_TOL);
        assert_eq!(m.inverse().alpha(), c(2.0, 0.0));
        assert_eq!(m.inverse().beta(), -sqrt3());
        assert_eq!(Su11Matrix::IDENTITY.inverse(), Su11Matrix::IDENTITY);

        let k = make_k(0.7) * make_k(1.9);
        assert!(k.max_entry_distance(&make_k(2.6)) < 1e-15);
        assert!(make_k(0.7).inverse().max_entry_distance(&make_k(-0.7)) < 1e-15);
    }

    #[test]
    fn traces() {
        assert_eq!(Su11Matrix::IDENTITY.trace(), 2.0);
        assert!((make_a(2.0).trace() - 2.0 * 1f64.cosh()).abs() < 1e-15);
        assert!((make_a(2.0).trace() - 3.086161269630488).abs() < 1e-12);
        assert!(make_k(PI).trace().abs() < 1e-15);
    }

    #[test]
    fn mobius_action() {
        let z = DiscPoint::new(0.3, -0.2);
        assert_eq!(Su11Matrix::IDENTITY.apply(z), z);

        let phi = 1.1;
        let expected = Complex64::from_polar(1.0, -phi) * c(0.3, -0.2);
        assert!(make_k(phi).apply(z).distance(&expected.into()) < 1e-15);

        let m = Su11Matrix::new(c(2.0, 0.0), sqrt3(), DET_TOL).unwrap();
        assert!(m.apply(DiscPoint::new(1.0, 0.0)).distance(&DiscPoint::new(1.0, 0.0)) < 1e-15);
    }

    #[test]
    fn poles_and_infinity() {
        let m = Su11Matrix::new(c(2.0, 0.0), sqrt3(), DET_TOL).unwrap();
        // α + βz = 0 at z = −2/√3
        let pole = DiscPoint::new(-2.0 / 3f64.sqrt(), 0.0);
        let image = m.apply(pole);
        assert!(image.is_infinite() || image.modulus() > 1e14);
        let back = m.apply(DiscPoint::Infinity);
        assert!(back.distance(&DiscPoint::new(2.0 / 3f64.sqrt(), 0.0)) < 1e-15);
        assert_eq!(make_k(0.4).apply(DiscPoint::Infinity), DiscPoint::Infinity);
        assert_eq!(DiscPoint::new(f64::INFINITY, 0.0), DiscPoint::Infinity);
    }

    #[test]
    fn regions() {
        assert_eq!(DiscPoint::new(0.5, 0.0).region(), Region::Inside);
        assert_eq!(DiscPoint::new(0.0, 1.0).region(), Region::Boundary);
        assert_eq!(DiscPoint::new(1.0 + 1e-12, 0.0).region(), Region::Boundary);
        assert_eq!(DiscPoint::new(1.5, 0.0).region(), Region::Outside);
        assert_eq!(DiscPoint::Infinity.region(), Region::Outside);
    }

    fn arb_matrix() -> impl Strategy<Value = Su11Matrix> {
        (0.0..2.0f64, -PI..PI, -PI..PI).prop_map(|(r, a, b)| {
            Su11Matrix::from_parts_unchecked(Complex64::from_polar(r.cosh(), a), Complex64::from_polar(r.sinh(), b))
        })
    }

    fn arb_point() -> impl Strategy<Value = DiscPoint> {
        (0.0..3.0f64, -PI..PI).prop_map(|(r, t)| Complex64::from_polar(r, t).into())
    }

    proptest! {
        #[test]
        fn group_closure(m1 in arb_matrix(), m2 in arb_matrix()) {
            prop_assert!((m1 * m2).determinant_deviation() <= 10.0 * DET_TOL);
        }

        #[test]
        fn left_action_law(m1 in arb_matrix(), m2 in arb_matrix(), z in arb_point()) {
            let direct = (m1 * m2).apply(z);
            let nested = m1.apply(m2.apply(z));
            // skip points next to a pole of either map
            prop_assume!(direct.modulus() < 1e3 && nested.modulus() < 1e3 && m2.apply(z).modulus() < 1e3);
            prop_assert!(direct.distance(&nested) <= GEO_TOL);
        }

        #[test]
        fn regions_are_invariant(m in arb_matrix(), z in arb_point()) {
            let r = z.modulus();
            prop_assume!((r - 1.0).abs() > 1e-6);
            prop_assert_eq!(m.apply(z).region(), z.region());
        }

        #[test]
        fn boundary_stays_on_boundary(m in arb_matrix(), t in -PI..PI) {
            let z: DiscPoint = Complex64::from_polar(1.0, t).into();
            prop_assert!((m.apply(z).modulus() - 1.0).abs() <= DISC_TOL);
        }

        #[test]
        fn trace_is_conjugation_invariant(m in arb_matrix(), c in arb_matrix()) {
            let hat = c * m * c.inverse();
            prop_assert!((hat.trace() - m.trace()).abs() <= DET_TOL);
        }

        #[test]
        fn energy_is_conserved(m in arb_matrix()) {
            let total = m.reflection().norm_sqr() + m.transmission().norm_sqr();
            prop_assert!((total - 1.0).abs() <= DET_TOL);
        }
    }
}
