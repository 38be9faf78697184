//! Transfer matrices of physical layer stacks.
//!
//! Standard thin-film composition: interface matrices
//! `I(i,j) = (1/t_ij) [[1, r_ij], [r_ij, 1]]` with Fresnel amplitudes, and
//! propagation matrices `L(j) = diag(e^{−iδ_j}, e^{iδ_j})` with
//! `δ_j = (2π/λ) n_j d_j cos θ_j`. The product
//! `I(0,1) L(1) I(1,2) … L(m) I(m,s)` has unit determinant only when the
//! ambient and substrate media match, which is checked on construction.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::su11::Su11Matrix;
use crate::tolerance::{EVANESCENT_TOL, STACK_DET_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarization {
    /// Electric field perpendicular to the plane of incidence.
    S,
    /// Electric field in the plane of incidence.
    P,
}

impl fmt::Display for Polarization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarization::S => "s",
            Polarization::P => "p",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Layer {
    pub index: f64,
    /// Same length unit as the wavelength.
    pub thickness: f64,
}

impl Layer {
    pub fn new(index: f64, thickness: f64) -> Self {
        Layer { index, thickness }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerStack {
    pub ambient_index: f64,
    pub layers: Vec<Layer>,
    pub substrate_index: f64,
    pub wavelength: f64,
    pub incidence_angle_deg: f64,
    pub polarization: Polarization,
}

impl LayerStack {
    /// Empty stack at normal incidence, s polarization, substrate equal to
    /// the ambient.
    pub fn new(ambient_index: f64, wavelength: f64) -> Self {
        LayerStack {
            ambient_index,
            layers: Vec::new(),
            substrate_index: ambient_index,
            wavelength,
            incidence_angle_deg: 0.0,
            polarization: Polarization::S,
        }
    }

    pub fn with_layer(mut self, index: f64, thickness: f64) -> Self {
        self.layers.push(Layer::new(index, thickness));
        self
    }

    pub fn with_angle(mut self, degrees: f64) -> Self {
        self.incidence_angle_deg = degrees;
        self
    }

    pub fn with_polarization(mut self, polarization: Polarization) -> Self {
        self.polarization = polarization;
        self
    }

    pub fn with_substrate(mut self, index: f64) -> Self {
        self.substrate_index = index;
        self
    }

    pub fn build_matrix(&self) -> Result<Su11Matrix> {
        build_matrix(self)
    }

    fn validate(&self) -> Result<()> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(self.ambient_index) || !positive(self.substrate_index) {
            return Err(Error::InvalidStack("bounding media need positive indices".into()));
        }
        if !positive(self.wavelength) {
            return Err(Error::InvalidStack("wavelength must be positive".into()));
        }
        if !(self.incidence_angle_deg.is_finite() && (0.0..90.0).contains(&self.incidence_angle_deg)) {
            return Err(Error::InvalidStack(format!(
                "incidence angle {} outside [0, 90)",
                self.incidence_angle_deg
            )));
        }
        for (k, layer) in self.layers.iter().enumerate() {
            if !positive(layer.index) {
                return Err(Error::InvalidStack(format!("layer {} has non-positive index", k + 1)));
            }
            if !(layer.thickness.is_finite() && layer.thickness >= 0.0) {
                return Err(Error::InvalidStack(format!("layer {} has negative thickness", k + 1)));
            }
        }
        Ok(())
    }
}

/// Refraction angle (radians) from Snell's law `n₁ sin θ₁ = n₂ sin θ₂`.
pub fn snell_angle(n_from: f64, theta_from: f64, n_to: f64) -> Result<f64> {
    let invariant = n_from * theta_from.sin();
    if n_to < invariant + EVANESCENT_TOL {
        return Err(Error::EvanescentWave {
            medium: 0,
            index: n_to,
            threshold: invariant,
        });
    }
    Ok((invariant / n_to).asin())
}

type Mat2 = [[Complex64; 2]; 2];

fn mat_mul(l: &Mat2, r: &Mat2) -> Mat2 {
    [
        [
            l[0][0] * r[0][0] + l[0][1] * r[1][0],
            l[0][0] * r[0][1] + l[0][1] * r[1][1],
        ],
        [
            l[1][0] * r[0][0] + l[1][1] * r[1][0],
            l[1][0] * r[0][1] + l[1][1] * r[1][1],
        ],
    ]
}

/// Fresnel amplitudes `(r_ij, t_ij)` for a wave going from medium i to j.
pub fn fresnel(n_i: f64, cos_i: f64, n_j: f64, cos_j: f64, pol: Polarization) -> (f64, f64) {
    match pol {
        Polarization::S => {
            let den = n_i * cos_i + n_j * cos_j;
            ((n_i * cos_i - n_j * cos_j) / den, 2.0 * n_i * cos_i / den)
        }
        Polarization::P => {
            let den = n_j * cos_i + n_i * cos_j;
            ((n_j * cos_i - n_i * cos_j) / den, 2.0 * n_i * cos_i / den)
        }
    }
}

pub fn build_matrix(stack: &LayerStack) -> Result<Su11Matrix> {
    build_matrix_with_tol(stack, STACK_DET_TOL)
}

pub fn build_matrix_with_tol(stack: &LayerStack, tol: f64) -> Result<Su11Matrix> {
    stack.validate()?;
    let theta0 = stack.incidence_angle_deg.to_radians();
    let k0 = 2.0 * PI / stack.wavelength;

    // (index, cos θ, phase thickness) for ambient, layers, substrate.
    let media = std::iter::once((stack.ambient_index, 0.0))
        .chain(stack.layers.iter().map(|l| (l.index, l.thickness)))
        .chain(std::iter::once((stack.substrate_index, 0.0)));
    let mut resolved = Vec::with_capacity(stack.layers.len() + 2);
    for (k, (n, d)) in media.enumerate() {
        let theta = snell_angle(stack.ambient_index, theta0, n).map_err(|e| match e {
            Error::EvanescentWave { index, threshold, .. } => Error::EvanescentWave {
                medium: k,
                index,
                threshold,
            },
            other => other,
        })?;
        let cos = theta.cos();
        resolved.push((n, cos, k0 * n * d * cos));
    }

    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut m: Mat2 = [[one, zero], [zero, one]];
    for pair in resolved.windows(2) {
        let (n_i, cos_i, _) = pair[0];
        let (n_j, cos_j, delta_j) = pair[1];
        let (r, t) = fresnel(n_i, cos_i, n_j, cos_j, stack.polarization);
        let interface = [
            [Complex64::new(1.0 / t, 0.0), Complex64::new(r / t, 0.0)],
            [Complex64::new(r / t, 0.0), Complex64::new(1.0 / t, 0.0)],
        ];
        m = mat_mul(&m, &interface);
        if delta_j != 0.0 {
            let phase = Complex64::from_polar(1.0, -delta_j);
            m = mat_mul(&m, &[[phase, zero], [zero, phase.conj()]]);
        }
    }
    // The SU(1,1) pattern [[α, β], [β*, α*]] holds only for matched media.
    let pattern = (m[1][0] - m[0][1].conj()).norm().max((m[1][1] - m[0][0].conj()).norm());
    if pattern > tol {
        return Err(Error::DeterminantViolation {
            deviation: pattern.max((m[0][0].norm_sqr() - m[0][1].norm_sqr() - 1.0).abs()),
            tolerance: tol,
        });
    }
    Su11Matrix::new(m[0][0], m[0][1], tol)
}

/// Overall reflection and transmission amplitudes for incidence from the
/// ambient.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Coefficients {
    pub reflection: Complex64,
    pub transmission: Complex64,
}

impl Coefficients {
    pub fn reflectance(&self) -> f64 {
        self.reflection.norm_sqr()
    }

    pub fn transmittance(&self) -> f64 {
        self.transmission.norm_sqr()
    }
}

/// `T = 1/α`, `R = β*/α`.
pub fn coefficients(m: &Su11Matrix) -> Coefficients {
    Coefficients {
        reflection: m.reflection(),
        transmission: m.transmission(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::iwasawa::Subgroup;
    use crate::tolerance::DET_TOL;
    use proptest::prelude::*;

    #[test]
    fn snell() {
        assert_eq!(snell_angle(1.0, 0.0, 1.5).unwrap(), 0.0);
        let t = snell_angle(1.0, 30f64.to_radians(), 1.5).unwrap();
        assert!((t.to_degrees() - 19.47122063449069).abs() < 1e-12);
        assert!(matches!(
            snell_angle(1.5, 80f64.to_radians(), 1.0),
            Err(Error::EvanescentWave { .. })
        ));
    }

    #[test]
    fn empty_stack_is_identity() {
        let m = LayerStack::new(1.0, 550.0).build_matrix().unwrap();
        assert_eq!(m, Su11Matrix::IDENTITY);
        let m = LayerStack::new(1.33, 550.0)
            .with_angle(40.0)
            .with_polarization(Polarization::P)
            .build_matrix()
            .unwrap();
        assert!(m.max_entry_distance(&Su11Matrix::IDENTITY) < 1e-15);
    }

    #[test]
    fn half_wave_layer_is_minus_identity() {
        let m = LayerStack::new(1.0, 600.0)
            .with_layer(1.5, 600.0 / 3.0)
            .build_matrix()
            .unwrap();
        let minus = Su11Matrix::new(Complex64::new(-1.0, 0.0), Complex64::new(0.0, 0.0), 0.0).unwrap();
        assert!(m.max_entry_distance(&minus) < 1e-10);
        let c = classify(&m);
        assert_eq!(c.class, Subgroup::N);
        assert!(c.degenerate);
        assert!((c.trace + 2.0).abs() < 1e-10);
    }

    #[test]
    fn quarter_wave_layer() {
        let m = LayerStack::new(1.0, 600.0)
            .with_layer(1.5, 100.0)
            .build_matrix()
            .unwrap();
        assert!(m.alpha().re.abs() < DET_TOL);
        assert_eq!(classify(&m).class, Subgroup::K);
        // analytic quarter-wave reflectance ((n0² − n1²)/(n0² + n1²))²
        let expected = ((1.0f64 - 2.25) / (1.0 + 2.25)).powi(2);
        assert!((expected - 0.14792899408284024).abs() < 1e-15);
        let c = coefficients(&m);
        assert!((c.reflectance() - expected).abs() < 1e-12);
        assert!((c.reflectance() + c.transmittance() - 1.0).abs() < DET_TOL);
    }

    #[test]
    fn identity_coefficients() {
        let c = coefficients(&Su11Matrix::IDENTITY);
        assert_eq!(c.reflection, Complex64::new(0.0, 0.0));
        assert_eq!(c.transmission, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn mismatched_media_are_rejected() {
        let r = LayerStack::new(1.0, 500.0)
            .with_layer(2.0, 70.0)
            .with_substrate(1.5)
            .build_matrix();
        assert!(matches!(r, Err(Error::DeterminantViolation { .. })));
    }

    #[test]
    fn evanescent_layers_are_rejected() {
        let r = LayerStack::new(1.5, 500.0)
            .with_angle(60.0)
            .with_layer(1.2, 50.0)
            .build_matrix();
        assert!(matches!(r, Err(Error::EvanescentWave { medium: 1, .. })));
    }

    #[test]
    fn invalid_stacks() {
        assert!(matches!(
            LayerStack::new(1.0, 0.0).build_matrix(),
            Err(Error::InvalidStack(_))
        ));
        assert!(matches!(
            LayerStack::new(1.0, 1.0).with_angle(90.0).build_matrix(),
            Err(Error::InvalidStack(_))
        ));
        assert!(matches!(
            LayerStack::new(1.0, 1.0).with_layer(1.5, -1.0).build_matrix(),
            Err(Error::InvalidStack(_))
        ));
        assert!(matches!(
            LayerStack::new(1.0, 1.0).with_layer(0.0, 1.0).build_matrix(),
            Err(Error::InvalidStack(_))
        ));
    }

    fn arb_stack(max_layers: usize) -> impl Strategy<Value = LayerStack> {
        (
            1.0..1.6f64,
            0.0..80.0f64,
            any::<bool>(),
            proptest::collection::vec((0.0..1.0f64, 0.0..400.0f64), 0..max_layers),
        )
            .prop_map(|(n0, angle, s, layers)| {
                let floor = n0 * angle.to_radians().sin() + 0.05;
                let mut stack = LayerStack::new(n0, 550.0).with_angle(angle).with_polarization(if s {
                    Polarization::S
                } else {
                    Polarization::P
                });
                for (u, d) in layers {
                    let lo = floor.max(1.2);
                    stack = stack.with_layer(lo + u * (2.5 - lo).max(0.1), d);
                }
                stack
            })
    }

    proptest! {
        #[test]
        fn stacks_are_lossless(stack in arb_stack(64)) {
            let m = stack.build_matrix().unwrap();
            prop_assert!(m.determinant_deviation() <= 10.0 * DET_TOL);
            let c = coefficients(&m);
            prop_assert!((c.reflectance() + c.transmittance() - 1.0).abs() <= 10.0 * DET_TOL);
        }

        #[test]
        fn stacks_compose_at_ambient_spacers(a in arb_stack(8), b in arb_stack(8)) {
            let mut b = b;
            b.ambient_index = a.ambient_index;
            b.substrate_index = a.ambient_index;
            b.incidence_angle_deg = a.incidence_angle_deg;
            b.polarization = a.polarization;
            let floor = a.ambient_index * a.incidence_angle_deg.to_radians().sin() + 0.05;
            for l in &mut b.layers {
                l.index = l.index.max(floor);
            }
            let mut joined = a.clone();
            joined.layers.push(Layer::new(a.ambient_index, 0.0));
            joined.layers.extend(b.layers.iter().copied());
            let whole = joined.build_matrix().unwrap();
            let split = a.build_matrix().unwrap() * b.build_matrix().unwrap();
            prop_assert!(whole.max_entry_distance(&split) <= 1e-9 * whole.alpha().norm().max(1.0));
        }

        #[test]
        fn class_is_scale_invariant(stack in arb_stack(12), scale in 0.1..10.0f64) {
            let m = stack.build_matrix().unwrap();
            let mut scaled = stack.clone();
            scaled.wavelength *= scale;
            for l in &mut scaled.layers {
                l.thickness *= scale;
            }
            let ms = scaled.build_matrix().unwrap();
            let (c, cs) = (classify(&m), classify(&ms));
            prop_assume!((c.trace * c.trace - 4.0).abs() > 1e-6);
            prop_assert_eq!(c.class, cs.class);
        }
    }
}
