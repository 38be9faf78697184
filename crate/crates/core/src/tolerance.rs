//! Numerical tolerances shared across the crate.
//!
//! Double-precision products of around a hundred matrices lose roughly three
//! digits, which sets the scale of the algebraic tolerance.

/// Algebraic constraints: `|α|² − |β|² = 1`, `det = 1`, entrywise residuals.
pub const DET_TOL: f64 = 1e-9;

/// Comparison of points in the complex plane.
pub const GEO_TOL: f64 = 1e-7;

/// Width of the band around `|z| = 1` tagged as the boundary.
pub const DISC_TOL: f64 = 1e-9;

/// Band on `trace² − 4` classified as N.
pub const CLASS_TOL: f64 = 1e-9;

/// Minimum margin of `n_j` over `n₀ sin θ₀` before a layer counts as evanescent.
pub const EVANESCENT_TOL: f64 = 1e-12;

/// Validation tolerance for matrices composed from layer stacks.
pub const STACK_DET_TOL: f64 = 100.0 * DET_TOL;
