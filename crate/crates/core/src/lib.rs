//! Lossless optical multilayers as SU(1,1) transfer matrices.
//!
//! A lossless stack sandwiched between identical ambient and substrate media
//! has a transfer matrix of the form `[[α, β], [β*, α*]]` with
//! `|α|² − |β|² = 1`. This crate provides:
//!
//! * [`su11`]: the matrix type, group operations and the Möbius action on
//!   the field quotient `z = E⁻/E⁺`;
//! * [`iwasawa`]: the unique factorization `M = K(φ)A(ξ)N(ν)`;
//! * [`classify`]: the trace criterion (classes K, A, N), fixed points and
//!   reduction to canonical subgroup form by conjugation;
//! * [`sl2r`]: the real `SL(2,R)` (ABCD) picture and its rotation /
//!   magnifier / lens reading;
//! * [`orbits`]: subgroup orbits and iterated trajectories in the unit disc;
//! * [`stack`]: transfer matrices from physical layer stacks;
//! * [`cli`]: the `su11` command-line front end.

pub mod classify;
pub mod cli;
pub mod error;
pub mod iwasawa;
pub mod numfmt;
pub mod orbits;
pub mod sl2r;
pub mod stack;
pub mod su11;
pub mod tolerance;

pub use classify::{
    classify, conjugate, fixed_points, reduce_to_canonical, CanonicalReduction, Classification, ConjugatorFamily,
    FixedPointSet, TraceSign,
};
pub use error::{Error, Result};
pub use iwasawa::{IwasawaFactors, Subgroup};
pub use num_complex::Complex64;
pub use orbits::{fit_circle, iterate, orbit, CircleFit, Orbit, Trajectory};
pub use sl2r::{FieldVector, RealIwasawaFactors, Sl2rMatrix};
pub use stack::{Coefficients, Layer, LayerStack, Polarization};
pub use su11::{DiscPoint, Region, Su11Matrix};
