//! Rigid body motion interpolation on SE(3).
//!
//! * [`lie`]: SO(3)/SE(3) exponential, logarithm, adjoint, `dexp` and the
//!   left-invariant distance.
//! * [`magnus`]: series solution of `Ċ = V̂ C` from an initial twist jet.
//! * [`interp`]: geodesic, initial-value (orders 1..4) and cubic boundary-value
//!   interpolants.
//! * [`oracle`]: group integrators, finite-difference twists and trajectory
//!   comparison used to check the interpolants.
//! * [`cli`]: the `screwmotion` command line front end.

pub mod cli;
pub mod error;
pub mod interp;
pub mod lie;
pub mod magnus;
pub mod oracle;
pub mod validate;

pub use error::{Error, Result};
pub use interp::{
    body_fixed_variant, bv_tip_cubic, cubic_terminal_twist, curve_eval, curve_twist, geodesic,
    iv_tip, min_acceleration, BoundaryData, InterpolationCurve,
};
pub use lie::{MetricWeights, Pose, Rotation, ScrewVector, Vector3};
pub use magnus::{magnus_coefficients, MagnusCoefficients, TwistJet};
