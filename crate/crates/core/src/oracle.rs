//! Brute-force references for the interpolation schemes.
//!
//! Integration of `Ċ = V̂ C` uses exponential steps only, so every iterate is
//! an exact group element and constant twists are integrated exactly.

use nalgebra::Matrix4;

use crate::error::{Error, Result};
use crate::lie::{distance, exp_pose, skew_part_vee, MetricWeights, Pose, ScrewVector};

pub const DEFAULT_STEPS: usize = 10_000;
pub const DEFAULT_SAMPLES: usize = 200;

/// Lie-group stepping scheme for [`integrate_reconstruction`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Integrator {
    /// `C ← exp(h V(t + h/2)) C`, second order.
    #[default]
    Midpoint,
    /// Two-exponential commutator-free scheme on Gauss nodes, fourth order.
    CommutatorFree4,
}

/// Integrates the reconstruction equation from `C(0) = c0` over `[0, duration]`.
///
/// Returns `steps + 1` samples including the initial pose.
pub fn integrate_reconstruction<F>(
    twist: F,
    c0: &Pose,
    duration: f64,
    steps: usize,
    scheme: Integrator,
) -> Result<Vec<(f64, Pose)>>
where
    F: Fn(f64) -> ScrewVector,
{
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be at least 1".into()));
    }
    if !(duration.is_finite() && duration > 0.0) {
        return Err(Error::InvalidDuration(duration));
    }
    let h = duration / steps as f64;
    let sqrt3 = 3f64.sqrt();
    let (c1, c2) = (0.5 - sqrt3 / 6.0, 0.5 + sqrt3 / 6.0);
    let (a1, a2) = ((3.0 - 2.0 * sqrt3) / 12.0, (3.0 + 2.0 * sqrt3) / 12.0);

    let mut out = Vec::with_capacity(steps + 1);
    let mut c = *c0;
    out.push((0.0, c));
    for n in 0..steps {
        let t = n as f64 * h;
        c = match scheme {
            Integrator::Midpoint => exp_pose(&(twist(t + 0.5 * h) * h)) * c,
            Integrator::CommutatorFree4 => {
                let v1 = twist(t + c1 * h);
                let v2 = twist(t + c2 * h);
                let first = exp_pose(&((v1 * a2 + v2 * a1) * h));
                let second = exp_pose(&((v1 * a1 + v2 * a2) * h));
                second * (first * c)
            }
        };
        let t_next = if n + 1 == steps {
            duration
        } else {
            (n + 1) as f64 * h
        };
        out.push((t_next, c));
    }
    Ok(out)
}

/// Central-difference spatial twist `vee(Ċ C⁻¹)` of a pose curve.
pub fn finite_diff_twist<F>(pose_curve: F, t: f64, h: f64) -> ScrewVector
where
    F: Fn(f64) -> Pose,
{
    let forward = pose_curve(t + h).to_homogeneous();
    let backward = pose_curve(t - h).to_homogeneous();
    let derivative: Matrix4<f64> = (forward - backward) / (2.0 * h);
    let m = derivative * pose_curve(t).inverse().to_homogeneous();
    let angular = skew_part_vee(&m.fixed_view::<3, 3>(0, 0).into_owned());
    let linear = m.fixed_view::<3, 1>(0, 3).into_owned();
    ScrewVector::new(angular, linear)
}

/// Per-sample distance between two motions.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonSample {
    pub t: f64,
    pub rotational: f64,
    pub translational: f64,
    pub weighted: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub samples: Vec<ComparisonSample>,
    pub max_rotational: f64,
    pub max_translational: f64,
    pub max_weighted: f64,
}

impl ComparisonReport {
    /// Sample with the largest weighted error.
    pub fn worst(&self) -> Option<&ComparisonSample> {
        self.samples
            .iter()
            .max_by(|a, b| a.weighted.total_cmp(&b.weighted))
    }
}

/// Failure of [`compare`] at a particular sample time.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("comparison failed at t = {t}: {source}")]
pub struct CompareError {
    pub t: f64,
    pub source: Error,
}

/// Samples both motions at `n + 1` uniform times over `[0, duration]` and
/// records `‖C₁⁻¹ C₂‖` componentwise.
pub fn compare<F, G>(
    c1: F,
    c2: G,
    duration: f64,
    n: usize,
    weights: &MetricWeights,
) -> std::result::Result<ComparisonReport, CompareError>
where
    F: Fn(f64) -> Pose,
    G: Fn(f64) -> Pose,
{
    if n < 2 {
        return Err(CompareError {
            t: 0.0,
            source: Error::InvalidArgument("comparison needs at least 2 intervals".into()),
        });
    }
    let mut samples = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let t = if i == n {
            duration
        } else {
            duration * i as f64 / n as f64
        };
        let (weighted, comp) =
            distance(&c1(t), &c2(t), weights).map_err(|source| CompareError { t, source })?;
        samples.push(ComparisonSample {
            t,
            rotational: comp.rotational,
            translational: comp.translational,
            weighted,
        });
    }
    let max_of = |f: fn(&ComparisonSample) -> f64| samples.iter().map(f).fold(0.0, f64::max);
    Ok(ComparisonReport {
        max_rotational: max_of(|s| s.rotational),
        max_translational: max_of(|s| s.translational),
        max_weighted: max_of(|s| s.weighted),
        samples,
    })
}
