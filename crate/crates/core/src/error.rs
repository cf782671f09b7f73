use thiserror::Error;

/// Errors raised by the kinematics kernel and the interpolation schemes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Rotation angle lies outside the domain where log / dexp⁻¹ are well conditioned.
    #[error("rotation angle {angle} exceeds the logarithm domain (pi - 1e-6)")]
    AngleNearPi { angle: f64 },

    /// `dexp⁻¹` requested too close to its singularity at 2π.
    #[error("dexp is singular: angular norm {angle} exceeds 2*pi - 1e-6")]
    DexpSingular { angle: f64 },

    /// Terminal screw has an angular part outside the logarithm domain.
    #[error("terminal screw angle {angle} lies outside the interpolation domain")]
    LogDomain { angle: f64 },

    #[error("matrix is not skew-symmetric (asymmetry {asymmetry:e})")]
    NotSkew { asymmetry: f64 },

    #[error("matrix is not a proper rotation: {reason}")]
    InvalidRotation { reason: String },

    #[error("twist jet has {got} derivatives, {needed} required")]
    InsufficientJet { needed: usize, got: usize },

    #[error("interpolation order {0} is not supported (expected 1..=4)")]
    BadOrder(usize),

    #[error("series order {0} exceeds the supported maximum of 12")]
    OrderTooHigh(usize),

    #[error("duration must be positive and finite, got {0}")]
    InvalidDuration(f64),

    #[error("time {t} lies outside the curve domain [0, {duration}]")]
    OutOfDomain { t: f64, duration: f64 },

    #[error("terminal screw and terminal pose disagree (difference {difference:e})")]
    ConflictingGoal { difference: f64 },

    #[error("metric weights must be non-negative and not both zero")]
    InvalidWeights,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for failures caused by the log/dexp⁻¹ singularity rather than bad input.
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            Error::AngleNearPi { .. } | Error::LogDomain { .. } | Error::DexpSingular { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
