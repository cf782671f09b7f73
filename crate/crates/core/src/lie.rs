//! SO(3) and SE(3) primitives.
//!
//! Screw vectors are stored angular-first: components 0..3 hold the rotational
//! part ω, components 3..6 the translational part v. With this ordering the
//! adjoint operator has the block form
//!
//! ```text
//! ad_X = | ω^  0  |
//!        | v^  ω^ |
//! ```
//!
//! and the right-trivialized differential of the exponential is
//! `dexp_X = Σ adⁱ_X / (i+1)!`, so that a curve `C(t) = exp(X(t)) C₀` has spatial
//! twist `V = dexp_X Ẋ` (`Ċ = V^ C`).
//!
//! Trigonometric coefficient functions switch to 4th-order Taylor expansions
//! for angles below [`SMALL_ANGLE`]. The two coefficients that lose digits
//! proportionally to 1/θ, `(θ - sin θ)/θ³` and `(2θ - 3 sin θ + θ cos θ)/(2θ⁵)`,
//! use a longer series up to θ = 0.1 instead.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use nalgebra::{Matrix4, Vector6};

use crate::error::{Error, Result};

pub type Vector3 = nalgebra::Vector3<f64>;
pub type Matrix3 = nalgebra::Matrix3<f64>;
pub type Matrix6 = nalgebra::Matrix6<f64>;

/// Below this angle the coefficient functions use Taylor expansions.
pub const SMALL_ANGLE: f64 = 1e-4;

/// Largest rotation angle accepted by the logarithm.
pub const LOG_DOMAIN: f64 = std::f64::consts::PI - 1e-6;

/// Largest angular norm accepted by `dexp⁻¹`, which is singular at 2π.
pub const DEXPINV_DOMAIN: f64 = 2.0 * std::f64::consts::PI - 1e-6;

/// Below this angle the cancellation-prone coefficients use a longer series.
const SERIES_ANGLE: f64 = 0.1;

/// Tolerance for the orthonormality and determinant checks on rotations.
pub const ROTATION_TOLERANCE: f64 = 1e-9;

/// Bernoulli numbers B₀..B₂₀ (convention B₁ = -1/2).
pub const BERNOULLI: [f64; 21] = [
    1.0,
    -1.0 / 2.0,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
];

// ---------------------------------------------------------------------------
// Rotation

/// Element of SO(3).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation(Matrix3);

impl Rotation {
    /// Validates `RᵀR = I` and `det R = 1` to within [`ROTATION_TOLERANCE`].
    pub fn new(matrix: Matrix3) -> Result<Self> {
        if matrix.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidRotation {
                reason: "non-finite entry".into(),
            });
        }
        let drift = (matrix.transpose() * matrix - Matrix3::identity()).amax();
        if drift > ROTATION_TOLERANCE {
            return Err(Error::InvalidRotation {
                reason: format!("R^T R deviates from identity by {drift:e}"),
            });
        }
        let det = matrix.determinant();
        if (det - 1.0).abs() > ROTATION_TOLERANCE {
            return Err(Error::InvalidRotation {
                reason: format!("determinant {det}"),
            });
        }
        Ok(Self(matrix))
    }

    /// Row-major constructor, mostly for file and FFI input.
    pub fn from_row_slice(values: &[f64; 9]) -> Result<Self> {
        Self::new(Matrix3::from_row_slice(values))
    }

    pub(crate) fn from_matrix_unchecked(matrix: Matrix3) -> Self {
        Self(matrix)
    }

    pub fn identity() -> Self {
        Self(Matrix3::identity())
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn to_row_array(&self) -> [f64; 9] {
        let m = &self.0;
        [
            m[(0, 0)],
            m[(0, 1)],
            m[(0, 2)],
            m[(1, 0)],
            m[(1, 1)],
            m[(1, 2)],
            m[(2, 0)],
            m[(2, 1)],
            m[(2, 2)],
        ]
    }

    /// Largest entry of `RᵀR - I`.
    pub fn orthonormality_error(&self) -> f64 {
        (self.0.transpose() * self.0 - Matrix3::identity()).amax()
    }
}

impl Mul for Rotation {
    type Output = Rotation;
    fn mul(self, rhs: Rotation) -> Rotation {
        Rotation(self.0 * rhs.0)
    }
}

impl Mul<Vector3> for Rotation {
    type Output = Vector3;
    fn mul(self, rhs: Vector3) -> Vector3 {
        self.0 * rhs
    }
}

// ---------------------------------------------------------------------------
// Pose

/// Element of SE(3): `p ↦ R p + t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pose {
    pub rotation: Rotation,
    pub translation: Vector3,
}

impl Pose {
    pub fn new(rotation: Rotation, translation: Vector3) -> Self {
        Self {
            rotation,
            translation,
        }
    }

    pub fn identity() -> Self {
        Self::new(Rotation::identity(), Vector3::zeros())
    }

    pub fn inverse(&self) -> Self {
        let rt = self.rotation.inverse();
        Self::new(rt, -(rt * self.translation))
    }

    pub fn to_homogeneous(&self) -> Matrix4<f64> {
        let mut h = Matrix4::identity();
        h.fixed_view_mut::<3, 3>(0, 0).copy_from(self.rotation.matrix());
        h.fixed_view_mut::<3, 1>(0, 3).copy_from(&self.translation);
        h
    }
}

impl Default for Pose {
    fn default() -> Self {
        Self::identity()
    }
}

impl Mul for Pose {
    type Output = Pose;
    fn mul(self, rhs: Pose) -> Pose {
        Pose::new(
            self.rotation * rhs.rotation,
            self.rotation * rhs.translation + self.translation,
        )
    }
}

impl Mul<&Pose> for &Pose {
    type Output = Pose;
    fn mul(self, rhs: &Pose) -> Pose {
        *self * *rhs
    }
}

// ---------------------------------------------------------------------------
// ScrewVector

/// Element of se(3) ≅ ℝ⁶, angular part first.
///
/// Used both for canonical coordinates `X` and for twists `V`.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct ScrewVector(Vector6<f64>);

impl ScrewVector {
    pub fn new(angular: Vector3, linear: Vector3) -> Self {
        Self(Vector6::new(
            angular.x, angular.y, angular.z, linear.x, linear.y, linear.z,
        ))
    }

    pub const fn from_array(values: [f64; 6]) -> Self {
        let [a, b, c, d, e, f] = values;
        Self(Vector6::new(a, b, c, d, e, f))
    }

    pub fn from_vector(v: Vector6<f64>) -> Self {
        Self(v)
    }

    pub fn zero() -> Self {
        Self(Vector6::zeros())
    }

    pub fn angular(&self) -> Vector3 {
        self.0.fixed_rows::<3>(0).into_owned()
    }

    pub fn linear(&self) -> Vector3 {
        self.0.fixed_rows::<3>(3).into_owned()
    }

    pub fn as_vector(&self) -> &Vector6<f64> {
        &self.0
    }

    pub fn to_array(&self) -> [f64; 6] {
        [self.0[0], self.0[1], self.0[2], self.0[3], self.0[4], self.0[5]]
    }

    /// Euclidean norm of the six components.
    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    /// Largest absolute component.
    pub fn amax(&self) -> f64 {
        self.0.amax()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }
}

impl fmt::Debug for ScrewVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScrewVector({:?})", self.to_array())
    }
}

impl fmt::Display for ScrewVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.to_array();
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            a[0], a[1], a[2], a[3], a[4], a[5]
        )
    }
}

impl From<[f64; 6]> for ScrewVector {
    fn from(values: [f64; 6]) -> Self {
        Self::from_array(values)
    }
}

impl Add for ScrewVector {
    type Output = ScrewVector;
    fn add(self, rhs: ScrewVector) -> ScrewVector {
        ScrewVector(self.0 + rhs.0)
    }
}

impl AddAssign for ScrewVector {
    fn add_assign(&mut self, rhs: ScrewVector) {
        self.0 += rhs.0;
    }
}

impl Sub for ScrewVector {
    type Output = ScrewVector;
    fn sub(self, rhs: ScrewVector) -> ScrewVector {
        ScrewVector(self.0 - rhs.0)
    }
}

impl SubAssign for ScrewVector {
    fn sub_assign(&mut self, rhs: ScrewVector) {
        self.0 -= rhs.0;
    }
}

impl Neg for ScrewVector {
    type Output = ScrewVector;
    fn neg(self) -> ScrewVector {
        ScrewVector(-self.0)
    }
}

impl Mul<f64> for ScrewVector {
    type Output = ScrewVector;
    fn mul(self, rhs: f64) -> ScrewVector {
        ScrewVector(self.0 * rhs)
    }
}

impl Mul<ScrewVector> for f64 {
    type Output = ScrewVector;
    fn mul(self, rhs: ScrewVector) -> ScrewVector {
        ScrewVector(rhs.0 * self)
    }
}

impl Div<f64> for ScrewVector {
    type Output = ScrewVector;
    fn div(self, rhs: f64) -> ScrewVector {
        ScrewVector(self.0 / rhs)
    }
}

impl Mul<ScrewVector> for Matrix6 {
    type Output = ScrewVector;
    fn mul(self, rhs: ScrewVector) -> ScrewVector {
        ScrewVector(self * rhs.0)
    }
}

impl Mul<ScrewVector> for &Matrix6 {
    type Output = ScrewVector;
    fn mul(self, rhs: ScrewVector) -> ScrewVector {
        ScrewVector(self * rhs.0)
    }
}

impl std::iter::Sum for ScrewVector {
    fn sum<I: Iterator<Item = ScrewVector>>(iter: I) -> Self {
        iter.fold(ScrewVector::zero(), |acc, x| acc + x)
    }
}

// ---------------------------------------------------------------------------
// Metric

/// Weights of the left-invariant norm `α‖x‖ + β‖y‖`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricWeights {
    alpha: f64,
    beta: f64,
}

impl MetricWeights {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let valid = |w: f64| w.is_finite() && w >= 0.0;
        if !valid(alpha) || !valid(beta) || (alpha == 0.0 && beta == 0.0) {
            return Err(Error::InvalidWeights);
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

impl Default for MetricWeights {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            beta: 1.0,
        }
    }
}

/// Rotational and translational parts of the relative-pose logarithm.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct DistanceComponents {
    pub rotational: f64,
    pub translational: f64,
}

impl DistanceComponents {
    pub fn weighted(&self, w: &MetricWeights) -> f64 {
        w.alpha * self.rotational + w.beta * self.translational
    }
}

// ---------------------------------------------------------------------------
// hat / vee

pub fn hat3(v: &Vector3) -> Matrix3 {
    Matrix3::new(0.0, -v.z, v.y, v.z, 0.0, -v.x, -v.y, v.x, 0.0)
}

/// Inverse of [`hat3`]; rejects matrices whose asymmetry defect exceeds 1e-9.
pub fn vee3(m: &Matrix3) -> Result<Vector3> {
    let asymmetry = (m + m.transpose()).amax();
    if !asymmetry.is_finite() || asymmetry > 1e-9 {
        return Err(Error::NotSkew { asymmetry });
    }
    Ok(skew_part_vee(m))
}

/// `vee` of the skew-symmetric part of `m`, no validation.
pub(crate) fn skew_part_vee(m: &Matrix3) -> Vector3 {
    Vector3::new(
        0.5 * (m[(2, 1)] - m[(1, 2)]),
        0.5 * (m[(0, 2)] - m[(2, 0)]),
        0.5 * (m[(1, 0)] - m[(0, 1)]),
    )
}

// ---------------------------------------------------------------------------
// Coefficient functions of the rotation angle

/// sin θ / θ
fn coef_sinc(theta: f64) -> f64 {
    if theta < SMALL_ANGLE {
        let t2 = theta * theta;
        1.0 - t2 / 6.0 + t2 * t2 / 120.0
    } else {
        theta.sin() / theta
    }
}

/// (1 - cos θ) / θ²
fn coef_one_minus_cos(theta: f64) -> f64 {
    if theta < SMALL_ANGLE {
        let t2 = theta * theta;
        0.5 - t2 / 24.0 + t2 * t2 / 720.0
    } else {
        let s = (0.5 * theta).sin();
        2.0 * s * s / (theta * theta)
    }
}

/// Evaluates `Σ cₙ xⁿ` for a short coefficient list.
fn series(x: f64, coeffs: &[f64]) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// (θ - sin θ) / θ³
fn coef_theta_minus_sin(theta: f64) -> f64 {
    if theta < SERIES_ANGLE {
        // Σ (-1)^{m+1} θ^{2m-2} / (2m+1)!
        series(
            theta * theta,
            &[
                1.0 / 6.0,
                -1.0 / 120.0,
                1.0 / 5040.0,
                -1.0 / 362880.0,
                1.0 / 39916800.0,
            ],
        )
    } else {
        (theta - theta.sin()) / (theta * theta * theta)
    }
}

/// (1 - (θ/2) cot(θ/2)) / θ², the Ω² coefficient of the inverse Jacobian.
fn coef_inverse_jacobian(theta: f64) -> f64 {
    if theta < SMALL_ANGLE {
        let t2 = theta * theta;
        1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0
    } else {
        let half = 0.5 * theta;
        (1.0 - half * half.cos() / half.sin()) / (theta * theta)
    }
}

/// (θ² + 2 cos θ - 2) / (2 θ⁴)
fn coef_q2(theta: f64) -> f64 {
    if theta < SMALL_ANGLE {
        let t2 = theta * theta;
        1.0 / 24.0 - t2 / 720.0 + t2 * t2 / 40320.0
    } else {
        let s = (0.5 * theta).sin();
        let t2 = theta * theta;
        (t2 - 4.0 * s * s) / (2.0 * t2 * t2)
    }
}

/// (2θ - 3 sin θ + θ cos θ) / (2 θ⁵)
fn coef_q3(theta: f64) -> f64 {
    if theta < SERIES_ANGLE {
        // ½ Σ_{m≥2} (-1)^m (2m-2) / (2m+1)! θ^{2m-4}
        series(
            theta * theta,
            &[
                1.0 / 120.0,
                -1.0 / 2520.0,
                1.0 / 120960.0,
                -1.0 / 9979200.0,
                1.0 / 1245404160.0,
            ],
        )
    } else {
        let t2 = theta * theta;
        (2.0 * theta - 3.0 * theta.sin() + theta * theta.cos()) / (2.0 * t2 * t2 * theta)
    }
}

// ---------------------------------------------------------------------------
// SO(3)

pub fn exp_rot(omega: &Vector3) -> Rotation {
    let theta = omega.norm();
    let w = hat3(omega);
    let m = Matrix3::identity() + w * coef_sinc(theta) + w * w * coef_one_minus_cos(theta);
    Rotation::from_matrix_unchecked(m)
}

/// Rotation angle in [0, π], computed with atan2 for accuracy at both ends.
pub fn rotation_angle(r: &Rotation) -> f64 {
    let m = r.matrix();
    let cos = 0.5 * (m.trace() - 1.0);
    let sin = skew_part_vee(m).norm();
    sin.atan2(cos)
}

/// Logarithm on SO(3), returning the rotation vector.
///
/// Fails with [`Error::AngleNearPi`] beyond [`LOG_DOMAIN`]. Close to π the axis
/// is recovered from the symmetric part `(R + Rᵀ)/2`.
pub fn log_rot(r: &Rotation) -> Result<Vector3> {
    let theta = rotation_angle(r);
    if theta > LOG_DOMAIN {
        return Err(Error::AngleNearPi { angle: theta });
    }
    let m = r.matrix();
    let skew = skew_part_vee(m);
    if theta < SMALL_ANGLE {
        let t2 = theta * theta;
        return Ok(skew * (1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0));
    }
    if theta < 3.0 {
        return Ok(skew * (theta / theta.sin()));
    }
    // n nᵀ = (S - cos θ I) / (1 - cos θ)
    let sym = (m + m.transpose()) * 0.5;
    let cos = theta.cos();
    let nn = (sym - Matrix3::identity() * cos) / (1.0 - cos);
    let i = (0..3)
        .max_by(|&a, &b| nn[(a, a)].total_cmp(&nn[(b, b)]))
        .unwrap_or(0);
    let mut axis = nn.column(i).into_owned() / nn[(i, i)].max(0.0).sqrt();
    axis /= axis.norm();
    if axis.dot(&skew) < 0.0 {
        axis = -axis;
    }
    Ok(axis * theta)
}

/// Left Jacobian of SO(3), the rotational `dexp`: `I + b Ω + c Ω²`.
pub fn dexp_rot(omega: &Vector3) -> Matrix3 {
    let theta = omega.norm();
    let w = hat3(omega);
    Matrix3::identity() + w * coef_one_minus_cos(theta) + w * w * coef_theta_minus_sin(theta)
}

/// Inverse of [`dexp_rot`]: `I - Ω/2 + d Ω²`. Singular at multiples of 2π.
pub fn dexpinv_rot(omega: &Vector3) -> Matrix3 {
    let theta = omega.norm();
    let w = hat3(omega);
    Matrix3::identity() - w * 0.5 + w * w * coef_inverse_jacobian(theta)
}

// ---------------------------------------------------------------------------
// SE(3)

/// `exp` on SE(3): rotation `exp_rot(ω)`, translation `dexp_rot(ω) v`.
pub fn exp_pose(x: &ScrewVector) -> Pose {
    let omega = x.angular();
    Pose::new(exp_rot(&omega), dexp_rot(&omega) * x.linear())
}

pub fn log_pose(c: &Pose) -> Result<ScrewVector> {
    let omega = log_rot(&c.rotation)?;
    let v = dexpinv_rot(&omega) * c.translation;
    Ok(ScrewVector::new(omega, v))
}

/// Lie bracket (screw product) `[X, Y] = ad_X Y`.
pub fn bracket(x: &ScrewVector, y: &ScrewVector) -> ScrewVector {
    let (wx, vx) = (x.angular(), x.linear());
    let (wy, vy) = (y.angular(), y.linear());
    ScrewVector::new(wx.cross(&wy), wx.cross(&vy) + vx.cross(&wy))
}

pub fn ad_op(x: &ScrewVector) -> Matrix6 {
    let w = hat3(&x.angular());
    let v = hat3(&x.linear());
    block_lower(&w, &v, &w)
}

fn block_lower(upper_left: &Matrix3, lower_left: &Matrix3, lower_right: &Matrix3) -> Matrix6 {
    let mut m = Matrix6::zeros();
    m.fixed_view_mut::<3, 3>(0, 0).copy_from(upper_left);
    m.fixed_view_mut::<3, 3>(3, 0).copy_from(lower_left);
    m.fixed_view_mut::<3, 3>(3, 3).copy_from(lower_right);
    m
}

/// Partial sum `Σ_{i≤n} adⁱ_X / (i+1)!`.
pub fn dexp_series(x: &ScrewVector, n: usize) -> Matrix6 {
    let ad = ad_op(x);
    let mut power = Matrix6::identity();
    let mut factorial = 1.0;
    let mut sum = Matrix6::zeros();
    for i in 0..=n {
        factorial *= (i + 1) as f64;
        sum += power / factorial;
        power = ad * power;
    }
    sum
}

/// Partial sum `Σ_{i≤n} (Bᵢ / i!) adⁱ_X`, with Bernoulli numbers tabulated up to i = 20.
pub fn dexpinv_series(x: &ScrewVector, n: usize) -> Matrix6 {
    let n = n.min(BERNOULLI.len() - 1);
    let ad = ad_op(x);
    let mut power = Matrix6::identity();
    let mut factorial = 1.0;
    let mut sum = Matrix6::zeros();
    for (i, b) in BERNOULLI.iter().enumerate().take(n + 1) {
        if i > 0 {
            factorial *= i as f64;
        }
        if *b != 0.0 {
            sum += power * (b / factorial);
        }
        power = ad * power;
    }
    sum
}

/// Lower-left block of `dexp_X`, coupling angular velocity into the linear twist.
fn dexp_coupling(omega: &Vector3, v: &Vector3) -> Matrix3 {
    let theta = omega.norm();
    let w = hat3(omega);
    let u = hat3(v);
    let wu = w * u;
    let uw = u * w;
    let wuw = wu * w;
    let ww = w * w;
    u * 0.5
        + (wu + uw + wuw) * coef_theta_minus_sin(theta)
        + (ww * u + u * ww - wuw * 3.0) * coef_q2(theta)
        + (wuw * w + w * wuw) * coef_q3(theta)
}

/// Closed-form `dexp_X` on SE(3).
pub fn dexp_closed(x: &ScrewVector) -> Matrix6 {
    let omega = x.angular();
    let j = dexp_rot(&omega);
    let q = dexp_coupling(&omega, &x.linear());
    block_lower(&j, &q, &j)
}

/// Closed-form `dexp⁻¹_X` on SE(3); requires `‖ω‖ ≤ 2π - 1e-6`.
pub fn dexpinv_closed(x: &ScrewVector) -> Result<Matrix6> {
    let omega = x.angular();
    let theta = omega.norm();
    if !(theta <= DEXPINV_DOMAIN) {
        return Err(Error::DexpSingular { angle: theta });
    }
    let jinv = dexpinv_rot(&omega);
    let q = dexp_coupling(&omega, &x.linear());
    Ok(block_lower(&jinv, &(-(jinv * q * jinv)), &jinv))
}

/// Left-invariant distance between two poses.
///
/// With `C₁⁻¹C₂ = (R, r)`, `x = log R` and `y = dexp_rot(x)⁻¹ r`; returns
/// `α‖x‖ + β‖y‖` together with both norms.
pub fn distance(c1: &Pose, c2: &Pose, w: &MetricWeights) -> Result<(f64, DistanceComponents)> {
    let rel = c1.inverse() * *c2;
    let x = log_rot(&rel.rotation)?;
    let y = dexpinv_rot(&x) * rel.translation;
    let components = DistanceComponents {
        rotational: x.norm(),
        translational: y.norm(),
    };
    Ok((components.weighted(w), components))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn max_abs(m: &Matrix6) -> f64 {
        m.amax()
    }

    #[test]
    fn hat_of_known_vector() {
        let m = hat3(&Vector3::new(1.0, 2.0, 3.0));
        let expected = Matrix3::new(0.0, -3.0, 2.0, 3.0, 0.0, -1.0, -2.0, 1.0, 0.0);
        assert_eq!(m, expected);
        assert_eq!(hat3(&Vector3::zeros()), Matrix3::zeros());
    }

    #[test]
    fn vee_rejects_symmetric_input() {
        let mut m = hat3(&Vector3::new(1.0, 2.0, 3.0));
        m[(0, 1)] += 1e-6;
        assert!(matches!(vee3(&m), Err(Error::NotSkew { .. })));
    }

    #[test]
    fn quarter_turn_about_x() {
        let r = exp_rot(&Vector3::new(PI / 2.0, 0.0, 0.0));
        let mapped = r * Vector3::new(0.0, 1.0, 0.0);
        assert!((mapped - Vector3::new(0.0, 0.0, 1.0)).norm() < 1e-15);
        assert_eq!(exp_rot(&Vector3::zeros()), Rotation::identity());
    }

    #[test]
    fn log_round_trip_fixed_vector() {
        let w = Vector3::new(0.3, -0.2, 0.1);
        let back = log_rot(&exp_rot(&w)).unwrap();
        assert!((back - w).norm() < 1e-12);
        assert_eq!(log_rot(&Rotation::identity()).unwrap(), Vector3::zeros());
    }

    #[test]
    fn log_near_pi_is_accepted_then_rejected() {
        let axis = Vector3::new(1.0, -2.0, 0.5).normalize();
        let w = axis * (PI - 1e-5);
        let r = exp_rot(&w);
        let back = log_rot(&r).unwrap();
        assert!((back - w).norm() < 1e-7, "{}", (back - w).norm());
        let r2 = exp_rot(&back);
        assert!((r2.matrix() - r.matrix()).amax() < 1e-7);

        let beyond = exp_rot(&(axis * (PI - 1e-8)));
        assert!(matches!(log_rot(&beyond), Err(Error::AngleNearPi { .. })));
    }

    #[test]
    fn log_across_branch_switch() {
        let axis = Vector3::new(0.2, 0.9, -0.4).normalize();
        for &theta in &[1e-9, 0.99e-4, 1.01e-4, 0.5, 2.999, 3.001, 3.1] {
            let w = axis * theta;
            let back = log_rot(&exp_rot(&w)).unwrap();
            assert!((back - w).norm() < 1e-12, "theta={theta}");
        }
    }

    #[test]
    fn pure_translation_exp() {
        let c = exp_pose(&ScrewVector::from_array([0.0, 0.0, 0.0, 1.0, 2.0, 3.0]));
        assert_eq!(c.rotation, Rotation::identity());
        assert_eq!(c.translation, Vector3::new(1.0, 2.0, 3.0));
        assert_eq!(exp_pose(&ScrewVector::zero()), Pose::identity());
    }

    #[test]
    fn log_pose_round_trip_on_example_terminal_screw() {
        // ‖(0,3,1)‖ = √10 > π, so log returns the principal screw of the same pose.
        let xt = ScrewVector::from_array([0.0, 3.0, 1.0, 2.0, 0.0, 1.0]);
        let pose = exp_pose(&xt);
        let back = log_pose(&pose).unwrap();
        let angle = back.angular().norm();
        assert!((angle - (2.0 * PI - 10f64.sqrt())).abs() < 1e-12);
        assert!(back.angular().dot(&xt.angular()) < 0.0);
        let again = exp_pose(&back);
        assert!((again.to_homogeneous() - pose.to_homogeneous()).amax() < 1e-10);

        let inside = ScrewVector::from_array([0.0, 0.9, 0.3, 2.0, 0.0, 1.0]);
        assert!((log_pose(&exp_pose(&inside)).unwrap() - inside).amax() < 1e-10);
    }

    #[test]
    fn so3_bracket_relation() {
        let e1 = ScrewVector::from_array([1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let e2 = ScrewVector::from_array([0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(
            bracket(&e1, &e2),
            ScrewVector::from_array([0.0, 0.0, 1.0, 0.0, 0.0, 0.0])
        );
        let x = ScrewVector::from_array([0.3, 1.0, -2.0, 0.5, 0.1, 4.0]);
        assert_eq!(bracket(&x, &x), ScrewVector::zero());
        assert_eq!(ad_op(&ScrewVector::zero()), Matrix6::zeros());
        assert!((ad_op(&x) * x).amax() < 1e-15);
    }

    #[test]
    fn dexp_of_zero_is_identity() {
        let z = ScrewVector::zero();
        for n in [0, 1, 5, 20] {
            assert_eq!(dexp_series(&z, n), Matrix6::identity());
            assert_eq!(dexpinv_series(&z, n), Matrix6::identity());
        }
        assert_eq!(dexp_closed(&z), Matrix6::identity());
        assert_eq!(dexpinv_closed(&z).unwrap(), Matrix6::identity());
    }

    #[test]
    fn dexp_closed_matches_series_across_small_angle_switch() {
        let dir = ScrewVector::from_array([0.6, -0.3, 0.74, 1.5, -2.0, 0.7]);
        for &s in &[0.0, 1e-8, 0.5e-4, 0.99e-4, 1.01e-4, 2e-4, 1e-3, 1e-2, 0.3, 1.0, 2.0] {
            let x = dir * s;
            let x = ScrewVector::new(x.angular(), dir.linear());
            let diff = max_abs(&(dexp_closed(&x) - dexp_series(&x, 20)));
            assert!(diff < 1e-12, "s={s} diff={diff:e}");
            if s <= 1.0 {
                let inv = dexpinv_closed(&x).unwrap();
                let diff = max_abs(&(inv - dexpinv_series(&x, 20)));
                assert!(diff < 1e-12, "s={s} inverse diff={diff:e}");
            }
        }
    }

    #[test]
    fn dexpinv_rejects_near_two_pi() {
        let x = ScrewVector::from_array([0.0, 0.0, 2.0 * PI - 1e-7, 1.0, 0.0, 0.0]);
        assert!(matches!(dexpinv_closed(&x), Err(Error::DexpSingular { .. })));
        let beyond_pi = ScrewVector::from_array([0.0, 3.0, 1.0, 2.0, 0.0, 1.0]);
        let inv = dexpinv_closed(&beyond_pi).unwrap();
        let defect = (dexp_closed(&beyond_pi) * inv - Matrix6::identity()).amax();
        assert!(defect < 1e-12, "{defect:e}");
    }

    #[test]
    fn published_terminal_twist() {
        let xt = ScrewVector::from_array([0.0, 3.0, 1.0, 2.0, 0.0, 1.0]);
        let xdot = ScrewVector::from_array([0.0, 9.0, 3.0, 2.0, 0.0, 1.0]);
        let vt = dexp_closed(&xt) * xdot;
        let published = [0.0, 9.0, 3.0, 4.82629, -1.40384, 5.21152];
        for (a, b) in vt.to_array().iter().zip(published) {
            assert!((a - b).abs() < 5e-5, "{vt:?}");
        }
    }

    #[test]
    fn parallel_angular_part_is_unchanged() {
        let x = ScrewVector::from_array([0.4, -0.8, 1.1, 0.3, 0.2, -0.5]);
        let y = ScrewVector::new(x.angular() * 2.5, Vector3::new(1.0, -1.0, 0.25));
        let out = dexp_closed(&x) * y;
        assert!((out.angular() - y.angular()).norm() < 1e-14);
        let oracle = dexp_series(&x, 20) * y;
        assert!((out - oracle).amax() < 1e-12);
    }

    #[test]
    fn distance_simple_cases() {
        let w = MetricWeights::default();
        let c = exp_pose(&ScrewVector::from_array([0.1, 0.2, 0.3, 1.0, 2.0, 3.0]));
        let (d, comp) = distance(&c, &c, &w).unwrap();
        assert!(d.abs() < 1e-15);
        assert!(comp.rotational < 1e-15 && comp.translational < 1e-15);

        let theta = 0.7;
        let rot = exp_pose(&ScrewVector::from_array([0.0, 0.0, theta, 0.0, 0.0, 0.0]));
        let (_, comp) = distance(&Pose::identity(), &rot, &w).unwrap();
        assert!((comp.rotational - theta).abs() < 1e-15);
        assert!(comp.translational.abs() < 1e-15);
    }

    #[test]
    fn metric_weights_validation() {
        assert!(MetricWeights::new(0.0, 0.0).is_err());
        assert!(MetricWeights::new(-1.0, 1.0).is_err());
        assert!(MetricWeights::new(0.0, 2.0).is_ok());
    }

    #[test]
    fn rotation_constructor_checks() {
        let bad = Matrix3::new(1.0, 0.1, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0);
        assert!(Rotation::new(bad).is_err());
        let reflect = Matrix3::new(-1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0);
        assert!(Rotation::new(reflect).is_err());
        assert!(Rotation::new(*exp_rot(&Vector3::new(0.1, 0.2, 0.3)).matrix()).is_ok());
    }
}
