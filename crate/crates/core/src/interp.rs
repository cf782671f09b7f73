//! Screw-coordinate interpolants `C(τ) = exp(X(τ)) C₀` with `τ = t / T`.
//!
//! Every scheme produces `X(τ)` as a short sum of scalar polynomials times
//! constant screws, so endpoint values and derivatives are exact polynomial
//! identities. Public constructors take physical twists; internally each
//! derivative is normalized as `V̄⁽ⁱ⁾ = T^{i+1} V⁽ⁱ⁾`.

use crate::error::{Error, Result};
use crate::lie::{
    bracket, dexp_closed, dexpinv_closed, exp_pose, hat3, log_pose, Matrix6, Pose, ScrewVector,
    DEXPINV_DOMAIN,
};
use crate::magnus::TwistJet;

/// Tolerance used when a terminal screw and a terminal pose are both supplied.
pub const GOAL_TOLERANCE: f64 = 1e-9;

/// One `poly(τ) · screw` summand. `poly` holds ascending-power coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveTerm {
    pub poly: Vec<f64>,
    pub screw: ScrewVector,
}

impl CurveTerm {
    pub fn new(poly: Vec<f64>, screw: ScrewVector) -> Self {
        Self { poly, screw }
    }

    fn poly_value(&self, tau: f64, derivative: usize) -> f64 {
        poly_eval(&self.poly, tau, derivative)
    }
}

/// Value of the `derivative`-th derivative of `Σ cᵢ τⁱ` at `tau`.
fn poly_eval(coeffs: &[f64], tau: f64, derivative: usize) -> f64 {
    let mut acc = 0.0;
    for (i, &c) in coeffs.iter().enumerate().skip(derivative).rev() {
        let falling: f64 = (0..derivative).map(|d| (i - d) as f64).product();
        acc = acc * tau + c * falling;
    }
    acc
}

/// `X(τ) = Σ polyᵢ(τ) screwᵢ` over `t ∈ [0, T]`, anchored at `C₀`.
#[derive(Clone, Debug, PartialEq)]
pub struct InterpolationCurve {
    terms: Vec<CurveTerm>,
    duration: f64,
    base_pose: Pose,
}

impl InterpolationCurve {
    /// Fails if `duration` is not positive or some polynomial does not vanish at τ = 0.
    pub fn new(terms: Vec<CurveTerm>, duration: f64, base_pose: Pose) -> Result<Self> {
        check_duration(duration)?;
        if terms.iter().any(|t| t.poly.first().is_some_and(|c| *c != 0.0)) {
            return Err(Error::InvalidArgument(
                "curve terms must vanish at tau = 0".into(),
            ));
        }
        Ok(Self {
            terms,
            duration,
            base_pose,
        })
    }

    pub fn terms(&self) -> &[CurveTerm] {
        &self.terms
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    pub fn base_pose(&self) -> &Pose {
        &self.base_pose
    }

    /// `X(τ)`.
    pub fn coordinates(&self, tau: f64) -> ScrewVector {
        self.derivative(tau, 0)
    }

    /// `dⁿX/dτⁿ` at `tau`.
    pub fn derivative(&self, tau: f64, order: usize) -> ScrewVector {
        self.terms
            .iter()
            .map(|t| t.screw * t.poly_value(tau, order))
            .sum()
    }

    /// Screw coefficient of each power `τᵖ`, collecting all terms.
    pub fn power_coefficients(&self) -> Vec<ScrewVector> {
        let degree = self.terms.iter().map(|t| t.poly.len()).max().unwrap_or(0);
        let mut out = vec![ScrewVector::zero(); degree];
        for term in &self.terms {
            for (p, c) in term.poly.iter().enumerate() {
                out[p] += term.screw * *c;
            }
        }
        out
    }

    /// `exp(X(τ)) C₀`.
    pub fn pose_at_tau(&self, tau: f64) -> Pose {
        exp_pose(&self.coordinates(tau)) * self.base_pose
    }

    fn tau(&self, t: f64) -> Result<f64> {
        let slack = 1e-12 * self.duration;
        if !t.is_finite() || t < -slack || t > self.duration + slack {
            return Err(Error::OutOfDomain {
                t,
                duration: self.duration,
            });
        }
        Ok((t / self.duration).clamp(0.0, 1.0))
    }
}

/// Twist data at both ends of a boundary-value interpolation.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryData {
    pub x_terminal: ScrewVector,
    pub v0: ScrewVector,
    pub vt: ScrewVector,
    /// Optional higher derivatives at t = 0 (`V̇₀, V̈₀, …`); unused by the cubic scheme.
    pub initial_derivatives: Vec<ScrewVector>,
}

impl BoundaryData {
    pub fn new(x_terminal: ScrewVector, v0: ScrewVector, vt: ScrewVector) -> Result<Self> {
        check_log_domain(&x_terminal)?;
        Ok(Self {
            x_terminal,
            v0,
            vt,
            initial_derivatives: Vec::new(),
        })
    }
}

fn check_duration(duration: f64) -> Result<()> {
    if !(duration.is_finite() && duration > 0.0) {
        return Err(Error::InvalidDuration(duration));
    }
    Ok(())
}

/// Terminal screws must stay clear of the first `dexp` singularity at 2π.
fn check_log_domain(x: &ScrewVector) -> Result<()> {
    let angle = x.angular().norm();
    if !x.is_finite() || angle > DEXPINV_DOMAIN {
        return Err(Error::LogDomain { angle });
    }
    Ok(())
}

/// Terminal screw `X_T` from either an explicit screw or a terminal pose.
///
/// Curves are `exp(X) C₀` with `X` in the inertial frame, so a terminal pose
/// maps to `X_T = log(C_T C₀⁻¹)`; this equals `log(C₀⁻¹ C_T)` when `C₀ = I`.
/// If both are given they must agree.
pub fn resolve_terminal_screw(
    screw: Option<&ScrewVector>,
    terminal_pose: Option<&Pose>,
    base_pose: &Pose,
) -> Result<ScrewVector> {
    let from_pose = terminal_pose
        .map(|c| {
            log_pose(&(*c * base_pose.inverse())).map_err(|e| match e {
                Error::AngleNearPi { angle } => Error::LogDomain { angle },
                other => other,
            })
        })
        .transpose()?;
    match (screw, from_pose) {
        (Some(x), Some(p)) => {
            let difference = (*x - p).amax();
            if difference > GOAL_TOLERANCE {
                return Err(Error::ConflictingGoal { difference });
            }
            Ok(p)
        }
        (Some(x), None) => Ok(*x),
        (None, Some(p)) => Ok(p),
        (None, None) => Err(Error::InvalidArgument(
            "either a terminal screw or a terminal pose is required".into(),
        )),
    }
}

/// Geodesic `exp(τ X_T) C₀`.
pub fn geodesic(x_terminal: &ScrewVector, duration: f64, base_pose: &Pose) -> Result<InterpolationCurve> {
    InterpolationCurve::new(
        vec![CurveTerm::new(vec![0.0, 1.0], *x_terminal)],
        duration,
        *base_pose,
    )
}

/// k-th order initial-value interpolation, `k = 1..=4`.
///
/// `jet` holds `V₀, V̇₀, …` and must contain exactly `k - 1` entries. The highest
/// twist derivative of the truncated series is eliminated in favour of the
/// terminal screw, giving
///
/// ```text
/// k=1: τ X_T
/// k=2: τ² X_T + (τ-τ²) V̄₀
/// k=3: τ³ X_T + (τ-τ³) V̄₀ + ½(τ²-τ³) V̄̇₀
/// k=4: τ⁴ X_T + (τ-τ⁴) V̄₀ + ½(τ²-τ⁴) V̄̇₀ + ⅙(τ³-τ⁴)(V̄̈₀ + ½[V̄̇₀, V̄₀])
/// ```
pub fn iv_tip(
    k: usize,
    x_terminal: &ScrewVector,
    duration: f64,
    jet: &TwistJet,
    base_pose: &Pose,
) -> Result<InterpolationCurve> {
    if !(1..=4).contains(&k) {
        return Err(Error::BadOrder(k));
    }
    check_duration(duration)?;
    let needed = k - 1;
    if jet.order() < needed {
        return Err(Error::InsufficientJet {
            needed,
            got: jet.order(),
        });
    }
    if jet.order() > needed {
        return Err(Error::InvalidArgument(format!(
            "order {k} interpolation takes {needed} twist derivatives, got {}",
            jet.order()
        )));
    }
    check_log_domain(x_terminal)?;

    let vbar: Vec<ScrewVector> = jet
        .derivatives()
        .iter()
        .enumerate()
        .map(|(i, v)| *v * duration.powi(i as i32 + 1))
        .collect();

    let mut lead = vec![0.0; k + 1];
    lead[k] = 1.0;
    let mut terms = vec![CurveTerm::new(lead, *x_terminal)];
    // (τ^{i+1} - τ^k) / (i+1)! V̄⁽ⁱ⁾
    let mut factorial = 1.0;
    for (i, v) in vbar.iter().enumerate() {
        factorial *= (i + 1) as f64;
        let mut poly = vec![0.0; k + 1];
        poly[i + 1] = 1.0 / factorial;
        poly[k] = -1.0 / factorial;
        let screw = if k == 4 && i == 2 {
            *v + bracket(&vbar[1], &vbar[0]) * 0.5
        } else {
            *v
        };
        terms.push(CurveTerm::new(poly, screw));
    }
    InterpolationCurve::new(terms, duration, *base_pose)
}

/// Terminal twist `V_T` of the third-order initial-value interpolant:
/// `V̄_T = dexp_{X_T}(3X_T - 2V̄₀ - ½V̄̇₀)`, returned in physical units.
pub fn cubic_terminal_twist(
    x_terminal: &ScrewVector,
    duration: f64,
    v0: &ScrewVector,
    vdot0: &ScrewVector,
) -> Result<ScrewVector> {
    check_duration(duration)?;
    let vbar0 = *v0 * duration;
    let vbar_dot0 = *vdot0 * (duration * duration);
    let xdot_normalized = *x_terminal * 3.0 - vbar0 * 2.0 - vbar_dot0 * 0.5;
    Ok(dexp_closed(x_terminal) * xdot_normalized / duration)
}

/// Cubic interpolation with prescribed initial and terminal twists:
///
/// ```text
/// X(τ) = (3τ²-2τ³) X_T + τ(1-τ)² V̄₀ + τ²(τ-1) dexp⁻¹_{X_T} V̄_T
/// ```
pub fn bv_tip_cubic(boundary: &BoundaryData, duration: f64, base_pose: &Pose) -> Result<InterpolationCurve> {
    check_duration(duration)?;
    check_log_domain(&boundary.x_terminal)?;
    let inv = dexpinv_closed(&boundary.x_terminal).map_err(|e| match e {
        Error::DexpSingular { angle } => Error::LogDomain { angle },
        other => other,
    })?;
    let vbar0 = boundary.v0 * duration;
    let vbar_t = boundary.vt * duration;
    InterpolationCurve::new(
        vec![
            CurveTerm::new(vec![0.0, 0.0, 3.0, -2.0], boundary.x_terminal),
            CurveTerm::new(vec![0.0, 1.0, -2.0, 1.0], vbar0),
            CurveTerm::new(vec![0.0, 0.0, -1.0, 1.0], inv * vbar_t),
        ],
        duration,
        *base_pose,
    )
}

/// Zero-twist cubic `(3τ² - 2τ³) X_T`.
pub fn min_acceleration(x_terminal: &ScrewVector, duration: f64, base_pose: &Pose) -> Result<InterpolationCurve> {
    check_duration(duration)?;
    check_log_domain(x_terminal)?;
    InterpolationCurve::new(
        vec![CurveTerm::new(vec![0.0, 0.0, 3.0, -2.0], *x_terminal)],
        duration,
        *base_pose,
    )
}

/// `(X(t/T), exp(X) C₀)`.
pub fn curve_eval(curve: &InterpolationCurve, t: f64) -> Result<(ScrewVector, Pose)> {
    let tau = curve.tau(t)?;
    let x = curve.coordinates(tau);
    Ok((x, exp_pose(&x) * curve.base_pose))
}

/// Spatial twist `V = dexp_X Ẋ` with `Ẋ = X'(τ) / T`.
pub fn curve_twist(curve: &InterpolationCurve, t: f64) -> Result<ScrewVector> {
    let tau = curve.tau(t)?;
    let x = curve.coordinates(tau);
    let xdot = curve.derivative(tau, 1) / curve.duration;
    Ok(dexp_closed(&x) * xdot)
}

/// Body-fixed twist `C⁻¹Ċ` of the curve's motion, `Ad_{C₀⁻¹} dexp_{-X} Ẋ`.
pub fn curve_body_twist(curve: &InterpolationCurve, t: f64) -> Result<ScrewVector> {
    let tau = curve.tau(t)?;
    let x = curve.coordinates(tau);
    let xdot = curve.derivative(tau, 1) / curve.duration;
    Ok(adjoint(&curve.base_pose.inverse()) * (dexp_closed(&(-x)) * xdot))
}

/// Negates every screw term. Under the left convention `Ċ = C V̂ᵇ` the
/// formulas of this module apply with the sign of `X` flipped.
pub fn body_fixed_variant(curve: &InterpolationCurve) -> InterpolationCurve {
    InterpolationCurve {
        terms: curve
            .terms
            .iter()
            .map(|t| CurveTerm::new(t.poly.clone(), -t.screw))
            .collect(),
        duration: curve.duration,
        base_pose: curve.base_pose,
    }
}

/// Adjoint `Ad_C` acting on angular-first screws: `[[R, 0], [p^R, R]]`.
pub fn adjoint(c: &Pose) -> Matrix6 {
    let r = c.rotation.matrix();
    let mut m = Matrix6::zeros();
    m.fixed_view_mut::<3, 3>(0, 0).copy_from(r);
    m.fixed_view_mut::<3, 3>(3, 3).copy_from(r);
    m.fixed_view_mut::<3, 3>(3, 0)
        .copy_from(&(hat3(&c.translation) * r));
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{Vector3, MetricWeights};

    fn sv(a: [f64; 6]) -> ScrewVector {
        ScrewVector::from_array(a)
    }

    const XT: ScrewVector = ScrewVector::from_array([0.0, 3.0, 1.0, 2.0, 0.0, 1.0]);

    #[test]
    fn polynomial_derivatives() {
        let p = [0.0, 1.0, -2.0, 1.0];
        assert_eq!(poly_eval(&p, 2.0, 0), 2.0);
        assert_eq!(poly_eval(&p, 2.0, 1), 1.0 - 8.0 + 12.0);
        assert_eq!(poly_eval(&p, 2.0, 2), -4.0 + 12.0);
        assert_eq!(poly_eval(&p, 2.0, 3), 6.0);
        assert_eq!(poly_eval(&p, 2.0, 4), 0.0);
    }

    #[test]
    fn geodesic_basic_values() {
        let c0 = exp_pose(&sv([0.1, -0.2, 0.3, 0.5, 0.5, -1.0]));
        let g = geodesic(&ScrewVector::zero(), 1.0, &c0).unwrap();
        assert_eq!(curve_eval(&g, 0.7).unwrap().1, c0);

        let g = geodesic(&XT, 2.0, &c0).unwrap();
        let (x, c) = curve_eval(&g, 2.0).unwrap();
        assert_eq!(x, XT);
        assert_eq!(c, exp_pose(&XT) * c0);
        let (x, _) = curve_eval(&g, 1.0).unwrap();
        assert!((x - sv([0.0, 1.5, 0.5, 1.0, 0.0, 0.5])).amax() < 1e-15);
    }

    #[test]
    fn geodesic_twist_is_constant() {
        let g = geodesic(&XT, 2.0, &Pose::identity()).unwrap();
        for &t in &[0.0, 0.4, 1.3, 2.0] {
            let v = curve_twist(&g, t).unwrap();
            assert!((v - XT / 2.0).amax() < 1e-14);
        }
    }

    #[test]
    fn zero_jet_iv_tip_is_power_of_tau() {
        let zero = ScrewVector::zero();
        let c3 = iv_tip(3, &XT, 1.0, &TwistJet::new(vec![zero; 2]), &Pose::identity()).unwrap();
        let c4 = iv_tip(4, &XT, 1.0, &TwistJet::new(vec![zero; 3]), &Pose::identity()).unwrap();
        for &tau in &[0.0, 0.25, 0.5, 0.9, 1.0] {
            assert!((c3.coordinates(tau) - XT * tau.powi(3)).amax() < 1e-15);
            assert!((c4.coordinates(tau) - XT * tau.powi(4)).amax() < 1e-15);
        }
    }

    #[test]
    fn iv_tip_argument_errors() {
        let jet = TwistJet::new(vec![ScrewVector::zero()]);
        let id = Pose::identity();
        assert!(matches!(iv_tip(5, &XT, 1.0, &jet, &id), Err(Error::BadOrder(5))));
        assert!(matches!(iv_tip(0, &XT, 1.0, &jet, &id), Err(Error::BadOrder(0))));
        assert!(matches!(
            iv_tip(3, &XT, 1.0, &jet, &id),
            Err(Error::InsufficientJet { needed: 2, got: 1 })
        ));
        assert!(iv_tip(1, &XT, 1.0, &jet, &id).is_err());
        assert!(iv_tip(2, &XT, 0.0, &jet, &id).is_err());
        let far = sv([0.0, 0.0, 6.3, 0.0, 0.0, 0.0]);
        assert!(matches!(iv_tip(2, &far, 1.0, &jet, &id), Err(Error::LogDomain { .. })));
        assert!(matches!(
            BoundaryData::new(far, ScrewVector::zero(), ScrewVector::zero()),
            Err(Error::LogDomain { .. })
        ));
    }

    #[test]
    fn low_order_forms() {
        let v0 = sv([0.2, 0.1, -0.3, 1.0, 0.5, 0.0]);
        let id = Pose::identity();
        let c1 = iv_tip(1, &XT, 2.0, &TwistJet::empty(), &id).unwrap();
        assert_eq!(c1.power_coefficients(), vec![ScrewVector::zero(), XT]);
        let c2 = iv_tip(2, &XT, 2.0, &TwistJet::new(vec![v0]), &id).unwrap();
        let coeffs = c2.power_coefficients();
        assert!((coeffs[1] - v0 * 2.0).amax() < 1e-15);
        assert!((coeffs[2] - (XT - v0 * 2.0)).amax() < 1e-15);
    }

    #[test]
    fn higher_order_initial_derivatives() {
        let v0 = sv([0.2, 0.1, -0.3, 1.0, 0.5, 0.0]);
        let v1 = sv([0.0, 0.4, 0.1, 0.0, 0.5, 1.0]);
        let v2 = sv([0.3, -0.2, 0.0, 0.7, 0.0, -0.4]);
        let t = 1.5;
        let id = Pose::identity();
        let c3 = iv_tip(3, &XT, t, &TwistJet::new(vec![v0, v1]), &id).unwrap();
        assert!((c3.derivative(0.0, 1) - v0 * t).amax() < 1e-14);
        assert!((c3.derivative(0.0, 2) - v1 * (t * t)).amax() < 1e-14);
        let c4 = iv_tip(4, &XT, t, &TwistJet::new(vec![v0, v1, v2]), &id).unwrap();
        let (b0, b1) = (v0 * t, v1 * (t * t));
        let expected = v2 * t.powi(3) + bracket(&b1, &b0) * 0.5;
        assert!((c4.derivative(0.0, 2) - b1).amax() < 1e-14);
        assert!((c4.derivative(0.0, 3) - expected).amax() < 1e-13);
    }

    #[test]
    fn min_acceleration_midpoint_and_ends() {
        let c = min_acceleration(&XT, 1.0, &Pose::identity()).unwrap();
        assert_eq!(c.coordinates(0.0), ScrewVector::zero());
        assert_eq!(c.coordinates(1.0), XT);
        assert!((c.coordinates(0.5) - XT * 0.5).amax() < 1e-15);
    }

    #[test]
    fn min_acceleration_equals_zero_twist_bv() {
        let b = BoundaryData::new(XT, ScrewVector::zero(), ScrewVector::zero()).unwrap();
        let bv = bv_tip_cubic(&b, 1.5, &Pose::identity()).unwrap();
        let ma = min_acceleration(&XT, 1.5, &Pose::identity()).unwrap();
        for (a, b) in bv.power_coefficients().iter().zip(ma.power_coefficients()) {
            assert!((*a - b).amax() <= 1e-14);
        }
    }

    #[test]
    fn terminal_twist_of_pure_terminal_screw() {
        let t = 2.0;
        let vt = cubic_terminal_twist(&XT, t, &ScrewVector::zero(), &ScrewVector::zero()).unwrap();
        assert!((vt - XT * 3.0 / t).amax() < 1e-14);
    }

    #[test]
    fn terminal_twist_algebraic_arrangement() {
        // X_T = T V₀ and V̇₀ = 0 give 3X_T - 2V̄₀ - ½V̄̇₀ = V̄₀.
        let t = 0.8;
        let v0 = sv([0.3, -0.5, 0.2, 1.0, 0.0, 0.4]);
        let xt = v0 * t;
        let vdot0 = ScrewVector::zero();
        let vt = cubic_terminal_twist(&xt, t, &v0, &vdot0).unwrap();
        let expected = dexp_closed(&xt) * v0;
        assert!((vt - expected).amax() < 1e-14);
    }

    #[test]
    fn out_of_domain_evaluation() {
        let g = geodesic(&XT, 1.0, &Pose::identity()).unwrap();
        assert!(matches!(curve_eval(&g, 1.5), Err(Error::OutOfDomain { .. })));
        assert!(matches!(curve_twist(&g, -0.1), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn body_fixed_variant_is_involution() {
        let b = BoundaryData::new(XT, sv([0.0, 0.0, 0.0, 2.0, 0.0, 1.0]), sv([0.1; 6])).unwrap();
        let c = bv_tip_cubic(&b, 1.0, &Pose::identity()).unwrap();
        assert_eq!(body_fixed_variant(&body_fixed_variant(&c)), c);
        let z = geodesic(&ScrewVector::zero(), 1.0, &Pose::identity()).unwrap();
        assert_eq!(body_fixed_variant(&z).coordinates(0.5), ScrewVector::zero());
    }

    #[test]
    fn body_twist_relations() {
        let c0 = exp_pose(&sv([0.3, 0.1, -0.2, 1.0, -1.0, 0.5]));
        let b = BoundaryData::new(XT, sv([0.1, 0.0, 0.2, 2.0, 0.0, 1.0]), sv([0.0, 1.0, 0.5, 0.3, 0.2, 0.1])).unwrap();
        let c = bv_tip_cubic(&b, 1.3, &c0).unwrap();
        let variant = body_fixed_variant(&c);
        for &t in &[0.0, 0.2, 0.65, 1.3] {
            let (_, pose) = curve_eval(&c, t).unwrap();
            let spatial = curve_twist(&c, t).unwrap();
            let body = curve_body_twist(&c, t).unwrap();
            // adjoint transport between the frames
            let transported = adjoint(&pose.inverse()) * spatial;
            assert!((body - transported).amax() < 1e-10);
            // sign-flip identity through the variant
            let flipped = -(adjoint(&c0.inverse()) * curve_twist(&variant, t).unwrap());
            assert!((body - flipped).amax() < 1e-10);
        }
    }

    #[test]
    fn goal_resolution() {
        let c0 = exp_pose(&sv([0.1, 0.0, 0.2, 0.0, 1.0, 0.0]));
        let xt = sv([0.0, 0.9, 0.3, 2.0, 0.0, 1.0]);
        let ct = exp_pose(&xt) * c0;
        let x = resolve_terminal_screw(None, Some(&ct), &c0).unwrap();
        assert!((x - xt).amax() < 1e-10);
        assert!(resolve_terminal_screw(Some(&xt), Some(&ct), &c0).is_ok());
        // a screw beyond π names the same pose but is not the principal log
        let ct = exp_pose(&XT) * c0;
        assert!(matches!(
            resolve_terminal_screw(Some(&XT), Some(&ct), &c0),
            Err(Error::ConflictingGoal { .. })
        ));
        let other = xt + sv([0.0, 0.0, 0.0, 0.1, 0.0, 0.0]);
        assert!(matches!(
            resolve_terminal_screw(Some(&other), Some(&(exp_pose(&xt) * c0)), &c0),
            Err(Error::ConflictingGoal { .. })
        ));
        assert!(resolve_terminal_screw(None, None, &c0).is_err());
        assert_eq!(resolve_terminal_screw(Some(&XT), None, &c0).unwrap(), XT);
    }

    #[test]
    fn relative_pose_between_geodesic_and_min_acc_is_collinear() {
        let id = Pose::identity();
        let geo = geodesic(&XT, 1.0, &id).unwrap();
        let ma = min_acceleration(&XT, 1.0, &id).unwrap();
        let w = MetricWeights::default();
        let tau = 0.5 - 3f64.sqrt() / 6.0;
        let rel = geo.pose_at_tau(tau).inverse() * ma.pose_at_tau(tau);
        let s = 3.0 * tau * tau - 2.0 * tau.powi(3) - tau;
        let expected = exp_pose(&(XT * s));
        let (d, _) = crate::lie::distance(&rel, &expected, &w).unwrap();
        assert!(d < 1e-12);
        let rot = Vector3::new(0.0, 3.0, 1.0).norm() * s.abs();
        assert!((rot - 0.0962250448649376 * 10f64.sqrt()).abs() < 1e-12);
    }
}
