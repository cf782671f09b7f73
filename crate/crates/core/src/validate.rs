//! Randomized invariant suites behind `screwmotion validate`.
//!
//! Each check draws its inputs from a seeded RNG (`SCREWMOTION_SEED`, default 42)
//! so that a failing run can be replayed exactly. The interpolation builders are
//! injectable through [`Schemes`] so that mutated formulas can be fed through
//! the same checks.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::Result;
use crate::interp::{
    bv_tip_cubic, cubic_terminal_twist, curve_eval, curve_twist, geodesic, iv_tip,
    min_acceleration, BoundaryData, InterpolationCurve,
};
use crate::lie::{
    ad_op, bracket, dexp_closed, dexp_series, dexpinv_closed, distance, exp_pose, exp_rot, hat3,
    log_pose, log_rot, vee3, Matrix6, MetricWeights, Pose, ScrewVector, Vector3,
};
use crate::magnus::{compositions, eval_series, magnus_coefficients, x3_closed, x4_closed, TwistJet};
use crate::oracle::finite_diff_twist;

pub const SEED_ENV: &str = "SCREWMOTION_SEED";
pub const DEFAULT_SEED: u64 = 42;

/// Seed from `SCREWMOTION_SEED`, falling back to [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lie,
    Magnus,
    Interp,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lie" => Ok(Suite::Lie),
            "magnus" => Ok(Suite::Magnus),
            "interp" => Ok(Suite::Interp),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite '{other}' (lie|magnus|interp|all)")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Lie => "lie",
            Suite::Magnus => "magnus",
            Suite::Interp => "interp",
            Suite::All => "all",
        };
        f.write_str(name)
    }
}

pub type BvBuilder = fn(&BoundaryData, f64, &Pose) -> Result<InterpolationCurve>;

/// Interpolation constructors exercised by the interp suite.
#[derive(Clone, Copy)]
pub struct Schemes {
    pub bv_tip_cubic: BvBuilder,
}

impl Default for Schemes {
    fn default() -> Self {
        Self { bv_tip_cubic }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed defect against the threshold.
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{verdict} [{}] {}: {}", c.suite, c.name, c.detail)?;
        }
        Ok(())
    }
}

struct Recorder {
    suite: Suite,
    checks: Vec<CheckOutcome>,
}

impl Recorder {
    /// Records `worst <= limit`; errors from the body count as failures.
    fn bound(&mut self, name: &'static str, limit: f64, body: impl FnOnce() -> Result<f64>) {
        let (passed, detail) = match body() {
            Ok(worst) => (worst <= limit, format!("worst {worst:.3e} (limit {limit:.1e})")),
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(CheckOutcome {
            suite: self.suite,
            name,
            passed,
            detail,
        });
    }

    fn range(&mut self, name: &'static str, lo: f64, hi: f64, body: impl FnOnce() -> Result<f64>) {
        let (passed, detail) = match body() {
            Ok(v) => ((lo..=hi).contains(&v), format!("value {v:.4} (expected {lo}..{hi})")),
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(CheckOutcome {
            suite: self.suite,
            name,
            passed,
            detail,
        });
    }
}

/// Runs the selected suite(s).
pub fn run(suite: Suite, seed: u64, schemes: &Schemes) -> ValidationReport {
    let mut report = ValidationReport::default();
    let selected: &[Suite] = match suite {
        Suite::All => &[Suite::Lie, Suite::Magnus, Suite::Interp],
        Suite::Lie => &[Suite::Lie],
        Suite::Magnus => &[Suite::Magnus],
        Suite::Interp => &[Suite::Interp],
    };
    for &s in selected {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut rec = Recorder {
            suite: s,
            checks: Vec::new(),
        };
        match s {
            Suite::Lie => lie_suite(&mut rec, &mut rng),
            Suite::Magnus => magnus_suite(&mut rec, &mut rng),
            Suite::Interp => interp_suite(&mut rec, &mut rng, schemes),
            Suite::All => unreachable!(),
        }
        report.checks.extend(rec.checks);
    }
    report
}

// ---------------------------------------------------------------------------
// Random inputs

pub fn random_vector(rng: &mut impl Rng, scale: f64) -> Vector3 {
    Vector3::new(
        rng.random_range(-scale..=scale),
        rng.random_range(-scale..=scale),
        rng.random_range(-scale..=scale),
    )
}

/// Vector with norm uniform in `[0, max_norm]` and a uniformly random direction.
pub fn random_vector_with_norm(rng: &mut impl Rng, max_norm: f64) -> Vector3 {
    loop {
        let v = random_vector(rng, 1.0);
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v / n * rng.random_range(0.0..=max_norm);
        }
    }
}

/// Screw with `‖ω‖ ≤ max_angle` and linear components in `[-linear, linear]`.
pub fn random_screw(rng: &mut impl Rng, max_angle: f64, linear: f64) -> ScrewVector {
    ScrewVector::new(
        random_vector_with_norm(rng, max_angle),
        random_vector(rng, linear),
    )
}

pub fn random_pose(rng: &mut impl Rng) -> Pose {
    exp_pose(&random_screw(rng, 3.0, 2.0))
}

fn pose_gap(a: &Pose, b: &Pose) -> f64 {
    (a.to_homogeneous() - b.to_homogeneous()).amax()
}

fn max_abs(m: &Matrix6) -> f64 {
    m.amax()
}

// ---------------------------------------------------------------------------
// Suites

fn lie_suite(rec: &mut Recorder, rng: &mut StdRng) {
    rec.bound("hat/vee round trip", 0.0, || {
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let v = random_vector(rng, 10.0);
            worst = worst.max((vee3(&hat3(&v))? - v).amax());
        }
        Ok(worst)
    });

    rec.bound("exp/log round trip", 1e-9, || {
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let w = random_vector_with_norm(rng, std::f64::consts::PI - 1e-6);
            let r = exp_rot(&w);
            worst = worst.max((log_rot(&r)? - w).amax());
            let x = ScrewVector::new(w, random_vector(rng, 3.0));
            let c = exp_pose(&x);
            worst = worst.max((log_pose(&c)? - x).amax());
            worst = worst.max(pose_gap(&exp_pose(&log_pose(&c)?), &c));
        }
        Ok(worst)
    });

    rec.bound("dexp times dexp inverse is identity", 1e-12, || {
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let x = random_screw(rng, std::f64::consts::PI - 1e-6, 1.0);
            let product = dexp_closed(&x) * dexpinv_closed(&x)?;
            worst = worst.max(max_abs(&(product - Matrix6::identity())));
        }
        Ok(worst)
    });

    rec.bound("series vs closed dexp", 1e-12, || {
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let x = random_screw(rng, 2.0, 1.0);
            worst = worst.max(max_abs(&(dexp_closed(&x) - dexp_series(&x, 20))));
        }
        Ok(worst)
    });

    rec.bound("bracket antisymmetry and Jacobi identity", 1e-12, || {
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let a = random_screw(rng, 2.0, 2.0);
            let b = random_screw(rng, 2.0, 2.0);
            let c = random_screw(rng, 2.0, 2.0);
            worst = worst.max((bracket(&a, &b) + bracket(&b, &a)).amax());
            let jacobi = bracket(&a, &bracket(&b, &c))
                + bracket(&b, &bracket(&c, &a))
                + bracket(&c, &bracket(&a, &b));
            worst = worst.max(jacobi.amax());
            worst = worst.max((ad_op(&a) * b - bracket(&a, &b)).amax());
        }
        Ok(worst)
    });

    rec.bound("distance left invariance", 1e-10, || {
        let w = MetricWeights::default();
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let a = random_pose(rng);
            let c1 = random_pose(rng);
            let c2 = c1 * exp_pose(&random_screw(rng, 2.5, 2.0));
            let (d, comp) = distance(&c1, &c2, &w)?;
            let (da, comp_a) = distance(&(a * c1), &(a * c2), &w)?;
            worst = worst
                .max((d - da).abs())
                .max((comp.rotational - comp_a.rotational).abs())
                .max((comp.translational - comp_a.translational).abs());
        }
        Ok(worst)
    });

    // C(t) = exp(X(t)) along a smooth coordinate curve; compares the
    // finite-difference twist with dexp_X Ẋ at h and h/2.
    rec.range("finite-difference twist converges at second order", 3.8, 4.2, || {
        let a = random_screw(rng, 1.0, 1.0);
        let b = random_screw(rng, 1.0, 1.0);
        let c = random_screw(rng, 1.0, 1.0);
        let coords = |t: f64| a * t + b * (t * t) + c * (t.sin());
        let velocity = |t: f64| a + b * (2.0 * t) + c * t.cos();
        let t0 = 0.7;
        let exact = dexp_closed(&coords(t0)) * velocity(t0);
        let err = |h: f64| (finite_diff_twist(|t| exp_pose(&coords(t)), t0, h) - exact).norm();
        Ok(err(1e-2) / err(5e-3))
    });
}

fn random_jet(rng: &mut StdRng, n: usize) -> TwistJet {
    TwistJet::new((0..n).map(|_| random_screw(rng, 1.0, 1.0)).collect())
}

fn magnus_suite(rec: &mut Recorder, rng: &mut StdRng) {
    rec.bound("composition counts are binomial", 0.0, || {
        let mut mismatches = 0usize;
        for k in 1..=10usize {
            for l in 1..=k {
                let expected = (0..l - 1).fold(1usize, |acc, i| acc * (k - 1 - i) / (i + 1));
                if compositions(k, l).len() != expected {
                    mismatches += 1;
                }
            }
        }
        Ok(mismatches as f64)
    });

    rec.bound("recursion matches closed third/fourth order forms", 1e-13, || {
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let jet = random_jet(rng, 4);
            let c3 = magnus_coefficients(&jet, 3)?;
            let c4 = magnus_coefficients(&jet, 4)?;
            let t: f64 = rng.random_range(0.0..=1.0);
            worst = worst.max((eval_series(&c3, t) - x3_closed(&jet, t)?).amax());
            worst = worst.max((eval_series(&c4, t) - x4_closed(&jet, t)?).amax());
        }
        Ok(worst)
    });

    rec.bound("constant twist collapses to t V", 1e-14, || {
        let mut worst: f64 = 0.0;
        for k in 1..=8 {
            let v = random_screw(rng, 1.0, 1.0);
            let mut d = vec![ScrewVector::zero(); k];
            d[0] = v;
            let c = magnus_coefficients(&TwistJet::new(d), k)?;
            for &t in &[0.1, 0.5, 1.0] {
                worst = worst.max((eval_series(&c, t) - v * t).amax());
            }
        }
        Ok(worst)
    });
}

fn interp_suite(rec: &mut Recorder, rng: &mut StdRng, schemes: &Schemes) {
    let bv = schemes.bv_tip_cubic;

    rec.bound("endpoint exactness", 1e-13, || {
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let xt = random_screw(rng, 3.0, 2.0);
            let t = rng.random_range(0.5..2.0);
            let c0 = random_pose(rng);
            let jet = random_jet(rng, 3);
            let mut curves = vec![geodesic(&xt, t, &c0)?, min_acceleration(&xt, t, &c0)?];
            for k in 1..=4 {
                let j = TwistJet::new(jet.derivatives()[..k - 1].to_vec());
                curves.push(iv_tip(k, &xt, t, &j, &c0)?);
            }
            let b = BoundaryData::new(xt, random_screw(rng, 1.0, 1.0), random_screw(rng, 1.0, 1.0))?;
            curves.push(bv(&b, t, &c0)?);
            for c in &curves {
                worst = worst.max(curve_eval(c, 0.0)?.0.amax());
                worst = worst.max((curve_eval(c, t)?.0 - xt).amax());
            }
        }
        Ok(worst)
    });

    rec.bound("boundary twist matching", 1e-6, || {
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let xt = random_screw(rng, 2.5, 2.0);
            let t = rng.random_range(0.5..2.0);
            let c0 = random_pose(rng);
            let v0 = random_screw(rng, 1.5, 1.5);
            let vt = random_screw(rng, 1.5, 1.5);
            let curve = bv(&BoundaryData::new(xt, v0, vt)?, t, &c0)?;
            let pose = |s: f64| curve.pose_at_tau(s / t);
            let h = 1e-5;
            let scale = 1.0 + v0.amax().max(vt.amax());
            worst = worst.max((finite_diff_twist(pose, 0.0, h) - v0).amax() / scale);
            worst = worst.max((finite_diff_twist(pose, t, h) - vt).amax() / scale);
            worst = worst.max((curve_twist(&curve, 0.0)? - v0).amax() / scale);
            worst = worst.max((curve_twist(&curve, t)? - vt).amax() / scale);
        }
        Ok(worst)
    });

    rec.bound("initial jet matching", 1e-6, || {
        let mut worst: f64 = 0.0;
        for k in 2..=4 {
            for _ in 0..10 {
                let xt = random_screw(rng, 2.5, 2.0);
                let t = rng.random_range(0.5..2.0);
                let jet = random_jet(rng, k - 1);
                let curve = iv_tip(k, &xt, t, &jet, &Pose::identity())?;
                let d = jet.derivatives();
                // V(s) extended polynomially to s < 0 for central differences
                let twist = |s: f64| {
                    let tau = s / t;
                    dexp_closed(&curve.coordinates(tau)) * (curve.derivative(tau, 1) / t)
                };
                worst = worst.max((twist(0.0) - d[0]).amax());
                // Richardson-extrapolated central differences, O(h⁴)
                let first = |h: f64| (twist(h) - twist(-h)) / (2.0 * h);
                let second = |h: f64| (twist(h) - twist(0.0) * 2.0 + twist(-h)) / (h * h);
                let h = 1e-2;
                if k >= 3 {
                    let d1 = (first(h / 2.0) * 4.0 - first(h)) / 3.0;
                    worst = worst.max((d1 - d[1]).amax() / (1.0 + d[1].amax()));
                }
                if k >= 4 {
                    let d2 = (second(h / 2.0) * 4.0 - second(h)) / 3.0;
                    worst = worst.max((d2 - d[2]).amax() / (1.0 + d[2].amax()));
                }
            }
        }
        Ok(worst)
    });

    rec.bound("cubic polynomial reproduction", 1e-9, || {
        let w = MetricWeights::default();
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let (a, b, c) = (
                random_screw(rng, 1.0, 1.0),
                random_screw(rng, 1.0, 1.0),
                random_screw(rng, 1.0, 1.0),
            );
            let t: f64 = rng.random_range(0.5..1.5);
            let coords = |s: f64| a * s + b * (s * s) + c * (s * s * s);
            let rate = |s: f64| a + b * (2.0 * s) + c * (3.0 * s * s);
            let xt = coords(t);
            if xt.angular().norm() > 3.0 {
                continue;
            }
            let vt = dexp_closed(&xt) * rate(t);
            let curve = bv(&BoundaryData::new(xt, rate(0.0), vt)?, t, &Pose::identity())?;
            for i in 0..=50 {
                let s = t * i as f64 / 50.0;
                let (d, _) = distance(&exp_pose(&coords(s)), &curve_eval(&curve, s)?.1, &w)?;
                worst = worst.max(d);
            }
        }
        Ok(worst)
    });

    rec.bound("elimination consistency", 1e-13, || {
        let mut worst: f64 = 0.0;
        for _ in 0..50 {
            let xt = random_screw(rng, 2.5, 2.0);
            let t = rng.random_range(0.5..2.0);
            let jet = random_jet(rng, 2);
            let d = jet.derivatives();
            let vt = cubic_terminal_twist(&xt, t, &d[0], &d[1])?;
            let cubic = bv(&BoundaryData::new(xt, d[0], vt)?, t, &Pose::identity())?;
            let iv3 = iv_tip(3, &xt, t, &jet, &Pose::identity())?;
            for (p, q) in cubic.power_coefficients().iter().zip(iv3.power_coefficients()) {
                worst = worst.max((*p - q).amax() / (1.0 + q.amax()));
            }
        }
        Ok(worst)
    });

    rec.bound("time-scaling covariance", 1e-12, || {
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let xt = random_screw(rng, 2.5, 2.0);
            let t = rng.random_range(0.5..2.0);
            let scale = rng.random_range(0.25..4.0);
            let v0 = random_screw(rng, 1.0, 1.0);
            let vt = random_screw(rng, 1.0, 1.0);
            let base = bv(&BoundaryData::new(xt, v0, vt)?, t, &Pose::identity())?;
            let scaled = bv(
                &BoundaryData::new(xt, v0 / scale, vt / scale)?,
                t * scale,
                &Pose::identity(),
            )?;
            let jet = random_jet(rng, 3);
            let scaled_jet = TwistJet::new(
                jet.derivatives()
                    .iter()
                    .enumerate()
                    .map(|(i, v)| *v / scale.powi(i as i32 + 1))
                    .collect(),
            );
            let iv = iv_tip(4, &xt, t, &jet, &Pose::identity())?;
            let iv_scaled = iv_tip(4, &xt, t * scale, &scaled_jet, &Pose::identity())?;
            for i in 0..=10 {
                let tau = i as f64 / 10.0;
                worst = worst.max((base.coordinates(tau) - scaled.coordinates(tau)).amax());
                worst = worst.max((iv.coordinates(tau) - iv_scaled.coordinates(tau)).amax());
            }
        }
        Ok(worst)
    });
}
