//! Built-in reproduction runs for the two reference motions.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interp::{
    bv_tip_cubic, cubic_terminal_twist, geodesic, min_acceleration, BoundaryData, InterpolationCurve,
};
use crate::lie::{dexp_closed, exp_pose, MetricWeights, Pose, ScrewVector};
use crate::oracle::{compare, ComparisonReport, DEFAULT_SAMPLES};

use super::output::format_number;

/// Cubic reference motion `X(t) = (0, 3t³, t³, 2t, 0, t)`.
pub mod example1 {
    use crate::lie::ScrewVector;

    pub const DURATION: f64 = 1.0;
    pub const X_TERMINAL: ScrewVector = ScrewVector::from_array([0.0, 3.0, 1.0, 2.0, 0.0, 1.0]);
    pub const V0: ScrewVector = ScrewVector::from_array([0.0, 0.0, 0.0, 2.0, 0.0, 1.0]);
    /// Terminal twist as published, rounded to five decimals.
    pub const VT_PUBLISHED: ScrewVector =
        ScrewVector::from_array([0.0, 9.0, 3.0, 4.82629, -1.40384, 5.21152]);

    pub fn coordinates(t: f64) -> ScrewVector {
        let t3 = t * t * t;
        ScrewVector::from_array([0.0, 3.0 * t3, t3, 2.0 * t, 0.0, t])
    }

    pub fn velocity(t: f64) -> ScrewVector {
        let t2 = t * t;
        ScrewVector::from_array([0.0, 9.0 * t2, 3.0 * t2, 2.0, 0.0, 1.0])
    }
}

/// Quartic reference motion `X(t) = (-t⁴, 0.3t⁴, 0.5t⁴, 2t², 0, t²)`.
pub mod example2 {
    use crate::lie::ScrewVector;

    pub const DURATION: f64 = 1.0;

    pub fn coordinates(t: f64) -> ScrewVector {
        let (t2, t4) = (t * t, t * t * t * t);
        ScrewVector::from_array([-t4, 0.3 * t4, 0.5 * t4, 2.0 * t2, 0.0, t2])
    }

    pub fn velocity(t: f64) -> ScrewVector {
        let t3 = t * t * t;
        ScrewVector::from_array([-4.0 * t3, 1.2 * t3, 2.0 * t3, 4.0 * t, 0.0, 2.0 * t])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Example {
    Example1,
    Example2,
}

impl FromStr for Example {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "example1" => Ok(Example::Example1),
            "example2" => Ok(Example::Example2),
            other => Err(format!("unknown example '{other}' (example1|example2)")),
        }
    }
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Example::Example1 => "example1",
            Example::Example2 => "example2",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ReproduceError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Kinematics(#[from] Error),
}

/// Outcome of a reproduction run.
#[derive(Clone, Debug)]
pub struct Reproduction {
    pub example: Example,
    pub verdicts: Vec<Verdict>,
    pub files: Vec<PathBuf>,
}

impl Reproduction {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

fn true_motion(coords: fn(f64) -> ScrewVector) -> impl Fn(f64) -> Pose {
    move |t| exp_pose(&coords(t))
}

fn against<F: Fn(f64) -> Pose>(truth: F, curve: &InterpolationCurve) -> Result<ComparisonReport> {
    let w = MetricWeights::default();
    compare(truth, |t| curve.pose_at_tau(t / curve.duration()), curve.duration(), DEFAULT_SAMPLES, &w)
        .map_err(|e| e.source)
}

fn write_error_curve(path: &Path, report: &ComparisonReport) -> io::Result<()> {
    let mut f = io::BufWriter::new(fs::File::create(path)?);
    writeln!(f, "# distance between two motions, alpha = beta = 1")?;
    writeln!(f, "t,rotational,translational,weighted")?;
    for s in &report.samples {
        writeln!(
            f,
            "{},{},{},{}",
            format_number(s.t),
            format_number(s.rotational),
            format_number(s.translational),
            format_number(s.weighted)
        )?;
    }
    f.flush()
}

fn write_report(path: &Path, title: &str, lines: &[String], verdicts: &[Verdict]) -> io::Result<()> {
    let mut f = io::BufWriter::new(fs::File::create(path)?);
    writeln!(f, "{title}")?;
    for l in lines {
        writeln!(f, "{l}")?;
    }
    for v in verdicts {
        writeln!(f, "{} {}: {}", if v.passed { "PASS" } else { "FAIL" }, v.name, v.detail)?;
    }
    f.flush()
}

fn screw_text(v: &ScrewVector) -> String {
    let parts: Vec<String> = v.to_array().iter().map(|x| format!("{x:.10}")).collect();
    format!("({})", parts.join(", "))
}

/// Largest interior sample error, ignoring the two endpoints.
fn interior_max(report: &ComparisonReport) -> f64 {
    let n = report.samples.len();
    report.samples[1..n - 1].iter().map(|s| s.weighted).fold(0.0, f64::max)
}

fn endpoint_max(report: &ComparisonReport) -> f64 {
    let first = report.samples.first().map_or(0.0, |s| s.weighted);
    let last = report.samples.last().map_or(0.0, |s| s.weighted);
    first.max(last)
}

/// Runs `example`, writing error curves and `<example>_report.txt` into `dir`.
pub fn reproduce(example: Example, dir: &Path) -> std::result::Result<Reproduction, ReproduceError> {
    fs::create_dir_all(dir)?;
    match example {
        Example::Example1 => run_example1(dir),
        Example::Example2 => run_example2(dir),
    }
}

fn run_example1(dir: &Path) -> std::result::Result<Reproduction, ReproduceError> {
    use example1::*;
    let id = Pose::identity();
    let truth = true_motion(coordinates);

    // V̇₀ of the reference motion vanishes.
    let vt = cubic_terminal_twist(&X_TERMINAL, DURATION, &V0, &ScrewVector::zero())?;
    let vt_via_dexp = dexp_closed(&X_TERMINAL) * velocity(DURATION);
    let published_gap = (vt - VT_PUBLISHED).amax();

    let full = bv_tip_cubic(&BoundaryData::new(X_TERMINAL, V0, vt)?, DURATION, &id)?;
    let published = bv_tip_cubic(&BoundaryData::new(X_TERMINAL, V0, VT_PUBLISHED)?, DURATION, &id)?;
    let min_acc = min_acceleration(&X_TERMINAL, DURATION, &id)?;
    let geo = geodesic(&X_TERMINAL, DURATION, &id)?;

    let full_report = against(&truth, &full)?;
    let published_report = against(&truth, &published)?;
    let min_acc_report = against(&truth, &min_acc)?;
    let gap_report = against(|t| geo.pose_at_tau(t / DURATION), &min_acc)?;
    let coordinate_gap = (0..=DEFAULT_SAMPLES)
        .map(|i| {
            let tau = i as f64 / DEFAULT_SAMPLES as f64;
            (published.coordinates(tau) - coordinates(tau * DURATION)).amax()
        })
        .fold(0.0, f64::max);

    let expected_gap = 3f64.sqrt() / 18.0 * X_TERMINAL.angular().norm();
    let verdicts = vec![
        Verdict::new(
            "terminal twist matches published value",
            published_gap <= 5e-5,
            format!("max component difference {published_gap:.3e} (limit 5e-5)"),
        ),
        Verdict::new(
            "full-state cubic reproduces the motion",
            full_report.max_weighted <= 1e-9,
            format!("max error {:.3e} (limit 1e-9)", full_report.max_weighted),
        ),
        Verdict::new(
            "published terminal twist reproduces the coordinates",
            coordinate_gap <= 5e-5,
            format!("max coordinate difference {coordinate_gap:.3e} (limit 5e-5)"),
        ),
        Verdict::new(
            "zero-twist cubic departs from the motion",
            interior_max(&min_acc_report) > 1e-3 && endpoint_max(&min_acc_report) <= 1e-9,
            format!(
                "interior max {:.3e}, endpoint max {:.3e}",
                interior_max(&min_acc_report),
                endpoint_max(&min_acc_report)
            ),
        ),
        Verdict::new(
            "geodesic vs minimum acceleration gap",
            (gap_report.max_rotational - expected_gap).abs() <= 1e-3,
            format!(
                "max rotational {:.6} (expected {expected_gap:.6} within 1e-3)",
                gap_report.max_rotational
            ),
        ),
    ];

    let files = vec![
        dir.join("example1_full_state.csv"),
        dir.join("example1_published_vt.csv"),
        dir.join("example1_min_acc.csv"),
        dir.join("example1_geodesic_vs_min_acc.csv"),
        dir.join("example1_report.txt"),
    ];
    write_error_curve(&files[0], &full_report)?;
    write_error_curve(&files[1], &published_report)?;
    write_error_curve(&files[2], &min_acc_report)?;
    write_error_curve(&files[3], &gap_report)?;
    let lines = vec![
        format!("X_T = {}", screw_text(&X_TERMINAL)),
        format!("V_0 = {}", screw_text(&V0)),
        format!("V_T recomputed = {}", screw_text(&vt)),
        format!("V_T via dexp of true rate = {}", screw_text(&vt_via_dexp)),
        format!("V_T published = {}", screw_text(&VT_PUBLISHED)),
        format!(
            "max error: full state {:.3e}, published V_T {:.3e}, zero twists {:.3e}",
            full_report.max_weighted, published_report.max_weighted, min_acc_report.max_weighted
        ),
    ];
    write_report(&files[4], "example1: cubic motion", &lines, &verdicts)?;
    Ok(Reproduction {
        example: Example::Example1,
        verdicts,
        files,
    })
}

fn run_example2(dir: &Path) -> std::result::Result<Reproduction, ReproduceError> {
    use example2::*;
    let id = Pose::identity();
    let truth = true_motion(coordinates);

    let xt = coordinates(DURATION);
    let v0 = dexp_closed(&coordinates(0.0)) * velocity(0.0);
    let vt = dexp_closed(&xt) * velocity(DURATION);

    let full = bv_tip_cubic(&BoundaryData::new(xt, v0, vt)?, DURATION, &id)?;
    let min_acc = min_acceleration(&xt, DURATION, &id)?;
    let geo = geodesic(&xt, DURATION, &id)?;

    let full_report = against(&truth, &full)?;
    let min_acc_report = against(&truth, &min_acc)?;
    let gap_report = against(|t| geo.pose_at_tau(t / DURATION), &min_acc)?;

    let verdicts = vec![
        Verdict::new(
            "full-state cubic matches the endpoints",
            endpoint_max(&full_report) <= 1e-9,
            format!("endpoint max {:.3e} (limit 1e-9)", endpoint_max(&full_report)),
        ),
        Verdict::new(
            "full-state cubic deviates in the interior",
            interior_max(&full_report) > 1e-9,
            format!("interior max {:.3e}", interior_max(&full_report)),
        ),
        Verdict::new(
            "zero twists enlarge the deviation",
            min_acc_report.max_weighted > full_report.max_weighted,
            format!(
                "zero twists {:.3e} vs full state {:.3e}",
                min_acc_report.max_weighted, full_report.max_weighted
            ),
        ),
        Verdict::new(
            "geodesic vs minimum acceleration gap",
            gap_report.max_rotational > 0.0 && endpoint_max(&gap_report) <= 1e-9,
            format!("max rotational {:.6}", gap_report.max_rotational),
        ),
    ];

    let files = vec![
        dir.join("example2_full_state.csv"),
        dir.join("example2_min_acc.csv"),
        dir.join("example2_geodesic_vs_min_acc.csv"),
        dir.join("example2_report.txt"),
    ];
    write_error_curve(&files[0], &full_report)?;
    write_error_curve(&files[1], &min_acc_report)?;
    write_error_curve(&files[2], &gap_report)?;
    let lines = vec![
        format!("X_T = {}", screw_text(&xt)),
        format!("V_0 = {}", screw_text(&v0)),
        format!("V_T = {}", screw_text(&vt)),
        format!(
            "max error: full state {:.3e}, zero twists {:.3e}",
            full_report.max_weighted, min_acc_report.max_weighted
        ),
    ];
    write_report(&files[3], "example2: quartic motion", &lines, &verdicts)?;
    Ok(Reproduction {
        example: Example::Example2,
        verdicts,
        files,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_velocities_match_difference_quotients() {
        for (x, v) in [
            (example1::coordinates as fn(f64) -> ScrewVector, example1::velocity as fn(f64) -> ScrewVector),
            (example2::coordinates, example2::velocity),
        ] {
            let h = 1e-6;
            for &t in &[0.2, 0.7, 1.0] {
                let fd = (x(t + h) - x(t - h)) / (2.0 * h);
                assert!((fd - v(t)).amax() < 1e-8);
            }
        }
    }

    #[test]
    fn both_examples_pass() {
        let dir = std::env::temp_dir().join(format!("screwmotion-repro-{}", std::process::id()));
        for example in [Example::Example1, Example::Example2] {
            let run = reproduce(example, &dir).unwrap();
            assert!(run.passed(), "{:?}", run.verdicts);
            assert!(run.files.iter().all(|f| f.exists()));
        }
        fs::remove_dir_all(&dir).unwrap();
    }
}
