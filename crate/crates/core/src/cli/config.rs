use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use crate::error::Result;
use crate::interp::{
    bv_tip_cubic, geodesic, iv_tip, min_acceleration, resolve_terminal_screw, BoundaryData,
    InterpolationCurve,
};
use crate::lie::{MetricWeights, Pose, Rotation, ScrewVector, Vector3};
use crate::magnus::TwistJet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Geodesic,
    Iv1,
    Iv2,
    Iv3,
    Iv4,
    BvCubic,
    MinAcc,
}

impl Mode {
    pub const ALL: [Mode; 7] = [
        Mode::Geodesic,
        Mode::Iv1,
        Mode::Iv2,
        Mode::Iv3,
        Mode::Iv4,
        Mode::BvCubic,
        Mode::MinAcc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Geodesic => "geodesic",
            Mode::Iv1 => "iv1",
            Mode::Iv2 => "iv2",
            Mode::Iv3 => "iv3",
            Mode::Iv4 => "iv4",
            Mode::BvCubic => "bv-cubic",
            Mode::MinAcc => "min-acc",
        }
    }

    /// Twist fields the mode consumes.
    fn jet_fields(self) -> &'static [&'static str] {
        match self {
            Mode::Geodesic | Mode::Iv1 | Mode::MinAcc => &[],
            Mode::Iv2 => &["v0"],
            Mode::Iv3 => &["v0", "vdot0"],
            Mode::Iv4 => &["v0", "vdot0", "vddot0"],
            Mode::BvCubic => &["v0", "vt"],
        }
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Mode::ALL.iter().map(|m| m.name()).collect();
                format!("unknown mode '{s}' (expected one of {})", names.join(", "))
            })
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }
}

/// Validation failure naming the offending field.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
#[error("{field}: {message}")]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl ConfigError {
    pub fn new(field: &str, message: impl Into<String>) -> Self {
        Self {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

/// Flat key/value settings, as read from a JSON file or collected from flags.
#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub mode: Option<String>,
    pub xt: Option<[f64; 6]>,
    pub terminal_rotation: Option<[f64; 9]>,
    pub terminal_translation: Option<[f64; 3]>,
    pub initial_rotation: Option<[f64; 9]>,
    pub initial_translation: Option<[f64; 3]>,
    pub v0: Option<[f64; 6]>,
    pub vdot0: Option<[f64; 6]>,
    pub vddot0: Option<[f64; 6]>,
    pub vdddot0: Option<[f64; 6]>,
    pub vt: Option<[f64; 6]>,
    pub duration: Option<f64>,
    pub samples: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
}

impl RawConfig {
    pub fn from_json_str(text: &str) -> std::result::Result<Self, ConfigError> {
        serde_json::from_str(text).map_err(|e| ConfigError::new("config", e.to_string()))
    }

    pub fn from_file(path: &Path) -> std::result::Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::new("config", format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    /// Values present in `self` take precedence over `base`.
    pub fn override_onto(self, base: RawConfig) -> RawConfig {
        RawConfig {
            mode: self.mode.or(base.mode),
            xt: self.xt.or(base.xt),
            terminal_rotation: self.terminal_rotation.or(base.terminal_rotation),
            terminal_translation: self.terminal_translation.or(base.terminal_translation),
            initial_rotation: self.initial_rotation.or(base.initial_rotation),
            initial_translation: self.initial_translation.or(base.initial_translation),
            v0: self.v0.or(base.v0),
            vdot0: self.vdot0.or(base.vdot0),
            vddot0: self.vddot0.or(base.vddot0),
            vdddot0: self.vdddot0.or(base.vdddot0),
            vt: self.vt.or(base.vt),
            duration: self.duration.or(base.duration),
            samples: self.samples.or(base.samples),
            out: self.out.or(base.out),
            format: self.format.or(base.format),
            alpha: self.alpha.or(base.alpha),
            beta: self.beta.or(base.beta),
        }
    }

    fn screw(&self, field: &str) -> Option<[f64; 6]> {
        match field {
            "v0" => self.v0,
            "vdot0" => self.vdot0,
            "vddot0" => self.vddot0,
            "vdddot0" => self.vdddot0,
            "vt" => self.vt,
            _ => None,
        }
    }
}

/// Parses `a,b,c,...` into exactly `N` numbers.
pub fn parse_tuple<const N: usize>(field: &str, text: &str) -> std::result::Result<[f64; N], ConfigError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(ConfigError::new(
            field,
            format!("expected {N} comma-separated numbers, got {}", parts.len()),
        ));
    }
    let mut out = [0.0; N];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|_| ConfigError::new(field, format!("'{p}' is not a number")))?;
    }
    Ok(out)
}

/// Validated interpolation request.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub duration: f64,
    pub samples: usize,
    pub x_terminal: Option<ScrewVector>,
    pub terminal_pose: Option<Pose>,
    pub initial_pose: Pose,
    pub v0: Option<ScrewVector>,
    pub vdot0: Option<ScrewVector>,
    pub vddot0: Option<ScrewVector>,
    pub vdddot0: Option<ScrewVector>,
    pub vt: Option<ScrewVector>,
    pub weights: MetricWeights,
    pub out: PathBuf,
    pub format: Format,
    /// Supplied fields the selected mode does not use.
    pub ignored: Vec<&'static str>,
}

fn finite_screw(field: &str, v: Option<[f64; 6]>) -> std::result::Result<Option<ScrewVector>, ConfigError> {
    match v {
        Some(a) if a.iter().any(|x| !x.is_finite()) => {
            Err(ConfigError::new(field, "components must be finite"))
        }
        other => Ok(other.map(ScrewVector::from_array)),
    }
}

fn pose_from(
    rotation_field: &str,
    rotation: Option<[f64; 9]>,
    translation_field: &str,
    translation: Option<[f64; 3]>,
) -> std::result::Result<Option<Pose>, ConfigError> {
    if rotation.is_none() && translation.is_none() {
        return Ok(None);
    }
    let r = match rotation {
        Some(values) => Rotation::from_row_slice(&values)
            .map_err(|e| ConfigError::new(rotation_field, e.to_string()))?,
        None => Rotation::identity(),
    };
    let p = translation.unwrap_or([0.0; 3]);
    if p.iter().any(|x| !x.is_finite()) {
        return Err(ConfigError::new(translation_field, "components must be finite"));
    }
    Ok(Some(Pose::new(r, Vector3::from(p))))
}

impl TryFrom<RawConfig> for RunConfig {
    type Error = ConfigError;

    fn try_from(raw: RawConfig) -> std::result::Result<Self, ConfigError> {
        let mode: Mode = raw
            .mode
            .as_deref()
            .ok_or_else(|| ConfigError::new("mode", "required"))?
            .parse()
            .map_err(|e: String| ConfigError::new("mode", e))?;
        let duration = raw
            .duration
            .ok_or_else(|| ConfigError::new("duration", "required"))?;
        if !(duration.is_finite() && duration > 0.0) {
            return Err(ConfigError::new("duration", format!("must be positive, got {duration}")));
        }
        let samples = raw
            .samples
            .ok_or_else(|| ConfigError::new("samples", "required"))?;
        if samples < 2 {
            return Err(ConfigError::new("samples", format!("must be at least 2, got {samples}")));
        }
        let out = raw.out.clone().ok_or_else(|| ConfigError::new("out", "required"))?;
        let format = match raw.format.as_deref() {
            Some(f) => f.parse().map_err(|e: String| ConfigError::new("format", e))?,
            None => Format::default(),
        };
        let weights = MetricWeights::new(raw.alpha.unwrap_or(1.0), raw.beta.unwrap_or(1.0))
            .map_err(|e| ConfigError::new("alpha/beta", e.to_string()))?;

        let x_terminal = finite_screw("xt", raw.xt)?;
        let terminal_pose = pose_from(
            "terminal_rotation",
            raw.terminal_rotation,
            "terminal_translation",
            raw.terminal_translation,
        )?;
        if x_terminal.is_none() && terminal_pose.is_none() {
            return Err(ConfigError::new(
                "xt",
                "required (or give terminal_rotation/terminal_translation)",
            ));
        }
        let initial_pose = pose_from(
            "initial_rotation",
            raw.initial_rotation,
            "initial_translation",
            raw.initial_translation,
        )?
        .unwrap_or_default();

        let needed = mode.jet_fields();
        for field in needed {
            if raw.screw(field).is_none() {
                return Err(ConfigError::new(field, format!("required in {mode} mode")));
            }
        }
        let ignored = ["v0", "vdot0", "vddot0", "vdddot0", "vt"]
            .into_iter()
            .filter(|f| raw.screw(f).is_some() && !needed.contains(f))
            .collect();

        Ok(RunConfig {
            mode,
            duration,
            samples,
            x_terminal,
            terminal_pose,
            initial_pose,
            v0: finite_screw("v0", raw.v0)?,
            vdot0: finite_screw("vdot0", raw.vdot0)?,
            vddot0: finite_screw("vddot0", raw.vddot0)?,
            vdddot0: finite_screw("vdddot0", raw.vdddot0)?,
            vt: finite_screw("vt", raw.vt)?,
            weights,
            out,
            format,
            ignored,
        })
    }
}

impl RunConfig {
    /// Terminal screw, from `xt` or the terminal pose.
    pub fn terminal_screw(&self) -> Result<ScrewVector> {
        resolve_terminal_screw(
            self.x_terminal.as_ref(),
            self.terminal_pose.as_ref(),
            &self.initial_pose,
        )
    }

    pub fn build_curve(&self) -> Result<InterpolationCurve> {
        let xt = self.terminal_screw()?;
        let (t, c0) = (self.duration, &self.initial_pose);
        let take = |v: &Option<ScrewVector>| v.unwrap_or_else(ScrewVector::zero);
        match self.mode {
            Mode::Geodesic => geodesic(&xt, t, c0),
            Mode::MinAcc => min_acceleration(&xt, t, c0),
            Mode::BvCubic => bv_tip_cubic(&BoundaryData::new(xt, take(&self.v0), take(&self.vt))?, t, c0),
            Mode::Iv1 => iv_tip(1, &xt, t, &TwistJet::empty(), c0),
            Mode::Iv2 => iv_tip(2, &xt, t, &TwistJet::new(vec![take(&self.v0)]), c0),
            Mode::Iv3 => iv_tip(3, &xt, t, &TwistJet::new(vec![take(&self.v0), take(&self.vdot0)]), c0),
            Mode::Iv4 => iv_tip(
                4,
                &xt,
                t,
                &TwistJet::new(vec![take(&self.v0), take(&self.vdot0), take(&self.vddot0)]),
                c0,
            ),
        }
    }
}
