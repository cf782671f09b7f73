use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::interp::{curve_eval, curve_twist, InterpolationCurve};
use crate::lie::{DistanceComponents, Rotation, ScrewVector};

pub const CSV_CONVENTION: &str = "# screw vectors are angular-first: X0..X2 and V0..V2 are angular, \
X3..X5 and V3..V5 linear; V is the spatial twist; R is row-major";

pub const CSV_HEADER: &str = "tau,X0,X1,X2,X3,X4,X5,R00,R01,R02,R10,R11,R12,R20,R21,R22,p0,p1,p2,V0,V1,V2,V3,V4,V5";

const CSV_COLUMNS: usize = 25;

/// One row of an exported trajectory.
#[derive(Clone, Debug, PartialEq)]
pub struct TrajectorySample {
    pub tau: f64,
    pub x: ScrewVector,
    pub rotation: [f64; 9],
    pub translation: [f64; 3],
    pub twist: ScrewVector,
}

impl TrajectorySample {
    fn values(&self) -> impl Iterator<Item = f64> + '_ {
        std::iter::once(self.tau)
            .chain(self.x.to_array())
            .chain(self.rotation)
            .chain(self.translation)
            .chain(self.twist.to_array())
    }
}

/// `samples + 1` rows at uniform `τ`.
pub fn sample_curve(curve: &InterpolationCurve, samples: usize) -> Result<Vec<TrajectorySample>> {
    let duration = curve.duration();
    (0..=samples)
        .map(|i| {
            let tau = i as f64 / samples as f64;
            let t = if i == samples { duration } else { tau * duration };
            let (x, pose) = curve_eval(curve, t)?;
            Ok(TrajectorySample {
                tau,
                x,
                rotation: pose.rotation.to_row_array(),
                translation: pose.translation.into(),
                twist: curve_twist(curve, t)?,
            })
        })
        .collect()
}

/// 17 significant digits, always in exponent form.
pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv(mut w: impl Write, rows: &[TrajectorySample]) -> io::Result<()> {
    writeln!(w, "{CSV_CONVENTION}")?;
    writeln!(w, "{CSV_HEADER}")?;
    for row in rows {
        let line: Vec<String> = row.values().map(format_number).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    Ok(())
}

/// Parses a file written by [`write_csv`]; rejects rows whose rotation block
/// is not orthonormal.
pub fn read_csv(r: impl BufRead) -> std::result::Result<Vec<TrajectorySample>, String> {
    let mut rows = Vec::new();
    let mut header_seen = false;
    for (n, line) in r.lines().enumerate() {
        let line = line.map_err(|e| e.to_string())?;
        if line.starts_with('#') || line.is_empty() {
            continue;
        }
        if !header_seen {
            if line != CSV_HEADER {
                return Err(format!("line {}: unexpected header", n + 1));
            }
            header_seen = true;
            continue;
        }
        let v: Vec<f64> = line
            .split(',')
            .map(|s| s.parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| format!("line {}: {e}", n + 1))?;
        if v.len() != CSV_COLUMNS {
            return Err(format!("line {}: expected {CSV_COLUMNS} columns, got {}", n + 1, v.len()));
        }
        let rotation: [f64; 9] = v[7..16].try_into().unwrap();
        Rotation::from_row_slice(&rotation).map_err(|e| format!("line {}: {e}", n + 1))?;
        rows.push(TrajectorySample {
            tau: v[0],
            x: ScrewVector::from_array(v[1..7].try_into().unwrap()),
            rotation,
            translation: v[16..19].try_into().unwrap(),
            twist: ScrewVector::from_array(v[19..25].try_into().unwrap()),
        });
    }
    if !header_seen {
        return Err("missing header".into());
    }
    Ok(rows)
}

#[derive(Serialize, Deserialize)]
struct JsonSample {
    tau: f64,
    #[serde(rename = "X")]
    x: [f64; 6],
    #[serde(rename = "R")]
    rotation: [f64; 9],
    p: [f64; 3],
    #[serde(rename = "V")]
    twist: [f64; 6],
}

#[derive(Serialize, Deserialize)]
struct JsonDisplacement {
    rotational: f64,
    translational: f64,
    weighted: f64,
}

#[derive(Serialize, Deserialize)]
struct JsonDocument {
    convention: String,
    mode: String,
    duration: f64,
    alpha: f64,
    beta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    displacement: Option<JsonDisplacement>,
    samples: Vec<JsonSample>,
}

/// Header fields of a JSON export.
pub struct JsonMeta<'a> {
    pub mode: &'a str,
    pub duration: f64,
    pub alpha: f64,
    pub beta: f64,
    /// Distance between the initial and terminal pose, when defined.
    pub displacement: Option<(f64, DistanceComponents)>,
}

pub fn write_json(mut w: impl Write, meta: &JsonMeta<'_>, rows: &[TrajectorySample]) -> io::Result<()> {
    let doc = JsonDocument {
        convention: CSV_CONVENTION.trim_start_matches("# ").to_string(),
        mode: meta.mode.to_string(),
        duration: meta.duration,
        alpha: meta.alpha,
        beta: meta.beta,
        displacement: meta.displacement.as_ref().map(|(weighted, c)| JsonDisplacement {
            rotational: c.rotational,
            translational: c.translational,
            weighted: *weighted,
        }),
        samples: rows
            .iter()
            .map(|s| JsonSample {
                tau: s.tau,
                x: s.x.to_array(),
                rotation: s.rotation,
                p: s.translation,
                twist: s.twist.to_array(),
            })
            .collect(),
    };
    serde_json::to_writer_pretty(&mut w, &doc)?;
    writeln!(w)
}

/// Reads back the samples of a JSON export.
pub fn read_json(text: &str) -> std::result::Result<Vec<TrajectorySample>, String> {
    let doc: JsonDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
    Ok(doc
        .samples
        .into_iter()
        .map(|s| TrajectorySample {
            tau: s.tau,
            x: ScrewVector::from_array(s.x),
            rotation: s.rotation,
            translation: s.p,
            twist: ScrewVector::from_array(s.twist),
        })
        .collect())
}
