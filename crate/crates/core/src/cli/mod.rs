//! Command-line front end.
//!
//! Exit codes: 0 success, 1 internal failure (including failed verdicts),
//! 2 configuration error, 3 domain error (log/dexp singularity).

pub mod config;
pub mod output;
pub mod reproduce;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::lie::distance;
use crate::validate::{self, Schemes, Suite};

pub use config::{ConfigError, Format, Mode, RawConfig, RunConfig};
pub use output::TrajectorySample;
pub use reproduce::{reproduce, Example, Reproduction, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "screwmotion", version, about = "Rigid body motion interpolation on SE(3)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample an interpolating motion and write it as CSV or JSON.
    Interpolate(InterpolateArgs),
    /// Rerun a built-in reference experiment and write error curves.
    Reproduce {
        example: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the randomized invariant suites.
    Validate {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// Six-tuples are comma separated, angular part first.
#[derive(Debug, Default, Args)]
pub struct InterpolateArgs {
    /// Flat JSON document with the same keys; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub mode: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub xt: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub v0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub vdot0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub vddot0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub vdddot0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub vt: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub duration: Option<f64>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error in {0}")]
    Config(#[from] ConfigError),
    #[error("domain error: {0}")]
    Domain(Error),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_domain_error() {
            return CliError::Domain(e);
        }
        match e {
            Error::ConflictingGoal { .. } => CliError::Config(ConfigError::new("xt", e.to_string())),
            Error::InvalidRotation { .. } => {
                CliError::Config(ConfigError::new("terminal_rotation", e.to_string()))
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl InterpolateArgs {
    fn to_raw(&self) -> Result<RawConfig, ConfigError> {
        let six = |field: &str, v: &Option<String>| {
            v.as_deref().map(|s| config::parse_tuple::<6>(field, s)).transpose()
        };
        Ok(RawConfig {
            mode: self.mode.clone(),
            xt: six("xt", &self.xt)?,
            v0: six("v0", &self.v0)?,
            vdot0: six("vdot0", &self.vdot0)?,
            vddot0: six("vddot0", &self.vddot0)?,
            vdddot0: six("vdddot0", &self.vdddot0)?,
            vt: six("vt", &self.vt)?,
            duration: self.duration,
            samples: self.samples,
            out: self.out.clone(),
            format: self.format.clone(),
            alpha: self.alpha,
            beta: self.beta,
            ..Default::default()
        })
    }

    /// Merges the optional config file under the flags and validates the result.
    pub fn resolve(&self) -> Result<RunConfig, ConfigError> {
        let file = match &self.config {
            Some(path) => RawConfig::from_file(path)?,
            None => RawConfig::default(),
        };
        RunConfig::try_from(self.to_raw()?.override_onto(file))
    }
}

/// Samples the configured curve and writes the output file. Returns the row count.
pub fn cmd_interpolate(cfg: &RunConfig, log: &mut dyn Write) -> Result<usize, CliError> {
    for field in &cfg.ignored {
        writeln!(log, "warning: {field} is not used in {} mode and was ignored", cfg.mode)?;
    }
    let curve = cfg.build_curve()?;
    let rows = output::sample_curve(&curve, cfg.samples)?;
    let mut file = io::BufWriter::new(fs::File::create(&cfg.out)?);
    match cfg.format {
        Format::Csv => output::write_csv(&mut file, &rows)?,
        Format::Json => {
            let end = curve.pose_at_tau(1.0);
            let meta = output::JsonMeta {
                mode: cfg.mode.name(),
                duration: cfg.duration,
                alpha: cfg.weights.alpha(),
                beta: cfg.weights.beta(),
                displacement: distance(curve.base_pose(), &end, &cfg.weights).ok(),
            };
            output::write_json(&mut file, &meta, &rows)?
        }
    }
    file.flush()?;
    writeln!(log, "wrote {} rows to {}", rows.len(), cfg.out.display())?;
    Ok(rows.len())
}

pub fn cmd_reproduce(example: Example, dir: &std::path::Path, log: &mut dyn Write) -> Result<bool, CliError> {
    let run = reproduce(example, dir).map_err(|e| match e {
        reproduce::ReproduceError::Kinematics(k) => CliError::from(k),
        reproduce::ReproduceError::Io(io) => CliError::from(io),
    })?;
    for v in &run.verdicts {
        writeln!(log, "{} {}: {}", if v.passed { "PASS" } else { "FAIL" }, v.name, v.detail)?;
    }
    for f in &run.files {
        writeln!(log, "wrote {}", f.display())?;
    }
    Ok(run.passed())
}

pub fn cmd_validate(suite: Suite, seed: u64, log: &mut dyn Write) -> Result<bool, CliError> {
    writeln!(log, "seed {seed}")?;
    let report = validate::run(suite, seed, &Schemes::default());
    write!(log, "{report}")?;
    let failed = report.failures().count();
    writeln!(log, "{} checks, {failed} failed", report.checks.len())?;
    Ok(report.passed())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Interpolate(args) => {
            let cfg = args.resolve()?;
            cmd_interpolate(&cfg, out)?;
            Ok(EXIT_OK)
        }
        Command::Reproduce { example, out: dir } => {
            let example: Example = example
                .parse()
                .map_err(|e: String| ConfigError::new("example", e))?;
            Ok(if cmd_reproduce(example, &dir, out)? { EXIT_OK } else { EXIT_INTERNAL })
        }
        Command::Validate { suite } => {
            let suite: Suite = suite.parse().map_err(|e: String| ConfigError::new("suite", e))?;
            let seed = validate::seed_from_env();
            Ok(if cmd_validate(suite, seed, out)? { EXIT_OK } else { EXIT_INTERNAL })
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
