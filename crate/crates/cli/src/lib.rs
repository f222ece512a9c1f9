//! Library side of the `ggv` command: a validated [`CliCommand`] and [`run`],
//! which produces deterministic output and an overall pass flag.

pub mod expr;

use std::path::PathBuf;

use ggv::isometry::{
    decompose_mazur_ulam, defect_experiment, random_cross_isometry, random_isometry,
    verify_midpoint_preservation, DefectTrace, LAB_SPREAD,
};
use ggv::verify::{full_suite, SuiteConfig};
use ggv::{make_model, GgvError, Map, Model, ModelConfig, ModelKind, VerificationReport};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_TOLERANCE: f64 = ggv::DEFAULT_TOLERANCE;
pub const DEFAULT_DEPTH: usize = 6;
pub const DEFAULT_MAPS: usize = 50;
pub const DEFAULT_N_MAX: u32 = 10;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed command, configuration or input; exit status 2.
    #[error("{0}")]
    Usage(String),
    /// The library could not complete the run; exit status 1.
    #[error(transparent)]
    Failed(GgvError),
}

impl From<GgvError> for CliError {
    fn from(e: GgvError) -> Self {
        match e {
            GgvError::Domain(_) | GgvError::Config(_) | GgvError::ModelMismatch { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Failed(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Subcommand {
    Eval {
        expr: String,
    },
    VerifyAxioms,
    VerifyMazurUlam {
        maps: usize,
        depth: usize,
        n_max: u32,
        bridge: bool,
    },
    Defect {
        depth: usize,
        n_max: u32,
        bridge: bool,
    },
    Decompose {
        depth: usize,
        bridge: bool,
    },
}

impl Subcommand {
    pub fn name(&self) -> &'static str {
        match self {
            Subcommand::Eval { .. } => "eval",
            Subcommand::VerifyAxioms => "verify-axioms",
            Subcommand::VerifyMazurUlam { .. } => "verify-mazur-ulam",
            Subcommand::Defect { .. } => "defect",
            Subcommand::Decompose { .. } => "decompose",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliCommand {
    pub subcommand: Subcommand,
    pub model: ModelConfig,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub output: Option<PathBuf>,
}

impl CliCommand {
    pub fn new(subcommand: Subcommand, model: ModelConfig) -> Self {
        Self {
            subcommand,
            model,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            tolerance: DEFAULT_TOLERANCE,
            output: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.samples == 0 {
            return Err(CliError::Usage("--samples must be at least 1".into()));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(CliError::Usage(format!(
                "--tolerance must be a positive real, got {}",
                self.tolerance
            )));
        }
        match &self.subcommand {
            Subcommand::VerifyMazurUlam { maps: 0, .. } => {
                return Err(CliError::Usage("--maps must be at least 1".into()))
            }
            Subcommand::VerifyMazurUlam { depth: 0, .. }
            | Subcommand::Defect { depth: 0, .. }
            | Subcommand::Decompose { depth: 0, .. } => {
                return Err(CliError::Usage("--depth must be at least 1".into()))
            }
            Subcommand::VerifyMazurUlam { bridge: true, .. }
            | Subcommand::Defect { bridge: true, .. }
            | Subcommand::Decompose { bridge: true, .. }
                if self.model.kind != ModelKind::Mobius =>
            {
                return Err(CliError::Usage(
                    "--bridge maps the Möbius ball onto an Einstein ball; use --model mobius"
                        .into(),
                ))
            }
            _ => {}
        }
        self.model.validated()?;
        Ok(())
    }
}

/// What a run produced: the text to emit and whether every check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub pass: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

#[derive(Serialize)]
struct Header<'a> {
    command: &'a str,
    model: ModelConfig,
    seed: u64,
    samples: usize,
    tolerance: f64,
    pass: bool,
}

#[derive(Serialize)]
struct SuiteOutput<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    failing: Vec<&'a str>,
    reports: &'a [VerificationReport],
}

#[derive(Serialize)]
struct MapOutput {
    seed: u64,
    depth: usize,
    domain: ModelConfig,
    codomain: ModelConfig,
    recipe: Vec<String>,
    reports: Vec<VerificationReport>,
}

#[derive(Serialize)]
struct MazurUlamOutput<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    maps: Vec<MapOutput>,
}

#[derive(Serialize)]
struct DetailOutput<'a, T: Serialize> {
    #[serde(flatten)]
    header: Header<'a>,
    depth: usize,
    domain: ModelConfig,
    codomain: ModelConfig,
    recipe: Vec<String>,
    result: T,
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Failed(GgvError::Internal(e.to_string())))
}

fn build_map(m: &Model, seed: u64, depth: usize, bridge: bool) -> Result<Map, CliError> {
    let map = if bridge {
        random_cross_isometry(m, seed, depth)?
    } else {
        random_isometry(m, seed, depth)?
    };
    Ok(map)
}

fn defect_report(tr: &DefectTrace, model: &str, seed: u64) -> VerificationReport {
    let worst = [tr.defect, tr.fixed_point_residual, tr.bound_excess]
        .into_iter()
        .fold(
            0.0,
            |acc: f64, r| if r.is_nan() { f64::NAN } else { acc.max(r) },
        );
    VerificationReport::new(
        "defect",
        model,
        seed,
        tr.iterates.len(),
        worst,
        tr.tolerance,
    )
}

fn run_defect(
    m: &Model,
    t: &Map,
    seed: u64,
    n_max: u32,
    tol: f64,
) -> Result<DefectTrace, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x1 = m.sample_point(&mut rng, LAB_SPREAD);
    let x2 = m.sample_point(&mut rng, LAB_SPREAD);
    Ok(defect_experiment(t, &x1, &x2, n_max, tol)?)
}

/// Executes `cmd`. Output is a deterministic function of the command.
pub fn run(cmd: &CliCommand) -> Result<Outcome, CliError> {
    cmd.validate()?;
    let model: Model = make_model(cmd.model)?;
    let label = model.to_string();
    let header = |pass| Header {
        command: cmd.subcommand.name(),
        model: model.config(),
        seed: cmd.seed,
        samples: cmd.samples,
        tolerance: cmd.tolerance,
        pass,
    };

    match &cmd.subcommand {
        Subcommand::Eval { expr } => {
            let value = expr::evaluate(&model, expr)?;
            Ok(Outcome {
                output: format!("{value}\n"),
                pass: true,
            })
        }
        Subcommand::VerifyAxioms => {
            let cfg = SuiteConfig::new(cmd.samples, cmd.seed, cmd.tolerance);
            let reports = full_suite(&model, cfg);
            let failing: Vec<&str> = reports
                .iter()
                .filter(|r| !r.pass)
                .map(|r| r.property.as_str())
                .collect();
            let pass = failing.is_empty();
            let output = to_json(&SuiteOutput {
                header: header(pass),
                failing,
                reports: &reports,
            })?;
            Ok(Outcome { output, pass })
        }
        Subcommand::VerifyMazurUlam {
            maps,
            depth,
            n_max,
            bridge,
        } => {
            let mut out = Vec::with_capacity(*maps);
            for i in 0..*maps {
                let seed = cmd.seed.wrapping_add(i as u64);
                let d = 1 + i % depth;
                let t = build_map(&model, seed, d, *bridge)?;
                let mid = verify_midpoint_preservation(&t, cmd.samples, seed, cmd.tolerance)?;
                let dec = decompose_mazur_ulam(&t, cmd.samples, seed, cmd.tolerance)?;
                let tr = run_defect(&model, &t, seed, *n_max, cmd.tolerance)?;
                out.push(MapOutput {
                    seed,
                    depth: d,
                    domain: t.domain().config(),
                    codomain: t.codomain().config(),
                    recipe: t.recipe(),
                    reports: vec![
                        mid.to_verification(&label),
                        dec.to_verification(&label),
                        defect_report(&tr, &label, seed),
                    ],
                });
            }
            let pass = out.iter().all(|m| m.reports.iter().all(|r| r.pass));
            let output = to_json(&MazurUlamOutput {
                header: header(pass),
                maps: out,
            })?;
            Ok(Outcome { output, pass })
        }
        Subcommand::Defect {
            depth,
            n_max,
            bridge,
        } => {
            let t = build_map(&model, cmd.seed, *depth, *bridge)?;
            let tr = run_defect(&model, &t, cmd.seed, *n_max, cmd.tolerance)?;
            let pass = tr.pass;
            let output = to_json(&DetailOutput {
                header: header(pass),
                depth: *depth,
                domain: t.domain().config(),
                codomain: t.codomain().config(),
                recipe: t.recipe(),
                result: tr,
            })?;
            Ok(Outcome { output, pass })
        }
        Subcommand::Decompose { depth, bridge } => {
            let t = build_map(&model, cmd.seed, *depth, *bridge)?;
            let dec = decompose_mazur_ulam(&t, cmd.samples, cmd.seed, cmd.tolerance)?;
            let pass = dec.pass;
            let output = to_json(&DetailOutput {
                header: header(pass),
                depth: *depth,
                domain: t.domain().config(),
                codomain: t.codomain().config(),
                recipe: t.recipe(),
                result: dec,
            })?;
            Ok(Outcome { output, pass })
        }
    }
}
