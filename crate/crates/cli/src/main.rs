use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand as ClapSubcommand};
use ggv::{ModelConfig, ModelKind};
use ggv_cli::{
    run, CliCommand, CliError, Subcommand, DEFAULT_DEPTH, DEFAULT_MAPS, DEFAULT_N_MAX,
    DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TOLERANCE,
};

/// Evaluate and verify generalized gyrovector spaces.
#[derive(Debug, Parser)]
#[command(name = "ggv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Model kind: normed, einstein, mobius or pathological.
    #[arg(long)]
    model: Option<ModelKind>,
    /// Dimension (ignored by the one-dimensional pathological model).
    #[arg(long)]
    dim: Option<usize>,
    /// Ball radius for the einstein and mobius models.
    #[arg(long)]
    s: Option<f64>,
    /// JSON model configuration, e.g. {"kind": "mobius", "dim": 3, "s": 2}.
    /// Explicit --model/--dim/--s flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct MapArgs {
    /// Number of primitives in each random map.
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    /// Follow the map by the Möbius-to-Einstein bridge (mobius models only).
    #[arg(long)]
    bridge: bool,
}

#[derive(Debug, ClapSubcommand)]
enum Command {
    /// Evaluate a prefix expression, e.g. "oplus 0.1,0.2 0.3,0".
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        expr: String,
    },
    /// Run the gyrogroup, GGV, order, gyrometric and model-specific suites.
    VerifyAxioms {
        #[command(flatten)]
        common: Common,
    },
    /// Midpoint preservation, decomposition and defect for a family of random maps.
    VerifyMazurUlam {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        map: MapArgs,
        /// Number of maps; map i uses seed + i and depth 1 + i mod depth.
        #[arg(long, default_value_t = DEFAULT_MAPS)]
        maps: usize,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u32,
    },
    /// Defect iteration for one random map.
    Defect {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u32,
    },
    /// Translation/automorphism decomposition of one random map.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        map: MapArgs,
    },
}

fn model_config(common: &Common) -> Result<ModelConfig, CliError> {
    let mut cfg = match &common.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))?
        }
        None => ModelConfig::default_for(common.model.unwrap_or(ModelKind::Normed)),
    };
    if let Some(kind) = common.model {
        cfg.kind = kind;
    }
    if let Some(dim) = common.dim {
        cfg.dim = dim;
    }
    if let Some(s) = common.s {
        cfg.s = s;
    }
    Ok(cfg)
}

fn into_command(cli: Cli) -> Result<CliCommand, CliError> {
    let (sub, common) = match cli.command {
        Command::Eval { common, expr } => (Subcommand::Eval { expr }, common),
        Command::VerifyAxioms { common } => (Subcommand::VerifyAxioms, common),
        Command::VerifyMazurUlam {
            common,
            map,
            maps,
            n_max,
        } => (
            Subcommand::VerifyMazurUlam {
                maps,
                depth: map.depth,
                n_max,
                bridge: map.bridge,
            },
            common,
        ),
        Command::Defect { common, map, n_max } => (
            Subcommand::Defect {
                depth: map.depth,
                n_max,
                bridge: map.bridge,
            },
            common,
        ),
        Command::Decompose { common, map } => (
            Subcommand::Decompose {
                depth: map.depth,
                bridge: map.bridge,
            },
            common,
        ),
    };
    Ok(CliCommand {
        subcommand: sub,
        model: model_config(&common)?,
        seed: common.seed,
        samples: common.samples,
        tolerance: common.tolerance,
        output: common.output,
    })
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    let cmd = into_command(cli)?;
    let outcome = run(&cmd)?;
    match &cmd.output {
        Some(path) => fs::write(path, &outcome.output)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{}", outcome.output),
    }
    if !outcome.pass {
        eprintln!("ggv: verification failed");
    }
    Ok(outcome.exit_code())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let code = match execute(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("ggv: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
