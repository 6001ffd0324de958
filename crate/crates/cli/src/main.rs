//! Command-line driver: seeded workloads, engine runs with metrics, hard
//! instance generation, recourse oracles and instance verification.
//!
//! Exit code 0 on success; failures print a single `error: ...` line on
//! stderr and exit nonzero. `SHIFTCOLOR_OUT_DIR` supplies a default output
//! directory for relative `--out` paths.

use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use shiftcolor::adversary::{
    gen_layered_instance, gen_separation_instance, layered_metadata, separation_metadata,
};
use shiftcolor::harness::{
    emit_metrics, gen_workload, read_workload, run_workload, write_workload, MetricsFormat,
    WorkloadModel, WorkloadSpec,
};
use shiftcolor::oracle::{min_recourse, min_shift_recourse, OracleBudget, OracleResult};
use shiftcolor::{read_instance, write_instance, Engine, EngineConfig};

#[derive(Parser)]
#[command(name = "shiftcolor", version, about = "Dynamic edge recoloring workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    LargePalette,
    #[value(name = "delta-minus-2")]
    DeltaMinus2,
    NoHandler,
    AdaptiveNoHandler,
    AdaptiveLargePalette,
    #[value(name = "adaptive-delta-minus-2")]
    AdaptiveDeltaMinus2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    RandomCap,
    Forest,
    LowerBoundReplay,
    SeparationReplay,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct WorkloadArgs {
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    /// Maximum-degree bound.
    #[arg(long)]
    delta: usize,
    /// Extra colors beyond delta.
    #[arg(long, default_value_t = 0)]
    c: usize,
    /// Operation count (ignored by replay models).
    #[arg(long, default_value_t = 0)]
    ops: usize,
    #[arg(long, value_enum, default_value_t = ModelArg::RandomCap)]
    model: ModelArg,
    /// Fraction of deletions in dynamic models.
    #[arg(long, default_value_t = 0.25)]
    delete_ratio: f64,
    /// Arboricity parameter for lower-bound replay.
    #[arg(long)]
    alpha: Option<usize>,
    /// Reserved matchings for separation replay.
    #[arg(long)]
    q: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl WorkloadArgs {
    fn spec(&self) -> Result<WorkloadSpec> {
        let model = match self.model {
            ModelArg::RandomCap => WorkloadModel::RandomCap {
                delete_ratio: self.delete_ratio,
            },
            ModelArg::Forest => WorkloadModel::Forest {
                delete_ratio: self.delete_ratio,
            },
            ModelArg::LowerBoundReplay => WorkloadModel::LowerBoundReplay {
                extra: self.c,
                alpha: self.alpha.ok_or_else(|| anyhow!("--alpha required"))?,
            },
            ModelArg::SeparationReplay => WorkloadModel::SeparationReplay {
                extra: self.c,
                q: self.q.ok_or_else(|| anyhow!("--q required"))?,
            },
        };
        Ok(WorkloadSpec {
            n: self.n,
            delta: self.delta,
            ops: self.ops,
            model,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a workload and replay it through an engine, emitting metrics.
    Run {
        #[command(flatten)]
        workload: WorkloadArgs,
        #[arg(long, value_enum, default_value_t = EngineArg::NoHandler)]
        engine: EngineArg,
        /// Leaf multiplicity: `auto` or an integer (large-palette engines).
        #[arg(long, default_value = "auto")]
        b: String,
        /// Arboricity promise for the no-handler guarantee.
        #[arg(long)]
        epsilon: Option<f64>,
        /// Re-verify the coloring every this many ops (0 = never).
        #[arg(long, default_value_t = 1000)]
        verify_every: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Replay a saved workload file instead of generating one.
        #[arg(long)]
        workload_file: Option<PathBuf>,
    },
    /// Generate a workload file.
    GenWorkload {
        #[command(flatten)]
        workload: WorkloadArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a hard instance in the line-based instance format.
    GenInstance {
        #[command(subcommand)]
        which: InstanceCommand,
    },
    /// Exact recourse oracles over an instance file.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Verify an instance file: propriety, index consistency, degree caps.
    Verify {
        #[arg(long)]
        instance: PathBuf,
        /// How many uncolored edges are acceptable.
        #[arg(long, default_value_t = 1)]
        allow_uncolored: usize,
    },
}

#[derive(Subcommand)]
enum InstanceCommand {
    /// Layered lower-bound instance: recourse floor of L/3.
    LowerBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        c: usize,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reserved-matching separation instance.
    Separation {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        c: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Minimum recourse over all proper completions.
    Min {
        #[arg(long)]
        instance: PathBuf,
        /// Search horizon on the recourse.
        #[arg(long, default_value_t = 12)]
        budget: usize,
        #[arg(long, default_value_t = 5_000_000)]
        max_states: usize,
        #[arg(long, default_value_t = 600)]
        timeout_secs: u64,
    },
    /// Minimum recourse over single-chain shift completions.
    MinShift {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, default_value_t = 64)]
        budget: usize,
        #[arg(long, default_value_t = 5_000_000)]
        max_states: usize,
        #[arg(long, default_value_t = 600)]
        timeout_secs: u64,
    },
}

fn resolve_out(path: Option<PathBuf>) -> Option<PathBuf> {
    let path = path?;
    if path.is_relative() {
        if let Ok(dir) = std::env::var("SHIFTCOLOR_OUT_DIR") {
            return Some(Path::new(&dir).join(path));
        }
    }
    Some(path)
}

fn write_output(out: Option<PathBuf>, content: &str) -> Result<()> {
    match resolve_out(out) {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)
                        .with_context(|| format!("creating {}", parent.display()))?;
                }
            }
            std::fs::write(&path, content)
                .with_context(|| format!("writing {}", path.display()))?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn build_engine(
    which: EngineArg,
    delta: usize,
    c: usize,
    b: &str,
    alpha: Option<usize>,
    epsilon: Option<f64>,
) -> Result<Engine> {
    let b_choice = match b {
        "auto" => None,
        other => Some(
            other
                .parse::<usize>()
                .with_context(|| format!("--b must be `auto` or an integer, got `{other}`"))?,
        ),
    };
    let mut cfg = match which {
        EngineArg::LargePalette | EngineArg::AdaptiveLargePalette => {
            EngineConfig::large_palette(delta, c, b_choice)
        }
        EngineArg::DeltaMinus2 | EngineArg::AdaptiveDeltaMinus2 => {
            let cfg = EngineConfig::delta_minus_2(delta);
            if c != 0 && c != cfg.extra {
                bail!("delta-minus-2 engine fixes c = delta - 2 = {}", cfg.extra);
            }
            cfg
        }
        EngineArg::NoHandler | EngineArg::AdaptiveNoHandler => EngineConfig::no_handler(delta, c),
    };
    cfg.alpha = alpha;
    cfg.epsilon = epsilon;
    let cfg = match which {
        EngineArg::AdaptiveLargePalette
        | EngineArg::AdaptiveDeltaMinus2
        | EngineArg::AdaptiveNoHandler => EngineConfig::adaptive(cfg),
        _ => cfg,
    };
    Ok(Engine::new(cfg)?)
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            workload,
            engine,
            b,
            epsilon,
            verify_every,
            format,
            out,
            workload_file,
        } => {
            let eng = build_engine(
                engine,
                workload.delta,
                effective_c(&workload, engine),
                &b,
                workload.alpha,
                epsilon,
            )?;
            let ops = match &workload_file {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    read_workload(&text)?
                }
                None => gen_workload(&workload.spec()?, workload.seed)?,
            };
            let metrics = run_workload(&eng, workload.n, &ops, verify_every)?;
            let rendered = emit_metrics(
                &metrics,
                match format {
                    FormatArg::Csv => MetricsFormat::Csv,
                    FormatArg::Json => MetricsFormat::Json,
                },
            );
            write_output(out, &rendered)?;
        }
        Command::GenWorkload { workload, out } => {
            let ops = gen_workload(&workload.spec()?, workload.seed)?;
            write_output(out, &write_workload(&ops))?;
        }
        Command::GenInstance { which } => match which {
            InstanceCommand::LowerBound {
                n,
                delta,
                c,
                alpha,
                out,
            } => {
                let inst = gen_layered_instance(n, delta, c, alpha)?;
                let text = write_instance(&inst.graph, &layered_metadata(&inst));
                write_output(out, &text)?;
            }
            InstanceCommand::Separation {
                n,
                delta,
                c,
                q,
                out,
            } => {
                let inst = gen_separation_instance(n, delta, c, q)?;
                let text = write_instance(&inst.graph, &separation_metadata(&inst));
                write_output(out, &text)?;
            }
        },
        Command::Oracle { which } => {
            let (path, budget, is_shift) = match which {
                OracleCommand::Min {
                    instance,
                    budget,
                    max_states,
                    timeout_secs,
                } => (
                    instance,
                    OracleBudget {
                        max_recourse: budget,
                        max_states,
                        timeout: Duration::from_secs(timeout_secs),
                    },
                    false,
                ),
                OracleCommand::MinShift {
                    instance,
                    budget,
                    max_states,
                    timeout_secs,
                } => (
                    instance,
                    OracleBudget {
                        max_recourse: budget,
                        max_states,
                        timeout: Duration::from_secs(timeout_secs),
                    },
                    true,
                ),
            };
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            let (graph, _) = read_instance(&text)?;
            let result = if is_shift {
                min_shift_recourse(&graph, &budget)
            } else {
                min_recourse(&graph, &budget)
            };
            match result {
                OracleResult::Exact(k) => println!("exact {k}"),
                OracleResult::AtLeast(k) => println!("atleast {k}"),
            }
        }
        Command::Verify {
            instance,
            allow_uncolored,
        } => {
            let text = std::fs::read_to_string(&instance)
                .with_context(|| format!("reading {}", instance.display()))?;
            let (graph, _) = read_instance(&text)?;
            let violations = graph.verify_proper(allow_uncolored);
            if violations.is_empty() {
                println!("ok");
            } else {
                for v in &violations {
                    println!("violation {v}");
                }
                bail!("{} violations", violations.len());
            }
        }
    }
    Ok(())
}

/// The delta-minus-2 engine fixes its extra-color count.
fn effective_c(workload: &WorkloadArgs, engine: EngineArg) -> usize {
    match engine {
        EngineArg::DeltaMinus2 | EngineArg::AdaptiveDeltaMinus2 => {
            workload.delta.saturating_sub(2)
        }
        _ => workload.c,
    }
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
