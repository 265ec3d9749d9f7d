use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cli::commands::{cmd_cohomology, cmd_monopole, cmd_pell, cmd_stabilizer, cmd_torus_check, cmd_verify_heisenberg};
use cli::config::{DEFAULT_GRADES, DEFAULT_SEED, DEFAULT_SWEEP};
use cli::{CliError, Format, Report, RunConfig, Settings};

/// Desk-scale checks for gauge theory on real-multiplication noncommutative tori and on
/// crossed products by finite Hopf algebras.
#[derive(Parser)]
#[command(name = "nclab", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// golden, sqrt2, 1+sqrt3, or "p,q,d" for θ = (p + q√d)/... as accepted by the classifier
    #[arg(long, global = true)]
    theta: Option<String>,
    /// Heisenberg grid as "L,N,J"
    #[arg(long, global = true)]
    grid: Option<String>,
    /// Tolerance override; each command has its own default
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, help = format!("Comma-separated q values [default: {DEFAULT_SWEEP}]"))]
    q_sweep: Option<String>,
    #[arg(long, global = true, help = format!("Grade range M [default: {DEFAULT_GRADES}]"))]
    grades: Option<i64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, help = format!("RNG seed [default: {DEFAULT_SEED:#x}]"))]
    seed: Option<u64>,
    /// JSON settings file; flags override it
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Fundamental and Pell units, Φ and its power table
    Pell {
        #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
        delta: i64,
    },
    /// Exact checks on the stabilizer representation
    Stabilizer,
    /// Random-sample checks of the torus calculus
    TorusCheck {
        #[arg(long, default_value_t = 200)]
        pairs: usize,
    },
    /// Twisted Leibniz, twisted star, module laws and [∂₁,∂₂] on Heisenberg modules
    HeisenbergVerify,
    /// q-sweep of monopole adaptedness
    Monopole,
    /// Lazy cohomology and crossed-product gauge identities of an instance
    Cohomology {
        /// Instance file or builtin name (shift-N, shift-trivial-N, cayley-N, dual-numbers)
        instance: String,
    },
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let g = cli.global;
    let base = match &g.config {
        Some(p) => Settings::load(p)?,
        None => Settings::default(),
    };
    let flags = Settings {
        theta: g.theta,
        grid: g.grid,
        tol: g.tol,
        q_sweep: g.q_sweep,
        grades: g.grades,
        format: g.format,
        out: g.out,
        seed: g.seed,
    };
    let cfg = RunConfig::resolve(base.overlay(flags))?;
    let report = match cli.command {
        Command::Pell { delta } => cmd_pell(delta, &cfg)?,
        Command::Stabilizer => cmd_stabilizer(&cfg)?,
        Command::TorusCheck { pairs } => cmd_torus_check(pairs, &cfg)?,
        Command::HeisenbergVerify => cmd_verify_heisenberg(&cfg)?,
        Command::Monopole => cmd_monopole(&cfg)?,
        Command::Cohomology { instance } => cmd_cohomology(&instance, &cfg)?,
    };
    let text = report.render(cfg.format);
    match &cfg.out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(report)
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => match run(cli) {
            Ok(r) => ExitCode::from(r.exit_code() as u8),
            Err(e) => {
                eprintln!("nclab: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        },
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            ExitCode::from(code)
        }
    }
}
