use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use spt_core::commands::{self, CutChoice, EntropyQuery, OutputFormat, Suite, SweepConfig};
use spt_core::entropy::{CutKind, CutLayout};
use spt_core::{Boundary, Error, Model, Sector, SolverOptions};

#[derive(Parser)]
#[command(name = "spt", version, about = "Entanglement and code properties of SPT qubit chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Topological entanglement entropy along a uniform field grid.
    Sweep(SweepArgs),
    /// Stabilizer count, logicals and classical distance at zero field.
    Distance(DistanceArgs),
    /// One-point topological entanglement entropy with its components.
    Entropy(EntropyArgs),
    /// Built-in self-checks; exits 1 if any fails.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ChainArgs {
    /// clu, syb or zxxz.
    #[arg(long)]
    model: Model,
    /// Number of qubits.
    #[arg(long)]
    n: usize,
    /// open or periodic.
    #[arg(long, default_value = "open")]
    boundary: Boundary,
}

#[derive(Args)]
struct SolverArgs {
    /// Seed of the Lanczos start vectors.
    #[arg(long, default_value_t = SolverOptions::default().seed)]
    seed: u64,
    /// Residual tolerance of the eigensolver.
    #[arg(long, default_value_t = SolverOptions::default().tol)]
    tol: f64,
    /// Largest Krylov basis kept between restarts.
    #[arg(long, default_value_t = SolverOptions::default().krylov_dim)]
    krylov_dim: usize,
    /// Symmetry sector: field (signs of the large-field state) or plus.
    #[arg(long, default_value = "field")]
    sector: Sector,
}

impl SolverArgs {
    fn options(&self) -> SolverOptions {
        SolverOptions {
            tol: self.tol,
            krylov_dim: self.krylov_dim,
            seed: self.seed,
            ..SolverOptions::default()
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    chain: ChainArgs,
    #[arg(long, default_value_t = 0.0)]
    b_min: f64,
    #[arg(long, default_value_t = 2.0)]
    b_max: f64,
    /// Grid points, endpoints included.
    #[arg(long, default_value_t = 41)]
    b_steps: usize,
    /// t, q or both; defaults to every cut the chain is long enough for.
    #[arg(long)]
    cut: Option<CutChoice>,
    /// Explicit 1-based block ends, e.g. 4,8 (t) or 3,6,9 (q); overrides --cut.
    #[arg(long)]
    cuts: Option<String>,
    #[command(flatten)]
    solver: SolverArgs,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json.
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    /// Concurrent grid points (0 = all cores).
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args)]
struct DistanceArgs {
    #[command(flatten)]
    chain: ChainArgs,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EntropyArgs {
    #[command(flatten)]
    chain: ChainArgs,
    /// Field strength.
    #[arg(long, default_value_t = 0.0)]
    b: f64,
    /// t, q or both.
    #[arg(long, default_value = "t")]
    cut: CutChoice,
    /// Explicit 1-based block ends; overrides --cut.
    #[arg(long)]
    cuts: Option<String>,
    #[command(flatten)]
    solver: SolverArgs,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// pauli, spectra, entropy, transforms or all.
    #[arg(long, default_value = "all")]
    suite: Suite,
    /// Also write the report as JSON to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

fn parse_ends(text: &Option<String>) -> spt_core::Result<Option<Vec<usize>>> {
    text.as_deref().map(CutLayout::parse_ends).transpose()
}

fn output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn sweep(args: SweepArgs) -> spt_core::Result<ExitCode> {
    let mut config = SweepConfig::new(args.chain.model, args.chain.n);
    config.boundary = args.chain.boundary;
    config.b_min = args.b_min;
    config.b_max = args.b_max;
    config.b_steps = args.b_steps;
    if let Some(cut) = args.cut {
        config.cuts = cut.kinds();
    }
    config.cut_ends = parse_ends(&args.cuts)?;
    config.sector = args.solver.sector;
    config.solver = args.solver.options();
    config.workers = args.workers;
    config.validate()?;
    let rows = commands::cmd_sweep(&config)?;
    let mut out = output(&args.out)?;
    commands::write_rows(&rows, args.format, &mut out)?;
    out.flush()?;
    if rows.iter().any(|r| !r.converged) {
        eprintln!("warning: some grid points did not converge (converged=false rows)");
    }
    Ok(ExitCode::SUCCESS)
}

fn distance(args: DistanceArgs) -> spt_core::Result<ExitCode> {
    let report = commands::cmd_distance(args.chain.model, args.chain.n, args.chain.boundary)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{report}");
    }
    Ok(if report.matches_expected() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn entropy(args: EntropyArgs) -> spt_core::Result<ExitCode> {
    let mut query = EntropyQuery::new(args.chain.model, args.chain.n, args.b, CutKind::Tripartite);
    query.boundary = args.chain.boundary;
    query.cuts = args.cut.kinds();
    query.cut_ends = parse_ends(&args.cuts)?;
    query.sector = args.solver.sector;
    query.solver = args.solver.options();
    let report = commands::cmd_entropy(&query)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{report}");
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> spt_core::Result<ExitCode> {
    let report = commands::cmd_verify(args.suite);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{report}");
    }
    if let Some(path) = &args.out {
        let mut out = output(&Some(path.clone()))?;
        serde_json::to_writer_pretty(&mut out, &report)?;
        writeln!(out)?;
        out.flush()?;
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Bad input maps to the usage exit code; anything else is a failure.
fn exit_code(e: &Error) -> ExitCode {
    match e {
        Error::Io(_) | Error::Json(_) | Error::EmptySector | Error::NegativeEigenvalue(_) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(a) => sweep(a),
        Command::Distance(a) => distance(a),
        Command::Entropy(a) => entropy(a),
        Command::Verify(a) => verify(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        exit_code(&e)
    })
}
