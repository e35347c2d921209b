//! `skmors`: generate candidate sets, run macroreplicated experiments, and
//! summarize or compare their records.
//!
//! Exit codes: 0 on success, 1 for invalid input, 2 for runtime failures.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skmors::allocators::Variant;
use skmors::exec::Execution;
use skmors::harness::{
    aggregate, compare_files, read_records, run_experiment, sidecar_path, CandidateSource, ExperimentConfig,
    FitSettings, Sidecar,
};
use skmors::problems::{generate_candidates_with, GenerateOptions, NoiseLevel, Placement, Problem};
use skmors::Error;

const OUTPUT_DIR_ENV: &str = "SKMORS_OUTPUT_DIR";

#[derive(Parser)]
#[command(name = "skmors", version, about = "Multiobjective ranking and selection experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a candidate set with known Pareto labels.
    Generate(GenerateArgs),
    /// Run an experiment from a config file or flags.
    Run(Box<RunArgs>),
    /// Aggregate record files into per-iteration means and confidence intervals.
    Report(ReportArgs),
    /// One-sided paired Wilcoxon test of F1(A) > F1(B) at one iteration.
    Compare(CompareArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum PlacementArg {
    Proximity,
    Uniform,
}

#[derive(Args)]
struct CandidateArgs {
    /// Candidate set size.
    #[arg(long, default_value_t = 100)]
    size: usize,
    /// Number of truly Pareto-optimal candidates.
    #[arg(long, default_value_t = 20)]
    n_pareto: usize,
    /// Placement of dominated candidates.
    #[arg(long, value_enum, default_value_t = PlacementArg::Proximity)]
    placement: PlacementArg,
    /// Maximum normalized offset of dominated candidates (proximity placement).
    #[arg(long, default_value_t = 0.1)]
    spread: f64,
}

impl CandidateArgs {
    fn placement(&self) -> Placement {
        match self.placement {
            PlacementArg::Proximity => Placement::Proximity { spread: self.spread },
            PlacementArg::Uniform => Placement::Uniform,
        }
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_parser = parse::<Problem>)]
    problem: Problem,
    #[command(flatten)]
    set: CandidateArgs,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output file; defaults to `<problem>_candidates.json` in the output directory.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    /// JSON experiment configuration. Other flags are ignored except --output.
    #[arg(long, conflicts_with_all = ["problem", "noise", "variant"])]
    config: Option<PathBuf>,
    #[arg(long, value_parser = parse::<Problem>, required_unless_present = "config")]
    problem: Option<Problem>,
    #[arg(long, value_parser = parse::<NoiseLevel>, required_unless_present = "config")]
    noise: Option<NoiseLevel>,
    #[arg(long, value_parser = parse::<Variant>, required_unless_present = "config")]
    variant: Option<Variant>,
    /// Candidate set file; without it a set is generated.
    #[arg(long)]
    candidates: Option<PathBuf>,
    #[command(flatten)]
    set: CandidateArgs,
    #[arg(long, default_value_t = 1)]
    candidate_seed: u64,
    #[arg(long, default_value_t = 500)]
    budget: usize,
    #[arg(long, default_value_t = 15)]
    iterations: usize,
    #[arg(long, default_value_t = 30)]
    macroreps: usize,
    #[arg(long, default_value_t = 5)]
    initial_reps: usize,
    #[arg(long, default_value_t = 3.0)]
    omega: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    restarts: usize,
    #[arg(long, default_value_t = 2)]
    refit_restarts: usize,
    #[arg(long, default_value_t = 400)]
    max_evaluations: usize,
    /// Write wall_ms as 0 so that repeated runs give identical files.
    #[arg(long)]
    no_timing: bool,
    /// Run on the calling thread only.
    #[arg(long)]
    sequential: bool,
    /// Records CSV; defaults to `<variant>.csv` in the output directory.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    /// Record files to summarize.
    #[arg(required = true)]
    records: Vec<PathBuf>,
    /// Aggregate CSV; defaults to `report.csv` in the output directory.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    a: PathBuf,
    b: PathBuf,
    #[arg(long)]
    iteration: usize,
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Validation(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_validation() {
            Failure::Validation(e.to_string())
        } else {
            Failure::Runtime(e.to_string())
        }
    }
}

/// Errors reading user-supplied files count as invalid input.
fn input<T>(what: &Path, r: skmors::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match e {
        Error::Io(io) => Failure::Validation(format!("{}: {io}", what.display())),
        Error::Csv(c) => Failure::Validation(format!("{}: {c}", what.display())),
        other => other.into(),
    })
}

fn output_dir() -> PathBuf {
    std::env::var_os(OUTPUT_DIR_ENV).map_or_else(|| PathBuf::from("."), PathBuf::from)
}

fn or_default(path: Option<PathBuf>, name: String) -> PathBuf {
    path.unwrap_or_else(|| output_dir().join(name))
}

fn generate(args: GenerateArgs) -> Result<(), Failure> {
    let opts = GenerateOptions {
        placement: args.set.placement(),
        ..GenerateOptions::new(args.set.size, args.set.n_pareto, args.seed)
    };
    let set = generate_candidates_with(args.problem, &opts)?;
    let path = or_default(args.output, format!("{}_candidates.json", args.problem));
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    set.save(&path)?;
    println!("{}", path.display());
    Ok(())
}

fn config_from_flags(args: &RunArgs) -> ExperimentConfig {
    let candidates = match &args.candidates {
        Some(path) => CandidateSource::File { path: path.clone() },
        None => CandidateSource::Generate {
            size: args.set.size,
            n_pareto: args.set.n_pareto,
            seed: args.candidate_seed,
            placement: args.set.placement(),
        },
    };
    ExperimentConfig {
        budget: args.budget,
        iterations: args.iterations,
        macroreps: args.macroreps,
        initial_reps: args.initial_reps,
        omega: args.omega,
        output: None,
        fit: FitSettings {
            restarts: args.restarts,
            refit_restarts: args.refit_restarts,
            max_evaluations: args.max_evaluations,
        },
        record_time: !args.no_timing,
        execution: if args.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
        ..ExperimentConfig::new(
            args.problem.expect("required by clap"),
            args.noise.expect("required by clap"),
            candidates,
            args.variant.expect("required by clap"),
            args.seed,
        )
    }
}

fn run(args: RunArgs) -> Result<(), Failure> {
    let mut cfg = match &args.config {
        Some(path) => input(path, ExperimentConfig::load(path))?,
        None => config_from_flags(&args),
    };
    if let Some(out) = args.output {
        cfg.output = Some(out);
    }
    if cfg.output.is_none() {
        cfg.output = Some(output_dir().join(format!("{}.csv", cfg.variant)));
    }
    cfg.validate()?;
    if let CandidateSource::File { path } = &cfg.candidates {
        input(path, cfg.candidate_set())?;
    }
    let out = run_experiment(&cfg)?;
    let path = cfg.output.as_deref().expect("set above");
    for f in out.failures() {
        eprintln!("macrorep {} aborted at iteration {}: {}", f.macrorep, f.iteration, f.message);
    }
    println!("{}", path.display());
    if out.failures().len() == out.outcomes.len() {
        return Err(Failure::Runtime("every macroreplication failed".into()));
    }
    Ok(())
}

/// Variant label of a records file: from its sidecar, else the file stem.
fn label(path: &Path) -> String {
    Sidecar::load(&sidecar_path(path))
        .map(|s| s.variant.to_string())
        .unwrap_or_else(|_| path.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned()))
}

fn report(args: ReportArgs) -> Result<(), Failure> {
    let path = or_default(args.output, "report.csv".into());
    let mut text = String::from(
        "variant,iteration,macroreps,cum_reps,f1_mean,f1_ci,ci_available,precision_mean,recall_mean,retained_mean,mce_mean,mci_mean\n",
    );
    for file in &args.records {
        let records = input(file, read_records(file))?;
        if records.is_empty() {
            return Err(Failure::Validation(format!("{}: no records", file.display())));
        }
        let name = label(file);
        for row in aggregate(&records) {
            text.push_str(&format!(
                "{name},{},{},{},{},{},{},{},{},{},{},{}\n",
                row.iteration,
                row.macroreps,
                row.cum_reps,
                row.f1_mean,
                row.f1_ci.map_or_else(String::new, |c| c.to_string()),
                row.f1_ci.is_some(),
                row.precision_mean,
                row.recall_mean,
                row.retained_mean,
                row.mce_mean,
                row.mci_mean,
            ));
            if row.f1_ci.is_none() {
                eprintln!("{name}: iteration {} has fewer than two macroreplications, no interval", row.iteration);
            }
        }
    }
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    std::fs::write(&path, text).map_err(|e| Failure::Runtime(e.to_string()))?;
    println!("{}", path.display());
    Ok(())
}

fn compare(args: CompareArgs) -> Result<(), Failure> {
    for p in [&args.a, &args.b] {
        if !p.exists() {
            return Err(Failure::Validation(format!("{}: no such file", p.display())));
        }
    }
    let result = input(&args.a, compare_files(&args.a, &args.b, args.iteration))?;
    let json = serde_json::to_string_pretty(&result).map_err(|e| Failure::Runtime(e.to_string()))?;
    println!("{json}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Run(a) => run(*a),
        Command::Report(a) => report(a),
        Command::Compare(a) => compare(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
