//! Macroreplicated experiments: configuration, the iteration loop, record
//! files and their statistical summaries.

mod records;
mod stats;

use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::allocators::{allocator_for, Allocator, IterationInput, Variant};
use crate::exec::Execution;
use crate::kriging::{fit_objectives, FitOptions, KernelParams, Predictions, SkModel};
use crate::metrics::classify_errors;
use crate::problems::{
    generate_candidates_with, CandidateSet, GenerateOptions, NoiseLevel, NoiseSpec, Placement, Problem, Purpose,
    StreamSplitter,
};
use crate::samples::SampleStore;
use crate::screening::DEFAULT_OMEGA;
use crate::{Error, Result};

pub use records::{read_records, sidecar_path, RecordWriter, Sidecar};
pub use stats::{aggregate, compare, compare_files, wilcoxon_signed_rank, AggregateRow, CompareResult, WilcoxonResult};

/// Where the candidate set comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CandidateSource {
    Generate {
        size: usize,
        n_pareto: usize,
        seed: u64,
        #[serde(default)]
        placement: Placement,
    },
    File {
        path: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FitSettings {
    /// Fresh likelihood starts for the first fit of a macroreplication.
    pub restarts: usize,
    /// Fresh starts for later fits, which also start from the previous optimum.
    pub refit_restarts: usize,
    /// Likelihood evaluations per start.
    pub max_evaluations: usize,
}

impl Default for FitSettings {
    fn default() -> Self {
        FitSettings {
            restarts: 8,
            refit_restarts: 2,
            max_evaluations: 400,
        }
    }
}

fn default_budget() -> usize {
    500
}
fn default_iterations() -> usize {
    15
}
fn default_macroreps() -> usize {
    30
}
fn default_initial_reps() -> usize {
    5
}
fn default_omega() -> f64 {
    DEFAULT_OMEGA
}
fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problem: Problem,
    pub noise: NoiseLevel,
    pub candidates: CandidateSource,
    pub variant: Variant,
    /// Replications handed out per iteration.
    #[serde(default = "default_budget")]
    pub budget: usize,
    #[serde(default = "default_iterations")]
    pub iterations: usize,
    #[serde(default = "default_macroreps")]
    pub macroreps: usize,
    /// Replications of every design before the first iteration.
    #[serde(default = "default_initial_reps")]
    pub initial_reps: usize,
    #[serde(default = "default_omega")]
    pub omega: f64,
    pub seed: u64,
    /// Records CSV; the sidecar goes next to it with a `.json` extension.
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub fit: FitSettings,
    /// Measure wall time per iteration. Off, `wall_ms` is written as 0 and
    /// record files are byte-identical across runs.
    #[serde(default = "default_true")]
    pub record_time: bool,
    #[serde(default)]
    pub execution: Execution,
}

impl ExperimentConfig {
    /// A configuration with the usual defaults for everything but the essentials.
    pub fn new(problem: Problem, noise: NoiseLevel, candidates: CandidateSource, variant: Variant, seed: u64) -> Self {
        ExperimentConfig {
            problem,
            noise,
            candidates,
            variant,
            budget: default_budget(),
            iterations: default_iterations(),
            macroreps: default_macroreps(),
            initial_reps: default_initial_reps(),
            omega: default_omega(),
            seed,
            output: None,
            fit: FitSettings::default(),
            record_time: true,
            execution: Execution::default(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::Config(m.to_string()));
        if self.macroreps == 0 {
            return fail("macroreps must be positive");
        }
        if self.budget == 0 {
            return fail("budget must be positive");
        }
        if self.initial_reps < 2 {
            return fail("initial_reps must be at least 2 so that sample variances exist");
        }
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return fail("omega must be positive");
        }
        if self.fit.restarts == 0 || self.fit.max_evaluations == 0 {
            return fail("fit.restarts and fit.max_evaluations must be positive");
        }
        if let CandidateSource::Generate { size, n_pareto, .. } = self.candidates {
            if size < 2 || n_pareto == 0 || n_pareto > size {
                return fail("candidate set needs size >= 2 and 1 <= n_pareto <= size");
            }
        }
        Ok(())
    }

    /// Generates or loads the candidate set and checks it against the problem.
    pub fn candidate_set(&self) -> Result<CandidateSet> {
        let set = match &self.candidates {
            CandidateSource::Generate {
                size,
                n_pareto,
                seed,
                placement,
            } => generate_candidates_with(
                self.problem,
                &GenerateOptions {
                    placement: *placement,
                    ..GenerateOptions::new(*size, *n_pareto, *seed)
                },
            )?,
            CandidateSource::File { path } => CandidateSet::load(path)?,
        };
        if set.problem != self.problem {
            return Err(Error::Config(format!(
                "candidate set is for {}, configuration says {}",
                set.problem, self.problem
            )));
        }
        Ok(set)
    }

    /// Total simulator calls of one complete macroreplication.
    pub fn expected_calls(&self, designs: usize) -> usize {
        self.initial_reps * designs + self.iterations * self.budget
    }
}

/// One row of the records file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub macrorep: usize,
    pub iteration: usize,
    pub cum_reps: usize,
    pub f1: f64,
    pub precision: f64,
    pub recall: f64,
    pub mce: usize,
    pub mci: usize,
    pub retained: usize,
    pub front_size: usize,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub macrorep: usize,
    pub iteration: usize,
    pub message: String,
}

/// Everything one macroreplication produced.
#[derive(Debug, Clone, PartialEq)]
pub struct MacrorepOutcome {
    pub macrorep: usize,
    pub records: Vec<IterationRecord>,
    /// Simulator calls actually made.
    pub calls: usize,
    /// Set when the macroreplication stopped early.
    pub failure: Option<Failure>,
    /// Replications per design at the end.
    pub final_counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub outcomes: Vec<MacrorepOutcome>,
}

impl RunOutput {
    pub fn records(&self) -> Vec<IterationRecord> {
        self.outcomes.iter().flat_map(|o| o.records.iter().cloned()).collect()
    }

    pub fn failures(&self) -> Vec<Failure> {
        self.outcomes.iter().filter_map(|o| o.failure.clone()).collect()
    }
}

/// Immutable inputs shared by all macroreplications of a run.
struct Shared<'a> {
    cfg: &'a ExperimentConfig,
    set: &'a CandidateSet,
    noise: NoiseSpec,
    truth: Vec<usize>,
    allocator: Box<dyn Allocator>,
}

/// Kriging state carried between iterations.
struct Models {
    models: Vec<SkModel>,
    predictions: Predictions,
}

impl Shared<'_> {
    /// Nested data parallelism inside a macroreplication only when the
    /// macroreplications themselves run one at a time.
    fn inner_exec(&self) -> Execution {
        if self.cfg.macroreps > 1 {
            Execution::Sequential
        } else {
            self.cfg.execution
        }
    }

    fn fit(&self, store: &SampleStore, previous: Option<&Models>, seed: u64) -> Result<Models> {
        let warm: Option<Vec<KernelParams>> = previous.map(|m| m.models.iter().map(SkModel::params).collect());
        let mut opts = FitOptions {
            restarts: if previous.is_some() {
                self.cfg.fit.refit_restarts
            } else {
                self.cfg.fit.restarts
            },
            seed,
            max_evaluations: self.cfg.fit.max_evaluations,
            ..FitOptions::default()
        };
        let attempt = |opts: &FitOptions| -> Result<Models> {
            let models = fit_objectives(&self.set.designs, store, opts, warm.as_deref(), self.inner_exec())?;
            let predictions = Predictions::from_models(&models, &self.set.designs)?;
            Ok(Models { models, predictions })
        };
        match attempt(&opts) {
            Ok(m) => Ok(m),
            Err(Error::ModelFit { .. }) => {
                opts.min_jitter = opts.max_jitter;
                opts.max_jitter = 1e-2;
                attempt(&opts)
            }
            Err(e) => Err(e),
        }
    }

    fn record(
        &self,
        macrorep: usize,
        iteration: usize,
        calls: usize,
        identified: &[usize],
        retained: usize,
        front_size: usize,
        started: Instant,
    ) -> IterationRecord {
        let c = classify_errors(identified, &self.truth);
        IterationRecord {
            macrorep,
            iteration,
            cum_reps: calls,
            f1: c.f1(),
            precision: c.precision(),
            recall: c.recall(),
            mce: c.mce(),
            mci: c.mci(),
            retained,
            front_size,
            wall_ms: if self.cfg.record_time {
                started.elapsed().as_millis() as u64
            } else {
                0
            },
        }
    }

    fn macrorep(&self, k: usize) -> MacrorepOutcome {
        let mut out = MacrorepOutcome {
            macrorep: k,
            records: Vec::new(),
            calls: 0,
            failure: None,
            final_counts: Vec::new(),
        };
        if let Err((iteration, e)) = self.macrorep_inner(k, &mut out) {
            out.failure = Some(Failure {
                macrorep: k,
                iteration,
                message: e.to_string(),
            });
        }
        out
    }

    fn macrorep_inner(&self, k: usize, out: &mut MacrorepOutcome) -> std::result::Result<(), (usize, Error)> {
        let n = self.set.len();
        let splitter = StreamSplitter::new(self.cfg.seed, k as u64);
        let mut streams: Vec<ChaCha8Rng> = (0..n).map(|i| splitter.stream(i, Purpose::Observation)).collect();
        let mut store = SampleStore::new(n, 2);
        let needs_models = self.cfg.variant.needs_models();
        let fit_seed = |t: usize| splitter.derive_seed(((t as u64) << 8) | Purpose::ModelFit as u64);

        let started = Instant::now();
        let sample = |store: &mut SampleStore, streams: &mut [ChaCha8Rng], i: usize, reps: usize| -> Result<()> {
            let obs: Vec<[f64; 2]> = (0..reps)
                .map(|_| self.noise.perturb(&self.set.objectives[i], &mut streams[i]))
                .collect();
            store.record_replications(i, &obs)
        };
        for i in 0..n {
            sample(&mut store, &mut streams, i, self.cfg.initial_reps).map_err(|e| (0, e))?;
        }
        out.calls = store.total_replications();
        let mut models = if needs_models {
            Some(self.fit(&store, None, fit_seed(0)).map_err(|e| (0, e))?)
        } else {
            None
        };
        let identified = self
            .allocator
            .identify(&store, models.as_ref().map(|m| &m.predictions))
            .map_err(|e| (0, e))?;
        out.records.push(self.record(k, 0, out.calls, &identified, n, 0, started));

        for t in 1..=self.cfg.iterations {
            let started = Instant::now();
            let step = |store: &mut SampleStore, streams: &mut [ChaCha8Rng], models: &mut Option<Models>| -> Result<IterationRecord> {
                let input = IterationInput {
                    store,
                    predictions: models.as_ref().map(|m| &m.predictions),
                    budget: self.cfg.budget,
                    omega: self.cfg.omega,
                    exec: self.inner_exec(),
                };
                let alloc = self.allocator.allocate(&input)?;
                if alloc.plan.total() != self.cfg.budget {
                    return Err(Error::InvalidState(format!(
                        "allocator spent {} of {} replications",
                        alloc.plan.total(),
                        self.cfg.budget
                    )));
                }
                for (i, &reps) in alloc.plan.counts.iter().enumerate() {
                    sample(store, streams, i, reps)?;
                }
                if needs_models {
                    *models = Some(self.fit(store, models.as_ref(), fit_seed(t))?);
                }
                let identified = self.allocator.identify(store, models.as_ref().map(|m| &m.predictions))?;
                Ok(self.record(k, t, store.total_replications(), &identified, alloc.retained, alloc.front_size, started))
            };
            let rec = step(&mut store, &mut streams, &mut models);
            out.calls = store.total_replications();
            out.records.push(rec.map_err(|e| (t, e))?);
        }
        out.final_counts = store.counts().to_vec();
        Ok(())
    }
}

/// Runs every macroreplication, handing outcomes to `sink` in macroreplication
/// order as soon as all earlier ones are done.
pub fn run_with_candidates<F>(cfg: &ExperimentConfig, set: &CandidateSet, sink: F) -> Result<RunOutput>
where
    F: FnMut(&MacrorepOutcome) -> Result<()> + Send,
{
    cfg.validate()?;
    if set.problem != cfg.problem {
        return Err(Error::Config("candidate set and configuration name different problems".into()));
    }
    let shared = Shared {
        cfg,
        set,
        noise: NoiseSpec::new(cfg.noise, &set.objectives)?,
        truth: set.pareto_ids(),
        allocator: allocator_for(cfg.variant),
    };
    let ordered = Mutex::new(Ordered {
        next: 0,
        pending: Vec::new(),
        sink,
        error: None,
    });
    let exec = if cfg.macroreps > 1 {
        cfg.execution
    } else {
        Execution::Sequential
    };
    let outcomes = exec.map_indices(cfg.macroreps, |k| {
        let outcome = shared.macrorep(k);
        ordered.lock().expect("sink lock").push(outcome.clone());
        outcome
    });
    if let Some(e) = ordered.into_inner().expect("sink lock").error {
        return Err(e);
    }
    Ok(RunOutput { outcomes })
}

/// Reorders outcomes finished out of order.
struct Ordered<F> {
    next: usize,
    pending: Vec<MacrorepOutcome>,
    sink: F,
    error: Option<Error>,
}

impl<F: FnMut(&MacrorepOutcome) -> Result<()>> Ordered<F> {
    fn push(&mut self, outcome: MacrorepOutcome) {
        self.pending.push(outcome);
        while let Some(pos) = self.pending.iter().position(|o| o.macrorep == self.next) {
            let o = self.pending.swap_remove(pos);
            if self.error.is_none() {
                if let Err(e) = (self.sink)(&o) {
                    self.error = Some(e);
                }
            }
            self.next += 1;
        }
    }
}

/// Runs an experiment. With `cfg.output` set, records are appended to the CSV
/// as macroreplications complete and the sidecar is written at the end.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<RunOutput> {
    let set = cfg.candidate_set()?;
    match &cfg.output {
        None => run_with_candidates(cfg, &set, |_| Ok(())),
        Some(path) => {
            let mut writer = RecordWriter::create(path)?;
            let out = run_with_candidates(cfg, &set, |o| writer.write_all(&o.records))?;
            Sidecar::new(cfg, &set, &out).save(&sidecar_path(path))?;
            Ok(out)
        }
    }
}
