//! Benchmark problems, the heteroscedastic noise model and candidate sets.
//!
//! All problems are bi-objective and minimized. WFG variables `z_i` live in
//! `[0, 2i]` (one-based), DTLZ7 variables in `[0, 1]`.

use std::f64::consts::PI;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::dominance::{pareto_front, weakly_dominates};
use crate::{Error, Result};

pub const OBJECTIVES: usize = 2;

/// WFG optimal value of every normalized distance variable.
const WFG_OPTIMUM: f64 = 0.35;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Problem {
    Wfg3,
    Wfg4,
    Dtlz7,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Wfg3 => "WFG3",
            Problem::Wfg4 => "WFG4",
            Problem::Dtlz7 => "DTLZ7",
        })
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "WFG3" => Ok(Problem::Wfg3),
            "WFG4" => Ok(Problem::Wfg4),
            "DTLZ7" => Ok(Problem::Dtlz7),
            _ => Err(Error::Config(format!("unknown problem '{s}'"))),
        }
    }
}

impl Problem {
    pub fn dimension(self) -> usize {
        match self {
            Problem::Wfg3 | Problem::Wfg4 => 5,
            Problem::Dtlz7 => 2,
        }
    }

    /// Number of WFG position parameters (the rest are distance parameters).
    /// WFG3 pairs its distance parameters, so it needs an even count.
    pub fn position_params(self) -> usize {
        match self {
            Problem::Wfg3 => 1,
            Problem::Wfg4 => 2,
            Problem::Dtlz7 => 1,
        }
    }

    pub fn upper_bound(self, i: usize) -> f64 {
        match self {
            Problem::Wfg3 | Problem::Wfg4 => 2.0 * (i + 1) as f64,
            Problem::Dtlz7 => 1.0,
        }
    }

    pub fn check_domain(self, x: &[f64]) -> Result<()> {
        if x.len() != self.dimension() {
            return Err(Error::invalid(format!(
                "{self} expects {} variables, got {}",
                self.dimension(),
                x.len()
            )));
        }
        for (i, &v) in x.iter().enumerate() {
            if !(v >= 0.0 && v <= self.upper_bound(i)) {
                return Err(Error::invalid(format!(
                    "{self} variable {i} = {v} outside [0, {}]",
                    self.upper_bound(i)
                )));
            }
        }
        Ok(())
    }

    /// True objective vector.
    pub fn eval(self, x: &[f64]) -> Result<[f64; 2]> {
        self.check_domain(x)?;
        Ok(match self {
            Problem::Wfg3 => wfg3(x, self.position_params()),
            Problem::Wfg4 => wfg4(x, self.position_params()),
            Problem::Dtlz7 => dtlz7(x),
        })
    }

    /// A point of the Pareto-optimal set: position variables from `u ∈ [0,1]^k`,
    /// distance variables at their optimum.
    fn optimal_point(self, u: &[f64]) -> Vec<f64> {
        self.offset_point(u, &vec![0.0; self.dimension() - self.position_params()])
    }

    /// Position variables from `u`, distance variables moved away from the
    /// optimum by `offset` (normalized units).
    fn offset_point(self, u: &[f64], offset: &[f64]) -> Vec<f64> {
        let k = self.position_params();
        (0..self.dimension())
            .map(|i| {
                let y = if i < k {
                    u[i]
                } else {
                    match self {
                        Problem::Dtlz7 => offset[i - k],
                        _ => WFG_OPTIMUM + offset[i - k],
                    }
                };
                y.clamp(0.0, 1.0) * self.upper_bound(i)
            })
            .collect()
    }
}

pub fn eval_true(p: Problem, x: &[f64]) -> Result<[f64; 2]> {
    p.eval(x)
}

fn s_linear(y: f64, a: f64) -> f64 {
    (y - a).abs() / ((a - y).floor() + a).abs()
}

fn s_multi(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let t = (y - c).abs() / (2.0 * ((c - y).floor() + c));
    ((1.0 + ((4.0 * a + 2.0) * PI * (0.5 - t)).cos() + 4.0 * b * t * t) / (b + 2.0)).clamp(0.0, 1.0)
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// `r_nonsep` with degree 2 on a pair.
fn r_nonsep_pair(a: f64, b: f64) -> f64 {
    // numerator: a + b + |a-b| + |b-a|; denominator: (2/2)·1·(1+4-2) = 3
    (a + b + 2.0 * (a - b).abs()) / 3.0
}

fn normalized(z: &[f64]) -> Vec<f64> {
    z.iter()
        .enumerate()
        .map(|(i, v)| (v / (2.0 * (i + 1) as f64)).clamp(0.0, 1.0))
        .collect()
}

/// Shape mapping shared by the WFG instances with `M = 2`, `D = 1`, `A_1 = 1`,
/// `S = (2, 4)`.
fn wfg_finish(t_pos: f64, t_dist: f64, shape: impl Fn(f64) -> [f64; 2]) -> [f64; 2] {
    let x1 = t_dist.max(1.0) * (t_pos - 0.5) + 0.5;
    let h = shape(x1);
    [t_dist + 2.0 * h[0], t_dist + 4.0 * h[1]]
}

fn wfg3(z: &[f64], k: usize) -> [f64; 2] {
    let y = normalized(z);
    let dist: Vec<f64> = y[k..].iter().map(|&v| s_linear(v, WFG_OPTIMUM)).collect();
    let pairs: Vec<f64> = dist.chunks(2).map(|c| r_nonsep_pair(c[0], c[1])).collect();
    wfg_finish(mean(&y[..k]), mean(&pairs), |x| [x, 1.0 - x])
}

fn wfg4(z: &[f64], k: usize) -> [f64; 2] {
    let y: Vec<f64> = normalized(z)
        .into_iter()
        .map(|v| s_multi(v, 30.0, 10.0, WFG_OPTIMUM))
        .collect();
    wfg_finish(mean(&y[..k]), mean(&y[k..]), |x| {
        [(x * PI / 2.0).sin(), (x * PI / 2.0).cos()]
    })
}

fn dtlz7(x: &[f64]) -> [f64; 2] {
    let tail = &x[1..];
    let g = 1.0 + 9.0 / tail.len() as f64 * tail.iter().sum::<f64>();
    let f1 = x[0];
    let h = 2.0 - f1 / (1.0 + g) * (1.0 + (3.0 * PI * f1).sin());
    [f1, (1.0 + g) * h]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NoiseLevel {
    /// Deterministic observations.
    Zero,
    Low,
    Medium,
    High,
}

impl NoiseLevel {
    /// Noise standard deviation bounds as multiples of the objective range.
    pub fn multipliers(self) -> (f64, f64) {
        match self {
            NoiseLevel::Zero => (0.0, 0.0),
            NoiseLevel::Low => (0.001, 0.5),
            NoiseLevel::Medium => (0.01, 1.0),
            NoiseLevel::High => (1.0, 2.0),
        }
    }
}

impl fmt::Display for NoiseLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NoiseLevel::Zero => "zero",
            NoiseLevel::Low => "low",
            NoiseLevel::Medium => "medium",
            NoiseLevel::High => "high",
        })
    }
}

impl FromStr for NoiseLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "zero" | "none" => Ok(NoiseLevel::Zero),
            "low" => Ok(NoiseLevel::Low),
            "medium" => Ok(NoiseLevel::Medium),
            "high" => Ok(NoiseLevel::High),
            _ => Err(Error::Config(format!("unknown noise level '{s}'"))),
        }
    }
}

/// Noise whose standard deviation grows linearly with the objective value,
/// from `tau_min` at the best candidate to `tau_max` at the worst.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpec {
    pub level: NoiseLevel,
    pub tau_min: [f64; 2],
    pub tau_max: [f64; 2],
    pub f_min: [f64; 2],
    pub f_max: [f64; 2],
}

impl NoiseSpec {
    pub fn new(level: NoiseLevel, objectives: &[[f64; 2]]) -> Result<Self> {
        if objectives.is_empty() {
            return Err(Error::invalid("noise needs at least one candidate"));
        }
        let (lo, hi) = level.multipliers();
        let mut spec = NoiseSpec {
            level,
            tau_min: [0.0; 2],
            tau_max: [0.0; 2],
            f_min: [f64::INFINITY; 2],
            f_max: [f64::NEG_INFINITY; 2],
        };
        for f in objectives {
            for j in 0..2 {
                spec.f_min[j] = spec.f_min[j].min(f[j]);
                spec.f_max[j] = spec.f_max[j].max(f[j]);
            }
        }
        for j in 0..2 {
            let range = spec.f_max[j] - spec.f_min[j];
            spec.tau_min[j] = lo * range;
            spec.tau_max[j] = hi * range;
        }
        Ok(spec)
    }

    /// Standard deviation for objective `j` at true value `f`.
    pub fn sd(&self, f: f64, j: usize) -> f64 {
        let span = self.f_max[j] - self.f_min[j];
        let w = if span > 0.0 {
            ((f - self.f_min[j]) / span).clamp(0.0, 1.0)
        } else {
            0.0
        };
        self.tau_min[j] + w * (self.tau_max[j] - self.tau_min[j])
    }

    /// One noisy observation around known true values.
    pub fn perturb<R: Rng + ?Sized>(&self, truth: &[f64; 2], rng: &mut R) -> [f64; 2] {
        let mut out = *truth;
        for (j, v) in out.iter_mut().enumerate() {
            let z: f64 = rng.sample(StandardNormal);
            *v += self.sd(truth[j], j) * z;
        }
        out
    }
}

pub fn noise_sd(p: Problem, spec: &NoiseSpec, x: &[f64], j: usize) -> Result<f64> {
    if j >= OBJECTIVES {
        return Err(Error::invalid(format!("objective {j} out of range")));
    }
    Ok(spec.sd(p.eval(x)?[j], j))
}

pub fn sample_observation<R: Rng + ?Sized>(p: Problem, spec: &NoiseSpec, x: &[f64], rng: &mut R) -> Result<[f64; 2]> {
    Ok(spec.perturb(&p.eval(x)?, rng))
}

/// How dominated candidates are placed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum Placement {
    /// Distance variables moved off the optimum by up to `spread` (normalized).
    Proximity { spread: f64 },
    /// Uniform over the whole domain.
    Uniform,
}

impl Default for Placement {
    fn default() -> Self {
        Placement::Proximity { spread: 0.1 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerateOptions {
    pub size: usize,
    pub n_pareto: usize,
    pub seed: u64,
    #[serde(default)]
    pub placement: Placement,
    /// Draws allowed per requested candidate before giving up.
    #[serde(default = "default_attempts")]
    pub attempts_per_candidate: usize,
}

fn default_attempts() -> usize {
    10_000
}

impl GenerateOptions {
    pub fn new(size: usize, n_pareto: usize, seed: u64) -> Self {
        GenerateOptions {
            size,
            n_pareto,
            seed,
            placement: Placement::default(),
            attempts_per_candidate: default_attempts(),
        }
    }
}

pub const CANDIDATE_FORMAT_VERSION: u32 = 1;

/// A finite design set with known true objectives and Pareto labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateSet {
    pub version: u32,
    pub problem: Problem,
    pub seed: u64,
    pub designs: Vec<Vec<f64>>,
    pub objectives: Vec<[f64; 2]>,
    pub pareto: Vec<bool>,
    /// Range of the true objectives over the set, per objective.
    pub range: [f64; 2],
}

impl CandidateSet {
    pub fn len(&self) -> usize {
        self.designs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.designs.is_empty()
    }

    pub fn pareto_ids(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.pareto[i]).collect()
    }

    /// Checks shape, domain, stored objectives and labels.
    pub fn validate(&self) -> Result<()> {
        if self.version != CANDIDATE_FORMAT_VERSION {
            return Err(Error::invalid(format!("unsupported candidate format version {}", self.version)));
        }
        let n = self.designs.len();
        if n < 2 || self.objectives.len() != n || self.pareto.len() != n {
            return Err(Error::invalid("candidate set needs at least two designs and matching columns"));
        }
        for (x, f) in self.designs.iter().zip(&self.objectives) {
            if self.problem.eval(x)? != *f {
                return Err(Error::invalid("stored objectives differ from the problem evaluation"));
            }
        }
        let front = pareto_front(&self.objectives)?;
        if front != self.pareto_ids() {
            return Err(Error::invalid("Pareto labels do not match the stored objectives"));
        }
        if objective_range(&self.objectives) != self.range {
            return Err(Error::invalid("stored objective range is inconsistent"));
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let set: CandidateSet = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        set.validate()?;
        Ok(set)
    }
}

fn objective_range(f: &[[f64; 2]]) -> [f64; 2] {
    let mut r = [0.0; 2];
    for (j, slot) in r.iter_mut().enumerate() {
        let lo = f.iter().map(|v| v[j]).fold(f64::INFINITY, f64::min);
        let hi = f.iter().map(|v| v[j]).fold(f64::NEG_INFINITY, f64::max);
        *slot = hi - lo;
    }
    r
}

/// Dense sample of the optimal manifold, used to keep Pareto draws on the
/// globally non-dominated part (DTLZ7's front is disconnected).
fn reference_front(p: Problem) -> Vec<[f64; 2]> {
    let k = p.position_params();
    let steps = 2000;
    let pts: Vec<[f64; 2]> = (0..=steps)
        .map(|s| {
            let u = vec![s as f64 / steps as f64; k];
            p.eval(&p.optimal_point(&u)).expect("optimal points lie in the domain")
        })
        .collect();
    let front = pareto_front(&pts).expect("finite objectives");
    front.into_iter().map(|i| pts[i]).collect()
}

pub fn generate_candidates(p: Problem, size: usize, n_pareto: usize, seed: u64) -> Result<CandidateSet> {
    generate_candidates_with(p, &GenerateOptions::new(size, n_pareto, seed))
}

/// Draws `n_pareto` mutually non-dominated points on the optimal manifold,
/// then fills the set with points that one of them dominates.
pub fn generate_candidates_with(p: Problem, opts: &GenerateOptions) -> Result<CandidateSet> {
    if opts.n_pareto == 0 || opts.n_pareto > opts.size {
        return Err(Error::Config(format!(
            "need 1 <= n_pareto <= size, got n_pareto={} size={}",
            opts.n_pareto, opts.size
        )));
    }
    if opts.size < 2 {
        return Err(Error::Config("candidate set needs at least two designs".into()));
    }
    if let Placement::Proximity { spread } = opts.placement {
        if !(spread > 0.0 && spread <= 1.0) {
            return Err(Error::Config(format!("proximity spread must lie in (0, 1], got {spread}")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let budget = opts.attempts_per_candidate.saturating_mul(opts.size);
    let reference = reference_front(p);
    let k = p.position_params();
    let dist = p.dimension() - k;
    let tolerance = 1e-9;

    let mut designs: Vec<Vec<f64>> = Vec::with_capacity(opts.size);
    let mut objectives: Vec<[f64; 2]> = Vec::with_capacity(opts.size);
    let mut attempts = 0usize;
    while designs.len() < opts.n_pareto {
        attempts += 1;
        if attempts > budget {
            return Err(Error::Generation(format!(
                "found only {} of {} Pareto points",
                designs.len(),
                opts.n_pareto
            )));
        }
        let u: Vec<f64> = (0..k).map(|_| rng.random()).collect();
        let x = p.optimal_point(&u);
        let f = p.eval(&x)?;
        let shifted = [f[0] - tolerance, f[1] - tolerance];
        if reference.iter().any(|r| weakly_dominates(r, &shifted)) {
            continue;
        }
        let clash = objectives
            .iter()
            .any(|g| *g == f || weakly_dominates(g, &f) || weakly_dominates(&f, g));
        if clash {
            continue;
        }
        designs.push(x);
        objectives.push(f);
    }

    let front = objectives.clone();
    while designs.len() < opts.size {
        attempts += 1;
        if attempts > budget {
            return Err(Error::Generation(format!(
                "found only {} of {} dominated points",
                designs.len() - opts.n_pareto,
                opts.size - opts.n_pareto
            )));
        }
        let x = match opts.placement {
            Placement::Proximity { spread } => {
                let u: Vec<f64> = (0..k).map(|_| rng.random()).collect();
                let offset: Vec<f64> = (0..dist)
                    .map(|_| match p {
                        Problem::Dtlz7 => spread * rng.random::<f64>(),
                        _ => spread * (2.0 * rng.random::<f64>() - 1.0),
                    })
                    .collect();
                p.offset_point(&u, &offset)
            }
            Placement::Uniform => (0..p.dimension())
                .map(|i| rng.random::<f64>() * p.upper_bound(i))
                .collect(),
        };
        let f = p.eval(&x)?;
        if front.iter().any(|g| weakly_dominates(g, &f)) {
            designs.push(x);
            objectives.push(f);
        }
    }

    let range = objective_range(&objectives);
    let pareto: Vec<bool> = (0..opts.size).map(|i| i < opts.n_pareto).collect();
    let set = CandidateSet {
        version: CANDIDATE_FORMAT_VERSION,
        problem: p,
        seed: opts.seed,
        designs,
        objectives,
        pareto,
        range,
    };
    debug_assert_eq!(pareto_front(&set.objectives)?, set.pareto_ids());
    Ok(set)
}

/// Splits one root seed into independent streams. Stream ids are
/// `design * STREAMS_PER_DESIGN + purpose`; the macroreplication index is
/// mixed into the seed, so every (macrorep, design, purpose) triple gets
/// its own sequence regardless of evaluation order.
pub struct StreamSplitter {
    seed: u64,
}

pub const STREAMS_PER_DESIGN: u64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Purpose {
    Observation = 0,
    ModelFit = 1,
}

impl StreamSplitter {
    pub fn new(root: u64, macrorep: u64) -> Self {
        StreamSplitter {
            seed: splitmix(root ^ splitmix(macrorep.wrapping_add(0x5EED))),
        }
    }

    pub fn stream(&self, design: usize, purpose: Purpose) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(design as u64 * STREAMS_PER_DESIGN + purpose as u64);
        rng
    }

    /// A plain seed for consumers that build their own generator.
    pub fn derive_seed(&self, tag: u64) -> u64 {
        splitmix(self.seed ^ splitmix(tag))
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
