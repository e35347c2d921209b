//! Stochastic kriging metamodels.
//!
//! One model is fitted per objective from the sample means `f̄_i` and the
//! intrinsic variances of those means, `s²_i / r_i`. The extrinsic field is a
//! squared-exponential Gaussian process with a constant trend; the trend is
//! profiled out by generalized least squares and the kernel hyperparameters
//! are set by maximum likelihood with a multi-start bounded simplex search.
//!
//! Internally inputs are mapped to the unit cube and outputs to zero mean and
//! unit variance. Parameters and predictions crossing the public API are in
//! original units.

mod optimize;

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use rand::{Rng, SeedableRng};
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exec::Execution;
use crate::samples::SampleStore;
use crate::{Error, Result};

/// Length-scale search box in unit-cube coordinates.
pub const LENGTH_SCALE_BOUNDS: (f64, f64) = (1e-3, 1e3);
/// Process-variance search box relative to the variance of the sample means.
pub const PROCESS_VARIANCE_BOUNDS: (f64, f64) = (1e-6, 1e3);

/// Squared-exponential kernel hyperparameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelParams {
    pub process_variance: f64,
    pub length_scales: Vec<f64>,
}

impl KernelParams {
    pub fn new(process_variance: f64, length_scales: Vec<f64>) -> Result<Self> {
        let p = KernelParams {
            process_variance,
            length_scales,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !ok(self.process_variance) || !self.length_scales.iter().all(|&l| ok(l)) {
            return Err(Error::invalid(format!(
                "kernel parameters must be positive and finite: {self:?}"
            )));
        }
        Ok(())
    }
}

/// `v² exp(-Σ_q ((x_q - x'_q) / l_q)²)`.
pub fn kernel_cov(xi: &[f64], xh: &[f64], p: &KernelParams) -> f64 {
    debug_assert_eq!(xi.len(), xh.len());
    debug_assert_eq!(xi.len(), p.length_scales.len());
    let dist: f64 = xi
        .iter()
        .zip(xh)
        .zip(&p.length_scales)
        .map(|((a, b), l)| ((a - b) / l).powi(2))
        .sum();
    p.process_variance * (-dist).exp()
}

/// Diagonal of the intrinsic covariance of the sample means for objective
/// `j`: `s²_ij / r_i` (no common random numbers, so off-diagonals vanish).
pub fn intrinsic_cov(store: &SampleStore, j: usize) -> Result<Vec<f64>> {
    (0..store.designs())
        .map(|i| store.mean_variance(i, j))
        .collect()
}

/// Mean and variance of a prediction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prediction {
    pub mean: f64,
    pub variance: f64,
}

impl Prediction {
    pub fn sd(&self) -> f64 {
        self.variance.sqrt()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FitOptions {
    /// Fresh Latin-hypercube starts of the likelihood search.
    pub restarts: usize,
    /// Seed for the start design.
    pub seed: u64,
    /// Extra start at a previous optimum, in original units.
    pub warm_start: Option<KernelParams>,
    /// Initial diagonal jitter relative to the mean covariance diagonal.
    pub min_jitter: f64,
    /// Largest relative jitter tried before giving up.
    pub max_jitter: f64,
    /// Likelihood evaluations allowed per start.
    pub max_evaluations: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            restarts: 8,
            seed: 0,
            warm_start: None,
            min_jitter: 1e-10,
            max_jitter: 1e-4,
            max_evaluations: 400,
        }
    }
}

/// Affine maps between original and internal coordinates.
#[derive(Debug, Clone)]
struct Scaling {
    x_low: Vec<f64>,
    x_range: Vec<f64>,
    y_center: f64,
    y_scale: f64,
}

impl Scaling {
    fn from_data(designs: &[Vec<f64>], means: &[f64]) -> Self {
        let d = designs[0].len();
        let mut x_low = vec![f64::INFINITY; d];
        let mut x_high = vec![f64::NEG_INFINITY; d];
        for x in designs {
            for q in 0..d {
                x_low[q] = x_low[q].min(x[q]);
                x_high[q] = x_high[q].max(x[q]);
            }
        }
        let x_range = x_low
            .iter()
            .zip(&x_high)
            .map(|(lo, hi)| if hi > lo { hi - lo } else { 1.0 })
            .collect();
        let n = means.len() as f64;
        let y_center = means.iter().sum::<f64>() / n;
        let var = means.iter().map(|y| (y - y_center).powi(2)).sum::<f64>() / n;
        let y_scale = if var > 0.0 { var.sqrt() } else { 1.0 };
        Scaling {
            x_low,
            x_range,
            y_center,
            y_scale,
        }
    }

    fn x(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(&self.x_low)
            .zip(&self.x_range)
            .map(|((v, lo), r)| (v - lo) / r)
            .collect()
    }

    fn params_in(&self, p: &KernelParams) -> KernelParams {
        KernelParams {
            process_variance: p.process_variance / self.y_scale.powi(2),
            length_scales: p
                .length_scales
                .iter()
                .zip(&self.x_range)
                .map(|(l, r)| l / r)
                .collect(),
        }
    }

    fn params_out(&self, p: &KernelParams) -> KernelParams {
        KernelParams {
            process_variance: p.process_variance * self.y_scale.powi(2),
            length_scales: p
                .length_scales
                .iter()
                .zip(&self.x_range)
                .map(|(l, r)| l * r)
                .collect(),
        }
    }
}

/// Training data in internal coordinates, with the per-dimension squared
/// differences of every design pair cached for fast covariance assembly.
#[derive(Debug, Clone)]
struct Training {
    x: Vec<Vec<f64>>,
    y: DVector<f64>,
    noise: Vec<f64>,
    sq_diff: Vec<f64>,
}

impl Training {
    fn new(x: Vec<Vec<f64>>, y: DVector<f64>, noise: Vec<f64>) -> Self {
        let n = x.len();
        let d = x[0].len();
        let mut sq_diff = Vec::with_capacity(n * (n - 1) / 2 * d);
        for i in 0..n {
            for h in 0..i {
                for q in 0..d {
                    sq_diff.push((x[i][q] - x[h][q]).powi(2));
                }
            }
        }
        Training { x, y, noise, sq_diff }
    }

    fn n(&self) -> usize {
        self.x.len()
    }

    fn covariance(&self, p: &KernelParams) -> DMatrix<f64> {
        let n = self.n();
        let d = p.length_scales.len();
        let inv_sq: Vec<f64> = p.length_scales.iter().map(|l| 1.0 / (l * l)).collect();
        let mut k = DMatrix::zeros(n, n);
        let mut pair = 0;
        for i in 0..n {
            for h in 0..i {
                let diffs = &self.sq_diff[pair * d..(pair + 1) * d];
                let dist: f64 = diffs.iter().zip(&inv_sq).map(|(s, w)| s * w).sum();
                let v = p.process_variance * (-dist).exp();
                k[(i, h)] = v;
                k[(h, i)] = v;
                pair += 1;
            }
            k[(i, i)] = p.process_variance + self.noise[i];
        }
        k
    }
}

/// Covariance factorization with the jitter that made it succeed.
struct Factored {
    chol: Cholesky<f64, Dyn>,
    jitter: f64,
}

fn factor(mut k: DMatrix<f64>, min_jitter: f64, max_jitter: f64) -> Option<Factored> {
    let n = k.nrows();
    let mean_diag = k.diagonal().mean();
    let mut rel = min_jitter;
    let mut applied = 0.0;
    loop {
        let jitter = rel * mean_diag;
        for i in 0..n {
            k[(i, i)] += jitter - applied;
        }
        applied = jitter;
        if let Some(chol) = Cholesky::new(k.clone()) {
            return Some(Factored { chol, jitter });
        }
        if rel >= max_jitter {
            return None;
        }
        rel = (rel * 10.0).min(max_jitter);
    }
}

/// Iterative refinement of `k⁻¹ b` using the jittered factorization of `k`.
/// Stops once the residual no longer shrinks.
fn refine(k: &DMatrix<f64>, chol: &Cholesky<f64, Dyn>, b: &DVector<f64>, mut x: DVector<f64>) -> DVector<f64> {
    let mut resid = b - k * &x;
    let mut norm = resid.norm();
    for _ in 0..REFINE_STEPS {
        let candidate = &x + chol.solve(&resid);
        let next = b - k * &candidate;
        let next_norm = next.norm();
        if !(next_norm < norm) {
            break;
        }
        x = candidate;
        resid = next;
        norm = next_norm;
    }
    x
}

const REFINE_STEPS: usize = 50;

/// Profile-likelihood pieces at one parameter set.
struct Profile {
    factored: Factored,
    trend: f64,
    alpha: DVector<f64>,
    inv_ones: DVector<f64>,
    ones_inv_ones: f64,
    log_likelihood: f64,
}

fn profile(data: &Training, p: &KernelParams, min_jitter: f64, max_jitter: f64) -> Option<Profile> {
    let n = data.n();
    let factored = factor(data.covariance(p), min_jitter, max_jitter)?;
    let ones = DVector::from_element(n, 1.0);
    let inv_ones = factored.chol.solve(&ones);
    let inv_y = factored.chol.solve(&data.y);
    let ones_inv_ones = inv_ones.sum();
    if !(ones_inv_ones > 0.0) {
        return None;
    }
    let trend = inv_y.sum() / ones_inv_ones;
    let alpha = &inv_y - &inv_ones * trend;
    let resid = data.y.add_scalar(-trend);
    let quad = resid.dot(&alpha);
    let log_det: f64 = factored.chol.l_dirty().diagonal().iter().map(|v| v.ln()).sum::<f64>() * 2.0;
    let log_likelihood = -0.5 * (quad + log_det + n as f64 * (2.0 * std::f64::consts::PI).ln());
    if !log_likelihood.is_finite() {
        return None;
    }
    Some(Profile {
        factored,
        trend,
        alpha,
        inv_ones,
        ones_inv_ones,
        log_likelihood,
    })
}

/// A fitted stochastic-kriging metamodel for one objective.
#[derive(Clone)]
pub struct SkModel {
    scaling: Scaling,
    data: Training,
    params: KernelParams,
    chol: Cholesky<f64, Dyn>,
    jitter: f64,
    trend: f64,
    alpha: DVector<f64>,
    inv_ones: DVector<f64>,
    ones_inv_ones: f64,
    log_likelihood: f64,
}

impl std::fmt::Debug for SkModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SkModel")
            .field("n", &self.data.n())
            .field("trend", &self.trend())
            .field("params", &self.params())
            .field("jitter", &self.jitter)
            .field("log_likelihood", &self.log_likelihood())
            .finish()
    }
}

fn check_data(designs: &[Vec<f64>], means: &[f64], noise: &[f64]) -> Result<usize> {
    let n = designs.len();
    if n == 0 {
        return Err(Error::invalid("no training designs"));
    }
    if means.len() != n || noise.len() != n {
        return Err(Error::invalid("designs, means and noise differ in length"));
    }
    let d = designs[0].len();
    if d == 0 || designs.iter().any(|x| x.len() != d) {
        return Err(Error::invalid("design vectors must share a positive dimension"));
    }
    if designs.iter().flatten().chain(means).any(|v| !v.is_finite()) {
        return Err(Error::invalid("non-finite design or mean"));
    }
    if noise.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
        return Err(Error::invalid("intrinsic variances must be finite and nonnegative"));
    }
    Ok(d)
}

impl SkModel {
    /// Builds a model at fixed kernel parameters (original units), with the
    /// trend set to its generalized-least-squares value.
    pub fn with_params(
        designs: &[Vec<f64>],
        means: &[f64],
        noise: &[f64],
        params: &KernelParams,
    ) -> Result<Self> {
        let d = check_data(designs, means, noise)?;
        params.validate()?;
        if params.length_scales.len() != d {
            return Err(Error::invalid("length-scale count differs from design dimension"));
        }
        let opts = FitOptions::default();
        let scaling = Scaling::from_data(designs, means);
        let data = scaled_training(&scaling, designs, means, noise);
        let internal = scaling.params_in(params);
        Self::assemble(scaling, data, internal, opts.min_jitter, opts.max_jitter)
    }

    fn assemble(
        scaling: Scaling,
        data: Training,
        params: KernelParams,
        min_jitter: f64,
        max_jitter: f64,
    ) -> Result<Self> {
        let Some(prof) = profile(&data, &params, min_jitter, max_jitter) else {
            let out = scaling.params_out(&params);
            return Err(Error::ModelFit {
                process_variance: out.process_variance,
                length_scales: out.length_scales,
            });
        };
        // The jitter only repairs the factorization; refine the predictor
        // weights against the covariance without it.
        let k = data.covariance(&params);
        let chol = prof.factored.chol;
        let inv_y = refine(&k, &chol, &data.y, &prof.alpha + &prof.inv_ones * prof.trend);
        let inv_ones = refine(&k, &chol, &DVector::from_element(data.n(), 1.0), prof.inv_ones.clone());
        let ones_inv_ones = inv_ones.sum();
        let (trend, alpha, inv_ones, ones_inv_ones) = if ones_inv_ones > 0.0 {
            let trend = inv_y.sum() / ones_inv_ones;
            (trend, &inv_y - &inv_ones * trend, inv_ones, ones_inv_ones)
        } else {
            (prof.trend, prof.alpha, prof.inv_ones, prof.ones_inv_ones)
        };
        Ok(SkModel {
            scaling,
            data,
            params,
            chol,
            jitter: prof.factored.jitter,
            trend,
            alpha,
            inv_ones,
            ones_inv_ones,
            log_likelihood: prof.log_likelihood,
        })
    }

    /// Kernel parameters in original units.
    pub fn params(&self) -> KernelParams {
        self.scaling.params_out(&self.params)
    }

    /// Constant trend β₀ in original units.
    pub fn trend(&self) -> f64 {
        self.scaling.y_center + self.scaling.y_scale * self.trend
    }

    /// Diagonal jitter that was added, in original output units squared.
    pub fn jitter(&self) -> f64 {
        self.jitter * self.scaling.y_scale.powi(2)
    }

    /// Profile log-likelihood of the sample means, in original units.
    pub fn log_likelihood(&self) -> f64 {
        self.log_likelihood - self.data.n() as f64 * self.scaling.y_scale.ln()
    }

    pub fn dimension(&self) -> usize {
        self.params.length_scales.len()
    }

    /// Prediction at `x`: trend plus the kriging correction, with the
    /// variance including the trend-estimation term and clamped at zero.
    pub fn predict(&self, x: &[f64]) -> Result<Prediction> {
        if x.len() != self.dimension() {
            return Err(Error::invalid(format!(
                "prediction point has dimension {}, model has {}",
                x.len(),
                self.dimension()
            )));
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("non-finite prediction point"));
        }
        let xs = self.scaling.x(x);
        let k = DVector::from_iterator(
            self.data.n(),
            self.data.x.iter().map(|xi| kernel_cov(&xs, xi, &self.params)),
        );
        let mean = self.trend + k.dot(&self.alpha);
        let inv_k = self.chol.solve(&k);
        let gamma = 1.0 - self.inv_ones.dot(&k);
        let variance = self.params.process_variance - k.dot(&inv_k) + gamma * gamma / self.ones_inv_ones;
        Ok(Prediction {
            mean: self.scaling.y_center + self.scaling.y_scale * mean,
            variance: variance.max(0.0) * self.scaling.y_scale.powi(2),
        })
    }
}

fn scaled_training(scaling: &Scaling, designs: &[Vec<f64>], means: &[f64], noise: &[f64]) -> Training {
    let x = designs.iter().map(|x| scaling.x(x)).collect();
    let y = DVector::from_iterator(
        means.len(),
        means.iter().map(|m| (m - scaling.y_center) / scaling.y_scale),
    );
    let s2 = scaling.y_scale.powi(2);
    Training::new(x, y, noise.iter().map(|v| v / s2).collect())
}

/// Profile log-likelihood of `means` at fixed parameters (original units).
pub fn log_likelihood(
    designs: &[Vec<f64>],
    means: &[f64],
    noise: &[f64],
    params: &KernelParams,
) -> Result<f64> {
    SkModel::with_params(designs, means, noise, params).map(|m| m.log_likelihood())
}

fn to_theta(p: &KernelParams) -> Vec<f64> {
    std::iter::once(p.process_variance.ln())
        .chain(p.length_scales.iter().map(|l| l.ln()))
        .collect()
}

fn from_theta(theta: &[f64]) -> KernelParams {
    KernelParams {
        process_variance: theta[0].exp(),
        length_scales: theta[1..].iter().map(|t| t.exp()).collect(),
    }
}

/// Latin-hypercube sample of `count` points in the box.
fn latin_hypercube(count: usize, lower: &[f64], upper: &[f64], rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let dim = lower.len();
    let mut points = vec![vec![0.0; dim]; count];
    for q in 0..dim {
        let mut strata: Vec<usize> = (0..count).collect();
        strata.shuffle(rng);
        for (point, s) in points.iter_mut().zip(strata) {
            let u = (s as f64 + rng.random::<f64>()) / count as f64;
            point[q] = lower[q] + u * (upper[q] - lower[q]);
        }
    }
    points
}

/// Fits a model to raw training data by maximum likelihood.
pub fn fit_data(
    designs: &[Vec<f64>],
    means: &[f64],
    noise: &[f64],
    opts: &FitOptions,
) -> Result<SkModel> {
    let d = check_data(designs, means, noise)?;
    let distinct = designs.iter().any(|x| x != &designs[0]);
    if designs.len() < 2 || !distinct {
        return Err(Error::invalid("fitting needs at least two distinct design points"));
    }
    let scaling = Scaling::from_data(designs, means);
    let data = scaled_training(&scaling, designs, means, noise);

    let mut lower = vec![PROCESS_VARIANCE_BOUNDS.0.ln()];
    let mut upper = vec![PROCESS_VARIANCE_BOUNDS.1.ln()];
    lower.extend(std::iter::repeat_n(LENGTH_SCALE_BOUNDS.0.ln(), d));
    upper.extend(std::iter::repeat_n(LENGTH_SCALE_BOUNDS.1.ln(), d));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut starts = Vec::new();
    if let Some(warm) = &opts.warm_start {
        if warm.length_scales.len() == d && warm.validate().is_ok() {
            starts.push(to_theta(&scaling.params_in(warm)));
        }
    }
    starts.extend(latin_hypercube(opts.restarts, &lower, &upper, &mut rng));
    if starts.is_empty() {
        return Err(Error::invalid("likelihood search needs at least one start"));
    }

    let settings = optimize::Settings {
        max_evaluations: opts.max_evaluations,
        ..Default::default()
    };
    let nll = |theta: &[f64]| {
        profile(&data, &from_theta(theta), opts.min_jitter, opts.max_jitter)
            .map_or(f64::INFINITY, |p| -p.log_likelihood)
    };
    let mut best: Option<optimize::Minimum> = None;
    for start in &starts {
        let m = optimize::minimize(nll, start, &lower, &upper, settings);
        if best.as_ref().is_none_or(|b| m.value < b.value) {
            best = Some(m);
        }
    }
    let best = best.expect("at least one start");
    SkModel::assemble(scaling, data, from_theta(&best.x), opts.min_jitter, opts.max_jitter)
}

/// Fits the model of objective `j` from a sample store.
pub fn fit(designs: &[Vec<f64>], store: &SampleStore, j: usize, opts: &FitOptions) -> Result<SkModel> {
    if designs.len() != store.designs() {
        return Err(Error::invalid("design matrix and sample store disagree on the design count"));
    }
    if j >= store.objectives() {
        return Err(Error::invalid(format!("objective {j} out of range")));
    }
    let means: Vec<f64> = store.means().iter().map(|m| m[j]).collect();
    let noise = intrinsic_cov(store, j)?;
    fit_data(designs, &means, &noise, opts)
}

/// Fits one model per objective. `warm` holds previous optima by objective.
pub fn fit_objectives(
    designs: &[Vec<f64>],
    store: &SampleStore,
    opts: &FitOptions,
    warm: Option<&[KernelParams]>,
    exec: Execution,
) -> Result<Vec<SkModel>> {
    exec.map_indices(store.objectives(), |j| {
        let mut o = opts.clone();
        o.seed = opts.seed.wrapping_add(j as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        o.warm_start = warm.and_then(|w| w.get(j).cloned());
        fit(designs, store, j, &o)
    })
    .into_iter()
    .collect()
}

/// Predicted means and standard deviations at every design, `n × m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Predictions {
    pub mean: Vec<Vec<f64>>,
    pub sd: Vec<Vec<f64>>,
}

impl Predictions {
    pub fn from_models(models: &[SkModel], designs: &[Vec<f64>]) -> Result<Self> {
        let mut mean = Vec::with_capacity(designs.len());
        let mut sd = Vec::with_capacity(designs.len());
        for x in designs {
            let preds = models.iter().map(|m| m.predict(x)).collect::<Result<Vec<_>>>()?;
            mean.push(preds.iter().map(|p| p.mean).collect());
            sd.push(preds.iter().map(|p| p.sd()).collect());
        }
        Ok(Predictions { mean, sd })
    }

    pub fn len(&self) -> usize {
        self.mean.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mean.is_empty()
    }

    /// Prediction variances ŝ².
    pub fn variances(&self) -> Vec<Vec<f64>> {
        self.sd
            .iter()
            .map(|row| row.iter().map(|s| s * s).collect())
            .collect()
    }
}
