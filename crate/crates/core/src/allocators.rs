//! Replication allocation: EQUAL, MOCBA, and the kriging-based sequential
//! allocator with its screening and single-criterion variants.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::criteria::{criteria_front, posterior_distance, single_criterion_front, CriteriaScores, SingleCriterion};
use crate::dominance::{pareto_front, ParetoState};
use crate::exec::Execution;
use crate::hypervolume::{ehvd, RefPoint};
use crate::kriging::Predictions;
use crate::samples::SampleStore;
use crate::screening::{confidence_bounds, screen, ScreeningMode};
use crate::{Error, Result};

/// Additional replications per design for one iteration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AllocationPlan {
    pub counts: Vec<usize>,
}

impl AllocationPlan {
    pub fn zeros(n: usize) -> Self {
        AllocationPlan { counts: vec![0; n] }
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Designs that receive at least one replication.
    pub fn recipients(&self) -> Vec<usize> {
        (0..self.counts.len()).filter(|&i| self.counts[i] > 0).collect()
    }
}

/// `⌊B/n⌋` each; the remainder goes one per design in ascending id order.
pub fn allocate_equal(n: usize, budget: usize) -> Result<AllocationPlan> {
    if n == 0 {
        return Err(Error::invalid("cannot allocate over an empty design set"));
    }
    let base = budget / n;
    let extra = budget % n;
    Ok(AllocationPlan {
        counts: (0..n).map(|i| base + usize::from(i < extra)).collect(),
    })
}

/// Rounds `budget · w_i / Σw` to integers summing to `budget`; leftover units
/// go to the largest fractional parts, ties to the lowest id.
pub fn largest_remainder(weights: &[f64], budget: usize) -> Result<AllocationPlan> {
    let total: f64 = weights.iter().sum();
    if weights.is_empty() || weights.iter().any(|w| !w.is_finite() || *w < 0.0) || !(total > 0.0) {
        return Err(Error::invalid("weights must be finite, non-negative and not all zero"));
    }
    let quotas: Vec<f64> = weights.iter().map(|w| budget as f64 * w / total).collect();
    let mut counts: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let assigned: usize = counts.iter().sum();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| {
        let fa = quotas[a] - quotas[a].floor();
        let fb = quotas[b] - quotas[b].floor();
        fb.total_cmp(&fa).then(a.cmp(&b))
    });
    for &i in order.iter().take(budget.saturating_sub(assigned)) {
        counts[i] += 1;
    }
    Ok(AllocationPlan { counts })
}

/// Classification and raw allocation ratios of the simplified MOCBA rule.
///
/// `δ_ipj = f̄_ij − f̄_pj` is positive when `p` is better than `i` on `j`.
/// For a pair, the critical objective `j^i_p` is where `δ|δ|/(τ²_ij+τ²_pj)`
/// is smallest, i.e. where `p` is least convincingly better; the strongest
/// dominator `p_i` maximizes that value over `p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MocbaState {
    means: Vec<Vec<f64>>,
    var: Vec<Vec<f64>>,
    /// |δ| floor per objective.
    floor: Vec<f64>,
    /// `p_i`.
    pub strongest: Vec<usize>,
    /// `j^i_{p_i}`.
    pub critical: Vec<usize>,
    /// Membership in S_A (designs likely dominated); the rest form S_B.
    pub in_a: Vec<bool>,
    /// Raw ratios, the S_A member with the largest ratio anchored at 1.
    pub alpha: Vec<f64>,
}

impl MocbaState {
    /// `means` and `var` (variances of the means) are `n × m`.
    pub fn new(means: &[Vec<f64>], var: &[Vec<f64>]) -> Result<Self> {
        let n = means.len();
        if n < 2 {
            return Err(Error::invalid("MOCBA needs at least two designs"));
        }
        if var.len() != n {
            return Err(Error::invalid("means and variances cover different design counts"));
        }
        let m = means[0].len();
        for (mu, v) in means.iter().zip(var) {
            if mu.len() != m || v.len() != m {
                return Err(Error::invalid("ragged objective matrix"));
            }
            if mu.iter().chain(v).any(|x| !x.is_finite()) || v.iter().any(|x| *x < 0.0) {
                return Err(Error::invalid("means and variances must be finite, variances non-negative"));
            }
        }
        let floor: Vec<f64> = (0..m)
            .map(|j| {
                let lo = means.iter().map(|r| r[j]).fold(f64::INFINITY, f64::min);
                let hi = means.iter().map(|r| r[j]).fold(f64::NEG_INFINITY, f64::max);
                let range = if hi > lo { hi - lo } else { 1.0 };
                1e-12 * range
            })
            .collect();
        let mut state = MocbaState {
            means: means.to_vec(),
            var: var.to_vec(),
            floor,
            strongest: vec![0; n],
            critical: vec![0; n],
            in_a: vec![false; n],
            alpha: vec![0.0; n],
        };
        for i in 0..n {
            let mut best = (usize::MAX, 0usize, f64::NEG_INFINITY);
            for p in (0..n).filter(|&p| p != i) {
                let j = state.critical_objective(i, p);
                let s = state.score(i, p, j);
                if s > best.2 || best.0 == usize::MAX {
                    best = (p, j, s);
                }
            }
            state.strongest[i] = best.0;
            state.critical[i] = best.1;
        }
        for h in 0..n {
            let own = state.squared_score(h, state.strongest[h], state.critical[h]);
            let rival = (0..n)
                .filter(|&i| state.strongest[i] == h)
                .map(|i| state.squared_score(i, h, state.critical[i]))
                .fold(f64::INFINITY, f64::min);
            state.in_a[h] = own < rival;
        }
        state.alpha = state.raw_ratios();
        Ok(state)
    }

    pub fn designs(&self) -> usize {
        self.means.len()
    }

    /// `δ_ipj` with its magnitude floored away from zero.
    pub fn delta(&self, i: usize, p: usize, j: usize) -> f64 {
        let d = self.means[i][j] - self.means[p][j];
        if d.abs() < self.floor[j] {
            if d < 0.0 {
                -self.floor[j]
            } else {
                self.floor[j]
            }
        } else {
            d
        }
    }

    fn pair_var(&self, i: usize, p: usize, j: usize) -> f64 {
        self.var[i][j] + self.var[p][j]
    }

    /// `δ|δ| / (τ²_ij + τ²_pj)`.
    pub fn score(&self, i: usize, p: usize, j: usize) -> f64 {
        let d = self.delta(i, p, j);
        let v = self.pair_var(i, p, j);
        if v > 0.0 {
            d * d.abs() / v
        } else {
            d.signum() * f64::INFINITY
        }
    }

    /// `δ² / (τ²_ij + τ²_pj)`.
    fn squared_score(&self, i: usize, p: usize, j: usize) -> f64 {
        let d = self.delta(i, p, j);
        let v = self.pair_var(i, p, j);
        if v > 0.0 {
            d * d / v
        } else {
            f64::INFINITY
        }
    }

    /// `j^i_p`; ties go to the lowest objective index.
    pub fn critical_objective(&self, i: usize, p: usize) -> usize {
        let m = self.means[0].len();
        let mut best = 0;
        for j in 1..m {
            if self.score(i, p, j) < self.score(i, p, best) {
                best = j;
            }
        }
        best
    }

    pub fn set_a(&self) -> Vec<usize> {
        (0..self.designs()).filter(|&i| self.in_a[i]).collect()
    }

    pub fn set_b(&self) -> Vec<usize> {
        (0..self.designs()).filter(|&i| !self.in_a[i]).collect()
    }

    /// Members of S_A whose strongest dominator is `d`.
    pub fn dominated_by(&self, d: usize) -> Vec<usize> {
        (0..self.designs())
            .filter(|&h| self.in_a[h] && self.strongest[h] == d)
            .collect()
    }

    fn raw_ratios(&self) -> Vec<f64> {
        let n = self.designs();
        let mut alpha = vec![0.0; n];
        let a = self.set_a();
        if a.is_empty() {
            return alpha;
        }
        for &h in &a {
            let j = self.critical[h];
            let t = self.var[h][j] / self.delta(h, self.strongest[h], j);
            alpha[h] = t * t;
        }
        let anchor = a.iter().map(|&h| alpha[h]).fold(0.0, f64::max);
        if anchor > 0.0 && anchor.is_finite() {
            for &h in &a {
                alpha[h] /= anchor;
            }
        }
        let mut orphans = Vec::new();
        let mut parents = Vec::new();
        for d in self.set_b() {
            let members = self.dominated_by(d);
            if members.is_empty() {
                orphans.push(d);
                continue;
            }
            let sum: f64 = members
                .iter()
                .map(|&h| {
                    let j = self.critical[h];
                    self.var[d][j] / self.var[h][j] * alpha[h] * alpha[h]
                })
                .sum();
            alpha[d] = sum.sqrt();
            parents.push(d);
        }
        let fill = if parents.is_empty() {
            1.0
        } else {
            parents.iter().map(|&d| alpha[d]).sum::<f64>() / parents.len() as f64
        };
        for d in orphans {
            alpha[d] = fill;
        }
        alpha
    }
}

pub fn mocba_classify(store: &SampleStore) -> Result<MocbaState> {
    MocbaState::new(store.means(), &store.mean_variances()?)
}

/// Normalizes the MOCBA ratios to `budget`. Falls back to EQUAL when S_A is
/// empty or the ratios are degenerate (for example under zero variance).
pub fn allocate_mocba_from(means: &[Vec<f64>], var: &[Vec<f64>], budget: usize) -> Result<AllocationPlan> {
    let state = MocbaState::new(means, var)?;
    if state.set_a().is_empty() {
        return allocate_equal(state.designs(), budget);
    }
    match largest_remainder(&state.alpha, budget) {
        Ok(plan) => Ok(plan),
        Err(_) => allocate_equal(state.designs(), budget),
    }
}

pub fn allocate_mocba(store: &SampleStore, budget: usize) -> Result<AllocationPlan> {
    allocate_mocba_from(store.means(), &store.mean_variances()?, budget)
}

/// How the sequential allocator picks the designs it samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Selection {
    /// Non-dominated designs of (EHVD, PD).
    Combined,
    Single(SingleCriterion),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkmorsDiagnostics {
    pub retained: Vec<usize>,
    pub screened: Vec<usize>,
    pub scores: CriteriaScores,
    pub front: Vec<usize>,
    pub reference: RefPoint,
}

/// One iteration of the sequential allocator: screen, score the retained
/// designs, and hand out the budget one replication at a time over the
/// criteria front, pass after pass.
pub fn skmors_iterate(
    store: &SampleStore,
    preds: &Predictions,
    budget: usize,
    mode: ScreeningMode,
    selection: Selection,
    omega: f64,
    exec: Execution,
) -> Result<(AllocationPlan, SkmorsDiagnostics)> {
    let n = store.designs();
    if preds.len() != n {
        return Err(Error::invalid("predictions and sample store disagree on the design count"));
    }
    let means = store.means();
    let state = ParetoState::new(means, &preds.mean)?;
    let bounds = confidence_bounds(store, preds, omega)?;
    let screening = screen(mode, &bounds, &state)?;
    let reference = RefPoint::from_vectors(means, &preds.mean)?;

    let scored = exec.map_slice(&screening.retained, |&i| -> Result<(f64, f64)> {
        Ok((
            ehvd(i, &state, means, &preds.mean, &reference)?,
            posterior_distance(&means[i], &preds.mean[i], &preds.sd[i])?,
        ))
    });
    let scored = scored.into_iter().collect::<Result<Vec<_>>>()?;
    let scores = CriteriaScores {
        ids: screening.retained.clone(),
        ehvd: scored.iter().map(|s| s.0).collect(),
        pd: scored.iter().map(|s| s.1).collect(),
    };
    let front = match selection {
        Selection::Combined => criteria_front(&scores)?,
        Selection::Single(which) => single_criterion_front(&scores, which)?,
    };
    if budget > 0 && front.is_empty() {
        return Err(Error::InvalidState("empty criteria front with budget left".into()));
    }
    let mut plan = AllocationPlan::zeros(n);
    for k in 0..budget {
        plan.counts[front[k % front.len()]] += 1;
    }
    Ok((
        plan,
        SkmorsDiagnostics {
            retained: screening.retained,
            screened: screening.screened,
            scores,
            front,
            reference,
        },
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "SKMORS_none")]
    SkmorsNone,
    #[serde(rename = "SKMORS_box")]
    SkmorsBox,
    #[serde(rename = "SKMORS_band")]
    SkmorsBand,
    #[serde(rename = "SKMORS_PD")]
    SkmorsPd,
    #[serde(rename = "SKMORS_HV")]
    SkmorsHv,
    #[serde(rename = "EQUAL")]
    Equal,
    #[serde(rename = "EQUAL_SKi")]
    EqualSki,
    #[serde(rename = "MOCBA")]
    Mocba,
    #[serde(rename = "MOCBA_SK")]
    MocbaSk,
    #[serde(rename = "MOCBA_SKi")]
    MocbaSki,
}

impl Variant {
    pub const ALL: [Variant; 10] = [
        Variant::SkmorsNone,
        Variant::SkmorsBox,
        Variant::SkmorsBand,
        Variant::SkmorsPd,
        Variant::SkmorsHv,
        Variant::Equal,
        Variant::EqualSki,
        Variant::Mocba,
        Variant::MocbaSk,
        Variant::MocbaSki,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::SkmorsNone => "SKMORS_none",
            Variant::SkmorsBox => "SKMORS_box",
            Variant::SkmorsBand => "SKMORS_band",
            Variant::SkmorsPd => "SKMORS_PD",
            Variant::SkmorsHv => "SKMORS_HV",
            Variant::Equal => "EQUAL",
            Variant::EqualSki => "EQUAL_SKi",
            Variant::Mocba => "MOCBA",
            Variant::MocbaSk => "MOCBA_SK",
            Variant::MocbaSki => "MOCBA_SKi",
        }
    }

    /// Whether the variant fits kriging models at all.
    pub fn needs_models(self) -> bool {
        !matches!(self, Variant::Equal | Variant::Mocba)
    }

    /// Whether the final Pareto set comes from the predictions.
    pub fn identifies_with_predictions(self) -> bool {
        self.needs_models()
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Config(format!("unknown variant '{s}'")))
    }
}

/// Everything an allocator may look at in one iteration.
#[derive(Debug, Clone, Copy)]
pub struct IterationInput<'a> {
    pub store: &'a SampleStore,
    /// Present for variants that need models.
    pub predictions: Option<&'a Predictions>,
    pub budget: usize,
    pub omega: f64,
    pub exec: Execution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Allocation {
    pub plan: AllocationPlan,
    /// Designs considered after screening.
    pub retained: usize,
    /// Designs the allocator targeted this iteration.
    pub front_size: usize,
}

pub trait Allocator: Send + Sync {
    fn variant(&self) -> Variant;

    fn allocate(&self, input: &IterationInput<'_>) -> Result<Allocation>;

    /// Designs declared Pareto optimal.
    fn identify(&self, store: &SampleStore, predictions: Option<&Predictions>) -> Result<Vec<usize>>;
}

struct VariantAllocator(Variant);

fn require<'a>(p: Option<&'a Predictions>, v: Variant) -> Result<&'a Predictions> {
    p.ok_or_else(|| Error::InvalidState(format!("{v} needs model predictions")))
}

impl Allocator for VariantAllocator {
    fn variant(&self) -> Variant {
        self.0
    }

    fn allocate(&self, input: &IterationInput<'_>) -> Result<Allocation> {
        let n = input.store.designs();
        let sk = |mode, selection| -> Result<Allocation> {
            let preds = require(input.predictions, self.0)?;
            let (plan, diag) = skmors_iterate(input.store, preds, input.budget, mode, selection, input.omega, input.exec)?;
            Ok(Allocation {
                plan,
                retained: diag.retained.len(),
                front_size: diag.front.len(),
            })
        };
        let whole = |plan: AllocationPlan| Allocation {
            front_size: plan.recipients().len(),
            retained: n,
            plan,
        };
        match self.0 {
            Variant::SkmorsNone => sk(ScreeningMode::None, Selection::Combined),
            Variant::SkmorsBox => sk(ScreeningMode::Box, Selection::Combined),
            Variant::SkmorsBand => sk(ScreeningMode::Band, Selection::Combined),
            Variant::SkmorsPd => sk(ScreeningMode::Box, Selection::Single(SingleCriterion::Pd)),
            Variant::SkmorsHv => sk(ScreeningMode::Box, Selection::Single(SingleCriterion::Ehvd)),
            Variant::Equal | Variant::EqualSki => Ok(whole(allocate_equal(n, input.budget)?)),
            Variant::Mocba | Variant::MocbaSki => Ok(whole(allocate_mocba(input.store, input.budget)?)),
            Variant::MocbaSk => {
                let preds = require(input.predictions, self.0)?;
                Ok(whole(allocate_mocba_from(&preds.mean, &preds.variances(), input.budget)?))
            }
        }
    }

    fn identify(&self, store: &SampleStore, predictions: Option<&Predictions>) -> Result<Vec<usize>> {
        if self.0.identifies_with_predictions() {
            pareto_front(&require(predictions, self.0)?.mean)
        } else {
            pareto_front(store.means())
        }
    }
}

pub fn allocator_for(variant: Variant) -> Box<dyn Allocator> {
    Box::new(VariantAllocator(variant))
}

pub fn make_allocator(name: &str) -> Result<Box<dyn Allocator>> {
    Ok(allocator_for(name.parse()?))
}
