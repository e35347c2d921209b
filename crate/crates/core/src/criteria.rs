//! Sampling criteria and the front of designs that maximize both.

use serde::{Deserialize, Serialize};

use crate::dominance::pareto_front;
use crate::{Error, Result};

/// Posterior distance between a sample-mean vector and a prediction,
/// inflated by the prediction standard deviation on each objective:
/// `sqrt(Σ_j (|f̄_j - f̂_j| + ŝ_j)²)`.
pub fn posterior_distance(mean: &[f64], predicted: &[f64], predicted_sd: &[f64]) -> Result<f64> {
    if mean.len() != predicted.len() || mean.len() != predicted_sd.len() {
        return Err(Error::invalid("mean, prediction and sd differ in length"));
    }
    if mean.iter().chain(predicted).chain(predicted_sd).any(|v| !v.is_finite()) {
        return Err(Error::invalid("non-finite value in posterior distance"));
    }
    if predicted_sd.iter().any(|&s| s < 0.0) {
        return Err(Error::invalid("negative prediction sd"));
    }
    Ok(mean
        .iter()
        .zip(predicted)
        .zip(predicted_sd)
        .map(|((m, p), s)| ((m - p).abs() + s).powi(2))
        .sum::<f64>()
        .sqrt())
}

/// Min–max scaling to [0, 1]; a constant column maps to zeros.
pub fn normalize(values: &[f64]) -> Vec<f64> {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = hi - lo;
    values
        .iter()
        .map(|v| if span > 0.0 { (v - lo) / span } else { 0.0 })
        .collect()
}

/// Criterion values of the designs considered in one iteration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriteriaScores {
    pub ids: Vec<usize>,
    pub ehvd: Vec<f64>,
    pub pd: Vec<f64>,
}

impl CriteriaScores {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ehvd_normalized(&self) -> Vec<f64> {
        normalize(&self.ehvd)
    }

    pub fn pd_normalized(&self) -> Vec<f64> {
        normalize(&self.pd)
    }

    fn check(&self) -> Result<()> {
        if self.ids.is_empty() {
            return Err(Error::InvalidState("no retained designs to score".into()));
        }
        if self.ehvd.len() != self.ids.len() || self.pd.len() != self.ids.len() {
            return Err(Error::invalid("criteria columns differ in length"));
        }
        Ok(())
    }

    /// Positions sorted by descending EHVD, then descending PD, then ascending id.
    fn ordered(&self, mut positions: Vec<usize>) -> Vec<usize> {
        positions.sort_by(|&a, &b| {
            self.ehvd[b]
                .total_cmp(&self.ehvd[a])
                .then(self.pd[b].total_cmp(&self.pd[a]))
                .then(self.ids[a].cmp(&self.ids[b]))
        });
        positions.into_iter().map(|p| self.ids[p]).collect()
    }
}

/// Design ids on the Pareto front of (EHVD, PD) under joint maximization,
/// in allocation order.
pub fn criteria_front(scores: &CriteriaScores) -> Result<Vec<usize>> {
    scores.check()?;
    let negated: Vec<[f64; 2]> = scores
        .ehvd
        .iter()
        .zip(&scores.pd)
        .map(|(e, p)| [-e, -p])
        .collect();
    Ok(scores.ordered(pareto_front(&negated)?))
}

/// Which criterion drives a single-criterion variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SingleCriterion {
    Ehvd,
    Pd,
}

/// Design ids attaining the maximum of one criterion, by ascending id. This
/// is the one-dimensional counterpart of [`criteria_front`].
pub fn single_criterion_front(scores: &CriteriaScores, which: SingleCriterion) -> Result<Vec<usize>> {
    scores.check()?;
    let col = match which {
        SingleCriterion::Ehvd => &scores.ehvd,
        SingleCriterion::Pd => &scores.pd,
    };
    let best = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut ids: Vec<usize> = col
        .iter()
        .zip(&scores.ids)
        .filter(|(v, _)| **v == best)
        .map(|(_, &id)| id)
        .collect();
    ids.sort_unstable();
    Ok(ids)
}
