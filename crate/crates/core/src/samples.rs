//! Per-design replication counts, running means and sample variances.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Replication statistics for `n` designs and `m` objectives.
///
/// Every replication yields one full objective vector, so the replication
/// count is shared by all objectives of a design. Means and sums of squared
/// deviations are merged batch by batch (Chan et al. pairwise update), which
/// matches a from-scratch recomputation to rounding error for any batch
/// partition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleStore {
    objectives: usize,
    counts: Vec<usize>,
    means: Vec<Vec<f64>>,
    sq_dev: Vec<Vec<f64>>,
}

impl SampleStore {
    pub fn new(designs: usize, objectives: usize) -> Self {
        SampleStore {
            objectives,
            counts: vec![0; designs],
            means: vec![vec![0.0; objectives]; designs],
            sq_dev: vec![vec![0.0; objectives]; designs],
        }
    }

    pub fn designs(&self) -> usize {
        self.counts.len()
    }

    pub fn objectives(&self) -> usize {
        self.objectives
    }

    pub fn count(&self, i: usize) -> usize {
        self.counts[i]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total_replications(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn mean(&self, i: usize) -> &[f64] {
        &self.means[i]
    }

    pub fn means(&self) -> &[Vec<f64>] {
        &self.means
    }

    /// Unbiased sample variance of objective `j` at design `i`; `None` below two replications.
    pub fn variance(&self, i: usize, j: usize) -> Option<f64> {
        let r = self.counts[i];
        (r >= 2).then(|| self.sq_dev[i][j] / (r - 1) as f64)
    }

    /// Variance of the mean estimate, s²/r.
    pub fn mean_variance(&self, i: usize, j: usize) -> Result<f64> {
        self.variance(i, j)
            .map(|s2| s2 / self.counts[i] as f64)
            .ok_or(Error::InsufficientReplications {
                design: i,
                count: self.counts[i],
            })
    }

    /// s²/r for every design and objective.
    pub fn mean_variances(&self) -> Result<Vec<Vec<f64>>> {
        (0..self.designs())
            .map(|i| (0..self.objectives).map(|j| self.mean_variance(i, j)).collect())
            .collect()
    }

    /// Standard deviation of the mean estimate, s/√r.
    pub fn mean_sd(&self, i: usize, j: usize) -> Result<f64> {
        self.mean_variance(i, j).map(f64::sqrt)
    }

    /// Merges a batch of replications of design `i`.
    pub fn record_replications<O: AsRef<[f64]>>(&mut self, i: usize, obs: &[O]) -> Result<()> {
        if i >= self.designs() {
            return Err(Error::invalid(format!("design index {i} out of range")));
        }
        for o in obs {
            let o = o.as_ref();
            if o.len() != self.objectives {
                return Err(Error::invalid(format!(
                    "observation has {} objectives, expected {}",
                    o.len(),
                    self.objectives
                )));
            }
            if o.iter().any(|v| !v.is_finite()) {
                return Err(Error::invalid("non-finite observation"));
            }
        }
        if obs.is_empty() {
            return Ok(());
        }
        let batch = obs.len() as f64;
        let before = self.counts[i] as f64;
        let total = before + batch;
        for j in 0..self.objectives {
            let batch_mean = obs.iter().map(|o| o.as_ref()[j]).sum::<f64>() / batch;
            let batch_sq: f64 = obs
                .iter()
                .map(|o| (o.as_ref()[j] - batch_mean).powi(2))
                .sum();
            let delta = batch_mean - self.means[i][j];
            self.means[i][j] += delta * batch / total;
            self.sq_dev[i][j] += batch_sq + delta * delta * before * batch / total;
        }
        self.counts[i] += obs.len();
        Ok(())
    }

    /// Records a single replication.
    pub fn record(&mut self, i: usize, obs: &[f64]) -> Result<()> {
        self.record_replications(i, &[obs])
    }
}
