//! Confidence bounds and the Box / Band screening rules.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dominance::ParetoState;
use crate::kriging::Predictions;
use crate::samples::SampleStore;
use crate::{Error, Result};

pub const DEFAULT_OMEGA: f64 = 3.0;

/// Per design and objective: `f̄ ± ω·s/√r` and `f̂ ± ω·ŝ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceBounds {
    pub omega: f64,
    pub lcb: Vec<Vec<f64>>,
    pub ucb: Vec<Vec<f64>>,
    pub pred_lcb: Vec<Vec<f64>>,
    pub pred_ucb: Vec<Vec<f64>>,
}

impl ConfidenceBounds {
    /// Builds bounds from centres and half-width scales given directly.
    pub fn from_parts(
        omega: f64,
        means: &[Vec<f64>],
        mean_sd: &[Vec<f64>],
        predicted: &[Vec<f64>],
        predicted_sd: &[Vec<f64>],
    ) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::invalid(format!("omega must be positive, got {omega}")));
        }
        let n = means.len();
        if mean_sd.len() != n || predicted.len() != n || predicted_sd.len() != n {
            return Err(Error::invalid("bound inputs cover different design counts"));
        }
        let side = |c: &[Vec<f64>], s: &[Vec<f64>], sign: f64| -> Result<Vec<Vec<f64>>> {
            c.iter()
                .zip(s)
                .map(|(c, s)| {
                    if c.len() != s.len() {
                        return Err(Error::invalid("centre and scale differ in length"));
                    }
                    Ok(c.iter().zip(s).map(|(c, s)| c + sign * omega * s).collect())
                })
                .collect()
        };
        Ok(ConfidenceBounds {
            omega,
            lcb: side(means, mean_sd, -1.0)?,
            ucb: side(means, mean_sd, 1.0)?,
            pred_lcb: side(predicted, predicted_sd, -1.0)?,
            pred_ucb: side(predicted, predicted_sd, 1.0)?,
        })
    }

    pub fn designs(&self) -> usize {
        self.lcb.len()
    }
}

pub fn confidence_bounds(store: &SampleStore, preds: &Predictions, omega: f64) -> Result<ConfidenceBounds> {
    let mean_sd = (0..store.designs())
        .map(|i| (0..store.objectives()).map(|j| store.mean_sd(i, j)).collect())
        .collect::<Result<Vec<Vec<f64>>>>()?;
    ConfidenceBounds::from_parts(omega, store.means(), &mean_sd, &preds.mean, &preds.sd)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScreeningMode {
    #[default]
    None,
    Box,
    Band,
}

impl fmt::Display for ScreeningMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScreeningMode::None => "none",
            ScreeningMode::Box => "box",
            ScreeningMode::Band => "band",
        })
    }
}

impl FromStr for ScreeningMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "none" => Ok(ScreeningMode::None),
            "box" => Ok(ScreeningMode::Box),
            "band" => Ok(ScreeningMode::Band),
            _ => Err(Error::Config(format!("unknown screening mode '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreeningResult {
    pub retained: Vec<usize>,
    pub screened: Vec<usize>,
}

impl ScreeningResult {
    fn from_flags(flags: Vec<bool>) -> Self {
        let (screened, retained): (Vec<usize>, Vec<usize>) = (0..flags.len()).partition(|&i| flags[i]);
        ScreeningResult { retained, screened }
    }
}

fn check(bounds: &ConfidenceBounds, state: &ParetoState) -> Result<()> {
    let n = bounds.designs();
    if state.observed.is_empty() || state.predicted.is_empty() {
        return Err(Error::InvalidState("screening needs non-empty fronts".into()));
    }
    if state.observed.iter().chain(&state.predicted).any(|&i| i >= n) {
        return Err(Error::invalid("front member out of range"));
    }
    Ok(())
}

/// Columnwise maximum of `rows[k]` over `members`.
fn worst(rows: &[Vec<f64>], members: &[usize]) -> Vec<f64> {
    let m = rows[members[0]].len();
    (0..m)
        .map(|j| members.iter().map(|&k| rows[k][j]).fold(f64::NEG_INFINITY, f64::max))
        .collect()
}

/// Screens every off-front design that, on some objective, lies beyond the
/// worst upper bound of both the observed and the predicted front.
pub fn screen_box(bounds: &ConfidenceBounds, state: &ParetoState) -> Result<ScreeningResult> {
    check(bounds, state)?;
    let u = worst(&bounds.ucb, &state.observed);
    let u_hat = worst(&bounds.pred_ucb, &state.predicted);
    let off = state.off_front(bounds.designs());
    let mut flags = vec![false; bounds.designs()];
    for i in off {
        flags[i] = (0..u.len()).any(|j| bounds.lcb[i][j] > u[j] && bounds.pred_lcb[i][j] > u_hat[j]);
    }
    Ok(ScreeningResult::from_flags(flags))
}

/// Front member whose upper bound is closest to `lower`; ties go to the lowest id.
fn nearest(lower: &[f64], upper: &[Vec<f64>], members: &[usize]) -> usize {
    let dist = |k: usize| -> f64 {
        lower
            .iter()
            .zip(&upper[k])
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    };
    let mut best = usize::MAX;
    let mut best_d = f64::INFINITY;
    for &k in members {
        let d = dist(k);
        if d < best_d || (d == best_d && k < best) {
            best = k;
            best_d = d;
        }
    }
    best
}

/// Like [`screen_box`], but compares each design against its nearest front
/// member instead of the worst one.
pub fn screen_band(bounds: &ConfidenceBounds, state: &ParetoState) -> Result<ScreeningResult> {
    check(bounds, state)?;
    let off = state.off_front(bounds.designs());
    let mut flags = vec![false; bounds.designs()];
    for i in off {
        let u = nearest(&bounds.lcb[i], &bounds.ucb, &state.observed);
        let v = nearest(&bounds.pred_lcb[i], &bounds.pred_ucb, &state.predicted);
        flags[i] = (0..bounds.lcb[i].len())
            .any(|j| bounds.lcb[i][j] > bounds.ucb[u][j] && bounds.pred_lcb[i][j] > bounds.pred_ucb[v][j]);
    }
    Ok(ScreeningResult::from_flags(flags))
}

pub fn screen(mode: ScreeningMode, bounds: &ConfidenceBounds, state: &ParetoState) -> Result<ScreeningResult> {
    match mode {
        ScreeningMode::None => {
            check(bounds, state)?;
            Ok(ScreeningResult {
                retained: (0..bounds.designs()).collect(),
                screened: Vec::new(),
            })
        }
        ScreeningMode::Box => screen_box(bounds, state),
        ScreeningMode::Band => screen_band(bounds, state),
    }
}
