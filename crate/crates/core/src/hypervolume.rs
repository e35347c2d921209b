//! Exact bi-objective hypervolume, the hypervolume change between two
//! fronts, and the expected hypervolume difference (EHVD) of a design.

use serde::{Deserialize, Serialize};

use crate::dominance::{relation_unchecked, weakly_dominates, DomRelation, ParetoState};
use crate::{Error, Result};

/// Reference point, strictly worse than every vector that is measured.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RefPoint(pub [f64; 2]);

impl RefPoint {
    /// Per objective: the worst of all means and predictions plus 10% of the
    /// observed range of the means. A zero range falls back to a unit margin.
    pub fn from_vectors<P: AsRef<[f64]>, Q: AsRef<[f64]>>(means: &[P], predictions: &[Q]) -> Result<Self> {
        if means.is_empty() {
            return Err(Error::invalid("no vectors to place a reference point against"));
        }
        let mut r = [0.0; 2];
        for (j, slot) in r.iter_mut().enumerate() {
            let col = |v: &[f64]| -> Result<f64> {
                if v.len() != 2 {
                    return Err(Error::invalid("hypervolume is implemented for two objectives"));
                }
                Ok(v[j])
            };
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for m in means {
                let v = col(m.as_ref())?;
                lo = lo.min(v);
                hi = hi.max(v);
            }
            let range = hi - lo;
            for p in predictions {
                hi = hi.max(col(p.as_ref())?);
            }
            let margin = if range > 0.0 { 0.1 * range } else { 1.0 };
            *slot = hi + margin;
        }
        Ok(RefPoint(r))
    }
}

fn as_pair(p: &[f64]) -> Result<[f64; 2]> {
    match p {
        [a, b] if a.is_finite() && b.is_finite() => Ok([*a, *b]),
        [_, _] => Err(Error::invalid("non-finite objective value")),
        _ => Err(Error::invalid("hypervolume is implemented for two objectives")),
    }
}

fn check<P: AsRef<[f64]>>(front: &[P], r: &RefPoint) -> Result<Vec<[f64; 2]>> {
    front
        .iter()
        .map(|p| {
            let p = as_pair(p.as_ref())?;
            if p[0] < r.0[0] && p[1] < r.0[1] {
                Ok(p)
            } else {
                Err(Error::InvalidReference {
                    point: p.to_vec(),
                    reference: r.0.to_vec(),
                })
            }
        })
        .collect()
}

/// Area dominated by validated points: sort by the first objective and sweep
/// the staircase of points improving on the second.
fn area(mut pts: Vec<[f64; 2]>, r: &RefPoint) -> f64 {
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    let mut total = 0.0;
    let mut ceiling = r.0[1];
    for p in pts {
        if p[1] < ceiling {
            total += (r.0[0] - p[0]) * (ceiling - p[1]);
            ceiling = p[1];
        }
    }
    total
}

/// Hypervolume dominated by `front` and bounded by `r`. Dominated members
/// contribute nothing.
pub fn hv2d<P: AsRef<[f64]>>(front: &[P], r: &RefPoint) -> Result<f64> {
    Ok(area(check(front, r)?, r))
}

/// Area of the symmetric difference of the regions dominated by `a` and `b`:
/// `HV(A) + HV(B) - 2 HV(A ∩ B)`. The intersection of two dominated regions is
/// the region dominated by the componentwise maxima of all pairs.
pub fn ehvc<P: AsRef<[f64]>, Q: AsRef<[f64]>>(a: &[P], b: &[Q], r: &RefPoint) -> Result<f64> {
    let a = check(a, r)?;
    let b = check(b, r)?;
    let meet: Vec<[f64; 2]> = a
        .iter()
        .flat_map(|p| b.iter().map(move |q| [p[0].max(q[0]), p[1].max(q[1])]))
        .collect();
    let both = area(meet, r);
    let diff = area(a, r) + area(b, r) - 2.0 * both;
    Ok(diff.max(0.0))
}

/// The front after replacing the mean of design `i` by its prediction.
fn substituted<'a>(
    i: usize,
    front: &[usize],
    means: &'a [Vec<f64>],
    prediction: &'a [f64],
) -> Vec<&'a [f64]> {
    front
        .iter()
        .filter(|&&k| k != i)
        .map(|&k| means[k].as_slice())
        .chain(std::iter::once(prediction))
        .collect()
}

/// Signed hypervolume change `HV(PF') - HV(PF)` from substituting `f̂_i` for `f̄_i`.
fn hv_change(
    i: usize,
    state: &ParetoState,
    means: &[Vec<f64>],
    predictions: &[Vec<f64>],
    r: &RefPoint,
) -> Result<f64> {
    if i >= means.len() || i >= predictions.len() {
        return Err(Error::invalid(format!("design {i} out of range")));
    }
    let current: Vec<&[f64]> = state.observed.iter().map(|&k| means[k].as_slice()).collect();
    let replaced = substituted(i, &state.observed, means, &predictions[i]);
    Ok(hv2d(&replaced, r)? - hv2d(&current, r)?)
}

/// Expected hypervolume difference of design `i`: the absolute change of the
/// observed front's hypervolume when the sample mean of `i` is replaced by its
/// prediction. For designs off the observed front the prediction is added to
/// the unmodified front. Dominated vectors are filtered before measuring.
pub fn ehvd(
    i: usize,
    state: &ParetoState,
    means: &[Vec<f64>],
    predictions: &[Vec<f64>],
    r: &RefPoint,
) -> Result<f64> {
    hv_change(i, state, means, predictions, r).map(f64::abs)
}

/// How substituting the prediction of a design moves the observed front.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EhvdCase {
    /// Mean dominates prediction; the prediction stays non-dominated. HV decreases.
    Case1,
    /// Prediction dominates mean and is non-dominated. HV increases.
    Case2,
    /// Mean dominates prediction, which another front member dominates. HV decreases.
    Case3,
    /// Prediction dominates mean, which another front member dominates. HV increases.
    Case4,
    /// Both vectors lie in the dominated region; HV unchanged.
    Case5,
}

/// Relative tolerance below which a hypervolume change counts as zero.
const ZERO_CHANGE: f64 = 1e-12;

/// Classifies design `i`. Pairs where neither vector dominates the other are
/// classified by the sign of the hypervolume change: decrease → Case3,
/// increase → Case4, none → Case5.
pub fn classify_case(
    i: usize,
    state: &ParetoState,
    means: &[Vec<f64>],
    predictions: &[Vec<f64>],
    r: &RefPoint,
) -> Result<EhvdCase> {
    if i >= means.len() || i >= predictions.len() {
        return Err(Error::invalid(format!("design {i} out of range")));
    }
    let mean = means[i].as_slice();
    let pred = predictions[i].as_slice();
    as_pair(mean)?;
    as_pair(pred)?;
    let others = || state.observed.iter().filter(|&&k| k != i).map(|&k| means[k].as_slice());
    let mean_dominated = others().any(|g| weakly_dominates(g, mean));
    let pred_dominated = others().any(|g| weakly_dominates(g, pred));
    if mean_dominated && pred_dominated {
        return Ok(EhvdCase::Case5);
    }
    Ok(match relation_unchecked(mean, pred) {
        DomRelation::Dominates | DomRelation::DominatesStrictly => {
            if pred_dominated {
                EhvdCase::Case3
            } else {
                EhvdCase::Case1
            }
        }
        DomRelation::DominatedBy | DomRelation::DominatedStrictlyBy => {
            if mean_dominated {
                EhvdCase::Case4
            } else {
                EhvdCase::Case2
            }
        }
        DomRelation::Equal | DomRelation::Incomparable => {
            let delta = hv_change(i, state, means, predictions, r)?;
            let scale = (r.0[0] - mean[0]).abs().max(1.0) * (r.0[1] - mean[1]).abs().max(1.0);
            if delta < -ZERO_CHANGE * scale {
                EhvdCase::Case3
            } else if delta > ZERO_CHANGE * scale {
                EhvdCase::Case4
            } else {
                EhvdCase::Case5
            }
        }
    })
}
