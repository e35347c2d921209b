//! Pareto dominance under minimization and non-dominated filtering.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Relation of `a` to `b` in [`dominates`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomRelation {
    /// `a` is strictly better on every objective.
    DominatesStrictly,
    /// `a` is no worse everywhere and strictly better somewhere, but not everywhere.
    Dominates,
    DominatedBy,
    DominatedStrictlyBy,
    Incomparable,
    Equal,
}

impl DomRelation {
    /// `a` dominates `b` in the weak (Pareto) sense, strict or not.
    pub fn is_dominating(self) -> bool {
        matches!(self, DomRelation::Dominates | DomRelation::DominatesStrictly)
    }

    pub fn is_dominated(self) -> bool {
        matches!(self, DomRelation::DominatedBy | DomRelation::DominatedStrictlyBy)
    }

    /// The relation seen from the other side.
    pub fn flip(self) -> Self {
        match self {
            DomRelation::DominatesStrictly => DomRelation::DominatedStrictlyBy,
            DomRelation::Dominates => DomRelation::DominatedBy,
            DomRelation::DominatedBy => DomRelation::Dominates,
            DomRelation::DominatedStrictlyBy => DomRelation::DominatesStrictly,
            other => other,
        }
    }
}

/// Compares two objective vectors. All objectives are minimized.
pub fn dominates(a: &[f64], b: &[f64]) -> Result<DomRelation> {
    if a.len() != b.len() {
        return Err(Error::invalid(format!(
            "objective vectors of different length ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    if a.len() < 2 {
        return Err(Error::invalid("at least two objectives are required"));
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(Error::invalid("non-finite objective value"));
    }
    Ok(relation_unchecked(a, b))
}

pub(crate) fn relation_unchecked(a: &[f64], b: &[f64]) -> DomRelation {
    let (mut less, mut greater) = (0usize, 0usize);
    for (x, y) in a.iter().zip(b) {
        if x < y {
            less += 1;
        } else if x > y {
            greater += 1;
        }
    }
    let m = a.len();
    match (less, greater) {
        (0, 0) => DomRelation::Equal,
        (l, 0) if l == m => DomRelation::DominatesStrictly,
        (_, 0) => DomRelation::Dominates,
        (0, g) if g == m => DomRelation::DominatedStrictlyBy,
        (0, _) => DomRelation::DominatedBy,
        _ => DomRelation::Incomparable,
    }
}

/// Weak Pareto dominance `a ≺ b`.
pub(crate) fn weakly_dominates(a: &[f64], b: &[f64]) -> bool {
    let mut strict = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        strict |= x < y;
    }
    strict
}

/// Indices (ascending) of the points not dominated by any other point.
///
/// Identical points never dominate each other, so duplicates of a front
/// point are all returned.
pub fn pareto_front<P: AsRef<[f64]>>(points: &[P]) -> Result<Vec<usize>> {
    if points.is_empty() {
        return Err(Error::invalid("cannot take the Pareto front of an empty set"));
    }
    let m = points[0].as_ref().len();
    if m < 2 {
        return Err(Error::invalid("at least two objectives are required"));
    }
    for p in points {
        let p = p.as_ref();
        if p.len() != m {
            return Err(Error::invalid("objective vectors of different length"));
        }
        if p.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("non-finite objective value"));
        }
    }
    Ok(if m == 2 {
        front_2d(points)
    } else {
        front_pairwise(points)
    })
}

/// Sort-and-sweep for two objectives. Points are visited in lexicographic
/// order; a group of identical points is dominated iff some earlier group
/// reaches a second objective at least as good.
fn front_2d<P: AsRef<[f64]>>(points: &[P]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    let key = |i: usize| {
        let p = points[i].as_ref();
        (p[0], p[1])
    };
    order.sort_by(|&a, &b| key(a).partial_cmp(&key(b)).expect("finite values"));

    let mut front = Vec::new();
    let mut best_second = f64::INFINITY;
    let mut start = 0;
    while start < order.len() {
        let head = key(order[start]);
        let mut end = start + 1;
        while end < order.len() && key(order[end]) == head {
            end += 1;
        }
        if head.1 < best_second {
            front.extend_from_slice(&order[start..end]);
            best_second = head.1;
        }
        start = end;
    }
    front.sort_unstable();
    front
}

fn front_pairwise<P: AsRef<[f64]>>(points: &[P]) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| {
            !points
                .iter()
                .any(|q| weakly_dominates(q.as_ref(), points[i].as_ref()))
        })
        .collect()
}

/// Observed and predicted Pareto sets over one candidate set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParetoState {
    /// Non-dominated designs under the sample means.
    pub observed: Vec<usize>,
    /// Non-dominated designs under the metamodel predictions.
    pub predicted: Vec<usize>,
}

impl ParetoState {
    pub fn new<P: AsRef<[f64]>, Q: AsRef<[f64]>>(means: &[P], predictions: &[Q]) -> Result<Self> {
        if means.len() != predictions.len() {
            return Err(Error::invalid("means and predictions cover different design counts"));
        }
        Ok(ParetoState {
            observed: pareto_front(means)?,
            predicted: pareto_front(predictions)?,
        })
    }

    /// Designs that belong to neither front.
    pub fn off_front(&self, n: usize) -> Vec<usize> {
        let mut on = vec![false; n];
        for &i in self.observed.iter().chain(&self.predicted) {
            on[i] = true;
        }
        (0..n).filter(|&i| !on[i]).collect()
    }
}
