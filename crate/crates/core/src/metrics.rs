//! Misclassification counts and the F1 score of an identified Pareto set.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ErrorCounts {
    pub tp: usize,
    /// Dominated designs identified as Pareto (misclassification by inclusion).
    pub fp: usize,
    /// Pareto designs identified as dominated (misclassification by exclusion).
    pub fn_: usize,
}

impl ErrorCounts {
    pub fn mci(&self) -> usize {
        self.fp
    }

    pub fn mce(&self) -> usize {
        self.fn_
    }

    pub fn precision(&self) -> f64 {
        ratio(self.tp, self.tp + self.fp)
    }

    pub fn recall(&self) -> f64 {
        ratio(self.tp, self.tp + self.fn_)
    }

    pub fn f1(&self) -> f64 {
        f1(self)
    }
}

fn ratio(a: usize, b: usize) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

pub fn classify_errors(identified: &[usize], truth: &[usize]) -> ErrorCounts {
    let id: BTreeSet<usize> = identified.iter().copied().collect();
    let tr: BTreeSet<usize> = truth.iter().copied().collect();
    let tp = id.intersection(&tr).count();
    ErrorCounts {
        tp,
        fp: id.len() - tp,
        fn_: tr.len() - tp,
    }
}

/// Harmonic mean of precision and recall; zero when nothing was found correctly.
pub fn f1(c: &ErrorCounts) -> f64 {
    if c.tp == 0 {
        return 0.0;
    }
    2.0 * c.tp as f64 / (2 * c.tp + c.fp + c.fn_) as f64
}
