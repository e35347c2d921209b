use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal, StudentsT};

use super::records::read_records;
use super::IterationRecord;
use crate::{Error, Result};

/// Per-iteration means over macroreplications.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateRow {
    pub iteration: usize,
    pub macroreps: usize,
    pub cum_reps: f64,
    pub f1_mean: f64,
    /// Half-width of the 95% t-interval; `None` with fewer than two macroreplications.
    pub f1_ci: Option<f64>,
    pub precision_mean: f64,
    pub recall_mean: f64,
    pub retained_mean: f64,
    pub mce_mean: f64,
    pub mci_mean: f64,
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// 95% half-width `t_{0.975, n-1} · s / √n`.
fn t_half_width(v: &[f64]) -> Option<f64> {
    let n = v.len();
    if n < 2 {
        return None;
    }
    let m = mean(v);
    let var = v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1) as f64;
    let t = StudentsT::new(0.0, 1.0, (n - 1) as f64).ok()?.inverse_cdf(0.975);
    Some(t * var.sqrt() / (n as f64).sqrt())
}

pub fn aggregate(records: &[IterationRecord]) -> Vec<AggregateRow> {
    let mut by_iter: BTreeMap<usize, Vec<&IterationRecord>> = BTreeMap::new();
    for r in records {
        by_iter.entry(r.iteration).or_default().push(r);
    }
    by_iter
        .into_iter()
        .map(|(iteration, rs)| {
            let col = |f: &dyn Fn(&IterationRecord) -> f64| rs.iter().map(|r| f(r)).collect::<Vec<f64>>();
            let f1 = col(&|r| r.f1);
            AggregateRow {
                iteration,
                macroreps: rs.len(),
                cum_reps: mean(&col(&|r| r.cum_reps as f64)),
                f1_mean: mean(&f1),
                f1_ci: t_half_width(&f1),
                precision_mean: mean(&col(&|r| r.precision)),
                recall_mean: mean(&col(&|r| r.recall)),
                retained_mean: mean(&col(&|r| r.retained as f64)),
                mce_mean: mean(&col(&|r| r.mce as f64)),
                mci_mean: mean(&col(&|r| r.mci as f64)),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WilcoxonResult {
    /// Non-zero differences used.
    pub n: usize,
    /// Sum of the ranks of positive differences.
    pub w_plus: f64,
    /// P(W+ ≥ observed) under the null of symmetric differences.
    pub p_value: f64,
    pub exact: bool,
}

const EXACT_LIMIT: usize = 50;

/// One-sided signed-rank test of `a > b` on paired samples. Zero differences
/// are dropped; tied magnitudes get average ranks. Up to 50 pairs the null
/// distribution is enumerated exactly (with ties), beyond that a normal
/// approximation with tie and continuity corrections is used.
pub fn wilcoxon_signed_rank(a: &[f64], b: &[f64]) -> Result<WilcoxonResult> {
    if a.len() != b.len() {
        return Err(Error::invalid(format!("paired samples differ in length ({} vs {})", a.len(), b.len())));
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(Error::invalid("non-finite sample value"));
    }
    let mut d: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).filter(|v| *v != 0.0).collect();
    let n = d.len();
    if n == 0 {
        return Ok(WilcoxonResult {
            n,
            w_plus: 0.0,
            p_value: 1.0,
            exact: true,
        });
    }
    d.sort_by(|x, y| x.abs().total_cmp(&y.abs()));
    // doubled average ranks stay integral
    let mut ranks2 = vec![0usize; n];
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < n {
        let mut k = i + 1;
        while k < n && d[k].abs() == d[i].abs() {
            k += 1;
        }
        let r2 = i + 1 + k;
        for r in &mut ranks2[i..k] {
            *r = r2;
        }
        let t = (k - i) as f64;
        tie_term += t * t * t - t;
        i = k;
    }
    let w2: usize = d.iter().zip(&ranks2).filter(|(v, _)| **v > 0.0).map(|(_, r)| r).sum();
    let w_plus = w2 as f64 / 2.0;

    if n <= EXACT_LIMIT {
        let total: usize = ranks2.iter().sum();
        let mut counts = vec![0.0f64; total + 1];
        counts[0] = 1.0;
        let mut reach = 0;
        for &r in &ranks2 {
            for s in (0..=reach).rev() {
                if counts[s] > 0.0 {
                    counts[s + r] += counts[s];
                }
            }
            reach += r;
        }
        let tail: f64 = counts[w2..].iter().sum();
        let p = tail / 2f64.powi(n as i32);
        return Ok(WilcoxonResult {
            n,
            w_plus,
            p_value: p.min(1.0),
            exact: true,
        });
    }
    let nf = n as f64;
    let mu = nf * (nf + 1.0) / 4.0;
    let sigma = (nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0 - tie_term / 48.0).sqrt();
    let z = (w_plus - mu - 0.5) / sigma;
    let normal = Normal::new(0.0, 1.0).expect("standard normal");
    Ok(WilcoxonResult {
        n,
        w_plus,
        p_value: 1.0 - normal.cdf(z),
        exact: false,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareResult {
    pub iteration: usize,
    pub pairs: usize,
    pub mean_a: f64,
    pub mean_b: f64,
    pub test: WilcoxonResult,
}

/// F1 at `iteration` by macrorep.
fn f1_at(records: &[IterationRecord], iteration: usize) -> BTreeMap<usize, f64> {
    records
        .iter()
        .filter(|r| r.iteration == iteration)
        .map(|r| (r.macrorep, r.f1))
        .collect()
}

/// Tests F1(A) > F1(B) at `iteration`, pairing by macroreplication index.
pub fn compare(a: &[IterationRecord], b: &[IterationRecord], iteration: usize) -> Result<CompareResult> {
    let fa = f1_at(a, iteration);
    let fb = f1_at(b, iteration);
    if fa.is_empty() {
        return Err(Error::invalid(format!("no records at iteration {iteration}")));
    }
    if fa.keys().ne(fb.keys()) {
        return Err(Error::invalid(format!(
            "runs do not pair up at iteration {iteration}: macroreps {:?} vs {:?}",
            fa.keys().collect::<Vec<_>>(),
            fb.keys().collect::<Vec<_>>()
        )));
    }
    let va: Vec<f64> = fa.values().copied().collect();
    let vb: Vec<f64> = fb.values().copied().collect();
    Ok(CompareResult {
        iteration,
        pairs: va.len(),
        mean_a: mean(&va),
        mean_b: mean(&vb),
        test: wilcoxon_signed_rank(&va, &vb)?,
    })
}

pub fn compare_files(a: &Path, b: &Path, iteration: usize) -> Result<CompareResult> {
    compare(&read_records(a)?, &read_records(b)?, iteration)
}
