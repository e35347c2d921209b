//! Box-constrained Nelder–Mead used for likelihood maximization.

/// Settings for [`minimize`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct Settings {
    pub max_evaluations: usize,
    /// Stop once the spread of simplex values falls below this (absolute).
    pub f_tolerance: f64,
    /// Stop once every simplex vertex is this close to the best one.
    pub x_tolerance: f64,
    /// Initial simplex step as a fraction of each box width.
    pub initial_step: f64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_evaluations: 400,
            f_tolerance: 1e-7,
            x_tolerance: 1e-5,
            initial_step: 0.1,
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    #[cfg_attr(not(test), allow(dead_code))]
    pub evaluations: usize,
}

fn clamp_into(x: &mut [f64], lower: &[f64], upper: &[f64]) {
    for ((v, lo), hi) in x.iter_mut().zip(lower).zip(upper) {
        *v = v.clamp(*lo, *hi);
    }
}

/// Minimizes `f` over the box `[lower, upper]` starting at `start`.
///
/// Trial points leaving the box are projected back onto it. NaN values are
/// treated as `+inf`.
pub(crate) fn minimize<F>(
    mut f: F,
    start: &[f64],
    lower: &[f64],
    upper: &[f64],
    settings: Settings,
) -> Minimum
where
    F: FnMut(&[f64]) -> f64,
{
    let dim = start.len();
    let evaluations = std::cell::Cell::new(0usize);
    let mut eval = |x: &[f64]| {
        evaluations.set(evaluations.get() + 1);
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let mut first = start.to_vec();
    clamp_into(&mut first, lower, upper);
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    let v0 = eval(&first);
    simplex.push((first.clone(), v0));
    for q in 0..dim {
        let mut x = first.clone();
        let step = settings.initial_step * (upper[q] - lower[q]);
        // step inward when the start sits on the upper face
        x[q] = if x[q] + step <= upper[q] { x[q] + step } else { x[q] - step };
        let v = eval(&x);
        simplex.push((x, v));
    }

    let by_value = |a: &(Vec<f64>, f64), b: &(Vec<f64>, f64)| a.1.total_cmp(&b.1);
    loop {
        simplex.sort_by(by_value);
        let best = simplex[0].1;
        let worst = simplex[dim].1;
        if evaluations.get() >= settings.max_evaluations {
            break;
        }
        let spread_x = simplex[1..]
            .iter()
            .flat_map(|(x, _)| x.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max);
        if best.is_finite() && (worst - best).abs() <= settings.f_tolerance && spread_x <= settings.x_tolerance {
            break;
        }

        let mut centroid = vec![0.0; dim];
        for (x, _) in &simplex[..dim] {
            for (c, v) in centroid.iter_mut().zip(x) {
                *c += v / dim as f64;
            }
        }
        let toward = |coef: f64| -> Vec<f64> {
            let mut p: Vec<f64> = centroid
                .iter()
                .zip(&simplex[dim].0)
                .map(|(c, w)| c + coef * (c - w))
                .collect();
            clamp_into(&mut p, lower, upper);
            p
        };

        let reflected = toward(1.0);
        let fr = eval(&reflected);
        if fr < simplex[0].1 {
            let expanded = toward(2.0);
            let fe = eval(&expanded);
            simplex[dim] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
            continue;
        }
        if fr < simplex[dim - 1].1 {
            simplex[dim] = (reflected, fr);
            continue;
        }
        let (contracted, fc) = if fr < worst {
            let c = toward(0.5);
            let v = eval(&c);
            (c, v)
        } else {
            let c = toward(-0.5);
            let v = eval(&c);
            (c, v)
        };
        if fc < fr.min(worst) {
            simplex[dim] = (contracted, fc);
            continue;
        }
        // shrink toward the best vertex
        let anchor = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            for (v, a) in vertex.0.iter_mut().zip(&anchor) {
                *v = a + 0.5 * (*v - a);
            }
            vertex.1 = eval(&vertex.0);
        }
    }
    simplex.sort_by(by_value);
    let (x, value) = simplex.swap_remove(0);
    Minimum {
        x,
        value,
        evaluations: evaluations.get(),
    }
}
