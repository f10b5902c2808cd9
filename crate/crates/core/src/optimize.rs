//! Nelder–Mead simplex minimization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Stopping rule for the simplex search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerSpec {
    /// Largest vertex distance from the best vertex at convergence.
    pub param_tol: f64,
    /// Largest spread of objective values at convergence, relative to
    /// `max(1, |f_best|)`.
    pub func_tol: f64,
    pub max_iters: usize,
}

impl Default for OptimizerSpec {
    fn default() -> Self {
        OptimizerSpec {
            param_tol: 1e-6,
            func_tol: 1e-8,
            max_iters: 500,
        }
    }
}

impl OptimizerSpec {
    pub fn new(param_tol: f64, func_tol: f64, max_iters: usize) -> Result<Self> {
        if !(param_tol > 0.0 && func_tol > 0.0) {
            return Err(Error::domain("optimizer tolerances must be positive"));
        }
        if max_iters == 0 {
            return Err(Error::domain("optimizer needs at least one iteration"));
        }
        Ok(OptimizerSpec {
            param_tol,
            func_tol,
            max_iters,
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Minimum<const N: usize> {
    pub x: [f64; N],
    pub f: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Minimizes `f` from `x0` with initial simplex steps `step`. Non-finite
/// objective values are treated as `+∞`.
pub(crate) fn nelder_mead<const N: usize>(
    mut f: impl FnMut(&[f64; N]) -> f64,
    x0: [f64; N],
    step: [f64; N],
    spec: &OptimizerSpec,
) -> Minimum<N> {
    let mut eval = |x: &[f64; N]| {
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };
    let mut simplex: Vec<([f64; N], f64)> = Vec::with_capacity(N + 1);
    simplex.push((x0, eval(&x0)));
    for i in 0..N {
        let mut x = x0;
        x[i] += step[i];
        simplex.push((x, eval(&x)));
    }

    let mut iterations = 0;
    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (best, f_best) = simplex[0];
        let f_worst = simplex[N].1;
        let spread = simplex[1..]
            .iter()
            .map(|(x, _)| x.iter().zip(&best).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        let f_ok = f_worst - f_best <= spec.func_tol * f_best.abs().max(1.0);
        if spread <= spec.param_tol && f_ok {
            return Minimum {
                x: best,
                f: f_best,
                iterations,
                converged: true,
            };
        }
        if iterations >= spec.max_iters {
            return Minimum {
                x: best,
                f: f_best,
                iterations,
                converged: false,
            };
        }
        iterations += 1;

        let mut centroid = [0.0; N];
        for (x, _) in &simplex[..N] {
            for (c, v) in centroid.iter_mut().zip(x) {
                *c += v / N as f64;
            }
        }
        let along = |t: f64| {
            let mut p = [0.0; N];
            for i in 0..N {
                p[i] = centroid[i] + t * (simplex[N].0[i] - centroid[i]);
            }
            p
        };

        let xr = along(-1.0);
        let fr = eval(&xr);
        if fr < f_best {
            let xe = along(-2.0);
            let fe = eval(&xe);
            simplex[N] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < simplex[N - 1].1 {
            simplex[N] = (xr, fr);
            continue;
        }
        let (xc, fc) = if fr < f_worst {
            let xc = along(-0.5);
            (xc, eval(&xc))
        } else {
            let xc = along(0.5);
            (xc, eval(&xc))
        };
        if fc < fr.min(f_worst) {
            simplex[N] = (xc, fc);
            continue;
        }
        for k in 1..=N {
            let mut x = simplex[k].0;
            for (xi, bi) in x.iter_mut().zip(&best) {
                *xi = bi + 0.5 * (*xi - bi);
            }
            simplex[k] = (x, eval(&x));
        }
    }
}
