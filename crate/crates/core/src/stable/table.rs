//! Tabulated standardized SαS log-density for likelihood optimization.
//!
//! Fitting evaluates the density at every sample point for every trial
//! `(α, σ)`; the quadrature route is far too slow for that. The table holds
//! the exact density on a grid in `(α, s = ln x)` and interpolates with
//! tensor-product cubic Lagrange polynomials.
//!
//! Two smooth encodings are stored:
//!
//! * `α < 1.6`: `ln f(x) + (1+α) ln(1+x)`, flat at both ends of the grid.
//! * `α ≥ 1.6`: `(f(x) - f_2(x)) (1+x)^{1+α} / (2-α)` where `f_2` is the
//!   Gaussian limit. The log encoding is not smooth in α as α → 2 (the
//!   power-law tail switches off), this one is.
//!
//! Points outside the grid, and indices below the grid, go through the
//! exact route (series expansions there are cheap).

use std::sync::OnceLock;

use rayon::prelude::*;

use super::sas::{gaussian_log_pdf, std_log_pdf, std_pdf};
use super::GAUSSIAN_ALPHA;
use crate::quadrature::QuadratureSpec;

/// Node layout `start + k·step`, `k < count`.
#[derive(Debug, Clone, Copy)]
struct Axis {
    start: f64,
    step: f64,
    count: usize,
}

impl Axis {
    fn node(&self, k: usize) -> f64 {
        self.start + k as f64 * self.step
    }

    fn position(&self, v: f64) -> f64 {
        (v - self.start) / self.step
    }
}

const LOG_FORM_ALPHA: Axis = Axis {
    start: 0.40,
    step: 0.01,
    count: 123,
};
const LOG_FORM_S: Axis = Axis {
    start: -10.0,
    step: 0.05,
    count: 291,
};

const EXCESS_FORM_ALPHA: Axis = Axis {
    start: 1.58,
    step: 0.0025,
    count: 168,
};
const EXCESS_FORM_S: Axis = Axis {
    start: -3.0,
    step: 0.025,
    count: 301,
};

/// Boundary between the two encodings.
const SWITCH_ALPHA: f64 = 1.6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Encoding {
    Log,
    Excess,
}

#[derive(Debug)]
struct Grid {
    encoding: Encoding,
    alpha: Axis,
    s: Axis,
    values: Vec<f64>,
}

impl Grid {
    fn build(encoding: Encoding, alpha_axis: Axis, s_axis: Axis) -> Self {
        let quad = QuadratureSpec::new(1e-300, 1e-12, 400).expect("static spec is valid");
        let values = (0..alpha_axis.count)
            .into_par_iter()
            .flat_map_iter(|j| {
                // Rounding keeps nodes such as α = 1 exact.
                let alpha = (alpha_axis.node(j) * 1e4).round() / 1e4;
                (0..s_axis.count).map(move |i| {
                    let x = s_axis.node(i).exp();
                    let f = std_pdf(x, alpha, &quad).expect("table node must evaluate");
                    encode(encoding, f, x, alpha)
                })
            })
            .collect();
        Grid {
            encoding,
            alpha: alpha_axis,
            s: s_axis,
            values,
        }
    }

    /// One row of the table interpolated to `alpha`.
    fn row(&self, alpha: f64) -> Row {
        let n = self.s.count;
        let (j0, w) = stencil(self.alpha.position(alpha), self.alpha.count);
        let mut values = vec![0.0; n];
        for (k, wk) in w.iter().enumerate() {
            let src = &self.values[(j0 + k) * n..(j0 + k + 1) * n];
            for (dst, v) in values.iter_mut().zip(src) {
                *dst += wk * v;
            }
        }
        Row {
            encoding: self.encoding,
            s: self.s,
            values,
        }
    }
}

fn encode(encoding: Encoding, f: f64, x: f64, alpha: f64) -> f64 {
    match encoding {
        Encoding::Log => f.ln() + (1.0 + alpha) * x.ln_1p(),
        Encoding::Excess => (f - gaussian_log_pdf(x).exp()) * (1.0 + x).powf(1.0 + alpha) / (2.0 - alpha),
    }
}

/// Index of the first node and the four Lagrange weights for fractional
/// position `t` on a grid of `n` nodes.
#[inline]
fn stencil(t: f64, n: usize) -> (usize, [f64; 4]) {
    let j0 = (t.floor() as isize - 1).clamp(0, n as isize - 4) as usize;
    let u = t - j0 as f64;
    let (a, b, c, d) = (u, u - 1.0, u - 2.0, u - 3.0);
    (
        j0,
        [
            -b * c * d / 6.0,
            a * c * d / 2.0,
            -a * b * d / 2.0,
            a * b * c / 6.0,
        ],
    )
}

/// Table interpolated to one α.
#[derive(Debug, Clone)]
struct Row {
    encoding: Encoding,
    s: Axis,
    values: Vec<f64>,
}

/// Standardized SαS density table over `α ∈ [0.4, 2]`, `x ∈ [e^-10, e^4.5]`
/// (`x ≥ e^-3` for α ≥ 1.6).
#[derive(Debug)]
pub struct SasTable {
    log_form: Grid,
    excess_form: Grid,
}

static GLOBAL: OnceLock<SasTable> = OnceLock::new();

impl SasTable {
    pub fn build() -> Self {
        SasTable {
            log_form: Grid::build(Encoding::Log, LOG_FORM_ALPHA, LOG_FORM_S),
            excess_form: Grid::build(Encoding::Excess, EXCESS_FORM_ALPHA, EXCESS_FORM_S),
        }
    }

    /// Process-wide table, built on first use.
    pub fn global() -> &'static SasTable {
        GLOBAL.get_or_init(SasTable::build)
    }

    /// Smallest index covered by the table; below it evaluation is exact.
    pub fn min_alpha() -> f64 {
        LOG_FORM_ALPHA.start
    }

    /// Log-density evaluator for a fixed `alpha`.
    pub fn at(&self, alpha: f64) -> SasLogDensity {
        let route = if alpha >= GAUSSIAN_ALPHA {
            Route::Gaussian
        } else if alpha == 1.0 {
            Route::Cauchy
        } else if alpha < LOG_FORM_ALPHA.start {
            Route::Exact
        } else if alpha < SWITCH_ALPHA {
            Route::Table(self.log_form.row(alpha))
        } else {
            Route::Table(self.excess_form.row(alpha))
        };
        SasLogDensity { alpha, route }
    }
}

#[derive(Debug, Clone)]
enum Route {
    Gaussian,
    Cauchy,
    Exact,
    Table(Row),
}

/// Standardized SαS log-density at one fixed α.
#[derive(Debug, Clone)]
pub struct SasLogDensity {
    alpha: f64,
    route: Route,
}

impl SasLogDensity {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `ln f(x; α, 1)`.
    pub fn ln_pdf(&self, x: f64) -> f64 {
        let x = x.abs();
        match &self.route {
            Route::Gaussian => gaussian_log_pdf(x),
            Route::Cauchy => -(std::f64::consts::PI * (1.0 + x * x)).ln(),
            Route::Exact => self.exact(x),
            Route::Table(row) => {
                if x == 0.0 {
                    return self.exact(x);
                }
                let t = row.s.position(x.ln());
                if !(0.0..=(row.s.count - 1) as f64).contains(&t) {
                    return self.exact(x);
                }
                let (i0, w) = stencil(t, row.s.count);
                let v = &row.values[i0..i0 + 4];
                let v = w[0] * v[0] + w[1] * v[1] + w[2] * v[2] + w[3] * v[3];
                let a = self.alpha;
                match row.encoding {
                    Encoding::Log => v - (1.0 + a) * x.ln_1p(),
                    Encoding::Excess => {
                        let f = gaussian_log_pdf(x).exp() + (2.0 - a) * v * (1.0 + x).powf(-1.0 - a);
                        f.ln()
                    }
                }
            }
        }
    }

    /// Log-likelihood of `data` under scale `sigma`.
    pub fn log_likelihood(&self, data: &[f64], sigma: f64) -> f64 {
        let inv = 1.0 / sigma;
        data.iter().map(|&x| self.ln_pdf(x * inv)).sum::<f64>() - data.len() as f64 * sigma.ln()
    }

    fn exact(&self, x: f64) -> f64 {
        std_log_pdf(x, self.alpha, &QuadratureSpec::default()).unwrap_or(f64::NEG_INFINITY)
    }
}
