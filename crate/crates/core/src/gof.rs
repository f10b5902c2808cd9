//! Goodness-of-fit statistics of amplitude data against a fitted amplitude
//! law, and side-by-side comparison of estimators.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimators::{fit_amplitude, FitResult, Method, OptimizerSpec, ProjectionConfig};
use crate::quadrature::QuadratureSpec;
use crate::stable::{amplitude_cdf, AmplitudeParams};

/// Probabilities are kept inside `[AD_CLAMP, 1 - AD_CLAMP]` for the
/// Anderson–Darling logarithms.
pub const AD_CLAMP: f64 = 1e-12;

/// Kolmogorov–Smirnov, Anderson–Darling and Cramér–von Mises statistics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GofReport {
    pub ks: f64,
    pub ad: f64,
    pub cvm: f64,
    pub n: usize,
    /// Some probability hit 0 or 1 and was clamped for AD.
    pub clamped: bool,
}

/// Statistics from probability-integral-transformed values `z_i = F(r_i)`.
/// The values are sorted here; their order does not matter.
pub fn gof_from_pit(z: &[f64]) -> Result<GofReport> {
    if z.is_empty() {
        return Err(Error::domain("goodness of fit needs at least one value"));
    }
    if let Some(v) = z.iter().find(|v| !(0.0..=1.0).contains(*v)) {
        return Err(Error::domain(format!("probability {v} outside [0, 1]")));
    }
    let mut z = z.to_vec();
    z.sort_by(f64::total_cmp);
    let n = z.len();
    let nf = n as f64;

    let mut ks: f64 = 0.0;
    let mut cvm = 1.0 / (12.0 * nf);
    for (i, &zi) in z.iter().enumerate() {
        let i1 = (i + 1) as f64;
        ks = ks.max((i1 / nf - zi).abs()).max((zi - i as f64 / nf).abs());
        let d = zi - (2.0 * i1 - 1.0) / (2.0 * nf);
        cvm += d * d;
    }

    let mut clamped = false;
    let mut clamp = |v: f64| {
        let c = v.clamp(AD_CLAMP, 1.0 - AD_CLAMP);
        clamped |= c != v;
        c
    };
    let mut sum = 0.0;
    for i in 0..n {
        let lo = clamp(z[i]);
        let hi = clamp(z[n - 1 - i]);
        sum += (2.0 * (i + 1) as f64 - 1.0) * (lo.ln() + (-hi).ln_1p());
    }
    let ad = -nf - sum / nf;

    Ok(GofReport {
        ks,
        ad,
        cvm,
        n,
        clamped,
    })
}

/// KS, AD and CVM of amplitudes `r` against the amplitude law `psi`.
pub fn gof_statistics(r: &[f64], psi: &AmplitudeParams, quad: &QuadratureSpec) -> Result<GofReport> {
    if r.is_empty() {
        return Err(Error::domain("goodness of fit needs at least one value"));
    }
    let z = r
        .par_iter()
        .map(|&x| amplitude_cdf(x, psi, quad))
        .collect::<Result<Vec<f64>>>()?;
    gof_from_pit(&z)
}

/// One estimator's fit and its goodness of fit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub method: Method,
    pub psi_hat: AmplitudeParams,
    pub report: GofReport,
    pub fit: FitResult,
}

/// Runs each requested method on the same data and projection stream and
/// scores every fit. Rows follow [`Method`] order; a failing method yields
/// an error in its row only.
pub fn compare_estimators(
    r: &[f64],
    methods: &[Method],
    cfg: &ProjectionConfig,
    opt: &OptimizerSpec,
    quad: &QuadratureSpec,
) -> Vec<(Method, Result<ComparisonRow>)> {
    let mut methods = methods.to_vec();
    methods.sort();
    methods.dedup();
    methods
        .into_iter()
        .map(|method| {
            let row = fit_amplitude(r, method, cfg, opt, quad).and_then(|fit| {
                let report = gof_statistics(r, &fit.psi_hat, quad)?;
                Ok(ComparisonRow {
                    method,
                    psi_hat: fit.psi_hat,
                    report,
                    fit,
                })
            });
            (method, row)
        })
        .collect()
}
