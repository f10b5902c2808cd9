//! Estimators of Ψ = (α, σ) from amplitude data.
//!
//! Amplitudes are projected onto random directions, `t1 = r cos θ`,
//! `t2 = r sin θ`, whose marginals are zero-location SαS with the same
//! (α, σ). Each projection is fitted as a symmetric stable sample and the
//! per-projection estimates are averaged.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optimize::nelder_mead;
pub use crate::optimize::OptimizerSpec;
use crate::quadrature::QuadratureSpec;
use crate::rng::RngStream;
use crate::sampling::{sample_phase, PhaseVector};
use crate::stable::{amplitude_pdf, sas_log_pdf, AmplitudeParams, SasTable, StableLaw};

/// Reported tail indices are clipped to `[ALPHA_FLOOR, 2]`.
pub const ALPHA_FLOOR: f64 = 0.1;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Estimation method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ProjectionMle,
    Lme,
    ChfRegression,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::ProjectionMle, Method::Lme, Method::ChfRegression];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ProjectionMle => "projection_mle",
            Method::Lme => "lme",
            Method::ChfRegression => "chf_regression",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mle" | "projection_mle" => Ok(Method::ProjectionMle),
            "lme" => Ok(Method::Lme),
            "chf" | "chf_regression" => Ok(Method::ChfRegression),
            other => Err(Error::domain(format!("unknown method {other:?} (expected mle, lme or chf)"))),
        }
    }
}

/// Number of projections and the stream the phases are drawn from.
#[derive(Debug, Clone)]
pub struct ProjectionConfig {
    n_projections: usize,
    rng: RngStream,
}

impl ProjectionConfig {
    pub fn new(n_projections: usize, rng: RngStream) -> Result<Self> {
        if n_projections == 0 {
            return Err(Error::domain("at least one projection is required"));
        }
        Ok(ProjectionConfig { n_projections, rng })
    }

    pub fn n_projections(&self) -> usize {
        self.n_projections
    }

    pub fn rng(&self) -> &RngStream {
        &self.rng
    }
}

/// Outcome of fitting amplitude data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub method: Method,
    pub psi_hat: AmplitudeParams,
    /// Amplitude log-likelihood at `psi_hat`; present for the projection MLE.
    pub loglik: Option<f64>,
    pub n_used: usize,
    /// Seconds.
    pub wall_time: f64,
    /// Whether any estimate was clipped into `[ALPHA_FLOOR, 2]`.
    pub clipped: bool,
    /// Estimates from the individual projections, in the order drawn
    /// (`t1`, `t2` of the first direction, then the second, ...).
    pub per_projection: Vec<AmplitudeParams>,
}

/// `t1 = r cos θ`, `t2 = r sin θ`.
pub fn project(r: &[f64], theta: &PhaseVector) -> Result<(Vec<f64>, Vec<f64>)> {
    if r.len() != theta.len() {
        return Err(Error::domain(format!(
            "amplitude and phase lengths differ ({} vs {})",
            r.len(),
            theta.len()
        )));
    }
    check_amplitudes(r)?;
    Ok(r.iter()
        .zip(theta.as_slice())
        .map(|(&r, &t)| {
            let (s, c) = t.sin_cos();
            (r * c, r * s)
        })
        .unzip())
}

fn check_amplitudes(r: &[f64]) -> Result<()> {
    if r.is_empty() {
        return Err(Error::domain("amplitude sample is empty"));
    }
    if let Some((i, v)) = r.iter().enumerate().find(|(_, v)| !(**v > 0.0 && v.is_finite())) {
        return Err(Error::domain(format!("amplitude {} (index {i}) is not positive and finite", v)));
    }
    Ok(())
}

fn clip_alpha(alpha: f64) -> (f64, bool) {
    if alpha > 2.0 {
        (2.0, true)
    } else if alpha < ALPHA_FLOOR {
        (ALPHA_FLOOR, true)
    } else {
        (alpha, false)
    }
}

/// Estimate together with a clipping flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub psi: AmplitudeParams,
    pub clipped: bool,
}

// ---------------------------------------------------------------------------
// Maximum likelihood for a zero-location SαS sample

/// `α = 0.1 + 1.9 / (1 + e^{-a})`, `σ = e^s`.
fn to_params(x: &[f64; 2]) -> (f64, f64) {
    let alpha = ALPHA_FLOOR + (2.0 - ALPHA_FLOOR) / (1.0 + (-x[0]).exp());
    (alpha, x[1].exp())
}

fn from_params(alpha: f64, sigma: f64) -> [f64; 2] {
    let p = ((alpha.clamp(0.15, 1.98) - ALPHA_FLOOR) / (2.0 - ALPHA_FLOOR)).clamp(1e-9, 1.0 - 1e-9);
    [(p / (1.0 - p)).ln(), sigma.ln()]
}

fn check_sas_data(data: &[f64]) -> Result<()> {
    if data.is_empty() {
        return Err(Error::domain("data is empty"));
    }
    if data.iter().any(|x| !x.is_finite()) {
        return Err(Error::domain("data contains non-finite values"));
    }
    if data.iter().all(|&x| x == 0.0) {
        return Err(Error::domain("data are all zero"));
    }
    Ok(())
}

/// Starting point: chf regression, else `(1, IQR/2)`.
fn initial_guess(data: &[f64]) -> AmplitudeParams {
    if let Ok(e) = chf_regression_detailed(data, &default_chf_grid()) {
        if e.psi.sigma.is_finite() && e.psi.sigma > 0.0 {
            return e.psi;
        }
    }
    let mut xs = data.to_vec();
    xs.sort_by(f64::total_cmp);
    let q = |p: f64| xs[((xs.len() - 1) as f64 * p).round() as usize];
    let mut half_iqr = 0.5 * (q(0.75) - q(0.25));
    if !(half_iqr > 0.0) {
        half_iqr = xs.iter().map(|x| x.abs()).sum::<f64>() / xs.len() as f64;
    }
    AmplitudeParams {
        alpha: 1.0,
        sigma: half_iqr,
    }
}

/// Table-driven maximization; returns the estimate and the (tabulated)
/// log-likelihood.
fn fit_sas(data: &[f64], init: &AmplitudeParams, opt: &OptimizerSpec) -> Result<(Estimate, f64)> {
    let table = SasTable::global();
    let objective = |x: &[f64; 2]| {
        let (alpha, sigma) = to_params(x);
        -table.at(alpha).log_likelihood(data, sigma)
    };
    let m = nelder_mead(objective, from_params(init.alpha, init.sigma), [0.6, 0.2], opt);
    let (alpha, sigma) = to_params(&m.x);
    if !m.converged {
        return Err(Error::Convergence {
            iterations: m.iterations,
            best_alpha: alpha,
            best_sigma: sigma,
        });
    }
    if !(m.f.is_finite() && sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::Estimation(format!("likelihood maximization failed (alpha={alpha}, sigma={sigma})")));
    }
    Ok((
        Estimate {
            psi: AmplitudeParams { alpha, sigma },
            clipped: false,
        },
        -m.f,
    ))
}

fn exact_loglik(data: &[f64], psi: &AmplitudeParams, quad: &QuadratureSpec) -> Result<f64> {
    let law = StableLaw::symmetric(psi.alpha, psi.sigma)?;
    let terms = data
        .par_iter()
        .map(|&x| sas_log_pdf(x, &law, quad))
        .collect::<Result<Vec<f64>>>()?;
    Ok(terms.iter().sum())
}

/// Maximum-likelihood `(α, σ)` of a zero-location SαS sample, started from
/// `init`. The returned log-likelihood is evaluated with `quad`.
pub fn mle_sas(
    data: &[f64],
    init: AmplitudeParams,
    opt: &OptimizerSpec,
    quad: &QuadratureSpec,
) -> Result<(AmplitudeParams, f64)> {
    check_sas_data(data)?;
    let init = AmplitudeParams::new(init.alpha.max(ALPHA_FLOOR), init.sigma)?;
    let (est, _) = fit_sas(data, &init, opt)?;
    let at_fit = exact_loglik(data, &est.psi, quad)?;
    let at_init = exact_loglik(data, &init, quad)?;
    if at_init > at_fit {
        return Ok((init, at_init));
    }
    Ok((est.psi, at_fit))
}

/// [`mle_sas`] started from the chf-regression estimate.
pub fn mle_sas_auto(data: &[f64], opt: &OptimizerSpec, quad: &QuadratureSpec) -> Result<(AmplitudeParams, f64)> {
    check_sas_data(data)?;
    mle_sas(data, initial_guess(data), opt, quad)
}

// ---------------------------------------------------------------------------
// Projection estimators

/// Per-projection fitter used by [`projection_fit`].
fn fit_projection(method: Method, t: &[f64], opt: &OptimizerSpec) -> Result<Estimate> {
    match method {
        Method::ProjectionMle => {
            check_sas_data(t)?;
            Ok(fit_sas(t, &initial_guess(t), opt)?.0)
        }
        Method::Lme => lme_detailed(t),
        Method::ChfRegression => chf_regression_detailed(t, &default_chf_grid()),
    }
}

/// Averages `method` over `n_projections` random directions without
/// evaluating the amplitude likelihood.
fn projection_fit(
    r: &[f64],
    method: Method,
    n_projections: usize,
    rng: &mut RngStream,
    opt: &OptimizerSpec,
) -> Result<(AmplitudeParams, bool, Vec<AmplitudeParams>)> {
    check_amplitudes(r)?;
    let mut s_alpha = 0.0;
    let mut s_sigma = 0.0;
    let mut clipped = false;
    let mut all = Vec::with_capacity(2 * n_projections);
    for _ in 0..n_projections {
        let theta = sample_phase(r.len(), rng)?;
        let (t1, t2) = project(r, &theta)?;
        let c = fit_projection(method, &t1, opt)?;
        let s = fit_projection(method, &t2, opt)?;
        s_alpha += (c.psi.alpha + s.psi.alpha) / 2.0;
        s_sigma += (c.psi.sigma + s.psi.sigma) / 2.0;
        clipped |= c.clipped || s.clipped;
        all.push(c.psi);
        all.push(s.psi);
    }
    let n = n_projections as f64;
    Ok((
        AmplitudeParams {
            alpha: s_alpha / n,
            sigma: s_sigma / n,
        },
        clipped,
        all,
    ))
}

/// Projection estimate only, for Monte-Carlo loops.
pub(crate) fn projection_mle_estimate(
    r: &[f64],
    n_projections: usize,
    rng: &mut RngStream,
    opt: &OptimizerSpec,
) -> Result<AmplitudeParams> {
    Ok(projection_fit(r, Method::ProjectionMle, n_projections, rng, opt)?.0)
}

/// Amplitude log-likelihood `Σ ln f_R(r_i | Ψ)`, summed in input order.
pub fn amplitude_loglik(r: &[f64], psi: &AmplitudeParams, quad: &QuadratureSpec) -> Result<f64> {
    check_amplitudes(r)?;
    let terms = r
        .par_iter()
        .map(|&x| amplitude_pdf(x, psi, quad).map(f64::ln))
        .collect::<Result<Vec<f64>>>()?;
    Ok(terms.iter().sum())
}

/// Projection maximum-likelihood estimate of Ψ from amplitudes `r`.
///
/// The phases come from a copy of `cfg`'s stream, so repeated calls with
/// the same configuration give identical results.
pub fn projection_mle(
    r: &[f64],
    cfg: &ProjectionConfig,
    opt: &OptimizerSpec,
    quad: &QuadratureSpec,
) -> Result<FitResult> {
    let start = Instant::now();
    let mut rng = cfg.rng.clone();
    let (psi_hat, clipped, per_projection) = projection_fit(r, Method::ProjectionMle, cfg.n_projections, &mut rng, opt)?;
    let loglik = amplitude_loglik(r, &psi_hat, quad)?;
    Ok(FitResult {
        method: Method::ProjectionMle,
        psi_hat,
        loglik: Some(loglik),
        n_used: r.len(),
        wall_time: start.elapsed().as_secs_f64(),
        clipped,
        per_projection,
    })
}

/// Baseline estimators on amplitudes: one random direction, estimates of
/// the two projections averaged.
fn baseline(r: &[f64], method: Method, cfg: &ProjectionConfig) -> Result<FitResult> {
    let start = Instant::now();
    let mut rng = cfg.rng.clone();
    let (psi_hat, clipped, per_projection) = projection_fit(r, method, 1, &mut rng, &OptimizerSpec::default())?;
    Ok(FitResult {
        method,
        psi_hat,
        loglik: None,
        n_used: r.len(),
        wall_time: start.elapsed().as_secs_f64(),
        clipped,
        per_projection,
    })
}

/// Log-moment estimate from amplitudes.
pub fn lme_amplitude(r: &[f64], cfg: &ProjectionConfig) -> Result<FitResult> {
    baseline(r, Method::Lme, cfg)
}

/// Chf-regression estimate from amplitudes.
pub fn chf_amplitude(r: &[f64], cfg: &ProjectionConfig) -> Result<FitResult> {
    baseline(r, Method::ChfRegression, cfg)
}

/// Fits amplitudes with the given method.
pub fn fit_amplitude(
    r: &[f64],
    method: Method,
    cfg: &ProjectionConfig,
    opt: &OptimizerSpec,
    quad: &QuadratureSpec,
) -> Result<FitResult> {
    match method {
        Method::ProjectionMle => projection_mle(r, cfg, opt, quad),
        Method::Lme => lme_amplitude(r, cfg),
        Method::ChfRegression => chf_amplitude(r, cfg),
    }
}

// ---------------------------------------------------------------------------
// Log-moment estimator

/// Inverts `E ln|X| = γ(1/α - 1) + ln σ`, `Var ln|X| = (π²/6)(1/α² + 1/2)`.
pub fn lme_from_moments(mean: f64, var: f64) -> Estimate {
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    let d = 6.0 * var / pi2 - 0.5;
    let (alpha, clipped) = if d <= 0.25 {
        (2.0, true)
    } else {
        clip_alpha(d.powf(-0.5))
    };
    let sigma = (mean - EULER_GAMMA * (1.0 / alpha - 1.0)).exp();
    Estimate {
        psi: AmplitudeParams { alpha, sigma },
        clipped,
    }
}

/// Log-moment estimate with clipping flag. Zeros are dropped.
pub fn lme_detailed(t: &[f64]) -> Result<Estimate> {
    let logs: Vec<f64> = t.iter().filter(|x| **x != 0.0).map(|x| x.abs().ln()).collect();
    let dropped = t.len() - logs.len();
    if dropped > 0 {
        log::warn!("log-moment estimator dropped {dropped} zero values");
    }
    if logs.len() < 2 {
        return Err(Error::Estimation("log-moment estimator needs at least two nonzero values".into()));
    }
    if logs.iter().any(|y| !y.is_finite()) {
        return Err(Error::domain("data contains non-finite values"));
    }
    let n = logs.len() as f64;
    let mean = logs.iter().sum::<f64>() / n;
    let var = logs.iter().map(|y| (y - mean) * (y - mean)).sum::<f64>() / (n - 1.0);
    Ok(lme_from_moments(mean, var))
}

/// Log-moment estimate of a zero-location SαS sample.
pub fn lme(t: &[f64]) -> Result<AmplitudeParams> {
    Ok(lme_detailed(t)?.psi)
}

// ---------------------------------------------------------------------------
// Characteristic-function regression

/// Ten equispaced points on `[0.1, 1]`.
pub fn default_chf_grid() -> Vec<f64> {
    (1..=10).map(|k| k as f64 / 10.0).collect()
}

/// Regresses `ln(-ln |φ(t_k)|²)` on `ln t_k` given chf moduli; points with
/// `|φ| ∉ (0, 1)` are dropped.
pub fn chf_fit(freqs: &[f64], modulus: &[f64]) -> Result<Estimate> {
    if freqs.len() != modulus.len() {
        return Err(Error::domain("frequency and modulus lengths differ"));
    }
    let pts: Vec<(f64, f64)> = freqs
        .iter()
        .zip(modulus)
        .filter(|(t, m)| **t > 0.0 && **m > 0.0 && **m < 1.0)
        .map(|(t, m)| (t.ln(), (-2.0 * m.ln()).ln()))
        .filter(|(_, y)| y.is_finite())
        .collect();
    if pts.len() < 2 {
        return Err(Error::Estimation(format!(
            "chf regression needs two usable grid points, found {}",
            pts.len()
        )));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if !(sxx > 0.0) {
        return Err(Error::Estimation("chf regression grid has no spread".into()));
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let (alpha, clipped) = clip_alpha(slope);
    // intercept = α ln σ + ln 2, read off with the clipped α
    let sigma = ((intercept - std::f64::consts::LN_2) / alpha).exp();
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::Estimation("chf regression produced a degenerate scale".into()));
    }
    Ok(Estimate {
        psi: AmplitudeParams { alpha, sigma },
        clipped,
    })
}

/// Robust scale `median |t|` used to express the grid in data units.
fn robust_scale(t: &[f64]) -> f64 {
    let mut a: Vec<f64> = t.iter().map(|x| x.abs()).collect();
    a.sort_by(f64::total_cmp);
    let m = a.len();
    let med = if m % 2 == 1 {
        a[m / 2]
    } else {
        0.5 * (a[m / 2 - 1] + a[m / 2])
    };
    if med > 0.0 {
        med
    } else {
        a.iter().sum::<f64>() / m as f64
    }
}

/// Chf regression with clipping flag. The grid is in units of the sample's
/// median absolute value, so the estimate is scale equivariant.
pub fn chf_regression_detailed(t: &[f64], grid: &[f64]) -> Result<Estimate> {
    if t.is_empty() {
        return Err(Error::domain("data is empty"));
    }
    if t.iter().any(|x| !x.is_finite()) {
        return Err(Error::domain("data contains non-finite values"));
    }
    let scale = robust_scale(t);
    if !(scale > 0.0) {
        return Err(Error::Estimation("chf regression needs nonzero data".into()));
    }
    let n = t.len() as f64;
    let freqs: Vec<f64> = grid.iter().map(|g| g / scale).collect();
    let modulus: Vec<f64> = freqs
        .iter()
        .map(|&w| {
            let (s, c) = t.iter().fold((0.0, 0.0), |(s, c), &x| {
                let (sn, cs) = (w * x).sin_cos();
                (s + sn, c + cs)
            });
            (s / n).hypot(c / n)
        })
        .collect();
    chf_fit(&freqs, &modulus)
}

/// Chf-regression estimate of a zero-location SαS sample.
pub fn chf_regression(t: &[f64], grid: &[f64]) -> Result<AmplitudeParams> {
    Ok(chf_regression_detailed(t, grid)?.psi)
}
