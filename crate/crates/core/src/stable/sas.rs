//! Symmetric α-stable density and distribution function.
//!
//! For α ≠ 1 the standardized density is evaluated from the Zolotarev-type
//! integral (as rearranged by Nolan)
//!
//! ```text
//! f(x) = α / (π |α-1| x) ∫_0^{π/2} h(θ) e^{-h(θ)} dθ,   h(θ) = x^{α/(α-1)} V(θ)
//! V(θ) = (cos θ / sin αθ)^{α/(α-1)} cos((α-1)θ) / cos θ
//! ```
//!
//! whose integrand is a single bump located where `h = 1`. Near the origin
//! and far in the tails the power series in `x` and `x^{-α}` are used when
//! they converge quickly.

use std::f64::consts::{FRAC_PI_2, PI};

use libm::{lgamma as ln_gamma, tgamma as gamma};

use super::{StableLaw, GAUSSIAN_ALPHA};
use crate::error::{Error, Result};
use super::BREAK_LEVELS;
use crate::quadrature::{integrate_breaks, level_crossing, QuadratureSpec};

const SERIES_EPS: f64 = 1e-17;

/// Within this distance of α = 1 the integral representation is
/// ill-conditioned and the Fourier inversion is used instead.
const NEAR_CAUCHY: f64 = 1e-3;
const MAX_SERIES_TERMS: usize = 80;

/// Density of a zero-location symmetric stable law at `x`.
pub fn sas_pdf(x: f64, law: &StableLaw, quad: &QuadratureSpec) -> Result<f64> {
    law.require_symmetric()?;
    check_finite(x)?;
    Ok(std_pdf(x.abs() / law.sigma(), law.alpha(), quad)? / law.sigma())
}

/// Natural logarithm of [`sas_pdf`]; exact in the Gaussian tail where the
/// density itself underflows. Only `quad.rel_tol` applies, so small tail
/// densities keep their relative accuracy.
pub fn sas_log_pdf(x: f64, law: &StableLaw, quad: &QuadratureSpec) -> Result<f64> {
    law.require_symmetric()?;
    check_finite(x)?;
    Ok(std_log_pdf(x.abs() / law.sigma(), law.alpha(), quad)? - law.sigma().ln())
}

/// Distribution function of a zero-location symmetric stable law.
pub fn sas_cdf(x: f64, law: &StableLaw, quad: &QuadratureSpec) -> Result<f64> {
    law.require_symmetric()?;
    check_finite(x)?;
    let q = std_sf(x.abs() / law.sigma(), law.alpha(), quad)?;
    Ok(if x >= 0.0 { 1.0 - q } else { q })
}

/// Log-likelihood `Σ log f(x_i)` of a zero-location symmetric stable law.
pub fn sas_loglik(data: &[f64], law: &StableLaw, quad: &QuadratureSpec) -> Result<f64> {
    if data.is_empty() {
        return Err(Error::domain("log-likelihood of an empty sample"));
    }
    data.iter().map(|&x| sas_log_pdf(x, law, quad)).sum()
}

fn check_finite(x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("argument must be finite, got {x}")))
    }
}

pub(crate) fn gaussian_log_pdf(x: f64) -> f64 {
    // N(0, 2)
    -0.25 * x * x - (2.0 * PI.sqrt()).ln()
}

/// Standardized (σ = 1) density at `x ≥ 0`.
pub(crate) fn std_pdf(x: f64, alpha: f64, quad: &QuadratureSpec) -> Result<f64> {
    if alpha >= GAUSSIAN_ALPHA {
        return Ok(gaussian_log_pdf(x).exp());
    }
    if alpha == 1.0 {
        return Ok(1.0 / (PI * (1.0 + x * x)));
    }
    if x == 0.0 {
        return Ok(gamma(1.0 + 1.0 / alpha) / PI);
    }
    if let Some(v) = zero_series_pdf(x, alpha) {
        return Ok(v);
    }
    if let Some(v) = tail_series_pdf(x, alpha) {
        return Ok(v);
    }
    if (alpha - 1.0).abs() < NEAR_CAUCHY {
        return Ok(fourier(x, alpha, false, quad)? / PI);
    }
    Zolotarev::new(alpha).pdf(x, quad)
}

pub(crate) fn std_log_pdf(x: f64, alpha: f64, quad: &QuadratureSpec) -> Result<f64> {
    if alpha >= GAUSSIAN_ALPHA {
        return Ok(gaussian_log_pdf(x));
    }
    let relative = QuadratureSpec {
        abs_tol: f64::MIN_POSITIVE,
        ..*quad
    };
    Ok(std_pdf(x, alpha, &relative)?.ln())
}

/// Standardized upper tail `P(X > x)` for `x ≥ 0`.
pub(crate) fn std_sf(x: f64, alpha: f64, quad: &QuadratureSpec) -> Result<f64> {
    if alpha >= GAUSSIAN_ALPHA {
        return Ok(0.5 * libm::erfc(0.5 * x));
    }
    if alpha == 1.0 {
        return Ok(0.5 - x.atan() / PI);
    }
    if x == 0.0 {
        return Ok(0.5);
    }
    if let Some(v) = zero_series_cdf(x, alpha) {
        return Ok(0.5 - v);
    }
    if let Some(v) = tail_series_sf(x, alpha) {
        return Ok(v);
    }
    if (alpha - 1.0).abs() < NEAR_CAUCHY {
        return Ok(0.5 - fourier(x, alpha, true, quad)? / PI);
    }
    Zolotarev::new(alpha).sf(x, quad)
}

/// `∫_0^∞ cos(xt) e^{-t^α} dt`, or with `sin(xt)/t` when `sine` is set,
/// truncated where `t^α = 50` and split at half periods.
fn fourier(x: f64, alpha: f64, sine: bool, quad: &QuadratureSpec) -> Result<f64> {
    let top = 50f64.powf(1.0 / alpha);
    let half = PI / x;
    let mut pts = vec![0.0];
    let mut k = 1.0;
    while k * half < top && pts.len() < 2000 {
        pts.push(k * half);
        k += 1.0;
    }
    pts.push(top);
    let integral = integrate_breaks(
        |t| {
            let damp = (-t.powf(alpha)).exp();
            if !sine {
                (x * t).cos() * damp
            } else if t > 0.0 {
                (x * t).sin() / t * damp
            } else {
                x
            }
        },
        &pts,
        quad,
    )?;
    Ok(integral.value)
}

/// Alternating series `Σ_k (-1)^k exp(ln_mag(k))` accepted only when the
/// terms decrease from the start and the tail falls below `SERIES_EPS`.
fn alternating_series(first: usize, ln_mag: impl Fn(usize) -> f64, factor: impl Fn(usize) -> f64) -> Option<f64> {
    let mut sum = 0.0;
    let mut prev = f64::INFINITY;
    let mut lead = 0.0;
    for k in first..first + MAX_SERIES_TERMS {
        let mag = ln_mag(k).exp();
        if k == first {
            lead = mag;
        } else if mag > prev || (k == first + 1 && mag > 0.1 * lead) {
            return None;
        }
        let sign = if (k - first) % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * mag * factor(k);
        if mag < SERIES_EPS * sum.abs() {
            return Some(sum);
        }
        prev = mag;
    }
    None
}

/// `f(x) = (1/πα) Σ (-1)^k Γ((2k+1)/α) x^{2k} / (2k)!`
fn zero_series_pdf(x: f64, alpha: f64) -> Option<f64> {
    let lx = x.ln();
    alternating_series(
        0,
        |k| ln_gamma((2 * k + 1) as f64 / alpha) - ln_gamma((2 * k + 1) as f64) + 2.0 * k as f64 * lx,
        |_| 1.0,
    )
    .map(|s| s / (PI * alpha))
}

/// `F(x) - 1/2 = (1/πα) Σ (-1)^k Γ((2k+1)/α) x^{2k+1} / (2k+1)!`
fn zero_series_cdf(x: f64, alpha: f64) -> Option<f64> {
    let lx = x.ln();
    alternating_series(
        0,
        |k| {
            let m = (2 * k + 1) as f64;
            ln_gamma(m / alpha) - ln_gamma(m + 1.0) + m * lx
        },
        |_| 1.0,
    )
    .map(|s| s / (PI * alpha))
}

/// Bergström expansion `f(x) = (1/π) Σ_{k≥1} (-1)^{k+1} Γ(αk+1)/k! sin(kπα/2) x^{-αk-1}`.
fn tail_series_pdf(x: f64, alpha: f64) -> Option<f64> {
    let lx = x.ln();
    alternating_series(
        1,
        |k| {
            let kf = k as f64;
            ln_gamma(alpha * kf + 1.0) - ln_gamma(kf + 1.0) - (alpha * kf + 1.0) * lx
        },
        |k| (k as f64 * PI * alpha / 2.0).sin(),
    )
    .filter(|s| *s > 0.0)
    .map(|s| s / PI)
}

/// `P(X > x) = (1/π) Σ_{k≥1} (-1)^{k+1} Γ(αk)/k! sin(kπα/2) x^{-αk}`.
fn tail_series_sf(x: f64, alpha: f64) -> Option<f64> {
    let lx = x.ln();
    alternating_series(
        1,
        |k| {
            let kf = k as f64;
            ln_gamma(alpha * kf) - ln_gamma(kf + 1.0) - alpha * kf * lx
        },
        |k| (k as f64 * PI * alpha / 2.0).sin(),
    )
    .filter(|s| *s > 0.0)
    .map(|s| s / PI)
}

/// The integral representation for a fixed α ∉ {1, 2}.
pub(crate) struct Zolotarev {
    alpha: f64,
    xi: f64,
}

impl Zolotarev {
    pub(crate) fn new(alpha: f64) -> Self {
        Zolotarev {
            alpha,
            xi: alpha / (alpha - 1.0),
        }
    }

    fn ln_v(&self, theta: f64) -> f64 {
        let c = theta.cos();
        self.xi * (c.ln() - (self.alpha * theta).sin().ln()) + ((self.alpha - 1.0) * theta).cos().ln() - c.ln()
    }

    /// Break points where `ln h` crosses [`BREAK_LEVELS`]; `ln h` is
    /// decreasing in θ for α > 1 and increasing for α < 1.
    fn breaks(&self, ln_x: f64) -> Vec<f64> {
        let shift = self.xi * ln_x;
        let sign = if self.alpha < 1.0 { 1.0 } else { -1.0 };
        let mut pts = vec![0.0, FRAC_PI_2];
        for level in BREAK_LEVELS {
            pts.push(level_crossing(|t| sign * (shift + self.ln_v(t) - level), 0.0, FRAC_PI_2, 1e-2));
        }
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        pts
    }

    pub(crate) fn pdf(&self, x: f64, quad: &QuadratureSpec) -> Result<f64> {
        let ln_x = x.ln();
        let shift = self.xi * ln_x;
        let pts = self.breaks(ln_x);
        let integral = integrate_breaks(
            |theta| {
                let ln_h = shift + self.ln_v(theta);
                let v = (ln_h - ln_h.exp()).exp();
                if v.is_finite() {
                    v
                } else {
                    0.0
                }
            },
            &pts,
            quad,
        )?;
        Ok(self.alpha / (PI * (self.alpha - 1.0).abs() * x) * integral.value)
    }

    pub(crate) fn sf(&self, x: f64, quad: &QuadratureSpec) -> Result<f64> {
        let ln_x = x.ln();
        let shift = self.xi * ln_x;
        let pts = self.breaks(ln_x);
        let heavy = self.alpha < 1.0;
        let integral = integrate_breaks(
            |theta| {
                let h = (shift + self.ln_v(theta)).exp();
                let v = if heavy { -(-h).exp_m1() } else { (-h).exp() };
                if v.is_nan() {
                    0.0
                } else {
                    v
                }
            },
            &pts,
            quad,
        )?;
        Ok(integral.value / PI)
    }
}
