//! Exact samplers: stable laws (Chambers–Mallows–Stuck), the positive
//! stable mixing law, standard Rayleigh, uniform phase and amplitude data.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::stable::{AmplitudeParams, StableLaw, GAUSSIAN_ALPHA};

/// Phases `θ_i ∈ [0, 2π)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseVector {
    theta: Vec<f64>,
}

impl PhaseVector {
    pub fn new(theta: Vec<f64>) -> Result<Self> {
        if let Some(t) = theta.iter().find(|t| !(0.0..TAU).contains(*t)) {
            return Err(Error::domain(format!("phase {t} outside [0, 2π)")));
        }
        Ok(PhaseVector { theta })
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.theta
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.theta
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::domain("sample size must be positive"))
    } else {
        Ok(())
    }
}

/// `n` draws from `S(α, β, σ, μ)`.
pub fn sample_stable(n: usize, law: &StableLaw, rng: &mut RngStream) -> Result<Vec<f64>> {
    check_n(n)?;
    let (alpha, beta, sigma, mu) = (law.alpha(), law.beta(), law.sigma(), law.mu());
    if beta == 1.0 && alpha < 1.0 {
        // Totally skewed branch: sample the law with Laplace transform
        // exp(-s^α) and rescale; its scale is cos(πα/2)^{1/α}.
        let unit = (FRAC_PI_2 * alpha).cos().powf(1.0 / alpha);
        let k = sigma / unit;
        return Ok((0..n).map(|_| mu + k * positive_unit(alpha, rng)).collect());
    }
    if alpha == 1.0 {
        let shift = 2.0 / PI * beta * sigma * sigma.ln() + mu;
        return Ok((0..n)
            .map(|_| {
                let v = PI * (rng.open_uniform() - 0.5);
                let w = rng.exponential();
                let hb = FRAC_PI_2 + beta * v;
                let x = 2.0 / PI * (hb * v.tan() - beta * (FRAC_PI_2 * w * v.cos() / hb).ln());
                sigma * x + shift
            })
            .collect());
    }
    let zeta = beta * (FRAC_PI_2 * alpha).tan();
    let b = zeta.atan() / alpha;
    let s = (1.0 + zeta * zeta).powf(0.5 / alpha);
    Ok((0..n)
        .map(|_| {
            let v = PI * (rng.open_uniform() - 0.5);
            let w = rng.exponential();
            let x = s * (alpha * (v + b)).sin() / v.cos().powf(1.0 / alpha)
                * ((v - alpha * (v + b)).cos() / w).powf((1.0 - alpha) / alpha);
            sigma * x + mu
        })
        .collect())
}

/// One draw with Laplace transform `exp(-s^ρ)`, `0 < ρ < 1`, computed in
/// log space from the Kanter form of the CMS transform.
fn positive_unit(rho: f64, rng: &mut RngStream) -> f64 {
    let phi = PI * rng.open_uniform();
    let w = rng.exponential();
    let g = (1.0 - rho) / rho;
    ((rho * phi).sin().ln() + g * ((1.0 - rho) * phi).sin().ln() - phi.sin().ln() / rho - g * w.ln()).exp()
}

/// `n` draws of the mixing variable `U ~ S(α/2, 1, cos(πα/4)^{2/α}, 0)`.
pub fn sample_pas(n: usize, alpha: f64, rng: &mut RngStream) -> Result<Vec<f64>> {
    check_n(n)?;
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::domain(format!("positive stable sampling needs alpha in (0, 2), got {alpha}")));
    }
    Ok((0..n).map(|_| positive_unit(alpha / 2.0, rng)).collect())
}

/// `n` standard Rayleigh draws `W = √(-ln V)`, density `2w e^{-w²}`.
pub fn sample_rayleigh_std(n: usize, rng: &mut RngStream) -> Result<Vec<f64>> {
    check_n(n)?;
    Ok((0..n).map(|_| rng.exponential().sqrt()).collect())
}

/// `n` amplitude draws `R = 2σ √U W`; at α = 2 the mixing variable is 1.
pub fn sample_amplitude(n: usize, psi: &AmplitudeParams, rng: &mut RngStream) -> Result<Vec<f64>> {
    check_n(n)?;
    let scale = 2.0 * psi.sigma;
    if psi.alpha >= GAUSSIAN_ALPHA {
        return Ok(sample_rayleigh_std(n, rng)?.into_iter().map(|w| scale * w).collect());
    }
    let u = sample_pas(n, psi.alpha, rng)?;
    let w = sample_rayleigh_std(n, rng)?;
    Ok(u.iter().zip(&w).map(|(u, w)| scale * u.sqrt() * w).collect())
}

/// `n` phases uniform on `[0, 2π)`.
pub fn sample_phase(n: usize, rng: &mut RngStream) -> Result<PhaseVector> {
    check_n(n)?;
    let theta = (0..n)
        .map(|_| {
            let t = TAU * rng.uniform();
            if t < TAU {
                t
            } else {
                0.0
            }
        })
        .collect();
    Ok(PhaseVector { theta })
}
