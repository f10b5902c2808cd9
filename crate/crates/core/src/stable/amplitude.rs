//! Amplitude distribution `R = 2σ √U W` (Rayleigh scale mixture).
//!
//! Writing the mixing variable through Kanter's representation,
//! `1/U = (w / A(v))^γ` with `v ~ U(0, π)`, `w ~ Exp(1)` and `γ = (2-α)/α`,
//! turns every mixture integral into a smooth double integral on
//! `(0, π) × (0, ∞)`:
//!
//! ```text
//! P(R > r) = (1/π) ∫∫ exp(-w - c (w/A(v))^γ) dw dv,         c = r²/4σ²
//! f_R(r)   = r/(2σ²π) ∫∫ (w/A(v))^γ exp(-w - c (w/A(v))^γ) dw dv
//! ```
//!
//! The inner integral runs over `y = ln w` with tolerance one tenth of the
//! outer one.

use std::f64::consts::PI;

use super::positive::Kanter;
use super::{AmplitudeParams, GAUSSIAN_ALPHA};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_breaks, level_crossing, QuadratureSpec};

const Y_LO: f64 = -45.0;
const Y_HI: f64 = 4.0;

/// Outer break points sit where `ln b(v)` crosses these levels.
const LN_B_LEVELS: [f64; 11] = [-10.0, -4.0, -1.0, 0.0, 1.0, 3.0, 6.0, 10.0, 16.0, 24.0, 34.0];

#[derive(Clone, Copy)]
enum Inner {
    /// `∫ e^{-w} exp(-b w^γ) dw`
    Survival,
    /// `∫ e^{-w} (1 - exp(-b w^γ)) dw`
    Distribution,
    /// `∫ w^γ e^{-w} exp(-b w^γ) dw`
    Density,
}

struct Mixture {
    kanter: Kanter,
    rho: f64,
    gamma: f64,
}

impl Mixture {
    fn new(alpha: f64) -> Self {
        let rho = alpha / 2.0;
        Mixture {
            kanter: Kanter::new(alpha),
            rho,
            gamma: (1.0 - rho) / rho,
        }
    }

    /// `γ ln A(v)`; the `1/(1-ρ)` in `ln A` cancels against `γ`.
    fn gamma_ln_a(&self, v: f64) -> f64 {
        self.kanter.ln_kernel(v) / self.rho
    }

    fn inner(&self, kind: Inner, ln_b: f64, quad: &QuadratureSpec) -> Result<f64> {
        let g = self.gamma;
        let b = ln_b.exp();
        let mut pts = vec![Y_LO, 0.0, Y_HI];
        let y_b = -ln_b / g;
        if y_b > Y_LO && y_b < Y_HI && y_b != 0.0 {
            pts.push(y_b);
        }
        pts.sort_by(f64::total_cmp);
        let integral = integrate_breaks(
            |y| {
                let ew = y.exp();
                let bw = b * (g * y).exp();
                let v = match kind {
                    Inner::Survival => (y - ew - bw).exp(),
                    Inner::Distribution => (y - ew).exp() * -(-bw).exp_m1(),
                    Inner::Density => ((1.0 + g) * y - ew - bw).exp(),
                };
                if v.is_finite() {
                    v
                } else {
                    0.0
                }
            },
            &pts,
            quad,
        )?;
        Ok(integral.value)
    }

    /// `0, π/2, π` and the points where `ln b(v) = ln c - γ ln A(v)` crosses
    /// [`LN_B_LEVELS`]; `ln b` decreases to `-∞` at `v = π`.
    fn outer_breaks(&self, ln_c: f64) -> Vec<f64> {
        let mut pts = vec![0.0, 0.5 * PI, PI];
        for level in LN_B_LEVELS {
            pts.push(level_crossing(|v| level - ln_c + self.gamma_ln_a(v), 0.0, PI, 1e-2));
        }
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        pts
    }

    /// `(1/π) ∫_0^π inner(b(v)) weight(v) dv` with `ln b(v) = ln c - γ ln A(v)`.
    fn outer(&self, kind: Inner, ln_c: f64, quad: &QuadratureSpec) -> Result<f64> {
        let inner_quad = quad.tightened(10.0);
        let mut failure = None;
        let integral = integrate_breaks(
            |v| {
                let gla = self.gamma_ln_a(v);
                if gla.is_infinite() {
                    return match kind {
                        Inner::Survival => 1.0,
                        _ => 0.0,
                    };
                }
                match self.inner(kind, ln_c - gla, &inner_quad) {
                    Ok(val) => match kind {
                        Inner::Density => val * (-gla).exp(),
                        _ => val,
                    },
                    Err(e) => {
                        failure.get_or_insert(e);
                        0.0
                    }
                }
            },
            &self.outer_breaks(ln_c),
            quad,
        )?;
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(integral.value / PI)
    }
}

fn check(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("amplitude must be positive and finite, got {r}")))
    }
}

fn scaled(r: f64, psi: &AmplitudeParams) -> f64 {
    let z = r / (2.0 * psi.sigma);
    z * z
}

/// Amplitude density `f_R(r | Ψ)`.
pub fn amplitude_pdf(r: f64, psi: &AmplitudeParams, quad: &QuadratureSpec) -> Result<f64> {
    check(r)?;
    let c = scaled(r, psi);
    let s2 = psi.sigma * psi.sigma;
    if psi.alpha >= GAUSSIAN_ALPHA {
        return Ok(r / (2.0 * s2) * (-c).exp());
    }
    let m = Mixture::new(psi.alpha);
    Ok(r / (2.0 * s2) * m.outer(Inner::Density, c.ln(), quad)?)
}

/// Amplitude distribution function `F_R(r | Ψ)`.
pub fn amplitude_cdf(r: f64, psi: &AmplitudeParams, quad: &QuadratureSpec) -> Result<f64> {
    if r == f64::INFINITY {
        return Ok(1.0);
    }
    check(r)?;
    let c = scaled(r, psi);
    if psi.alpha >= GAUSSIAN_ALPHA {
        return Ok(-(-c).exp_m1());
    }
    let m = Mixture::new(psi.alpha);
    let f = m.outer(Inner::Distribution, c.ln(), quad)?;
    if f <= 0.5 {
        return Ok(f.max(0.0));
    }
    Ok((1.0 - m.outer(Inner::Survival, c.ln(), quad)?).clamp(0.0, 1.0))
}

/// Amplitude survival function `P(R > r | Ψ)`.
pub fn amplitude_sf(r: f64, psi: &AmplitudeParams, quad: &QuadratureSpec) -> Result<f64> {
    check(r)?;
    let c = scaled(r, psi);
    if psi.alpha >= GAUSSIAN_ALPHA {
        return Ok((-c).exp());
    }
    let m = Mixture::new(psi.alpha);
    let s = m.outer(Inner::Survival, c.ln(), quad)?;
    if s <= 0.5 {
        return Ok(s.max(0.0));
    }
    Ok((1.0 - m.outer(Inner::Distribution, c.ln(), quad)?).clamp(0.0, 1.0))
}

/// Amplitude log-likelihood `Σ ln f_R(r_i | Ψ)`.
pub fn amplitude_log_likelihood(r: &[f64], psi: &AmplitudeParams, quad: &QuadratureSpec) -> Result<f64> {
    if r.is_empty() {
        return Err(Error::domain("log-likelihood of an empty sample"));
    }
    let s2 = psi.sigma * psi.sigma;
    r.iter()
        .map(|&x| {
            if psi.alpha >= GAUSSIAN_ALPHA {
                check(x)?;
                Ok((x / (2.0 * s2)).ln() - scaled(x, psi))
            } else {
                Ok(amplitude_pdf(x, psi, quad)?.ln())
            }
        })
        .sum()
}
