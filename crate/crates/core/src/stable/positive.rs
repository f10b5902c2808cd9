//! Positive stable mixing law `U ~ S(α/2, 1, cos(πα/4)^{2/α}, 0)`.
//!
//! With `ρ = α/2` and `a = ρ/(1-ρ)`, Kanter's representation gives
//!
//! ```text
//! F_U(p) = (1/π) ∫_0^π exp{-p^{-a} A(u)} du,   A(u) = K(u)^{1/(1-ρ)}
//! K(u)   = sin(ρu)^ρ sin((1-ρ)u)^{1-ρ} / sin u
//! ```

use std::f64::consts::PI;

use crate::error::{Error, Result};
use super::BREAK_LEVELS;
use crate::quadrature::{integrate_breaks, level_crossing, QuadratureSpec};

/// The kernel `K(u) = sin(αu/2)^{α/2} sin((1-α/2)u)^{1-α/2} / sin u`.
///
/// The distribution function uses this kernel raised to `2/(2-α)`.
pub fn kanter_kernel(u: f64, alpha: f64) -> Result<f64> {
    if !(u > 0.0 && u < PI) {
        return Err(Error::domain(format!("kernel argument must lie in (0, π), got {u}")));
    }
    check_alpha(alpha)?;
    let rho = alpha / 2.0;
    Ok((rho * u).sin().powf(rho) * ((1.0 - rho) * u).sin().powf(1.0 - rho) / u.sin())
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 2.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("positive stable law needs alpha in (0, 2), got {alpha}")))
    }
}

/// `ρ·ln K(u)`-style quantities for a fixed `ρ = α/2`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Kanter {
    rho: f64,
}

impl Kanter {
    pub(crate) fn new(alpha: f64) -> Self {
        Kanter { rho: alpha / 2.0 }
    }

    /// `(1-ρ)·ln A(u) = ln K(u)`, with the analytic limit at `u = 0`.
    pub(crate) fn ln_kernel(&self, u: f64) -> f64 {
        let r = self.rho;
        if u <= 0.0 {
            return r * r.ln() + (1.0 - r) * (1.0 - r).ln();
        }
        if u >= PI {
            return f64::INFINITY;
        }
        r * (r * u).sin().ln() + (1.0 - r) * ((1.0 - r) * u).sin().ln() - u.sin().ln()
    }

    /// `ln A(u)`.
    pub(crate) fn ln_a(&self, u: f64) -> f64 {
        self.ln_kernel(u) / (1.0 - self.rho)
    }

    /// Exponent `a = ρ/(1-ρ)` on `p` in the distribution function.
    pub(crate) fn power(&self) -> f64 {
        self.rho / (1.0 - self.rho)
    }

    /// Break points where `ln h = shift + ln A(u)` crosses [`BREAK_LEVELS`].
    fn breaks(&self, shift: f64) -> Vec<f64> {
        let mut pts = vec![0.0, PI];
        for level in BREAK_LEVELS {
            pts.push(level_crossing(|u| shift + self.ln_a(u) - level, 0.0, PI, 1e-2));
        }
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        pts
    }
}

/// Distribution function of the positive stable mixing law.
pub fn pas_cdf(p: f64, alpha: f64, quad: &QuadratureSpec) -> Result<f64> {
    check_alpha(alpha)?;
    if !(p > 0.0) {
        return Err(Error::domain(format!("positive stable cdf needs p > 0, got {p}")));
    }
    if p.is_infinite() {
        return Ok(1.0);
    }
    let k = Kanter::new(alpha);
    let shift = -k.power() * p.ln();
    let integral = integrate_breaks(
        |u| {
            let h = (shift + k.ln_a(u)).exp();
            (-h).exp()
        },
        &k.breaks(shift),
        quad,
    )?;
    Ok((integral.value / PI).clamp(0.0, 1.0))
}

/// Density of the positive stable mixing law,
/// `f_U(u) = (a / πu) ∫_0^π h e^{-h} dv` with `h = u^{-a} A(v)`.
pub fn pas_pdf(u: f64, alpha: f64, quad: &QuadratureSpec) -> Result<f64> {
    check_alpha(alpha)?;
    if !(u > 0.0) {
        return Err(Error::domain(format!("positive stable density needs u > 0, got {u}")));
    }
    if u.is_infinite() {
        return Ok(0.0);
    }
    let k = Kanter::new(alpha);
    let a = k.power();
    let shift = -a * u.ln();
    let integral = integrate_breaks(
        |v| {
            let ln_h = shift + k.ln_a(v);
            let y = (ln_h - ln_h.exp()).exp();
            if y.is_finite() {
                y
            } else {
                0.0
            }
        },
        &k.breaks(shift),
        quad,
    )?;
    Ok(a / (PI * u) * integral.value)
}
