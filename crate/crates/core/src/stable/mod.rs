//! Stable laws, the positive-stable mixing law and the amplitude
//! ("generalized Rayleigh") distribution.
//!
//! All laws use the characteristic function
//!
//! ```text
//! φ(t) = exp{ -|σt|^α [1 - jβ sign(t) tan(πα/2)] + jμt }      α ≠ 1
//! φ(t) = exp{ -|σt|   [1 + jβ sign(t) (2/π) log|t|] + jμt }   α = 1
//! ```
//!
//! so the symmetric member has chf `exp(-σ^α |t|^α)` and at α = 2 is the
//! normal law with variance 2σ².

mod amplitude;
mod positive;
mod sas;
mod table;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use amplitude::{amplitude_cdf, amplitude_log_likelihood, amplitude_pdf, amplitude_sf};
pub use positive::{kanter_kernel, pas_cdf, pas_pdf};
pub use sas::{sas_cdf, sas_log_pdf, sas_loglik, sas_pdf};
pub use table::{SasLogDensity, SasTable};

/// At or above this index the symmetric law is treated as Gaussian and the
/// amplitude law as Rayleigh.
pub const GAUSSIAN_ALPHA: f64 = 2.0 - 1e-9;

/// Levels of `ln h` used as break points for integrands in `h e^{-h}`,
/// `e^{-h}` or `1 - e^{-h}`: `h = 50, 44, 38, ..., 2, 1` above the peak, so
/// neighbouring breaks change `h` by at most 6, then `ln h` stepping down to
/// -40, beyond which all integrands are flat to within `e^{-40}`.
pub(crate) const BREAK_LEVELS: [f64; 21] = [
    3.912_023_005_428_146, // ln 50
    3.784_189_633_918_261, // ln 44
    3.637_586_159_726_386, // ln 38
    3.465_735_902_799_726, // ln 32
    3.258_096_538_021_482, // ln 26
    2.995_732_273_553_991, // ln 20
    2.639_057_329_615_259, // ln 14
    2.079_441_541_679_836, // ln 8
    1.386_294_361_119_890_6, // ln 4
    std::f64::consts::LN_2,
    0.0,
    -1.0,
    -2.5,
    -4.5,
    -7.0,
    -10.0,
    -14.0,
    -19.0,
    -25.0,
    -32.0,
    -40.0,
];

/// Four-parameter stable law `S(α, β, σ, μ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StableLaw {
    alpha: f64,
    beta: f64,
    sigma: f64,
    mu: f64,
}

impl StableLaw {
    pub fn new(alpha: f64, beta: f64, sigma: f64, mu: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(Error::domain(format!("alpha must lie in (0, 2], got {alpha}")));
        }
        if !(-1.0..=1.0).contains(&beta) {
            return Err(Error::domain(format!("beta must lie in [-1, 1], got {beta}")));
        }
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::domain(format!("sigma must be positive, got {sigma}")));
        }
        if !mu.is_finite() {
            return Err(Error::domain("mu must be finite"));
        }
        Ok(StableLaw {
            alpha,
            beta,
            sigma,
            mu,
        })
    }

    /// Zero-location symmetric law `S(α, 0, σ, 0)`.
    pub fn symmetric(alpha: f64, sigma: f64) -> Result<Self> {
        Self::new(alpha, 0.0, sigma, 0.0)
    }

    /// The positive stable mixing law `S(a/2, 1, cos(πa/4)^{2/a}, 0)` for a
    /// tail index `a ∈ (0, 2)`. Its Laplace transform is `exp(-s^{a/2})`.
    pub fn positive(tail: f64) -> Result<Self> {
        if !(tail > 0.0 && tail < 2.0) {
            return Err(Error::domain(format!(
                "positive stable mixing law needs tail index in (0, 2), got {tail}"
            )));
        }
        let scale = (std::f64::consts::PI * tail / 4.0).cos().powf(2.0 / tail);
        Self::new(tail / 2.0, 1.0, scale, 0.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn is_symmetric(&self) -> bool {
        self.beta == 0.0 && self.mu == 0.0
    }

    pub(crate) fn require_symmetric(&self) -> Result<()> {
        if self.is_symmetric() {
            Ok(())
        } else {
            Err(Error::domain("operation requires a zero-location symmetric law (beta = 0, mu = 0)"))
        }
    }
}

/// Amplitude distribution parameters Ψ = (α, σ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmplitudeParams {
    pub alpha: f64,
    pub sigma: f64,
}

impl AmplitudeParams {
    pub fn new(alpha: f64, sigma: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(Error::domain(format!("alpha must lie in (0, 2], got {alpha}")));
        }
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::domain(format!("sigma must be positive, got {sigma}")));
        }
        Ok(AmplitudeParams { alpha, sigma })
    }

    /// Law of either projection `R cos θ` / `R sin θ`.
    pub fn marginal_law(&self) -> StableLaw {
        StableLaw {
            alpha: self.alpha,
            beta: 0.0,
            sigma: self.sigma,
            mu: 0.0,
        }
    }
}
