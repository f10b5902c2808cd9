//! Alpha-stable amplitude ("generalized Rayleigh") distribution toolkit.

pub mod error;
pub mod estimators;
pub mod gof;
pub mod harness;
pub mod quadrature;
pub mod optimize;
pub mod rng;
pub mod sampling;
pub mod stable;

pub use error::{Error, Result};
pub use quadrature::QuadratureSpec;
pub use stable::{AmplitudeParams, StableLaw};
