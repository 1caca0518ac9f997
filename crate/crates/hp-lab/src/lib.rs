//! Computational laboratory for type-I Hermite-Pade and Pade polynomials of
//! semiclassical functions `f(z) = prod (z - a_j)^{alpha_j}` with `sum alpha_j = 0`,
//! normalized by `f(oo) = 1`.
//!
//! The crate works in two arithmetic regimes:
//!
//! * **exact** — Gaussian rationals ([`scalar::Exact`]); constructions, nullspaces,
//!   ODE extraction and residuals are decided exactly, with no tolerance;
//! * **float** — arbitrary-precision complex floats ([`scalar::Cplx`], MPFR-backed,
//!   default 256 bits) for zeros, branches of the limit cubic, densities, quadrature
//!   and every asymptotic check.
//!
//! Organization follows the pipeline: [`scalar`]/[`poly`]/[`laurent`]/[`ratfn`] are the
//! arithmetic substrate, [`semiclassical`] holds the function family and its expansion
//! at infinity, [`hp`] builds the Hermite-Pade solutions, [`ode`] builds/extracts and
//! verifies the differential equations they satisfy, [`asymptotics`] handles zeros,
//! limit densities and ratio limits, and [`potential`] the Green-potential equilibrium
//! identities.

pub mod error;
pub mod scalar;
pub mod poly;
pub mod laurent;
pub mod ratfn;
pub mod linalg;
pub mod quad;
pub mod semiclassical;
pub mod hp;
pub mod ode;
pub mod asymptotics;
pub mod potential;
pub mod report;

pub use error::{Error, Result};
pub use scalar::{Cplx, Exact, DEFAULT_PREC};

/// Decimal digits carried by `prec` bits, rounded down.
pub fn digits_for(prec: u32) -> u32 {
    // log10(2) = 0.30103...
    ((prec as f64) * 0.301_029_995_663_981_2).floor() as u32
}
