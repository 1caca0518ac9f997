//! Crate-wide error type. Every fallible contract in the pipeline names its
//! failure mode here; numeric checks that merely *report* (trend checks, audits)
//! return data instead of failing.

use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZeroPoly,

    #[error("laurent tail is not a polynomial: coefficient of z^-{index} is {magnitude}")]
    NonPolynomialTail { index: usize, magnitude: String },

    #[error("reciprocal of a laurent tail with vanishing constant term")]
    ReciprocalConstantTerm,

    #[error("truncation order too short: need {needed}, have {have}")]
    TruncationTooShort { needed: usize, have: usize },

    #[error("exponents do not sum to zero")]
    ExponentSumNonzero,

    #[error("integer exponent: {k} * alpha_{j} is an integer, the system degenerates")]
    IntegerExponent { k: i64, j: usize },

    #[error("invalid function data: {0}")]
    InvalidFunction(String),

    #[error("grid too coarse near an unresolved sign pattern (spacing {spacing})")]
    GridTooCoarse { spacing: f64 },

    #[error("root finder did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("point lies on a branch cut")]
    OnBranchCut,

    #[error("point lies on the boundary of the domain")]
    OnBoundary,

    #[error("evaluation point outside the support of the measure")]
    OutsideSupport,

    #[error("support mismatch: fraction {off_fraction} of empirical mass is off-support")]
    SupportMismatch { off_fraction: f64 },

    #[error("ODE order mismatch: expected {expected}, got {got}")]
    OrderMismatch { expected: usize, got: usize },

    #[error("structure audit failed: {0}")]
    StructureMismatch(String),

    #[error("wronskian is degenerate (non-normal index or zero solution)")]
    DegenerateWronskian,

    #[error("newton iteration diverged (residual {residual})")]
    NewtonDivergence { residual: String },

    #[error("integration path crosses a branch cut")]
    PathCrossesCut,

    #[error("quadrature failed to reach tolerance {tol} (estimate error {err})")]
    QuadratureFailure { tol: String, err: String },

    #[error("two independent constructions disagree: {0}")]
    CrossCheckFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
