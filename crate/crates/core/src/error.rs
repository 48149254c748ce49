use thiserror::Error;

/// Errors raised by the algebra engine and its front-ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at t = {0}")]
    PoleAtEvaluationPoint(String),
    #[error("quotient side mismatch: {0}")]
    SideMismatch(String),
    #[error("vanishing denominator: {0}")]
    VanishingDenominator(String),
    #[error("parameters are not in the special series (mu^2 != nu)")]
    NotSpecialSeries,
    #[error("shifted parameter mu_{0} is not conjugation-fixed (requires mu^2 <= nu)")]
    NonRealShiftedParameter(i64),
    #[error("character parameter alpha must be nonzero")]
    ZeroAlpha,
    #[error("character parameter alpha must be real: {0}")]
    ComplexAlpha(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
