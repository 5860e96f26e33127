use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    /// Every series route exhausted its term budget.
    #[error("series did not converge within {terms} terms")]
    NonConvergent { terms: usize },
    /// Successive quadrature levels failed to agree within tolerance.
    #[error("quadrature did not converge by level {level}")]
    NoConvergence { level: u32 },
    #[error("target value {y} outside bracket image [{f_lo}, {f_hi}]")]
    BracketInvalid { y: f64, f_lo: f64, f_hi: f64 },
    #[error("root finder exceeded {0} iterations")]
    MaxIterExceeded(usize),
    #[error("unknown predicate id: {0}")]
    UnknownPredicate(String),
    #[error("point outside predicate domain: {0}")]
    DomainViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
