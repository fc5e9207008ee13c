use thiserror::Error;

/// Errors raised by the arithmetic substrate and by the check runner.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational with a `p` in its denominator was reduced modulo a power of `p`.
    #[error("NegativeValuation: {value} has {p}-adic valuation {valuation} < 0")]
    NegativeValuation {
        value: String,
        p: u64,
        valuation: i64,
    },

    #[error("NotInvertible: {a} has no inverse modulo {m}")]
    NotInvertible { a: String, m: String },

    #[error("NonUnitSeries: constant coefficient is zero")]
    NonUnitSeries,

    #[error("RangeError: {0}")]
    Range(String),

    #[error("NotPrime: {0} is not prime")]
    NotPrime(u64),

    #[error("InvalidSpec: {0}")]
    InvalidSpec(String),

    /// Exact evaluation of a rational function hit one of its poles.
    #[error("Pole: {0}")]
    Pole(String),

    #[error("UnknownCheck: {0}")]
    UnknownCheck(String),

    #[error("DomainError: {0}")]
    Domain(String),
}

impl Error {
    /// Short tag used in reports (`NegativeValuation`, `DomainError`, ...).
    pub fn tag(&self) -> &'static str {
        match self {
            Error::NegativeValuation { .. } => "NegativeValuation",
            Error::NotInvertible { .. } => "NotInvertible",
            Error::NonUnitSeries => "NonUnitSeries",
            Error::Range(_) => "RangeError",
            Error::NotPrime(_) => "NotPrime",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::Pole(_) => "Pole",
            Error::UnknownCheck(_) => "UnknownCheck",
            Error::Domain(_) => "DomainError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
