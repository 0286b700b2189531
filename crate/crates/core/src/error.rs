use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational {0:?}")]
    ParseRational(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u32),
    #[error("genus {genus} needs {expected} boundary coefficients, got {found}")]
    BoundaryLength {
        genus: u32,
        expected: usize,
        found: usize,
    },
    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },
    #[error("the lambda coefficient of a representative must be nonzero")]
    ZeroLambdaCoefficient,
    #[error("{entry} is not defined in genus {genus}")]
    UnsupportedGenus { entry: String, genus: u32 },
    #[error("unknown catalog divisor {0:?}")]
    UnknownCatalogEntry(String),
    #[error("germ has no intersection degree for divisor {0:?}")]
    MissingDegree(String),
    #[error("intersection degree for {key:?} must be non-negative, got {value}")]
    NegativeDegree { key: String, value: Rational },
    #[error("pseudo-period must be at least 1")]
    ZeroPseudoPeriod,
    #[error("germ multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("base genus must be non-negative, got {0}")]
    NegativeBaseGenus(i64),
    #[error("requires genus 2, got {0}")]
    NotGenusTwo(u32),
    #[error("local Noether identity 12*chi_F = c1^2 + e_F fails (residual {residual})")]
    LocalNoether { residual: Rational },
    #[error("Noether identity 12*chi_f = K_f^2 + e_f fails (residual {residual})")]
    Noether { residual: Rational },
    #[error("{name} must be even and positive, got {value}")]
    NotEvenPositive { name: &'static str, value: i64 },
    #[error("{0}")]
    Input(String),
}
