use thiserror::Error;

use crate::hkg::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("no generators supplied")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {gcd}, not 1")]
    NonCoprimeGenerators { gcd: u64 },
    #[error("negative input {0}")]
    NegativeInput(i64),
    #[error("{0} is not a member of the semigroup")]
    NotAMember(u64),
    #[error("generator chain is not telescopic")]
    NotTelescopic,
    #[error("scaled semigroup is not numerical (gcd {gcd})")]
    ResultNotNumerical { gcd: u64 },
    #[error("integer overflow while building a semigroup")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("generators must be non-empty and positive")]
    BadGenerators,
    #[error("generators have gcd {gcd}, not 1")]
    NonCoprimeGenerators { gcd: u64 },
    #[error("exhaustive enumeration needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("exhaustive bound {bound} is below the conductor {conductor}")]
    BoundBelowConductor { bound: u64, conductor: u64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HkgError {
    #[error("invalid ramification data: {}", .0.summary())]
    InvalidData(Box<ValidationReport>),
    #[error("malformed ramification data: {0}")]
    Malformed(String),
    #[error("Riemann-Hurwitz gives a non-integral genus (2g = {twice_genus})")]
    NonIntegralGenus { twice_genus: String },
    #[error("lower jump {index} is not an integer: {value}")]
    NonIntegralLowerJump { index: usize, value: String },
    #[error("upper jumps must be strictly increasing and positive")]
    NonIncreasingUpperJumps,
    #[error("structural claim failed: {0}")]
    AssertionFailure(String),
    #[error("identity violated: {lhs} != {rhs}")]
    IdentityViolation { lhs: String, rhs: String },
    #[error("polydifferentials need genus >= 2 and m >= 1")]
    DegenerateInput,
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReportError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {}", .0.summary())]
    Validation(Box<ValidationReport>),
    #[error("verification mismatch in {field}: reported {reported}, oracle {oracle}")]
    VerificationMismatch {
        field: String,
        reported: String,
        oracle: String,
    },
    #[error(transparent)]
    Hkg(#[from] HkgError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
