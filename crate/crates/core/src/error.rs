use thiserror::Error;

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("generators must be positive integers")]
    NonPositiveElement,
    #[error("gcd is {0}, not 1")]
    GcdNotOne(u64),
    #[error("need at least two generators, got {0}")]
    NeedsTwoGenerators(usize),
    #[error("representation count overflow at n = {n}")]
    CountOverflow { n: u64 },
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("argument outside the stated domain: {0}")]
    Domain(String),
    #[error("p = {0} is outside the supported range 3..=10")]
    UnsupportedP(u64),
    #[error("odd n must be at least 3")]
    OddNTooSmall,
    #[error("rational result is not an integer in {0} (internal invariant violated)")]
    NonIntegralResult(&'static str),
    #[error("table would need {needed} cells, over the cap of {limit} (see PFROB_MAX_TABLE)")]
    TableLimit { needed: u64, limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
