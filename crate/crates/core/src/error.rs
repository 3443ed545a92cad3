use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Why a `(n1, n2)` pair fails the lifting hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairDefect {
    /// `n2` does not divide `n1`.
    NotDivisor,
    /// `rad(n1)` does not divide `n2`.
    RadicalMissing,
    /// `v2(n1) >= 2` but `2 rad(n1)` does not divide `n2`.
    TwoAdicCaseViolated,
}

impl fmt::Display for PairDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairDefect::NotDivisor => "n2 does not divide n1",
            PairDefect::RadicalMissing => "rad(n1) does not divide n2",
            PairDefect::TwoAdicCaseViolated => "v2(n1) >= 2 but 2*rad(n1) does not divide n2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{a} is not coprime to {n}")]
    NotCoprime { a: i64, n: u64 },
    #[error("invalid base pair ({n1}, {n2}): {reason}")]
    InvalidPair {
        n1: u64,
        n2: u64,
        reason: PairDefect,
    },
    #[error("inexact division {numerator} / {denominator}")]
    InexactDivision { numerator: u64, denominator: u64 },
    #[error("balanced-progression search requires an odd modulus, got {0}")]
    EvenModulus(u64),
    #[error("sequence must have at least one element")]
    EmptySequence,
    #[error("residue {value} out of range for modulus {modulus}")]
    ResidueOutOfRange { value: u64, modulus: u64 },
    #[error("value {0} does not fit in 64 bits")]
    Overflow(u128),
}
