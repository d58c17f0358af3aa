//! Degree, period and index of a central simple algebra.
//!
//! The invariants are inputs: nothing here computes them from a presentation
//! of the algebra. [`AlgebraInvariants::validate`] only checks that a triple
//! can occur, i.e. `per | ind | deg` and `per`, `ind` share their primes.

use num_bigint::BigUint;
use thiserror::Error;

use crate::arith;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BrauerError {
    #[error("{field} must be at least 1")]
    NonPositive { field: &'static str },
    #[error("divisibility violated: {small} does not divide {large} ({what})")]
    DivisibilityViolation {
        what: &'static str,
        small: u64,
        large: u64,
    },
    #[error("period {period} and index {index} have different prime factors")]
    PrimeFactorMismatch { period: u64, index: u64 },
}

/// A validated `(degree, period, index)` triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraInvariants {
    degree: u64,
    period: u64,
    index: u64,
}

impl AlgebraInvariants {
    pub fn validate(degree: u64, period: u64, index: u64) -> Result<Self, BrauerError> {
        for (field, v) in [("degree", degree), ("period", period), ("index", index)] {
            if v == 0 {
                return Err(BrauerError::NonPositive { field });
            }
        }
        if arith::prime_support(period) != arith::prime_support(index) {
            return Err(BrauerError::PrimeFactorMismatch { period, index });
        }
        if !index.is_multiple_of(period) {
            return Err(BrauerError::DivisibilityViolation {
                what: "period | index",
                small: period,
                large: index,
            });
        }
        if !degree.is_multiple_of(index) {
            return Err(BrauerError::DivisibilityViolation {
                what: "index | degree",
                small: index,
                large: degree,
            });
        }
        Ok(AlgebraInvariants {
            degree,
            period,
            index,
        })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// Dimension of the associated Brauer–Severi variety.
    pub fn bs_dimension(&self) -> u64 {
        self.degree - 1
    }

    pub fn is_split(&self) -> bool {
        self.index == 1
    }

    /// Degree of a minimal separable splitting field, which is the index.
    pub fn min_splitting_degree(&self) -> u64 {
        self.index
    }
}

/// `per(A^{⊗m}) = per(A) / gcd(per(A), m)`.
pub fn period_of_tensor_power(period: u64, m: u64) -> u64 {
    period / arith::gcd(period, m)
}

/// Rank of the pushforward of a rank `rk` bundle along a splitting field of
/// degree `ind`.
pub fn pushforward_rank(rk: &BigUint, ind: u64) -> BigUint {
    rk * ind
}
