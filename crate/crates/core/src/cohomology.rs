//! Cohomology of direct sums of line bundles on projective space.
//!
//! This is the brute-force side of every Euler-characteristic identity in
//! the crate. A bundle is given by its splitting type, the multiset of
//! twists `a` of its summands `O(a)`. Only split bundles are handled; for
//! anything else the Ulrich property has to come from the literature.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::arith;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SplittingTypeError {
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("a splitting type needs at least one summand")]
    Empty,
}

/// Multiset of twists of a direct sum of line bundles on `P^n`.
///
/// Twists are stored sorted, so two types that differ by a permutation
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplittingType {
    ambient_dim: u32,
    twists: Vec<i64>,
}

impl SplittingType {
    pub fn new(ambient_dim: u32, twists: impl Into<Vec<i64>>) -> Result<Self, SplittingTypeError> {
        let mut twists = twists.into();
        if ambient_dim == 0 {
            return Err(SplittingTypeError::ZeroDimension);
        }
        if twists.is_empty() {
            return Err(SplittingTypeError::Empty);
        }
        twists.sort_unstable();
        Ok(SplittingType {
            ambient_dim,
            twists,
        })
    }

    /// `rank` copies of `O(a)`.
    pub fn uniform(ambient_dim: u32, a: i64, rank: usize) -> Result<Self, SplittingTypeError> {
        Self::new(ambient_dim, alloc::vec![a; rank])
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Direct sum of two types on the same projective space.
    pub fn direct_sum(&self, other: &SplittingType) -> Option<SplittingType> {
        if self.ambient_dim != other.ambient_dim {
            return None;
        }
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        SplittingType::new(self.ambient_dim, twists).ok()
    }
}

/// Dimensions `h^q` for `q = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    h: Vec<BigUint>,
}

impl CohomologyTable {
    fn zero(n: u32) -> Self {
        CohomologyTable {
            h: alloc::vec![BigUint::zero(); n as usize + 1],
        }
    }

    /// `h^q`; zero outside `0..=n`.
    pub fn get(&self, q: usize) -> BigUint {
        self.h.get(q).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.h
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().all(Zero::is_zero)
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.h
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (q, h)| {
                let h = BigInt::from(h.clone());
                if q % 2 == 0 {
                    acc + h
                } else {
                    acc - h
                }
            })
    }
}

/// `h^q(P^n, O(a))`.
///
/// Only `h^0` (for `a >= 0`) and `h^n` (for `a <= -n-1`, by Serre duality
/// `h^n(O(a)) = h^0(O(-a-n-1))`) can be nonzero.
pub fn h_line_bundle(n: u32, a: i64, q: u32) -> BigUint {
    let n64 = u64::from(n);
    if q == 0 && a >= 0 {
        arith::binomial(n64 + a as u64, n64)
    } else if q == n && a < -(i64::from(n)) {
        arith::binomial(a.unsigned_abs() - 1, n64)
    } else {
        BigUint::zero()
    }
}

/// Cohomology of `t ⊗ O(twist)`.
pub fn cohomology_of(t: &SplittingType, twist: i64) -> CohomologyTable {
    let n = t.ambient_dim;
    let mut table = CohomologyTable::zero(n);
    for &a in &t.twists {
        for q in 0..=n {
            table.h[q as usize] += h_line_bundle(n, a + twist, q);
        }
    }
    table
}

/// Whether `t` is Ulrich for `(P^n, O(pd))`: `t(-i·pd)` has no cohomology for
/// `i = 1..=n`.
pub fn is_ulrich_split(t: &SplittingType, pd: u64) -> bool {
    let pd = pd as i64;
    (1..=i64::from(t.ambient_dim)).all(|i| cohomology_of(t, -i * pd).is_zero())
}

/// `χ(t(twist))` as the alternating sum of the cohomology table.
pub fn euler_char(t: &SplittingType, twist: i64) -> BigInt {
    cohomology_of(t, twist).euler_characteristic()
}

/// `χ(t(twist))` from the Hilbert polynomial, `Σ C(n + a + twist, n)` with
/// the binomial read as a polynomial in `a + twist`.
///
/// Independent of [`euler_char`]; the two must agree.
pub fn hilbert_polynomial(t: &SplittingType, twist: i64) -> BigInt {
    let n = u64::from(t.ambient_dim);
    t.twists
        .iter()
        .map(|&a| arith::binomial_polynomial(&BigInt::from(a + twist), n))
        .sum()
}

/// `rank/n! · Π_{j=1..n} (l + j·pd)`, the Euler characteristic every Ulrich
/// bundle of the given rank on `(P^n, O(pd))` must have.
pub fn ulrich_chi_formula(n: u32, pd: u64, rank: u64, l: i64) -> BigRational {
    let l = BigInt::from(l);
    let pd = BigInt::from(pd);
    let mut prod = BigInt::from(rank);
    for j in 1..=n {
        prod *= &l + BigInt::from(j) * &pd;
    }
    BigRational::new(prod, BigInt::from(arith::factorial(u64::from(n))))
}

/// `N = C(n + pd, pd)`; the Veronese embedding lands in `P^{N-1}`.
pub fn veronese_embedding_dim(n: u64, pd: u64) -> BigUint {
    arith::binomial(n + pd, pd)
}

/// Smallest rank of an Ulrich bundle for `(P^1, O(pd))`.
///
/// Every bundle on the line splits, so the oracle is exhaustive here. It
/// scans ranks in increasing order and returns the first splitting type that
/// passes, which is always `O(pd - 1)` of rank one.
pub fn minimal_ulrich_on_line(pd: u64) -> SplittingType {
    let pd_i = pd as i64;
    for a in -pd_i - 2..=pd_i + 2 {
        let t = SplittingType::new(1, [a]).expect("nonempty on P^1");
        if is_ulrich_split(&t, pd) {
            return t;
        }
    }
    // O(pd - 1) is always Ulrich on the line.
    SplittingType::new(1, [pd_i - 1]).expect("nonempty on P^1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn st(n: u32, tw: &[i64]) -> SplittingType {
        SplittingType::new(n, tw.to_vec()).unwrap()
    }

    #[test]
    fn line_bundle_values() {
        assert_eq!(h_line_bundle(1, 1, 0), BigUint::from(2u32));
        assert_eq!(h_line_bundle(1, -1, 0), BigUint::zero());
        assert_eq!(h_line_bundle(1, -1, 1), BigUint::zero());
        assert_eq!(h_line_bundle(2, -3, 2), BigUint::one());
        assert_eq!(h_line_bundle(2, -5, 2), BigUint::from(6u32));
        assert_eq!(h_line_bundle(3, 2, 1), BigUint::zero());
    }

    #[test]
    fn tables() {
        assert!(cohomology_of(&st(1, &[1, 1]), -2).is_zero());
        let t = cohomology_of(&st(2, &[0]), 0);
        assert_eq!(t.entries(), [BigUint::one(), BigUint::zero(), BigUint::zero()]);
        let t = cohomology_of(&st(1, &[-1, -2]), 0);
        assert_eq!(t.get(0), BigUint::zero());
        assert_eq!(t.get(1), BigUint::one());
        assert_eq!(t.get(7), BigUint::zero());
    }

    #[test]
    fn ulrich_examples() {
        assert!(is_ulrich_split(&st(1, &[1, 1]), 2));
        assert!(is_ulrich_split(&st(2, &[0]), 1));
        // no line bundle on the plane kills both twists -2 and -4
        for a in -10..=10 {
            assert!(!is_ulrich_split(&st(2, &[a]), 2), "a = {a}");
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_char(&st(1, &[1, 1]), 0), BigInt::from(4));
        assert_eq!(euler_char(&st(2, &[0]), 0), BigInt::one());
        assert_eq!(euler_char(&st(1, &[1, 1]), -2), BigInt::zero());
    }

    #[test]
    fn chi_formula_examples() {
        let four = BigRational::from_integer(BigInt::from(4));
        assert_eq!(ulrich_chi_formula(1, 2, 2, 0), four);
        assert_eq!(
            ulrich_chi_formula(3, 2, 2, 0),
            BigRational::from_integer(BigInt::from(16))
        );
        for n in 1..5u32 {
            for j in 1..=i64::from(n) {
                assert!(ulrich_chi_formula(n, 3, 2, -j * 3).is_zero());
            }
        }
    }

    #[test]
    fn veronese() {
        assert_eq!(veronese_embedding_dim(1, 2), BigUint::from(3u32));
        assert_eq!(veronese_embedding_dim(3, 2), BigUint::from(10u32));
        assert_eq!(veronese_embedding_dim(2, 3), BigUint::from(10u32));
    }

    #[test]
    fn line_minimal_ulrich() {
        for pd in 1..10 {
            let t = minimal_ulrich_on_line(pd);
            assert_eq!(t.rank(), 1);
            assert_eq!(t.twists(), [pd as i64 - 1]);
        }
    }

    #[test]
    fn splitting_type_errors() {
        assert_eq!(SplittingType::new(0, [1]), Err(SplittingTypeError::ZeroDimension));
        assert_eq!(SplittingType::new(1, []), Err(SplittingTypeError::Empty));
        assert_eq!(st(2, &[3, -1, 0]), st(2, &[0, 3, -1]));
    }
}
