//! Exact arithmetic for Ulrich complexity and categorical representability
//! dimension of twisted projective varieties.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is a pure
//! function over immutable values; no floating point is used anywhere.
//!
//! Modules:
//!
//! * [`brauer`] validates degree, period and index of a central simple
//!   algebra.
//! * [`cohomology`] is a brute-force cohomology oracle for direct sums of
//!   line bundles on projective space.
//! * [`bounds`] produces provenance-tagged bounds on the Ulrich complexity
//!   of Brauer–Severi varieties, twisted flags, involution varieties and
//!   quadrics.
//! * [`rdim`] evaluates the representability-dimension rules.
//! * [`chi`] holds the Euler-characteristic identities and the criteria for
//!   `uc = rdim + 1` and its affine generalisation.
//! * [`special`] covers twisted ribbons, products of Brauer–Severi curves and
//!   the curve/surface comparison table.
//! * [`arith`] and [`provenance`] are shared helpers.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bounds;
pub mod brauer;
pub mod chi;
pub mod cohomology;
pub mod provenance;
pub mod rdim;
pub mod special;

pub use bounds::{PolarizedBs, UcBound};
pub use brauer::AlgebraInvariants;
pub use cohomology::{CohomologyTable, SplittingType};
pub use provenance::{Rule, Tag};
pub use rdim::{RdimRange, RdimValue};

/// Arbitrary-precision unsigned integer used for ranks and bounds.
pub use num_bigint::BigUint;
/// Arbitrary-precision signed integer used for Euler characteristics.
pub use num_bigint::BigInt;
/// Exact rational with big-integer numerator and denominator.
pub use num_rational::BigRational;
