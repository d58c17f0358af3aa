//! Bounds on the Ulrich complexity of twisted varieties.
//!
//! Every bound pulls the question down to the split model over a minimal
//! splitting field: an Ulrich bundle on `X` base-changes to one of the same
//! rank, and the pushforward of one from the split model has `ind` times the
//! rank. That gives `uc(split) <= uc(X) <= ind · uc(split)`. The remaining
//! rules refine the lower end.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith;
use crate::brauer::AlgebraInvariants;
use crate::provenance::{Rule, Tag};

/// Candidate sets wider than this are not enumerated.
pub const MAX_CANDIDATES: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("outside the candidate table: {0}")]
    OutOfTableDomain(String),
    #[error("{value} is not a positive multiple of the period {period}")]
    NotMultipleOfPeriod { value: u64, period: u64 },
    #[error("quadric parameter m = {0} is below 4")]
    DimensionTooSmall(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("inconsistent bounds: lower {lower} exceeds upper {upper}")]
    Inconsistent { lower: BigUint, upper: BigUint },
    #[error("candidate set is empty or leaves [{lower}, {upper}]")]
    CandidatesOutOfRange { lower: BigUint, upper: String },
}

/// Lower and upper bound on `uc`, an optional set of values it can take, and
/// the rules behind them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UcBound {
    lower: BigUint,
    upper: Option<BigUint>,
    candidates: Option<BTreeSet<BigUint>>,
    provenance: Vec<Tag>,
}

impl UcBound {
    pub fn new(
        lower: BigUint,
        upper: Option<BigUint>,
        provenance: Vec<Tag>,
    ) -> Result<Self, BoundsError> {
        let lower = lower.max(BigUint::one());
        if let Some(u) = &upper {
            if &lower > u {
                return Err(BoundsError::Inconsistent {
                    lower,
                    upper: u.clone(),
                });
            }
        }
        Ok(UcBound {
            lower,
            upper,
            candidates: None,
            provenance,
        })
    }

    pub fn exact(value: BigUint, provenance: Vec<Tag>) -> Result<Self, BoundsError> {
        Self::new(value.clone(), Some(value), provenance)
    }

    pub fn lower(&self) -> &BigUint {
        &self.lower
    }

    pub fn upper(&self) -> Option<&BigUint> {
        self.upper.as_ref()
    }

    pub fn candidates(&self) -> Option<&BTreeSet<BigUint>> {
        self.candidates.as_ref()
    }

    pub fn provenance(&self) -> &[Tag] {
        &self.provenance
    }

    /// The value when the bound pins `uc` down.
    pub fn exact_value(&self) -> Option<&BigUint> {
        if let Some(c) = &self.candidates {
            if c.len() == 1 {
                return c.iter().next();
            }
        }
        match &self.upper {
            Some(u) if *u == self.lower => Some(u),
            _ => None,
        }
    }

    /// Raises the lower end if `value` improves it.
    pub fn raise_lower(&mut self, value: BigUint, tag: Tag) -> Result<(), BoundsError> {
        if value > self.lower {
            if let Some(u) = &self.upper {
                if &value > u {
                    return Err(BoundsError::Inconsistent {
                        lower: value,
                        upper: u.clone(),
                    });
                }
            }
            self.lower = value;
            self.provenance.push(tag);
            self.trim_candidates();
        }
        Ok(())
    }

    /// Lowers the upper end if `value` improves it.
    pub fn lower_upper(&mut self, value: BigUint, tag: Tag) -> Result<(), BoundsError> {
        if value < self.lower {
            return Err(BoundsError::Inconsistent {
                lower: self.lower.clone(),
                upper: value,
            });
        }
        if self.upper.as_ref().is_none_or(|u| &value < u) {
            self.upper = Some(value);
            self.provenance.push(tag);
            self.trim_candidates();
        }
        Ok(())
    }

    /// Restricts `uc` to `set` (intersected with any earlier candidate set).
    pub fn restrict_to(&mut self, set: BTreeSet<BigUint>, tag: Tag) -> Result<(), BoundsError> {
        let merged: BTreeSet<BigUint> = match &self.candidates {
            Some(old) => old.intersection(&set).cloned().collect(),
            None => set,
        };
        let in_range = merged
            .iter()
            .all(|c| c >= &self.lower && self.upper.as_ref().is_none_or(|u| c <= u));
        if merged.is_empty() || !in_range {
            return Err(BoundsError::CandidatesOutOfRange {
                lower: self.lower.clone(),
                upper: self
                    .upper
                    .as_ref()
                    .map_or_else(|| String::from("unknown"), |u| format!("{u}")),
            });
        }
        self.candidates = Some(merged);
        self.provenance.push(tag);
        Ok(())
    }

    pub fn push_tag(&mut self, tag: Tag) {
        self.provenance.push(tag);
    }

    fn trim_candidates(&mut self) {
        if let Some(c) = &mut self.candidates {
            let lower = &self.lower;
            let upper = &self.upper;
            c.retain(|v| v >= lower && upper.as_ref().is_none_or(|u| v <= u));
        }
    }
}

/// A Brauer–Severi variety polarised by `O_X(period · d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolarizedBs {
    algebra: AlgebraInvariants,
    d: u64,
}

impl PolarizedBs {
    pub fn new(algebra: AlgebraInvariants, d: u64) -> Result<Self, BoundsError> {
        if d == 0 {
            return Err(BoundsError::InvalidDescriptor(String::from(
                "polarization multiple d must be at least 1",
            )));
        }
        if algebra.degree() < 2 {
            return Err(BoundsError::InvalidDescriptor(String::from(
                "degree 1 gives a zero-dimensional variety",
            )));
        }
        Ok(PolarizedBs { algebra, d })
    }

    pub fn algebra(&self) -> &AlgebraInvariants {
        &self.algebra
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn dim(&self) -> u64 {
        self.algebra.bs_dimension()
    }

    /// `pd`, the multiple of the hyperplane class after splitting.
    pub fn pd(&self) -> u64 {
        self.algebra.period() * self.d
    }
}

/// Product over primes `q <= n` dividing `pd` of the `q`-part of `n!`.
///
/// Every Ulrich bundle on `(P^n, O(pd))` has rank divisible by this number:
/// `Π_j (pd·j + 1) ≡ 1 mod q`, so `χ(E(1))` being an integer forces the
/// `q`-part of `n!` into the rank. When every prime `<= n` divides `pd` the
/// product is `n!`.
pub fn divisibility_lower_bound(n: u64, pd: u64) -> BigUint {
    arith::primes_up_to(n)
        .into_iter()
        .filter(|q| pd.is_multiple_of(*q))
        .map(|q| BigUint::from(q).pow(arith::factorial_valuation(n, q) as u32))
        .product()
}

/// Whether every prime `q <= n` divides `pd`.
pub fn all_small_primes_divide(n: u64, pd: u64) -> bool {
    arith::primes_up_to(n).into_iter().all(|q| pd.is_multiple_of(q))
}

fn divisibility_tag(n: u64, pd: u64, bound: &BigUint) -> Tag {
    if all_small_primes_divide(n, pd) {
        Tag::new(Rule::DivisibilityAllPrimes, format!("{n}! = {bound} divides every Ulrich rank"))
    } else {
        Tag::new(
            Rule::DivisibilityPerPrime,
            format!("{bound} divides every Ulrich rank on (P^{n}, O({pd}))"),
        )
    }
}

/// `4` for non-split Brauer–Severi varieties of dimension at least 4, else `1`.
pub fn high_dimension_lower_bound(n: u64, split: bool) -> u64 {
    if n >= 4 && !split {
        4
    } else {
        1
    }
}

/// Bounds for `uc(X, O_X(pd))`.
///
/// `split_uc` is `uc(P^n, O(pd))` over a minimal splitting field, when known.
/// Without it the upper end falls back to `ind · n!`.
pub fn uc_bs_bounds(x: &PolarizedBs, split_uc: Option<&BigUint>) -> Result<UcBound, BoundsError> {
    if split_uc.is_some_and(Zero::is_zero) {
        return Err(BoundsError::InvalidDescriptor(String::from("split uc must be positive")));
    }
    let n = x.dim();
    let pd = x.pd();
    let ind = x.algebra().index();
    let split = x.algebra().is_split();

    let mut tags = Vec::new();
    let mut lower = BigUint::one();

    let div = divisibility_lower_bound(n, pd);
    if div > BigUint::one() {
        tags.push(divisibility_tag(n, pd, &div));
        lower = lower.max(div.clone());
    }
    if let Some(s) = split_uc {
        tags.push(Tag::new(Rule::SuppliedSplitValue, format!("uc(v_{pd}(P^{n})) = {s}")));
        lower = lower.max(s.clone());
    }
    let hd = high_dimension_lower_bound(n, split);
    if hd > 1 {
        tags.push(Tag::new(Rule::HighDimensionFloor, format!("dimension {n} >= 4")));
        lower = lower.max(BigUint::from(hd));
    }
    if !split {
        tags.push(Tag::new(Rule::NoUlrichLineBundle, "non-split, so uc >= 2"));
        lower = lower.max(BigUint::from(2u32));
    }

    let split_upper = match split_uc {
        Some(s) => s.clone(),
        None => {
            tags.push(Tag::new(Rule::VeroneseFactorialUpper, format!("uc(v_{pd}(P^{n})) <= {n}!")));
            arith::factorial(n)
        }
    };
    let upper = &split_upper * ind;
    tags.push(Tag::new(
        Rule::DescentChain,
        format!("uc <= ind * {split_upper} = {upper} (ind = {ind})"),
    ));
    UcBound::new(lower, Some(upper), tags)
}

/// Multiples of `divisor` inside the bound's range.
///
/// `None` when the upper end is unknown or the range holds more than
/// [`MAX_CANDIDATES`] multiples.
pub fn divisibility_candidates(bound: &UcBound, divisor: &BigUint) -> Option<BTreeSet<BigUint>> {
    let upper = bound.upper()?;
    if divisor.is_zero() {
        return None;
    }
    let first = bound.lower().div_ceil(divisor);
    let last = upper / divisor;
    if first > last {
        return Some(BTreeSet::new());
    }
    let count = (&last - &first + 1u32).to_u64()?;
    if count > MAX_CANDIDATES {
        return None;
    }
    let mut set = BTreeSet::new();
    let mut k = first;
    while k <= last {
        set.insert(&k * divisor);
        k += 1u32;
    }
    Some(set)
}

fn set_of(values: &[u32]) -> BTreeSet<BigUint> {
    values.iter().map(|&v| BigUint::from(v)).collect()
}

/// Candidate values of `uc` for a non-split Brauer–Severi threefold, by
/// period `p` and `pd mod 6`.
pub fn threefold_candidates(p: u64, pd: u64) -> Result<BTreeSet<BigUint>, BoundsError> {
    if p != 2 && p != 4 {
        return Err(BoundsError::OutOfTableDomain(format!("period {p} is not 2 or 4")));
    }
    if pd == 0 || !pd.is_multiple_of(p) {
        return Err(BoundsError::OutOfTableDomain(format!("{p} does not divide pd = {pd}")));
    }
    let residue = pd % 6;
    let set = match (p, residue) {
        (2, 2 | 4) => set_of(&[2, 4]),
        (2, 0) => set_of(&[6, 12]),
        (4, 2 | 4) => set_of(&[2, 4, 6, 8]),
        (4, 0) => set_of(&[6, 12, 24]),
        _ => {
            return Err(BoundsError::OutOfTableDomain(format!("pd mod 6 = {residue} is odd")));
        }
    };
    Ok(set)
}

/// Candidate values of `uc(X, O_X(3d))` for a non-split Brauer–Severi
/// surface, given `threed = 3d`.
pub fn surface_candidates(threed: u64) -> Result<BTreeSet<BigUint>, BoundsError> {
    if threed == 0 || !threed.is_multiple_of(3) {
        return Err(BoundsError::NotMultipleOfPeriod {
            value: threed,
            period: 3,
        });
    }
    Ok(if threed.is_multiple_of(2) {
        set_of(&[2, 4, 6])
    } else {
        set_of(&[2, 3, 4, 5, 6])
    })
}

/// `uc` of a smooth quadric `Q ⊂ P^{m-1}` under `O_Q(d)`.
///
/// For `d = 1` the value is `2^⌊(m-3)/2⌋`; for larger `d` only the scaling
/// upper bound `(m-2)! · 2^⌊(m-3)/2⌋` is known.
pub fn uc_quadric(m: u64, d: u64) -> Result<UcBound, BoundsError> {
    if m < 4 {
        return Err(BoundsError::DimensionTooSmall(m));
    }
    if d == 0 {
        return Err(BoundsError::InvalidDescriptor(String::from("d must be at least 1")));
    }
    let spinor = arith::pow2((m - 3) / 2);
    if d == 1 {
        let tag = Tag::new(Rule::QuadricSpinorValue, format!("uc(Q, O(1)) = {spinor}"));
        let mut b = UcBound::exact(spinor.clone(), alloc::vec![tag.clone()])?;
        b.candidates = Some(BTreeSet::from([spinor]));
        return Ok(b);
    }
    let upper = arith::factorial(m - 2) * &spinor;
    UcBound::new(
        BigUint::one(),
        Some(upper.clone()),
        alloc::vec![
            Tag::new(Rule::QuadricSpinorValue, format!("uc(Q, O(1)) = {spinor}")),
            Tag::new(
                Rule::QuadricScaling,
                format!("uc(Q, O({d})) <= {}! * {spinor} = {upper}; lower end is trivial", m - 2),
            ),
        ],
    )
}

/// `[split_uc, ind · split_uc]` for an involution variety of dimension `dim_x`.
pub fn uc_involution_bounds(dim_x: u64, ind: u64, split_uc: &BigUint) -> Result<UcBound, BoundsError> {
    if dim_x < 2 {
        return Err(BoundsError::InvalidDescriptor(format!(
            "involution variety of dimension {dim_x} < 2"
        )));
    }
    if ind == 0 || split_uc.is_zero() {
        return Err(BoundsError::InvalidDescriptor(String::from(
            "index and split uc must be positive",
        )));
    }
    let upper = split_uc * ind;
    UcBound::new(
        split_uc.clone(),
        Some(upper.clone()),
        alloc::vec![Tag::new(
            Rule::InvolutionChain,
            format!("{split_uc} <= uc <= {ind} * {split_uc} = {upper}"),
        )],
    )
}

/// Involution variety over the reals: the index is 2.
pub fn real_involution_bounds(dim_x: u64, split_uc: &BigUint) -> Result<UcBound, BoundsError> {
    let mut b = uc_involution_bounds(dim_x, 2, split_uc)?;
    b.push_tag(Tag::new(Rule::RealIndexTwo, "minimal splitting field is C"));
    Ok(b)
}

/// `2^⌊(dim-1)/2⌋ <= uc <= ind · dim · 2^⌊(dim-1)/2⌋` for a twisted quadric
/// with trivial discriminant or over the reals.
pub fn twisted_quadric_bounds(dim_x: u64, ind: u64, d: u64) -> Result<UcBound, BoundsError> {
    if dim_x < 2 {
        return Err(BoundsError::InvalidDescriptor(format!("dimension {dim_x} < 2")));
    }
    if ind < 2 {
        return Err(BoundsError::InvalidDescriptor(format!(
            "index {ind} < 2; the twisted quadric must be non-split"
        )));
    }
    if d == 0 {
        return Err(BoundsError::InvalidDescriptor(String::from("d must be at least 1")));
    }
    let spinor = arith::pow2((dim_x - 1) / 2);
    let upper = &spinor * ind * dim_x;
    UcBound::new(
        spinor.clone(),
        Some(upper.clone()),
        alloc::vec![Tag::new(
            Rule::TwistedQuadricRange,
            format!("{spinor} <= uc <= {ind} * {dim_x} * {spinor} = {upper}"),
        )],
    )
}

/// Type of the split flag variety.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlagType {
    A,
    B,
    C,
    D,
}

/// `[split_uc, ind · split_uc]` for an inner twisted flag.
///
/// With `rdim_form` set the caller asserts `rdim + 1 = ind`, and the upper
/// end is also recorded as `(rdim + 1) · split_uc`.
pub fn uc_twisted_flag_bounds(
    flag: FlagType,
    ind: u64,
    split_uc: &BigUint,
    rdim_form: bool,
) -> Result<UcBound, BoundsError> {
    if ind == 0 || split_uc.is_zero() {
        return Err(BoundsError::InvalidDescriptor(String::from(
            "index and split uc must be positive",
        )));
    }
    let upper = split_uc * ind;
    let rule = match flag {
        FlagType::A => Rule::FlagChainTypeA,
        FlagType::B | FlagType::C | FlagType::D => Rule::FlagChainTypeBcd,
    };
    let mut tags = alloc::vec![Tag::new(
        rule,
        format!("{split_uc} <= uc <= {ind} * {split_uc} = {upper}"),
    )];
    if rdim_form {
        tags.push(Tag::new(
            Rule::FlagChainRdimForm,
            format!("uc <= (rdim + 1) * {split_uc} with rdim + 1 = {ind}"),
        ));
    }
    UcBound::new(split_uc.clone(), Some(upper), tags)
}

/// Result of the prime-dimension comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeChain {
    pub rdim_upper: u64,
    pub uc_lower: BigUint,
    /// Whether `rdim_upper < uc_lower`, i.e. the chain proves `rdim < uc`.
    pub strict: bool,
}

/// For a non-split Brauer–Severi variety of dimension `p - 1` polarised by
/// `O(p!)`: `rdim <= p - 1` and `(p - 1)! <= uc`.
///
/// The middle inequality `p - 1 < (p - 1)!` only holds from `p = 5` on, so
/// the comparison is reported with a strictness flag.
pub fn prime_dimension_chain(p: u64) -> Result<PrimeChain, BoundsError> {
    if !arith::is_prime(p) {
        return Err(BoundsError::NotPrime(p));
    }
    let rdim_upper = p - 1;
    let uc_lower = arith::factorial(p - 1);
    let strict = BigUint::from(rdim_upper) < uc_lower;
    Ok(PrimeChain {
        rdim_upper,
        uc_lower,
        strict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn bs(deg: u64, per: u64, ind: u64, d: u64) -> PolarizedBs {
        PolarizedBs::new(AlgebraInvariants::validate(deg, per, ind).unwrap(), d).unwrap()
    }

    #[test]
    fn divisibility_examples() {
        assert_eq!(divisibility_lower_bound(3, 6), big(6));
        assert_eq!(divisibility_lower_bound(1, 17), big(1));
        assert_eq!(divisibility_lower_bound(3, 2), big(2));
        assert_eq!(divisibility_lower_bound(5, 2), big(8));
    }

    #[test]
    fn bs_bounds_surface_period_three() {
        let b = uc_bs_bounds(&bs(3, 3, 3, 1), Some(&big(2))).unwrap();
        assert_eq!((b.lower(), b.upper()), (&big(2), Some(&big(6))));
    }

    #[test]
    fn bs_bounds_split_line() {
        let b = uc_bs_bounds(&bs(2, 1, 1, 1), Some(&big(1))).unwrap();
        assert_eq!(b.exact_value(), Some(&big(1)));
    }

    #[test]
    fn bs_bounds_dimension_five() {
        let b = uc_bs_bounds(&bs(6, 2, 2, 1), None).unwrap();
        assert_eq!((b.lower(), b.upper()), (&big(8), Some(&big(240))));
        let rules: Vec<Rule> = b.provenance().iter().map(|t| t.rule).collect();
        assert!(rules.contains(&Rule::DivisibilityPerPrime));
        assert!(rules.contains(&Rule::HighDimensionFloor));
        assert!(rules.contains(&Rule::VeroneseFactorialUpper));
    }

    #[test]
    fn bs_bounds_rejects_zero_split() {
        assert!(uc_bs_bounds(&bs(3, 3, 3, 1), Some(&big(0))).is_err());
        assert!(PolarizedBs::new(AlgebraInvariants::validate(3, 3, 3).unwrap(), 0).is_err());
    }

    #[test]
    fn high_dimension() {
        assert_eq!(high_dimension_lower_bound(4, false), 4);
        assert_eq!(high_dimension_lower_bound(3, false), 1);
        assert_eq!(high_dimension_lower_bound(5, true), 1);
    }

    #[test]
    fn threefold_table() {
        assert_eq!(threefold_candidates(2, 2).unwrap(), set_of(&[2, 4]));
        assert_eq!(threefold_candidates(2, 4).unwrap(), set_of(&[2, 4]));
        assert_eq!(threefold_candidates(2, 6).unwrap(), set_of(&[6, 12]));
        assert_eq!(threefold_candidates(4, 8).unwrap(), set_of(&[2, 4, 6, 8]));
        assert_eq!(threefold_candidates(4, 12).unwrap(), set_of(&[6, 12, 24]));
        assert!(threefold_candidates(3, 6).is_err());
        assert!(threefold_candidates(4, 6).is_err());
    }

    #[test]
    fn surface_table() {
        assert_eq!(surface_candidates(6).unwrap(), set_of(&[2, 4, 6]));
        assert_eq!(surface_candidates(3).unwrap(), set_of(&[2, 3, 4, 5, 6]));
        assert_eq!(surface_candidates(9).unwrap(), set_of(&[2, 3, 4, 5, 6]));
        assert_eq!(
            surface_candidates(4),
            Err(BoundsError::NotMultipleOfPeriod { value: 4, period: 3 })
        );
    }

    #[test]
    fn quadrics() {
        assert_eq!(uc_quadric(5, 1).unwrap().exact_value(), Some(&big(2)));
        assert_eq!(uc_quadric(4, 1).unwrap().exact_value(), Some(&big(1)));
        let b = uc_quadric(6, 2).unwrap();
        assert_eq!(b.upper(), Some(&big(48)));
        assert_eq!(b.lower(), &big(1));
        assert_eq!(uc_quadric(3, 1), Err(BoundsError::DimensionTooSmall(3)));
    }

    #[test]
    fn involution() {
        let b = uc_involution_bounds(3, 2, &big(2)).unwrap();
        assert_eq!((b.lower(), b.upper()), (&big(2), Some(&big(4))));
        let b = uc_involution_bounds(2, 1, &big(1)).unwrap();
        assert_eq!(b.exact_value(), Some(&big(1)));
        let b = real_involution_bounds(4, &big(4)).unwrap();
        assert_eq!((b.lower(), b.upper()), (&big(4), Some(&big(8))));
        assert!(uc_involution_bounds(1, 2, &big(1)).is_err());
    }

    #[test]
    fn twisted_quadric() {
        let b = twisted_quadric_bounds(2, 2, 1).unwrap();
        assert_eq!((b.lower(), b.upper()), (&big(1), Some(&big(4))));
        let b = twisted_quadric_bounds(3, 2, 1).unwrap();
        assert_eq!((b.lower(), b.upper()), (&big(2), Some(&big(12))));
        let b = twisted_quadric_bounds(4, 3, 1).unwrap();
        assert_eq!((b.lower(), b.upper()), (&big(2), Some(&big(24))));
        assert!(twisted_quadric_bounds(3, 1, 1).is_err());
    }

    #[test]
    fn flags() {
        let b = uc_twisted_flag_bounds(FlagType::A, 3, &big(2), false).unwrap();
        assert_eq!((b.lower(), b.upper()), (&big(2), Some(&big(6))));
        let b = uc_twisted_flag_bounds(FlagType::C, 1, &big(7), false).unwrap();
        assert_eq!(b.exact_value(), Some(&big(7)));
        let b = uc_twisted_flag_bounds(FlagType::B, 2, &big(6), true).unwrap();
        assert_eq!((b.lower(), b.upper()), (&big(6), Some(&big(12))));
        assert_eq!(b.provenance()[0].rule, Rule::FlagChainTypeBcd);
        assert_eq!(b.provenance()[1].rule, Rule::FlagChainRdimForm);
    }

    #[test]
    fn prime_chain() {
        let c = prime_dimension_chain(5).unwrap();
        assert_eq!((c.rdim_upper, c.uc_lower.clone(), c.strict), (4, big(24), true));
        let c = prime_dimension_chain(3).unwrap();
        assert_eq!((c.rdim_upper, c.uc_lower.clone(), c.strict), (2, big(2), false));
        let c = prime_dimension_chain(7).unwrap();
        assert_eq!((c.rdim_upper, c.uc_lower.clone(), c.strict), (6, big(720), true));
        assert_eq!(prime_dimension_chain(6), Err(BoundsError::NotPrime(6)));
    }

    #[test]
    fn prime_chain_lower_matches_divisibility() {
        for p in [2u64, 3, 5, 7] {
            let c = prime_dimension_chain(p).unwrap();
            let pd = p * arith::factorial(p - 1).to_u64().unwrap();
            assert_eq!(divisibility_lower_bound(p - 1, pd), c.uc_lower);
        }
    }

    #[test]
    fn candidates_and_restriction() {
        let mut b = uc_bs_bounds(&bs(3, 3, 3, 2), Some(&big(2))).unwrap();
        let div = divisibility_lower_bound(2, 6);
        let set = divisibility_candidates(&b, &div).unwrap();
        assert_eq!(set, set_of(&[2, 4, 6]));
        b.restrict_to(set, Tag::bare(Rule::DivisibilityCandidates)).unwrap();
        assert!(b.restrict_to(set_of(&[9]), Tag::bare(Rule::SurfaceTable)).is_err());
    }

    #[test]
    fn raise_and_lower() {
        let mut b = UcBound::new(big(1), Some(big(10)), Vec::new()).unwrap();
        b.raise_lower(big(3), Tag::bare(Rule::Catalogue)).unwrap();
        b.lower_upper(big(5), Tag::bare(Rule::Catalogue)).unwrap();
        assert_eq!((b.lower(), b.upper()), (&big(3), Some(&big(5))));
        assert!(b.raise_lower(big(6), Tag::bare(Rule::Catalogue)).is_err());
        assert_eq!(b.provenance().len(), 2);
    }
}
