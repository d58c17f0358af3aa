//! Euler characteristics of Ulrich bundles and the criteria deciding
//! `uc = rdim + 1` (or `uc = c·rdim + b`) from a single witness bundle.
//!
//! All roots are exact. A criterion returns `None` when the quantity under
//! the root is not a perfect power, which means the relation fails for that
//! witness.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith;
use crate::brauer::{self, AlgebraInvariants};
use crate::provenance::{Rule, Tag};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ChiError {
    #[error("index {ind} does not divide pd = {pd}")]
    NonDivisible { ind: u64, pd: u64 },
    #[error("invalid generalized Brauer-Severi descriptor: {0}")]
    InvalidDescriptor(&'static str),
    #[error("the criterion needs the caller to record its hypothesis on rdim")]
    HypothesisUnrecorded,
    #[error("{0} must be at least 1")]
    NonPositive(&'static str),
}

/// The hypothesis under which a criterion was applied. Reports carry it
/// verbatim; nothing here checks it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    /// `rdim + 1 = p`.
    RdimPlusOneEqualsPeriod,
    /// `rdim + 1 = ind = p`.
    RdimPlusOneEqualsIndexEqualsPeriod,
}

impl Hypothesis {
    pub fn as_str(self) -> &'static str {
        match self {
            Hypothesis::RdimPlusOneEqualsPeriod => "rdim + 1 = p",
            Hypothesis::RdimPlusOneEqualsIndexEqualsPeriod => "rdim + 1 = ind = p",
        }
    }
}

/// `rank · pd^n`, the Euler characteristic of the base change of an Ulrich
/// bundle on `(P^n, O(pd))`.
pub fn chi_ulrich_bs(n: u32, pd: u64, rank: &BigUint) -> BigUint {
    rank * BigUint::from(pd).pow(n)
}

/// Whether `chi / t^n >= uc · (rdim + 1)^n` with `t = pd / ind`.
///
/// The bound `rdim <= ind - 1` is not enforced.
pub fn rank_rdim_inequality(
    n: u32,
    pd: u64,
    ind: u64,
    chi: &BigUint,
    rdim: u64,
    uc: &BigUint,
) -> Result<bool, ChiError> {
    if ind == 0 || !pd.is_multiple_of(ind) {
        return Err(ChiError::NonDivisible { ind, pd });
    }
    let t = BigUint::from(pd / ind);
    let lhs = BigRational::new(BigInt::from(chi.clone()), BigInt::from(t.pow(n)));
    let rhs = BigInt::from(uc * BigUint::from(rdim + 1).pow(n));
    Ok(lhs >= BigRational::from_integer(rhs))
}

/// `(1/d) · (chi/rank)^(1/n)` when it is a positive integer.
///
/// Under `rdim + 1 = p` this is the value `uc` must take for
/// `uc = rdim + 1` to hold.
pub fn uc_from_chi(n: u32, d: u64, chi: &BigUint, rank: &BigUint) -> Option<BigUint> {
    if n == 0 || d == 0 || rank.is_zero() {
        return None;
    }
    let ratio = BigRational::new(BigInt::from(chi.clone()), BigInt::from(rank.clone()));
    let root = arith::rational_nth_root(&ratio, n)?;
    let u = root / BigRational::from_integer(BigInt::from(d));
    arith::rational_to_biguint(&u).filter(|u| !u.is_zero())
}

/// `rank · p^(p-1) · C(p + t - 1, p - 1)`, the Euler characteristic of
/// `E(tp)` on a Brauer–Severi variety of dimension `p - 1`.
pub fn chi_twist_formula(p: u64, t: u64, rank: &BigUint) -> BigUint {
    let pm1 = p.saturating_sub(1);
    rank * BigUint::from(p).pow(pm1 as u32) * arith::binomial(p + t - 1, pm1)
}

/// Degree of the Plücker embedding of the Grassmannian of `m`-planes in an
/// `n`-dimensional space: `(m(n-m))! · Π_{i<m} i! / (n-m+i)!`.
pub fn grassmannian_degree(m: u64, n: u64) -> Result<BigUint, ChiError> {
    if m == 0 || m > n {
        return Err(ChiError::InvalidDescriptor("need 1 <= m <= n"));
    }
    let mut num = arith::factorial(m * (n - m));
    let mut den = BigUint::one();
    for i in 0..m {
        num *= arith::factorial(i);
        den *= arith::factorial(n - m + i);
    }
    Ok(num / den)
}

/// Generalized Brauer–Severi variety `BS(m, A)` embedded by `M^e`, where
/// `L^s = M` for the positive generator `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneralizedBs {
    algebra: AlgebraInvariants,
    m: u64,
    s: u64,
    e: u64,
}

impl GeneralizedBs {
    pub fn new(algebra: AlgebraInvariants, m: u64, s: u64, e: u64) -> Result<Self, ChiError> {
        if m == 0 || m > algebra.degree() {
            return Err(ChiError::InvalidDescriptor("need 1 <= m <= degree"));
        }
        if s == 0 {
            return Err(ChiError::InvalidDescriptor("s must be at least 1"));
        }
        if e == 0 {
            return Err(ChiError::InvalidDescriptor("e must be at least 1"));
        }
        Ok(GeneralizedBs { algebra, m, s, e })
    }

    pub fn algebra(&self) -> &AlgebraInvariants {
        &self.algebra
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn dim(&self) -> u64 {
        self.m * (self.algebra.degree() - self.m)
    }

    /// `per(A^{⊗m})`.
    pub fn period(&self) -> u64 {
        brauer::period_of_tensor_power(self.algebra.period(), self.m)
    }

    pub fn grassmannian_degree(&self) -> BigUint {
        grassmannian_degree(self.m, self.algebra.degree()).expect("validated m")
    }

    /// `gcd(p, m) / (s e)`.
    fn scale(&self) -> BigRational {
        let p = self.algebra.period();
        BigRational::new(
            BigInt::from(arith::gcd(p, self.m)),
            BigInt::from(self.s) * BigInt::from(self.e),
        )
    }
}

/// `rank/dim! · deg G · (s e per(A^m))^dim · Π_{i=1..dim} (t + i)`.
pub fn chi_generalized_bs(g: &GeneralizedBs, rank: &BigUint, t: i64) -> BigRational {
    let dim = g.dim();
    let base = BigUint::from(g.s) * g.e * g.period();
    let mut num = BigInt::from(rank * g.grassmannian_degree() * base.pow(dim as u32));
    for i in 1..=dim {
        num *= BigInt::from(t) + BigInt::from(i);
    }
    BigRational::new(num, BigInt::from(arith::factorial(dim)))
}

/// The `t = 0` value written with the period of `A` itself:
/// `rank · deg G · (s e p / gcd(p, m))^dim`.
pub fn chi_generalized_bs_at_zero(g: &GeneralizedBs, rank: &BigUint) -> BigRational {
    let p = g.algebra.period();
    let inner = BigRational::new(
        BigInt::from(g.s) * BigInt::from(g.e) * BigInt::from(p),
        BigInt::from(arith::gcd(p, g.m)),
    );
    let scale = BigRational::from_integer(BigInt::from(rank * g.grassmannian_degree()));
    scale * num_traits::pow(inner, g.dim() as usize)
}

/// Outcome of the generalized criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedVerdict {
    /// The value `uc` must take for `uc = rdim + 1`, when it is an integer.
    pub value: Option<BigUint>,
    /// The rank inequality evaluated at `uc = value` and `rdim + 1 = p`.
    pub inequality_holds: Option<bool>,
    pub provenance: Vec<Tag>,
}

/// `gcd(p,m)/(s e) · (chi / (rank · deg G))^(1/dim)` when it is a positive
/// integer, together with the matching rank inequality.
pub fn generalized_criterion(
    g: &GeneralizedBs,
    chi: &BigUint,
    rank: &BigUint,
    hypothesis: Option<Hypothesis>,
) -> Result<GeneralizedVerdict, ChiError> {
    let hypothesis = hypothesis.ok_or(ChiError::HypothesisUnrecorded)?;
    if rank.is_zero() {
        return Err(ChiError::NonPositive("rank"));
    }
    let dim = g.dim();
    if dim == 0 {
        return Err(ChiError::InvalidDescriptor("dimension zero"));
    }
    let deg = g.grassmannian_degree();
    let ratio = BigRational::new(BigInt::from(chi.clone()), BigInt::from(rank * &deg));
    let value = arith::rational_nth_root(&ratio, dim as u32)
        .map(|r| r * g.scale())
        .and_then(|u| arith::rational_to_biguint(&u))
        .filter(|u| !u.is_zero());

    let inequality_holds = value.as_ref().map(|uc| {
        let p = BigInt::from(g.algebra.period());
        let lhs = BigRational::from_integer(BigInt::from(chi.clone()))
            * num_traits::pow(g.scale(), dim as usize);
        let rhs = BigInt::from(uc.clone()) * BigInt::from(deg.clone()) * num_traits::pow(p, dim as usize);
        lhs >= BigRational::from_integer(rhs)
    });

    let mut provenance = alloc::vec![Tag::new(
        Rule::GeneralizedRootCriterion,
        format!("hypothesis {}", hypothesis.as_str())
    )];
    if let Some(holds) = inequality_holds {
        provenance.push(Tag::new(
            Rule::GeneralizedInequality,
            if holds { "holds" } else { "fails" },
        ));
    }
    Ok(GeneralizedVerdict {
        value,
        inequality_holds,
        provenance,
    })
}

/// Whether `c·rdim + b = (b - c) + (c/d)·(chi/rank)^(1/n)` holds exactly.
/// An irrational root gives `false`.
pub fn affine_relation(n: u32, d: u64, chi: &BigUint, rank: &BigUint, c: u64, b: i64, rdim: u64) -> bool {
    if n == 0 || d == 0 || rank.is_zero() {
        return false;
    }
    let ratio = BigRational::new(BigInt::from(chi.clone()), BigInt::from(rank.clone()));
    let Some(root) = arith::rational_nth_root(&ratio, n) else {
        return false;
    };
    let c = BigInt::from(c);
    let b = BigInt::from(b);
    let lhs = BigRational::from_integer(&c * BigInt::from(rdim) + &b);
    let rhs = BigRational::from_integer(&b - &c) + BigRational::new(c, BigInt::from(d)) * root;
    lhs == rhs
}
