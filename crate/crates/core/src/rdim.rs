//! Categorical representability dimension.
//!
//! None of these values are computed from a semiorthogonal decomposition.
//! They are the known rules for each class, returned with the rule that
//! gives them. Conjectural values are only produced when the caller opts in.

use alloc::format;
use alloc::vec::Vec;

use thiserror::Error;

use crate::brauer::AlgebraInvariants;
use crate::provenance::{Rule, Tag};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RdimError {
    #[error("biquaternion flag requires index 4, got {0}")]
    FlagInconsistent(u64),
    #[error("del Pezzo degree {0} is outside 1..=6")]
    DelPezzoDegree(u64),
    #[error("interval lower end {0} exceeds upper end {1}")]
    BadInterval(u64, u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RdimRange {
    Exact(u64),
    /// Closed interval, lower end strictly below the upper end.
    Interval(u64, u64),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RdimValue {
    range: RdimRange,
    provenance: Vec<Tag>,
}

impl RdimValue {
    pub fn exact(value: u64, provenance: Vec<Tag>) -> Self {
        RdimValue {
            range: RdimRange::Exact(value),
            provenance,
        }
    }

    /// An interval; collapses to an exact value when the ends agree.
    pub fn interval(lower: u64, upper: u64, provenance: Vec<Tag>) -> Result<Self, RdimError> {
        let range = match lower.cmp(&upper) {
            core::cmp::Ordering::Less => RdimRange::Interval(lower, upper),
            core::cmp::Ordering::Equal => RdimRange::Exact(lower),
            core::cmp::Ordering::Greater => return Err(RdimError::BadInterval(lower, upper)),
        };
        Ok(RdimValue { range, provenance })
    }

    pub fn unknown(provenance: Vec<Tag>) -> Self {
        RdimValue {
            range: RdimRange::Unknown,
            provenance,
        }
    }

    pub fn range(&self) -> RdimRange {
        self.range
    }

    pub fn provenance(&self) -> &[Tag] {
        &self.provenance
    }

    pub fn exact_value(&self) -> Option<u64> {
        match self.range {
            RdimRange::Exact(v) => Some(v),
            _ => None,
        }
    }

    /// `(lower, upper)` when known.
    pub fn bounds(&self) -> Option<(u64, u64)> {
        match self.range {
            RdimRange::Exact(v) => Some((v, v)),
            RdimRange::Interval(a, b) => Some((a, b)),
            RdimRange::Unknown => None,
        }
    }

    pub fn uses_conjecture(&self) -> bool {
        self.provenance.iter().any(|t| t.rule.is_conjecture())
    }
}

/// Brauer–Severi variety of the algebra `a`.
///
/// Split gives 0, index 2 or 3 gives `ind - 1`, a biquaternion division
/// algebra gives 2. Otherwise only `[1, ind - 1]` is known; with
/// `assume_conjecture` and `per = ind` it collapses to `ind - 1`.
pub fn rdim_brauer_severi(
    a: &AlgebraInvariants,
    biquaternion: bool,
    assume_conjecture: bool,
) -> Result<RdimValue, RdimError> {
    let ind = a.index();
    if biquaternion && ind != 4 {
        return Err(RdimError::FlagInconsistent(ind));
    }
    if ind == 1 {
        return Ok(RdimValue::exact(
            0,
            alloc::vec![Tag::new(Rule::RationalPointCriterion, "split, has a rational point")],
        ));
    }
    if ind <= 3 {
        return Ok(RdimValue::exact(
            ind - 1,
            alloc::vec![Tag::new(Rule::IndexBound, format!("ind = {ind} <= 3"))],
        ));
    }
    if biquaternion {
        return Ok(RdimValue::exact(
            2,
            alloc::vec![Tag::new(Rule::BiquaternionValue, "biquaternion division algebra")],
        ));
    }
    let base = alloc::vec![
        Tag::new(Rule::RationalPointCriterion, "non-split, so rdim >= 1"),
        Tag::new(Rule::IndexBound, format!("rdim <= ind - 1 = {}", ind - 1)),
    ];
    if assume_conjecture && a.period() == ind {
        let mut tags = base;
        tags.push(Tag::new(Rule::PeriodIndexConjecture, format!("per = ind = {ind}")));
        return Ok(RdimValue::exact(ind - 1, tags));
    }
    RdimValue::interval(1, ind - 1, base)
}

/// Smooth curve of the given genus.
pub fn rdim_curve(genus: u64, has_rational_point: bool) -> RdimValue {
    if genus == 0 {
        if has_rational_point {
            RdimValue::exact(0, alloc::vec![Tag::new(Rule::RationalPointCriterion, "the projective line")])
        } else {
            RdimValue::exact(
                1,
                alloc::vec![Tag::new(Rule::RationalPointCriterion, "non-split conic, no rational point")],
            )
        }
    } else {
        RdimValue::exact(
            1,
            alloc::vec![Tag::new(
                Rule::NoSemiorthogonalDecomposition,
                format!("curve of genus {genus}")
            )],
        )
    }
}

/// Product of two Brauer–Severi curves (an involution surface).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveProduct {
    /// `C × C` for a non-split conic `C`.
    SelfProduct,
    /// `C1 × C2` for two distinct non-split conics.
    Distinct,
    /// `C × P^1`.
    WithLine,
}

pub fn rdim_product_of_curves(kind: CurveProduct) -> RdimValue {
    let (v, note) = match kind {
        CurveProduct::SelfProduct => (1, "components equivalent to pieces of D(C); no rational point"),
        CurveProduct::Distinct => (2, "component D(A ⊗ B) forces dimension 2"),
        CurveProduct::WithLine => (1, "components D(k) and D(A)"),
    };
    RdimValue::exact(v, alloc::vec![Tag::new(Rule::ProductDecomposition, note)])
}

/// Surface classes with a known or bounded representability dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceClass {
    /// Brauer–Severi surface of a degree 3 algebra.
    DelPezzo9 { algebra: AlgebraInvariants },
    /// Involution surface, a twisted form of `P^1 × P^1`.
    DelPezzo8 { product: CurveProduct },
    DelPezzo7,
    /// Degree 1 through 6.
    DelPezzoLow { degree: u64 },
    MinimalRuled { base_genus: u64 },
    Abelian { picard_rank_one: bool },
    K3,
    /// `q = p_g = 0` with a phantom category.
    Phantom,
}

pub fn rdim_surface(class: &SurfaceClass, assume_conjecture: bool) -> Result<RdimValue, RdimError> {
    Ok(match class {
        SurfaceClass::DelPezzo9 { algebra } => rdim_brauer_severi(algebra, false, assume_conjecture)?,
        SurfaceClass::DelPezzo8 { product } => rdim_product_of_curves(*product),
        SurfaceClass::DelPezzo7 => {
            RdimValue::exact(0, alloc::vec![Tag::new(Rule::DelPezzoSevenValue, "rdim + 1 = 1")])
        }
        SurfaceClass::DelPezzoLow { degree } => {
            if !(1..=6).contains(degree) {
                return Err(RdimError::DelPezzoDegree(*degree));
            }
            RdimValue::unknown(alloc::vec![Tag::new(
                Rule::NotKnown,
                format!("del Pezzo surface of degree {degree}: we don't know")
            )])
        }
        SurfaceClass::MinimalRuled { base_genus } => {
            let v = u64::from(*base_genus >= 1);
            RdimValue::exact(
                v,
                alloc::vec![Tag::new(Rule::RuledSurfaceValue, format!("base curve of genus {base_genus}"))],
            )
        }
        SurfaceClass::Abelian { .. } => RdimValue::exact(
            2,
            alloc::vec![Tag::new(Rule::NoSemiorthogonalDecomposition, "abelian surface")],
        ),
        SurfaceClass::K3 => RdimValue::exact(
            2,
            alloc::vec![Tag::new(Rule::NoSemiorthogonalDecomposition, "K3 surface")],
        ),
        SurfaceClass::Phantom => RdimValue::interval(
            0,
            2,
            alloc::vec![Tag::new(Rule::PhantomBound, "surface with a phantom category")],
        )?,
    })
}

/// Involution variety with trivial discriminant or over the reals, and the
/// generalized Brauer–Severi varieties, which obey the same rule:
/// `rdim + 1 <= ind` with equality for `ind <= 3`.
pub fn rdim_involution_variety(ind: u64) -> RdimValue {
    let ind = ind.max(1);
    if ind <= 3 {
        RdimValue::exact(
            ind - 1,
            alloc::vec![Tag::new(Rule::IndexBound, format!("rdim + 1 = ind = {ind}"))],
        )
    } else {
        RdimValue::interval(
            0,
            ind - 1,
            alloc::vec![Tag::new(Rule::IndexBound, format!("rdim + 1 <= ind = {ind}"))],
        )
        .expect("ind > 3 gives a proper interval")
    }
}

/// Twisted ribbon of genus zero. Only the conjectural value 1 is available.
pub fn rdim_ribbon(assume_conjecture: bool) -> RdimValue {
    if assume_conjecture {
        RdimValue::exact(
            1,
            alloc::vec![Tag::new(Rule::RibbonRdimConjecture, "assumed on request")],
        )
    } else {
        RdimValue::unknown(alloc::vec![Tag::new(
            Rule::NotKnown,
            "representability dimension of twisted ribbons is open"
        )])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(d: u64, p: u64, i: u64) -> AlgebraInvariants {
        AlgebraInvariants::validate(d, p, i).unwrap()
    }

    #[test]
    fn brauer_severi_rules() {
        assert_eq!(rdim_brauer_severi(&alg(3, 1, 1), false, false).unwrap().exact_value(), Some(0));
        assert_eq!(rdim_brauer_severi(&alg(2, 2, 2), false, false).unwrap().exact_value(), Some(1));
        assert_eq!(rdim_brauer_severi(&alg(3, 3, 3), false, false).unwrap().exact_value(), Some(2));
        assert_eq!(rdim_brauer_severi(&alg(4, 2, 4), true, false).unwrap().exact_value(), Some(2));
        assert_eq!(
            rdim_brauer_severi(&alg(4, 4, 4), false, false).unwrap().range(),
            RdimRange::Interval(1, 3)
        );
        assert_eq!(
            rdim_brauer_severi(&alg(2, 2, 2), true, false),
            Err(RdimError::FlagInconsistent(2))
        );
    }

    #[test]
    fn conjecture_only_on_request() {
        let v = rdim_brauer_severi(&alg(5, 5, 5), false, true).unwrap();
        assert_eq!(v.exact_value(), Some(4));
        assert!(v.uses_conjecture());
        let v = rdim_brauer_severi(&alg(5, 5, 5), false, false).unwrap();
        assert_eq!(v.range(), RdimRange::Interval(1, 4));
        assert!(!v.uses_conjecture());
        // period below index: the conjecture does not apply
        let v = rdim_brauer_severi(&alg(8, 2, 8), false, true).unwrap();
        assert_eq!(v.range(), RdimRange::Interval(1, 7));
    }

    #[test]
    fn curves_and_products() {
        assert_eq!(rdim_curve(0, true).exact_value(), Some(0));
        assert_eq!(rdim_curve(0, false).exact_value(), Some(1));
        assert_eq!(rdim_curve(2, false).exact_value(), Some(1));
        assert_eq!(rdim_product_of_curves(CurveProduct::SelfProduct).exact_value(), Some(1));
        assert_eq!(rdim_product_of_curves(CurveProduct::Distinct).exact_value(), Some(2));
        assert_eq!(rdim_product_of_curves(CurveProduct::WithLine).exact_value(), Some(1));
    }

    #[test]
    fn surfaces() {
        let r = |c: SurfaceClass| rdim_surface(&c, false).unwrap();
        assert_eq!(r(SurfaceClass::DelPezzo7).exact_value(), Some(0));
        assert_eq!(r(SurfaceClass::K3).exact_value(), Some(2));
        assert_eq!(r(SurfaceClass::Abelian { picard_rank_one: false }).exact_value(), Some(2));
        assert_eq!(r(SurfaceClass::DelPezzoLow { degree: 5 }).range(), RdimRange::Unknown);
        assert_eq!(r(SurfaceClass::MinimalRuled { base_genus: 0 }).exact_value(), Some(0));
        assert_eq!(r(SurfaceClass::MinimalRuled { base_genus: 3 }).exact_value(), Some(1));
        assert_eq!(r(SurfaceClass::Phantom).range(), RdimRange::Interval(0, 2));
        assert_eq!(
            r(SurfaceClass::DelPezzo9 { algebra: alg(3, 3, 3) }).exact_value(),
            Some(2)
        );
        assert_eq!(
            r(SurfaceClass::DelPezzo8 { product: CurveProduct::Distinct }).exact_value(),
            Some(2)
        );
        assert!(rdim_surface(&SurfaceClass::DelPezzoLow { degree: 7 }, false).is_err());
    }

    #[test]
    fn involution() {
        assert_eq!(rdim_involution_variety(2).exact_value(), Some(1));
        assert_eq!(rdim_involution_variety(1).exact_value(), Some(0));
        assert_eq!(rdim_involution_variety(4).range(), RdimRange::Interval(0, 3));
    }

    #[test]
    fn ribbon() {
        assert_eq!(rdim_ribbon(false).range(), RdimRange::Unknown);
        let v = rdim_ribbon(true);
        assert_eq!(v.exact_value(), Some(1));
        assert!(v.uses_conjecture());
    }
}
