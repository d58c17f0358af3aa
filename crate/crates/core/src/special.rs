//! Twisted ribbons, products of Brauer–Severi curves and the curve/surface
//! comparison table.
//!
//! Line-bundle cohomology on a ribbon is computed; the vanishing of the
//! cohomology of the rank two extension bundle is imported and tagged as such.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::bounds::{self, PolarizedBs, UcBound};
use crate::provenance::{Rule, Tag};
use crate::rdim::{self, CurveProduct, RdimError, RdimRange, RdimValue, SurfaceClass};

/// Relation between `uc` and `rdim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    RdimPlusOne,
    Equal,
    RdimMinusOne,
    RdimPlusTwo,
    /// Both values are exact but differ by something else.
    Other,
    /// At least one side is not pinned down.
    Undetermined,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::RdimPlusOne => "uc = rdim + 1",
            Relation::Equal => "uc = rdim",
            Relation::RdimMinusOne => "uc = rdim - 1",
            Relation::RdimPlusTwo => "uc = rdim + 2",
            Relation::Other => "other",
            Relation::Undetermined => "undetermined",
        }
    }
}

/// Classify `uc` against `rdim` when both are exact.
pub fn classify(uc: Option<&BigUint>, rdim: Option<u64>) -> Relation {
    let (Some(uc), Some(r)) = (uc, rdim) else {
        return Relation::Undetermined;
    };
    let r = BigUint::from(r);
    if *uc == &r + 1u32 {
        Relation::RdimPlusOne
    } else if *uc == r {
        Relation::Equal
    } else if uc + 1u32 == r {
        Relation::RdimMinusOne
    } else if *uc == &r + 2u32 {
        Relation::RdimPlusTwo
    } else {
        Relation::Other
    }
}

/// `h^0(ω^e) = 0` on a twisted ribbon exactly when `e > 0`.
pub fn ribbon_h0_vanishes(e: i64) -> bool {
    e > 0
}

/// `h^1(ω^e) = h^0(ω^(1-e))` by duality, so it vanishes exactly when `e <= 0`.
pub fn ribbon_h1_vanishes(e: i64) -> bool {
    match 1i64.checked_sub(e) {
        Some(dual) => ribbon_h0_vanishes(dual),
        // 1 - e overflows only for very negative e, where 1 - e > 0
        None => true,
    }
}

/// One row of the line-bundle certificate: the twist `e = a - d` and which
/// cohomology groups of `ω^e` vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RibbonRow {
    pub a: i64,
    pub e: i64,
    pub h0_vanishes: bool,
    pub h1_vanishes: bool,
}

/// Evidence that no line bundle `ω^a` is Ulrich for `ω^{-d}`: on every row
/// exactly one of `h^0`, `h^1` survives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonCertificate {
    pub d: i64,
    pub rows: Vec<RibbonRow>,
    pub exists: bool,
}

impl RibbonCertificate {
    /// Re-check every row.
    pub fn verify(&self) -> bool {
        !self.exists
            && !self.rows.is_empty()
            && self.rows.iter().all(|r| {
                r.e == r.a - self.d
                    && r.h0_vanishes == ribbon_h0_vanishes(r.e)
                    && r.h1_vanishes == ribbon_h1_vanishes(r.e)
                    && r.h0_vanishes != r.h1_vanishes
            })
    }
}

/// Half-width of the window of exponents `a` listed in the certificate.
pub const RIBBON_WINDOW: i64 = 10;

/// Line-bundle nonexistence certificate for the polarization `ω^{-d}`.
pub fn ribbon_line_bundle_certificate(d: i64) -> RibbonCertificate {
    let rows: Vec<RibbonRow> = (d - RIBBON_WINDOW..=d + RIBBON_WINDOW)
        .map(|a| {
            let e = a - d;
            RibbonRow {
                a,
                e,
                h0_vanishes: ribbon_h0_vanishes(e),
                h1_vanishes: ribbon_h1_vanishes(e),
            }
        })
        .collect();
    let exists = rows.iter().any(|r| r.h0_vanishes && r.h1_vanishes);
    RibbonCertificate { d, rows, exists }
}

/// Ulrich complexity of a twisted ribbon under `ω^{-d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonReport {
    pub uc: BigUint,
    pub certificate: RibbonCertificate,
    pub provenance: Vec<Tag>,
}

pub fn uc_ribbon(d: i64) -> RibbonReport {
    let certificate = ribbon_line_bundle_certificate(d);
    RibbonReport {
        uc: BigUint::from(2u32),
        certificate,
        provenance: alloc::vec![
            Tag::new(Rule::RibbonCohomology, "computed: no Ulrich line bundle"),
            Tag::new(
                Rule::RibbonWitness,
                format!("imported: F_D ⊗ ω^{d} is a rank 2 Ulrich bundle")
            ),
        ],
    }
}

/// `(uc, rdim, relation)` for a product of Brauer–Severi curves polarized by
/// the relative hyperplane class.
pub fn product_of_curves_report(kind: CurveProduct) -> (u64, u64, Relation) {
    let rdim = rdim::rdim_product_of_curves(kind)
        .exact_value()
        .expect("products have exact rdim");
    let uc = 2u64;
    (uc, rdim, classify(Some(&BigUint::from(uc)), Some(rdim)))
}

/// Entries of the comparison table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComparisonClass {
    Curve { genus: u64, has_point: bool },
    Surface(SurfaceClass),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    /// `None` when nothing is known about `uc`.
    pub uc: Option<UcBound>,
    pub rdim: RdimValue,
    pub relation: Relation,
}

fn uc_range(lower: u64, upper: u64, tag: Tag) -> UcBound {
    UcBound::new(
        BigUint::from(lower),
        Some(BigUint::from(upper)),
        alloc::vec![tag],
    )
    .expect("lower <= upper")
}

fn uc_exact(value: u64, tag: Tag) -> UcBound {
    UcBound::exact(BigUint::from(value), alloc::vec![tag]).expect("positive")
}

pub fn surface_curve_comparison(
    class: &ComparisonClass,
    assume_conjecture: bool,
) -> Result<Comparison, RdimError> {
    let (uc, rdim) = match class {
        ComparisonClass::Curve { genus, has_point } => {
            let uc = uc_exact(
                if *has_point { 1 } else { 2 },
                Tag::new(Rule::CurveUlrich, format!("genus {genus}")),
            );
            (Some(uc), rdim::rdim_curve(*genus, *has_point))
        }
        ComparisonClass::Surface(s) => {
            let rdim = rdim::rdim_surface(s, assume_conjecture)?;
            let uc = match s {
                SurfaceClass::DelPezzo9 { algebra } => PolarizedBs::new(*algebra, 1)
                    .and_then(|x| bounds::uc_bs_bounds(&x, None))
                    .ok(),
                SurfaceClass::DelPezzo8 { .. } => Some(uc_exact(
                    2,
                    Tag::new(Rule::ProductUlrich, "relative hyperplane polarization"),
                )),
                SurfaceClass::DelPezzo7 => Some(uc_exact(
                    2,
                    Tag::new(
                        Rule::PlaneEvenUlrich,
                        "uc of the plane under O(d), d even, compared with rdim of the blow-up",
                    ),
                )),
                SurfaceClass::DelPezzoLow { .. } => None,
                SurfaceClass::MinimalRuled { base_genus: 0 } => Some(uc_exact(
                    1,
                    Tag::new(Rule::SurfaceUlrich, "for certain ample line bundles"),
                )),
                SurfaceClass::MinimalRuled { .. } => Some(uc_range(
                    1,
                    2,
                    Tag::new(Rule::SurfaceUlrich, "1 or 2 depending on the polarization"),
                )),
                SurfaceClass::Abelian { picard_rank_one: true } => Some(uc_exact(
                    2,
                    Tag::new(Rule::SurfaceUlrich, "abelian surface of Picard rank one"),
                )),
                SurfaceClass::Abelian { picard_rank_one: false } => Some(uc_range(
                    1,
                    2,
                    Tag::new(Rule::SurfaceUlrich, "abelian surface, uc <= 2"),
                )),
                SurfaceClass::K3 => Some(uc_range(
                    1,
                    2,
                    Tag::new(Rule::SurfaceUlrich, "K3 surface, uc <= 2 for any polarization"),
                )),
                SurfaceClass::Phantom => Some(uc_range(
                    1,
                    2,
                    Tag::new(Rule::SurfaceUlrich, "uc <= 2 for certain ample line bundles"),
                )),
            };
            (uc, rdim)
        }
    };
    let relation = classify(
        uc.as_ref().and_then(UcBound::exact_value),
        rdim.exact_value(),
    );
    Ok(Comparison { uc, rdim, relation })
}

/// Relation for a ribbon: only determined when its rdim is assumed.
pub fn ribbon_relation(assume_conjecture: bool) -> Relation {
    let rdim = rdim::rdim_ribbon(assume_conjecture);
    match rdim.range() {
        RdimRange::Exact(r) => classify(Some(&BigUint::from(2u32)), Some(r)),
        _ => Relation::Undetermined,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishing_examples() {
        assert!(ribbon_h0_vanishes(3));
        assert!(!ribbon_h0_vanishes(0));
        assert!(!ribbon_h0_vanishes(-2));
        assert!(ribbon_h1_vanishes(0));
        assert!(!ribbon_h1_vanishes(1));
        assert!(ribbon_h1_vanishes(-5));
        assert!(ribbon_h1_vanishes(i64::MIN));
    }

    #[test]
    fn certificate() {
        for d in [-3, 0, 1, 5] {
            let c = ribbon_line_bundle_certificate(d);
            assert!(!c.exists);
            assert!(c.verify());
            assert_eq!(c.rows.len() as i64, 2 * RIBBON_WINDOW + 1);
        }
        let mut forged = ribbon_line_bundle_certificate(0);
        forged.rows[0].h0_vanishes = !forged.rows[0].h0_vanishes;
        assert!(!forged.verify());
    }

    #[test]
    fn ribbon_uc() {
        for d in -5..=5 {
            assert_eq!(uc_ribbon(d).uc, BigUint::from(2u32));
        }
        assert_eq!(ribbon_relation(false), Relation::Undetermined);
        assert_eq!(ribbon_relation(true), Relation::RdimPlusOne);
    }

    #[test]
    fn products() {
        assert_eq!(
            product_of_curves_report(CurveProduct::SelfProduct),
            (2, 1, Relation::RdimPlusOne)
        );
        assert_eq!(
            product_of_curves_report(CurveProduct::Distinct),
            (2, 2, Relation::Equal)
        );
        assert_eq!(
            product_of_curves_report(CurveProduct::WithLine),
            (2, 1, Relation::RdimPlusOne)
        );
    }

    #[test]
    fn comparison_table() {
        let c = surface_curve_comparison(&ComparisonClass::Curve { genus: 2, has_point: false }, false).unwrap();
        assert_eq!(c.uc.unwrap().exact_value(), Some(&BigUint::from(2u32)));
        assert_eq!(c.rdim.exact_value(), Some(1));
        assert_eq!(c.relation, Relation::RdimPlusOne);

        let c = surface_curve_comparison(&ComparisonClass::Curve { genus: 2, has_point: true }, false).unwrap();
        assert_eq!(c.relation, Relation::Equal);

        let s = |class| surface_curve_comparison(&ComparisonClass::Surface(class), false).unwrap();
        let c = s(SurfaceClass::Abelian { picard_rank_one: true });
        assert_eq!(c.relation, Relation::Equal);
        let c = s(SurfaceClass::K3);
        assert_eq!(c.uc.as_ref().unwrap().upper(), Some(&BigUint::from(2u32)));
        assert_eq!(c.rdim.exact_value(), Some(2));
        assert_eq!(c.relation, Relation::Undetermined);
        assert_eq!(s(SurfaceClass::DelPezzo7).relation, Relation::RdimPlusTwo);
        assert_eq!(s(SurfaceClass::MinimalRuled { base_genus: 0 }).relation, Relation::RdimPlusOne);
        assert_eq!(s(SurfaceClass::Phantom).relation, Relation::Undetermined);
        let c = s(SurfaceClass::DelPezzoLow { degree: 4 });
        assert!(c.uc.is_none());
        assert_eq!(c.relation, Relation::Undetermined);
    }

    #[test]
    fn classify_cases() {
        let b = |v: u64| BigUint::from(v);
        assert_eq!(classify(Some(&b(2)), Some(1)), Relation::RdimPlusOne);
        assert_eq!(classify(Some(&b(2)), Some(2)), Relation::Equal);
        assert_eq!(classify(Some(&b(1)), Some(2)), Relation::RdimMinusOne);
        assert_eq!(classify(Some(&b(2)), Some(0)), Relation::RdimPlusTwo);
        assert_eq!(classify(Some(&b(9)), Some(0)), Relation::Other);
        assert_eq!(classify(None, Some(0)), Relation::Undetermined);
    }
}
