//! Report assembly: runs the engines on a descriptor and collects every
//! value with its provenance.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::Value;

use ulrich_core::bounds::{self, FlagType, PolarizedBs, UcBound};
use ulrich_core::chi::{self, GeneralizedBs, Hypothesis};
use ulrich_core::cohomology::{self, SplittingType};
use ulrich_core::rdim::{self, CurveProduct, RdimValue, SurfaceClass};
use ulrich_core::special::{self, ComparisonClass, Relation};
use ulrich_core::{AlgebraInvariants, BigUint, RdimRange, Rule, Tag};

use crate::catalogue::Catalogue;
use crate::descriptor::{Descriptor, FlagKind, ProductKind, SurfaceKind, Witness};
use crate::error::Error;

/// Conjecture switches; both default to off.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub assume_period_index_conjecture: bool,
    pub assume_ribbon_rdim: bool,
}

/// A big integer as a JSON number when it fits in `u64`, else a string.
pub fn big_json(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(small) => Value::from(small),
        Err(_) => Value::from(v.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TagJson {
    pub rule: &'static str,
    pub note: String,
}

impl From<&Tag> for TagJson {
    fn from(t: &Tag) -> Self {
        TagJson {
            rule: t.rule.id(),
            note: t.note.clone(),
        }
    }
}

fn tags(ts: &[Tag]) -> Vec<TagJson> {
    ts.iter().map(TagJson::from).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UcJson {
    pub lower: Value,
    pub upper: Option<Value>,
    pub exact: Option<Value>,
    pub candidates: Option<Vec<Value>>,
    pub provenance: Vec<TagJson>,
}

impl From<&UcBound> for UcJson {
    fn from(b: &UcBound) -> Self {
        UcJson {
            lower: big_json(b.lower()),
            upper: b.upper().map(big_json),
            exact: b.exact_value().map(big_json),
            candidates: b.candidates().map(|c| c.iter().map(big_json).collect()),
            provenance: tags(b.provenance()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RdimJson {
    pub status: &'static str,
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    pub provenance: Vec<TagJson>,
}

impl From<&RdimValue> for RdimJson {
    fn from(r: &RdimValue) -> Self {
        let status = match r.range() {
            RdimRange::Exact(_) => "exact",
            RdimRange::Interval(..) => "interval",
            RdimRange::Unknown => "unknown",
        };
        let (lower, upper) = r.bounds().map_or((None, None), |(a, b)| (Some(a), Some(b)));
        RdimJson {
            status,
            lower,
            upper,
            provenance: tags(r.provenance()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionJson {
    pub name: &'static str,
    pub hypothesis: Option<&'static str>,
    pub result: Value,
    pub provenance: Vec<TagJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub d: i64,
    pub exponents_checked: usize,
    pub first_e: i64,
    pub last_e: i64,
    pub line_bundle_exists: bool,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub input: Descriptor,
    pub uc: Option<UcJson>,
    pub rdim: RdimJson,
    pub relation: &'static str,
    pub notes: Vec<String>,
    pub criteria: Vec<CriterionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    pub conjectures_used: Vec<&'static str>,
    pub diagnostics: Vec<String>,
}

impl Report {
    /// Every reported bound end carries at least one provenance tag.
    pub fn provenance_complete(&self) -> bool {
        self.uc.as_ref().is_none_or(|u| !u.provenance.is_empty())
            && !self.rdim.provenance.is_empty()
            && self.criteria.iter().all(|c| !c.provenance.is_empty())
    }
}

struct Parts {
    uc: Option<UcBound>,
    rdim: RdimValue,
    relation: Option<Relation>,
    notes: Vec<String>,
    criteria: Vec<CriterionJson>,
    certificate: Option<CertificateJson>,
    diagnostics: Vec<String>,
}

impl Parts {
    fn new(uc: Option<UcBound>, rdim: RdimValue) -> Self {
        Parts {
            uc,
            rdim,
            relation: None,
            notes: Vec::new(),
            criteria: Vec::new(),
            certificate: None,
            diagnostics: Vec::new(),
        }
    }
}

fn algebra(degree: u64, period: u64, index: u64) -> Result<AlgebraInvariants, Error> {
    AlgebraInvariants::validate(degree, period, index).map_err(Error::validation)
}

fn fmt_set(set: &BTreeSet<BigUint>) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

/// Notes comparing `rdim + 1` with the `uc` candidates or range.
fn mismatch_notes(uc: &UcBound, rdim: &RdimValue) -> Vec<String> {
    let mut notes = Vec::new();
    let Some((lo, hi)) = rdim.bounds() else {
        return notes;
    };
    let (lo1, hi1) = (BigUint::from(lo + 1), BigUint::from(hi + 1));
    match (uc.candidates(), rdim.range()) {
        (Some(c), RdimRange::Exact(_)) if !c.contains(&lo1) => {
            notes.push(format!("rdim + 1 = {lo1} is not among the uc candidates {}", fmt_set(c)));
        }
        (Some(c), RdimRange::Interval(..)) if c.iter().all(|v| *v < lo1 || *v > hi1) => {
            notes.push(format!(
                "rdim + 1 lies in [{lo1}, {hi1}], disjoint from the uc candidates {}",
                fmt_set(c)
            ));
        }
        (None, _) => {
            let below = uc.upper().is_some_and(|u| *u < lo1);
            if below || *uc.lower() > hi1 {
                notes.push(format!(
                    "rdim + 1 in [{lo1}, {hi1}] is outside the uc range [{}, {}]",
                    uc.lower(),
                    uc.upper().map_or_else(|| String::from("?"), ToString::to_string)
                ));
            }
        }
        _ => {}
    }
    notes
}

/// `uc(P^n, O(1)) = 1` and `uc(P^1, O(pd)) = 1`, found by searching line
/// bundles with the cohomology oracle.
fn split_line_bundle(n: u64, pd: u64) -> Option<i64> {
    let n32 = u32::try_from(n).ok()?;
    let pd_i = i64::try_from(pd).ok()?;
    (-pd_i - 2..=pd_i + 2).find(|&a| {
        SplittingType::new(n32, [a]).is_ok_and(|t| cohomology::is_ulrich_split(&t, pd))
    })
}

fn witness_criteria(
    n: u64,
    d: u64,
    pd: u64,
    ind: u64,
    w: &Witness,
    uc: &UcBound,
    rdim: &RdimValue,
) -> Result<Vec<CriterionJson>, Error> {
    let n32 = u32::try_from(n).map_err(|_| Error::Validation(String::from("dimension too large")))?;
    let chi = BigUint::from(w.chi);
    let rank = BigUint::from(w.rank);
    if w.rank == 0 {
        return Err(Error::Validation(String::from("witness rank must be at least 1")));
    }
    let expected = chi::chi_ulrich_bs(n32, pd, &rank);
    let mut out = vec![CriterionJson {
        name: "witness_chi",
        hypothesis: None,
        result: serde_json::json!({
            "expected": big_json(&expected),
            "matches": expected == chi,
        }),
        provenance: vec![TagJson::from(&Tag::new(
            Rule::UlrichChiFormula,
            format!("chi = rank * pd^n = {expected}"),
        ))],
    }];
    let value = chi::uc_from_chi(n32, d, &chi, &rank);
    out.push(CriterionJson {
        name: "root_criterion",
        hypothesis: Some(Hypothesis::RdimPlusOneEqualsPeriod.as_str()),
        result: value.as_ref().map_or(Value::Null, big_json),
        provenance: vec![TagJson::from(&Tag::new(
            Rule::RootCriterion,
            match &value {
                Some(v) => format!("uc = rdim + 1 iff uc = {v}"),
                None => String::from("(chi/rank)^(1/n)/d is not a positive integer"),
            },
        ))],
    });
    if let Some(r) = rdim.exact_value() {
        match chi::rank_rdim_inequality(n32, pd, ind, &chi, r, uc.lower()) {
            Ok(holds) => out.push(CriterionJson {
                name: "rank_rdim_inequality",
                hypothesis: None,
                result: Value::from(holds),
                provenance: vec![TagJson::from(&Tag::new(
                    Rule::RankRdimInequality,
                    format!("checked at uc = {} and rdim = {r}", uc.lower()),
                ))],
            }),
            Err(e) => out.push(CriterionJson {
                name: "rank_rdim_inequality",
                hypothesis: None,
                result: Value::Null,
                provenance: vec![TagJson::from(&Tag::new(Rule::RankRdimInequality, e.to_string()))],
            }),
        }
    }
    Ok(out)
}

fn brauer_severi(
    alg: AlgebraInvariants,
    d: u64,
    biquaternion: bool,
    split_uc: Option<u64>,
    witness: Option<&Witness>,
    opts: &Options,
    catalogue: Option<&Catalogue>,
) -> Result<Parts, Error> {
    let x = PolarizedBs::new(alg, d).map_err(Error::validation)?;
    let (n, pd, per) = (x.dim(), x.pd(), alg.period());
    let mut diagnostics = Vec::new();
    let mut source = None;

    let split = match split_uc {
        Some(0) => return Err(Error::Validation(String::from("split_uc must be at least 1"))),
        Some(v) => Some(BigUint::from(v)),
        None => {
            if let Some(a) = split_line_bundle(n, pd) {
                source = Some(Tag::new(
                    Rule::SplitOracle,
                    format!("O({a}) is Ulrich on (P^{n}, O({pd}))"),
                ));
                Some(BigUint::from(1u32))
            } else if let Some(hit) = catalogue.and_then(|c| c.veronese_value(n, pd)) {
                source = Some(Tag::new(
                    Rule::Catalogue,
                    format!("uc(P^{n}, O({pd})) = {}: {}", hit.lower, hit.citation),
                ));
                Some(BigUint::from(hit.lower))
            } else {
                diagnostics.push(match catalogue {
                    None => format!("no catalogue loaded; uc(P^{n}, O({pd})) is unknown"),
                    Some(_) => format!("catalogue has no value for uc(P^{n}, O({pd}))"),
                });
                None
            }
        }
    };

    let mut uc = bounds::uc_bs_bounds(&x, split.as_ref()).map_err(Error::validation)?;
    if let Some(tag) = source {
        uc.push_tag(tag);
    }
    if let Some(hit) = catalogue.and_then(|c| c.brauer_severi_bounds(n, per, pd)) {
        let tag = || Tag::new(Rule::Catalogue, hit.citation.clone());
        uc.raise_lower(BigUint::from(hit.lower), tag())
            .and_then(|_| match hit.upper {
                Some(u) => uc.lower_upper(BigUint::from(u), tag()),
                None => Ok(()),
            })
            .map_err(Error::validation)?;
    }

    let divisor = bounds::divisibility_lower_bound(n, pd);
    match bounds::divisibility_candidates(&uc, &divisor) {
        Some(set) => {
            let tag = Tag::new(Rule::DivisibilityCandidates, format!("multiples of {divisor}"));
            uc.restrict_to(set, tag).map_err(Error::validation)?;
        }
        None => diagnostics.push(String::from("candidate set too large to enumerate")),
    }
    if !alg.is_split() {
        let table = match (n, per) {
            (2, 3) => Some((bounds::surface_candidates(pd), Rule::SurfaceTable)),
            (3, _) => Some((bounds::threefold_candidates(per, pd), Rule::ThreefoldTable)),
            _ => None,
        };
        if let Some((set, rule)) = table {
            let set = set.map_err(Error::validation)?;
            let note = format!("p = {per}, pd = {pd}: {}", fmt_set(&set));
            if uc.restrict_to(set, Tag::new(rule, note)).is_err() {
                diagnostics.push(String::from("candidate table is inconsistent with the bounds"));
            }
        }
    }

    let rdim = rdim::rdim_brauer_severi(&alg, biquaternion, opts.assume_period_index_conjecture)
        .map_err(Error::validation)?;
    let mut parts = Parts::new(None, rdim);
    parts.notes = mismatch_notes(&uc, &parts.rdim);
    if let Some(w) = witness {
        parts.criteria = witness_criteria(n, d, pd, alg.index(), w, &uc, &parts.rdim)?;
    }
    parts.uc = Some(uc);
    parts.diagnostics = diagnostics;
    Ok(parts)
}

fn generalized_bs(g: GeneralizedBs, witness: Option<&Witness>) -> Result<Parts, Error> {
    let rdim = rdim::rdim_involution_variety(g.algebra().index());
    let mut parts = Parts::new(None, rdim);
    parts
        .diagnostics
        .push(String::from("no uc bounds for generalized Brauer-Severi varieties; use a twisted_flag descriptor"));
    let unit = chi::chi_generalized_bs(&g, &BigUint::from(1u32), 0);
    parts.notes.push(format!(
        "chi of an Ulrich bundle per unit rank: {unit}, deg G = {}",
        g.grassmannian_degree()
    ));
    if let Some(w) = witness {
        let v = chi::generalized_criterion(
            &g,
            &BigUint::from(w.chi),
            &BigUint::from(w.rank),
            Some(Hypothesis::RdimPlusOneEqualsIndexEqualsPeriod),
        )
        .map_err(Error::validation)?;
        parts.criteria.push(CriterionJson {
            name: "generalized_root_criterion",
            hypothesis: Some(Hypothesis::RdimPlusOneEqualsIndexEqualsPeriod.as_str()),
            result: serde_json::json!({
                "value": v.value.as_ref().map_or(Value::Null, big_json),
                "inequality_holds": v.inequality_holds,
            }),
            provenance: tags(&v.provenance),
        });
    }
    Ok(parts)
}

fn involution(
    dim: u64,
    ind: Option<u64>,
    real_field: bool,
    trivial_discriminant: bool,
    d: u64,
    split_uc: Option<u64>,
) -> Result<Parts, Error> {
    let ind = match (real_field, ind) {
        (true, None | Some(2)) => 2,
        (true, Some(i)) => {
            return Err(Error::Validation(format!(
                "a non-split real algebra has index 2, got {i}"
            )))
        }
        (false, Some(i)) if i >= 1 => i,
        (false, _) => return Err(Error::Validation(String::from("ind is required off the reals"))),
    };
    if d == 0 {
        return Err(Error::Validation(String::from("d must be at least 1")));
    }
    let split = match split_uc {
        Some(0) => return Err(Error::Validation(String::from("split_uc must be at least 1"))),
        Some(v) => Some(BigUint::from(v)),
        None if d == 1 => {
            let q = bounds::uc_quadric(dim + 2, 1).map_err(Error::validation)?;
            q.exact_value().cloned()
        }
        None => None,
    };
    let mut diagnostics = Vec::new();
    let uc = match split {
        Some(s) if real_field => bounds::real_involution_bounds(dim, &s),
        Some(s) => bounds::uc_involution_bounds(dim, ind, &s),
        None if ind >= 2 && (real_field || trivial_discriminant) => {
            bounds::twisted_quadric_bounds(dim, ind, d)
        }
        None => {
            diagnostics.push(String::from("split quadric value unknown for this polarization"));
            bounds::uc_involution_bounds(dim, ind, &BigUint::from(1u32)).map(|mut b| {
                b.push_tag(Tag::new(Rule::NotKnown, "split value replaced by the trivial bound 1"));
                b
            })
        }
    }
    .map_err(Error::validation)?;
    let rdim = if real_field || trivial_discriminant {
        rdim::rdim_involution_variety(ind)
    } else {
        RdimValue::unknown(vec![Tag::new(
            Rule::NotKnown,
            "needs trivial discriminant or a real base field",
        )])
    };
    let mut parts = Parts::new(None, rdim);
    parts.notes = mismatch_notes(&uc, &parts.rdim);
    parts.uc = Some(uc);
    parts.diagnostics = diagnostics;
    Ok(parts)
}

fn surface_class(
    class: SurfaceKind,
    degree: Option<u64>,
    algebra_spec: Option<&crate::descriptor::AlgebraSpec>,
    product: Option<ProductKind>,
    base_genus: Option<u64>,
    picard_rank_one: Option<bool>,
) -> Result<SurfaceClass, Error> {
    let missing = |f: &str| Error::Validation(format!("surface class needs {f}"));
    Ok(match class {
        SurfaceKind::DelPezzo => match degree.ok_or_else(|| missing("degree"))? {
            9 => {
                let a = algebra_spec.ok_or_else(|| missing("algebra"))?;
                if a.degree != 3 {
                    return Err(Error::Validation(String::from(
                        "a del Pezzo surface of degree 9 comes from an algebra of degree 3",
                    )));
                }
                SurfaceClass::DelPezzo9 {
                    algebra: algebra(a.degree, a.period, a.index)?,
                }
            }
            8 => SurfaceClass::DelPezzo8 {
                product: curve_product(product.ok_or_else(|| missing("product"))?),
            },
            7 => SurfaceClass::DelPezzo7,
            k @ 1..=6 => SurfaceClass::DelPezzoLow { degree: k },
            k => return Err(Error::Validation(format!("del Pezzo degree {k} is outside 1..=9"))),
        },
        SurfaceKind::MinimalRuled => SurfaceClass::MinimalRuled {
            base_genus: base_genus.ok_or_else(|| missing("base_genus"))?,
        },
        SurfaceKind::Abelian => SurfaceClass::Abelian {
            picard_rank_one: picard_rank_one.unwrap_or(false),
        },
        SurfaceKind::K3 => SurfaceClass::K3,
        SurfaceKind::Phantom => SurfaceClass::Phantom,
    })
}

fn curve_product(p: ProductKind) -> CurveProduct {
    match p {
        ProductKind::SelfProduct => CurveProduct::SelfProduct,
        ProductKind::Distinct => CurveProduct::Distinct,
        ProductKind::WithLine => CurveProduct::WithLine,
    }
}

fn flag_type(f: FlagKind) -> FlagType {
    match f {
        FlagKind::A => FlagType::A,
        FlagKind::B => FlagType::B,
        FlagKind::C => FlagType::C,
        FlagKind::D => FlagType::D,
    }
}

fn comparison(class: ComparisonClass, opts: &Options) -> Result<Parts, Error> {
    let c = special::surface_curve_comparison(&class, opts.assume_period_index_conjecture)
        .map_err(Error::validation)?;
    let mut parts = Parts::new(None, c.rdim);
    if c.uc.is_none() {
        parts.diagnostics.push(String::from("uc is not known for this class"));
    }
    if let ComparisonClass::Surface(SurfaceClass::DelPezzo7) = class {
        parts.notes.push(String::from(
            "uc is that of the plane under O(d) with d even; rdim is that of the blow-up",
        ));
    }
    parts.uc = c.uc;
    parts.relation = Some(c.relation);
    Ok(parts)
}

fn assemble(desc: &Descriptor, opts: &Options, catalogue: Option<&Catalogue>) -> Result<Parts, Error> {
    match desc {
        Descriptor::BrauerSeveri {
            degree,
            period,
            index,
            d,
            biquaternion,
            split_uc,
            witness,
        } => brauer_severi(
            algebra(*degree, *period, *index)?,
            *d,
            *biquaternion,
            *split_uc,
            witness.as_ref(),
            opts,
            catalogue,
        ),
        Descriptor::GeneralizedBs {
            degree,
            period,
            index,
            m,
            s,
            e,
            witness,
        } => {
            let g = GeneralizedBs::new(algebra(*degree, *period, *index)?, *m, *s, *e)
                .map_err(Error::validation)?;
            generalized_bs(g, witness.as_ref())
        }
        Descriptor::TwistedFlag {
            flag_type: ft,
            ind,
            split_uc,
            rdim_plus_one_equals_ind,
        } => {
            let uc = bounds::uc_twisted_flag_bounds(
                flag_type(*ft),
                *ind,
                &BigUint::from(*split_uc),
                *rdim_plus_one_equals_ind,
            )
            .map_err(Error::validation)?;
            let rdim = if *rdim_plus_one_equals_ind {
                RdimValue::exact(
                    ind - 1,
                    vec![Tag::new(Rule::FlagChainRdimForm, "rdim + 1 = ind asserted by the caller")],
                )
            } else {
                RdimValue::unknown(vec![Tag::new(Rule::NotKnown, "rdim of the twisted flag not supplied")])
            };
            let mut parts = Parts::new(None, rdim);
            parts.notes = mismatch_notes(&uc, &parts.rdim);
            parts.uc = Some(uc);
            Ok(parts)
        }
        Descriptor::Involution {
            dim,
            ind,
            real_field,
            trivial_discriminant,
            d,
            split_uc,
        } => involution(*dim, *ind, *real_field, *trivial_discriminant, *d, *split_uc),
        Descriptor::Quadric { m, d } => {
            let uc = bounds::uc_quadric(*m, *d).map_err(Error::validation)?;
            let rdim = RdimValue::exact(0, vec![Tag::new(Rule::IndexBound, "split quadric, ind = 1")]);
            Ok(Parts::new(Some(uc), rdim))
        }
        Descriptor::Ribbon { d } => {
            let r = special::uc_ribbon(*d);
            let uc = UcBound::exact(r.uc.clone(), r.provenance.clone()).map_err(Error::validation)?;
            let mut parts = Parts::new(Some(uc), rdim::rdim_ribbon(opts.assume_ribbon_rdim));
            parts.relation = Some(special::ribbon_relation(opts.assume_ribbon_rdim));
            let rows = &r.certificate.rows;
            parts.certificate = Some(CertificateJson {
                d: r.certificate.d,
                exponents_checked: rows.len(),
                first_e: rows.first().map_or(0, |row| row.e),
                last_e: rows.last().map_or(0, |row| row.e),
                line_bundle_exists: r.certificate.exists,
                verified: r.certificate.verify(),
            });
            Ok(parts)
        }
        Descriptor::ProductOfCurves { product } => {
            let kind = curve_product(*product);
            let (uc, _, relation) = special::product_of_curves_report(kind);
            let uc = UcBound::exact(
                BigUint::from(uc),
                vec![Tag::new(Rule::ProductUlrich, "relative hyperplane polarization")],
            )
            .map_err(Error::validation)?;
            let mut parts = Parts::new(Some(uc), rdim::rdim_product_of_curves(kind));
            parts.relation = Some(relation);
            Ok(parts)
        }
        Descriptor::Curve { genus, has_point } => comparison(
            ComparisonClass::Curve {
                genus: *genus,
                has_point: *has_point,
            },
            opts,
        ),
        Descriptor::Surface {
            class,
            degree,
            algebra: a,
            product,
            base_genus,
            picard_rank_one,
        } => {
            let c = surface_class(*class, *degree, a.as_ref(), *product, *base_genus, *picard_rank_one)?;
            comparison(ComparisonClass::Surface(c), opts)
        }
    }
}

/// Run every applicable engine on `desc`.
///
/// The output depends only on the descriptor, the options and the catalogue.
pub fn run_report(desc: &Descriptor, opts: &Options, catalogue: Option<&Catalogue>) -> Result<Report, Error> {
    let parts = assemble(desc, opts, catalogue)?;
    let relation = parts.relation.unwrap_or_else(|| {
        special::classify(
            parts.uc.as_ref().and_then(UcBound::exact_value),
            parts.rdim.exact_value(),
        )
    });
    let mut conjectures: Vec<&'static str> = parts
        .rdim
        .provenance()
        .iter()
        .chain(parts.uc.iter().flat_map(|u| u.provenance()))
        .filter(|t| t.rule.is_conjecture())
        .map(|t| t.rule.id())
        .collect();
    conjectures.sort_unstable();
    conjectures.dedup();
    Ok(Report {
        input: desc.clone(),
        uc: parts.uc.as_ref().map(UcJson::from),
        rdim: RdimJson::from(&parts.rdim),
        relation: relation.as_str(),
        notes: parts.notes,
        criteria: parts.criteria,
        certificate: parts.certificate,
        conjectures_used: conjectures,
        diagnostics: parts.diagnostics,
    })
}
