//! Provenance tags attached to every numeric claim.

use alloc::string::String;

/// The rule that justified a bound, value or candidate set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    // Ulrich complexity of Brauer–Severi varieties and twisted forms.
    DescentChain,
    DivisibilityAllPrimes,
    DivisibilityPerPrime,
    VeroneseFactorialUpper,
    NoUlrichLineBundle,
    HighDimensionFloor,
    SuppliedSplitValue,
    SplitOracle,
    Catalogue,
    DivisibilityCandidates,
    SurfaceTable,
    ThreefoldTable,
    PrimeDimensionChain,
    QuadricSpinorValue,
    QuadricScaling,
    InvolutionChain,
    RealIndexTwo,
    TwistedQuadricRange,
    FlagChainTypeA,
    FlagChainTypeBcd,
    FlagChainRdimForm,
    // Representability dimension.
    RationalPointCriterion,
    IndexBound,
    BiquaternionValue,
    NoSemiorthogonalDecomposition,
    ProductDecomposition,
    DelPezzoSevenValue,
    RuledSurfaceValue,
    PhantomBound,
    NotKnown,
    PeriodIndexConjecture,
    RibbonRdimConjecture,
    // Euler characteristics and criteria.
    UlrichChiFormula,
    RankRdimInequality,
    RootCriterion,
    GeneralizedRootCriterion,
    GeneralizedInequality,
    AffineRootCriterion,
    // Ribbons, products and surfaces.
    RibbonCohomology,
    RibbonWitness,
    ProductUlrich,
    CurveUlrich,
    SurfaceUlrich,
    PlaneEvenUlrich,
}

impl Rule {
    /// Stable snake-case identifier used in reports.
    pub fn id(self) -> &'static str {
        match self {
            Rule::DescentChain => "descent_chain",
            Rule::DivisibilityAllPrimes => "divisibility_all_primes",
            Rule::DivisibilityPerPrime => "divisibility_per_prime",
            Rule::VeroneseFactorialUpper => "veronese_factorial_upper",
            Rule::NoUlrichLineBundle => "no_ulrich_line_bundle",
            Rule::HighDimensionFloor => "high_dimension_floor",
            Rule::SuppliedSplitValue => "supplied_split_value",
            Rule::SplitOracle => "split_oracle",
            Rule::Catalogue => "catalogue",
            Rule::DivisibilityCandidates => "divisibility_candidates",
            Rule::SurfaceTable => "surface_table",
            Rule::ThreefoldTable => "threefold_table",
            Rule::PrimeDimensionChain => "prime_dimension_chain",
            Rule::QuadricSpinorValue => "quadric_spinor_value",
            Rule::QuadricScaling => "quadric_scaling",
            Rule::InvolutionChain => "involution_chain",
            Rule::RealIndexTwo => "real_index_two",
            Rule::TwistedQuadricRange => "twisted_quadric_range",
            Rule::FlagChainTypeA => "flag_chain_type_a",
            Rule::FlagChainTypeBcd => "flag_chain_type_bcd",
            Rule::FlagChainRdimForm => "flag_chain_rdim_form",
            Rule::RationalPointCriterion => "rational_point_criterion",
            Rule::IndexBound => "index_bound",
            Rule::BiquaternionValue => "biquaternion_value",
            Rule::NoSemiorthogonalDecomposition => "no_semiorthogonal_decomposition",
            Rule::ProductDecomposition => "product_decomposition",
            Rule::DelPezzoSevenValue => "del_pezzo_seven_value",
            Rule::RuledSurfaceValue => "ruled_surface_value",
            Rule::PhantomBound => "phantom_bound",
            Rule::NotKnown => "not_known",
            Rule::PeriodIndexConjecture => "period_index_conjecture",
            Rule::RibbonRdimConjecture => "ribbon_rdim_conjecture",
            Rule::UlrichChiFormula => "ulrich_chi_formula",
            Rule::RankRdimInequality => "rank_rdim_inequality",
            Rule::RootCriterion => "root_criterion",
            Rule::GeneralizedRootCriterion => "generalized_root_criterion",
            Rule::GeneralizedInequality => "generalized_inequality",
            Rule::AffineRootCriterion => "affine_root_criterion",
            Rule::RibbonCohomology => "ribbon_cohomology",
            Rule::RibbonWitness => "ribbon_witness",
            Rule::ProductUlrich => "product_ulrich",
            Rule::CurveUlrich => "curve_ulrich",
            Rule::SurfaceUlrich => "surface_ulrich",
            Rule::PlaneEvenUlrich => "plane_even_ulrich",
        }
    }

    /// One-line statement of the rule.
    pub fn summary(self) -> &'static str {
        match self {
            Rule::DescentChain => {
                "uc over a minimal splitting field <= uc(X) <= ind * (uc over that field)"
            }
            Rule::DivisibilityAllPrimes => {
                "every prime <= n divides pd, so n! divides the rank of every Ulrich bundle"
            }
            Rule::DivisibilityPerPrime => {
                "for each prime q <= n dividing pd the q-part of n! divides every Ulrich rank"
            }
            Rule::VeroneseFactorialUpper => "uc of a Veronese variety of dimension n is at most n!",
            Rule::NoUlrichLineBundle => "a variety without rational point carries no Ulrich line bundle",
            Rule::HighDimensionFloor => "non-split Brauer-Severi variety of dimension >= 4 has uc >= 4",
            Rule::SuppliedSplitValue => "uc of the split model, from the caller, the oracle or the catalogue",
            Rule::SplitOracle => "uc of the split model computed by the line-bundle cohomology oracle",
            Rule::Catalogue => "imported literature value from the catalogue",
            Rule::DivisibilityCandidates => "uc is a multiple of the divisibility bound inside the range",
            Rule::SurfaceTable => "candidate set for Brauer-Severi surfaces of period 3",
            Rule::ThreefoldTable => "candidate set for Brauer-Severi threefolds by period and pd mod 6",
            Rule::PrimeDimensionChain => "rdim <= p-1 and (p-1)! <= uc in dimension p-1 with d = (p-1)!",
            Rule::QuadricSpinorValue => "uc of a smooth quadric in P^(m-1) under O(1) is 2^floor((m-3)/2)",
            Rule::QuadricScaling => "rank r Ulrich on O(1) gives rank r*dim! Ulrich on O(d)",
            Rule::InvolutionChain => "uc of the split quadric <= uc(X) <= ind * (uc of the split quadric)",
            Rule::RealIndexTwo => "a non-split real central simple algebra has index 2",
            Rule::TwistedQuadricRange => {
                "2^floor((dim-1)/2) <= uc <= ind * dim * 2^floor((dim-1)/2) for twisted quadrics"
            }
            Rule::FlagChainTypeA => "descent chain for inner twisted flags of type A",
            Rule::FlagChainTypeBcd => "descent chain for inner twisted flags of types B, C, D",
            Rule::FlagChainRdimForm => "upper bound (rdim + 1) * split uc under rdim + 1 = ind",
            Rule::RationalPointCriterion => "rdim = 0 exactly when there is a rational point",
            Rule::IndexBound => "rdim <= ind - 1 with equality when ind <= 3",
            Rule::BiquaternionValue => "Brauer-Severi variety of a biquaternion division algebra has rdim 2",
            Rule::NoSemiorthogonalDecomposition => "no non-trivial semiorthogonal decomposition",
            Rule::ProductDecomposition => "semiorthogonal decomposition of a product of curves",
            Rule::DelPezzoSevenValue => "del Pezzo surface of degree 7 has rdim 0",
            Rule::RuledSurfaceValue => "minimal ruled surface: rdim 0 over genus 0, 1 otherwise",
            Rule::PhantomBound => "surfaces with phantom categories have rdim <= 2",
            Rule::NotKnown => "value not known",
            Rule::PeriodIndexConjecture => "CONJECTURE: rdim = ind - 1 when period equals index",
            Rule::RibbonRdimConjecture => "CONJECTURE: a twisted ribbon has rdim 1",
            Rule::UlrichChiFormula => "chi(E(l)) = rk/n! * prod_j (l + j*pd) for Ulrich E on (P^n, O(pd))",
            Rule::RankRdimInequality => "chi/t^n >= uc * (rdim + 1)^n when pd = ind * t",
            Rule::RootCriterion => "uc = rdim + 1 iff uc = (1/d) * (chi/rk)^(1/n), given rdim + 1 = p",
            Rule::GeneralizedRootCriterion => {
                "uc = rdim + 1 iff uc = gcd(p,m)/(s e) * (chi/(rk deg G))^(1/dim), given rdim + 1 = ind = p"
            }
            Rule::GeneralizedInequality => {
                "chi * (gcd(p,m)/(s e))^dim >= uc * deg G * (rdim + 1)^dim, given rdim + 1 = p"
            }
            Rule::AffineRootCriterion => {
                "uc = c rdim + b iff uc = (b - c) + (c/d) * (chi/rk)^(1/n), given rdim + 1 = p"
            }
            Rule::RibbonCohomology => "h0(w^e) = 0 iff e > 0 and h1(w^e) = h0(w^(1-e))",
            Rule::RibbonWitness => "IMPORTED: the canonical rank 2 extension bundle has no cohomology",
            Rule::ProductUlrich => "product of Brauer-Severi curves with relative hyperplane polarization has uc 2",
            Rule::CurveUlrich => "uc of a curve is 1 with a rational point and 2 without",
            Rule::SurfaceUlrich => "imported Ulrich complexity statement for the surface class",
            Rule::PlaneEvenUlrich => "uc of the plane under O(d) is 2 for d even",
        }
    }

    pub fn is_conjecture(self) -> bool {
        matches!(self, Rule::PeriodIndexConjecture | Rule::RibbonRdimConjecture)
    }
}

/// A rule together with a note specific to the claim it supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tag {
    pub rule: Rule,
    pub note: String,
}

impl Tag {
    pub fn new(rule: Rule, note: impl Into<String>) -> Self {
        Tag {
            rule,
            note: note.into(),
        }
    }

    pub fn bare(rule: Rule) -> Self {
        Tag {
            rule,
            note: String::new(),
        }
    }
}
