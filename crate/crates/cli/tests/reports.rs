use proptest::prelude::*;

use ulrich_cli::descriptor::{self, FlagKind, ProductKind, SurfaceKind, Witness};
use ulrich_cli::{parse_descriptor, run_batch, run_report, Catalogue, Descriptor, Error, Options, Report};

fn bundled() -> Catalogue {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalogue.json");
    Catalogue::load(std::path::Path::new(path)).unwrap()
}

fn run(json: &str) -> Report {
    run_report(&parse_descriptor(json).unwrap(), &Options::default(), Some(&bundled())).unwrap()
}

fn exact_uc(r: &Report) -> Option<u64> {
    r.uc.as_ref()?.exact.as_ref()?.as_u64()
}

#[test]
fn surface_with_period_three_reports_mismatch() {
    let r = run(r#"{"kind":"brauer_severi","degree":3,"period":3,"index":3,"d":2}"#);
    let uc = r.uc.as_ref().unwrap();
    assert_eq!(uc.lower.as_u64(), Some(2));
    assert_eq!(uc.upper.as_ref().and_then(|v| v.as_u64()), Some(6));
    assert_eq!(r.rdim.lower, Some(2));
    assert!(r
        .notes
        .iter()
        .any(|n| n == "rdim + 1 = 3 is not among the uc candidates {2, 4, 6}"));
    assert!(r.provenance_complete());
}

#[test]
fn curve_self_product_relation() {
    let r = run(r#"{"kind":"product_of_curves","product":"self_product"}"#);
    assert_eq!(exact_uc(&r), Some(2));
    assert_eq!(r.rdim.lower, Some(1));
    assert_eq!(r.relation, "uc = rdim + 1");
}

#[test]
fn quadric_in_four_space() {
    let r = run(r#"{"kind":"quadric","m":5,"d":1}"#);
    assert_eq!(exact_uc(&r), Some(2));
    assert_eq!(r.rdim.status, "exact");
}

#[test]
fn ribbon_carries_certificate_and_unknown_rdim() {
    let r = run(r#"{"kind":"ribbon","d":-3}"#);
    assert_eq!(exact_uc(&r), Some(2));
    let cert = r.certificate.as_ref().unwrap();
    assert!(cert.verified && !cert.line_bundle_exists);
    assert_eq!(r.rdim.status, "unknown");
    assert!(r.conjectures_used.is_empty());

    let opts = Options {
        assume_ribbon_rdim: true,
        ..Options::default()
    };
    let r = run_report(&parse_descriptor(r#"{"kind":"ribbon","d":-3}"#).unwrap(), &opts, None).unwrap();
    assert_eq!(r.rdim.lower, Some(1));
    assert!(!r.conjectures_used.is_empty());
}

#[test]
fn conjecture_never_used_without_flag() {
    let r = run(r#"{"kind":"brauer_severi","degree":5,"period":5,"index":5,"d":1}"#);
    assert!(r.conjectures_used.is_empty());
    assert_eq!(r.rdim.status, "interval");
}

#[test]
fn invalid_algebra_is_a_validation_error() {
    let d = parse_descriptor(r#"{"kind":"brauer_severi","degree":6,"period":2,"index":3,"d":1}"#).unwrap();
    let err = run_report(&d, &Options::default(), None).unwrap_err();
    assert!(matches!(err, Error::Validation(_)));
    assert_eq!(err.exit_code(), 1);
}

#[test]
fn schema_errors_name_the_field() {
    let err = parse_descriptor(r#"{"kind":"quadric","m":"five","d":1}"#).unwrap_err();
    match err {
        Error::Schema { path, .. } => assert_eq!(path, "m"),
        other => panic!("unexpected {other:?}"),
    }
    let path_of = |json: &str| match parse_descriptor(json) {
        Err(Error::Schema { path, .. }) => path,
        other => panic!("unexpected {other:?}"),
    };
    assert_eq!(
        path_of(r#"{"kind":"brauer_severi","degree":2,"period":2,"index":2,"d":1,"witness":{"chi":-4,"rank":2}}"#),
        "witness.chi"
    );
    assert_eq!(path_of(r#"{"kind":"torus"}"#), "kind");
    assert_eq!(path_of(r#"{"m":5,"d":1}"#), "kind");
    assert!(parse_descriptor(r#"{"kind":"quadric","m":5,"d":1,"extra":0}"#).is_err());
}

#[test]
fn batch_errors_carry_their_index() {
    let items = descriptor::parse_input(r#"[{"kind":"quadric","m":5,"d":1},{"kind":"quadric"}]"#).unwrap();
    assert!(items[0].is_ok());
    match &items[1] {
        Err(Error::Schema { path, .. }) => assert!(path.starts_with("[1]"), "{path}"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn every_report_has_complete_provenance() {
    let inputs = [
        r#"{"kind":"brauer_severi","degree":2,"period":2,"index":2,"d":1,"witness":{"chi":4,"rank":2}}"#,
        r#"{"kind":"brauer_severi","degree":4,"period":2,"index":4,"d":1,"biquaternion":true}"#,
        r#"{"kind":"generalized_bs","degree":4,"period":2,"index":2,"m":2,"s":1,"e":1}"#,
        r#"{"kind":"twisted_flag","type":"B","ind":2,"split_uc":4}"#,
        r#"{"kind":"involution","dim":3,"real_field":true,"trivial_discriminant":false,"d":1}"#,
        r#"{"kind":"involution","dim":4,"ind":4,"real_field":false,"trivial_discriminant":true,"d":1}"#,
        r#"{"kind":"curve","genus":0,"has_point":false}"#,
        r#"{"kind":"surface","class":"del_pezzo","degree":7}"#,
        r#"{"kind":"surface","class":"k3"}"#,
        r#"{"kind":"surface","class":"abelian","picard_rank_one":true}"#,
        r#"{"kind":"surface","class":"minimal_ruled","base_genus":0}"#,
    ];
    for json in inputs {
        let r = run(json);
        assert!(r.provenance_complete(), "{json}");
    }
}

#[test]
fn batch_preserves_input_order() {
    let descs: Vec<Result<Descriptor, Error>> = (4..=12u64).map(|m| Ok(Descriptor::Quadric { m, d: 1 })).collect();
    let reports = run_batch(descs, &Options::default(), None);
    for (m, r) in (4..=12u64).zip(reports) {
        assert_eq!(exact_uc(&r.unwrap()), Some(1 << ((m - 3) / 2)));
    }
}

fn witness() -> impl Strategy<Value = Option<Witness>> {
    prop::option::of((1u64..100, 1u64..10).prop_map(|(chi, rank)| Witness { chi, rank }))
}

fn descriptors() -> impl Strategy<Value = Descriptor> {
    prop_oneof![
        (1u64..9, 1u64..9, 1u64..9, 1u64..5, any::<bool>(), prop::option::of(1u64..50), witness()).prop_map(
            |(degree, period, index, d, biquaternion, split_uc, witness)| Descriptor::BrauerSeveri {
                degree,
                period,
                index,
                d,
                biquaternion,
                split_uc,
                witness,
            }
        ),
        (1u64..9, 1u64..9, 1u64..9, 1u64..5, 1u64..4, 1u64..4, witness()).prop_map(
            |(degree, period, index, m, s, e, witness)| Descriptor::GeneralizedBs {
                degree,
                period,
                index,
                m,
                s,
                e,
                witness,
            }
        ),
        (
            prop::sample::select(vec![FlagKind::A, FlagKind::B, FlagKind::C, FlagKind::D]),
            1u64..9,
            1u64..50,
            any::<bool>()
        )
            .prop_map(|(flag_type, ind, split_uc, rdim_plus_one_equals_ind)| Descriptor::TwistedFlag {
                flag_type,
                ind,
                split_uc,
                rdim_plus_one_equals_ind,
            }),
        (1u64..8, prop::option::of(1u64..9), any::<bool>(), any::<bool>(), 1u64..4, prop::option::of(1u64..50))
            .prop_map(|(dim, ind, real_field, trivial_discriminant, d, split_uc)| Descriptor::Involution {
                dim,
                ind,
                real_field,
                trivial_discriminant,
                d,
                split_uc,
            }),
        (3u64..12, 1u64..4).prop_map(|(m, d)| Descriptor::Quadric { m, d }),
        (-20i64..20).prop_map(|d| Descriptor::Ribbon { d }),
        prop::sample::select(vec![ProductKind::SelfProduct, ProductKind::Distinct, ProductKind::WithLine])
            .prop_map(|product| Descriptor::ProductOfCurves { product }),
        (0u64..5, any::<bool>()).prop_map(|(genus, has_point)| Descriptor::Curve { genus, has_point }),
        (
            prop::sample::select(vec![
                SurfaceKind::DelPezzo,
                SurfaceKind::MinimalRuled,
                SurfaceKind::Abelian,
                SurfaceKind::K3,
                SurfaceKind::Phantom,
            ]),
            prop::option::of(1u64..10),
            prop::option::of(0u64..4),
            prop::option::of(any::<bool>()),
        )
            .prop_map(|(class, degree, base_genus, picard_rank_one)| Descriptor::Surface {
                class,
                degree,
                algebra: None,
                product: None,
                base_genus,
                picard_rank_one,
            }),
    ]
}

proptest! {
    #[test]
    fn descriptor_json_round_trip(d in descriptors()) {
        let text = descriptor::to_json(&d);
        prop_assert_eq!(parse_descriptor(&text).unwrap(), d);
    }

    #[test]
    fn reports_are_deterministic_and_tagged(d in descriptors()) {
        let opts = Options::default();
        let cat = bundled();
        let a = run_report(&d, &opts, Some(&cat));
        let b = run_report(&d, &opts, Some(&cat));
        match (a, b) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(ulrich_cli::render::to_json(&a), ulrich_cli::render::to_json(&b));
                prop_assert!(a.provenance_complete());
                prop_assert!(a.conjectures_used.is_empty());
            }
            (Err(a), Err(b)) => prop_assert_eq!(a.to_string(), b.to_string()),
            _ => prop_assert!(false, "runs disagree"),
        }
    }
}
