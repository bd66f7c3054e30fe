mod common;

use common::{fixture, fixture_names, load_fixture};
use num_bigint::BigInt;
use torus_strata::classify::{classify, classify_components, NamedType, StratifoldSummary};
use torus_strata::document::{load, InputDocument};
use torus_strata::strata::SurfaceWithBoundary;

#[test]
fn fixtures_round_trip() {
    for name in fixture_names("valid") {
        let text = std::fs::read_to_string(fixture(&format!("valid/{name}"))).unwrap();
        let doc = InputDocument::parse(&text).unwrap();
        let again = InputDocument::parse(&doc.to_toml_string()).unwrap();
        assert_eq!(again, doc, "{name}");
        let data = doc.to_data().unwrap().data;
        let regenerated = InputDocument::from_data(&data);
        assert_eq!(
            load(&regenerated.to_toml_string()).unwrap().data,
            data,
            "{name}"
        );
    }
}

fn named(rel: &str) -> NamedType {
    classify(&load_fixture(rel).data).unwrap().named_type
}

fn manifold(rel: &str) -> bool {
    classify(&load_fixture(rel).data)
        .unwrap()
        .is_manifold
        .manifold
}

#[test]
fn fixture_classifications() {
    assert_eq!(named("valid/interval_s3.toml"), NamedType::Sphere3);
    assert_eq!(named("valid/interval_s2xs1.toml"), NamedType::S2xS1);
    assert_eq!(
        named("valid/lens_5.toml"),
        NamedType::LensSpaceOrder(BigInt::from(5))
    );
    assert_eq!(named("valid/quasitoric_cp1.toml"), NamedType::QuasitoricCP1);
    assert_eq!(
        named("valid/circle_t2.toml"),
        NamedType::PrincipalBundleOverCircle(2)
    );
    assert_eq!(named("valid/torus_t3.toml"), NamedType::Torus(3));
    assert!(matches!(
        named("valid/surface_chern.toml"),
        NamedType::PrincipalBundleOverSurface { genus: 2, .. }
    ));
    assert!(matches!(
        named("valid/theta_rank2.toml"),
        NamedType::CanonicalOverGraph {
            vertices: 2,
            edges: 3,
            loops: 0
        }
    ));
    assert_eq!(
        named("valid/mobius.toml"),
        NamedType::CanonicalOverStratifold(StratifoldSummary::Surface(SurfaceWithBoundary {
            orientable: false,
            genus: 1,
            boundary_count: 1
        }))
    );
    for yes in [
        "interval_s3",
        "lens_5",
        "quasitoric_cp1",
        "disk",
        "annulus",
        "mobius",
        "surface_chern",
        "klein_chern",
        "circle_t2",
        "torus_t3",
    ] {
        assert!(manifold(&format!("valid/{yes}.toml")), "{yes}");
    }
    for no in ["loop", "theta_rank2", "two_sheets", "double_cover"] {
        assert!(!manifold(&format!("valid/{no}.toml")), "{no}");
    }
}

#[test]
fn disconnected_fixture_is_split() {
    let d = load_fixture("valid/two_intervals.toml").data;
    assert!(classify(&d).is_err());
    let parts = classify_components(&d).unwrap();
    let names: Vec<NamedType> = parts.into_iter().map(|r| r.named_type).collect();
    assert_eq!(
        names,
        vec![
            NamedType::Sphere3,
            NamedType::LensSpaceOrder(BigInt::from(7))
        ]
    );
}
