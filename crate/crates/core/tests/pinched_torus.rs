mod common;

use common::{fixture, load_fixture, Simplicial};
use torus_strata::model::{build_canonical_complex, homology};
use torus_strata::strata::is_single_loop;

#[test]
fn triangulated_wedge_has_expected_homology() {
    let text = std::fs::read_to_string(fixture("s2_wedge_s1.simplices")).unwrap();
    let (free, torsion_free) = Simplicial::parse(&text).homology();
    assert_eq!(free, vec![1, 1, 1]);
    assert!(torsion_free);
}

#[test]
fn loop_model_matches_triangulation() {
    let text = std::fs::read_to_string(fixture("s2_wedge_s1.simplices")).unwrap();
    let (free, _) = Simplicial::parse(&text).homology();
    let p = load_fixture("valid/loop.toml");
    assert!(is_single_loop(p.data.orbit_space()));
    let h = homology(&build_canonical_complex(&p.data).unwrap());
    assert_eq!(h.free_ranks(), free);
    assert!(h.groups.iter().all(|g| g.torsion.is_empty()));
    assert_eq!(h.to_string(), "(Z, Z, Z)");
}

#[test]
fn oracle_sees_torsion() {
    // six-vertex projective plane: H = (Z, Z/2, 0)
    let rp2 = "1 2 3\n1 3 4\n1 4 5\n1 5 6\n1 6 2\n2 3 5\n3 4 6\n4 5 2\n5 6 3\n6 2 4\n";
    let s = Simplicial::parse(rp2);
    assert_eq!(
        s.simplices.iter().map(Vec::len).collect::<Vec<_>>(),
        vec![6, 15, 10]
    );
    let (free, torsion_free) = s.homology();
    assert_eq!(free, vec![1, 0, 0]);
    assert!(!torsion_free);
}
