use std::time::Instant;

use cubeflow::lattice::*;

#[test]
fn every_small_connected_graph() {
    let start = Instant::now();
    let mut total = 0;
    for n in 1..=6 {
        for g in connected_graphs(n) {
            let c = check_graph(&g).unwrap();
            assert!(c.ok(), "{:?}: {c:?}", g.edges());
            total += 1;
        }
    }
    assert_eq!(total, 143);
    eprintln!("143 graphs in {:?}", start.elapsed());
}

#[test]
fn cube_counts_match_tubings() {
    for m in 0..=5 {
        for k in 0..=5 - m {
            if m + k == 0 {
                continue;
            }
            let g = clique_with_leaves(m, k);
            let expected = cube_count_u128(m, k);
            assert_eq!(g.count_maximal_tubings(), expected, "m={m} k={k}");
            assert_eq!(g.maximal_tubings().unwrap().len() as u128, expected, "m={m} k={k}");
        }
    }
}

#[test]
fn duality_for_supported_lattices() {
    for lat in supported_lattices() {
        let r = check_duality(&lat).unwrap();
        assert!(r.ok(), "{r:?}");
    }
}

#[test]
fn realizations_are_certified() {
    for m in 3..=6 {
        let k = refined_associahedron(m).unwrap();
        let c = k.certify().unwrap();
        assert!(c.ok(), "K_{m}: {c:?}");
    }
    for n in 2..=4 {
        let p = refined_permutohedron(n).unwrap();
        assert!(p.certify().unwrap().ok(), "P_{n}");
    }
    let k5 = realize(PolytopeKind::Associahedron(5)).unwrap();
    assert_eq!(k5.len(), 14);
    assert!(k5.iter().all(|v| v.len() == 3));
}

#[test]
fn cancellation_up_to_five() {
    for l in 1..=5 {
        let r = cube_cancellation(l).unwrap();
        assert!(r.ok(), "{r:?}");
    }
    assert_eq!(cube_cancellation(4).unwrap().survivors, 24);
}
