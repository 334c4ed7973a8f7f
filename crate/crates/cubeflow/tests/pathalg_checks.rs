use std::time::Instant;

use cubeflow::lattice::ProductLattice;
use cubeflow::pathalg::*;
use cubeflow::Parallelism;
use proptest::prelude::*;

#[test]
fn identity_on_cubes_and_surgery_lattices() {
    let start = Instant::now();
    let mut lattices: Vec<ProductLattice> = (1..=4).map(ProductLattice::cube).collect();
    lattices.push(ProductLattice::surgery(1));
    lattices.push(ProductLattice::surgery(2));
    for lat in &lattices {
        let v = verify_lattice(lat, Parallelism::Rayon);
        assert!(v.ok(), "{}: {:?}", v.lattice, v.failures);
    }
    assert_eq!(verify_lattice(&ProductLattice::cube(3), Parallelism::Sequential).intervals, 27);
    eprintln!("identity checked in {:?}", start.elapsed());
}

#[test]
fn longer_chains_still_satisfy_the_formal_identity() {
    for n in 3..=4 {
        let v = verify_lattice(&ProductLattice::chain(n), Parallelism::Rayon);
        assert!(v.ok(), "{v:?}");
    }
}

#[test]
fn surgery_chain_square_term() {
    // On {0,1,∞} the composites through 1 are exactly m(1,∞)·m(0,1).
    let alg = PathAlgebra::new(&ProductLattice::surgery(1));
    let q = alg.gen_q(0, 2);
    let d01 = alg.gen_d(0, 1);
    let d12 = alg.gen_d(1, 2);
    let mut expected = FormalSum::new();
    for (s, t) in [(Node::O, Node::O), (Node::O, Node::S), (Node::S, Node::O), (Node::S, Node::S)] {
        let mut e = FormalSum::new();
        for mid in [Node::O, Node::S] {
            for a in d01.get(s, mid).iter() {
                for b in d12.get(mid, t).iter() {
                    let mut w = a.0.clone();
                    w.extend_from_slice(&b.0);
                    e.add(Word(w));
                }
            }
        }
        assert_eq!(q.get(s, t), &e);
        expected.add_all(&e);
    }
    assert_eq!(expected.len(), 3 + 4 + (3 * 2 + 2) + (3 * 3 + 2));
    assert!(alg.check_q(0, 2));
}

/// Every composable word of at most `max_len` generators from `(s, i)` to `(t, j)`.
fn unrestricted(alg: &PathAlgebra, s: Node, i: usize, t: Node, j: usize, max_len: usize) -> Vec<Word> {
    fn go(
        alg: &PathAlgebra,
        node: Node,
        at: usize,
        t: Node,
        j: usize,
        left: usize,
        prefix: &mut Vec<IntervalGenerator>,
        out: &mut Vec<Word>,
    ) {
        if node == t && at == j && !prefix.is_empty() {
            out.push(Word(prefix.clone()));
        }
        if left == 0 {
            return;
        }
        for kind in GeneratorKind::ALL.into_iter().filter(|k| k.source() == node) {
            for k in 0..alg.lattice().vertex_count() {
                if alg.le(at, k) && alg.le(k, j) {
                    prefix.push(IntervalGenerator { kind, from: at, to: k });
                    go(alg, kind.target(), k, t, j, left - 1, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(alg, s, i, t, j, max_len, &mut Vec::new(), &mut out);
    out
}

fn small_lattice() -> impl Strategy<Value = ProductLattice> {
    proptest::collection::vec(1u8..=2, 1..=4).prop_filter_map("at most 81 vertices", |lengths| {
        let lat = ProductLattice::new(lengths).ok()?;
        (lat.vertex_count() <= 81).then_some(lat)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn identity_holds_on_random_intervals(lat in small_lattice(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 3)) {
        let alg = PathAlgebra::new(&lat);
        let intervals = alg.intervals();
        for p in picks {
            let (i, j) = intervals[p.index(intervals.len())];
            let c = alg.verify_identity(i, j);
            prop_assert!(c.ok(), "{} {:?}→{:?}", lat, c.from, c.to);
            prop_assert!(c.max_multiplicity <= 2);
        }
    }

    #[test]
    fn relations_are_filtered_enumerations(lat in small_lattice().prop_filter("small", |l| l.vertex_count() <= 9), pick in any::<prop::sample::Index>()) {
        let alg = PathAlgebra::new(&lat);
        let intervals = alg.intervals();
        let (i, j) = intervals[pick.index(intervals.len())];
        for kind in GeneratorKind::ALL {
            let (s, t) = (kind.source(), kind.target());
            // Interior relations start at o or u, so the first letter has weight at
            // least 1, and weight-0 letters never follow each other: four letters suffice.
            let all = unrestricted(&alg, s, i, t, j, 4);
            if !kind.barred() {
                let filtered = FormalSum::from_words(all.iter().filter(|w| w.weight() == 2).cloned());
                prop_assert_eq!(FormalSum::from_words(alg.relation(kind, i, j)), filtered);
            } else {
                let filtered = FormalSum::from_words(all.iter().filter(|w| w.0.len() == 2 && w.0.iter().all(|g| g.kind.barred())).cloned());
                prop_assert_eq!(FormalSum::from_words(alg.relation(kind, i, j)), filtered);
            }
            for w in alg.relation(kind, i, j) {
                prop_assert!(w.is_composable(&lat));
            }
        }
        let d = alg.gen_d(i, j);
        for (s, t) in [(Node::O, Node::O), (Node::O, Node::S), (Node::S, Node::O), (Node::S, Node::S)] {
            let all = unrestricted(&alg, s, i, t, j, 3);
            let filtered = FormalSum::from_words(all.into_iter().filter(|w| w.weight() == 1));
            prop_assert_eq!(d.get(s, t), &filtered);
        }
    }
}

#[test]
fn surgery_cube() {
    let v = verify_lattice(&ProductLattice::surgery(3), Parallelism::Rayon);
    assert_eq!(v.intervals, 216);
    assert!(v.ok(), "{:?}", v.failures);
}

/// About 40 s in a debug build; run with `--ignored`.
#[test]
#[ignore]
fn largest_surgery_lattice() {
    let start = Instant::now();
    let v = verify_lattice(&ProductLattice::surgery(4), Parallelism::Rayon);
    assert_eq!(v.intervals, 1296);
    assert!(v.ok(), "{:?}", v.failures);
    eprintln!("{{0,1,∞}}^4: {} words in {:?}", v.words, start.elapsed());
}
