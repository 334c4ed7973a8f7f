use std::collections::BTreeMap;

use cubeflow::corpus;
use cubeflow::diagram::{braid_to_pd, torus_braid};
use cubeflow::khcube::{build_complex, homology};
use cubeflow::linkmat::signature_formula;
use cubeflow::oracles::{determinant_from_jones, kauffman_jones};
use cubeflow::poly::Laurent;
use cubeflow::specseq::*;
use cubeflow::Parallelism;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn flatten(ranks: &BTreeMap<SlotKey, usize>) -> BTreeMap<(Option<i64>, u8, i64), usize> {
    ranks.iter().map(|(k, &n)| ((k.q, k.parity, k.t), n)).collect()
}

#[test]
fn random_complexes_converge_to_graded_homology() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..200 {
        let (c, survivors, gaps) = random_filtered_complex(&mut rng, 20, 4);
        let r_inf = c.convergence_page();
        let ps = pages(&c, r_inf + 1, Parallelism::Sequential);
        let einf = ps.last().unwrap();
        assert_eq!(flatten(&einf.ranks), flatten(&associated_graded_homology(&c)), "case {case}");
        assert_eq!(einf.total(), survivors, "case {case}");
        for (i, p) in ps.iter().enumerate() {
            let r = i + 1;
            let expected = survivors + 2 * gaps.iter().filter(|&&g| g >= r as i64).count();
            assert_eq!(p.total(), expected, "case {case}, page {r}");
            for pd in &p.differentials {
                assert_eq!(pd.to.t - pd.from.t, r as i64);
                assert_ne!(pd.to.parity, pd.from.parity);
                assert_eq!(pd.to.q, pd.from.q);
            }
            if let Some(next) = ps.get(i + 1) {
                assert_eq!(p.homology_ranks(), next.ranks, "case {case}, page {r}");
                for (k, &n) in &next.ranks {
                    assert!(n <= p.rank(*k));
                }
            }
        }
    }
}

#[test]
fn khovanov_cube_degenerates_at_e2() {
    for k in corpus::knots().into_iter().filter(|k| k.pd.len() <= 7) {
        let d = k.diagram();
        let (sigma, _, nu) = signature_formula(&d).unwrap();
        let cube = build_complex(&d, 24, Parallelism::Rayon).unwrap();
        let c = FilteredComplex::from_kh(&cube, sigma, nu, Parallelism::Rayon).unwrap();
        let ps = pages(&c, 3, Parallelism::Rayon);
        let kh = homology(&cube, Parallelism::Rayon);
        assert_eq!(ps[1].rank_table(), kh, "{}", k.name);
        assert_eq!(ps[2].ranks, ps[1].ranks, "{}", k.name);
        let polys = page_polynomials(&ps[1]).unwrap();
        assert_eq!(polys.v, kauffman_jones(&d), "{}", k.name);
    }
}

#[test]
fn delta_euler_characteristic_is_the_determinant() {
    let mut all: Vec<_> = corpus::knots().into_iter().map(|k| (k.name.clone(), k.diagram(), k.det)).collect();
    all.extend(corpus::links().into_iter().map(|l| (l.name.clone(), l.diagram(), l.det)));
    for (name, d, det) in all {
        let kh = homology(&build_complex(&d, 24, Parallelism::Rayon).unwrap(), Parallelism::Rayon);
        assert_eq!(euler_characteristic_delta(&kh), det, "{name}");
        assert_eq!(determinant_from_jones(&kauffman_jones(&d)), det, "{name}");
    }
}

#[test]
fn torus_knot_delta_polynomial() {
    let d = braid_to_pd(3, &torus_braid(3, 5)).unwrap();
    let (sigma, _, nu) = signature_formula(&d).unwrap();
    assert_eq!((sigma, nu), (8, 0));
    let cube = build_complex(&d, 24, Parallelism::Rayon).unwrap();
    let c = FilteredComplex::from_kh(&cube, sigma, nu, Parallelism::Rayon).unwrap();
    let e2 = page(&c, 2, Parallelism::Rayon);
    let u = page_polynomials(&e2).unwrap().u;
    // U is kept in powers of δ^{1/2}; δ^{−σ/2} U = δ^{−1}.
    assert_eq!(u.shift(-sigma), Laurent::monomial(-2, 1));
}
