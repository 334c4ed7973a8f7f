use cubeflow::corpus;
use cubeflow::khcube::RankTable;
use cubeflow::oracles::*;
use cubeflow::poly::Laurent;

#[test]
fn jones_matches_reference_table() {
    for k in corpus::knots() {
        let v = kauffman_jones(&k.diagram());
        let expected = Laurent::from_pairs(&k.jones).substitute_power(2);
        assert_eq!(v, expected, "{}", k.name);
        assert_eq!(determinant_from_jones(&v), k.det, "{}", k.name);
    }
}

#[test]
fn frobenius_matches_reference_table() {
    for k in corpus::knots() {
        let r = frobenius_kh_reduced(&k.diagram());
        let expected = RankTable::from_triples(k.kh_reduced_mod2.iter().copied());
        assert_eq!(r, expected, "{}", k.name);
    }
}

#[test]
fn seifert_matches_reference_table() {
    for k in corpus::knots() {
        let (s, det, nu) = seifert_signature(&k.diagram()).unwrap();
        assert_eq!((s, det, nu), (k.sigma, k.det, 0), "{}", k.name);
    }
    for l in corpus::links() {
        let (s, det, nu) = seifert_signature(&l.diagram()).unwrap();
        assert_eq!((s, det, nu), (l.sigma, l.det, l.nullity), "{}", l.name);
    }
}

#[test]
fn oracles_agree_with_each_other() {
    for k in corpus::knots() {
        let d = k.diagram();
        let kh = frobenius_kh_reduced(&d);
        assert_eq!(kh.euler_polynomial(), kauffman_jones(&d), "{}", k.name);
    }
    for l in corpus::links() {
        let d = l.diagram();
        let v = kauffman_jones(&d);
        assert_eq!(determinant_from_jones(&v), l.det, "{}", l.name);
        let r0 = frobenius_kh_reduced_at(&d, 0);
        assert_eq!(r0.euler_polynomial(), v, "{}", l.name);
        for e in 1..d.edge_count() {
            assert_eq!(frobenius_kh_reduced_at(&d, e), r0, "{} basepoint {e}", l.name);
        }
    }
}
