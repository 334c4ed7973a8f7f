use cubeflow::corpus;
use cubeflow::khcube::{build_complex, homology};
use cubeflow::oracles::frobenius_kh_reduced;
use cubeflow::Parallelism;

#[test]
fn exterior_complex_computes_reduced_khovanov_homology() {
    let mut diagrams: Vec<(String, _)> = corpus::knots().into_iter().map(|k| (k.name.clone(), k.diagram())).collect();
    diagrams.extend(corpus::links().into_iter().map(|l| (l.name.clone(), l.diagram())));
    for (name, d) in diagrams {
        let k = build_complex(&d, 24, Parallelism::Rayon).unwrap();
        assert!(k.check_d_squared(Parallelism::Rayon), "{name}: d^2 != 0");
        assert_eq!(homology(&k, Parallelism::Rayon), frobenius_kh_reduced(&d), "{name}");
    }
}

#[test]
fn sequential_and_parallel_agree() {
    for k in corpus::knots().into_iter().take(20) {
        let c = build_complex(&k.diagram(), 24, Parallelism::Rayon).unwrap();
        assert_eq!(homology(&c, Parallelism::Rayon), homology(&c, Parallelism::Sequential), "{}", k.name);
    }
}
