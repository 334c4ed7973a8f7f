use cubeflow::diagram::{braid_to_pd, torus_braid};
use cubeflow::khcube::{build_complex, homology};
use cubeflow::Parallelism;
use std::time::Instant;

fn main() {
    let q: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let d = braid_to_pd(3, &torus_braid(3, q)).unwrap();
    let t0 = Instant::now();
    let k = build_complex(&d, 24, Parallelism::Rayon).unwrap();
    println!("built dim {} in {:?}", k.dim(), t0.elapsed());
    let h = homology(&k, Parallelism::Rayon);
    println!("{}\n{:?}", h.to_text(), t0.elapsed());
    assert_eq!(h, cubeflow::oracles::frobenius_kh_reduced(&d));
    println!("frobenius agrees");
}
