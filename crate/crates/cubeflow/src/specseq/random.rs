use rand::Rng;

use super::{FilteredComplex, Generator};
use crate::f2core::{BitVec, F2Matrix};

/// A random filtered complex with at most `max_dim` generators.
///
/// Built as a direct sum of survivors and pairs `x → y` with `t(y) − t(x)`
/// between 0 and `max_gap`, then conjugated by a random change of basis that
/// preserves filtration, parity and `q`. Returns the complex together with the
/// number of survivors and the gaps of the pairs, which predict every page:
/// a pair with gap `g` is present on `E^r` exactly for `r ≤ g`.
pub fn random_filtered_complex<R: Rng>(rng: &mut R, max_dim: usize, max_gap: i64) -> (FilteredComplex, usize, Vec<i64>) {
    let dim = rng.gen_range(1..=max_dim);
    let mut gens = Vec::new();
    let mut d0: Vec<Vec<usize>> = Vec::new();
    let mut gaps = Vec::new();
    let mut survivors = 0;
    while gens.len() < dim {
        let t = rng.gen_range(0..6);
        let parity = rng.gen_range(0..2u8);
        let q = Some(rng.gen_range(0..2i64) * 2);
        if gens.len() + 2 <= dim && rng.gen_bool(0.6) {
            let gap = rng.gen_range(0..=max_gap);
            let x = gens.len();
            gens.push(Generator { t, parity, q });
            gens.push(Generator { t: t + gap, parity: 1 - parity, q });
            d0.push(vec![x + 1]);
            d0.push(Vec::new());
            gaps.push(gap);
        } else {
            gens.push(Generator { t, parity, q });
            d0.push(Vec::new());
            survivors += 1;
        }
    }
    let n = gens.len();
    // P = identity + random entries from g_j to g_i with t_i > t_j (or equal t, i > j)
    // within the same (q, parity); this is unitriangular, hence invertible.
    let compatible = |i: usize, j: usize| {
        let (a, b) = (gens[i], gens[j]);
        a.q == b.q && a.parity == b.parity && (a.t > b.t || (a.t == b.t && i > j))
    };
    let coin: Vec<bool> = (0..n * n).map(|_| rng.gen_bool(0.3)).collect();
    let p = F2Matrix::from_fn(n, n, |i, j| i == j || (compatible(i, j) && coin[i * n + j]));
    let p_inv_cols: Vec<BitVec> = (0..n).map(|j| p.solve(&BitVec::unit(n, j)).expect("P is invertible")).collect();
    let p_inv = F2Matrix::from_columns(n, &p_inv_cols);
    let d0m = F2Matrix::from_columns(n, &d0.iter().map(|c| BitVec::from_indices(n, c.iter().copied())).collect::<Vec<_>>());
    let d = p.mul(&d0m).mul(&p_inv);
    let cols = (0..n).map(|j| d.column(j).ones().collect()).collect();
    let c = FilteredComplex::new(gens, cols).expect("conjugation preserves the filtered-complex axioms");
    (c, survivors, gaps)
}
