//! The exterior-algebra map attached to a subspace `Γ ⊂ U0 ⊕ U1`.
use crate::diagram::{CubeEdge, EdgeKind};
use crate::f2core::ext::wedge_masks;
use crate::f2core::{BitVec, F2Matrix};

use super::KhComplex;

/// The map `Λ*U0 → Λ*U1` determined by the images `gamma` of a basis of Γ
/// (vectors packed as masks, `U0` on bits `0..n0`, `U1` on bits `n0..n0+n1`).
///
/// The images are wedged to `ω ∈ Λ^k(U0 ⊕ U1)`; a term `e_S ∧ f_T` of `ω`
/// contributes `e_R ↦ f_T` for the complementary `R = S^c`, i.e. `Λ^i U0` is
/// identified with `(Λ^{n0−i} U0)*` through the standard volume form. Linearly
/// dependent images give `ω = 0` and hence the zero map. Output columns are
/// indexed by masks of `U0`, rows by masks of `U1`.
pub fn donaldson_map(n0: usize, n1: usize, gamma: &[u64]) -> F2Matrix {
    assert!(n0 + n1 <= 63, "ambient dimension too large");
    let mut m = F2Matrix::zeros(1 << n1, 1 << n0);
    let full0 = (1u64 << n0) - 1;
    for term in wedge_masks(gamma) {
        let s = term & full0;
        let t = term >> n0;
        m.flip(t as usize, (full0 & !s) as usize);
    }
    m
}

/// Basis of `Γ` for the 2-dimensional cobordism of a cube edge, in the
/// `f`-coordinates of the source and target even subspaces:
/// `{(x, y) : Σ_{C ∩ in} x = Σ_{C ∩ out} y for every component C}`.
pub fn cobordism_gamma(c0: usize, c1: usize, e: &CubeEdge) -> Vec<u64> {
    let (n0, n1) = (c0 - 1, c1 - 1);
    // Components: untouched circles are cylinders i → map[i]; the pair of pants
    // is the component containing the merged or split circles.
    let mut comps: Vec<(u64, u64)> = Vec::new(); // (input circles, output circles)
    match e.kind {
        EdgeKind::Merge { a, b, c } => {
            comps.push((1 << a | 1 << b, 1 << c));
            for i in (0..c0).filter(|&i| i != a && i != b) {
                comps.push((1 << i, 1 << e.map[i]));
            }
        }
        EdgeKind::Split { c, a, b } => {
            comps.push((1 << c, 1 << a | 1 << b));
            for i in (0..c0).filter(|&i| i != c) {
                comps.push((1 << i, 1 << e.map[i]));
            }
        }
    }
    // An f-coordinate vector x has e-coordinates x_k (k < n) and Σ x_k on the last circle.
    let coord = |circles: u64, k: usize, last: usize| -> bool { (circles >> k & 1) != (circles >> last & 1) };
    let rows: Vec<BitVec> = comps
        .iter()
        .map(|&(cin, cout)| {
            BitVec::from_indices(
                n0 + n1,
                (0..n0).filter(|&k| coord(cin, k, n0)).chain((0..n1).filter(|&k| coord(cout, k, n1)).map(|k| n0 + k)),
            )
        })
        .collect();
    let constraints = F2Matrix::from_rows(n0 + n1, rows);
    constraints.kernel_basis().into_iter().map(|v| v.ones().fold(0u64, |acc, i| acc | 1 << i)).collect()
}

/// The block of `∂̂` along one edge as a dense matrix (rows: target masks).
pub fn edge_block(k: &KhComplex, e: &CubeEdge) -> F2Matrix {
    let (v, w) = (e.from.bits(), e.to.bits());
    let (n0, n1) = (k.rank_v(v), k.rank_v(w));
    let (img, extra) = k.edge_linear_data(e);
    let mut m = F2Matrix::zeros(1 << n1, 1 << n0);
    for mask in 0..1u64 << n0 {
        let mut f: Vec<u64> = extra.into_iter().collect();
        f.extend((0..n0).filter(|&i| mask >> i & 1 == 1).map(|i| img[i]));
        for t in wedge_masks(&f) {
            m.flip(t as usize, mask as usize);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::examples::*;
    use crate::khcube::build_complex;
    use crate::par::Parallelism;

    #[test]
    fn diagonal_gives_identity() {
        for n in 0..5 {
            let gamma: Vec<u64> = (0..n).map(|i| 1u64 << i | 1u64 << (n + i)).collect();
            assert_eq!(donaldson_map(n, n, &gamma), F2Matrix::identity(1 << n));
        }
    }

    #[test]
    fn dependent_images_give_zero() {
        let gamma = [0b0101u64, 0b1010, 0b1111];
        assert!(donaldson_map(2, 2, &gamma).is_zero());
    }

    #[test]
    fn edge_blocks_match_cobordism_maps() {
        let d = figure_eight();
        let k = build_complex(&d, 24, Parallelism::Sequential).unwrap();
        for v in 0..16u64 {
            for x in (0..4).filter(|&x| v >> x & 1 == 0) {
                let e = k.edge(v, x);
                let (c0, c1) = (k.circle_counts[v as usize], k.circle_counts[e.to.bits() as usize]);
                let g = cobordism_gamma(c0, c1, &e);
                assert_eq!(donaldson_map(c0 - 1, c1 - 1, &g), edge_block(&k, &e), "edge {v:b}+{x}");
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn independent_of_basis(n0 in 1usize..4, n1 in 1usize..4, seed in proptest::collection::vec(0u64..64, 1..5), ops in proptest::collection::vec((0usize..5, 0usize..5), 0..12)) {
            let mask = (1u64 << (n0 + n1)) - 1;
            let basis: Vec<u64> = seed.iter().map(|g| g & mask).collect();
            let mut other = basis.clone();
            for (i, j) in ops {
                let (i, j) = (i % other.len(), j % other.len());
                if i != j {
                    other[i] ^= other[j];
                } else {
                    other.swap(0, i);
                }
            }
            proptest::prop_assert_eq!(donaldson_map(n0, n1, &basis), donaldson_map(n0, n1, &other));
        }
    }
}
