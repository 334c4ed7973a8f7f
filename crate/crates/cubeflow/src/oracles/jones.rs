use crate::diagram::{circle_labels, LinkDiagram, Vertex};
use crate::poly::Laurent;

/// Kauffman bracket `⟨D⟩ = Σ_s A^{#0 − #1} (−A² − A⁻²)^{loops − 1}` as a
/// Laurent polynomial in `A`, with the 0-smoothing as the A-smoothing.
pub fn kauffman_bracket(d: &LinkDiagram) -> Laurent {
    let l = d.len();
    let loop_value = Laurent::from_pairs(&[(2, -1), (-2, -1)]);
    let max_loops = l + 1;
    let powers: Vec<Laurent> = (0..=max_loops).map(|k| loop_value.pow(k as u32)).collect();
    let mut out = Laurent::zero();
    for b in 0..1u64 << l {
        let v = Vertex::new(l, b);
        let (c, _) = circle_labels(d, v);
        let w = v.weight() as i64;
        out = out.add(&powers[c - 1].shift(l as i64 - 2 * w));
    }
    out
}

/// Jones polynomial in the variable `s = q^{1/2}` (so `V(q)` has only even
/// powers of `s` for knots). The right-handed trefoil gives `s² + s⁶ − s⁸`.
///
/// The substitution is `A^{−2} = −s`, the normalization under which the graded
/// Euler characteristic of Khovanov homology reproduces `V` on the nose; for
/// knots it agrees with the classical `A^{−4} = t`.
pub fn kauffman_jones(d: &LinkDiagram) -> Laurent {
    let w = d.writhe();
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let f = kauffman_bracket(d).shift(-3 * w).scale(sign);
    let halved = f.exact_div_exponents(2).expect("bracket exponents are even after normalization");
    let mut out = Laurent::zero();
    for (e, c) in halved.terms() {
        // A^{2e} = (−s)^{−e}
        out.add_term(-e, if e.rem_euclid(2) == 0 { c } else { -c });
    }
    out
}

/// `|V(−1)|`, evaluated at `s = i`.
pub fn determinant_from_jones(v: &Laurent) -> i64 {
    let (re, im) = v.eval_at_i();
    let n2 = (re as i128) * (re as i128) + (im as i128) * (im as i128);
    let r = (n2 as f64).sqrt().round() as i128;
    assert_eq!(r * r, n2, "|V(-1)| is an integer");
    r as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::examples::*;

    #[test]
    fn trefoils_and_unknot() {
        assert_eq!(kauffman_jones(&LinkDiagram::unknot()), Laurent::one());
        assert_eq!(kauffman_jones(&kinked_unknot()), Laurent::one());
        let rt = kauffman_jones(&right_trefoil());
        assert_eq!(rt, Laurent::from_pairs(&[(2, 1), (6, 1), (8, -1)]));
        assert_eq!(kauffman_jones(&left_trefoil()), rt.substitute_power(-1));
        assert_eq!(determinant_from_jones(&rt), 3);
        assert_eq!(determinant_from_jones(&kauffman_jones(&figure_eight())), 5);
        assert_eq!(determinant_from_jones(&kauffman_jones(&hopf())), 2);
    }
}
