//! Signature, determinant and nullity from a one-circle resolution.
//!
//! Resolving along a spanning tree of the black graph leaves a single circle.
//! Each crossing contributes a short arc joining the two strands of its
//! smoothing; two arcs are *linked* when their endpoints interleave around the
//! circle. The symmetric matrix `A` with `a_ii = (−1)^{m_i}` and `a_ij = ±1` on
//! linked pairs computes `σ(L) = σ(A) + w(I*) − n₋`, `det(L) = |det A|` and
//! `ν(L) = nullity(A)`.
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::diagram::{resolve, Checkerboard, LinkDiagram, Vertex};
use crate::f2core::SymIntMatrix;
use crate::{Error, Result};

/// Sign applied to every linked entry. Linked arcs sit on opposite sides of the
/// circle, so either choice gives congruent matrices; this one was fixed first.
const LINKED_SIGN: i64 = -1;

/// Exhaustive search for a one-circle vertex is only attempted up to this size.
const EXHAUSTIVE_LIMIT: usize = 20;

/// Arcs on the single circle of `D(I*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcDiagram {
    pub istar: Vertex,
    /// Arc (crossing) index at each of the `2l` endpoint positions, in circle order.
    pub endpoints: Vec<usize>,
    /// The two endpoint positions of every arc, first-visited first.
    pub ends: Vec<(usize, usize)>,
    /// `true` when the arc lies in a merged black region.
    pub black_side: Vec<bool>,
    /// `true` when the arc runs from its second-visited endpoint to its first.
    pub reversed: Vec<bool>,
}

impl ArcDiagram {
    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    /// Tail and head positions of arc `i` under the current orientation.
    pub fn tail_head(&self, i: usize) -> (usize, usize) {
        let (a, b) = self.ends[i];
        if self.reversed[i] {
            (b, a)
        } else {
            (a, b)
        }
    }

    /// Endpoints interleave as `i, j, i, j` around the circle.
    pub fn linked(&self, i: usize, j: usize) -> bool {
        let (a, b) = self.ends[i];
        let (c, d) = self.ends[j];
        (a < c && c < b) != (a < d && d < b)
    }

    pub fn linked_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.linked(i, j)).collect()
    }

    /// Same arcs with the orientation of the flagged arcs reversed.
    pub fn with_flips(&self, flips: &[bool]) -> ArcDiagram {
        let mut out = self.clone();
        for (r, &f) in out.reversed.iter_mut().zip(flips) {
            *r ^= f;
        }
        out
    }
}

/// `true` if position `p` lies on the circle arc running forward from `from` to `to`.
fn on_forward_arc(p: usize, from: usize, to: usize) -> bool {
    if from < to {
        from < p && p < to
    } else {
        p > from || p < to
    }
}

/// A vertex with a single circle, from a spanning tree of the black graph.
pub fn find_onecircle_vertex(d: &LinkDiagram) -> Result<Vertex> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let l = d.len();
    if l == 0 {
        return Ok(Vertex::zero(0));
    }
    let cb = Checkerboard::new(d);
    let nf = cb.faces.count();
    let mut parent: Vec<usize> = (0..nf).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    let mut tree = vec![false; l];
    for (x, in_tree) in tree.iter_mut().enumerate() {
        let black = cb.black_merging_digit(x);
        let (k0, k1) = if black == 0 { (1, 3) } else { (0, 2) };
        let f = find(&mut parent, cb.faces.corner_face[x][k0]);
        let g = find(&mut parent, cb.faces.corner_face[x][k1]);
        if f != g {
            parent[f] = g;
            *in_tree = true;
        }
    }
    // Tree crossings merge black regions, the rest merge white ones.
    let v = Vertex::from_fn(l, |x| (cb.black_merging_digit(x) == 1) == tree[x]);
    if resolve(d, v).circle_count() == 1 {
        return Ok(v);
    }
    if l <= EXHAUSTIVE_LIMIT {
        if let Some(v) = (0..1u64 << l).map(|b| Vertex::new(l, b)).find(|&v| resolve(d, v).circle_count() == 1) {
            return Ok(v);
        }
    }
    Err(Error::Input("no one-circle resolution found".into()))
}

/// Every one-circle vertex of a small diagram.
pub fn all_onecircle_vertices(d: &LinkDiagram) -> Vec<Vertex> {
    let l = d.len();
    assert!(l <= EXHAUSTIVE_LIMIT);
    (0..1u64 << l).map(|b| Vertex::new(l, b)).filter(|&v| resolve(d, v).circle_count() == 1).collect()
}

/// Read the arcs off the circle of `D(istar)`.
pub fn arcs_and_links(d: &LinkDiagram, istar: Vertex) -> Result<ArcDiagram> {
    let r = resolve(d, istar);
    if r.circle_count() != 1 {
        return Err(Error::Input(format!("vertex {istar} has {} circles", r.circle_count())));
    }
    let l = d.len();
    let cb = Checkerboard::new(d);
    let mut endpoints = vec![usize::MAX; 2 * l];
    let mut ends = Vec::with_capacity(l);
    for (x, visits) in r.site_visits.iter().enumerate() {
        let (a, b) = (visits[0].position, visits[1].position);
        endpoints[a] = x;
        endpoints[b] = x;
        ends.push((a.min(b), a.max(b)));
    }
    let black_side = (0..l).map(|x| cb.black_merging_digit(x) == istar.digit(x)).collect();
    Ok(ArcDiagram { istar, endpoints, ends, black_side, reversed: vec![false; l] })
}

/// The signed arc-linking matrix.
///
/// For a linked pair, let `i` be the arc on the black side and `j` the other;
/// the entry is `+1` when the tail of `j` lies on the circle arc running forward
/// from the tail of `i` to its head, and `−1` otherwise, times one global sign.
/// Linked arcs always lie on opposite sides of the circle.
pub fn linking_matrix(arcs: &ArcDiagram) -> SymIntMatrix {
    let n = arcs.len();
    let mut a = SymIntMatrix::zeros(n);
    for i in 0..n {
        a.set(i, i, if arcs.istar.digit(i) == 1 { -1 } else { 1 });
    }
    for (i, j) in arcs.linked_pairs() {
        let (bi, wj) = if arcs.black_side[i] { (i, j) } else { (j, i) };
        debug_assert_ne!(arcs.black_side[i], arcs.black_side[j]);
        let (t, h) = arcs.tail_head(bi);
        let (tj, _) = arcs.tail_head(wj);
        let s = if on_forward_arc(tj, t, h) { 1 } else { -1 };
        a.set(i, j, LINKED_SIGN * s);
        a.set(j, i, LINKED_SIGN * s);
    }
    a
}

pub fn build_a(d: &LinkDiagram) -> Result<(ArcDiagram, SymIntMatrix)> {
    let istar = find_onecircle_vertex(d)?;
    let arcs = arcs_and_links(d, istar)?;
    let a = linking_matrix(&arcs);
    Ok((arcs, a))
}

/// `(σ, det, ν)` of the link from a given one-circle vertex.
pub fn signature_formula_at(d: &LinkDiagram, istar: Vertex) -> Result<(i64, i64, usize)> {
    let arcs = arcs_and_links(d, istar)?;
    Ok(invariants(d, &arcs, &linking_matrix(&arcs)))
}

fn invariants(d: &LinkDiagram, arcs: &ArcDiagram, a: &SymIntMatrix) -> (i64, i64, usize) {
    let (sig, det, nul) = a.signature_det_nullity();
    let (_, n_minus) = d.crossing_signs();
    let sigma = sig + arcs.istar.weight() as i64 - n_minus as i64;
    (sigma, det.abs().to_i64().expect("determinant fits in i64"), nul)
}

/// `σ(L) = σ(A) + w(I*) − n₋`, `det(L) = |det A|`, `ν(L) = nullity(A)`.
pub fn signature_formula(d: &LinkDiagram) -> Result<(i64, i64, usize)> {
    let (arcs, a) = build_a(d)?;
    Ok(invariants(d, &arcs, &a))
}

#[derive(Serialize)]
struct Report {
    sigma: i64,
    det: i64,
    nullity: usize,
    istar: Vec<u8>,
    #[serde(rename = "A")]
    a: Vec<Vec<i64>>,
    arc_orientations: Vec<(usize, usize)>,
}

/// JSON report including `I*`, the matrix and the arc orientations.
pub fn report_json(d: &LinkDiagram) -> Result<String> {
    let (arcs, a) = build_a(d)?;
    let (sigma, det, nullity) = invariants(d, &arcs, &a);
    let r = Report {
        sigma,
        det,
        nullity,
        istar: arcs.istar.digits(),
        a: a.rows().to_vec(),
        arc_orientations: (0..arcs.len()).map(|i| arcs.tail_head(i)).collect(),
    };
    Ok(serde_json::to_string(&r).expect("serializable"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::examples::*;

    #[test]
    fn trefoil_anchors() {
        let d = right_trefoil();
        let arcs = arcs_and_links(&d, Vertex::parse("010").unwrap()).unwrap();
        let a = linking_matrix(&arcs);
        // Arcs 0 and 2 sit on the same side of the circle, so only two pairs link.
        assert_eq!(arcs.linked_pairs(), vec![(0, 1), (1, 2)]);
        let (s, det, nul) = a.signature_det_nullity();
        assert_eq!((s, det.abs().to_i64().unwrap(), nul), (1, 3, 0));
        assert_eq!(signature_formula(&d).unwrap(), (2, 3, 0));
        assert_eq!(signature_formula(&left_trefoil()).unwrap(), (-2, 3, 0));
        assert_eq!(signature_formula_at(&d, Vertex::parse("010").unwrap()).unwrap(), (2, 3, 0));
    }

    #[test]
    fn unknots() {
        assert_eq!(signature_formula(&LinkDiagram::unknot()).unwrap(), (0, 1, 0));
        assert_eq!(signature_formula(&kinked_unknot()).unwrap(), (0, 1, 0));
        for v in all_onecircle_vertices(&kinked_unknot()) {
            assert_eq!(signature_formula_at(&kinked_unknot(), v).unwrap(), (0, 1, 0));
        }
    }

    #[test]
    fn nested_arcs_are_unlinked() {
        let arcs = ArcDiagram {
            istar: Vertex::zero(2),
            endpoints: vec![0, 1, 1, 0],
            ends: vec![(0, 3), (1, 2)],
            black_side: vec![true, true],
            reversed: vec![false; 2],
        };
        assert!(arcs.linked_pairs().is_empty());
    }

    #[test]
    fn connected_sum_is_block_diagonal() {
        let d = crate::diagram::braid_to_pd(3, &[1, 1, 1, 2, 2, 2]).unwrap();
        let (arcs, _) = build_a(&d).unwrap();
        for (i, j) in arcs.linked_pairs() {
            assert_eq!(i < 3, j < 3, "arcs {i} and {j} link across summands");
        }
        assert_eq!(signature_formula(&d).unwrap(), (4, 9, 0));
    }

    #[test]
    fn disconnected_diagram_is_rejected() {
        let pd = vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2], [7, 11, 8, 10], [9, 7, 10, 12], [11, 9, 12, 8]];
        let d = LinkDiagram::new(pd).unwrap();
        assert!(matches!(signature_formula(&d), Err(Error::Disconnected)));
    }
}
