use super::resolve::smoothing_partner;
use super::{LinkDiagram, Vertex};
use crate::par::{self, Parallelism};
use crate::{Error, Result};

/// How the circles change along a cube edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// Circles `a`, `b` of the source fuse into circle `c` of the target.
    Merge { a: usize, b: usize, c: usize },
    /// Circle `c` of the source splits into `a < b` of the target.
    Split { c: usize, a: usize, b: usize },
}

/// An edge `I → J` of the resolution cube changing digit `crossing` from 0 to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeEdge {
    pub from: Vertex,
    pub to: Vertex,
    pub crossing: usize,
    pub kind: EdgeKind,
    /// Source circle → target circle (a split parent goes to the smaller child).
    pub map: Vec<usize>,
}

/// The whole cube of resolutions, with vertices indexed by their bitmask.
#[derive(Clone, Debug)]
pub struct Cube {
    pub l: usize,
    pub circle_counts: Vec<usize>,
    pub edges: Vec<CubeEdge>,
}

/// Circle count and canonical circle id for every edge, by union-find.
pub fn circle_labels(d: &LinkDiagram, v: Vertex) -> (usize, Vec<usize>) {
    let ne = d.edge_count();
    if ne == 0 {
        return (1, Vec::new());
    }
    let mut parent: Vec<usize> = (0..ne).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for x in 0..d.len() {
        let dg = v.digit(x);
        for s in [0u8, 2] {
            let t = smoothing_partner(dg, s);
            let (a, b) = (d.edge_at(x, s), d.edge_at(x, t));
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut ids = vec![usize::MAX; ne];
    let mut out = vec![0; ne];
    let mut count = 0;
    for e in 0..ne {
        let r = find(&mut parent, e);
        if ids[r] == usize::MAX {
            ids[r] = count;
            count += 1;
        }
        out[e] = ids[r];
    }
    (count, out)
}

/// The cube edge from `v` through crossing `x` (which must carry digit 0).
pub fn cube_edge(d: &LinkDiagram, v: Vertex, x: usize) -> CubeEdge {
    let w = v.with_digit(x, 1);
    let (_, lf) = circle_labels(d, v);
    let (ct, lt) = circle_labels(d, w);
    edge_from_labels(d, v, w, x, &lf, ct, &lt)
}

/// Cube edge `from → to` through crossing `x`, given precomputed circle labels
/// (`ct` is the circle count at `to`).
pub fn edge_from_labels(d: &LinkDiagram, from: Vertex, to: Vertex, x: usize, lf: &[usize], ct: usize, lt: &[usize]) -> CubeEdge {
    let cf = lf.iter().max().map_or(1, |m| m + 1);
    let mut map = vec![usize::MAX; cf];
    for (e, &c) in lf.iter().enumerate() {
        map[c] = map[c].min(lt[e]);
    }
    // Arcs through the site before the change: 0-smoothing joins slots 0-1 and 2-3.
    let (p, q) = (lf[d.edge_at(x, 0)], lf[d.edge_at(x, 2)]);
    let kind = if p != q {
        let c = lt[d.edge_at(x, 0)];
        EdgeKind::Merge { a: p.min(q), b: p.max(q), c }
    } else {
        let (r, s) = (lt[d.edge_at(x, 0)], lt[d.edge_at(x, 1)]);
        debug_assert_eq!(ct, cf + 1);
        EdgeKind::Split { c: p, a: r.min(s), b: r.max(s) }
    };
    CubeEdge { from, to, crossing: x, kind, map }
}

/// Enumerate all `2^l` vertices and `l·2^(l−1)` edges.
pub fn cube(d: &LinkDiagram, bound: usize, mode: Parallelism) -> Result<Cube> {
    let l = d.len();
    if l > bound {
        return Err(Error::TooManyCrossings { got: l, bound });
    }
    let labels: Vec<(usize, Vec<usize>)> = par::map_range(mode, 1usize << l, |b| circle_labels(d, Vertex::new(l, b as u64)));
    let edges: Vec<Vec<CubeEdge>> = par::map_range(mode, 1usize << l, |b| {
        let v = Vertex::new(l, b as u64);
        (0..l)
            .filter(|&x| v.digit(x) == 0)
            .map(|x| {
                let w = v.with_digit(x, 1);
                let (ct, lt) = &labels[w.bits() as usize];
                edge_from_labels(d, v, w, x, &labels[b].1, *ct, lt)
            })
            .collect()
    });
    Ok(Cube { l, circle_counts: labels.into_iter().map(|(c, _)| c).collect(), edges: edges.into_iter().flatten().collect() })
}

#[cfg(test)]
mod tests {
    use super::super::examples::*;
    use super::super::resolve;
    use super::*;

    #[test]
    fn sizes() {
        let t = cube(&right_trefoil(), 24, Parallelism::Sequential).unwrap();
        assert_eq!(t.circle_counts.len(), 8);
        assert_eq!(t.edges.len(), 12);
        let k = cube(&kinked_unknot(), 24, Parallelism::Sequential).unwrap();
        assert_eq!((k.circle_counts.len(), k.edges.len()), (2, 1));
        assert!(cube(&right_trefoil(), 2, Parallelism::Sequential).is_err());
    }

    #[test]
    fn kinds_follow_circle_counts() {
        let d = figure_eight();
        let c = cube(&d, 24, Parallelism::Rayon).unwrap();
        for e in &c.edges {
            let (a, b) = (c.circle_counts[e.from.bits() as usize], c.circle_counts[e.to.bits() as usize]);
            match e.kind {
                EdgeKind::Merge { .. } => assert_eq!(a, b + 1),
                EdgeKind::Split { .. } => assert_eq!(a + 1, b),
            }
            assert_eq!(resolve(&d, e.from).circle_count(), a);
        }
    }

    #[test]
    fn labels_agree_with_tracing() {
        let d = figure_eight();
        for b in 0..16 {
            let v = Vertex::new(4, b);
            let (n, lab) = circle_labels(&d, v);
            let r = resolve(&d, v);
            assert_eq!(n, r.circle_count());
            assert_eq!(lab, r.edge_circle);
        }
    }
}
