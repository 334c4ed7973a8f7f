//! Concrete polytopes: permutohedra as permutation points, and the recursive
//! refinement `P_G × [0, n]` → `P_{G+b}` that adds a ridge at height `|T|` on
//! the lateral facet of every tube `T` touching the new node.
//!
//! Putting the ridges on flat facets gives a cubical subdivision of the prism
//! whose ridge points are not extreme. Here each lateral facet is bent outward
//! along its ridge instead (a tent of height `c`), which yields a convex polytope
//! with the same faces; `c` is halved until the vertex certificate below holds.
//! Coordinates are exact rationals and are scaled to integers on output.
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::graph::{for_each_permutation, Graph};
use crate::{Error, Result};

type Q = BigRational;

/// Largest graph the refinement is run on.
pub const MAX_REFINED_NODES: usize = 7;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// The `n!` points `(σ(1), …, σ(n))`, lexicographically sorted.
pub fn permutohedron_points(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for_each_permutation(n, &mut |p| out.push(p.iter().map(|&x| x as i64 + 1).collect()));
    out.sort();
    out
}

/// `c·p_i > c·p_j` for every `j ≠ i`: the point is a vertex of the hull.
pub fn is_extreme_by_functional(points: &[Vec<i64>], i: usize, c: &[i64]) -> bool {
    let val = |p: &[i64]| p.iter().zip(c).map(|(a, b)| a * b).sum::<i64>();
    let vi = val(&points[i]);
    points.iter().enumerate().all(|(j, p)| j == i || val(p) < vi)
}

/// Hull vertices (counterclockwise, strictly convex corners only) of points
/// in a plane, using their first two coordinates. For permutations of
/// `(1, 2, 3)` this projection is injective on the plane `Σx = 6`.
pub fn hexagon_hull(points: &[Vec<i64>]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by_key(|&i| (points[i][0], points[i][1]));
    let cross = |o: usize, a: usize, b: usize| {
        let (o, a, b) = (&points[o], &points[a], &points[b]);
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut hull: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let order: Vec<usize> = if pass == 0 { idx.clone() } else { idx.iter().rev().copied().collect() };
        for i in order {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], i) <= 0 {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

#[derive(Clone, Debug)]
pub struct Facet {
    pub tube: u32,
    pub normal: Vec<Q>,
    pub rhs: Q,
}

/// A simple polytope `{x : a_T·x ≤ b_T}` with one facet per tube of its graph
/// and its vertices labelled by maximal tubings.
#[derive(Clone, Debug)]
pub struct Realization {
    pub graph: Graph,
    pub facets: Vec<Facet>,
    pub vertices: Vec<Vec<Q>>,
    /// Tight facet indices at each vertex, sorted.
    pub tight: Vec<Vec<usize>>,
    /// Ridges added by the most recent refinement.
    pub ridges: usize,
    pub bend: Q,
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizationCertificate {
    pub vertices: usize,
    pub maximal_tubings: usize,
    /// Every vertex's tight facets are exactly one maximal tubing, and every
    /// maximal tubing occurs.
    pub tubings_match: bool,
    /// Every vertex is the unique maximizer of the sum of its tight normals.
    pub all_extreme: bool,
    /// Following each edge from each vertex lands on another listed vertex,
    /// so the list is the whole vertex set.
    pub edges_closed: bool,
    pub edges: usize,
}

impl RealizationCertificate {
    pub fn ok(&self) -> bool {
        self.tubings_match && self.all_extreme && self.edges_closed && self.vertices == self.maximal_tubings
    }
}

impl Realization {
    /// The one-node graph: a point in `R^0`.
    pub fn point() -> Realization {
        Realization {
            graph: Graph::empty(1),
            facets: Vec::new(),
            vertices: vec![Vec::new()],
            tight: vec![Vec::new()],
            ridges: 0,
            bend: Q::zero(),
        }
    }

    pub fn dim(&self) -> usize {
        self.graph.len() - 1
    }

    /// Refine `P_G × [0, n]` for the graph with a new node joined to `attach`.
    pub fn refine(&self, attach: u32) -> Result<Realization> {
        let n = self.graph.len();
        if n + 1 > MAX_REFINED_NODES {
            return Err(Error::Input(format!("refinement is limited to {MAX_REFINED_NODES} nodes")));
        }
        let g = self.graph.with_node(attach);
        let b = 1u32 << n;
        let old_full = self.graph.full();
        let height = q(n as i64);
        let mut tubes: Vec<u32> = vec![b, old_full];
        for f in &self.facets {
            tubes.push(f.tube);
            if f.tube & attach != 0 {
                tubes.push(f.tube | b);
            }
        }
        let mut expected = g.tubes();
        let mut have = tubes.clone();
        expected.sort_unstable();
        have.sort_unstable();
        if expected != have {
            return Err(Error::Input("the new node does not split the lateral facets into tubes".into()));
        }
        let ridges = self.facets.iter().filter(|f| f.tube & attach != 0).count();
        let mut bend = Q::one();
        for _ in 0..32 {
            let facets = self.bent_facets(attach, &bend, &height);
            if let Some((vertices, tight)) = vertices_from_tubings(&g, &facets) {
                let r = Realization { graph: g.clone(), facets, vertices, tight, ridges, bend: bend.clone() };
                if r.edge_walk().is_some() {
                    return Ok(r);
                }
            }
            bend /= q(2);
        }
        Err(Error::Input("no admissible bend found".into()))
    }

    fn bent_facets(&self, attach: u32, c: &Q, big: &Q) -> Vec<Facet> {
        let n = self.graph.len();
        let d = self.dim() + 1;
        let lift = |a: &[Q], y: Q| a.iter().cloned().chain(std::iter::once(y)).collect::<Vec<Q>>();
        let mut out = vec![
            Facet { tube: 1 << n, normal: lift(&vec![Q::zero(); d - 1], q(-1)), rhs: Q::zero() },
            Facet { tube: self.graph.full(), normal: lift(&vec![Q::zero(); d - 1], q(1)), rhs: big.clone() },
        ];
        for f in &self.facets {
            if f.tube & attach == 0 {
                out.push(Facet { tube: f.tube, normal: lift(&f.normal, Q::zero()), rhs: f.rhs.clone() });
                continue;
            }
            let h = q(f.tube.count_ones() as i64);
            // a·x ≤ b + c·min(y/h, (N − y)/(N − h)), as two half-spaces.
            let up = c / (big - &h);
            out.push(Facet { tube: f.tube, normal: lift(&f.normal, up.clone()), rhs: &f.rhs + &up * big });
            out.push(Facet { tube: f.tube | 1 << n, normal: lift(&f.normal, -(c / &h)), rhs: f.rhs.clone() });
        }
        out
    }

    /// Walk every edge; `Some(edge count)` if all land on listed vertices.
    fn edge_walk(&self) -> Option<usize> {
        let index: HashMap<&Vec<usize>, usize> = self.tight.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let d = self.dim();
        let mut edges = 0;
        for (v, tight) in self.vertices.iter().zip(&self.tight) {
            let rows: Vec<Vec<Q>> = tight.iter().map(|&f| self.facets[f].normal.clone()).collect();
            for k in 0..d {
                let rhs: Vec<Q> = (0..d).map(|i| if i == k { q(-1) } else { Q::zero() }).collect();
                let e = solve(rows.clone(), rhs)?;
                let mut best: Option<(Q, Vec<usize>)> = None;
                for (fi, f) in self.facets.iter().enumerate() {
                    if tight.contains(&fi) {
                        continue;
                    }
                    let rate = dot(&f.normal, &e);
                    if !rate.is_positive() {
                        continue;
                    }
                    let t = (&f.rhs - dot(&f.normal, v)) / rate;
                    match &mut best {
                        Some((bt, hits)) if t == *bt => hits.push(fi),
                        Some((bt, _)) if t > *bt => {}
                        _ => best = Some((t, vec![fi])),
                    }
                }
                let (_, hits) = best?;
                if hits.len() != 1 {
                    return None;
                }
                let mut next: Vec<usize> = tight.iter().copied().filter(|&f| f != tight[k]).collect();
                next.push(hits[0]);
                next.sort_unstable();
                index.get(&next)?;
                edges += 1;
            }
        }
        Some(edges / 2)
    }

    pub fn certify(&self) -> Result<RealizationCertificate> {
        let tubings = self.graph.maximal_tubings()?;
        let tube_of: Vec<u32> = self.facets.iter().map(|f| f.tube).collect();
        let mut labels: Vec<Vec<u32>> = self
            .tight
            .iter()
            .map(|t| {
                let mut l: Vec<u32> = t.iter().map(|&f| tube_of[f]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        labels.sort();
        let mut expected: Vec<Vec<u32>> = tubings
            .iter()
            .map(|t| {
                let mut t = t.clone();
                t.sort_unstable();
                t
            })
            .collect();
        expected.sort();
        let all_extreme = self.vertices.iter().zip(&self.tight).enumerate().all(|(i, (v, tight))| {
            let c = tight
                .iter()
                .fold(vec![Q::zero(); self.dim()], |acc, &f| acc.iter().zip(&self.facets[f].normal).map(|(a, b)| a + b).collect());
            let top = dot(&c, v);
            self.vertices.iter().enumerate().all(|(j, w)| j == i || dot(&c, w) < top)
        });
        let walk = self.edge_walk();
        Ok(RealizationCertificate {
            vertices: self.vertices.len(),
            maximal_tubings: tubings.len(),
            tubings_match: labels == expected,
            all_extreme,
            edges_closed: walk.is_some(),
            edges: walk.unwrap_or(0),
        })
    }

    /// Vertices scaled by the least common denominator.
    pub fn integer_vertices(&self) -> Vec<Vec<BigInt>> {
        let den = self.vertices.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut out: Vec<Vec<BigInt>> =
            self.vertices.iter().map(|v| v.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer()).collect()).collect();
        out.sort();
        out
    }
}

/// Solve each maximal tubing's facet equations; `None` unless every solution
/// is feasible with exactly those facets tight.
fn vertices_from_tubings(g: &Graph, facets: &[Facet]) -> Option<(Vec<Vec<Q>>, Vec<Vec<usize>>)> {
    let index: BTreeMap<u32, usize> = facets.iter().enumerate().map(|(i, f)| (f.tube, i)).collect();
    let mut vertices = Vec::new();
    let mut tight_sets = Vec::new();
    for tubing in g.maximal_tubings().ok()? {
        let mut ids: Vec<usize> = tubing.iter().map(|t| index[t]).collect();
        ids.sort_unstable();
        let rows = ids.iter().map(|&f| facets[f].normal.clone()).collect();
        let rhs = ids.iter().map(|&f| facets[f].rhs.clone()).collect();
        let x = solve(rows, rhs)?;
        let mut tight = Vec::new();
        for (i, f) in facets.iter().enumerate() {
            let lhs = dot(&f.normal, &x);
            if lhs > f.rhs {
                return None;
            }
            if lhs == f.rhs {
                tight.push(i);
            }
        }
        if tight != ids {
            return None;
        }
        vertices.push(x);
        tight_sets.push(ids);
    }
    Some((vertices, tight_sets))
}

/// Gauss–Jordan elimination; `None` for singular systems.
fn solve(mut m: Vec<Vec<Q>>, mut rhs: Vec<Q>) -> Option<Vec<Q>> {
    let n = rhs.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        rhs.swap(col, p);
        let inv = Q::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        rhs[col] *= &inv;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..n {
                    let delta = &f * &m[col][c];
                    m[r][c] -= delta;
                }
                let delta = &f * &rhs[col];
                rhs[r] -= delta;
            }
        }
    }
    Some(rhs)
}

/// `P_n` from a point by `n − 1` refinements, each new node joined to all
/// previous ones.
pub fn refined_permutohedron(n: usize) -> Result<Realization> {
    (1..n).try_fold(Realization::point(), |r, k| r.refine((1u32 << k) - 1))
}

/// `K_m` (the path on `m − 1` nodes), each new node joined to the last one,
/// so that `K_{n+2}` refines `K_{n+1} × [0, n]`.
pub fn refined_associahedron(m: usize) -> Result<Realization> {
    if m < 2 {
        return Err(Error::Input("associahedra start at K_2".into()));
    }
    (1..m - 1).try_fold(Realization::point(), |r, k| r.refine(1 << (k - 1)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolytopeKind {
    /// Convex hull of the permutations of `(1, …, n)`.
    Permutohedron(usize),
    /// `P_n` by recursive ridge refinement.
    RefinedPermutohedron(usize),
    /// `K_m` by recursive ridge refinement.
    Associahedron(usize),
}

/// Integer vertex coordinates, sorted.
pub fn realize(kind: PolytopeKind) -> Result<Vec<Vec<BigInt>>> {
    match kind {
        PolytopeKind::Permutohedron(n) => {
            if !(1..=8).contains(&n) {
                return Err(Error::Input("permutohedra are realized for 1 ≤ n ≤ 8".into()));
            }
            Ok(permutohedron_points(n).into_iter().map(|p| p.into_iter().map(BigInt::from).collect()).collect())
        }
        PolytopeKind::RefinedPermutohedron(n) => Ok(refined_permutohedron(n)?.integer_vertices()),
        PolytopeKind::Associahedron(m) => Ok(refined_associahedron(m)?.integer_vertices()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_is_a_hexagon() {
        let pts = permutohedron_points(3);
        assert_eq!(pts.len(), 6);
        assert_eq!(hexagon_hull(&pts).len(), 6);
    }

    #[test]
    fn p4_points_are_extreme() {
        let pts = permutohedron_points(4);
        assert_eq!(pts.len(), 24);
        for (i, p) in pts.iter().enumerate() {
            assert!(is_extreme_by_functional(&pts, i, p));
        }
    }

    #[test]
    fn pentagon_and_k5() {
        let k4 = refined_associahedron(4).unwrap();
        assert_eq!(k4.vertices.len(), 5);
        assert!(k4.certify().unwrap().ok());
        let k5 = refined_associahedron(5).unwrap();
        let c = k5.certify().unwrap();
        assert!(c.ok(), "{c:?}");
        assert_eq!((c.vertices, c.edges, k5.ridges), (14, 21, 2));
    }

    #[test]
    fn refined_p3_and_p4() {
        let p3 = refined_permutohedron(3).unwrap();
        assert_eq!(p3.ridges, 2);
        assert!(p3.certify().unwrap().ok());
        let p4 = refined_permutohedron(4).unwrap();
        let c = p4.certify().unwrap();
        assert!(c.ok(), "{c:?}");
        assert_eq!((c.vertices, c.edges, p4.ridges), (24, 36, 6));
    }
}
