//! Products of chains `{0..n_1} × ⋯ × {0..n_l}`, the hypersurfaces of the
//! associated surgery cobordisms, and the graph associahedra that parameterize
//! their families of metrics.
//!
//! A factor of length two is the surgery chain `{0, 1, ∞}`; `∞` is stored as
//! the digit 2 throughout.

mod cancel;
mod catalog;
mod graph;
mod realize;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::{Error, Result};

pub use cancel::{cube_cancellation, triangulations, CancellationReport};
pub use catalog::{catalog, check_duality, supported_lattices, DualityReport, HypersurfaceCatalog, Surface};
pub use graph::{
    check_graph, clique_size_counts, connected_graphs, find_isomorphism, for_each_clique, for_each_maximal_clique, for_each_permutation,
    Graph, GraphCheck, MAX_TUBING_NODES,
};
pub use realize::{
    hexagon_hull, is_extreme_by_functional, permutohedron_points, realize, refined_associahedron, refined_permutohedron, PolytopeKind,
    Realization, RealizationCertificate,
};

/// A lattice vertex: one digit per factor.
pub type LatticeVertex = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductLattice {
    lengths: Vec<u8>,
}

impl ProductLattice {
    pub fn new(lengths: Vec<u8>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::UnsupportedLattice("a lattice needs at least one factor".into()));
        }
        if lengths.contains(&0) {
            return Err(Error::UnsupportedLattice("chain lengths must be at least 1".into()));
        }
        if lengths.iter().map(|&n| n as u64 + 1).product::<u64>() > 1 << 20 {
            return Err(Error::UnsupportedLattice("lattice is too large".into()));
        }
        Ok(ProductLattice { lengths })
    }

    /// `{0, 1}^l`.
    pub fn cube(l: usize) -> Self {
        ProductLattice { lengths: vec![1; l] }
    }

    /// `{0, 1, ∞}^l`.
    pub fn surgery(l: usize) -> Self {
        ProductLattice { lengths: vec![2; l] }
    }

    /// The single chain `{0, …, n}`.
    pub fn chain(n: u8) -> Self {
        ProductLattice { lengths: vec![n] }
    }

    /// Parse `"1,1,2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let lengths = s
            .split(',')
            .map(|t| t.trim().parse::<u8>().map_err(|_| Error::Input(format!("bad chain length {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lengths)
    }

    pub fn lengths(&self) -> &[u8] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.lengths.iter().map(|&n| n as usize + 1).product()
    }

    /// Vertices in lexicographic order (last factor fastest).
    pub fn vertices(&self) -> Vec<LatticeVertex> {
        (0..self.vertex_count()).map(|i| self.vertex(i)).collect()
    }

    pub fn vertex(&self, mut index: usize) -> LatticeVertex {
        let mut v = vec![0u8; self.len()];
        for (d, &n) in v.iter_mut().zip(&self.lengths).rev() {
            *d = (index % (n as usize + 1)) as u8;
            index /= n as usize + 1;
        }
        v
    }

    pub fn index(&self, v: &[u8]) -> usize {
        v.iter().zip(&self.lengths).fold(0, |acc, (&d, &n)| acc * (n as usize + 1) + d as usize)
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        v.len() == self.len() && v.iter().zip(&self.lengths).all(|(&d, &n)| d <= n)
    }

    pub fn bottom(&self) -> LatticeVertex {
        vec![0; self.len()]
    }

    pub fn top(&self) -> LatticeVertex {
        self.lengths.clone()
    }

    pub fn is_internal(&self, v: &[u8]) -> bool {
        v != self.bottom().as_slice() && v != self.lengths.as_slice()
    }

    pub fn internal_vertices(&self) -> Vec<LatticeVertex> {
        self.vertices().into_iter().filter(|v| self.is_internal(v)).collect()
    }

    /// All pairs `I ≤ J`.
    pub fn intervals(&self) -> Vec<(LatticeVertex, LatticeVertex)> {
        let vs = self.vertices();
        let mut out = Vec::new();
        for i in &vs {
            for j in &vs {
                if le(i, j) {
                    out.push((i.clone(), j.clone()));
                }
            }
        }
        out
    }

    /// Vertices `K` with `I ≤ K ≤ J`.
    pub fn interval(&self, i: &[u8], j: &[u8]) -> Vec<LatticeVertex> {
        self.vertices().into_iter().filter(|k| le(i, k) && le(k, j)).collect()
    }
}

impl fmt::Display for ProductLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .lengths
            .iter()
            .map(|&n| match n {
                1 => "{0,1}".to_string(),
                2 => "{0,1,∞}".to_string(),
                n => format!("{{0..{n}}}"),
            })
            .collect();
        write!(f, "{}", parts.join("×"))
    }
}

/// Sum of the digits.
pub fn weight(v: &[u8]) -> usize {
    v.iter().map(|&d| d as usize).sum()
}

/// Componentwise order.
pub fn le(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn ordered(a: &[u8], b: &[u8]) -> bool {
    le(a, b) || le(b, a)
}

/// `min(#{i: a_i > b_i}, #{i: b_i > a_i})`; zero exactly for ordered pairs.
pub fn rho(a: &[u8], b: &[u8]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!("vertices of length {} and {}", a.len(), b.len())));
    }
    let up = a.iter().zip(b).filter(|(x, y)| x > y).count();
    let down = a.iter().zip(b).filter(|(x, y)| x < y).count();
    Ok(up.min(down))
}

/// Maximal chains from `i` to `j`: each step raises one digit by one.
pub fn maximal_chains(i: &[u8], j: &[u8]) -> Vec<Vec<LatticeVertex>> {
    assert!(le(i, j), "chains need i ≤ j");
    let mut out = Vec::new();
    let mut cur = vec![i.to_vec()];
    chains_rec(j, &mut cur, &mut out);
    out
}

fn chains_rec(j: &[u8], cur: &mut Vec<LatticeVertex>, out: &mut Vec<Vec<LatticeVertex>>) {
    let last = cur.last().expect("nonempty").clone();
    if last == j {
        out.push(cur.clone());
        return;
    }
    for k in 0..j.len() {
        if last[k] < j[k] {
            let mut next = last.clone();
            next[k] += 1;
            cur.push(next);
            chains_rec(j, cur, out);
            cur.pop();
        }
    }
}

/// Multinomial count of maximal chains from `i` to `j`.
pub fn chain_count(i: &[u8], j: &[u8]) -> BigUint {
    let steps: Vec<usize> = i.iter().zip(j).map(|(&a, &b)| (b - a) as usize).collect();
    let total: usize = steps.iter().sum();
    let fact = |n: usize| (1..=n).fold(BigUint::one(), |acc, k| acc * k);
    steps.iter().fold(fact(total), |acc, &s| acc / fact(s))
}

/// `(2l)! / 2^l`, the number of maximal chains through `{0, 1, ∞}^l`.
pub fn surgery_path_count(l: usize) -> BigUint {
    (1..=2 * l).fold(BigUint::one(), |acc, k| acc * k) >> l
}

/// The `l`-clique (nodes `0..l`, one per factor) with a path of `n_i − 1`
/// nodes hanging off clique node `i`. Path nodes follow the clique nodes,
/// factor by factor, nearest the clique first.
pub fn graph_of_lattice(lat: &ProductLattice) -> Graph {
    let mut g = Graph::clique(lat.len());
    for (i, tail) in tail_nodes(lat).into_iter().enumerate() {
        let mut prev = i;
        for v in tail {
            g = g.with_node(1 << prev);
            prev = v;
        }
    }
    g
}

/// Path nodes hanging off each clique node, nearest first.
pub(crate) fn tail_nodes(lat: &ProductLattice) -> Vec<Vec<usize>> {
    let mut next = lat.len();
    lat.lengths
        .iter()
        .map(|&n| {
            let nodes: Vec<usize> = (0..n as usize - 1).map(|k| next + k).collect();
            next += n as usize - 1;
            nodes
        })
        .collect()
}

/// `Σ_{i=0}^{m} C(m,i) (2m+k−i)! / 2^{m−i}`: cubes in the polytope of
/// `{0,1,∞}^m × {0,1}^k`.
pub fn cube_count(m: usize, k: usize) -> BigUint {
    let fact = |n: usize| (1..=n).fold(BigUint::one(), |acc, x| acc * x);
    (0..=m).map(|i| (fact(m) / (fact(i) * fact(m - i)) * fact(2 * m + k - i)) >> (m - i)).sum()
}

/// `cube_count` as a machine integer, for the small cases used in checks.
pub fn cube_count_u128(m: usize, k: usize) -> u128 {
    cube_count(m, k).to_u128().expect("cube count fits in u128")
}

/// The `(m+k)`-clique with a leaf on each of its first `m` nodes.
pub fn clique_with_leaves(m: usize, k: usize) -> Graph {
    let mut lengths = vec![2u8; m];
    lengths.extend(std::iter::repeat_n(1u8, k));
    graph_of_lattice(&ProductLattice { lengths })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&[0, 1], &[1, 0]).unwrap(), 1);
        assert_eq!(rho(&[0, 1, 0], &[1, 0, 1]).unwrap(), 1);
        assert_eq!(rho(&[0, 1], &[1, 1]).unwrap(), 0);
        assert!(rho(&[0], &[0, 1]).is_err());
    }

    #[test]
    fn chain_counts_match_closed_forms() {
        for l in 1..=3 {
            let cube = ProductLattice::cube(l);
            let n = maximal_chains(&cube.bottom(), &cube.top()).len();
            assert_eq!(BigUint::from(n), (1..=l).fold(BigUint::one(), |a, k| a * k));
            let s = ProductLattice::surgery(l);
            let n = maximal_chains(&s.bottom(), &s.top()).len();
            assert_eq!(BigUint::from(n), surgery_path_count(l));
            assert_eq!(BigUint::from(n), chain_count(&s.bottom(), &s.top()));
        }
        assert_eq!(maximal_chains(&[0], &[2]).len(), 1);
    }

    #[test]
    fn lattice_graphs() {
        assert_eq!(graph_of_lattice(&ProductLattice::cube(3)), Graph::clique(3));
        let g = graph_of_lattice(&ProductLattice::new(vec![2, 1, 1]).unwrap());
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2)]);
        assert_eq!(graph_of_lattice(&ProductLattice::chain(4)), Graph::path(4));
        assert_eq!(tail_nodes(&ProductLattice::new(vec![3, 1, 2]).unwrap()), vec![vec![3, 4], vec![], vec![5]]);
    }

    #[test]
    fn cube_count_examples() {
        assert_eq!(cube_count_u128(0, 3), 6);
        assert_eq!(cube_count_u128(1, 2), 18);
        assert_eq!(cube_count_u128(2, 0), 14);
        assert_eq!(cube_count_u128(5, 0), 291720);
    }

    #[test]
    fn vertex_indexing_roundtrips() {
        let lat = ProductLattice::new(vec![2, 1, 3]).unwrap();
        for (i, v) in lat.vertices().iter().enumerate() {
            assert_eq!(lat.index(v), i);
        }
        assert_eq!(lat.internal_vertices().len(), 3 * 2 * 4 - 2);
    }
}
