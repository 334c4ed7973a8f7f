//! Cancellation of the non-permutohedral cubes in the associahedra of paths.
//!
//! For a path `γ = (I_0 < ⋯ < I_n)` through `{0,1}^l`, the cubes of `K_γ` are
//! the triangulations of the polygon with sides `α, 0, 1, …, n`. A diagonal
//! from `α` to vertex `i` stretches `Y_{I_i}`; a diagonal between vertices
//! `j < k` stretches the auxiliary surface `S^{I_j}_{I_k}`, which every path
//! through the same `I_j` and `I_k` shares.
use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::graph::{for_each_permutation, Graph};
use crate::{Error, Result};

/// Diagonals of the polygon with vertices `0, …, n` then `α = n + 1`, listed
/// as sorted pairs, one list per triangulation.
pub fn triangulations(n: usize) -> Vec<Vec<(usize, usize)>> {
    let verts: Vec<usize> = (0..=n + 1).collect();
    let total = n + 2;
    let side = |a: usize, b: usize| b == a + 1 || (a == 0 && b == total - 1);
    fn rec(vs: &[usize], side: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<(usize, usize)>> {
        if vs.len() < 3 {
            return vec![Vec::new()];
        }
        let (first, last) = (vs[0], vs[vs.len() - 1]);
        let mut out = Vec::new();
        for m in 1..vs.len() - 1 {
            let apex = vs[m];
            for left in rec(&vs[..=m], side) {
                for right in rec(&vs[m..], side) {
                    let mut t: Vec<(usize, usize)> = left.iter().chain(&right).copied().collect();
                    for (a, b) in [(first, apex), (apex, last)] {
                        if !side(a, b) {
                            t.push((a, b));
                        }
                    }
                    t.sort_unstable();
                    out.push(t);
                }
            }
        }
        out
    }
    rec(&verts, &side)
}

/// Tube of the `n`-node path matched with a diagonal.
fn diagonal_tube(n: usize, (a, b): (usize, usize)) -> u32 {
    if b == n + 1 {
        // (α, a): the first `a` nodes.
        (1u32 << a) - 1
    } else {
        ((1u32 << b) - 1) & !((1u32 << (a + 1)) - 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GlobalSurface {
    Y(u32),
    S(u32, u32),
}

#[derive(Clone, Debug, Serialize)]
pub struct CancellationReport {
    pub l: usize,
    pub paths: usize,
    pub cubes_per_path: usize,
    pub cubes: usize,
    pub survivors: usize,
    pub cancelling: usize,
    /// Class size → number of classes, over cubes that stretch an auxiliary surface.
    pub class_sizes: BTreeMap<usize, usize>,
    pub all_classes_even: bool,
    pub one_survivor_per_path: bool,
    pub survivors_distinct: bool,
    /// Survivor pairs sharing all but one stretched surface.
    pub survivor_edges: usize,
    /// Those pairs are exactly the paths differing by one adjacent swap.
    pub survivors_form_permutohedron: bool,
    /// Triangulations agree with maximal tubings of the path graph.
    pub cubes_match_tubings: bool,
}

impl CancellationReport {
    pub fn ok(&self) -> bool {
        let fact: usize = (1..=self.l).product();
        self.all_classes_even
            && self.one_survivor_per_path
            && self.survivors_distinct
            && self.survivors_form_permutohedron
            && self.cubes_match_tubings
            && self.survivors == fact
            && self.survivor_edges == fact * self.l.saturating_sub(1) / 2
    }
}

pub fn cube_cancellation(l: usize) -> Result<CancellationReport> {
    if !(1..=6).contains(&l) {
        return Err(Error::Input("cube cancellation is run for 1 ≤ l ≤ 6".into()));
    }
    let n = l;
    let tris = triangulations(n);
    let mut from_tris: Vec<Vec<u32>> = tris
        .iter()
        .map(|t| {
            let mut m: Vec<u32> = t.iter().map(|&d| diagonal_tube(n, d)).collect();
            m.sort_unstable();
            m
        })
        .collect();
    from_tris.sort();
    let mut from_tubings: Vec<Vec<u32>> = Graph::path(n)
        .maximal_tubings()?
        .into_iter()
        .map(|mut t| {
            t.sort_unstable();
            t
        })
        .collect();
    from_tubings.sort();
    let cubes_match_tubings = from_tris == from_tubings;

    let mut paths: Vec<Vec<usize>> = Vec::new();
    for_each_permutation(l, &mut |p| paths.push(p.to_vec()));
    paths.sort();
    let mut classes: HashMap<Vec<GlobalSurface>, usize> = HashMap::new();
    let mut survivor_sets: Vec<BTreeSet<GlobalSurface>> = Vec::new();
    let mut one_survivor_per_path = true;
    for p in &paths {
        let vertex = |i: usize| p[..i].iter().fold(0u32, |acc, &h| acc | 1 << h);
        let mut found = 0;
        for t in &tris {
            let mut set: Vec<GlobalSurface> = t
                .iter()
                .map(|&(a, b)| if b == n + 1 { GlobalSurface::Y(vertex(a)) } else { GlobalSurface::S(vertex(a), vertex(b)) })
                .collect();
            set.sort_unstable();
            if set.iter().all(|s| matches!(s, GlobalSurface::Y(_))) {
                found += 1;
                survivor_sets.push(set.into_iter().collect());
            } else {
                *classes.entry(set).or_default() += 1;
            }
        }
        one_survivor_per_path &= found == 1;
    }
    let distinct: BTreeSet<_> = survivor_sets.iter().cloned().collect();
    let mut class_sizes = BTreeMap::new();
    for &size in classes.values() {
        *class_sizes.entry(size).or_default() += 1;
    }
    let cancelling: usize = classes.values().sum();
    let mut survivor_edges = 0;
    let mut permutohedral = true;
    for a in 0..paths.len() {
        for b in a + 1..paths.len() {
            let shared = survivor_sets[a].intersection(&survivor_sets[b]).count();
            let adjacent = n >= 2 && shared == n - 2;
            let swap = (0..l.saturating_sub(1)).any(|i| {
                let mut q = paths[a].clone();
                q.swap(i, i + 1);
                q == paths[b]
            });
            survivor_edges += usize::from(adjacent);
            permutohedral &= adjacent == swap;
        }
    }
    Ok(CancellationReport {
        l,
        paths: paths.len(),
        cubes_per_path: tris.len(),
        cubes: paths.len() * tris.len(),
        survivors: survivor_sets.len(),
        cancelling,
        all_classes_even: class_sizes.keys().all(|s| s % 2 == 0),
        class_sizes,
        one_survivor_per_path,
        survivors_distinct: distinct.len() == survivor_sets.len(),
        survivor_edges,
        survivors_form_permutohedron: permutohedral,
        cubes_match_tubings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_triangulations() {
        let counts: Vec<usize> = (1..=6).map(|n| triangulations(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn two_handles() {
        let r = cube_cancellation(2).unwrap();
        assert_eq!((r.cubes, r.survivors, r.cancelling), (4, 2, 2));
        assert!(r.ok(), "{r:?}");
    }

    #[test]
    fn three_handles() {
        let r = cube_cancellation(3).unwrap();
        assert_eq!((r.cubes, r.survivors, r.cancelling), (30, 6, 24));
        assert_eq!(r.class_sizes, BTreeMap::from([(2, 12)]));
        assert!(r.ok(), "{r:?}");
    }
}
