//! Small graphs, their tubes and tubings.
//!
//! Node sets are `u32` masks, so graphs have at most 32 nodes; everything that
//! enumerates tubings is only practical far below that.
use std::collections::{BTreeSet, HashMap};

use crate::f2core::BitVec;
use crate::{Error, Result};

/// Default node bound for tubing enumeration.
pub const MAX_TUBING_NODES: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u32>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        assert!(n <= 32, "graphs are limited to 32 nodes");
        Graph { adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn clique(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert_ne!(a, b, "no loops");
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    /// A copy with one extra node joined to every node of `mask`.
    pub fn with_node(&self, mask: u32) -> Graph {
        let n = self.len();
        let mut g = Graph::empty(n + 1);
        g.adj[..n].copy_from_slice(&self.adj);
        for v in bits(mask) {
            g.add_edge(v, n);
        }
        g
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn full(&self) -> u32 {
        full_mask(self.len())
    }

    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|a| bits(self.adj[a]).filter(move |&b| a < b).map(move |b| (a, b))).collect()
    }

    /// Union of the neighborhoods of the nodes in `mask`.
    pub fn boundary(&self, mask: u32) -> u32 {
        bits(mask).fold(0, |acc, v| acc | self.adj[v]) & !mask
    }

    pub fn is_connected_set(&self, mask: u32) -> bool {
        if mask == 0 {
            return false;
        }
        let mut seen = mask & mask.wrapping_neg();
        loop {
            let next = (seen | self.boundary(seen)) & mask;
            if next == seen {
                return seen == mask;
            }
            seen = next;
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.is_connected_set(self.full())
    }

    /// Connected components of the subgraph induced on `mask`.
    pub fn components(&self, mask: u32) -> Vec<u32> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let mut c = rest & rest.wrapping_neg();
            loop {
                let next = (c | self.boundary(c)) & mask;
                if next == c {
                    break;
                }
                c = next;
            }
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Tubes grown from each node by adding boundary nodes, never revisiting a
    /// smaller start node. Sorted by mask.
    pub fn tubes(&self) -> Vec<u32> {
        let full = self.full();
        let mut out = Vec::new();
        for v in 0..self.len() {
            let forbidden = (1u32 << v) - 1;
            grow(self, 1 << v, forbidden, 0, &mut |t| {
                if t != full {
                    out.push(t)
                }
            });
        }
        out.sort_unstable();
        out
    }

    /// Tubes found by testing every node subset.
    pub fn tubes_brute_force(&self) -> Vec<u32> {
        (1..self.full()).filter(|&m| self.is_connected_set(m)).collect()
    }

    /// Nested, or disjoint with no edge between them.
    pub fn compatible(&self, a: u32, b: u32) -> bool {
        let nested = a & b == a || a & b == b;
        nested || (a & b == 0 && self.boundary(a) & b == 0)
    }

    /// Compatibility graph on `tubes` as bit rows.
    pub fn compatibility(&self, tubes: &[u32]) -> Vec<BitVec> {
        let n = tubes.len();
        (0..n).map(|i| BitVec::from_indices(n, (0..n).filter(|&j| j != i && self.compatible(tubes[i], tubes[j])))).collect()
    }

    fn check_bound(&self) -> Result<()> {
        if self.len() > MAX_TUBING_NODES {
            return Err(Error::Input(format!("graph has {} nodes, bound is {MAX_TUBING_NODES}", self.len())));
        }
        if !self.is_connected() {
            return Err(Error::Input("graph is not connected".into()));
        }
        Ok(())
    }

    /// All tubings as sorted tube lists, smallest first; includes the empty tubing.
    pub fn tubings(&self) -> Result<Vec<Vec<u32>>> {
        self.check_bound()?;
        let tubes = self.tubes();
        let compat = self.compatibility(&tubes);
        let mut out = Vec::new();
        for_each_clique(&compat, &mut |c, _| out.push(c.iter().map(|&i| tubes[i]).collect()));
        Ok(out)
    }

    /// The f-vector `(f_0, …, f_{n−2})`: `f_k` counts tubings with `n − 1 − k` tubes.
    pub fn f_vector(&self) -> Result<Vec<u128>> {
        self.check_bound()?;
        let n = self.len();
        if n == 1 {
            return Ok(vec![1]);
        }
        let tubes = self.tubes();
        let compat = self.compatibility(&tubes);
        let mut counts = clique_size_counts(&compat);
        counts.resize(n, 0);
        Ok(counts.into_iter().rev().take(n - 1).collect())
    }

    /// Maximal tubings by clique search in the compatibility graph.
    pub fn maximal_tubings(&self) -> Result<Vec<Vec<u32>>> {
        self.check_bound()?;
        let tubes = self.tubes();
        let compat = self.compatibility(&tubes);
        let mut out = Vec::new();
        for_each_maximal_clique(&compat, &mut |c| out.push(c.iter().map(|&i| tubes[i]).collect()));
        Ok(out)
    }

    /// Number of maximal tubings from the recursion "choose the node left
    /// outside every tube, then tube each remaining component".
    pub fn count_maximal_tubings(&self) -> u128 {
        let mut memo = HashMap::new();
        count_rec(self, self.full(), &mut memo)
    }

    /// Maximal tubings that differ from `t` in exactly one tube.
    pub fn flips(&self, t: &[u32], all: &BTreeSet<Vec<u32>>) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for k in 0..t.len() {
            let rest: Vec<u32> = t.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x).collect();
            for s in all.iter() {
                if s != t && rest.iter().all(|x| s.contains(x)) {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Image under a node relabeling `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.len());
        for (a, b) in self.edges() {
            g.add_edge(perm[a], perm[b]);
        }
        g
    }

    /// Edge set encoded over the pairs `(a, b)`, `a < b`, in lexicographic order.
    fn code(&self) -> u64 {
        let n = self.len();
        let mut code = 0u64;
        let mut k = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.has_edge(a, b) {
                    code |= 1 << k;
                }
                k += 1;
            }
        }
        code
    }

    /// Smallest edge code over all relabelings; equal iff isomorphic.
    pub fn canonical_code(&self) -> u64 {
        let n = self.len();
        let mut best = u64::MAX;
        for_each_permutation(n, &mut |p| best = best.min(self.permuted(p).code()));
        best
    }
}

/// Consistency of the tubing enumeration on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCheck {
    pub nodes: usize,
    pub tubes: usize,
    pub maximal_tubings: usize,
    /// Extension enumeration agrees with testing every subset.
    pub tubes_match: bool,
    /// Clique search agrees with the node-removal recursion.
    pub count_match: bool,
    /// Every maximal tubing has `n − 1` tubes.
    pub pure: bool,
    /// Dropping any tube of a maximal tubing leaves exactly two completions.
    pub simple: bool,
    /// Euler's relation for the f-vector of an `(n−1)`-polytope.
    pub euler: bool,
}

impl GraphCheck {
    pub fn ok(&self) -> bool {
        self.tubes_match && self.count_match && self.pure && self.simple && self.euler
    }
}

pub fn check_graph(g: &Graph) -> Result<GraphCheck> {
    let n = g.len();
    let tubes = g.tubes();
    let maximal = g.maximal_tubings()?;
    let mut ridges: HashMap<Vec<u32>, usize> = HashMap::new();
    for t in &maximal {
        let mut t = t.clone();
        t.sort_unstable();
        for k in 0..t.len() {
            let mut r = t.clone();
            r.remove(k);
            *ridges.entry(r).or_default() += 1;
        }
    }
    let f = g.f_vector()?;
    let d = n as i64 - 1;
    let alternating: i128 =
        f.iter().take(d.max(0) as usize).enumerate().map(|(k, &x)| if k % 2 == 0 { x as i128 } else { -(x as i128) }).sum();
    let euler = n == 1 || alternating == 1 - if d % 2 == 0 { 1 } else { -1 };
    Ok(GraphCheck {
        nodes: n,
        tubes: tubes.len(),
        maximal_tubings: maximal.len(),
        tubes_match: tubes == g.tubes_brute_force(),
        count_match: maximal.len() as u128 == g.count_maximal_tubings(),
        pure: maximal.iter().all(|t| t.len() == n - 1),
        simple: ridges.values().all(|&c| c == 2),
        euler,
    })
}

fn grow(g: &Graph, set: u32, forbidden: u32, excluded: u32, out: &mut impl FnMut(u32)) {
    out(set);
    // Classic extension enumeration: pick boundary nodes in order and forbid
    // the ones skipped, so each connected set is produced exactly once.
    let mut cand = g.boundary(set) & !forbidden & !excluded;
    let mut skipped = excluded;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        grow(g, set | 1 << v, forbidden, skipped, out);
        skipped |= 1 << v;
    }
}

fn count_rec(g: &Graph, mask: u32, memo: &mut HashMap<u32, u128>) -> u128 {
    if mask.count_ones() <= 1 {
        return 1;
    }
    if let Some(&c) = memo.get(&mask) {
        return c;
    }
    let total = bits(mask).map(|v| g.components(mask & !(1 << v)).into_iter().map(|c| count_rec(g, c, memo)).product::<u128>()).sum();
    memo.insert(mask, total);
    total
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Visit every clique (as increasing index lists, empty clique included) of
/// the graph with adjacency rows `adj`, flagging maximal ones.
pub fn for_each_clique(adj: &[BitVec], visit: &mut impl FnMut(&[usize], bool)) {
    let n = adj.len();
    let mut all = BitVec::zeros(n);
    for i in 0..n {
        all.set(i, true);
    }
    let mut stack = Vec::new();
    clique_rec(adj, &mut stack, &all, &all, visit);
}

fn clique_rec(adj: &[BitVec], stack: &mut Vec<usize>, cand: &BitVec, common: &BitVec, visit: &mut impl FnMut(&[usize], bool)) {
    visit(stack, common.is_zero());
    for v in cand.ones().collect::<Vec<_>>() {
        let mut next = cand.clone();
        next.and_assign(&adj[v]);
        for u in 0..=v {
            if next.get(u) {
                next.set(u, false);
            }
        }
        let mut c = common.clone();
        c.and_assign(&adj[v]);
        stack.push(v);
        clique_rec(adj, stack, &next, &c, visit);
        stack.pop();
    }
}

/// Bron–Kerbosch with pivoting over the maximal cliques.
pub fn for_each_maximal_clique(adj: &[BitVec], visit: &mut impl FnMut(&[usize])) {
    let n = adj.len();
    let p = BitVec::from_indices(n, 0..n);
    let x = BitVec::zeros(n);
    bron_kerbosch(adj, &mut Vec::new(), p, x, visit);
}

fn bron_kerbosch(adj: &[BitVec], r: &mut Vec<usize>, mut p: BitVec, mut x: BitVec, visit: &mut impl FnMut(&[usize])) {
    if p.is_zero() {
        if x.is_zero() {
            visit(r);
        }
        return;
    }
    let pivot = p.ones().chain(x.ones()).max_by_key(|&u| p.and_count(&adj[u])).expect("p is nonempty");
    let todo: Vec<usize> = p.ones().filter(|&v| !adj[pivot].get(v)).collect();
    for v in todo {
        let mut np = p.clone();
        np.and_assign(&adj[v]);
        let mut nx = x.clone();
        nx.and_assign(&adj[v]);
        r.push(v);
        bron_kerbosch(adj, r, np, nx, visit);
        r.pop();
        p.set(v, false);
        x.set(v, true);
    }
}

/// Number of cliques of each size, from the empty clique up.
pub fn clique_size_counts(adj: &[BitVec]) -> Vec<u128> {
    let mut counts = vec![0u128];
    for_each_clique(adj, &mut |c, _| {
        if counts.len() <= c.len() {
            counts.resize(c.len() + 1, 0);
        }
        counts[c.len()] += 1;
    });
    counts
}

/// Heap's algorithm over permutations of `0..n`.
pub fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Connected graphs on `n` nodes up to isomorphism, in canonical form.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n), "connected graph catalog covers 1..=8 nodes");
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    // Every connected graph has a node whose removal leaves it connected.
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut out = Vec::new();
    for g in connected_graphs(n - 1) {
        for mask in 1..full_mask(n - 1) + 1 {
            let h = g.with_node(mask);
            let code = h.canonical_code();
            if seen.insert(code) {
                out.push(from_code(n, code));
            }
        }
    }
    out
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            if code >> k & 1 == 1 {
                g.add_edge(a, b);
            }
            k += 1;
        }
    }
    g
}

/// An isomorphism `a → b` between two graphs given by bit rows, found by
/// colour refinement with individualization and backtracking.
pub fn find_isomorphism(a: &[BitVec], b: &[BitVec]) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let ca = vec![0usize; n];
    let cb = vec![0usize; n];
    let (ca, cb) = refine(a, b, ca, cb)?;
    search(a, b, ca, cb)
}

fn search(a: &[BitVec], b: &[BitVec], ca: Vec<usize>, cb: Vec<usize>) -> Option<Vec<usize>> {
    let n = a.len();
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for &c in &ca {
        *sizes.entry(c).or_default() += 1;
    }
    // Pick the first node of the smallest non-singleton colour class.
    let pick = (0..n).filter(|&v| sizes[&ca[v]] > 1).min_by_key(|&v| (sizes[&ca[v]], v));
    let Some(v) = pick else {
        let mut map = vec![0; n];
        for (i, &c) in ca.iter().enumerate() {
            map[i] = cb.iter().position(|&d| d == c)?;
        }
        let ok = (0..n).all(|i| a[i].ones().all(|j| b[map[i]].get(map[j])) && a[i].count_ones() == b[map[i]].count_ones());
        return ok.then_some(map);
    };
    let fresh = n + 1 + ca.iter().chain(&cb).copied().max().unwrap_or(0);
    for w in (0..n).filter(|&w| cb[w] == ca[v]) {
        let mut na = ca.clone();
        let mut nb = cb.clone();
        na[v] = fresh;
        nb[w] = fresh;
        if let Some((ra, rb)) = refine(a, b, na, nb) {
            if let Some(m) = search(a, b, ra, rb) {
                return Some(m);
            }
        }
    }
    None
}

/// Joint 1-dimensional Weisfeiler–Leman refinement; `None` if the colour
/// class sizes ever disagree.
fn refine(a: &[BitVec], b: &[BitVec], mut ca: Vec<usize>, mut cb: Vec<usize>) -> Option<(Vec<usize>, Vec<usize>)> {
    let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
    loop {
        let sig = |adj: &[BitVec], c: &[usize], v: usize| {
            let mut nb: Vec<usize> = adj[v].ones().map(|u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..a.len()).map(|v| sig(a, &ca, v)).collect();
        let sb: Vec<_> = (0..b.len()).map(|v| sig(b, &cb, v)).collect();
        let keys: BTreeSet<_> = sa.iter().chain(&sb).cloned().collect();
        let index: HashMap<_, usize> = keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
        let na: Vec<usize> = sa.iter().map(|s| index[s]).collect();
        let nb: Vec<usize> = sb.iter().map(|s| index[s]).collect();
        let mut hist_a = na.clone();
        let mut hist_b = nb.clone();
        hist_a.sort_unstable();
        hist_b.sort_unstable();
        if hist_a != hist_b {
            return None;
        }
        let stable = classes(&na) == classes(&ca);
        ca = na;
        cb = nb;
        if stable {
            return Some((ca, cb));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_paths() {
        let g = Graph::path(2);
        assert_eq!(g.tubes().len(), 2);
        assert_eq!(g.maximal_tubings().unwrap().len(), 2);
        let g = Graph::path(3);
        assert_eq!(g.tubes().len(), 5);
        assert_eq!(g.f_vector().unwrap(), vec![5, 5]);
    }

    #[test]
    fn clique_with_leaf_has_18_vertices() {
        let g = Graph::clique(3).with_node(1);
        assert_eq!(g.len(), 4);
        assert_eq!(g.count_maximal_tubings(), 18);
        assert_eq!(g.maximal_tubings().unwrap().len(), 18);
    }

    #[test]
    fn graph_counts_by_size() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn isomorphism_of_relabeled_graph() {
        let g = Graph::clique(3).with_node(1).with_node(8);
        let h = g.permuted(&[4, 2, 0, 1, 3]);
        let rows = |g: &Graph| (0..g.len()).map(|v| BitVec::from_indices(g.len(), bits(g.neighbors(v)))).collect::<Vec<_>>();
        let m = find_isomorphism(&rows(&g), &rows(&h)).unwrap();
        for (a, b) in g.edges() {
            assert!(h.has_edge(m[a], m[b]));
        }
        assert!(find_isomorphism(&rows(&g), &rows(&Graph::path(5))).is_none());
    }
}
