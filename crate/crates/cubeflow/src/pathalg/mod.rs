//! A weighted path algebra over F2 whose generators are decorated with
//! intervals of a product lattice.
//!
//! Critical points come in three types: interior (`o`), boundary-stable (`s`)
//! and boundary-unstable (`u`). A generator is a trajectory type together with
//! an interval `I ≤ J`; generators with `I = J` are the cylinder maps `∂` and
//! `ē`. Words are composable sequences of generators whose intervals chain.
//! From these we build the components of `Ď` (all weight-1 words) and of `Ǎ`
//! (weight-2 relations), and check `Ǎ(I,J) = Σ_K Ď(K,J) Ď(I,K)` word by word.

mod appendix;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::lattice::{le, LatticeVertex, ProductLattice};
use crate::par::{self, Parallelism};

pub use appendix::{dump_appendix, errata, AppendixLattice, AppendixReport, BlockComparison, Erratum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Node {
    O,
    S,
    U,
}

impl Node {
    fn letter(self) -> char {
        match self {
            Node::O => 'o',
            Node::S => 's',
            Node::U => 'u',
        }
    }
}

/// The eight trajectory types. `D*` are interior, `B*` run in the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GeneratorKind {
    Doo,
    Dos,
    Duo,
    Dus,
    Bss,
    Bsu,
    Bus,
    Buu,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 8] = [
        GeneratorKind::Doo,
        GeneratorKind::Dos,
        GeneratorKind::Duo,
        GeneratorKind::Dus,
        GeneratorKind::Bss,
        GeneratorKind::Bsu,
        GeneratorKind::Bus,
        GeneratorKind::Buu,
    ];

    pub fn source(self) -> Node {
        use GeneratorKind::*;
        match self {
            Doo | Dos => Node::O,
            Bss | Bsu => Node::S,
            Duo | Dus | Bus | Buu => Node::U,
        }
    }

    pub fn target(self) -> Node {
        use GeneratorKind::*;
        match self {
            Doo | Duo => Node::O,
            Dos | Dus | Bss | Bus => Node::S,
            Bsu | Buu => Node::U,
        }
    }

    pub fn barred(self) -> bool {
        matches!(self, GeneratorKind::Bss | GeneratorKind::Bsu | GeneratorKind::Bus | GeneratorKind::Buu)
    }

    /// Change in Morse index: boundary-obstructed `s → u` is 0, the boundary
    /// `u → s` is 2, everything else 1.
    pub fn weight(self) -> u32 {
        match self {
            GeneratorKind::Bsu => 0,
            GeneratorKind::Bus => 2,
            _ => 1,
        }
    }

    /// Weight in the boundary algebra, where every boundary edge has weight 1.
    pub fn b_weight(self) -> u32 {
        u32::from(self.barred())
    }

    pub fn from_nodes(source: Node, target: Node, barred: bool) -> Option<GeneratorKind> {
        GeneratorKind::ALL.into_iter().find(|k| k.source() == source && k.target() == target && k.barred() == barred)
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = if self.barred() { 'B' } else { 'D' };
        write!(f, "{head}{}{}", self.source().letter(), self.target().letter())
    }
}

/// A generator on the interval `from ≤ to`, given by vertex indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalGenerator {
    pub kind: GeneratorKind,
    pub from: usize,
    pub to: usize,
}

impl IntervalGenerator {
    pub fn is_cylinder(&self) -> bool {
        self.from == self.to
    }
}

/// Generators in the order they are applied; rendered right to left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<IntervalGenerator>);

impl Word {
    pub fn weight(&self) -> u32 {
        self.0.iter().map(|g| g.kind.weight()).sum()
    }

    pub fn source(&self) -> (Node, usize) {
        let g = self.0[0];
        (g.kind.source(), g.from)
    }

    pub fn target(&self) -> (Node, usize) {
        let g = self.0[self.0.len() - 1];
        (g.kind.target(), g.to)
    }

    /// Consecutive generators meet at the same node and vertex.
    pub fn is_composable(&self, lat: &ProductLattice) -> bool {
        let vs = lat.vertices();
        !self.0.is_empty()
            && self.0.iter().all(|g| le(&vs[g.from], &vs[g.to]))
            && self.0.windows(2).all(|w| w[0].kind.target() == w[1].kind.source() && w[0].to == w[1].from)
    }

    /// Splits into two weight-1 words through an `o` or `s` node.
    pub fn has_good_break(&self) -> bool {
        let mut w = 0;
        for g in &self.0[..self.0.len().saturating_sub(1)] {
            w += g.kind.weight();
            if w == 1 && g.kind.target() != Node::U {
                return true;
            }
        }
        false
    }

    fn then(&self, next: &Word) -> Word {
        let mut gens = self.0.clone();
        gens.extend_from_slice(&next.0);
        Word(gens)
    }
}

/// A sum of words with coefficients in F2.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum(pub BTreeSet<Word>);

impl FormalSum {
    pub fn new() -> Self {
        FormalSum::default()
    }

    pub fn add(&mut self, w: Word) {
        if !self.0.remove(&w) {
            self.0.insert(w);
        }
    }

    pub fn add_all(&mut self, other: &FormalSum) {
        for w in &other.0 {
            self.add(w.clone());
        }
    }

    /// Reduce a list of words with multiplicity mod 2.
    pub fn from_words<I: IntoIterator<Item = Word>>(words: I) -> Self {
        let mut s = FormalSum::new();
        for w in words {
            s.add(w);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.0.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.0.iter()
    }
}

/// The four entries of a map `C^o ⊕ C^s → C^o ⊕ C^s`, named source-to-target.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Block<T> {
    pub oo: T,
    pub os: T,
    pub so: T,
    pub ss: T,
}

impl<T> Block<T> {
    pub fn entries(&self) -> [(&'static str, &T); 4] {
        [("oo", &self.oo), ("os", &self.os), ("so", &self.so), ("ss", &self.ss)]
    }

    pub fn get(&self, source: Node, target: Node) -> &T {
        match (source, target) {
            (Node::O, Node::O) => &self.oo,
            (Node::O, Node::S) => &self.os,
            (Node::S, Node::O) => &self.so,
            (Node::S, Node::S) => &self.ss,
            _ => panic!("block entries run between o and s"),
        }
    }

    fn get_mut(&mut self, source: Node, target: Node) -> &mut T {
        match (source, target) {
            (Node::O, Node::O) => &mut self.oo,
            (Node::O, Node::S) => &mut self.os,
            (Node::S, Node::O) => &mut self.so,
            (Node::S, Node::S) => &mut self.ss,
            _ => panic!("block entries run between o and s"),
        }
    }

    fn map<U>(self, f: impl Fn(T) -> U) -> Block<U> {
        Block { oo: f(self.oo), os: f(self.os), so: f(self.so), ss: f(self.ss) }
    }
}

impl Block<FormalSum> {
    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|(_, s)| s.is_empty())
    }
}

const OS: [Node; 2] = [Node::O, Node::S];

/// Path-algebra expansions over one product lattice.
pub struct PathAlgebra {
    lattice: ProductLattice,
    vertices: Vec<LatticeVertex>,
    /// `up[i]`: indices `k` with `i ≤ k`, in index order.
    up: Vec<Vec<usize>>,
}

impl PathAlgebra {
    pub fn new(lattice: &ProductLattice) -> Self {
        let vertices = lattice.vertices();
        let up = vertices.iter().map(|v| (0..vertices.len()).filter(|&k| le(v, &vertices[k])).collect()).collect();
        PathAlgebra { lattice: lattice.clone(), vertices, up }
    }

    pub fn lattice(&self) -> &ProductLattice {
        &self.lattice
    }

    pub fn vertex(&self, i: usize) -> &LatticeVertex {
        &self.vertices[i]
    }

    pub fn index(&self, v: &[u8]) -> usize {
        self.lattice.index(v)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        le(&self.vertices[i], &self.vertices[j])
    }

    fn between(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[i].iter().copied().filter(move |&k| self.le(k, j))
    }

    /// All pairs `i ≤ j` of vertex indices.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        (0..self.vertices.len()).flat_map(|i| self.up[i].iter().map(move |&j| (i, j))).collect()
    }

    fn gen(kind: GeneratorKind, from: usize, to: usize) -> Word {
        Word(vec![IntervalGenerator { kind, from, to }])
    }

    /// Every word of the given weight from `(s, i)` to `(t, j)`.
    pub fn words(&self, s: Node, i: usize, t: Node, j: usize, weight: u32) -> Vec<Word> {
        let mut out = Vec::new();
        self.extend(s, i, t, j, weight, &mut Vec::new(), &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(&self, node: Node, at: usize, t: Node, j: usize, left: u32, prefix: &mut Vec<IntervalGenerator>, out: &mut Vec<Word>) {
        if node == t && at == j && left == 0 && !prefix.is_empty() {
            // No cycle has weight zero, so nothing longer can end here.
            out.push(Word(prefix.clone()));
            return;
        }
        for kind in GeneratorKind::ALL {
            if kind.source() != node || kind.weight() > left {
                continue;
            }
            for k in self.between(at, j) {
                prefix.push(IntervalGenerator { kind, from: at, to: k });
                self.extend(kind.target(), k, t, j, left - kind.weight(), prefix, out);
                prefix.pop();
            }
        }
    }

    /// Two-letter words of boundary generators from `(s, i)` to `(t, j)`.
    pub fn barred_pairs(&self, s: Node, i: usize, t: Node, j: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for mid in [Node::S, Node::U] {
            let (Some(a), Some(b)) = (GeneratorKind::from_nodes(s, mid, true), GeneratorKind::from_nodes(mid, t, true)) else {
                continue;
            };
            for k in self.between(i, j) {
                out.push(Word(vec![IntervalGenerator { kind: a, from: i, to: k }, IntervalGenerator { kind: b, from: k, to: j }]));
            }
        }
        out
    }

    /// The relation attached to a generator kind on `(i, j)`: all weight-2
    /// words between the ends of an interior kind, all two-letter boundary
    /// words for a boundary kind.
    pub fn relation(&self, kind: GeneratorKind, i: usize, j: usize) -> Vec<Word> {
        if kind.barred() {
            self.barred_pairs(kind.source(), i, kind.target(), j)
        } else {
            self.words(kind.source(), i, kind.target(), j, 2)
        }
    }

    /// The component `Ď(i, j)`.
    pub fn gen_d(&self, i: usize, j: usize) -> Block<FormalSum> {
        use GeneratorKind::*;
        let mut b = Block::<Vec<Word>>::default();
        b.oo.push(Self::gen(Doo, i, j));
        b.os.push(Self::gen(Dos, i, j));
        b.ss.push(Self::gen(Bss, i, j));
        for k in self.between(i, j) {
            let obstructed = Self::gen(Bsu, i, k);
            b.so.push(obstructed.then(&Self::gen(Duo, k, j)));
            b.ss.push(obstructed.then(&Self::gen(Dus, k, j)));
        }
        b.map(FormalSum::from_words)
    }

    /// `Ǎ(i, j)` before cancellation, as a list with multiplicity.
    pub fn expand_a(&self, i: usize, j: usize) -> Block<Vec<Word>> {
        use GeneratorKind::*;
        let mut b =
            Block::<Vec<Word>> { oo: self.relation(Doo, i, j), os: self.relation(Dos, i, j), so: Vec::new(), ss: self.relation(Bss, i, j) };
        for k in self.between(i, j) {
            let obstructed = Self::gen(Bsu, i, k);
            let boundary = self.relation(Bsu, i, k);
            for (t, interior) in [(Node::O, Duo), (Node::S, Dus)] {
                let entry = b.get_mut(Node::S, t);
                entry.extend(self.relation(interior, k, j).iter().map(|w| obstructed.then(w)));
                let last = Self::gen(interior, k, j);
                entry.extend(boundary.iter().map(|w| w.then(&last)));
            }
        }
        b
    }

    pub fn gen_a(&self, i: usize, j: usize) -> Block<FormalSum> {
        self.expand_a(i, j).map(FormalSum::from_words)
    }

    /// `Σ_K Ď(K, j) Ď(i, K)` before cancellation; `strict` drops `K ∈ {i, j}`.
    pub fn expand_dd(&self, i: usize, j: usize, strict: bool) -> Block<Vec<Word>> {
        let mut b = Block::<Vec<Word>>::default();
        for k in self.between(i, j) {
            if strict && (k == i || k == j) {
                continue;
            }
            let (first, second) = (self.gen_d(i, k), self.gen_d(k, j));
            for s in OS {
                for mid in OS {
                    for t in OS {
                        let entry = b.get_mut(s, t);
                        for w1 in first.get(s, mid).iter() {
                            for w2 in second.get(mid, t).iter() {
                                entry.push(w1.then(w2));
                            }
                        }
                    }
                }
            }
        }
        b
    }

    /// `Q̌(i, j)`: the compositions through strictly intermediate vertices.
    pub fn gen_q(&self, i: usize, j: usize) -> Block<FormalSum> {
        self.expand_dd(i, j, true).map(FormalSum::from_words)
    }

    /// `Q̌ = Ǎ + Ď(j,j)Ď(i,j) + Ď(i,j)Ď(i,i)`, i.e. `Ǎ` minus the terms
    /// through the endpoints.
    pub fn check_q(&self, i: usize, j: usize) -> bool {
        if i == j {
            return self.gen_q(i, j).is_zero();
        }
        let a = self.gen_a(i, j);
        let (dii, dij, djj) = (self.gen_d(i, i), self.gen_d(i, j), self.gen_d(j, j));
        let q = self.gen_q(i, j);
        OS.iter().all(|&s| {
            OS.iter().all(|&t| {
                let mut sum = a.get(s, t).clone();
                for mid in OS {
                    for w1 in dij.get(s, mid).iter() {
                        for w2 in djj.get(mid, t).iter() {
                            sum.add(w1.then(w2));
                        }
                    }
                    for w1 in dii.get(s, mid).iter() {
                        for w2 in dij.get(mid, t).iter() {
                            sum.add(w1.then(w2));
                        }
                    }
                }
                sum == *q.get(s, t)
            })
        })
    }

    /// Expand both sides of `Ǎ(i,j) = Σ_K Ď(K,j) Ď(i,K)` and compare.
    pub fn verify_identity(&self, i: usize, j: usize) -> IdentityCheck {
        let a = self.expand_a(i, j);
        let dd = self.expand_dd(i, j, false);
        let mut residual = Block::<FormalSum>::default();
        let mut max_multiplicity = 0;
        let mut break_structure = true;
        let mut composable = true;
        let mut terms = (0, 0);
        for s in OS {
            for t in OS {
                let mut counts: HashMap<&Word, (u32, u32)> = HashMap::new();
                for w in a.get(s, t) {
                    counts.entry(w).or_default().0 += 1;
                }
                for w in dd.get(s, t) {
                    counts.entry(w).or_default().1 += 1;
                }
                terms.0 += a.get(s, t).len();
                terms.1 += dd.get(s, t).len();
                let entry = residual.get_mut(s, t);
                for (w, &(na, nd)) in &counts {
                    max_multiplicity = max_multiplicity.max(na + nd);
                    let expected = if w.has_good_break() { (1, 1) } else { (2, 0) };
                    break_structure &= (na, nd) == expected;
                    composable &= w.is_composable(&self.lattice) && w.weight() == 2;
                    if (na + nd) % 2 == 1 {
                        entry.add((*w).clone());
                    }
                }
            }
        }
        IdentityCheck {
            from: self.vertices[i].clone(),
            to: self.vertices[j].clone(),
            a_terms: terms.0,
            dd_terms: terms.1,
            max_multiplicity,
            break_structure,
            composable,
            residual,
        }
    }

    pub fn render_vertex(&self, i: usize) -> String {
        self.vertices[i].iter().map(|d| char::from(b'0' + d)).collect()
    }

    pub fn render_generator(&self, g: &IntervalGenerator) -> String {
        format!("{}[{},{}]", g.kind, self.render_vertex(g.from), self.render_vertex(g.to))
    }

    /// `g_k·…·g_1`, last-applied first.
    pub fn render_word(&self, w: &Word) -> String {
        w.0.iter().rev().map(|g| self.render_generator(g)).collect::<Vec<_>>().join("·")
    }

    pub fn render_sum(&self, s: &FormalSum) -> String {
        if s.is_empty() {
            return "0".into();
        }
        let mut words: Vec<String> = s.iter().map(|w| self.render_word(w)).collect();
        words.sort();
        words.join(" + ")
    }
}

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub from: LatticeVertex,
    pub to: LatticeVertex,
    /// Words in the expansion of `Ǎ`, counted with multiplicity.
    pub a_terms: usize,
    /// Words in `Σ_K Ď(K,J) Ď(I,K)`, counted with multiplicity.
    pub dd_terms: usize,
    pub max_multiplicity: u32,
    /// Words with a good break occur once on each side; the others occur
    /// exactly twice in `Ǎ` and never in the composite.
    pub break_structure: bool,
    pub composable: bool,
    pub residual: Block<FormalSum>,
}

impl IdentityCheck {
    pub fn ok(&self) -> bool {
        self.residual.is_zero() && self.break_structure && self.composable && self.max_multiplicity <= 2
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeVerification {
    pub lattice: String,
    pub intervals: usize,
    pub words: usize,
    pub failures: Vec<(LatticeVertex, LatticeVertex)>,
}

impl LatticeVerification {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Run [`PathAlgebra::verify_identity`] over every interval of the lattice.
pub fn verify_lattice(lat: &ProductLattice, mode: Parallelism) -> LatticeVerification {
    let alg = PathAlgebra::new(lat);
    let intervals = alg.intervals();
    let checks = par::map_slice(mode, &intervals, |&(i, j)| alg.verify_identity(i, j));
    LatticeVerification {
        lattice: lat.to_string(),
        intervals: intervals.len(),
        words: checks.iter().map(|c| c.a_terms + c.dd_terms).sum(),
        failures: checks.iter().filter(|c| !c.ok()).map(|c| (c.from.clone(), c.to.clone())).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(alg: &PathAlgebra, words: &[Word]) -> Vec<String> {
        let mut v: Vec<String> = words.iter().map(|w| alg.render_word(w)).collect();
        v.sort();
        v
    }

    #[test]
    fn weights() {
        use GeneratorKind::*;
        let w: Vec<u32> = GeneratorKind::ALL.iter().map(|k| k.weight()).collect();
        assert_eq!(w, vec![1, 1, 1, 1, 1, 0, 2, 1]);
        assert!(GeneratorKind::ALL.iter().all(|k| k.b_weight() == u32::from(k.barred())));
        assert_eq!(GeneratorKind::from_nodes(Node::U, Node::S, true), Some(Bus));
        assert_eq!(GeneratorKind::from_nodes(Node::S, Node::O, false), None);
    }

    #[test]
    fn point_differential() {
        let alg = PathAlgebra::new(&ProductLattice::cube(1));
        let d = alg.gen_d(0, 0);
        assert_eq!(alg.render_sum(&d.oo), "Doo[0,0]");
        assert_eq!(alg.render_sum(&d.so), "Duo[0,0]·Bsu[0,0]");
        assert_eq!(alg.render_sum(&d.ss), "Bss[0,0] + Dus[0,0]·Bsu[0,0]");
        let a = alg.gen_a(0, 0);
        assert_eq!(alg.render_sum(&a.oo), "Doo[0,0]·Doo[0,0] + Duo[0,0]·Bsu[0,0]·Dos[0,0]");
        let aus = alg.relation(GeneratorKind::Dus, 0, 0);
        assert_eq!(aus.len(), 5);
        assert!(render(&alg, &aus).contains(&"Bus[0,0]".to_string()));
        assert!(render(&alg, &aus).contains(&"Dus[0,0]·Bsu[0,0]·Dus[0,0]".to_string()));
    }

    #[test]
    fn d_is_all_weight_one_words() {
        for lat in [ProductLattice::cube(2), ProductLattice::surgery(1), ProductLattice::new(vec![2, 1]).unwrap()] {
            let alg = PathAlgebra::new(&lat);
            for (i, j) in alg.intervals() {
                let d = alg.gen_d(i, j);
                for s in OS {
                    for t in OS {
                        let all = FormalSum::from_words(alg.words(s, i, t, j, 1));
                        assert_eq!(d.get(s, t), &all);
                    }
                }
            }
        }
    }

    #[test]
    fn square_identity_and_q() {
        let lat = ProductLattice::cube(2);
        let alg = PathAlgebra::new(&lat);
        let (i, j) = (0, 3);
        let check = alg.verify_identity(i, j);
        assert!(check.ok(), "{check:?}");
        assert_eq!(alg.gen_a(i, j).oo.len(), 13);
        assert_eq!(alg.gen_q(i, j).oo.len(), 6);
        assert!(alg.check_q(i, j));
        // Adjacent vertices have nothing strictly between them.
        assert!(alg.gen_q(0, 1).is_zero());
    }

    #[test]
    fn cube_q_matches_a() {
        let alg = PathAlgebra::new(&ProductLattice::cube(3));
        for (i, j) in alg.intervals() {
            assert!(alg.check_q(i, j));
        }
        assert_eq!(alg.gen_a(0, 7).oo.len(), 35);
    }

    #[test]
    fn good_breaks() {
        use GeneratorKind::*;
        let g = |kind| IntervalGenerator { kind, from: 0, to: 0 };
        // ∂uo ē_uu ē_su passes only through u.
        assert!(!Word(vec![g(Bsu), g(Buu), g(Duo)]).has_good_break());
        assert!(Word(vec![g(Dos), g(Bsu), g(Duo)]).has_good_break());
        assert!(!Word(vec![g(Bsu), g(Bus)]).has_good_break());
    }

    #[test]
    fn rendering_uses_two_for_infinity() {
        let alg = PathAlgebra::new(&ProductLattice::surgery(1));
        let q = alg.gen_q(0, 2);
        assert_eq!(q.oo.len(), 3);
        assert!(alg.render_sum(&q.oo).contains("Doo[1,2]·Doo[0,1]"));
    }
}
