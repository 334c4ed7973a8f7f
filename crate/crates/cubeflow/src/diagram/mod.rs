//! Link diagrams as PD codes, their resolutions and the cube of resolutions.
//!
//! A crossing `[a, b, c, d]` lists its four edge labels counterclockwise,
//! starting from the incoming under-strand, so the under-strand runs `a → c`.
//! The crossing is positive when the over-strand runs `d → b`. The 0-smoothing
//! joins `a–b` and `c–d`; the 1-smoothing joins `a–d` and `b–c`. With these
//! conventions the oriented (Seifert) resolution has digit 0 at every positive
//! crossing, the right-handed trefoil is the positive one, and its reduced
//! homology sits in homological degrees 0, 2, 3.

mod braid;
mod cube;
mod planar;
mod resolve;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use braid::{braid_to_pd, torus_braid};
pub use cube::{circle_labels, cube, cube_edge, edge_from_labels, Cube, CubeEdge, EdgeKind};
pub use planar::{Checkerboard, Faces};
pub use resolve::{resolve, ResolvedDiagram, SiteVisit};

/// A slot of a crossing: `(crossing index, position 0..4)`.
pub type Slot = (usize, u8);

/// An oriented link diagram given by its PD code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    name: Option<String>,
    pd: Vec<[u32; 4]>,
    /// Sorted distinct edge labels; internal edge ids index this.
    labels: Vec<u32>,
    /// Edge ids per crossing slot.
    slot_edge: Vec<[usize; 4]>,
    /// The two slots where each edge ends.
    occ: Vec<[Slot; 2]>,
    /// Whether the edge at a slot points into the crossing.
    incoming: Vec<[bool; 4]>,
}

/// JSON shape for PD input: `{"name": ..., "pd": [[a,b,c,d], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PdJson {
    #[serde(default)]
    pub name: Option<String>,
    pub pd: Vec<[u32; 4]>,
}

impl LinkDiagram {
    pub fn new(pd: Vec<[u32; 4]>) -> Result<Self> {
        Self::named(None, pd)
    }

    pub fn named(name: Option<String>, pd: Vec<[u32; 4]>) -> Result<Self> {
        let mut seen: BTreeMap<u32, Vec<Slot>> = BTreeMap::new();
        for (x, c) in pd.iter().enumerate() {
            for (s, &e) in c.iter().enumerate() {
                seen.entry(e).or_default().push((x, s as u8));
            }
        }
        if let Some((e, v)) = seen.iter().find(|(_, v)| v.len() != 2) {
            return Err(Error::MalformedPd(format!("edge label {e} occurs {} times", v.len())));
        }
        let labels: Vec<u32> = seen.keys().copied().collect();
        let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let slot_edge = pd.iter().map(|c| c.map(|e| index[&e])).collect();
        let occ = seen.values().map(|v| [v[0], v[1]]).collect();
        let mut d = LinkDiagram { name, pd, labels, slot_edge, occ, incoming: Vec::new() };
        d.incoming = d.orient(None)?;
        Ok(d)
    }

    /// Build a diagram whose over-strand directions are prescribed: `b_incoming[x]`
    /// says whether slot 1 of crossing `x` points into the crossing.
    pub fn with_directions(name: Option<String>, pd: Vec<[u32; 4]>, b_incoming: &[bool]) -> Result<Self> {
        let mut d = Self::named(name, pd)?;
        if b_incoming.len() != d.len() {
            return Err(Error::Orientation("direction list has wrong length".into()));
        }
        d.incoming = d.orient(Some(b_incoming))?;
        Ok(d)
    }

    /// Whether slot 1 of each crossing is incoming.
    pub fn over_directions(&self) -> Vec<bool> {
        self.incoming.iter().map(|c| c[1]).collect()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PdJson = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
        Self::named(j.name, j.pd)
    }

    pub fn to_json(&self) -> PdJson {
        PdJson { name: self.name.clone(), pd: self.pd.clone() }
    }

    /// Zero-crossing diagram of the unknot.
    pub fn unknot() -> Self {
        Self::named(Some("0_1".into()), Vec::new()).expect("empty PD is valid")
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn pd(&self) -> &[[u32; 4]] {
        &self.pd
    }

    /// Crossing count `l`.
    pub fn len(&self) -> usize {
        self.pd.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pd.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, e: usize) -> u32 {
        self.labels[e]
    }

    pub fn edge_at(&self, x: usize, s: u8) -> usize {
        self.slot_edge[x][s as usize]
    }

    pub fn occurrences(&self, e: usize) -> [Slot; 2] {
        self.occ[e]
    }

    /// The other end of edge `e` from slot `from`.
    pub fn other_end(&self, e: usize, from: Slot) -> Slot {
        let [o0, o1] = self.occ[e];
        if o0 == from {
            o1
        } else {
            o0
        }
    }

    pub fn is_incoming(&self, x: usize, s: u8) -> bool {
        self.incoming[x][s as usize]
    }

    /// Slot where edge `e` starts (it is outgoing there).
    pub fn tail(&self, e: usize) -> Slot {
        let [o0, o1] = self.occ[e];
        if self.is_incoming(o0.0, o0.1) {
            o1
        } else {
            o0
        }
    }

    /// Slot where edge `e` ends.
    pub fn head(&self, e: usize) -> Slot {
        self.other_end(e, self.tail(e))
    }

    /// +1 for a positive crossing, −1 for a negative one.
    pub fn sign(&self, x: usize) -> i8 {
        if self.incoming[x][3] {
            1
        } else {
            -1
        }
    }

    pub fn crossing_signs(&self) -> (usize, usize) {
        let p = (0..self.len()).filter(|&x| self.sign(x) > 0).count();
        (p, self.len() - p)
    }

    pub fn writhe(&self) -> i64 {
        let (p, n) = self.crossing_signs();
        p as i64 - n as i64
    }

    /// The oriented resolution: 0 at positive crossings, 1 at negative ones.
    pub fn seifert_vertex(&self) -> Vertex {
        Vertex::from_fn(self.len(), |x| self.sign(x) < 0)
    }

    /// Slot across the strand from `s` at a crossing (0↔2, 1↔3).
    pub fn strand_partner(s: u8) -> u8 {
        (s + 2) % 4
    }

    /// Oriented components as cyclic sequences of edge ids.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.edge_count()];
        let mut comps = Vec::new();
        for start in 0..self.edge_count() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut e = start;
            while !seen[e] {
                seen[e] = true;
                comp.push(e);
                let (x, s) = self.head(e);
                e = self.edge_at(x, Self::strand_partner(s));
            }
            comps.push(comp);
        }
        if comps.is_empty() {
            comps.push(Vec::new());
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Component id of each edge.
    pub fn edge_components(&self) -> Vec<usize> {
        let mut out = vec![0; self.edge_count()];
        for (k, c) in self.components().iter().enumerate() {
            for &e in c {
                out[e] = k;
            }
        }
        out
    }

    /// Mirror image (every crossing switched), keeping orientations.
    pub fn mirror(&self) -> LinkDiagram {
        let pd =
            self.pd.iter().enumerate().map(|(x, &[a, b, c, d])| if self.incoming[x][3] { [d, a, b, c] } else { [b, c, d, a] }).collect();
        let name = self.name.as_ref().map(|n| format!("m{n}"));
        // A positive crossing [a,b,c,d] becomes [d,a,b,c], whose slot 1 is the incoming `a`.
        let dirs: Vec<bool> = (0..self.len()).map(|x| self.incoming[x][3]).collect();
        LinkDiagram::with_directions(name, pd, &dirs).expect("mirror of a valid diagram is valid")
    }

    /// Relabel edges 1, 2, 3, … consecutively along each oriented component.
    pub fn relabeled(&self) -> LinkDiagram {
        let mut new = vec![0u32; self.edge_count()];
        let mut next = 1;
        for comp in self.components() {
            for e in comp {
                new[e] = next;
                next += 1;
            }
        }
        let pd = self.slot_edge.iter().map(|c| c.map(|e| new[e])).collect();
        LinkDiagram::with_directions(self.name.clone(), pd, &self.over_directions()).expect("relabeling preserves validity")
    }

    /// Whether the underlying 4-valent graph is connected.
    pub fn is_connected(&self) -> bool {
        if self.len() <= 1 {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for s in 0..4u8 {
                let e = self.edge_at(x, s);
                let (y, _) = self.other_end(e, (x, s));
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen.iter().all(|&b| b)
    }

    /// Propagate edge directions from the under-strands. Components running only
    /// over other strands are oriented by their label numbering.
    fn orient(&self, hint: Option<&[bool]>) -> Result<Vec<[bool; 4]>> {
        let n = self.len();
        let mut inc: Vec<[Option<bool>; 4]> = (0..n)
            .map(|x| match hint {
                Some(h) => [Some(true), Some(h[x]), Some(false), Some(!h[x])],
                None => [Some(true), None, Some(false), None],
            })
            .collect();
        let mut queue: VecDeque<Slot> =
            (0..n).flat_map(|x| (0..4u8).filter(move |&s| hint.is_some() || s % 2 == 0).map(move |s| (x, s))).collect();

        let assign = |inc: &mut Vec<[Option<bool>; 4]>, queue: &mut VecDeque<Slot>, (x, s): Slot, v: bool| -> Result<()> {
            match inc[x][s as usize] {
                Some(old) if old != v => Err(Error::Orientation(format!("conflicting directions at crossing {x} slot {s}"))),
                Some(_) => Ok(()),
                None => {
                    inc[x][s as usize] = Some(v);
                    queue.push_back((x, s));
                    Ok(())
                }
            }
        };

        loop {
            while let Some((x, s)) = queue.pop_front() {
                let v = inc[x][s as usize].expect("queued slots are assigned");
                let e = self.slot_edge[x][s as usize];
                let o = self.other_end(e, (x, s));
                assign(&mut inc, &mut queue, o, !v)?;
                if s % 2 == 1 {
                    assign(&mut inc, &mut queue, (x, 4 - s), !v)?;
                }
            }
            let Some(x) = (0..n).find(|&x| inc[x][1].is_none()) else { break };
            let [_, b, _, d] = self.pd[x];
            // b → d when consecutive, otherwise the wrap-around direction.
            let b_in = if d.abs_diff(b) == 1 { b < d } else { b > d };
            assign(&mut inc, &mut queue, (x, 1), b_in)?;
        }
        Ok(inc.into_iter().map(|c| c.map(|v| v.expect("all slots oriented"))).collect())
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.pd.iter().map(|c| format!("X{c:?}")).collect();
        write!(f, "{}: PD[{}]", self.name.as_deref().unwrap_or("?"), body.join(", "))
    }
}

/// A vertex of the resolution hypercube, one digit per crossing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    len: u8,
    bits: u64,
}

impl Vertex {
    pub fn new(len: usize, bits: u64) -> Self {
        assert!(len <= 64);
        assert!(len == 64 || bits >> len == 0, "vertex bits exceed length");
        Vertex { len: len as u8, bits }
    }

    pub fn zero(len: usize) -> Self {
        Self::new(len, 0)
    }

    pub fn from_digits(digits: &[u8]) -> Self {
        Self::from_fn(digits.len(), |i| digits[i] != 0)
    }

    pub fn from_fn(len: usize, f: impl Fn(usize) -> bool) -> Self {
        let bits = (0..len).filter(|&i| f(i)).fold(0u64, |acc, i| acc | 1 << i);
        Self::new(len, bits)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Input(format!("bad vertex digit {c:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(Self::from_digits(&digits))
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn digit(&self, i: usize) -> u8 {
        assert!(i < self.len(), "digit index out of range");
        ((self.bits >> i) & 1) as u8
    }

    pub fn digits(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.digit(i)).collect()
    }

    /// Weight `w(I)`, the number of 1-digits.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn with_digit(&self, i: usize, d: u8) -> Vertex {
        let bits = if d == 0 { self.bits & !(1 << i) } else { self.bits | 1 << i };
        Vertex::new(self.len(), bits)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", self.digit(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({self})")
    }
}

/// Standard diagrams used across tests and examples.
pub mod examples {
    use super::LinkDiagram;

    pub fn right_trefoil() -> LinkDiagram {
        LinkDiagram::named(Some("3_1".into()), vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap()
    }

    pub fn left_trefoil() -> LinkDiagram {
        right_trefoil().mirror()
    }

    pub fn figure_eight() -> LinkDiagram {
        LinkDiagram::named(Some("4_1".into()), vec![[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]).unwrap()
    }

    /// One-crossing unknot (a single Reidemeister-I kink).
    pub fn kinked_unknot() -> LinkDiagram {
        LinkDiagram::named(Some("0_1 kink".into()), vec![[1, 2, 2, 1]]).unwrap()
    }

    /// Positive Hopf link.
    pub fn hopf() -> LinkDiagram {
        LinkDiagram::named(Some("hopf".into()), vec![[1, 3, 2, 4], [3, 1, 4, 2]]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    #[test]
    fn signs_of_standard_diagrams() {
        assert_eq!(right_trefoil().crossing_signs(), (3, 0));
        assert_eq!(left_trefoil().crossing_signs(), (0, 3));
        assert_eq!(LinkDiagram::unknot().crossing_signs(), (0, 0));
        assert_eq!(figure_eight().crossing_signs(), (2, 2));
        assert_eq!(right_trefoil().component_count(), 1);
        assert_eq!(hopf().component_count(), 2);
    }

    #[test]
    fn malformed_codes_rejected() {
        assert!(matches!(LinkDiagram::new(vec![[1, 2, 3, 4]]), Err(Error::MalformedPd(_))));
        assert!(LinkDiagram::from_json(r#"{"pd": [[1,2,3]]}"#).is_err());
    }

    #[test]
    fn mirror_twice_is_identity_on_signs() {
        let d = figure_eight();
        assert_eq!(d.mirror().mirror().pd(), d.pd());
        let r = right_trefoil().relabeled();
        assert_eq!(r.crossing_signs(), (3, 0));
    }

    #[test]
    fn vertex_digits() {
        let v = Vertex::parse("010").unwrap();
        assert_eq!(v.weight(), 1);
        assert_eq!(v.digits(), vec![0, 1, 0]);
        assert_eq!(v.with_digit(0, 1).to_string(), "110");
    }
}
