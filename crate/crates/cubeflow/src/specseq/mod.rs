//! The spectral sequence of a finite filtered complex over F2, and the grading
//! arithmetic used to read its pages.
mod echelon;
mod grading;
mod random;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::f2core::{BitVec, F2Matrix};
use crate::khcube::{KhComplex, RankTable};
use crate::par::{self, Parallelism};
use crate::poly::Laurent;
use crate::{Error, Result};

use echelon::Echelon;
pub use grading::{delta_check, iota, kh_delta_parity, CobordismData};
pub use random::random_filtered_complex;

/// One generator: filtration weight, δ̌ parity and an optional quantum grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub t: i64,
    pub parity: u8,
    pub q: Option<i64>,
}

/// A complex with `d` raising (or preserving) `t` and flipping parity.
/// `d` is stored by columns: `d[j]` lists the generators in `d(g_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredComplex {
    generators: Vec<Generator>,
    d: Vec<Vec<usize>>,
}

/// Where a page entry lives. Ordered by quantum grading, then parity, then `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SlotKey {
    pub q: Option<i64>,
    pub parity: u8,
    pub t: i64,
}

/// `d^r : E^r(from) → E^r(to)` in the page's chosen bases.
#[derive(Clone, Debug)]
pub struct PageDifferential {
    pub from: SlotKey,
    pub to: SlotKey,
    pub matrix: F2Matrix,
}

#[derive(Clone, Debug)]
pub struct Page {
    pub r: usize,
    pub ranks: BTreeMap<SlotKey, usize>,
    pub differentials: Vec<PageDifferential>,
}

#[derive(Serialize, Deserialize)]
struct GeneratorJson {
    id: usize,
    t: i64,
    delta: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<i64>,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    generators: Vec<GeneratorJson>,
    d: Vec<[usize; 2]>,
}

impl FilteredComplex {
    /// Checks `d² = 0`, that `d` never lowers `t`, flips parity and keeps `q`.
    pub fn new(generators: Vec<Generator>, mut d: Vec<Vec<usize>>) -> Result<Self> {
        let n = generators.len();
        if d.len() != n {
            return Err(Error::Dimension(format!("{} columns for {n} generators", d.len())));
        }
        for col in d.iter_mut() {
            col.sort_unstable();
            crate::f2core::ext::dedup_mod2(col);
        }
        for (j, col) in d.iter().enumerate() {
            let g = generators[j];
            for &i in col {
                let h = *generators.get(i).ok_or_else(|| Error::Dimension(format!("target {i} out of range")))?;
                if h.t < g.t {
                    return Err(Error::InvalidComplex(format!("d lowers the filtration from {j} to {i}")));
                }
                if h.parity == g.parity {
                    return Err(Error::InvalidComplex(format!("d preserves parity from {j} to {i}")));
                }
                if h.q != g.q {
                    return Err(Error::InvalidComplex(format!("d changes q from {j} to {i}")));
                }
            }
        }
        let c = FilteredComplex { generators, d };
        for j in 0..n {
            if !c.apply(&c.d[j]).is_empty() {
                return Err(Error::InvalidComplex(format!("d² ≠ 0 on generator {j}")));
            }
        }
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn column(&self, j: usize) -> &[usize] {
        &self.d[j]
    }

    /// `d` applied to a sum of generators.
    fn apply(&self, xs: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = xs.iter().flat_map(|&x| self.d[x].iter().copied()).collect();
        out.sort_unstable();
        crate::f2core::ext::dedup_mod2(&mut out);
        out
    }

    pub fn matrix(&self) -> F2Matrix {
        let n = self.len();
        let cols: Vec<BitVec> = self.d.iter().map(|c| BitVec::from_indices(n, c.iter().copied())).collect();
        F2Matrix::from_columns(n, &cols)
    }

    pub fn is_bigraded(&self) -> bool {
        self.generators.iter().all(|g| g.q.is_some())
    }

    fn t_range(&self) -> (i64, i64) {
        let lo = self.generators.iter().map(|g| g.t).min().unwrap_or(0);
        let hi = self.generators.iter().map(|g| g.t).max().unwrap_or(0);
        (lo, hi)
    }

    /// The page index from which nothing changes any more.
    pub fn convergence_page(&self) -> usize {
        let (lo, hi) = self.t_range();
        (hi - lo) as usize + 1
    }

    /// The cube of resolutions with `t` the homological grading, and parity
    /// `δ − (σ + ν)/2 mod 2`.
    pub fn from_kh(k: &KhComplex, sigma: i64, nullity: usize, mode: Parallelism) -> Result<Self> {
        let gens: Vec<Generator> = k
            .gradings()
            .into_iter()
            .map(|g| Generator { t: g.t, parity: kh_delta_parity(g.q, g.t, sigma, nullity), q: Some(g.q) })
            .collect();
        FilteredComplex::new(gens, k.differential_columns(mode))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let c: ComplexJson = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
        let n = c.generators.len();
        let mut order: Vec<usize> = vec![usize::MAX; n];
        for (k, g) in c.generators.iter().enumerate() {
            if g.id >= n || order[g.id] != usize::MAX {
                return Err(Error::Input(format!("generator ids must be a permutation of 0..{n}")));
            }
            order[g.id] = k;
        }
        let gens = (0..n)
            .map(|i| {
                let g = &c.generators[order[i]];
                Generator { t: g.t, parity: g.delta & 1, q: g.q }
            })
            .collect();
        let mut d = vec![Vec::new(); n];
        for [from, to] in c.d {
            if from >= n || to >= n {
                return Err(Error::Input(format!("differential entry [{from}, {to}] out of range")));
            }
            d[from].push(to);
        }
        FilteredComplex::new(gens, d)
    }

    pub fn to_json(&self) -> String {
        let c = ComplexJson {
            generators: self.generators.iter().enumerate().map(|(id, g)| GeneratorJson { id, t: g.t, delta: g.parity, q: g.q }).collect(),
            d: self.d.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |&i| [j, i])).collect(),
        };
        serde_json::to_string(&c).expect("serializable")
    }

    /// Generators grouped by `(q, parity)`, each list sorted by `t`.
    fn slots(&self) -> BTreeMap<(Option<i64>, u8), Vec<usize>> {
        let mut m: BTreeMap<(Option<i64>, u8), Vec<usize>> = BTreeMap::new();
        for (i, g) in self.generators.iter().enumerate() {
            m.entry((g.q, g.parity)).or_default().push(i);
        }
        for v in m.values_mut() {
            v.sort_by_key(|&i| (self.generators[i].t, i));
        }
        m
    }
}

/// One `(q, parity)` slot with local coordinates.
struct SlotData<'a> {
    c: &'a FilteredComplex,
    gens: &'a [usize],
    local: BTreeMap<usize, usize>,
}

impl<'a> SlotData<'a> {
    fn new(c: &'a FilteredComplex, gens: &'a [usize]) -> Self {
        let local = gens.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        SlotData { c, gens, local }
    }

    fn t(&self, k: usize) -> i64 {
        self.c.generators[self.gens[k]].t
    }

    fn ts(&self) -> Vec<i64> {
        let mut v: Vec<i64> = (0..self.gens.len()).map(|k| self.t(k)).collect();
        v.dedup();
        v
    }
}

/// `d` of a local vector of `src`, in the local coordinates of `dst`.
fn push(src: &SlotData, dst: &SlotData, x: &BitVec) -> BitVec {
    let xs: Vec<usize> = x.ones().map(|k| src.gens[k]).collect();
    let img = src.c.apply(&xs);
    BitVec::from_indices(dst.gens.len(), img.into_iter().map(|g| dst.local[&g]))
}

/// `Z^r_p = F_p ∩ d⁻¹ F_{p+r}` inside `src`, as a basis of local vectors.
fn z(src: &SlotData, dst: &SlotData, r: i64, p: i64) -> Vec<BitVec> {
    let cols: Vec<usize> = (0..src.gens.len()).filter(|&k| src.t(k) >= p).collect();
    if cols.is_empty() {
        return Vec::new();
    }
    let rows: Vec<usize> = (0..dst.gens.len()).filter(|&k| dst.t(k) < p + r).collect();
    let n = src.gens.len();
    let images: Vec<BitVec> = cols.iter().map(|&k| push(src, dst, &BitVec::unit(n, k))).collect();
    let m = F2Matrix::from_fn(rows.len(), cols.len(), |i, j| images[j].get(rows[i]));
    m.kernel_basis().into_iter().map(|v| BitVec::from_indices(n, v.ones().map(|j| cols[j]))).collect()
}

/// Representatives of `E^r_p` and an echelon form of numerator ⊃ denominator.
struct Subquotient {
    reps: Vec<BitVec>,
    basis: Echelon,
}

/// `E^r_p = Z^r_p / (Z^{r−1}_{p+1} + d Z^{r−1}_{p−r+1})` in slot `s`; `o` is the
/// slot of opposite parity (where `d` comes from and goes to).
fn subquotient(s: &SlotData, o: &SlotData, r: i64, p: i64) -> Subquotient {
    let n = s.gens.len();
    let mut basis = Echelon::new(n);
    for v in z(s, o, r - 1, p + 1) {
        basis.insert(v);
    }
    for v in z(o, s, r - 1, p - r + 1) {
        basis.insert(push(o, s, &v));
    }
    let boundary_rank = basis.len();
    let mut reps = Vec::new();
    for v in z(s, o, r, p) {
        if basis.insert(v.clone()) {
            reps.push(v);
        }
    }
    debug_assert_eq!(basis.len(), boundary_rank + reps.len());
    let _ = boundary_rank;
    Subquotient { reps, basis }
}

/// Pages `E^1 … E^{r_max}`.
pub fn pages(c: &FilteredComplex, r_max: usize, mode: Parallelism) -> Vec<Page> {
    (1..=r_max).map(|r| page(c, r, mode)).collect()
}

/// The page `E^r` with its differential `d^r`.
pub fn page(c: &FilteredComplex, r: usize, mode: Parallelism) -> Page {
    let slots = c.slots();
    let empty: Vec<usize> = Vec::new();
    let keys: Vec<(Option<i64>, u8)> = slots.keys().copied().collect();
    let r = r as i64;
    let per_slot = par::map_slice(mode, &keys, |&(q, parity)| {
        let s = SlotData::new(c, &slots[&(q, parity)]);
        let o = SlotData::new(c, slots.get(&(q, 1 - parity)).unwrap_or(&empty));
        let mut ranks = Vec::new();
        let mut diffs = Vec::new();
        let ts = s.ts();
        let targets: BTreeMap<i64, Subquotient> = o.ts().into_iter().map(|p| (p, subquotient(&o, &s, r, p))).collect();
        for &p in &ts {
            let e = subquotient(&s, &o, r, p);
            ranks.push((SlotKey { q, parity, t: p }, e.reps.len()));
            if e.reps.is_empty() {
                continue;
            }
            let Some(tgt) = targets.get(&(p + r)).filter(|t| !t.reps.is_empty()) else { continue };
            let boundary = tgt.basis.len() - tgt.reps.len();
            let mut m = F2Matrix::zeros(tgt.reps.len(), e.reps.len());
            for (j, x) in e.reps.iter().enumerate() {
                let coeffs = tgt.basis.coordinates(&push(&s, &o, x)).expect("d maps Z^r_p into Z^r_{p+r}");
                for i in coeffs.ones().filter(|&i| i >= boundary) {
                    m.set(i - boundary, j, true);
                }
            }
            if !m.is_zero() {
                diffs.push(PageDifferential {
                    from: SlotKey { q, parity, t: p },
                    to: SlotKey { q, parity: 1 - parity, t: p + r },
                    matrix: m,
                });
            }
        }
        (ranks, diffs)
    });
    let mut page = Page { r: r as usize, ranks: BTreeMap::new(), differentials: Vec::new() };
    for (ranks, diffs) in per_slot {
        page.ranks.extend(ranks.into_iter().filter(|&(_, n)| n > 0));
        page.differentials.extend(diffs);
    }
    page
}

/// `E^∞`, reached once `r` exceeds the filtration length.
pub fn e_infinity(c: &FilteredComplex, mode: Parallelism) -> Page {
    page(c, c.convergence_page(), mode)
}

/// Ranks of `gr_p H(C)` for the filtration induced on total homology, computed
/// directly as `dim (ker ∩ F_p + im) − dim (ker ∩ F_{p+1} + im)`.
pub fn associated_graded_homology(c: &FilteredComplex) -> BTreeMap<SlotKey, usize> {
    let slots = c.slots();
    let empty: Vec<usize> = Vec::new();
    let mut out = BTreeMap::new();
    for (&(q, parity), gens) in &slots {
        let s = SlotData::new(c, gens);
        let o = SlotData::new(c, slots.get(&(q, 1 - parity)).unwrap_or(&empty));
        let n = gens.len();
        let images: Vec<BitVec> = (0..o.gens.len()).map(|k| push(&o, &s, &BitVec::unit(o.gens.len(), k))).collect();
        let span_with_image = |p: i64| -> usize {
            let mut e = Echelon::new(n);
            for v in &images {
                e.insert(v.clone());
            }
            for v in z(&s, &o, i64::MAX / 4, p) {
                e.insert(v);
            }
            e.len()
        };
        let mut ts = s.ts();
        ts.push(ts.last().copied().unwrap_or(0) + 1);
        for w in ts.windows(2) {
            let rank = span_with_image(w[0]) - span_with_image(w[0] + 1);
            if rank > 0 {
                out.insert(SlotKey { q, parity, t: w[0] }, rank);
            }
        }
    }
    out
}

impl Page {
    pub fn total(&self) -> usize {
        self.ranks.values().sum()
    }

    pub fn rank(&self, key: SlotKey) -> usize {
        self.ranks.get(&key).copied().unwrap_or(0)
    }

    /// `(t, q)` ranks, summing over parity; only meaningful when bigraded.
    pub fn rank_table(&self) -> RankTable {
        RankTable::from_triples(self.ranks.iter().map(|(k, &n)| (k.t, k.q.unwrap_or(0), n)))
    }

    /// Ranks of `H(E^r, d^r)`, computed from the matrices of `d^r`.
    pub fn homology_ranks(&self) -> BTreeMap<SlotKey, usize> {
        let mut out = self.ranks.clone();
        for pd in &self.differentials {
            let k = pd.matrix.rank();
            *out.get_mut(&pd.from).expect("source slot present") -= k;
            *out.get_mut(&pd.to).expect("target slot present") -= k;
        }
        out.retain(|_, n| *n > 0);
        out
    }
}

/// The three page polynomials of a bigraded page.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PagePolynomials {
    /// `E(t, q) = Σ rank · t^i q^j`, keyed by `(i, j)`.
    pub e: BTreeMap<(i64, i64), usize>,
    /// `V(q) = E(−1, q^{1/2})`, as a Laurent polynomial in `q^{1/2}`.
    pub v: Laurent,
    /// `U(δ) = Σ (−1)^i rank · δ^{j/2 − i}`, as a Laurent polynomial in `δ^{1/2}`.
    pub u: Laurent,
}

pub fn page_polynomials(p: &Page) -> Result<PagePolynomials> {
    page_polynomials_of(&p.ranks)
}

pub fn page_polynomials_of(ranks: &BTreeMap<SlotKey, usize>) -> Result<PagePolynomials> {
    let mut e = BTreeMap::new();
    let mut v = Laurent::zero();
    let mut u = Laurent::zero();
    for (k, &n) in ranks {
        let q = k.q.ok_or_else(|| Error::Input("page is not bigraded".into()))?;
        *e.entry((k.t, q)).or_insert(0) += n;
        let sign = if k.t.rem_euclid(2) == 0 { 1 } else { -1 };
        v.add_term(q, sign * n as i64);
        u.add_term(q - 2 * k.t, sign * n as i64);
    }
    Ok(PagePolynomials { e, v, u })
}

/// `|Σ ± rank|`, the sign alternating with δ.
pub fn euler_characteristic_delta(ranks: &RankTable) -> i64 {
    let mut total = 0i64;
    let mut reference: Option<i64> = None;
    for (t, q, n) in ranks.iter() {
        let d2 = q - 2 * t;
        let r = *reference.get_or_insert(d2);
        let sign = if (d2 - r).rem_euclid(4) == 0 { 1 } else { -1 };
        total += sign * n as i64;
    }
    total.abs()
}
