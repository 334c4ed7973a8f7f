use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::poly::Laurent;

/// Homology ranks indexed by `(t, q)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RankTable {
    ranks: BTreeMap<(i64, i64), usize>,
}

#[derive(Serialize, Deserialize)]
struct RankEntry {
    t: i64,
    q: i64,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct RankJson {
    ranks: Vec<RankEntry>,
}

impl RankTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_triples(it: impl IntoIterator<Item = (i64, i64, usize)>) -> Self {
        let mut r = Self::new();
        for (t, q, n) in it {
            r.add(t, q, n);
        }
        r
    }

    pub fn add(&mut self, t: i64, q: i64, n: usize) {
        if n > 0 {
            *self.ranks.entry((t, q)).or_insert(0) += n;
        }
    }

    pub fn get(&self, t: i64, q: i64) -> usize {
        self.ranks.get(&(t, q)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, usize)> + '_ {
        self.ranks.iter().map(|(&(t, q), &n)| (t, q, n))
    }

    pub fn total(&self) -> usize {
        self.ranks.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Doubled δ-grading `2δ = q − 2t` of every occupied slot.
    pub fn delta2_support(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.iter().map(|(t, q, _)| q - 2 * t).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Graded Euler characteristic `Σ (−1)^t rank · s^q`, where `s = q^{1/2}`.
    pub fn euler_polynomial(&self) -> Laurent {
        let mut p = Laurent::zero();
        for (t, q, n) in self.iter() {
            p.add_term(q, if t.rem_euclid(2) == 0 { n as i64 } else { -(n as i64) });
        }
        p
    }

    /// Shift every quantum grading by `k`.
    pub fn shift_q(&self, k: i64) -> RankTable {
        RankTable::from_triples(self.iter().map(|(t, q, n)| (t, q + k, n)))
    }

    pub fn to_json(&self) -> String {
        let j = RankJson { ranks: self.iter().map(|(t, q, rank)| RankEntry { t, q, rank }).collect() };
        serde_json::to_string(&j).expect("rank tables serialize")
    }

    pub fn from_json(s: &str) -> crate::Result<RankTable> {
        let j: RankJson = serde_json::from_str(s).map_err(|e| crate::Error::Input(e.to_string()))?;
        Ok(RankTable::from_triples(j.ranks.into_iter().map(|e| (e.t, e.q, e.rank))))
    }

    /// Aligned text table: one row per `q`, one column per `t`.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return "(zero)\n".to_string();
        }
        let ts: Vec<i64> = {
            let mut v: Vec<i64> = self.iter().map(|(t, _, _)| t).collect();
            v.sort();
            v.dedup();
            (v[0]..=*v.last().unwrap()).collect()
        };
        let mut qs: Vec<i64> = self.iter().map(|(_, q, _)| q).collect();
        qs.sort();
        qs.dedup();
        let mut s = String::new();
        let _ = write!(s, "{:>6} |", "q\\t");
        for t in &ts {
            let _ = write!(s, "{t:>4}");
        }
        s.push('\n');
        let _ = writeln!(s, "{}", "-".repeat(8 + 4 * ts.len()));
        for q in qs.iter().rev() {
            let _ = write!(s, "{q:>6} |");
            for &t in &ts {
                let n = self.get(t, *q);
                if n == 0 {
                    let _ = write!(s, "{:>4}", ".");
                } else {
                    let _ = write!(s, "{n:>4}");
                }
            }
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_and_euler() {
        let r = RankTable::from_triples([(0, 2, 1), (2, 6, 1), (3, 8, 1)]);
        assert_eq!(RankTable::from_json(&r.to_json()).unwrap(), r);
        assert_eq!(r.euler_polynomial(), Laurent::from_pairs(&[(2, 1), (6, 1), (8, -1)]));
        assert_eq!(r.delta2_support(), vec![2]);
        assert!(r.to_text().contains("q\\t"));
    }
}
