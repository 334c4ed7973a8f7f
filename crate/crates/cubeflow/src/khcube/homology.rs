use std::collections::BTreeMap;

use super::{KhComplex, RankTable};
use crate::f2core::ext::dedup_mod2;
use crate::par::{self, Parallelism};

/// Binomial coefficients `C(n, k)` for `n, k < 64`.
fn binomials() -> Vec<[u64; 64]> {
    let mut c = vec![[0u64; 64]; 64];
    for n in 0..64 {
        c[n][0] = 1;
        for k in 1..=n {
            c[n][k] = c[n - 1][k - 1].saturating_add(if k < n { c[n - 1][k] } else { 0 });
        }
    }
    c
}

/// Position of `mask` among masks of the same popcount, in colex order.
#[inline]
fn colex_rank(binom: &[[u64; 64]], mask: u64) -> u64 {
    let mut r = 0;
    let mut m = mask;
    let mut i = 1;
    while m != 0 {
        let p = m.trailing_zeros() as usize;
        r += binom[p][i];
        m &= m - 1;
        i += 1;
    }
    r
}

/// All `k`-subsets of `n` bits in colex order (Gosper's hack).
fn subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let limit = 1u64 << n;
    let mut cur = Some(first);
    std::iter::from_fn(move || {
        let x = cur?;
        if k > n {
            cur = None;
            return None;
        }
        cur = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            let next = (((r ^ x) >> 2) / c) | r;
            (next < limit).then_some(next)
        };
        Some(x)
    })
}

/// Symmetric difference of two sorted vectors.
fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// One `(t, q)` block: vertices contributing degree-`r` monomials, in order.
#[derive(Default, Clone)]
struct Block {
    members: Vec<(u64, usize)>,
    size: usize,
}

/// Rank of `∂̂` restricted to `(t, q) → (t+1, q)` for every `t` of one q-line,
/// by sparse column reduction. Pivot rows found for `d_t` are columns of
/// `d_{t+1}` known to reduce to zero, so they are skipped ("clearing").
fn line_ranks(
    k: &KhComplex,
    binom: &[[u64; 64]],
    line: &BTreeMap<i64, Block>,
    block_offset: &dyn Fn(u64, usize) -> usize,
) -> BTreeMap<i64, usize> {
    let mut ranks = BTreeMap::new();
    let mut cleared: Vec<bool> = Vec::new();
    let mut prev_t: Option<i64> = None;
    for (&t, block) in line {
        if prev_t != Some(t - 1) {
            cleared = vec![false; block.size];
        }
        prev_t = Some(t);
        let Some(target) = line.get(&(t + 1)) else {
            cleared = Vec::new();
            continue;
        };
        let mut pivot_of: Vec<u32> = vec![u32::MAX; target.size];
        let mut stored: Vec<Vec<u32>> = Vec::new();
        let mut idx = 0usize;
        let mut buf = Vec::new();
        for &(v, r) in &block.members {
            let maps = k.vertex_maps(v);
            for mask in subsets(k.rank_v(v), r) {
                let here = idx;
                idx += 1;
                if cleared.get(here).copied().unwrap_or(false) {
                    continue;
                }
                buf.clear();
                KhComplex::apply_with(&maps, mask, &mut buf);
                let mut col: Vec<u32> =
                    buf.iter().map(|&(w, m)| (block_offset(w, m.count_ones() as usize) + colex_rank(binom, m) as usize) as u32).collect();
                col.sort_unstable();
                dedup_mod2(&mut col);
                while let Some(&low) = col.last() {
                    let p = pivot_of[low as usize];
                    if p == u32::MAX {
                        break;
                    }
                    col = xor_sorted(&col, &stored[p as usize]);
                }
                if let Some(&low) = col.last() {
                    pivot_of[low as usize] = stored.len() as u32;
                    stored.push(col);
                }
            }
        }
        ranks.insert(t, stored.len());
        cleared = vec![false; target.size];
        for (row, &p) in pivot_of.iter().enumerate() {
            if p != u32::MAX {
                cleared[row] = true;
            }
        }
    }
    ranks
}

/// Reduced Khovanov homology: ranks of `H(Ĉ(D), ∂̂)` per `(t, q)`.
pub fn homology(k: &KhComplex, mode: Parallelism) -> RankTable {
    let binom = binomials();
    let nv = k.vertex_count();
    // Group monomials into (t, q) blocks and record each vertex's offset per degree.
    let mut lines: BTreeMap<i64, BTreeMap<i64, Block>> = BTreeMap::new();
    let mut offs: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for v in 0..nv as u64 {
        let n = k.rank_v(v);
        for r in 0..=n {
            let g = k.grading(v, if r == 0 { 0 } else { (1u64 << r) - 1 });
            let b = lines.entry(g.q).or_default().entry(g.t).or_default();
            offs[v as usize].push(b.size);
            b.members.push((v, r));
            b.size += binom[n][r] as usize;
        }
    }
    let block_offset = |v: u64, r: usize| offs[v as usize][r];
    let qs: Vec<i64> = lines.keys().copied().collect();
    let per_q = par::map_slice(mode, &qs, |q| {
        let line = &lines[q];
        let ranks = line_ranks(k, &binom, line, &block_offset);
        line.iter()
            .map(|(&t, b)| {
                let out = ranks.get(&t).copied().unwrap_or(0);
                let inc = ranks.get(&(t - 1)).copied().unwrap_or(0);
                (t, *q, b.size - out - inc)
            })
            .collect::<Vec<_>>()
    });
    RankTable::from_triples(per_q.into_iter().flatten())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_enumeration_matches_rank() {
        let binom = binomials();
        for n in 0..7 {
            for k in 0..=n {
                let all: Vec<u64> = subsets(n, k).collect();
                assert_eq!(all.len() as u64, binom[n][k]);
                for (i, &m) in all.iter().enumerate() {
                    assert_eq!(m.count_ones() as usize, k);
                    assert_eq!(colex_rank(&binom, m), i as u64);
                }
            }
        }
    }

    #[test]
    fn xor_of_sorted() {
        assert_eq!(xor_sorted(&[1, 3, 5], &[3, 4]), vec![1, 4, 5]);
    }
}
