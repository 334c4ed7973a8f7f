use num_traits::{Signed, ToPrimitive};

use crate::diagram::{resolve, Faces, LinkDiagram};
use crate::f2core::SymIntMatrix;
use crate::{Error, Result};

/// A braid presentation obtained by Vogel moves and the Seifert matrix of the
/// canonical Seifert surface of its closure.
#[derive(Clone, Debug)]
pub struct SeifertData {
    /// Number of Seifert circles (braid strands).
    pub circles: usize,
    pub braid: Vec<i32>,
    /// Seifert matrix `V`, of size `2g + (components − 1)`.
    pub v: Vec<Vec<i64>>,
}

impl SeifertData {
    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> SymIntMatrix {
        let n = self.v.len();
        let a = (0..n).map(|i| (0..n).map(|j| self.v[i][j] + self.v[j][i]).collect()).collect();
        SymIntMatrix::new(a).expect("V + Vᵀ is symmetric")
    }
}

const MAX_MOVES: usize = 1000;

/// A half-edge: edge id plus the occurrence it starts from.
type HalfEdge = (usize, usize);

fn forward(d: &LinkDiagram, (e, i): HalfEdge) -> bool {
    d.occurrences(e)[i] == d.tail(e)
}

/// Two boundary edges of one face that lie on different Seifert circles and
/// run the same way around the face.
fn find_defect(d: &LinkDiagram) -> Option<(HalfEdge, HalfEdge)> {
    let faces = Faces::new(d);
    let seif = resolve(d, d.seifert_vertex());
    let mut by_face: Vec<Vec<HalfEdge>> = vec![Vec::new(); faces.count()];
    for e in 0..d.edge_count() {
        for i in 0..2 {
            by_face[faces.left_of[e][i]].push((e, i));
        }
    }
    for hs in &by_face {
        for (k, &h1) in hs.iter().enumerate() {
            for &h2 in &hs[k + 1..] {
                if forward(d, h1) == forward(d, h2) && seif.edge_circle[h1.0] != seif.edge_circle[h2.0] {
                    return Some((h1, h2));
                }
            }
        }
    }
    None
}

/// Reidemeister II finger move pushing edge `h1` over edge `h2` across their
/// common face.
fn finger_move(d: &LinkDiagram, h1: HalfEdge, h2: HalfEdge) -> LinkDiagram {
    let (e1, e2) = (h1.0, h2.0);
    let s1 = d.occurrences(e1)[h1.1];
    let t1 = d.other_end(e1, s1);
    let s2 = d.occurrences(e2)[h2.1];
    let t2 = d.other_end(e2, s2);
    let top = (0..d.edge_count()).map(|e| d.label(e)).max().unwrap_or(0);
    let [a1, b1, c1, a2, b2, c2] = [1, 2, 3, 4, 5, 6].map(|k| top + k);
    let mut pd = d.pd().to_vec();
    pd[s1.0][s1.1 as usize] = a1;
    pd[t1.0][t1.1 as usize] = c1;
    pd[s2.0][s2.1 as usize] = a2;
    pd[t2.0][t2.1 as usize] = c2;
    let (f1, f2) = (forward(d, h1), forward(d, h2));
    let mut dirs = d.over_directions();
    if f2 {
        pd.push([b2, b1, c2, a1]);
        dirs.push(!f1);
        pd.push([a2, b1, b2, c1]);
        dirs.push(f1);
    } else {
        pd.push([c2, a1, b2, b1]);
        dirs.push(f1);
        pd.push([b2, c1, a2, b1]);
        dirs.push(!f1);
    }
    LinkDiagram::with_directions(d.name().map(str::to_string), pd, &dirs).expect("finger move keeps a valid diagram")
}

/// Apply Vogel moves until the Seifert circles are coherently nested.
pub fn vogel_braided(d: &LinkDiagram) -> Result<LinkDiagram> {
    let mut cur = d.clone();
    for _ in 0..MAX_MOVES {
        match find_defect(&cur) {
            None => return Ok(cur),
            Some((h1, h2)) => cur = finger_move(&cur, h1, h2),
        }
    }
    Err(Error::Input("Vogel moves did not terminate".into()))
}

/// Braid word `(strands, word)` whose closure is the given link.
pub fn braid_word(d: &LinkDiagram) -> Result<(usize, Vec<i32>)> {
    if d.is_empty() {
        return Ok((1, Vec::new()));
    }
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let b = vogel_braided(d)?;
    let faces = Faces::new(&b);
    let seif = resolve(&b, b.seifert_vertex());
    let nc = seif.circles.len();

    // Complementary regions of the Seifert circles.
    let mut parent: Vec<usize> = (0..faces.count()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for x in 0..b.len() {
        let (k1, k2) = if b.sign(x) > 0 { (1, 3) } else { (0, 2) };
        let (f, g) = (faces.corner_face[x][k1], faces.corner_face[x][k2]);
        let (rf, rg) = (find(&mut parent, f), find(&mut parent, g));
        parent[rf] = rg;
    }
    let sides: Vec<(usize, usize)> = seif
        .circles
        .iter()
        .map(|c| {
            let e = c[0];
            let i = if b.occurrences(e)[0] == b.tail(e) { 0 } else { 1 };
            (find(&mut parent, faces.left_of[e][i]), find(&mut parent, faces.left_of[e][1 - i]))
        })
        .collect();
    let start = (0..nc)
        .find(|&c| !sides.iter().any(|s| s.1 == sides[c].0))
        .ok_or_else(|| Error::Input("Seifert circles do not form a chain".into()))?;
    let mut chain = vec![start];
    while chain.len() < nc {
        let r = sides[*chain.last().unwrap()].1;
        let next = (0..nc).find(|&c| sides[c].0 == r).ok_or_else(|| Error::Input("Seifert circles do not form a chain".into()))?;
        chain.push(next);
    }
    let mut pos = vec![0; nc];
    for (k, &c) in chain.iter().enumerate() {
        pos[c] = k;
    }
    let gap: Vec<usize> = (0..b.len())
        .map(|x| {
            let (p, q) = (pos[seif.edge_circle[b.edge_at(x, 0)]], pos[seif.edge_circle[b.edge_at(x, 2)]]);
            debug_assert_eq!(p.abs_diff(q), 1);
            p.min(q)
        })
        .collect();
    let crossings_on = |c: usize| -> Vec<usize> { seif.circles[c].iter().map(|&e| b.head(e).0).collect() };

    let mut word: Vec<usize> = crossings_on(chain[0]);
    for k in 1..nc.saturating_sub(1) {
        let seq = crossings_on(chain[k]);
        let first = seq.iter().position(|&x| gap[x] == k - 1).expect("adjacent circles share crossings");
        let mut followers: Vec<Vec<usize>> = vec![Vec::new(); b.len()];
        let mut anchor = seq[first];
        for j in 1..=seq.len() {
            let x = seq[(first + j) % seq.len()];
            if gap[x] == k - 1 {
                anchor = x;
            } else {
                followers[anchor].push(x);
            }
        }
        word = word
            .into_iter()
            .flat_map(|x| {
                let mut v = vec![x];
                if gap[x] == k - 1 {
                    v.extend(followers[x].iter().copied());
                }
                v
            })
            .collect();
    }
    let letters = word.iter().map(|&x| (gap[x] as i32 + 1) * b.sign(x) as i32).collect();
    Ok((nc, letters))
}

/// Seifert matrix of the braid closure (Collins' formula).
pub fn seifert_matrix(d: &LinkDiagram) -> Result<SeifertData> {
    let (strands, word) = braid_word(d)?;
    let gaps = strands.saturating_sub(1);
    // For each gap, the word positions and signs of its letters.
    let by_gap: Vec<Vec<(usize, i32)>> = (0..gaps)
        .map(|g| word.iter().enumerate().filter(|(_, &w)| w.unsigned_abs() as usize == g + 1).map(|(p, &w)| (p, w.signum())).collect())
        .collect();
    // Generators: consecutive letters on one gap, as (first, second) positions and signs.
    let mut gens: Vec<Vec<(usize, usize, i32, i32)>> = Vec::new();
    for letters in &by_gap {
        gens.push(letters.windows(2).map(|w| (w[0].0, w[1].0, w[0].1, w[1].1)).collect());
    }
    let mut offset = vec![0; gaps + 1];
    for g in 0..gaps {
        offset[g + 1] = offset[g] + gens[g].len();
    }
    let n = offset[gaps];
    let mut v = vec![vec![0i64; n]; n];
    for g in 0..gaps {
        for (m, &(_, _, s0, s1)) in gens[g].iter().enumerate() {
            let i = offset[g] + m;
            if s0 == s1 {
                v[i][i] = if s0 > 0 { -1 } else { 1 };
            }
            if m + 1 < gens[g].len() {
                if s1 > 0 {
                    v[i + 1][i] = 1;
                } else {
                    v[i][i + 1] = -1;
                }
            }
        }
        if g + 1 < gaps {
            for (m, &(g0, g1, _, _)) in gens[g].iter().enumerate() {
                for (k, &(h0, h1, _, _)) in gens[g + 1].iter().enumerate() {
                    let (i, j) = (offset[g] + m, offset[g + 1] + k);
                    if h0 < g0 && g0 < h1 && h1 < g1 {
                        v[j][i] = 1;
                    } else if g0 < h0 && h0 < g1 && g1 < h1 {
                        v[j][i] = -1;
                    }
                }
            }
        }
    }
    Ok(SeifertData { circles: strands, braid: word, v })
}

/// `(σ, det, ν)` from the Seifert form, with σ(right-handed trefoil) = +2.
pub fn seifert_signature(d: &LinkDiagram) -> Result<(i64, i64, usize)> {
    let s = seifert_matrix(d)?;
    let (sig, det, nul) = s.symmetrized().signature_det_nullity();
    Ok((-sig, det.abs().to_i64().expect("determinant fits in i64"), nul))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_to_pd;
    use crate::diagram::examples::*;
    use crate::f2core::bareiss_det;
    use crate::oracles::kauffman_jones;

    #[test]
    fn anchors() {
        assert_eq!(seifert_signature(&right_trefoil()).unwrap(), (2, 3, 0));
        assert_eq!(seifert_signature(&left_trefoil()).unwrap(), (-2, 3, 0));
        assert_eq!(seifert_signature(&figure_eight()).unwrap(), (0, 5, 0));
        assert_eq!(seifert_signature(&LinkDiagram::unknot()).unwrap(), (0, 1, 0));
        assert_eq!(seifert_signature(&kinked_unknot()).unwrap(), (0, 1, 0));
    }

    #[test]
    fn positive_trefoil_braid_matrix() {
        let s = seifert_matrix(&braid_to_pd(2, &[1, 1, 1]).unwrap()).unwrap();
        assert_eq!(s.v, vec![vec![-1, 0], vec![1, -1]]);
    }

    #[test]
    fn braid_closure_has_same_jones() {
        for d in [right_trefoil(), figure_eight(), hopf()] {
            let (n, w) = braid_word(&d).unwrap();
            let c = braid_to_pd(n, &w).unwrap();
            assert_eq!(kauffman_jones(&c), kauffman_jones(&d), "{d}");
        }
    }

    #[test]
    fn unimodular_for_knots() {
        for d in [right_trefoil(), figure_eight()] {
            let v = seifert_matrix(&d).unwrap().v;
            let n = v.len();
            let anti: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| v[i][j] - v[j][i]).collect()).collect();
            assert_eq!(bareiss_det(&anti).abs(), 1.into());
        }
    }
}
