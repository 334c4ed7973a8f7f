use std::collections::VecDeque;

use super::LinkDiagram;

/// Faces of the projection, traced with the face on the left.
#[derive(Clone, Debug)]
pub struct Faces {
    /// For each face, the corners `(crossing, k)` it touches, where corner `k`
    /// sits between slots `k` and `k+1`.
    pub corners: Vec<Vec<(usize, u8)>>,
    /// Face of every corner, indexed `[crossing][k]`.
    pub corner_face: Vec<[usize; 4]>,
    /// Face to the left of edge `e` when run from occurrence `i`: `[e][i]`.
    pub left_of: Vec<[usize; 2]>,
}

impl Faces {
    pub fn new(d: &LinkDiagram) -> Faces {
        let ne = d.edge_count();
        let mut left_of = vec![[usize::MAX; 2]; ne];
        let mut corner_face = vec![[usize::MAX; 4]; d.len()];
        let mut corners = Vec::new();
        for e0 in 0..ne {
            for i0 in 0..2 {
                if left_of[e0][i0] != usize::MAX {
                    continue;
                }
                let f = corners.len();
                let mut cs = Vec::new();
                let (mut e, mut i) = (e0, i0);
                while left_of[e][i] == usize::MAX {
                    left_of[e][i] = f;
                    let from = d.occurrences(e)[i];
                    let (y, t) = d.other_end(e, from);
                    let out = (t + 3) % 4;
                    corner_face[y][out as usize] = f;
                    cs.push((y, out));
                    e = d.edge_at(y, out);
                    i = if d.occurrences(e)[0] == (y, out) { 0 } else { 1 };
                }
                corners.push(cs);
            }
        }
        Faces { corners, corner_face, left_of }
    }

    pub fn count(&self) -> usize {
        self.corners.len()
    }
}

/// Two-colouring of the faces; the unbounded (white) face is the one left of
/// the smallest-labelled edge run in its orientation direction.
#[derive(Clone, Debug)]
pub struct Checkerboard {
    pub faces: Faces,
    /// `true` for black faces.
    pub black: Vec<bool>,
}

impl Checkerboard {
    pub fn new(d: &LinkDiagram) -> Checkerboard {
        let faces = Faces::new(d);
        let nf = faces.count();
        let mut color: Vec<Option<bool>> = vec![None; nf];
        let mut adj = vec![Vec::new(); nf];
        for e in 0..d.edge_count() {
            let [f, g] = faces.left_of[e];
            adj[f].push(g);
            adj[g].push(f);
        }
        if nf > 0 {
            let first = if d.occurrences(0)[0] == d.tail(0) { 0 } else { 1 };
            let white = faces.left_of[0][first];
            color[white] = Some(false);
            let mut queue = VecDeque::from([white]);
            while let Some(f) = queue.pop_front() {
                let c = color[f].unwrap();
                for &g in &adj[f] {
                    match color[g] {
                        None => {
                            color[g] = Some(!c);
                            queue.push_back(g);
                        }
                        Some(cg) => assert_ne!(cg, c, "projection is not checkerboard colourable"),
                    }
                }
            }
        }
        let black = color.into_iter().map(|c| c.unwrap_or(false)).collect();
        Checkerboard { faces, black }
    }

    pub fn corner_is_black(&self, x: usize, k: u8) -> bool {
        self.black[self.faces.corner_face[x][k as usize]]
    }

    /// The digit whose smoothing merges the two black corners at `x`.
    /// The 0-smoothing merges corners 1 and 3, the 1-smoothing corners 0 and 2.
    pub fn black_merging_digit(&self, x: usize) -> u8 {
        if self.corner_is_black(x, 1) {
            0
        } else {
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::examples::*;
    use super::*;

    #[test]
    fn euler_characteristic_of_projection() {
        for d in [right_trefoil(), figure_eight(), hopf(), kinked_unknot()] {
            let f = Faces::new(&d);
            assert_eq!(f.count(), d.len() + 2, "{d}");
        }
    }

    #[test]
    fn corners_alternate_colours() {
        let d = figure_eight();
        let cb = Checkerboard::new(&d);
        for x in 0..d.len() {
            let c: Vec<bool> = (0..4).map(|k| cb.corner_is_black(x, k)).collect();
            assert_eq!(c[0], c[2]);
            assert_eq!(c[1], c[3]);
            assert_ne!(c[0], c[1]);
        }
    }
}
