use super::LinkDiagram;
use crate::{Error, Result};

/// PD code of the closure of a braid word on `strands` strands. Letter `k > 0`
/// is the positive generator σ_k, `−k` its inverse. Every strand must take
/// part in some crossing.
pub fn braid_to_pd(strands: usize, word: &[i32]) -> Result<LinkDiagram> {
    let mut next = 0u32;
    let mut fresh = || {
        next += 1;
        next
    };
    let start: Vec<u32> = (0..strands).map(|_| fresh()).collect();
    let mut cur = start.clone();
    let mut pd = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(Error::Input(format!("generator {g} invalid on {strands} strands")));
        }
        let (bl, br) = (cur[i - 1], cur[i]);
        let (tl, tr) = (fresh(), fresh());
        pd.push(if g > 0 { [br, tr, tl, bl] } else { [bl, br, tr, tl] });
        cur[i - 1] = tl;
        cur[i] = tr;
    }
    // Close up: identify each top end with the bottom end of the same strand.
    let mut rename: Vec<u32> = (0..=next).collect();
    for (s, &top) in cur.iter().enumerate() {
        if top == start[s] {
            return Err(Error::Input(format!("strand {} has no crossings", s + 1)));
        }
        rename[top as usize] = start[s];
    }
    let pd = pd.into_iter().map(|c| c.map(|e| rename[e as usize])).collect();
    Ok(LinkDiagram::new(pd)?.relabeled())
}

/// Braid word for the torus link T(p, q) as the closure of (σ_1 ⋯ σ_{p−1})^q.
pub fn torus_braid(p: usize, q: usize) -> Vec<i32> {
    (0..q).flat_map(|_| 1..p as i32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_from_braid() {
        let d = braid_to_pd(2, &[1, 1, 1]).unwrap();
        assert_eq!(d.crossing_signs(), (3, 0));
        assert_eq!(d.component_count(), 1);
        let m = braid_to_pd(2, &[-1, -1, -1]).unwrap();
        assert_eq!(m.crossing_signs(), (0, 3));
        let f8 = braid_to_pd(3, &[1, -2, 1, -2]).unwrap();
        assert_eq!(f8.crossing_signs(), (2, 2));
        assert!(braid_to_pd(3, &[1, 1]).is_err());
    }

    #[test]
    fn torus_knots() {
        let t35 = braid_to_pd(3, &torus_braid(3, 5)).unwrap();
        assert_eq!(t35.len(), 10);
        assert_eq!(t35.component_count(), 1);
        assert_eq!(t35.crossing_signs(), (10, 0));
        assert_eq!(braid_to_pd(3, &torus_braid(3, 3)).unwrap().component_count(), 3);
    }
}
