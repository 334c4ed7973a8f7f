use super::{LinkDiagram, Slot, Vertex};

/// Where a circle passes through a resolved crossing site.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SiteVisit {
    pub circle: usize,
    /// Index into the circle's edge sequence of the edge arriving at the site.
    pub position: usize,
    /// Slot the circle arrives through, and slot it leaves through.
    pub enter: u8,
    pub leave: u8,
}

/// The planar 1-manifold `D(I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedDiagram {
    pub vertex: Vertex,
    /// Each circle as the cyclic sequence of edge ids it runs along, starting at
    /// its smallest edge and leaving that edge through its head end.
    pub circles: Vec<Vec<usize>>,
    /// The two passes through every crossing site.
    pub site_visits: Vec<[SiteVisit; 2]>,
    /// Circle id of every edge.
    pub edge_circle: Vec<usize>,
}

impl ResolvedDiagram {
    pub fn circle_count(&self) -> usize {
        self.circles.len().max(1)
    }
}

/// Slot joined to `s` by the smoothing with the given digit.
#[inline]
pub(crate) fn smoothing_partner(digit: u8, s: u8) -> u8 {
    if digit == 0 {
        s ^ 1
    } else {
        3 - s
    }
}

/// Resolve every crossing according to `v` and trace the resulting circles.
pub fn resolve(d: &LinkDiagram, v: Vertex) -> ResolvedDiagram {
    assert_eq!(v.len(), d.len(), "vertex length must equal crossing count");
    let ne = d.edge_count();
    let mut edge_circle = vec![usize::MAX; ne];
    let mut circles: Vec<Vec<usize>> = Vec::new();
    let mut raw_visits: Vec<Vec<(usize, usize, u8, u8)>> = vec![Vec::new(); d.len()];

    for start in 0..ne {
        if edge_circle[start] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut seq = Vec::new();
        let start_from: Slot = d.tail(start);
        let (mut e, mut from) = (start, start_from);
        loop {
            edge_circle[e] = id;
            seq.push(e);
            let (x, t) = d.other_end(e, from);
            let t2 = smoothing_partner(v.digit(x), t);
            raw_visits[x].push((id, seq.len() - 1, t, t2));
            e = d.edge_at(x, t2);
            from = (x, t2);
            if e == start && from == start_from {
                break;
            }
        }
        circles.push(seq);
    }
    // Edges are scanned in label order, so circles come out sorted by minimal label.
    let site_visits = raw_visits
        .into_iter()
        .map(|vs| {
            assert_eq!(vs.len(), 2, "each site is traversed exactly twice");
            let mk = |(circle, position, enter, leave)| SiteVisit { circle, position, enter, leave };
            [mk(vs[0]), mk(vs[1])]
        })
        .collect();
    ResolvedDiagram { vertex: v, circles, site_visits, edge_circle }
}

#[cfg(test)]
mod tests {
    use super::super::examples::*;
    use super::*;

    #[test]
    fn trefoil_circle_counts() {
        let d = right_trefoil();
        let counts: Vec<usize> = (0..8u64).map(|b| resolve(&d, Vertex::new(3, b)).circle_count()).collect();
        // Oriented resolution has two Seifert circles; the all-one state has three.
        assert_eq!(counts[0], 2);
        assert_eq!(counts[7], 3);
        assert_eq!(resolve(&d, Vertex::parse("010").unwrap()).circle_count(), 1);
        for b in 0..8u64 {
            for x in 0..3 {
                if b >> x & 1 == 0 {
                    let diff = counts[b as usize] as i64 - counts[(b | 1 << x) as usize] as i64;
                    assert_eq!(diff.abs(), 1);
                }
            }
        }
    }

    #[test]
    fn unknot_has_one_circle() {
        let d = LinkDiagram::unknot();
        assert_eq!(resolve(&d, Vertex::zero(0)).circle_count(), 1);
        let k = kinked_unknot();
        let c0 = resolve(&k, Vertex::parse("0").unwrap()).circle_count();
        let c1 = resolve(&k, Vertex::parse("1").unwrap()).circle_count();
        assert_eq!(c0 + c1, 3);
    }

    #[test]
    fn relabeling_crossings_preserves_circles() {
        let d = figure_eight();
        let mut pd = d.pd().to_vec();
        pd.reverse();
        let r = LinkDiagram::new(pd).unwrap();
        for b in 0..16u64 {
            let rb = (0..4).filter(|&i| b >> i & 1 == 1).fold(0u64, |acc, i| acc | 1 << (3 - i));
            let mut c1: Vec<Vec<u32>> = resolve(&d, Vertex::new(4, b))
                .circles
                .iter()
                .map(|c| {
                    let mut l: Vec<u32> = c.iter().map(|&e| d.label(e)).collect();
                    l.sort();
                    l
                })
                .collect();
            let mut c2: Vec<Vec<u32>> = resolve(&r, Vertex::new(4, rb))
                .circles
                .iter()
                .map(|c| {
                    let mut l: Vec<u32> = c.iter().map(|&e| r.label(e)).collect();
                    l.sort();
                    l
                })
                .collect();
            c1.sort();
            c2.sort();
            assert_eq!(c1, c2);
        }
    }
}
