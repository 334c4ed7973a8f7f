//! Hypersurfaces in the surgery cobordism of a product lattice and which
//! pairs of them are disjoint.
//!
//! The disjointness rules are the geometric ones, stated without reference to
//! any graph. Duality with the tubings of [`graph_of_lattice`] is then a
//! checked property rather than a definition.
use std::collections::HashMap;

use serde::Serialize;

use super::graph::{clique_size_counts, find_isomorphism};
use super::{graph_of_lattice, ordered, rho, tail_nodes, LatticeVertex, ProductLattice};
use crate::f2core::BitVec;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Surface {
    /// `Y_I` for an internal vertex `I`.
    Internal(LatticeVertex),
    /// `S_i`, the auxiliary sphere of a `{0, 1, ∞}` factor.
    Leaf(usize),
    /// `S^j_k` between handles `j < k` of a single chain.
    Between(usize, usize),
}

#[derive(Clone, Debug)]
pub struct HypersurfaceCatalog {
    pub lattice: ProductLattice,
    pub surfaces: Vec<Surface>,
    /// Number of intersection components for each pair; zero means disjoint.
    pub meets: Vec<Vec<usize>>,
}

impl HypersurfaceCatalog {
    pub fn len(&self) -> usize {
        self.surfaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.surfaces.is_empty()
    }

    pub fn disjoint(&self, a: usize, b: usize) -> bool {
        self.meets[a][b] == 0
    }

    /// Disjointness graph as bit rows.
    pub fn disjointness(&self) -> Vec<BitVec> {
        let n = self.len();
        (0..n).map(|a| BitVec::from_indices(n, (0..n).filter(|&b| b != a && self.disjoint(a, b)))).collect()
    }

    fn single_chain(&self) -> bool {
        self.lattice.len() == 1
    }

    /// The tube of `graph_of_lattice` matched with surface `s`.
    pub fn tube(&self, s: &Surface) -> u32 {
        let tails = tail_nodes(&self.lattice);
        match s {
            Surface::Internal(v) if self.single_chain() => (1u32 << v[0]) - 1,
            Surface::Internal(v) => v.iter().enumerate().fold(0u32, |acc, (i, &d)| {
                let mut acc = acc;
                if d >= 1 {
                    acc |= 1 << i;
                }
                if d == 2 {
                    acc |= 1 << tails[i][0];
                }
                acc
            }),
            Surface::Leaf(i) => 1 << tails[*i][0],
            // Nodes v_{j+1}, …, v_k of the path v_1, …, v_n.
            Surface::Between(j, k) => ((1u32 << k) - 1) & !((1u32 << j) - 1),
        }
    }
}

/// Intervals `{j1..k1}` and `{j2..k2}` share a point but neither contains the other.
fn overlap_not_nested(a: (usize, usize), b: (usize, usize)) -> bool {
    let overlap = a.0 <= b.1 && b.0 <= a.1;
    let nested = (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1);
    overlap && !nested
}

fn meets(a: &Surface, b: &Surface) -> usize {
    use Surface::*;
    match (a, b) {
        (Internal(i), Internal(j)) => rho(i, j).expect("same lattice"),
        (Internal(i), Leaf(f)) | (Leaf(f), Internal(i)) => usize::from(i[*f] == 1),
        (Leaf(_), Leaf(_)) => 0,
        (Internal(i), Between(j, k)) | (Between(j, k), Internal(i)) => {
            let i = i[0] as usize;
            usize::from(*j <= i && i < *k)
        }
        (Between(j1, k1), Between(j2, k2)) => usize::from(overlap_not_nested((*j1, *k1), (*j2, *k2))),
        _ => unreachable!("leaf and chain surfaces never share a lattice"),
    }
}

/// Internal and auxiliary hypersurfaces with their intersection data.
///
/// Lattices whose factors all have length one or two use the `S_i`; a single
/// chain of any length uses the `S^j_k`. Mixing a longer chain with other
/// factors is rejected.
pub fn catalog(lat: &ProductLattice) -> Result<HypersurfaceCatalog> {
    let mut surfaces: Vec<Surface> = lat.internal_vertices().into_iter().map(Surface::Internal).collect();
    if lat.len() == 1 {
        let n = lat.lengths()[0] as usize;
        for j in 1..=n {
            for k in j + 1..=n {
                surfaces.push(Surface::Between(j, k));
            }
        }
    } else if lat.lengths().iter().all(|&n| n <= 2) {
        surfaces.extend(lat.lengths().iter().enumerate().filter(|&(_, &n)| n == 2).map(|(i, _)| Surface::Leaf(i)));
    } else {
        return Err(Error::UnsupportedLattice(format!("{lat}: chains longer than two are only supported on their own")));
    }
    let meets = surfaces
        .iter()
        .enumerate()
        .map(|(a, s)| surfaces.iter().enumerate().map(|(b, t)| if a == b { 1 } else { meets(s, t) }).collect())
        .collect();
    Ok(HypersurfaceCatalog { lattice: lat.clone(), surfaces, meets })
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub lattice: String,
    pub surfaces: usize,
    pub tubes: usize,
    /// The explicit surface → tube map is a bijection carrying disjointness
    /// to compatibility.
    pub bijection: bool,
    /// An isomorphism of the two graphs was found by search alone.
    pub isomorphism: bool,
    /// Internal pairs meet in exactly `ρ` components, ordered pairs never meet.
    pub rho_consistent: bool,
    pub clique_counts: Vec<u128>,
    pub tubing_counts: Vec<u128>,
}

impl DualityReport {
    pub fn ok(&self) -> bool {
        self.bijection && self.isomorphism && self.rho_consistent && self.clique_counts == self.tubing_counts
    }
}

/// Compare cliques of pairwise-disjoint hypersurfaces with tubings.
///
/// Both complexes are flag complexes, so they are isomorphic exactly when
/// their 1-skeleta are; the search works on the graphs and the clique and
/// tubing counts by size are compared separately.
pub fn check_duality(lat: &ProductLattice) -> Result<DualityReport> {
    let cat = catalog(lat)?;
    let g = graph_of_lattice(lat);
    let tubes = g.tubes();
    let index: HashMap<u32, usize> = tubes.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let image: Vec<Option<usize>> = cat.surfaces.iter().map(|s| index.get(&cat.tube(s)).copied()).collect();
    let mut hit = vec![false; tubes.len()];
    let mut bijection = tubes.len() == cat.len();
    for (a, img) in image.iter().enumerate() {
        match img {
            Some(t) if !hit[*t] => hit[*t] = true,
            _ => bijection = false,
        }
        if !bijection {
            break;
        }
        for (b, other) in image.iter().enumerate().take(a) {
            let (ta, tb) = (tubes[img.unwrap()], tubes[other.unwrap()]);
            if cat.disjoint(a, b) != g.compatible(ta, tb) {
                bijection = false;
            }
        }
    }
    let rho_consistent = cat.surfaces.iter().enumerate().all(|(a, s)| {
        cat.surfaces.iter().enumerate().all(|(b, t)| match (s, t) {
            (Surface::Internal(i), Surface::Internal(j)) if a != b => {
                cat.meets[a][b] == rho(i, j).unwrap() && (cat.meets[a][b] == 0) == ordered(i, j)
            }
            _ => true,
        })
    });
    let disjoint = cat.disjointness();
    let compat = g.compatibility(&tubes);
    let isomorphism = find_isomorphism(&disjoint, &compat).is_some();
    let clique_counts = clique_size_counts(&disjoint);
    let tubing_counts = clique_size_counts(&compat);
    Ok(DualityReport {
        lattice: lat.to_string(),
        surfaces: cat.len(),
        tubes: tubes.len(),
        bijection,
        isomorphism,
        rho_consistent,
        clique_counts,
        tubing_counts,
    })
}

/// Lattices covered by the duality check: factors of length one or two with
/// at most six graph nodes, and single chains of length up to six.
pub fn supported_lattices() -> Vec<ProductLattice> {
    let mut out = Vec::new();
    for l in 1..=6usize {
        for twos in 0..=l {
            if l + twos <= 6 && !(l == 1 && twos == 1) {
                let mut lengths = vec![2u8; twos];
                lengths.extend(std::iter::repeat_n(1u8, l - twos));
                out.push(ProductLattice::new(lengths).expect("valid"));
            }
        }
    }
    out.extend((2..=6).map(ProductLattice::chain));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_of_three() {
        let cat = catalog(&ProductLattice::cube(3)).unwrap();
        assert_eq!(cat.len(), 6);
        let r = check_duality(&ProductLattice::cube(3)).unwrap();
        assert!(r.ok(), "{r:?}");
        // Hexagon: six edges and six vertices.
        assert_eq!(r.clique_counts, vec![1, 6, 6]);
    }

    #[test]
    fn surgery_square_is_k5() {
        let cat = catalog(&ProductLattice::surgery(2)).unwrap();
        let internal = cat.surfaces.iter().filter(|s| matches!(s, Surface::Internal(_))).count();
        assert_eq!((internal, cat.len() - internal), (7, 2));
        let r = check_duality(&ProductLattice::surgery(2)).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.tubing_counts, vec![1, 9, 21, 14]);
    }

    #[test]
    fn chain_of_three() {
        let cat = catalog(&ProductLattice::chain(3)).unwrap();
        let y1 = cat.surfaces.iter().position(|s| *s == Surface::Internal(vec![1])).unwrap();
        for (b, s) in cat.surfaces.iter().enumerate() {
            if let Surface::Between(j, k) = s {
                assert_eq!(!cat.disjoint(y1, b), *j <= 1 && 1 < *k);
            }
        }
        assert_eq!(cat.len(), 2 + 3);
        assert!(check_duality(&ProductLattice::chain(3)).unwrap().ok());
    }

    #[test]
    fn long_chain_in_product_is_rejected() {
        let lat = ProductLattice::new(vec![3, 1]).unwrap();
        assert!(matches!(catalog(&lat), Err(Error::UnsupportedLattice(_))));
    }
}
