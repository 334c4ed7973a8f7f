//! The bundled diagram corpus: prime knots through nine crossings and a handful
//! of small links, with reference invariants.

use serde::Deserialize;

use crate::diagram::LinkDiagram;

static KNOTS: &str = include_str!("../data/knots.json");
static LINKS: &str = include_str!("../data/links.json");

#[derive(Clone, Debug, Deserialize)]
pub struct KnotEntry {
    pub name: String,
    pub pd: Vec<[u32; 4]>,
    /// Signature with the right-handed trefoil at +2.
    pub sigma: i64,
    pub det: i64,
    pub alternating: bool,
    /// Reduced mod-2 Khovanov ranks as `(t, q, rank)`.
    pub kh_reduced_mod2: Vec<(i64, i64, usize)>,
    /// Jones polynomial as `(exponent of t, coefficient)`.
    pub jones: Vec<(i64, i64)>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct LinkEntry {
    pub name: String,
    pub pd: Vec<[u32; 4]>,
    pub sigma: i64,
    pub det: i64,
    pub nullity: usize,
}

impl KnotEntry {
    pub fn diagram(&self) -> LinkDiagram {
        LinkDiagram::named(Some(self.name.clone()), self.pd.clone()).expect("corpus PD codes are valid")
    }
}

impl LinkEntry {
    pub fn diagram(&self) -> LinkDiagram {
        LinkDiagram::named(Some(self.name.clone()), self.pd.clone()).expect("corpus PD codes are valid")
    }
}

fn parse_lines<T: for<'de> Deserialize<'de>>(text: &str) -> Vec<T> {
    let v: serde_json::Value = serde_json::from_str(text).expect("corpus is valid JSON");
    serde_json::from_value(v).expect("corpus entries match schema")
}

pub fn knots() -> Vec<KnotEntry> {
    parse_lines(KNOTS)
}

pub fn links() -> Vec<LinkEntry> {
    parse_lines(LINKS)
}

pub fn knot(name: &str) -> Option<KnotEntry> {
    knots().into_iter().find(|k| k.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_loads() {
        let ks = knots();
        assert_eq!(ks.len(), 84);
        assert!(ks.iter().all(|k| k.diagram().component_count() == 1));
        assert_eq!(knot("3_1").unwrap().diagram().crossing_signs(), (3, 0));
        assert!(links().iter().all(|l| l.diagram().component_count() >= 2));
    }
}
