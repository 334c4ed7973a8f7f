//! Hand transcriptions of the explicit maps and relations for the smallest
//! lattices, compared word for word against the generated expansions.
//!
//! Transcriptions are kept verbatim in a macro-like shorthand; known slips in
//! the printed lists are corrected through [`errata`], so that every departure
//! from the printed text is listed in one place.
//!
//! Shorthand: a word is a product of tokens, last-applied first. A token is a
//! family, two type letters and an optional label, e.g. `muo(b)` or `gbsu`.
//! Families `d`/`e` are the cylinder maps `∂`/`ē` at the current vertex;
//! `m`/`n` run along an edge, `h`/`k` across a square, `g`/`gb` across a
//! cube (the second of each pair is the barred, boundary version). Unlabelled
//! tokens span the whole interval.

use serde::Serialize;

use super::{FormalSum, GeneratorKind, IntervalGenerator, Node, PathAlgebra, Word};
use crate::lattice::ProductLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AppendixLattice {
    Point,
    Interval,
    Square,
    Cube,
    SurgeryChain,
}

impl AppendixLattice {
    pub const ALL: [AppendixLattice; 5] =
        [AppendixLattice::Point, AppendixLattice::Interval, AppendixLattice::Square, AppendixLattice::Cube, AppendixLattice::SurgeryChain];

    pub fn lattice(self) -> ProductLattice {
        match self {
            AppendixLattice::Point | AppendixLattice::Interval => ProductLattice::cube(1),
            AppendixLattice::Square => ProductLattice::cube(2),
            AppendixLattice::Cube => ProductLattice::cube(3),
            AppendixLattice::SurgeryChain => ProductLattice::surgery(1),
        }
    }

    /// The interval whose maps are written out.
    pub fn endpoints(self) -> (&'static str, &'static str) {
        match self {
            AppendixLattice::Point => ("0", "0"),
            AppendixLattice::Interval => ("0", "1"),
            AppendixLattice::Square => ("00", "11"),
            AppendixLattice::Cube => ("000", "111"),
            AppendixLattice::SurgeryChain => ("0", "2"),
        }
    }

    /// Match a lattice given on the command line; a single `{0,1}` factor is
    /// the interval, not the point.
    pub fn from_lattice(lat: &ProductLattice) -> Option<AppendixLattice> {
        match lat.lengths() {
            [1] => Some(AppendixLattice::Interval),
            [1, 1] => Some(AppendixLattice::Square),
            [1, 1, 1] => Some(AppendixLattice::Cube),
            [2] => Some(AppendixLattice::SurgeryChain),
            _ => None,
        }
    }

    fn map_symbol(self) -> &'static str {
        match self {
            AppendixLattice::Point => "∂",
            AppendixLattice::Interval => "m̌",
            AppendixLattice::Square | AppendixLattice::SurgeryChain => "Ȟ",
            AppendixLattice::Cube => "Ǧ",
        }
    }

    fn relation_letter(self) -> &'static str {
        match self {
            AppendixLattice::Point => "A",
            AppendixLattice::Interval => "B",
            AppendixLattice::Square | AppendixLattice::SurgeryChain => "E",
            AppendixLattice::Cube => "F",
        }
    }

    /// Endpoints of a labelled edge (`m`, `n`) or square (`h`, `k`).
    fn label(self, face: bool, label: &str) -> Option<(&'static str, &'static str)> {
        let pair = match (self, face, label) {
            (AppendixLattice::Square, false, "a") => ("00", "01"),
            (AppendixLattice::Square, false, "b") => ("01", "11"),
            (AppendixLattice::Square, false, "c") => ("00", "10"),
            (AppendixLattice::Square, false, "d") => ("10", "11"),
            (AppendixLattice::SurgeryChain, false, "k") => ("0", "1"),
            (AppendixLattice::SurgeryChain, false, "l") => ("1", "2"),
            (AppendixLattice::Cube, false, l) => match l {
                "a" => ("000", "001"),
                "b" => ("000", "010"),
                "c" => ("000", "100"),
                "d" => ("001", "011"),
                "e" => ("001", "101"),
                "f" => ("010", "011"),
                "g" => ("010", "110"),
                "h" => ("100", "101"),
                "i" => ("100", "110"),
                "j" => ("011", "111"),
                "k" => ("101", "111"),
                "l" => ("110", "111"),
                _ => return None,
            },
            (AppendixLattice::Cube, true, l) => match l {
                "a" => ("000", "011"),
                "b" => ("000", "101"),
                "c" => ("000", "110"),
                "d" => ("001", "111"),
                "e" => ("010", "111"),
                "f" => ("100", "111"),
                _ => return None,
            },
            _ => return None,
        };
        Some(pair)
    }
}

/// Which generated expansion a transcription is compared with.
#[derive(Clone, Copy, Debug)]
enum Source {
    /// An entry of the map `Ď(I, J)`.
    Map(Node, Node),
    /// The relation of one generator kind.
    Relation(GeneratorKind),
    /// An entry of `Q̌(I, J)`.
    Q(Node, Node),
}

struct Transcription {
    lattice: AppendixLattice,
    source: Source,
    text: &'static str,
}

const fn map(lattice: AppendixLattice, s: Node, t: Node, text: &'static str) -> Transcription {
    Transcription { lattice, source: Source::Map(s, t), text }
}

const fn rel(lattice: AppendixLattice, kind: GeneratorKind, text: &'static str) -> Transcription {
    Transcription { lattice, source: Source::Relation(kind), text }
}

use AppendixLattice::{Cube, Interval, Point, Square, SurgeryChain};
use GeneratorKind::*;
use Node::{O, S};

const TRANSCRIPTIONS: &[Transcription] = &[
    map(Point, O, O, "doo"),
    map(Point, O, S, "dos"),
    map(Point, S, O, "duo esu"),
    map(Point, S, S, "ess + dus esu"),
    rel(Point, Doo, "doo doo + duo esu dos"),
    rel(Point, Dos, "dos doo + ess dos + dus esu dos"),
    rel(Point, Duo, "doo duo + duo euu + duo esu dus"),
    rel(Point, Dus, "eus + dos duo + ess dus + dus euu + dus esu dus"),
    rel(Point, Bss, "ess ess + eus esu"),
    rel(Point, Bsu, "esu ess + euu esu"),
    rel(Point, Bus, "ess eus + eus euu"),
    rel(Point, Buu, "esu eus + euu euu"),
    map(Interval, O, O, "moo"),
    map(Interval, O, S, "mos"),
    map(Interval, S, O, "muo esu + duo nsu"),
    map(Interval, S, S, "nss + mus esu + dus nsu"),
    rel(Interval, Doo, "moo doo + doo moo + duo esu mos + duo nsu dos + muo esu dos"),
    rel(Interval, Dos, "mos doo + dos moo + mus esu dos + dus nsu dos + dus esu mos + nss dos + ess mos"),
    rel(Interval, Duo, "moo duo + doo muo + muo esu dus + duo nsu dus + duo esu mus + muo euu + duo nuu"),
    rel(Interval, Dus, "mos duo + dos muo + mus esu dus + dus nsu dus + dus esu mus + mus euu + dus nuu + nss dus + ess mus + nus"),
    rel(Interval, Bss, "nss ess + ess nss + nus esu + eus nsu"),
    rel(Interval, Bsu, "nsu ess + esu nss + nuu esu + euu nsu"),
    rel(Interval, Bus, "nss eus + ess nus + nus euu + eus nuu"),
    rel(Interval, Buu, "nsu eus + esu nus + nuu euu + euu nuu"),
    map(Square, O, O, "hoo"),
    map(Square, O, S, "hos"),
    map(Square, S, O, "huo esu + duo ksu + muo(b) nsu(a) + muo(d) nsu(c)"),
    map(Square, S, S, "kss + hus esu + dus ksu + mus(b) nsu(a) + mus(d) nsu(c)"),
    rel(
        Square,
        Doo,
        "hoo doo + doo hoo + duo esu hos + duo ksu dos + huo esu dos \
         + muo(b) nsu(a) dos + muo(d) nsu(c) dos \
         + moo(b) moo(a) + muo(b) esu mos(a) + duo nsu(b) mos(a) \
         + moo(d) moo(c) + muo(d) esu mos(c) + duo nsu(d) mos(c)",
    ),
    rel(
        Square,
        Dos,
        "hos doo + dos hoo + hus esu dos + dus ksu dos + dus esu hos + kss dos + ess hos \
         + mus(b) nsu(a) dos + mus(d) nsu(c) dos \
         + mos(b) moo(a) + mus(d) esu mos(c) + dus nsu(d) mos(c) \
         + mos(d) moo(c) + mus(d) esu mos(c) + dus nsu(d) mos(c)",
    ),
    rel(
        Square,
        Duo,
        "hoo duo + doo huo + huo esu dus + duo ksu dus + duo esu hus + huo euu + duo kuu \
         + muo(b) nsu(a) dus + muo(d) nsu(c) dus \
         + moo(b) muo(a) + muo(b) esu mus(a) + duo nsu(b) mus(a) + muo(b) nuu(a) \
         + moo(d) muo(c) + muo(d) esu mus(c) + duo nsu(d) mus(c) + muo(d) nuu(c)",
    ),
    rel(
        Square,
        Dus,
        "hos duo + dos huo + hus esu dus + dus ksu dus + dus esu hus + hus euu + dus kuu + kss dus + ess hus + kus \
         + mus(b) nsu(a) dus + mus(d) nsu(c) dus \
         + mos(b) muo(a) + mus(b) esu mus(a) + dus nsu(b) mus(a) + nss(b) mus(a) + mus(b) nuu(a) \
         + mos(d) muo(c) + mus(d) esu mus(c) + dus nsu(d) mus(c) + nss(d) mus(c) + mus(d) nuu(c)",
    ),
    rel(Square, Bss, "kss ess + ess kss + kus esu + eus ksu + nss(b) nss(a) + nus(b) nsu(a) + nss(d) nss(c) + nus(d) nsu(c)"),
    rel(Square, Bsu, "ksu ess + esu kss + kuu esu + euu ksu + nsu(b) nss(a) + nuu(b) nsu(a) + nsu(d) nss(c) + nuu(d) nsu(c)"),
    rel(Square, Bus, "kss eus + ess kus + kus euu + eus kuu + nss(b) nus(a) + nus(b) nuu(a) + nss(d) nus(c) + nus(d) nuu(c)"),
    rel(Square, Buu, "ksu eus + esu kus + kuu euu + euu kuu + nsu(b) nus(a) + nuu(b) nuu(a) + nsu(d) nus(c) + nuu(d) nuu(c)"),
    Transcription {
        lattice: Square,
        source: Source::Q(O, O),
        text: "moo(b) moo(a) + muo(b) esu mos(a) + duo nsu(b) mos(a) + moo(d) moo(c) + muo(d) esu mos(c) + duo nsu(d) mos(c)",
    },
    map(Cube, O, O, "goo"),
    map(Cube, O, S, "gos"),
    map(
        Cube,
        S,
        O,
        "guo esu + duo gbsu + huo(d) nsu(a) + muo(j) ksu(a) \
         + huo(e) nsu(b) + muo(k) ksu(b) + huo(f) nsu(c) + muo(l) ksu(c)",
    ),
    map(
        Cube,
        S,
        S,
        "gbss + gus esu + dus gbsu + hus(d) nsu(a) + mus(j) ksu(a) \
         + hus(e) nsu(b) + mus(k) ksu(b) + hus(f) nsu(c) + mus(l) ksu(c)",
    ),
    rel(
        Cube,
        Doo,
        "goo doo + doo goo + duo esu gos + duo gbsu dos + guo esu dos \
         + hoo(d) moo(a) + huo(d) nsu(a) dos + huo(d) esu mos(a) + duo ksu(d) mos(a) \
         + hoo(e) moo(b) + huo(e) nsu(b) dos + huo(e) esu mos(b) + duo ksu(e) mos(b) \
         + hoo(f) moo(c) + huo(f) nsu(b) dos + huo(f) esu mos(c) + duo ksu(f) mos(c) \
         + moo(j) hoo(a) + muo(j) ksu(a) dos + muo(j) esu hos(a) + duo nsu(j) hos(a) \
         + moo(k) hoo(b) + muo(k) ksu(b) dos + muo(k) esu hos(b) + duo nsu(k) hos(b) \
         + moo(l) hoo(c) + muo(l) ksu(c) dos + muo(l) esu hos(c) + duo nsu(l) hos(c) \
         + muo(j) nsu(d) mos(a) + muo(k) nsu(e) mos(a) + muo(j) nsu(f) mos(b) \
         + muo(l) nsu(g) mos(b) + muo(k) nsu(h) mos(c) + muo(l) nsu(i) mos(c)",
    ),
    map(SurgeryChain, O, O, "hoo"),
    map(SurgeryChain, O, S, "hos"),
    map(SurgeryChain, S, O, "huo esu + duo ksu + muo(l) nsu(k)"),
    map(SurgeryChain, S, S, "kss + hus esu + dus ksu + mus(l) nsu(k)"),
    rel(
        SurgeryChain,
        Doo,
        "hoo doo + doo hoo + duo esu hos + duo ksu dos + huo esu dos \
         + muo(l) nsu(k) dos + moo(l) moo(k) + muo(l) esu mos(k) + duo nsu(l) mos(k)",
    ),
    rel(
        SurgeryChain,
        Dos,
        "hos doo + dos hoo + hus esu dos + dus ksu dos + dus esu hos + kss dos + ess hos \
         + mus(l) nsu(k) dos + mos(l) moo(k) + mus(d) esu mos(c) + dus nsu(d) mos(c)",
    ),
    rel(
        SurgeryChain,
        Duo,
        "hoo duo + doo huo + huo esu dus + duo ksu dus + duo esu hus + huo euu + duo kuu \
         + muo(l) nsu(k) dus + moo(l) muo(k) + muo(l) esu mus(k) + duo nsu(l) mus(k) + muo(l) nuu(k)",
    ),
    rel(
        SurgeryChain,
        Dus,
        "hos duo + dos huo + hus esu dus + dus ksu dus + dus esu hus + hus euu + dus kuu + kss dus + ess hus + kus \
         + mus(l) nsu(k) dus + mos(l) muo(k) + mus(l) esu mus(k) \
         + dus nsu(l) mus(k) + nss(l) mus(k) + mus(l) nuu(k)",
    ),
    rel(SurgeryChain, Bss, "kss ess + ess kss + kus esu + eus ksu + nss(l) nss(k) + nus(l) nsu(k)"),
    rel(SurgeryChain, Bsu, "ksu ess + esu kss + kuu esu + euu ksu + nsu(l) nss(k) + nuu(l) nsu(k)"),
    rel(SurgeryChain, Bus, "kss eus + ess kus + kus euu + eus kuu + nss(l) nus(k) + nus(l) nuu(k)"),
    rel(SurgeryChain, Buu, "ksu eus + esu kus + kuu euu + euu kuu + nsu(l) nus(k) + nuu(l) nuu(k)"),
];

/// A correction to a printed word list: `printed` is removed (first occurrence)
/// and `corrected` added.
#[derive(Clone, Debug, Serialize)]
pub struct Erratum {
    pub lattice: AppendixLattice,
    pub block: String,
    pub printed: Option<&'static str>,
    pub corrected: Option<&'static str>,
    pub note: &'static str,
}

pub fn errata() -> Vec<Erratum> {
    let e = |lattice: AppendixLattice, kind: GeneratorKind, printed, corrected, note| Erratum {
        lattice,
        block: block_name(lattice, Source::Relation(kind)),
        printed,
        corrected,
        note,
    };
    vec![
        e(Cube, Doo, Some("huo(f) nsu(b) dos"), Some("huo(f) nsu(c) dos"), "n̄ must end where H(f) starts (100)"),
        e(Square, Dos, Some("mus(d) esu mos(c)"), Some("mus(b) esu mos(a)"), "the (b, a) line repeats the (d, c) words"),
        e(Square, Dos, Some("dus nsu(d) mos(c)"), Some("dus nsu(b) mos(a)"), "the (b, a) line repeats the (d, c) words"),
        e(Square, Dos, None, Some("nss(b) mos(a)"), "boundary continuation n̄_ss m_os omitted"),
        e(Square, Dos, None, Some("nss(d) mos(c)"), "boundary continuation n̄_ss m_os omitted"),
        e(SurgeryChain, Dos, Some("mus(d) esu mos(c)"), Some("mus(l) esu mos(k)"), "labels carried over from the square"),
        e(SurgeryChain, Dos, Some("dus nsu(d) mos(c)"), Some("dus nsu(l) mos(k)"), "labels carried over from the square"),
        e(SurgeryChain, Dos, None, Some("nss(l) mos(k)"), "boundary continuation n̄_ss m_os omitted"),
    ]
}

fn entry_name(s: Node, t: Node) -> String {
    format!("{}{}", s.letter(), t.letter())
}

fn block_name(lattice: AppendixLattice, source: Source) -> String {
    match source {
        Source::Map(s, t) => format!("{} {}", lattice.map_symbol(), entry_name(s, t)),
        Source::Relation(kind) if kind.barred() => {
            format!("{}̄_{}", lattice.relation_letter(), entry_name(kind.source(), kind.target()))
        }
        Source::Relation(kind) => format!("{}_{}", lattice.relation_letter(), entry_name(kind.source(), kind.target())),
        Source::Q(s, t) => format!("q_{}", entry_name(s, t)),
    }
}

fn split_words(text: &str) -> Vec<String> {
    text.split('+').map(|w| w.split_whitespace().collect::<Vec<_>>().join(" ")).filter(|w| !w.is_empty()).collect()
}

/// Parse one shorthand word starting at `(start_node, i)`.
fn parse_word(alg: &PathAlgebra, lattice: AppendixLattice, text: &str, start_node: Node, i: usize, j: usize) -> Result<Word, String> {
    let mut at = i;
    let mut node = start_node;
    let mut gens = Vec::new();
    for token in text.split_whitespace().rev() {
        let (base, label) = match token.find('(') {
            Some(p) => (&token[..p], Some(token[p + 1..].trim_end_matches(')'))),
            None => (token, None),
        };
        if base.len() < 3 {
            return Err(format!("bad token {token}"));
        }
        let (family, types) = base.split_at(base.len() - 2);
        let node_of = |c: char| match c {
            'o' => Some(Node::O),
            's' => Some(Node::S),
            'u' => Some(Node::U),
            _ => None,
        };
        let mut chars = types.chars();
        let (Some(src), Some(dst)) = (chars.next().and_then(node_of), chars.next().and_then(node_of)) else {
            return Err(format!("bad types in {token}"));
        };
        let barred = matches!(family, "e" | "n" | "k" | "gb");
        let kind = GeneratorKind::from_nodes(src, dst, barred).ok_or_else(|| format!("no generator {token}"))?;
        if src != node {
            return Err(format!("{token} does not start at {}", node.letter()));
        }
        let (from, to) = match (family, label) {
            ("d" | "e", None) => (at, at),
            ("m" | "n" | "h" | "k" | "g" | "gb", None) => (i, j),
            ("m" | "n" | "h" | "k", Some(l)) => {
                let (a, b) = lattice.label(matches!(family, "h" | "k"), l).ok_or_else(|| format!("unknown label in {token}"))?;
                (alg.index(&digits(a)), alg.index(&digits(b)))
            }
            _ => return Err(format!("bad token {token}")),
        };
        if from != at {
            return Err(format!("{token} does not start at {}", alg.render_vertex(at)));
        }
        gens.push(IntervalGenerator { kind, from, to });
        at = to;
        node = dst;
    }
    Ok(Word(gens))
}

fn digits(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockComparison {
    pub block: String,
    pub generated: usize,
    pub transcribed: usize,
    pub errata_applied: usize,
    /// Transcribed words absent from the expansion.
    pub missing: Vec<String>,
    /// Generated words absent from the transcription.
    pub extra: Vec<String>,
    /// Transcribed words that are not well-formed words between the block's ends.
    pub malformed: Vec<String>,
    pub duplicates: Vec<String>,
}

impl BlockComparison {
    pub fn ok(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.malformed.is_empty() && self.duplicates.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixReport {
    pub lattice: AppendixLattice,
    pub blocks: Vec<BlockComparison>,
}

impl AppendixReport {
    pub fn ok(&self) -> bool {
        self.blocks.iter().all(BlockComparison::ok)
    }

    pub fn block(&self, name: &str) -> Option<&BlockComparison> {
        self.blocks.iter().find(|b| b.block == name)
    }
}

/// Compare every transcribed list for `lattice` with the generated one.
pub fn dump_appendix(lattice: AppendixLattice) -> AppendixReport {
    let alg = PathAlgebra::new(&lattice.lattice());
    let (a, b) = lattice.endpoints();
    let (i, j) = (alg.index(&digits(a)), alg.index(&digits(b)));
    let fixes = errata();
    let mut blocks = Vec::new();
    for tr in TRANSCRIPTIONS.iter().filter(|t| t.lattice == lattice) {
        let name = block_name(lattice, tr.source);
        let (generated, s, t) = match tr.source {
            Source::Map(s, t) => (alg.gen_d(i, j).get(s, t).clone(), s, t),
            Source::Relation(kind) => (FormalSum::from_words(alg.relation(kind, i, j)), kind.source(), kind.target()),
            Source::Q(s, t) => (alg.gen_q(i, j).get(s, t).clone(), s, t),
        };
        let mut words = split_words(tr.text);
        let mut applied = 0;
        for fix in fixes.iter().filter(|f| f.lattice == lattice && f.block == name) {
            if let Some(p) = fix.printed {
                let pos = words.iter().position(|w| w == p).expect("erratum refers to a transcribed word");
                words.remove(pos);
            }
            if let Some(c) = fix.corrected {
                words.push(c.to_string());
            }
            applied += 1;
        }
        let mut cmp = BlockComparison {
            block: name,
            generated: generated.len(),
            transcribed: words.len(),
            errata_applied: applied,
            missing: Vec::new(),
            extra: Vec::new(),
            malformed: Vec::new(),
            duplicates: Vec::new(),
        };
        let mut seen = FormalSum::new();
        for text in &words {
            match parse_word(&alg, lattice, text, s, i, j) {
                Ok(w) if w.target() == (t, j) => {
                    if seen.contains(&w) {
                        cmp.duplicates.push(text.clone());
                    } else if !generated.contains(&w) {
                        cmp.missing.push(format!("{text} = {}", alg.render_word(&w)));
                    }
                    seen.0.insert(w);
                }
                Ok(_) => cmp.malformed.push(format!("{text}: wrong endpoint")),
                Err(e) => cmp.malformed.push(format!("{text}: {e}")),
            }
        }
        cmp.extra = generated.iter().filter(|w| !seen.contains(w)).map(|w| alg.render_word(w)).collect();
        blocks.push(cmp);
    }
    AppendixReport { lattice, blocks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_list_matches() {
        for lat in AppendixLattice::ALL {
            let r = dump_appendix(lat);
            assert!(r.ok(), "{:#?}", r.blocks.iter().filter(|b| !b.ok()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn headline_counts() {
        let sq = dump_appendix(Square);
        assert_eq!(sq.block("E_oo").unwrap().generated, 13);
        assert_eq!(sq.block("q_oo").unwrap().generated, 6);
        assert_eq!(sq.block("E_os").unwrap().generated, 17);
        let cube = dump_appendix(Cube);
        assert_eq!(cube.block("F_oo").unwrap().generated, 35);
        assert_eq!(cube.block("F_oo").unwrap().transcribed, 35);
    }

    #[test]
    fn printed_slip_is_not_a_word() {
        let alg = PathAlgebra::new(&ProductLattice::cube(3));
        let err = parse_word(&alg, Cube, "huo(f) nsu(b) dos", Node::O, 0, 7).unwrap_err();
        assert!(err.contains("does not start"), "{err}");
    }

    #[test]
    fn errata_are_needed() {
        // Without corrections the square's E_os list has duplicated words.
        let alg = PathAlgebra::new(&ProductLattice::cube(2));
        let printed = TRANSCRIPTIONS.iter().find(|t| t.lattice == Square && matches!(t.source, Source::Relation(Dos))).unwrap();
        let words = split_words(printed.text);
        let parsed: Vec<Word> = words.iter().map(|w| parse_word(&alg, Square, w, Node::O, 0, 3).unwrap()).collect();
        let set = FormalSum::from_words(parsed.iter().cloned());
        assert_eq!(parsed.len(), 15);
        assert_eq!(set.len(), 11);
    }
}
