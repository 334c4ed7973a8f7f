//! Combinatorial and homological machinery around the monopole-Floer spectral
//! sequence for branched double covers: reduced Khovanov homology over F2 in the
//! exterior-algebra model, arc-linking signatures, filtered-complex spectral
//! sequences, graph associahedra for surgery lattices, and a formal path-algebra
//! verifier.

pub mod corpus;
pub mod diagram;
pub mod f2core;
pub mod khcube;
pub mod lattice;
pub mod linkmat;
pub mod oracles;
pub mod par;
pub mod pathalg;
pub mod poly;
pub mod specseq;

pub use diagram::{LinkDiagram, Vertex};
pub use f2core::{BitVec, ExtElement, F2Matrix, SymIntMatrix};
pub use par::Parallelism;

/// Errors surfaced by the library. Mathematical mismatches are reported as
/// values by the checking routines, not through this type.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed PD code: {0}")]
    MalformedPd(String),
    #[error("cannot orient diagram: {0}")]
    Orientation(String),
    #[error("diagram has {got} crossings, bound is {bound}")]
    TooManyCrossings { got: usize, bound: usize },
    #[error("diagram is not connected")]
    Disconnected,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid filtered complex: {0}")]
    InvalidComplex(String),
    #[error("unsupported lattice: {0}")]
    UnsupportedLattice(String),
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default crossing bound for anything that walks the full resolution cube.
pub const DEFAULT_MAX_CROSSINGS: usize = 24;
