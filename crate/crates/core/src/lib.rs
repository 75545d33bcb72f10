//! Character degree sets of finite groups and their divisor graphs.
//!
//! A group is described by a [`GroupSpec`] or by permutation generators and
//! turned into a [`GroupHandle`]. [`character_degrees`] runs the
//! Dixon-Schneider pipeline on it, and [`build_graph`] turns a degree set into
//! the bipartite divisor graph B, the prime graph Δ or the common divisor
//! graph Γ.

pub mod arith;
pub mod chardeg;
pub mod constructions;
pub mod error;
pub mod graphs;
pub mod group;

pub use chardeg::{character_degrees, DegreeData};
pub use constructions::{
    load_corpus, parse_corpus, parse_cycles, realize, shipped_corpus, verify_corpus, CorpusEntry,
    GroupSpec, VerificationReport,
};
pub use error::{Error, Result};
pub use graphs::{
    build_graph, classify_shape, DivisorGraph, GraphKind, ShapeClaim, ShapeClass, ShapeTag,
};
pub use group::{ConjugacyData, DerivedSeriesReport, GroupHandle, Limits, Permutation};
