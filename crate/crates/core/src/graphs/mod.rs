//! Divisor graphs of integer sets and their shapes.

pub mod divisor;
pub mod emit;
pub mod shape;

pub use divisor::{build_graph, DivisorGraph, GraphKind, GraphStats, Vertex};
pub use shape::{classify_shape, ShapeClaim, ShapeClass, ShapePredicate, ShapeTag};
