//! Spined categories as executable finite mathematics.
//!
//! The [`category`] module holds the generic contract (spine, proxy pushouts,
//! S-functors and their axiom checkers). The concrete categories live in
//! [`graph`], [`hypergraph`], [`complement`], [`induced`] and [`witness`];
//! [`chordal`] is the exact tree-width engine behind the triangulation
//! functor.

pub mod bitset;
pub mod category;
pub mod chordal;
pub mod complement;
pub mod error;
pub mod exec;
pub mod graph;
pub mod hypergraph;
pub mod induced;
pub mod witness;

pub use error::{Error, Result};
pub use exec::Execution;
