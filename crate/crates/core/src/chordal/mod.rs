//! The tree-width engine: tree decompositions and their validation,
//! chordality, exact tree-width, chordal completions, clique trees and the
//! triangulation functor `Δ = tw + 1` on graphs.

mod completion;
mod decomposition;
mod oracle;
mod treewidth;

pub use completion::{
    clique_tree, fill_in, is_chordal, min_chordal_completion, perfect_elimination_ordering,
    triangulation_functor, triangulation_graph, ChordalCompletion, COMPLETION_CAP,
};
pub use decomposition::{
    parse_pace, validate_tree_decomposition, write_pace, Decomposable, TreeDecomposition, Violation,
};
pub use oracle::{treewidth_oracle, ORACLE_CAP};
pub use treewidth::{treewidth_dp, treewidth_dp_with, TreewidthResult, DP_CAP};
