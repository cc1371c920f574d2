//! Exact treewidth with checkable certificates, and verifiers for the
//! Nordhaus-Gaddum bound `tw(G) + tw(complement of G) >= n - 2` and its
//! companions.
//!
//! Upper bounds are certified by elimination orders and tree
//! decompositions, lower bounds by brambles with minimum hitting sets.
//! Every checker in [`theorems`] returns a [`Report`] carrying both.

pub mod bramble;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod theorems;
pub mod treewidth;

pub use bramble::{
    bramble_order, edge_bramble, lower_bound_check, verify_bramble, Bramble, HittingSet,
};
pub use enumerate::{enumerate_labeled_graphs, labeled_graph, labeled_graph_count};
pub use error::{Error, Result};
pub use graph::{Girth, Graph, VertexSet, MAX_VERTICES};
pub use io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, parse_graph6_lines};
pub use theorems::{Report, Verdict};
pub use treewidth::{
    decomposition_from_order, is_ktree, ktree_completion, treewidth_exact, treewidth_exact_capped,
    treewidth_oracle_bruteforce, verify_decomposition, width_upper_heuristic, EliminationOrder,
    Heuristic, TreeDecomposition,
};
