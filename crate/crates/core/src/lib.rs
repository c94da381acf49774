//! Distance-balanced graphs.
//!
//! A connected graph is distance-balanced when, for every edge `xy`, as many
//! vertices are strictly closer to `x` as are strictly closer to `y`. This
//! crate computes the closer/equidistant partitions behind that definition,
//! the Szeged index, and `b(G)`: the fewest edges whose addition makes `G`
//! distance-balanced. For trees with maximum degree at least `n - 3` it builds
//! minimal closures directly; for any graph with up to 64 vertices it can
//! find `b(G)` by exhaustive search.
//!
//! ```
//! use dbclosure::{construct_closure, family_tree, FamilyTag};
//!
//! let tree = family_tree(FamilyTag::S22, 4).unwrap();
//! let closure = construct_closure(&tree).unwrap();
//! assert_eq!(closure.b, 8);
//! assert!(closure.certificate.is_valid());
//! ```

pub mod balance;
pub mod closure;
pub mod edgelist;
pub mod graph;
pub mod search;
pub mod trees;

pub use balance::{imbalance_report, is_distance_balanced, szeged_index, EdgeBalance, ImbalanceReport};
pub use closure::{
    b_formula, construct_closure, verify_closure, Certificate, ClosureError, ClosureMethod, ClosureResult,
};
pub use edgelist::{parse_edge_list, write_edge_list, ParseError};
pub use graph::{
    all_pairs_distances, complement_edges, diameter, edge_partition, is_spanning_subgraph, regular_degree,
    DistanceMatrix, EdgePartition, Graph, GraphError,
};
pub use search::{
    db_filter_count, enumerate_regular_supergraphs, exact_b, PruneMode, SearchConfig, SearchError,
    SearchProgress, SearchResult,
};
pub use trees::{
    broom, classify_tree, family_tree, starlike, FamilyTag, StarlikeSpec, TreeError, TreeFamily,
};
