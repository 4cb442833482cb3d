//! Exact combinatorics for fan subgraphs F_{k,r} (k cliques of order r
//! sharing one center vertex): closed-form extremal and anti-Ramsey edge
//! counts with their matching constructions, canonical fan and rainbow-fan
//! detectors, small-case brute-force oracles, partition/deficiency
//! machinery, and rainbow-free lower-bound colorings of K_n.

pub mod detect;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod io;
pub mod oracle;
pub mod partition;

pub use detect::{
    contains_clique, find_fan, find_rainbow_fan, naive_fan_check, representative_subgraph,
    EdgeColoring, FanWitness,
};
pub use error::{Error, Result};
pub use formulas::{
    ar_fan, construct_bounded_max, construct_extremal_fan_free, ex_clique, ex_fan,
    extremal_bounded_graph, f_bounded, turan_count, turan_decrement, turan_epsilon, BoundedPair,
    ExtremalValue, ParityBranch,
};
pub use graph::{turan_parts, FanSpec, Graph, VertexSet, MAX_VERTICES};
pub use harness::{
    lower_bound_coloring, probe_split_extra_color, verify_formula_grid, verify_lower_bound,
    GridCellReport, SplitProbe, VerificationReport,
};
pub use oracle::{
    brute_force_ar, brute_force_ex, brute_force_f, count_set_partitions,
    max_rainbow_free_coloring, Forbidden, OracleOutcome, SearchBudget,
};
pub use partition::{
    build_disjoint_cliques, degenerate_peel, dominates_with_deficiency, edgelow_deficit,
    extend_cliques, find_partition_heuristic, is_deficiency_complete, verify_partition_properties,
    DeficitReport, PartitionClasses, PartitionProperties, PeelOutcome,
};
