//! Exact computation of monophonic position numbers on graphs and graph
//! products.
//!
//! A set of vertices is in *monophonic position* when no induced (chordless)
//! path of the graph passes through three of its members. This crate
//! recognises such sets, computes the largest ones exactly, and provides the
//! structure theory that makes products tractable: classification of position
//! sets in Cartesian products and a closed formula for lexicographic
//! products, together with a checker that stress-tests every structural claim
//! against brute force on exhaustive small-graph corpora.
//!
//! Graphs are simple, undirected and capped at 128 vertices so that vertex
//! sets and adjacency rows fit in a `u128` each; all searches are exact and
//! integer-valued, with optional node budgets for the exponential parts.

mod budget;
mod checker;
mod error;
mod graph;
mod lex;
mod paths;
mod position;
mod product;

pub use budget::Budget;
pub use checker::{
    generate_connected_graphs, load_corpus, run_checks, CheckId, CheckReport, CheckerConfig,
    CorpusSource, CorpusSpec, Failure, GENERATOR_CEILING,
};
pub use error::{Error, Result};
pub use graph::{
    distance_matrix, generate_family, invariants, max_clique, parse_graph, serialize_graph,
    DistanceMatrix, Family, Graph, GraphFormat, Invariants, VertexSet, MAX_VERTICES, UNREACHABLE,
};
pub use lex::{build_lex_witness, lex_mp, LexResult, Shortcut};
pub use paths::{
    find_bad_path, find_induced_path_through, is_induced_path, monophonic_interval, Path,
};
pub use position::{
    enumerate_mp_profiles, gp_number, is_maximal_mp_set, is_mp_set, maximum_mp_sets,
    mp_decomposition, mp_independent, mp_lower, mp_number, visit_mp_sets, ComponentProfile,
    ProfilePoint, SolveResult,
};
pub use product::{
    cartesian_product, classify_mp_set, g_layer_slice, h_layer_slice, lex_distance,
    lexicographic_product, project, CanonicalTag, Factor, LayerRef, MpClass, ProductGraph,
    ProductKind,
};
