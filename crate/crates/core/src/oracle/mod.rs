//! Brute-force ground truth: the semigroup itself, its commuting graph and
//! plain graph algorithms.

mod graph;
mod leftpath;
mod psi;
mod semigroup;

use thiserror::Error;

pub use graph::{SimpleGraph, CHROMATIC_LIMIT, NAIVE_CLIQUE_LIMIT};
pub use leftpath::{find_left_paths, knit_degree, LeftPath};
pub use psi::{psi_isomorphism, PsiMap};
pub use semigroup::{
    build_commuting_graph, build_simplified_graph, multiply, semigroup_center, Element, IndexPair, Rees,
    SimplifiedGraph, VERTEX_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what}: size {size} exceeds the limit of {limit}")]
    SizeLimit { what: &'static str, size: usize, limit: usize },
    #[error("semigroup is commutative, so its commuting graph has no vertices")]
    Commutative,
    #[error("multiplication and the commutativity criterion disagree on {a} and {b}")]
    CriterionMismatch { a: String, b: String },
    #[error("matrices differ in zero pattern at row {row}, column {col}")]
    StructuralMismatch { row: usize, col: usize },
    #[error("matrices have different shapes")]
    ShapeMismatch,
    #[error("sandwich matrix is not regular")]
    NotRegular,
    #[error("map does not preserve adjacency")]
    NotIsomorphism,
}
