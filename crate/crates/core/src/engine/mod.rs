//! Invariants of the commuting graph computed from the structural matrix
//! and the group profile alone.

mod components;
mod diameter;
mod invariants;
mod report;

use thiserror::Error;

use crate::matrix::{MatrixError, StructuralMatrix};

pub use components::{classify_components, is_connected_formula, ComponentDescriptor};
pub use diameter::{
    component_diameter, diameter_fastpath, diameter_formula, fastpath_starts, naive_starts, single_diameter_small,
};
pub use invariants::{
    chromatic_upper_degree, chromatic_upper_edges, clique_number_formula, girth_formula, knit_degree_formula,
};
pub use report::{analyze, AnalysisReport, BlockLabels, CellLabel, ComponentKind, ComponentReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("matrix has no zero entry; a zero-free sandwich matrix gives a completely simple semigroup, which is outside what these formulas cover")]
    ZeroFree,
    #[error("matrix is not regular: {0}")]
    NotRegular(String),
    #[error("component descriptor does not belong to this matrix")]
    ForeignDescriptor,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Rejects inputs the formulas do not cover.
pub(crate) fn check_input(m: &StructuralMatrix) -> Result<(), EngineError> {
    if let Some(l) = (0..m.rows()).find(|&l| (0..m.cols()).all(|i| m.is_zero(l, i))) {
        return Err(EngineError::NotRegular(format!("row {} has no non-zero entry", l + 1)));
    }
    if let Some(i) = (0..m.cols()).find(|&i| (0..m.rows()).all(|l| m.is_zero(l, i))) {
        return Err(EngineError::NotRegular(format!("column {} has no non-zero entry", i + 1)));
    }
    if !m.has_zero() {
        return Err(EngineError::ZeroFree);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn input_checks() {
        let zero: StructuralMatrix = "0".parse().unwrap();
        assert!(matches!(check_input(&zero), Err(EngineError::NotRegular(_))));
        let col: StructuralMatrix = "0x\n0x".parse().unwrap();
        assert_eq!(check_input(&col), Err(EngineError::NotRegular("column 1 has no non-zero entry".into())));
        assert_eq!(check_input(&StructuralMatrix::all_star(2, 2)), Err(EngineError::ZeroFree));
        assert_eq!(check_input(&"0x\nxx".parse().unwrap()), Ok(()));
    }
}
