use super::{check_input, EngineError};
use crate::closure::{all_closure_submatrices, run_closure, ClosureSubmatrix};
use crate::matrix::StructuralMatrix;

/// One connected component of the commuting graph, described by cells of
/// the matrix; its vertex set is those cells times G.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ComponentDescriptor {
    SingleClosure(ClosureSubmatrix),
    /// Vertex cells (I_Q x Λ_M) ∪ (I_M x Λ_Q).
    PairClosure(ClosureSubmatrix, ClosureSubmatrix),
    /// A cell whose row or column has no zero.
    StarCell {
        row: usize,
        col: usize,
    },
}

impl ComponentDescriptor {
    /// Cells (row, col) covered by this component, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = match self {
            ComponentDescriptor::SingleClosure(q) => q.cells(),
            ComponentDescriptor::PairClosure(q, m) => {
                let mut v = Vec::new();
                for &l in &m.rows {
                    v.extend(q.cols.iter().map(|&i| (l, i)));
                }
                for &l in &q.rows {
                    v.extend(m.cols.iter().map(|&i| (l, i)));
                }
                v
            }
            ComponentDescriptor::StarCell { row, col } => vec![(*row, *col)],
        };
        out.sort_unstable();
        out
    }

    pub fn vertex_count(&self, order: usize) -> usize {
        self.cells().len() * order
    }
}

/// Connected iff the closure of the first zero is the whole matrix.
pub fn is_connected_formula(m: &StructuralMatrix) -> Result<bool, EngineError> {
    check_input(m)?;
    let (l, i) = m.zero_cells()[0];
    let run = run_closure(m, l, i).expect("start cell is a zero");
    Ok(run.block().is_whole(m))
}

/// Closure blocks sorted by least column.
pub(crate) fn sorted_blocks(m: &StructuralMatrix) -> Vec<ClosureSubmatrix> {
    let mut blocks = all_closure_submatrices(m).expect("checked for a zero");
    blocks.sort_by_key(|b| b.cols[0]);
    blocks
}

/// Singles by least column, then pairs, then star cells row-major.
pub fn classify_components(m: &StructuralMatrix) -> Result<Vec<ComponentDescriptor>, EngineError> {
    check_input(m)?;
    let blocks = sorted_blocks(m);
    let mut out: Vec<ComponentDescriptor> = blocks.iter().cloned().map(ComponentDescriptor::SingleClosure).collect();
    for a in 0..blocks.len() {
        for b in a + 1..blocks.len() {
            out.push(ComponentDescriptor::PairClosure(blocks[a].clone(), blocks[b].clone()));
        }
    }
    let rz = m.row_zero_counts();
    let cz = m.col_zero_counts();
    for (row, &r) in rz.iter().enumerate() {
        for (col, &c) in cz.iter().enumerate() {
            if r == 0 || c == 0 {
                out.push(ComponentDescriptor::StarCell { row, col });
            }
        }
    }
    Ok(out)
}
