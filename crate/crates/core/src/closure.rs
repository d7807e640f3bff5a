//! The 0-closure method: grow a block from one zero cell until no row or
//! column outside the block has a zero meeting it.

use serde::Serialize;
use thiserror::Error;

use crate::matrix::StructuralMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("cell (row {}, column {}) is not a zero entry", .row + 1, .col + 1)]
    NotZero { row: usize, col: usize },
    #[error("cell (row {}, column {}) lies outside the matrix", .row + 1, .col + 1)]
    OutOfBounds { row: usize, col: usize },
    #[error("step {k} out of range 0..={z}")]
    StepRange { k: usize, z: usize },
    #[error("matrix has no zero entry")]
    NoZero,
}

/// Column set I_Q and row set Λ_Q, both sorted in original order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClosureSubmatrix {
    pub cols: Vec<usize>,
    pub rows: Vec<usize>,
}

impl ClosureSubmatrix {
    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.rows.binary_search(&row).is_ok() && self.cols.binary_search(&col).is_ok()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.len() * self.cols.len()
    }

    /// All cells (row, col), row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.rows.iter().flat_map(|&l| self.cols.iter().map(move |&i| (l, i))).collect()
    }

    pub fn zeros(&self, m: &StructuralMatrix) -> Vec<(usize, usize)> {
        self.cells().into_iter().filter(|&(l, i)| m.is_zero(l, i)).collect()
    }

    pub fn submatrix(&self, m: &StructuralMatrix) -> StructuralMatrix {
        m.submatrix(&self.rows, &self.cols)
    }

    pub fn is_whole(&self, m: &StructuralMatrix) -> bool {
        self.rows.len() == m.rows() && self.cols.len() == m.cols()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureRun {
    /// (row, col) of the starting zero.
    pub start: (usize, usize),
    /// Q_0, ..., Q_z.
    pub steps: Vec<ClosureSubmatrix>,
}

impl ClosureRun {
    /// z(i, λ): the number of steps that added something.
    pub fn z_index(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn block(&self) -> &ClosureSubmatrix {
        self.steps.last().expect("a run has at least Q_0")
    }

    /// Cells of Q_k not already in Q_{k-1}, row-major.
    pub fn step_entries(&self, k: usize) -> Result<Vec<(usize, usize)>, ClosureError> {
        let z = self.z_index();
        if k > z {
            return Err(ClosureError::StepRange { k, z });
        }
        let cur = &self.steps[k];
        Ok(match k {
            0 => cur.cells(),
            _ => {
                let prev = &self.steps[k - 1];
                cur.cells().into_iter().filter(|&(l, i)| !prev.contains(l, i)).collect()
            }
        })
    }
}

pub fn run_closure(m: &StructuralMatrix, row: usize, col: usize) -> Result<ClosureRun, ClosureError> {
    if row >= m.rows() || col >= m.cols() {
        return Err(ClosureError::OutOfBounds { row, col });
    }
    if !m.is_zero(row, col) {
        return Err(ClosureError::NotZero { row, col });
    }
    let mut in_col = vec![false; m.cols()];
    let mut in_row = vec![false; m.rows()];
    in_col[col] = true;
    in_row[row] = true;
    let mut steps = vec![ClosureSubmatrix { cols: vec![col], rows: vec![row] }];
    loop {
        let cur = steps.last().unwrap();
        // both additions look only at Q_k
        let new_cols: Vec<usize> =
            (0..m.cols()).filter(|&j| !in_col[j] && cur.rows.iter().any(|&l| m.is_zero(l, j))).collect();
        let new_rows: Vec<usize> =
            (0..m.rows()).filter(|&mu| !in_row[mu] && cur.cols.iter().any(|&i| m.is_zero(mu, i))).collect();
        if new_cols.is_empty() && new_rows.is_empty() {
            break;
        }
        for &j in &new_cols {
            in_col[j] = true;
        }
        for &mu in &new_rows {
            in_row[mu] = true;
        }
        let next = ClosureSubmatrix {
            cols: (0..m.cols()).filter(|&j| in_col[j]).collect(),
            rows: (0..m.rows()).filter(|&l| in_row[l]).collect(),
        };
        steps.push(next);
    }
    Ok(ClosureRun { start: (row, col), steps })
}

/// All 0-closure submatrices, in order of their first zero in row-major order.
pub fn all_closure_submatrices(m: &StructuralMatrix) -> Result<Vec<ClosureSubmatrix>, ClosureError> {
    if !m.has_zero() {
        return Err(ClosureError::NoZero);
    }
    let mut blocks: Vec<ClosureSubmatrix> = Vec::new();
    for (l, i) in m.zero_cells() {
        if blocks.iter().any(|b| b.contains(l, i)) {
            continue;
        }
        let block = run_closure(m, l, i)?.block().clone();
        debug_assert!(blocks.iter().all(|b| disjoint(&b.rows, &block.rows) && disjoint(&b.cols, &block.cols)));
        blocks.push(block);
    }
    Ok(blocks)
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_err())
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "\
        0x00xxxx
        x0xx0xx0
        0x0xx00x
        0x0xx00x
        x0xxxxxx
        xxxxxxxx";

    fn block(cols: &[usize], rows: &[usize]) -> ClosureSubmatrix {
        // 1-based labels in, 0-based out
        ClosureSubmatrix { cols: cols.iter().map(|c| c - 1).collect(), rows: rows.iter().map(|r| r - 1).collect() }
    }

    #[test]
    fn example_runs() {
        let m: StructuralMatrix = EXAMPLE.parse().unwrap();
        let run = run_closure(&m, 3, 5).unwrap();
        assert_eq!(run.z_index(), 3);
        assert_eq!(run.steps[0], block(&[6], &[4]));
        assert_eq!(run.steps[1], block(&[1, 3, 6, 7], &[3, 4]));
        assert_eq!(run.steps[2], block(&[1, 3, 6, 7], &[1, 3, 4]));
        assert_eq!(*run.block(), block(&[1, 3, 4, 6, 7], &[1, 3, 4]));

        let run = run_closure(&m, 1, 1).unwrap();
        assert_eq!(run.z_index(), 1);
        assert_eq!(*run.block(), block(&[2, 5, 8], &[2, 5]));
    }

    #[test]
    fn step_entries_of_example() {
        let m: StructuralMatrix = EXAMPLE.parse().unwrap();
        let run = run_closure(&m, 3, 5).unwrap();
        assert_eq!(run.step_entries(0).unwrap(), vec![(3, 5)]);
        let s1 = run.step_entries(1).unwrap();
        assert_eq!(s1.len(), 8 - 1);
        assert!(!s1.contains(&(3, 5)));
        assert!(s1.iter().all(|&(l, i)| [2, 3].contains(&l) && [0, 2, 5, 6].contains(&i)));
        assert_eq!(run.step_entries(2).unwrap().len(), 4);
        assert_eq!(run.step_entries(3).unwrap(), vec![(0, 3), (2, 3), (3, 3)]);
        assert_eq!(run.step_entries(4), Err(ClosureError::StepRange { k: 4, z: 3 }));
    }

    #[test]
    fn trivial_runs() {
        let m: StructuralMatrix = "0".parse().unwrap();
        let run = run_closure(&m, 0, 0).unwrap();
        assert_eq!(run.z_index(), 0);
        assert!(run.block().is_whole(&m));
        assert_eq!(run.step_entries(0).unwrap(), vec![(0, 0)]);
        let m: StructuralMatrix = "0x\nxx".parse().unwrap();
        assert_eq!(run_closure(&m, 0, 1), Err(ClosureError::NotZero { row: 0, col: 1 }));
        assert_eq!(run_closure(&m, 2, 0), Err(ClosureError::OutOfBounds { row: 2, col: 0 }));
    }

    #[test]
    fn all_blocks() {
        let m: StructuralMatrix = EXAMPLE.parse().unwrap();
        let blocks = all_closure_submatrices(&m).unwrap();
        assert_eq!(blocks, vec![block(&[1, 3, 4, 6, 7], &[1, 3, 4]), block(&[2, 5, 8], &[2, 5])]);

        let z = StructuralMatrix::all_zero(2, 2);
        assert_eq!(all_closure_submatrices(&z).unwrap(), vec![block(&[1, 2], &[1, 2])]);

        let d2: StructuralMatrix = "x0\n0x".parse().unwrap();
        assert_eq!(all_closure_submatrices(&d2).unwrap(), vec![block(&[2], &[1]), block(&[1], &[2])]);

        assert_eq!(all_closure_submatrices(&StructuralMatrix::all_star(2, 2)), Err(ClosureError::NoZero));
    }
}
