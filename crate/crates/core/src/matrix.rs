//! Structural {0, x} matrices and sandwich matrices over a group with zero.
//!
//! Rows are indexed by Λ and columns by I, both 0-based internally.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::group::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    Empty { rows: usize, cols: usize },
    #[error("expected {expected} cells, got {got}")]
    CellCount { expected: usize, got: usize },
    #[error("row {} has {got} entries, expected {expected}", .row + 1)]
    Ragged { row: usize, got: usize, expected: usize },
    #[error("bad matrix token {token:?}")]
    Token { token: String },
    #[error("entry g{value} at row {}, column {} is not an element of a group of order {order}", .row + 1, .col + 1)]
    Element { row: usize, col: usize, value: usize, order: usize },
    #[error("matrix has no zero entry")]
    NoZero,
    #[error("{what} of {size} exceeds the limit of {limit}")]
    SizeLimit { what: &'static str, size: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Zero,
    Star,
}

impl Cell {
    pub fn is_zero(self) -> bool {
        self == Cell::Zero
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructuralMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
}

impl StructuralMatrix {
    pub fn new(rows: usize, cols: usize, cells: Vec<Cell>) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty { rows, cols });
        }
        if cells.len() != rows * cols {
            return Err(MatrixError::CellCount { expected: rows * cols, got: cells.len() });
        }
        Ok(StructuralMatrix { rows, cols, cells })
    }

    pub fn from_rows(rows: Vec<Vec<Cell>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(MatrixError::Ragged { row: i, got: row.len(), expected: c });
            }
        }
        StructuralMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Cell) -> Self {
        let cells = (0..rows).flat_map(|l| (0..cols).map(move |i| (l, i))).map(|(l, i)| f(l, i)).collect();
        StructuralMatrix::new(rows, cols, cells).expect("positive dimensions")
    }

    pub fn all_zero(rows: usize, cols: usize) -> Self {
        StructuralMatrix::from_fn(rows, cols, |_, _| Cell::Zero)
    }

    pub fn all_star(rows: usize, cols: usize) -> Self {
        StructuralMatrix::from_fn(rows, cols, |_, _| Cell::Star)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Cell {
        self.cells[row * self.cols + col]
    }

    pub fn is_zero(&self, row: usize, col: usize) -> bool {
        self.get(row, col).is_zero()
    }

    pub fn set(&mut self, row: usize, col: usize, cell: Cell) {
        self.cells[row * self.cols + col] = cell;
    }

    pub fn transpose(&self) -> StructuralMatrix {
        StructuralMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// Submatrix on the given rows and columns, in the order given.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> StructuralMatrix {
        StructuralMatrix::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]))
    }

    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> StructuralMatrix {
        self.submatrix(row_perm, col_perm)
    }

    /// Every row and every column holds at least one Star.
    pub fn is_regular(&self) -> bool {
        (0..self.rows).all(|l| (0..self.cols).any(|i| !self.is_zero(l, i)))
            && (0..self.cols).all(|i| (0..self.rows).any(|l| !self.is_zero(l, i)))
    }

    /// Zero cells as (row, col), row-major.
    pub fn zero_cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows).flat_map(|l| (0..self.cols).map(move |i| (l, i))).filter(|&(l, i)| self.is_zero(l, i)).collect()
    }

    pub fn zero_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_zero()).count()
    }

    pub fn has_zero(&self) -> bool {
        self.cells.iter().any(|c| c.is_zero())
    }

    /// r_λ for every row λ.
    pub fn row_zero_counts(&self) -> Vec<usize> {
        (0..self.rows).map(|l| (0..self.cols).filter(|&i| self.is_zero(l, i)).count()).collect()
    }

    /// c_i for every column i.
    pub fn col_zero_counts(&self) -> Vec<usize> {
        (0..self.cols).map(|i| (0..self.rows).filter(|&l| self.is_zero(l, i)).count()).collect()
    }

    /// Columns where row `row` is Zero.
    pub fn row_zero_mask(&self, row: usize) -> FixedBitSet {
        let mut m = FixedBitSet::with_capacity(self.cols);
        for i in 0..self.cols {
            if self.is_zero(row, i) {
                m.insert(i);
            }
        }
        m
    }

    pub fn row_cells(&self, row: usize) -> &[Cell] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }
}

impl fmt::Display for StructuralMatrix {
    /// One line per row, cells as `0` / `x` separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in 0..self.rows {
            let line: Vec<&str> = self.row_cells(l).iter().map(|c| if c.is_zero() { "0" } else { "x" }).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for StructuralMatrix {
    type Err = MatrixError;

    /// Parses rows of `0`/`x` tokens. A row may also be written without spaces, e.g. `0x0x`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rows = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                for ch in tok.chars() {
                    row.push(match ch {
                        '0' => Cell::Zero,
                        'x' | 'X' | '*' => Cell::Star,
                        _ => return Err(MatrixError::Token { token: tok.to_string() }),
                    });
                }
            }
            rows.push(row);
        }
        StructuralMatrix::from_rows(rows)
    }
}

/// Sandwich matrix entries: `None` is zero, `Some(g)` a group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<Option<usize>>,
}

impl SandwichMatrix {
    pub fn new(rows: usize, cols: usize, cells: Vec<Option<usize>>, group: &FiniteGroup) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty { rows, cols });
        }
        if cells.len() != rows * cols {
            return Err(MatrixError::CellCount { expected: rows * cols, got: cells.len() });
        }
        for (k, c) in cells.iter().enumerate() {
            if let Some(v) = *c {
                if v >= group.order() {
                    return Err(MatrixError::Element { row: k / cols, col: k % cols, value: v, order: group.order() });
                }
            }
        }
        Ok(SandwichMatrix { rows, cols, cells })
    }

    /// Lifts a structural matrix, writing the identity into every Star cell.
    pub fn from_structural(m: &StructuralMatrix, group: &FiniteGroup) -> Self {
        SandwichMatrix::from_structural_with(m, |_, _| group.identity())
    }

    /// Lifts a structural matrix, choosing the entry of each Star cell with `entry(row, col)`.
    pub fn from_structural_with(m: &StructuralMatrix, entry: impl Fn(usize, usize) -> usize) -> Self {
        let cells = (0..m.rows())
            .flat_map(|l| (0..m.cols()).map(move |i| (l, i)))
            .map(|(l, i)| if m.is_zero(l, i) { None } else { Some(entry(l, i)) })
            .collect();
        SandwichMatrix { rows: m.rows(), cols: m.cols(), cells }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.cells[row * self.cols + col]
    }

    /// The structural matrix: every group entry becomes a Star.
    pub fn structural(&self) -> StructuralMatrix {
        let cells = self.cells.iter().map(|c| if c.is_some() { Cell::Star } else { Cell::Zero }).collect();
        StructuralMatrix::new(self.rows, self.cols, cells).expect("dimensions already checked")
    }
}

pub fn structural(p: &SandwichMatrix) -> StructuralMatrix {
    p.structural()
}

pub fn is_regular(m: &StructuralMatrix) -> bool {
    m.is_regular()
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

    #[test]
    fn parse_and_display() {
        let m: StructuralMatrix = "0 x\nx x\n".parse().unwrap();
        assert_eq!(m.rows(), 2);
        assert!(m.is_zero(0, 0));
        assert_eq!(m.to_string(), "0 x\nx x\n");
        assert_eq!(m.to_string().parse::<StructuralMatrix>().unwrap(), m);
        assert!(matches!("0 y".parse::<StructuralMatrix>(), Err(MatrixError::Token { .. })));
        assert!(matches!("0 x\n0".parse::<StructuralMatrix>(), Err(MatrixError::Ragged { row: 1, .. })));
        assert!(matches!("".parse::<StructuralMatrix>(), Err(MatrixError::Empty { .. })));
    }

    #[test]
    fn regularity() {
        assert!(!StructuralMatrix::all_zero(1, 1).is_regular());
        assert!(!"0 x\n0 x".parse::<StructuralMatrix>().unwrap().is_regular());
        assert!(EXAMPLE.parse::<StructuralMatrix>().unwrap().is_regular());
        assert!(StructuralMatrix::all_star(2, 3).is_regular());
    }

    #[test]
    fn zero_counts() {
        let all = StructuralMatrix::all_star(3, 2);
        assert!(all.zero_cells().is_empty());
        assert_eq!(all.row_zero_counts(), vec![0; 3]);
        assert_eq!(all.col_zero_counts(), vec![0; 2]);

        let ex: StructuralMatrix = EXAMPLE.parse().unwrap();
        assert_eq!(ex.zero_count(), 15);
        assert_eq!(ex.row_zero_counts(), vec![3, 3, 4, 4, 1, 0]);
        assert_eq!(ex.col_zero_counts(), vec![3, 2, 3, 1, 1, 2, 2, 1]);

        let p: StructuralMatrix = "00xx\nx00x\nxx0x".parse().unwrap();
        assert_eq!(p.zero_count(), 5);
    }

    #[test]
    fn sandwich_structural() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let p = SandwichMatrix::new(1, 1, vec![None], &g).unwrap();
        assert_eq!(p.structural(), StructuralMatrix::all_zero(1, 1));
        let p = SandwichMatrix::new(1, 2, vec![Some(2), Some(1)], &g).unwrap();
        assert_eq!(p.structural(), StructuralMatrix::all_star(1, 2));
        assert!(matches!(SandwichMatrix::new(1, 1, vec![Some(3)], &g), Err(MatrixError::Element { value: 3, .. })));

        let ex: StructuralMatrix = EXAMPLE.parse().unwrap();
        let lifted = SandwichMatrix::from_structural_with(&ex, |l, i| (l + i) % 3);
        assert_eq!(lifted.structural(), ex);
    }

    #[test]
    fn transpose_and_submatrix() {
        let m: StructuralMatrix = "00x\nx00".parse().unwrap();
        let t = m.transpose();
        assert_eq!(t.rows(), 3);
        assert_eq!(t.to_string(), "0 x\n0 0\nx 0\n");
        assert_eq!(m.submatrix(&[1], &[2, 0]).to_string(), "0 x\n");
    }
}
