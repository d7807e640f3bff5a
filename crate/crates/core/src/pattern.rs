//! Searching for fixed {0, x} patterns up to row and column exchange.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::matrix::{Cell, MatrixError, StructuralMatrix};

pub const EQUIVALENCE_LIMIT: usize = 12;
pub const BLOCK_SEARCH_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    matrix: StructuralMatrix,
}

impl Pattern {
    pub fn new(name: impl Into<String>, matrix: StructuralMatrix) -> Self {
        Pattern { name: name.into(), matrix }
    }

    /// D_n: Star on the diagonal, Zero elsewhere.
    pub fn d(n: usize) -> Self {
        let m = StructuralMatrix::from_fn(n, n, |r, c| if r == c { Cell::Star } else { Cell::Zero });
        Pattern::new(format!("D{n}"), m)
    }

    /// O_{n x m}: all Zero.
    pub fn o(n: usize, m: usize) -> Self {
        Pattern::new(format!("O{n}x{m}"), StructuralMatrix::all_zero(n, m))
    }

    /// [[0,0,x,x],[x,x,0,0]]
    pub fn girth_a() -> Self {
        Pattern::new("A", "00xx\nxx00".parse().expect("valid literal"))
    }

    /// [[0,0,x],[x,0,0]]
    pub fn girth_b() -> Self {
        Pattern::new("B", "00x\nx00".parse().expect("valid literal"))
    }

    pub fn transpose(&self) -> Self {
        Pattern::new(format!("{}T", self.name), self.matrix.transpose())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &StructuralMatrix {
        &self.matrix
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// True iff some rows and columns of `m`, suitably reordered, reproduce `q` exactly.
pub fn contains_pattern(m: &StructuralMatrix, q: &Pattern) -> bool {
    contains_submatrix(m, q.matrix())
}

/// Rows of `q` are assigned to distinct rows of `m` one at a time. After each
/// assignment the columns must still admit an injection, which holds exactly
/// when every restricted column vector of `q` occurs at least as often in `m`.
pub fn contains_submatrix(m: &StructuralMatrix, q: &StructuralMatrix) -> bool {
    if q.rows() > m.rows() || q.cols() > m.cols() {
        return false;
    }
    let mut search =
        Search { m, q, assigned: Vec::with_capacity(q.rows()), used: FixedBitSet::with_capacity(m.rows()) };
    search.run()
}

struct Search<'a> {
    m: &'a StructuralMatrix,
    q: &'a StructuralMatrix,
    assigned: Vec<usize>,
    used: FixedBitSet,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        let k = self.assigned.len();
        if !self.columns_fit() {
            return false;
        }
        if k == self.q.rows() {
            return true;
        }
        // identical pattern rows are interchangeable, so take them in increasing order
        let floor = if k > 0 && self.q.row_cells(k) == self.q.row_cells(k - 1) { self.assigned[k - 1] + 1 } else { 0 };
        let mut tried: Vec<&[Cell]> = Vec::new();
        for r in floor..self.m.rows() {
            if self.used.contains(r) {
                continue;
            }
            // identical candidate rows lead to the same search, try the first only
            let content = self.m.row_cells(r);
            if tried.contains(&content) {
                continue;
            }
            tried.push(content);
            self.used.insert(r);
            self.assigned.push(r);
            if self.run() {
                return true;
            }
            self.assigned.pop();
            self.used.set(r, false);
        }
        false
    }

    fn columns_fit(&self) -> bool {
        let k = self.assigned.len();
        let mut need: HashMap<Vec<bool>, isize> = HashMap::new();
        for c in 0..self.q.cols() {
            let v: Vec<bool> = (0..k).map(|a| self.q.is_zero(a, c)).collect();
            *need.entry(v).or_default() += 1;
        }
        for j in 0..self.m.cols() {
            let v: Vec<bool> = self.assigned.iter().map(|&r| self.m.is_zero(r, j)).collect();
            if let Some(n) = need.get_mut(&v) {
                *n -= 1;
            }
        }
        need.values().all(|&n| n <= 0)
    }
}

/// Same shape and one is a row/column rearrangement of the other.
pub fn equivalent(a: &StructuralMatrix, b: &StructuralMatrix) -> Result<bool, MatrixError> {
    for m in [a, b] {
        let size = m.rows().max(m.cols());
        if size > EQUIVALENCE_LIMIT {
            return Err(MatrixError::SizeLimit { what: "matrix dimension", size, limit: EQUIVALENCE_LIMIT });
        }
    }
    Ok(a.rows() == b.rows() && a.cols() == b.cols() && contains_submatrix(b, a))
}

/// A largest all-Zero submatrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroBlock {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl ZeroBlock {
    pub fn area(&self) -> usize {
        self.rows.len() * self.cols.len()
    }
}

/// Maximum-area all-Zero submatrix, enumerating subsets of the shorter side
/// (at most 20 lines).
pub fn max_zero_block(m: &StructuralMatrix) -> Result<ZeroBlock, MatrixError> {
    if !m.has_zero() {
        return Err(MatrixError::NoZero);
    }
    let small = m.rows().min(m.cols());
    if small > BLOCK_SEARCH_LIMIT {
        return Err(MatrixError::SizeLimit {
            what: "smaller matrix dimension",
            size: small,
            limit: BLOCK_SEARCH_LIMIT,
        });
    }
    if m.rows() <= m.cols() {
        Ok(block_over_rows(m))
    } else {
        let t = block_over_rows(&m.transpose());
        Ok(ZeroBlock { rows: t.cols, cols: t.rows })
    }
}

fn block_over_rows(m: &StructuralMatrix) -> ZeroBlock {
    let masks: Vec<FixedBitSet> = (0..m.rows()).map(|l| m.row_zero_mask(l)).collect();
    let mut all = FixedBitSet::with_capacity(m.cols());
    all.insert_range(..);
    let mut best = ZeroBlock { rows: Vec::new(), cols: Vec::new() };
    let mut chosen = Vec::new();
    grow(&masks, 0, &all, &mut chosen, &mut best);
    best
}

fn grow(masks: &[FixedBitSet], next: usize, cols: &FixedBitSet, chosen: &mut Vec<usize>, best: &mut ZeroBlock) {
    for r in next..masks.len() {
        let mut c = cols.clone();
        c.intersect_with(&masks[r]);
        let width = c.count_ones(..);
        if width == 0 {
            continue;
        }
        chosen.push(r);
        if chosen.len() * width > best.area() {
            *best = ZeroBlock { rows: chosen.clone(), cols: c.ones().collect() };
        }
        // even taking every remaining row cannot beat the best
        if (chosen.len() + masks.len() - r - 1) * width > best.area() {
            grow(masks, r + 1, &c, chosen, best);
        }
        chosen.pop();
    }
}
