use std::collections::HashSet;

use super::components::{classify_components, ComponentDescriptor};
use super::{check_input, EngineError};
use crate::closure::{run_closure, ClosureSubmatrix};
use crate::extnat::ExtNat;
use crate::group::GroupProfile;
use crate::matrix::StructuralMatrix;

/// Diameter of a single-closure component when it is 0, 1 or 2; `None`
/// means the diameter is at least 3.
pub fn single_diameter_small(q: &ClosureSubmatrix, m: &StructuralMatrix, g: GroupProfile) -> Option<u64> {
    let one_by_one = q.rows.len() == 1 && q.cols.len() == 1;
    if one_by_one && !g.is_trivial() {
        return Some(1);
    }
    let zeros = q.zeros(m);
    if zeros.len() == q.cell_count() {
        return Some(if one_by_one { 0 } else { 1 });
    }
    let rows_meet = pairs(&q.rows).all(|(l, mu)| q.cols.iter().any(|&i| m.is_zero(l, i) && m.is_zero(mu, i)));
    let cols_meet = pairs(&q.cols).all(|(i, j)| q.rows.iter().any(|&l| m.is_zero(l, i) && m.is_zero(l, j)));
    if rows_meet && cols_meet {
        return Some(2);
    }
    None
}

fn pairs(v: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    v.iter().enumerate().flat_map(move |(a, &x)| v[a + 1..].iter().map(move |&y| (x, y)))
}

fn z_of(m: &StructuralMatrix, (l, i): (usize, usize)) -> u64 {
    run_closure(m, l, i).expect("start is a zero").z_index() as u64
}

/// Closure starts the plain method uses: every zero of the block.
pub fn naive_starts(q: &ClosureSubmatrix, m: &StructuralMatrix) -> Vec<(usize, usize)> {
    q.zeros(m)
}

/// Closure starts left after dropping the zeros under one all-zero row or
/// column segment and keeping one zero per pair of equal row and column
/// classes. Only valid when the component diameter is at least 3.
pub fn fastpath_starts(q: &ClosureSubmatrix, m: &StructuralMatrix) -> Vec<(usize, usize)> {
    let zeros = q.zeros(m);
    // the line whose zero segment covers the most zeros of the block
    let mut dropped = vec![false; zeros.len()];
    let mut best = 0;
    let row_lines = q.rows.iter().map(|&l| {
        let seg: Vec<usize> = q.cols.iter().copied().filter(|&i| m.is_zero(l, i)).collect();
        zeros.iter().map(|(_, i)| seg.contains(i)).collect::<Vec<_>>()
    });
    let col_lines = q.cols.iter().map(|&i| {
        let seg: Vec<usize> = q.rows.iter().copied().filter(|&l| m.is_zero(l, i)).collect();
        zeros.iter().map(|(l, _)| seg.contains(l)).collect::<Vec<_>>()
    });
    for cand in row_lines.chain(col_lines) {
        let n = cand.iter().filter(|&&d| d).count();
        if n > best {
            best = n;
            dropped = cand;
        }
    }
    let row_class =
        |l: usize| q.rows.iter().copied().find(|&mu| q.cols.iter().all(|&i| m.get(l, i) == m.get(mu, i))).unwrap();
    let col_class =
        |i: usize| q.cols.iter().copied().find(|&j| q.rows.iter().all(|&l| m.get(l, i) == m.get(l, j))).unwrap();
    let mut seen = HashSet::new();
    zeros
        .into_iter()
        .zip(dropped)
        .filter(|&(_, d)| !d)
        .map(|(z, _)| z)
        .filter(|&(l, i)| seen.insert((row_class(l), col_class(i))))
        .collect()
}

fn single_diameter(q: &ClosureSubmatrix, m: &StructuralMatrix, g: GroupProfile, fast: bool) -> u64 {
    if let Some(d) = single_diameter_small(q, m, g) {
        return d;
    }
    if fast {
        fastpath_starts(q, m).into_iter().map(|s| z_of(m, s)).fold(3, u64::max)
    } else {
        naive_starts(q, m).into_iter().map(|s| z_of(m, s)).max().unwrap_or(0)
    }
}

pub(crate) fn descriptor_diameter(d: &ComponentDescriptor, m: &StructuralMatrix, g: GroupProfile, fast: bool) -> u64 {
    match d {
        ComponentDescriptor::SingleClosure(q) => single_diameter(q, m, g, fast),
        ComponentDescriptor::PairClosure(q, r) => {
            let singletons = [&q.rows, &q.cols, &r.rows, &r.cols].iter().all(|s| s.len() == 1);
            if singletons && g.abelian && !g.is_trivial() {
                1
            } else {
                1 + single_diameter(q, m, g, fast).max(single_diameter(r, m, g, fast))
            }
        }
        ComponentDescriptor::StarCell { .. } => match (g.is_trivial(), g.abelian) {
            (true, _) => 0,
            (false, true) => 1,
            (false, false) => 2,
        },
    }
}

pub fn component_diameter(d: &ComponentDescriptor, m: &StructuralMatrix, g: GroupProfile) -> Result<u64, EngineError> {
    if !classify_components(m)?.contains(d) {
        return Err(EngineError::ForeignDescriptor);
    }
    Ok(descriptor_diameter(d, m, g, false))
}

fn whole_diameter(m: &StructuralMatrix, g: GroupProfile, fast: bool) -> Result<ExtNat, EngineError> {
    check_input(m)?;
    let comps = classify_components(m)?;
    Ok(match comps.as_slice() {
        [only] => ExtNat::Finite(descriptor_diameter(only, m, g, fast)),
        _ => ExtNat::Infinite,
    })
}

pub fn diameter_formula(m: &StructuralMatrix, g: GroupProfile) -> Result<ExtNat, EngineError> {
    whole_diameter(m, g, false)
}

/// Same value as [`diameter_formula`] with fewer closure runs.
pub fn diameter_fastpath(m: &StructuralMatrix, g: GroupProfile) -> Result<ExtNat, EngineError> {
    whole_diameter(m, g, true)
}
