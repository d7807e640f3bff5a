use super::components::{is_connected_formula, sorted_blocks};
use super::{check_input, EngineError};
use crate::closure::ClosureSubmatrix;
use crate::extnat::ExtNat;
use crate::group::GroupProfile;
use crate::matrix::StructuralMatrix;
use crate::pattern::{contains_pattern, max_zero_block, Pattern};

pub fn clique_number_formula(m: &StructuralMatrix, g: GroupProfile) -> Result<u64, EngineError> {
    check_input(m)?;
    let has = |p: Pattern| contains_pattern(m, &p);
    let order = g.order as u64;
    if g.abelian && has(Pattern::d(3)) && !has(Pattern::o(1, 3)) && !has(Pattern::o(3, 1)) && !has(Pattern::o(2, 2)) {
        return Ok(3 * order);
    }
    if g.abelian && has(Pattern::d(2)) && !has(Pattern::o(1, 2)) && !has(Pattern::o(2, 1)) {
        return Ok(2 * order);
    }
    Ok(order * max_zero_block(m)?.area() as u64)
}

pub fn girth_formula(m: &StructuralMatrix, g: GroupProfile) -> Result<ExtNat, EngineError> {
    check_input(m)?;
    Ok(match g.order {
        1 => {
            let has = |p: &Pattern| contains_pattern(m, p);
            let triangle = [Pattern::d(3), Pattern::o(1, 3), Pattern::o(3, 1), Pattern::o(2, 2)];
            let square = [
                Pattern::girth_a(),
                Pattern::girth_a().transpose(),
                Pattern::girth_b(),
                Pattern::girth_b().transpose(),
            ];
            if triangle.iter().any(has) {
                ExtNat::Finite(3)
            } else if square.iter().any(has) {
                ExtNat::Finite(4)
            } else {
                ExtNat::Infinite
            }
        }
        2 if m.zero_count() >= 2 => ExtNat::Finite(3),
        2 => ExtNat::Infinite,
        _ => ExtNat::Finite(3),
    })
}

/// Combines per-block terms for a disconnected graph.
fn disconnected_bound(terms: &[u64]) -> u64 {
    match terms {
        [only] => *only,
        _ => terms.iter().copied().fold(2, u64::max),
    }
}

pub fn chromatic_upper_edges(m: &StructuralMatrix, g: GroupProfile) -> Result<u64, EngineError> {
    let order = g.order as u64;
    let connected = is_connected_formula(m)?;
    let terms: Vec<u64> = sorted_blocks(m).iter().map(|b| b.zeros(m).len() as u64).collect();
    let bound = if connected { terms[0] } else { disconnected_bound(&terms) };
    Ok(bound * order)
}

/// c·r, or c·r − 1 when no Star sits where a c-zero column meets an r-zero row.
fn degree_term(m: &StructuralMatrix, b: &ClosureSubmatrix) -> u64 {
    let cz: Vec<usize> = b.cols.iter().map(|&i| b.rows.iter().filter(|&&l| m.is_zero(l, i)).count()).collect();
    let rz: Vec<usize> = b.rows.iter().map(|&l| b.cols.iter().filter(|&&i| m.is_zero(l, i)).count()).collect();
    let c = *cz.iter().max().unwrap();
    let r = *rz.iter().max().unwrap();
    let all_zero = b.zeros(m).len() == b.cell_count();
    let star_meet = b
        .rows
        .iter()
        .zip(&rz)
        .any(|(&l, &rl)| rl == r && b.cols.iter().zip(&cz).any(|(&i, &ci)| ci == c && !m.is_zero(l, i)));
    let cr = (c * r) as u64;
    if all_zero || star_meet {
        cr
    } else {
        cr - 1
    }
}

pub fn chromatic_upper_degree(m: &StructuralMatrix, g: GroupProfile) -> Result<u64, EngineError> {
    let order = g.order as u64;
    let connected = is_connected_formula(m)?;
    let terms: Vec<u64> = sorted_blocks(m).iter().map(|b| degree_term(m, b)).collect();
    let bound = if connected { terms[0] } else { disconnected_bound(&terms) };
    Ok(bound * order)
}

pub fn knit_degree_formula(m: &StructuralMatrix, g: GroupProfile) -> Result<Option<u64>, EngineError> {
    check_input(m)?;
    let left = g.order > 1 || contains_pattern(m, &Pattern::o(1, 2)) || contains_pattern(m, &Pattern::o(2, 1));
    Ok(left.then_some(1))
}
