#![allow(dead_code)]

use proptest::prelude::*;
use rees_core::{Cell, StructuralMatrix};

/// Regular matrices with at least one zero.
pub fn regular(max_rows: usize, max_cols: usize) -> impl Strategy<Value = StructuralMatrix> {
    (2..=max_rows, 2..=max_cols)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(prop::bool::weighted(0.45), r * c)))
        .prop_map(|(r, c, z)| {
            let cells = z.into_iter().map(|b| if b { Cell::Zero } else { Cell::Star }).collect();
            StructuralMatrix::new(r, c, cells).unwrap()
        })
        .prop_filter("regular with a zero", |m| m.is_regular() && m.has_zero())
}

/// Any matrix, regular or not.
pub fn any_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = StructuralMatrix> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(any::<bool>(), r * c)))
        .prop_map(|(r, c, z)| {
            let cells = z.into_iter().map(|b| if b { Cell::Zero } else { Cell::Star }).collect();
            StructuralMatrix::new(r, c, cells).unwrap()
        })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
