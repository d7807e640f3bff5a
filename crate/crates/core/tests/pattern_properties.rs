mod common;

use proptest::prelude::*;
use rees_core::pattern::{contains_pattern, contains_submatrix, equivalent, max_zero_block, Pattern};
use rees_core::StructuralMatrix;

/// Largest all-zero submatrix by trying every row subset.
fn brute_zero_block(m: &StructuralMatrix) -> usize {
    (1u32..1 << m.rows())
        .map(|mask| {
            let rows: Vec<usize> = (0..m.rows()).filter(|r| mask >> r & 1 == 1).collect();
            let cols = (0..m.cols()).filter(|&c| rows.iter().all(|&r| m.is_zero(r, c))).count();
            rows.len() * cols
        })
        .max()
        .unwrap()
}

fn patterns() -> Vec<Pattern> {
    vec![
        Pattern::d(2),
        Pattern::d(3),
        Pattern::o(1, 2),
        Pattern::o(2, 1),
        Pattern::o(1, 3),
        Pattern::o(2, 2),
        Pattern::girth_a(),
        Pattern::girth_b(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn zero_block_matches_brute_force(m in common::any_matrix(6, 7)) {
        prop_assume!(m.has_zero());
        prop_assert_eq!(max_zero_block(&m).unwrap().area(), brute_zero_block(&m));
    }

    #[test]
    fn containment_respects_transpose(m in common::any_matrix(5, 5)) {
        for p in patterns() {
            prop_assert_eq!(contains_pattern(&m, &p), contains_pattern(&m.transpose(), &p.transpose()));
        }
    }

    #[test]
    fn containment_is_permutation_invariant(
        (m, rp, cp) in common::any_matrix(5, 5).prop_flat_map(|m| {
            let (r, c) = (m.rows(), m.cols());
            (Just(m), common::permutation(r), common::permutation(c))
        })
    ) {
        let q = m.permuted(&rp, &cp);
        prop_assert_eq!(equivalent(&m, &q), Ok(true));
        for p in patterns() {
            prop_assert_eq!(contains_pattern(&m, &p), contains_pattern(&q, &p));
        }
    }

    #[test]
    fn submatrices_are_contained(m in common::any_matrix(5, 5), rm in 1u32..32, cm in 1u32..32) {
        let rows: Vec<usize> = (0..m.rows()).filter(|r| rm >> r & 1 == 1).collect();
        let cols: Vec<usize> = (0..m.cols()).filter(|c| cm >> c & 1 == 1).collect();
        prop_assume!(!rows.is_empty() && !cols.is_empty());
        prop_assert!(contains_submatrix(&m, &m.submatrix(&rows, &cols)));
    }
}
