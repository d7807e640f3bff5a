//! Worked example matrices with hand-checked invariants.

use crate::matrix::StructuralMatrix;

fn parse(s: &str) -> StructuralMatrix {
    s.parse().expect("fixture parses")
}

/// 6x8 matrix with two single closures, one pair and eight star cells.
pub fn closure_example() -> StructuralMatrix {
    parse(
        "0x00xxxx\n\
         x0xx0xx0\n\
         0x0xx00x\n\
         0x0xx00x\n\
         x0xxxxxx\n\
         xxxxxxxx",
    )
}

/// Degree bound beats the edge bound.
pub fn chromatic_p() -> StructuralMatrix {
    parse("00xx\nx00x\nxx0x")
}

/// Edge bound beats the degree bound.
pub fn chromatic_p_prime() -> StructuralMatrix {
    parse("000x\n0xxx\nxxxx")
}

/// Four-cycle with trivial group and no triangle.
pub fn girth_b_witness() -> StructuralMatrix {
    parse("00x\nx00\nxxx")
}
