use super::semigroup::{build_commuting_graph, Element};
use super::OracleError;
use crate::group::FiniteGroup;
use crate::matrix::SandwichMatrix;

/// The bijection between the commuting graphs of two sandwich matrices with
/// the same zero pattern, as pairs (vertex of P's graph, image in Q's graph).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiMap {
    pub pairs: Vec<(Element, Element)>,
}

impl PsiMap {
    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|(a, b)| a == b)
    }
}

fn check_shapes(p: &SandwichMatrix, q: &SandwichMatrix) -> Result<(), OracleError> {
    if p.rows() != q.rows() || p.cols() != q.cols() {
        return Err(OracleError::ShapeMismatch);
    }
    for row in 0..p.rows() {
        for col in 0..p.cols() {
            if p.get(row, col).is_some() != q.get(row, col).is_some() {
                return Err(OracleError::StructuralMismatch { row, col });
            }
        }
    }
    if !p.structural().is_regular() {
        return Err(OracleError::NotRegular);
    }
    Ok(())
}

/// (i, x, λ) goes to (i, x p_{λi} q_{λi}^-1, λ), and is fixed when p_{λi} = 0.
/// The map is checked to preserve and reflect adjacency.
pub fn psi_isomorphism(p: &SandwichMatrix, q: &SandwichMatrix, g: &FiniteGroup) -> Result<PsiMap, OracleError> {
    check_shapes(p, q)?;
    let gp = build_commuting_graph(g, p)?;
    let gq = build_commuting_graph(g, q)?;
    let image = |e: Element| match e {
        Element::Triple { i, g: x, lambda } => match (p.get(lambda, i), q.get(lambda, i)) {
            (Some(a), Some(b)) => Element::triple(i, g.mul(g.mul(x, a), g.inverse(b)), lambda),
            _ => e,
        },
        Element::Zero => e,
    };
    let mut map = Vec::with_capacity(gp.vertex_count());
    let mut pairs = Vec::with_capacity(gp.vertex_count());
    for &v in gp.labels() {
        let w = image(v);
        map.push(gq.index_of(&w).ok_or(OracleError::NotIsomorphism)?);
        pairs.push((v, w));
    }
    if !gp.is_isomorphism(&gq, &map) {
        return Err(OracleError::NotIsomorphism);
    }
    Ok(PsiMap { pairs })
}
