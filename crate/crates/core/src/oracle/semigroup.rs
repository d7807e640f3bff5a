use std::fmt;

use super::{OracleError, SimpleGraph};
use crate::group::FiniteGroup;
use crate::matrix::{SandwichMatrix, StructuralMatrix};

pub const VERTEX_LIMIT: usize = 2000;

/// An element of the 0-Rees matrix semigroup. Triples order lexicographically on (i, g, λ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Zero,
    Triple { i: usize, g: usize, lambda: usize },
}

impl Element {
    pub fn triple(i: usize, g: usize, lambda: usize) -> Self {
        Element::Triple { i, g, lambda }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Zero => f.write_str("0"),
            Element::Triple { i, g, lambda } => write!(f, "({},{},{})", i + 1, g, lambda + 1),
        }
    }
}

/// The semigroup M0[G; I, Λ; P], borrowed from its parts.
#[derive(Debug, Clone, Copy)]
pub struct Rees<'a> {
    pub group: &'a FiniteGroup,
    pub p: &'a SandwichMatrix,
}

impl<'a> Rees<'a> {
    pub fn new(group: &'a FiniteGroup, p: &'a SandwichMatrix) -> Self {
        Rees { group, p }
    }

    pub fn size(&self) -> usize {
        self.p.cols() * self.group.order() * self.p.rows() + 1
    }

    /// Zero first, then triples in lexicographic order.
    pub fn elements(&self) -> Vec<Element> {
        let mut out = vec![Element::Zero];
        out.extend(self.triples());
        out
    }

    pub fn triples(&self) -> Vec<Element> {
        let (n, r) = (self.group.order(), self.p.rows());
        (0..self.p.cols())
            .flat_map(|i| (0..n).flat_map(move |g| (0..r).map(move |lambda| Element::triple(i, g, lambda))))
            .collect()
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        multiply(a, b, self.group, self.p)
    }

    /// Commutativity read off the matrix: same cell and x p y = y p x, or
    /// p_{λj} = p_{μi} = 0.
    pub fn criterion(&self, a: Element, b: Element) -> bool {
        match (a, b) {
            (Element::Triple { i, g: x, lambda }, Element::Triple { i: j, g: y, lambda: mu }) => {
                let same = i == j
                    && lambda == mu
                    && self.p.get(lambda, i).is_some_and(|p| {
                        let gr = self.group;
                        gr.mul(gr.mul(x, p), y) == gr.mul(gr.mul(y, p), x)
                    });
                same || (self.p.get(lambda, j).is_none() && self.p.get(mu, i).is_none())
            }
            _ => true,
        }
    }

    fn guard(&self) -> Result<(), OracleError> {
        let n = self.size() - 1;
        if n > VERTEX_LIMIT {
            return Err(OracleError::SizeLimit { what: "semigroup vertices", size: n, limit: VERTEX_LIMIT });
        }
        Ok(())
    }
}

pub fn multiply(a: Element, b: Element, g: &FiniteGroup, p: &SandwichMatrix) -> Element {
    match (a, b) {
        (Element::Triple { i, g: x, lambda }, Element::Triple { i: j, g: y, lambda: mu }) => match p.get(lambda, j) {
            Some(pl) => Element::triple(i, g.mul(g.mul(x, pl), y), mu),
            None => Element::Zero,
        },
        _ => Element::Zero,
    }
}

pub fn semigroup_center(g: &FiniteGroup, p: &SandwichMatrix) -> Result<Vec<Element>, OracleError> {
    let s = Rees::new(g, p);
    s.guard()?;
    let all = s.elements();
    Ok(all.iter().copied().filter(|&a| all.iter().all(|&b| s.mul(a, b) == s.mul(b, a))).collect())
}

/// Commuting graph on the non-central elements. Every pair is checked
/// against the matrix criterion as well as by multiplying.
pub fn build_commuting_graph(g: &FiniteGroup, p: &SandwichMatrix) -> Result<SimpleGraph<Element>, OracleError> {
    let s = Rees::new(g, p);
    let center = semigroup_center(g, p)?;
    let verts: Vec<Element> = s.elements().into_iter().filter(|e| !center.contains(e)).collect();
    if verts.is_empty() {
        return Err(OracleError::Commutative);
    }
    let mut graph = SimpleGraph::edgeless(verts);
    let n = graph.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (*graph.label(u), *graph.label(v));
            let commute = s.mul(a, b) == s.mul(b, a);
            if commute != s.criterion(a, b) {
                return Err(OracleError::CriterionMismatch { a: a.to_string(), b: b.to_string() });
            }
            if commute {
                graph.add_edge(u, v);
            }
        }
    }
    Ok(graph)
}

/// Vertex (i, λ) of the simplified graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexPair {
    pub i: usize,
    pub lambda: usize,
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i + 1, self.lambda + 1)
    }
}

pub type SimplifiedGraph = SimpleGraph<IndexPair>;

/// Graph on I x Λ: distinct (i,λ), (j,μ) adjacent iff p_{λj} = p_{μi} = 0.
pub fn build_simplified_graph(m: &StructuralMatrix) -> SimplifiedGraph {
    let verts: Vec<IndexPair> =
        (0..m.cols()).flat_map(|i| (0..m.rows()).map(move |lambda| IndexPair { i, lambda })).collect();
    SimpleGraph::from_relation(verts, |a, b| m.is_zero(a.lambda, b.i) && m.is_zero(b.lambda, a.i))
}
