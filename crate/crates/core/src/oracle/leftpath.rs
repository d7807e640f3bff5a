use std::collections::VecDeque;

use super::semigroup::{build_commuting_graph, Element, Rees};
use super::{OracleError, SimpleGraph};
use crate::group::FiniteGroup;
use crate::matrix::SandwichMatrix;

/// A path x1 .. xn in the commuting graph with x1 xi = xn xi for every i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftPath {
    pub vertices: Vec<Element>,
}

impl LeftPath {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }
}

struct Search<'a> {
    s: Rees<'a>,
    graph: SimpleGraph<Element>,
}

impl Search<'_> {
    fn endpoints_ok(&self, a: Element, b: Element) -> bool {
        let s = &self.s;
        s.mul(a, a) == s.mul(b, a) && s.mul(a, b) == s.mul(b, b)
    }

    /// Shortest left path from `u` to `v` of length at most `max_len`.
    fn shortest(&self, u: usize, v: usize, max_len: usize) -> Option<LeftPath> {
        let (a, b) = (*self.graph.label(u), *self.graph.label(v));
        if !self.endpoints_ok(a, b) {
            return None;
        }
        let n = self.graph.vertex_count();
        let allowed: Vec<bool> = (0..n)
            .map(|w| w == v || (w != u && self.s.mul(a, *self.graph.label(w)) == self.s.mul(b, *self.graph.label(w))))
            .collect();
        let mut prev = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        depth[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if depth[x] == max_len {
                continue;
            }
            for y in self.graph.neighbors(x) {
                if !allowed[y] || depth[y] != usize::MAX {
                    continue;
                }
                depth[y] = depth[x] + 1;
                prev[y] = x;
                if y == v {
                    let mut path = vec![v];
                    let mut c = v;
                    while c != u {
                        c = prev[c];
                        path.push(c);
                    }
                    path.reverse();
                    return Some(LeftPath { vertices: path.into_iter().map(|w| *self.graph.label(w)).collect() });
                }
                queue.push_back(y);
            }
        }
        None
    }
}

fn search<'a>(g: &'a FiniteGroup, p: &'a SandwichMatrix) -> Result<Search<'a>, OracleError> {
    Ok(Search { s: Rees::new(g, p), graph: build_commuting_graph(g, p)? })
}

/// For every ordered pair of distinct endpoints joined by a left path of
/// length at most `max_len`, one shortest such path.
pub fn find_left_paths(g: &FiniteGroup, p: &SandwichMatrix, max_len: usize) -> Result<Vec<LeftPath>, OracleError> {
    let s = search(g, p)?;
    let n = s.graph.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v {
                out.extend(s.shortest(u, v, max_len));
            }
        }
    }
    Ok(out)
}

/// Least length of a left path, searching up to `max_len`.
pub fn knit_degree(g: &FiniteGroup, p: &SandwichMatrix, max_len: usize) -> Result<Option<u64>, OracleError> {
    let s = search(g, p)?;
    let n = s.graph.vertex_count();
    // length one needs only an edge, so try those first
    for u in 0..n {
        for v in s.graph.neighbors(u) {
            if s.endpoints_ok(*s.graph.label(u), *s.graph.label(v)) {
                return Ok(Some(1));
            }
        }
    }
    let mut best: Option<u64> = None;
    for u in 0..n {
        for v in 0..n {
            if u != v {
                if let Some(path) = s.shortest(u, v, max_len) {
                    best = Some(best.map_or(path.len() as u64, |b| b.min(path.len() as u64)));
                }
            }
        }
    }
    Ok(best)
}
