//! Simple undirected graphs over bitset adjacency, with the textbook
//! algorithms the oracle needs.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use super::OracleError;
use crate::extnat::ExtNat;

pub const CHROMATIC_LIMIT: usize = 40;
pub const NAIVE_CLIQUE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph<L> {
    labels: Vec<L>,
    adj: Vec<FixedBitSet>,
}

impl<L> SimpleGraph<L> {
    pub fn edgeless(labels: Vec<L>) -> Self {
        let n = labels.len();
        SimpleGraph { labels, adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn complete(labels: Vec<L>) -> Self {
        let mut g = SimpleGraph::edgeless(labels);
        let n = g.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds the graph whose edges are the distinct pairs satisfying `rel`.
    /// `rel` is only called with the lower index first.
    pub fn from_relation(labels: Vec<L>, mut rel: impl FnMut(&L, &L) -> bool) -> Self {
        let mut g = SimpleGraph::edgeless(labels);
        let n = g.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                if rel(&g.labels[u], &g.labels[v]) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones(..)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].ones()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> &L {
        &self.labels[u]
    }

    pub fn index_of(&self, l: &L) -> Option<usize>
    where
        L: PartialEq,
    {
        self.labels.iter().position(|x| x == l)
    }

    pub fn induced(&self, verts: &[usize]) -> SimpleGraph<L>
    where
        L: Clone,
    {
        let labels = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = SimpleGraph::edgeless(labels);
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Graph join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &SimpleGraph<L>) -> SimpleGraph<L>
    where
        L: Clone,
    {
        let n = self.vertex_count();
        let labels = self.labels.iter().chain(other.labels.iter()).cloned().collect();
        let mut g = SimpleGraph::edgeless(labels);
        for u in 0..n {
            for v in self.neighbors(u).filter(|&v| v > u) {
                g.add_edge(u, v);
            }
            for v in 0..other.vertex_count() {
                g.add_edge(u, n + v);
            }
        }
        for u in 0..other.vertex_count() {
            for v in other.neighbors(u).filter(|&v| v > u) {
                g.add_edge(n + u, n + v);
            }
        }
        g
    }

    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen.put(v) {
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Largest eccentricity over the vertices of one connected part.
    pub fn component_diameter(&self, part: &[usize]) -> usize {
        part.iter().map(|&s| self.bfs_distances(s).into_iter().flatten().max().unwrap_or(0)).max().unwrap_or(0)
    }

    pub fn diameter(&self) -> ExtNat {
        let comps = self.components();
        match comps.as_slice() {
            [only] => ExtNat::Finite(self.component_diameter(only) as u64),
            _ => ExtNat::Infinite,
        }
    }

    /// A maximum clique, via Bron–Kerbosch with Tomita pivoting.
    pub fn max_clique(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut p = FixedBitSet::with_capacity(n);
        p.insert_range(..);
        let x = FixedBitSet::with_capacity(n);
        let mut best = Vec::new();
        let mut r = Vec::new();
        self.bk(&mut r, p, x, &mut best);
        best.sort_unstable();
        best
    }

    fn bk(&self, r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet, best: &mut Vec<usize>) {
        if p.is_clear() {
            if x.is_clear() && r.len() > best.len() {
                *best = r.clone();
            }
            return;
        }
        if r.len() + p.count_ones(..) <= best.len() {
            return;
        }
        let pivot = p.ones().chain(x.ones()).max_by_key(|&u| p.intersection(&self.adj[u]).count()).unwrap();
        let mut cands = p.clone();
        cands.difference_with(&self.adj[pivot]);
        for v in cands.ones() {
            let mut np = p.clone();
            np.intersect_with(&self.adj[v]);
            let mut nx = x.clone();
            nx.intersect_with(&self.adj[v]);
            r.push(v);
            self.bk(r, np, nx, best);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }

    /// Clique number by enumerating every vertex subset.
    pub fn max_clique_naive(&self) -> Result<usize, OracleError> {
        let n = self.vertex_count();
        if n > NAIVE_CLIQUE_LIMIT {
            return Err(OracleError::SizeLimit { what: "naive clique", size: n, limit: NAIVE_CLIQUE_LIMIT });
        }
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let k = mask.count_ones() as usize;
            if k <= best {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let clique = vs.iter().enumerate().all(|(a, &u)| vs[a + 1..].iter().all(|&v| self.has_edge(u, v)));
            if clique {
                best = k;
            }
        }
        Ok(best)
    }

    /// Girth by removing each edge in turn and measuring the shortest
    /// detour between its endpoints.
    pub fn shortest_cycle(&self) -> ExtNat {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for u in 0..n {
            for v in self.neighbors(u).filter(|&v| v > u) {
                if best == Some(3) {
                    return ExtNat::Finite(3);
                }
                // BFS from u to v without the edge uv, cut off at the current best
                let limit = best.map_or(usize::MAX, |b| b - 1);
                dist.iter_mut().for_each(|d| *d = usize::MAX);
                queue.clear();
                dist[u] = 0;
                queue.push_back(u);
                'bfs: while let Some(a) = queue.pop_front() {
                    if dist[a] + 1 >= limit {
                        break;
                    }
                    for b in self.neighbors(a) {
                        if (a == u && b == v) || dist[b] != usize::MAX {
                            continue;
                        }
                        dist[b] = dist[a] + 1;
                        if b == v {
                            break 'bfs;
                        }
                        queue.push_back(b);
                    }
                }
                if dist[v] != usize::MAX {
                    let len = dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        ExtNat::from(best)
    }

    /// Exact chromatic number by DSATUR backtracking seeded with a maximum clique.
    pub fn exact_chromatic(&self) -> Result<usize, OracleError> {
        let n = self.vertex_count();
        if n > CHROMATIC_LIMIT {
            return Err(OracleError::SizeLimit { what: "exact chromatic", size: n, limit: CHROMATIC_LIMIT });
        }
        if n == 0 {
            return Ok(0);
        }
        let clique = self.max_clique();
        let mut k = clique.len().max(1);
        loop {
            let mut colors = vec![usize::MAX; n];
            for (c, &v) in clique.iter().enumerate() {
                colors[v] = c;
            }
            if self.color_with(&mut colors, k, clique.len()) {
                return Ok(k);
            }
            k += 1;
        }
    }

    fn color_with(&self, colors: &mut [usize], k: usize, used: usize) -> bool {
        // uncolored vertex with the most distinct neighbour colours
        let mut pick = None;
        let mut pick_key = (0, 0);
        for v in 0..colors.len() {
            if colors[v] != usize::MAX {
                continue;
            }
            let mut seen = 0u64;
            for w in self.neighbors(v) {
                if colors[w] != usize::MAX {
                    seen |= 1 << colors[w];
                }
            }
            let key = (seen.count_ones() as usize + 1, self.degree(v));
            if key > pick_key {
                pick_key = key;
                pick = Some((v, seen));
            }
        }
        let Some((v, seen)) = pick else {
            return true;
        };
        // a fresh colour is interchangeable with any other unused one
        for c in 0..k.min(used + 1) {
            if seen >> c & 1 == 1 {
                continue;
            }
            colors[v] = c;
            if self.color_with(colors, k, used.max(c + 1)) {
                return true;
            }
        }
        colors[v] = usize::MAX;
        false
    }

    /// Checks that `map` is a bijection onto `other` preserving and reflecting adjacency.
    pub fn is_isomorphism<M>(&self, other: &SimpleGraph<M>, map: &[usize]) -> bool {
        let n = self.vertex_count();
        if map.len() != n || other.vertex_count() != n {
            return false;
        }
        let mut hit = FixedBitSet::with_capacity(n);
        if map.iter().any(|&m| m >= n || hit.put(m)) {
            return false;
        }
        (0..n).all(|u| (u + 1..n).all(|v| self.has_edge(u, v) == other.has_edge(map[u], map[v])))
    }

    /// Graphviz rendering; vertices appear in index order.
    pub fn to_dot(&self, name: &str, label: impl Fn(&L) -> String) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for (u, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  v{u} [label=\"{}\"];", label(l));
        }
        for u in 0..self.vertex_count() {
            for v in self.neighbors(u).filter(|&v| v > u) {
                let _ = writeln!(out, "  v{u} -- v{v};");
            }
        }
        out.push_str("}\n");
        out
    }
}
