//! Simple undirected graphs stored as bitset adjacency rows.
//!
//! Vertices are dense `0..n` labels. Isolated vertices are kept explicitly;
//! routines that want to ignore them (enumeration, spectra) do so themselves.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits;
use crate::error::{check_cap, Error, Result};

/// Largest vertex count a [`Graph`] may hold. Rows are dense bitsets, so the
/// adjacency of a graph at the cap occupies 32 MiB.
pub const MAX_VERTICES: usize = 1 << 14;

/// A simple undirected graph with a cached edge count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`]; use [`Graph::try_empty`] for a checked variant.
    pub fn empty(n: usize) -> Graph {
        Graph::try_empty(n).expect("vertex count over cap")
    }

    pub fn try_empty(n: usize) -> Result<Graph> {
        check_cap("vertex count", n, MAX_VERTICES)?;
        let stride = bits::words_for(n).max(1);
        Ok(Graph {
            n,
            stride,
            adj: vec![0; stride * n],
            m: 0,
        })
    }

    /// Builds a graph from an edge list, collapsing duplicate edges.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::try_empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    /// Adjacency row as a single word. Only valid when `n <= 64`.
    #[inline]
    pub(crate) fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[v * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    /// Inserts the edge `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v})");
        if self.has_edge(u, v) {
            return false;
        }
        let s = self.stride;
        bits::set(&mut self.adj[u * s..(u + 1) * s], v);
        bits::set(&mut self.adj[v * s..(v + 1) * s], u);
        self.m += 1;
        true
    }

    /// Deletes the edge `uv`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "bad edge ({u}, {v})");
        if u == v || !self.has_edge(u, v) {
            return false;
        }
        let s = self.stride;
        bits::clear(&mut self.adj[u * s..(u + 1) * s], v);
        bits::clear(&mut self.adj[v * s..(v + 1) * s], u);
        self.m -= 1;
        true
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        if !self.remove_edge(u, v) {
            self.add_edge(u, v);
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter_ones(self.row(v))
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.m == 0
    }

    pub fn isolated_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 0).count()
    }

    /// Connected components, each sorted, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Copy with every isolated vertex dropped (remaining labels keep their order).
    pub fn without_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        self.induced(&keep)
    }

    /// Copy padded with `extra` isolated vertices labelled after the existing ones.
    pub fn with_isolated(&self, extra: usize) -> Result<Graph> {
        let mut g = Graph::try_empty(self.n + extra)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Proper 2-colouring (`false`/`true` per vertex) if one exists.
    /// Each component's lowest vertex receives `false`.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Parts of a complete multipartite structure, if the graph has one.
    ///
    /// A graph is complete multipartite iff non-adjacency is an equivalence
    /// relation. Parts are listed by lowest vertex.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        let mut part_of = vec![usize::MAX; self.n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            if part_of[v] != usize::MAX {
                continue;
            }
            let idx = parts.len();
            let members: Vec<usize> = (0..self.n)
                .filter(|&u| u == v || !self.has_edge(u, v))
                .collect();
            for &u in &members {
                if part_of[u] != usize::MAX {
                    return None;
                }
                part_of[u] = idx;
            }
            parts.push(members);
        }
        for u in 0..self.n {
            for w in u + 1..self.n {
                if (part_of[u] == part_of[w]) == self.has_edge(u, w) {
                    return None;
                }
            }
        }
        Some(parts)
    }

    /// Join `self ∨ other`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        join(self, other)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Serialized as `{"n": .., "edges": [[u, v], ..]}`.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EdgeListRepr {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
        let r = EdgeListRepr::deserialize(d)?;
        Graph::from_edge_list(r.n, &r.edges).map_err(serde::de::Error::custom)
    }
}

/// Join of `g` and `h`: disjoint union plus every edge between the two sides.
/// `g` keeps labels `0..|g|`, `h` is shifted by `|g|`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = disjoint_union(g, h)?;
    let a = g.order();
    for u in 0..a {
        for v in 0..h.order() {
            out.add_edge(u, a + v);
        }
    }
    Ok(out)
}

/// Disjoint union; `h` is shifted by `|g|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let a = g.order();
    let mut out = Graph::try_empty(a + h.order())?;
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(a + u, a + v);
    }
    Ok(out)
}

/// `t`-blow-up: vertex `v` becomes the independent class `v*t .. v*t+t`,
/// each edge becomes a complete bipartite `K_{t,t}`.
pub fn blow_up(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidParameter("blow-up factor must be positive".into()));
    }
    let n = g
        .order()
        .checked_mul(t)
        .ok_or(Error::OverCap { what: "vertex count", size: usize::MAX, cap: MAX_VERTICES })?;
    let mut out = Graph::try_empty(n)?;
    for (u, v) in g.edges() {
        for a in 0..t {
            for b in 0..t {
                out.add_edge(u * t + a, v * t + b);
            }
        }
    }
    Ok(out)
}

/// Labelled edit distance: size of the symmetric difference of the edge sets
/// under the identity labelling. The smaller graph is extended by isolated vertices.
pub fn edit_distance_labeled(g: &Graph, h: &Graph) -> usize {
    let (big, small) = if g.order() >= h.order() { (g, h) } else { (h, g) };
    let mut d = 0;
    for u in 0..big.order() {
        let rb = big.row(u);
        if u < small.order() {
            let rs = small.row(u);
            for (i, &w) in rb.iter().enumerate() {
                let ws = rs.get(i).copied().unwrap_or(0);
                d += (w ^ ws).count_ones() as usize;
            }
        } else {
            d += bits::count(rb);
        }
    }
    // rows of the larger graph beyond the smaller's range were counted once per
    // endpoint like the rest, so every differing edge was seen twice.
    d / 2
}
