//! Simple undirected graphs with dense vertex and edge ids.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`, edges are
//! `0..m` in input order (after parallel pairs are collapsed), and every
//! edge is stored with its smaller endpoint first.

mod blocks;
pub mod io;
mod recognize;
mod transform;

pub use blocks::{block_decomposition, BlockDecomposition};
pub use recognize::{common_neighbors, is_chordal, is_complete_multipartite, is_triangular};
pub use transform::{complement, join, line_graph, square};

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

/// A simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge id), sorted by neighbor
    adj: Vec<Vec<(usize, usize)>>,
}

/// A subgraph together with the maps back into its parent graph.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertices[i]` is the parent id of local vertex `i`.
    pub vertices: Vec<usize>,
    /// `edges[i]` is the parent id of local edge `i`.
    pub edges: Vec<usize>,
}

impl Graph {
    /// Builds the underlying simple graph of a list of vertex pairs.
    ///
    /// Repeated pairs (in either orientation) are collapsed onto the first
    /// occurrence, which keeps its position in the edge order. Loops are
    /// rejected.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut seen = HashSet::with_capacity(pairs.len());
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let e = (u.min(v), u.max(v));
            if seen.insert(e) {
                edges.push(e);
            }
        }
        Ok(Self::from_simple(n, edges))
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_simple(n, Vec::new())
    }

    /// Caller guarantees: endpoints in range, no loops, no duplicates, `u < v`.
    pub(crate) fn from_simple(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            debug_assert!(u < v && v < n);
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Decodes an adjacency bitmask over the vertex pairs in lexicographic
    /// order `(0,1), (0,2), .., (0,n-1), (1,2), ..`. Requires `n <= 11`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(
            n * n.saturating_sub(1) / 2 <= 64,
            "mask graphs need n <= 11"
        );
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Self::from_simple(n, edges)
    }

    /// Inverse of [`Graph::from_mask`].
    pub fn to_mask(&self) -> u64 {
        assert!(
            self.n * self.n.saturating_sub(1) / 2 <= 64,
            "mask graphs need n <= 11"
        );
        self.edges
            .iter()
            .fold(0u64, |acc, &(u, v)| acc | 1 << pair_index(self.n, u, v))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// `(neighbor, edge id)` pairs of `v`, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a]
            .binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[a][i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Connected components as sorted vertex lists, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut parts = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = vec![s];
            label[s] = id;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = id;
                        part.push(w);
                        queue.push_back(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    /// Component index of every vertex, numbered as in [`Graph::components`].
    pub fn component_labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.n];
        for (i, part) in self.components().iter().enumerate() {
            for &v in part {
                label[v] = i;
            }
        }
        label
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.m() + 1 == self.n
    }

    /// Connected, at least three vertices and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let bd = block_decomposition(self);
        bd.blocks.len() == 1 && !bd.is_bridge[0]
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced by `vertices`; local vertex `i` is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Subgraph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut ids = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                let (a, b) = (local[u], local[v]);
                edges.push((a.min(b), a.max(b)));
                ids.push(id);
            }
        }
        Subgraph {
            graph: Graph::from_simple(vertices.len(), edges),
            vertices: vertices.to_vec(),
            edges: ids,
        }
    }

    /// Subgraph formed by the given edge ids and their endpoints. Local edge
    /// `i` is `edge_ids[i]`; local vertices are numbered by increasing parent id.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> Subgraph {
        let mut vertices: Vec<usize> = edge_ids
            .iter()
            .flat_map(|&e| {
                let (u, v) = self.edges[e];
                [u, v]
            })
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = edge_ids
            .iter()
            .map(|&e| {
                let (u, v) = self.edges[e];
                (local[u], local[v])
            })
            .collect();
        Subgraph {
            graph: Graph::from_simple(vertices.len(), edges),
            vertices,
            edges: edge_ids.to_vec(),
        }
    }

    /// `G - F` on the same vertex set; the remaining edges keep their relative order.
    pub fn remove_edges(&self, edge_ids: &[usize]) -> Subgraph {
        let drop: HashSet<usize> = edge_ids.iter().copied().collect();
        let ids: Vec<usize> = (0..self.m()).filter(|e| !drop.contains(e)).collect();
        let edges = ids.iter().map(|&e| self.edges[e]).collect();
        Subgraph {
            graph: Graph::from_simple(self.n, edges),
            vertices: (0..self.n).collect(),
            edges: ids,
        }
    }

    /// `G - v`, with the remaining vertices relabelled in order.
    pub fn remove_vertex(&self, v: usize) -> Subgraph {
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

/// Position of the pair `u < v` in the lexicographic pair order used by masks.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}
