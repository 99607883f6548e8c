use super::Graph;
use crate::error::{Error, Result};

/// Complement on the same vertex set, edges in lexicographic pair order.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2 - g.m());
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_simple(n, edges)
}

/// `G ∨ H`: vertices of `h` are shifted by `g.n()`. Edge order is the edges
/// of `g`, then those of `h`, then the cross edges lexicographically.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut edges = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + off, v + off)));
    for u in 0..g.n() {
        for v in 0..h.n() {
            edges.push((u, v + off));
        }
    }
    Graph::from_simple(off + h.n(), edges)
}

/// `G²`: `u ~ v` iff their distance in `g` is 1 or 2.
pub fn square(g: &Graph) -> Result<Graph> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let n = g.n();
    let mut near = vec![false; n];
    let mut edges = Vec::new();
    for u in 0..n {
        near.iter_mut().for_each(|x| *x = false);
        for w in g.neighbors(u) {
            near[w] = true;
            for x in g.neighbors(w) {
                near[x] = true;
            }
        }
        edges.extend((u + 1..n).filter(|&v| near[v]).map(|v| (u, v)));
    }
    Ok(Graph::from_simple(n, edges))
}

/// `L(G)`: one vertex per edge id of `g`, adjacent iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let mut edges = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        for (f, &(c, d)) in g.edges().iter().enumerate().skip(e + 1) {
            if a == c || a == d || b == c || b == d {
                edges.push((e, f));
            }
        }
    }
    Ok(Graph::from_simple(g.m(), edges))
}
