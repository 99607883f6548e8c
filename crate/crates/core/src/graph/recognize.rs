use super::Graph;
use crate::error::{Error, Result};

/// `N(u) ∩ N(v)` in increasing order.
pub fn common_neighbors(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    if u == v {
        return Err(Error::SameVertex(u));
    }
    for w in [u, v] {
        if w >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                n: g.n(),
            });
        }
    }
    Ok(sorted_intersection(g.incident(u), g.incident(v)))
}

pub(crate) fn sorted_intersection(a: &[(usize, usize)], b: &[(usize, usize)]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i].0);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Every edge lies in a triangle.
pub fn is_triangular(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| !sorted_intersection(g.incident(u), g.incident(v)).is_empty())
}

/// Perfect elimination order if `g` is chordal.
///
/// The candidate order comes from maximum-cardinality search and is then
/// checked directly: the neighbors of each vertex that come later in the
/// order must be pairwise adjacent.
pub fn is_chordal(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        numbered[v] = true;
        visit.push(v);
        for w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    let order = visit;

    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                if !g.has_edge(a, b) {
                    return None;
                }
            }
        }
    }
    Some(order)
}

/// Independent parts if `g` is complete multipartite (parts ordered by
/// smallest vertex). `K_n` yields `n` singleton parts.
pub fn is_complete_multipartite(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut part = vec![v];
        part_of[v] = id;
        for (w, slot) in part_of.iter_mut().enumerate().skip(v + 1) {
            if *slot == usize::MAX && !g.has_edge(v, w) {
                *slot = id;
                part.push(w);
            }
        }
        parts.push(part);
    }
    // No edge inside a part, and the edge count matches all cross pairs.
    if g.edges().iter().any(|&(u, v)| part_of[u] == part_of[v]) {
        return None;
    }
    let inside: usize = parts.iter().map(|p| p.len() * (p.len() - 1) / 2).sum();
    (g.m() + inside == n * n.saturating_sub(1) / 2).then_some(parts)
}
