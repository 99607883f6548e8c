//! Strategies and slow reference checks shared by the integration tests.
#![allow(dead_code)]

pub mod invariants;

use std::collections::VecDeque;

use mdcolor::Graph;
use proptest::collection::vec;
use proptest::prelude::*;

/// Tree from a Prüfer sequence over `0..n` (length `n - 2`), `n >= 2`.
pub fn prufer_tree(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// A random spanning tree plus up to `max_extra` further pairs; loops are
/// dropped and repeats collapse. The tree edges come first.
pub fn connected_graph(
    n: std::ops::RangeInclusive<usize>,
    max_extra: usize,
) -> impl Strategy<Value = Graph> {
    n.prop_flat_map(move |n| (Just(n), vec(0..n, n - 2), vec((0..n, 0..n), 0..=max_extra)))
        .prop_map(|(n, seq, extra)| {
            let mut pairs = prufer_tree(n, &seq);
            pairs.extend(extra.into_iter().filter(|(u, v)| u != v));
            Graph::new(n, &pairs).unwrap()
        })
}

/// Connected graphs with at most 12 edges, inside the oracle's default cap.
pub fn small_connected() -> impl Strategy<Value = Graph> {
    connected_graph(2..=6, 7)
}

/// Any graph on `n <= 11` vertices, by adjacency mask.
pub fn any_graph(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    n.prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            Just(n),
            any::<u64>().prop_map(move |m| m & ((1u64 << pairs) - 1)),
        )
    })
    .prop_map(|(n, mask)| Graph::from_mask(n, mask))
}

/// Vertices reachable from `s` without using edges of color `avoid`.
pub fn reach_avoiding(g: &Graph, colors: &[u32], avoid: u32, s: usize) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &(y, e) in g.incident(x) {
            if colors[e] != avoid && !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Definition-level check: every pair joined by a path is cut apart by
/// deleting a single color class.
pub fn naive_is_md(g: &Graph, colors: &[u32]) -> bool {
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let labels = g.component_labels();
    for u in 0..g.n() {
        let cut_by: Vec<Vec<bool>> = palette
            .iter()
            .map(|&c| reach_avoiding(g, colors, c, u))
            .collect();
        for v in u + 1..g.n() {
            if labels[u] == labels[v] && cut_by.iter().all(|reach| reach[v]) {
                return false;
            }
        }
    }
    true
}

/// Edge ids of a cycle through edge `e`, if `e` is not a bridge.
pub fn cycle_through(g: &Graph, e: usize) -> Option<Vec<usize>> {
    let (a, b) = g.edge(e);
    let mut prev = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    seen[a] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        for &(y, f) in g.incident(x) {
            if f != e && !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, f));
                queue.push_back(y);
            }
        }
    }
    if !seen[b] {
        return None;
    }
    let mut cyc = vec![e];
    let mut x = b;
    while let Some((p, f)) = prev[x] {
        cyc.push(f);
        x = p;
    }
    Some(cyc)
}
