//! The structural invariants of MD-colorings and of `md`, as reusable
//! property bodies with their input strategies.

use mdcolor::graph::block_decomposition;
use mdcolor::{
    brute_force_oracle, check_certificate, md1_certificate, md_exact, verify_md, EdgeColoring,
    Graph,
};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::sample::Index;
use proptest::test_runner::TestCaseError;

use super::{connected_graph, cycle_through, small_connected};

pub const CAP: usize = 12;

pub fn oracle(g: &Graph) -> usize {
    brute_force_oracle(g, CAP).unwrap().value
}

/// A graph with a random MD-coloring: an extremal witness with some of its
/// classes merged (merging classes keeps every cut monochromatic).
pub fn md_colored() -> impl Strategy<Value = (Graph, EdgeColoring)> {
    connected_graph(2..=7, 7)
        .prop_flat_map(|g| {
            let w = md_exact(&g).witness;
            let k = w.palette_size() as u32;
            (Just(g), Just(w), vec(1..=k, k as usize))
        })
        .prop_map(|(g, w, merge)| {
            let colors = w.colors().iter().map(|&c| merge[c as usize - 1]).collect();
            (g, EdgeColoring::new(colors).unwrap())
        })
}

pub fn md_colored_with_subset() -> impl Strategy<Value = ((Graph, EdgeColoring), Vec<bool>)> {
    (md_colored(), vec(any::<bool>(), 13))
}

pub fn restriction(g: &Graph, c: &EdgeColoring, keep: &[bool]) -> Result<(), TestCaseError> {
    let ids: Vec<usize> = (0..g.m()).filter(|&e| keep[e]).collect();
    let sub = g.edge_subgraph(&ids);
    let r = c.restrict(&sub.edges);
    prop_assert!(
        verify_md(&sub.graph, &r).unwrap().is_md,
        "restriction to {:?} is not MD",
        ids
    );
    Ok(())
}

pub fn cycle_multiplicity(g: &Graph, c: &EdgeColoring) -> Result<(), TestCaseError> {
    prop_assert!(verify_md(g, c).unwrap().is_md);
    for e in 0..g.m() {
        if let Some(cyc) = cycle_through(g, e) {
            for &f in &cyc {
                let k = c.color(f);
                let count = cyc.iter().filter(|&&x| c.color(x) == k).count();
                prop_assert!(count >= 2, "color {} occurs once on cycle {:?}", k, cyc);
            }
        }
    }
    Ok(())
}

/// Connected graph with a connected spanning subgraph: the tree part plus a
/// random subset of the other edges.
pub fn graph_and_spanning_subgraph() -> impl Strategy<Value = (Graph, Graph)> {
    connected_graph(3..=7, 8)
        .prop_flat_map(|g| {
            let m = g.m();
            (Just(g), vec(any::<bool>(), m))
        })
        .prop_map(|(g, keep)| {
            // the first n-1 edges are the spanning tree
            let pairs: Vec<(usize, usize)> = (0..g.m())
                .filter(|&e| e + 1 < g.n() || keep[e])
                .map(|e| g.edge(e))
                .collect();
            let h = Graph::new(g.n(), &pairs).unwrap();
            (g, h)
        })
}

pub fn monotone(g: &Graph, h: &Graph) -> Result<(), TestCaseError> {
    prop_assert!(h.is_connected() && h.n() == g.n());
    let (mg, mh) = (md_exact(g).value, md_exact(h).value);
    prop_assert!(mh >= mg, "spanning subgraph has md {} < {}", mh, mg);
    Ok(())
}

pub fn graph_and_vertex() -> impl Strategy<Value = (Graph, Index)> {
    (connected_graph(4..=8, 10), any::<Index>())
}

/// Deleting a vertex that is neither pendant nor a cut vertex never lowers
/// `md`. Graphs without such a vertex pass vacuously.
pub fn vertex_deletion(g: &Graph, pick: &Index) -> Result<(), TestCaseError> {
    let cuts = block_decomposition(g).cut_vertices;
    let candidates: Vec<usize> = (0..g.n())
        .filter(|&v| g.degree(v) != 1 && !cuts.contains(&v))
        .collect();
    if candidates.is_empty() {
        return Ok(());
    }
    let v = candidates[pick.index(candidates.len())];
    let rest = g.remove_vertex(v).graph;
    let (a, b) = (md_exact(g).value, md_exact(&rest).value);
    prop_assert!(a <= b, "md {} drops to {} after deleting {}", a, b, v);
    Ok(())
}

pub fn oracle_graph() -> impl Strategy<Value = Graph> {
    small_connected()
}

/// The oracle value of the whole graph is the sum over its blocks, and
/// `md_exact` agrees with both.
pub fn block_additivity(g: &Graph) -> Result<(), TestCaseError> {
    let bd = block_decomposition(g);
    let by_blocks: usize = bd
        .blocks
        .iter()
        .map(|b| oracle(&g.edge_subgraph(b).graph))
        .sum();
    prop_assert_eq!(by_blocks, oracle(g));
    prop_assert_eq!(md_exact(g).value, by_blocks);
    Ok(())
}

/// Dense connected graphs within the oracle cap, so certificates are common.
pub fn dense_graph() -> impl Strategy<Value = Graph> {
    connected_graph(3..=6, 12).prop_map(|g| {
        let keep: Vec<(usize, usize)> = g.edges().iter().copied().take(CAP).collect();
        Graph::new(g.n(), &keep).unwrap()
    })
}

pub fn certificate_soundness(g: &Graph) -> Result<(), TestCaseError> {
    if let Some(cert) = md1_certificate(g).unwrap() {
        prop_assert_eq!(check_certificate(g, &cert), Ok(()));
        prop_assert_eq!(oracle(g), 1);
    }
    Ok(())
}
