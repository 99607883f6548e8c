//! Exact monochromatic disconnection numbers.
//!
//! `md` is additive over connected components and over blocks, so
//! [`md_exact`] splits the graph into blocks and resolves each one
//! separately: a bridge contributes 1, a cycle `floor(len/2)`, a block with
//! a closure certificate 1, and anything else goes to the search in
//! [`md_decide`], counting down from the `floor(n_B/2)` bound for
//! 2-connected graphs.

mod certificate;
mod oracle;
mod search;

pub use certificate::{
    check_certificate, md1_certificate, ClosureCertificate, Gadget, GadgetKind, Merge,
};
pub use oracle::{brute_force_oracle, DEFAULT_ORACLE_CAP};
pub use search::{md_decide, md_decide_with, SearchOptions};

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::constructions::{color_unicyclic, compose_block_colorings};
use crate::error::{Error, Result};
use crate::graph::{block_decomposition, common_neighbors, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockMethod {
    Bridge,
    CycleFormula,
    ClosureCertificate,
    Search,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub edges: Vec<usize>,
    pub method: BlockMethod,
    pub value: usize,
}

/// `md(G)` with an extremal witness and how each block was settled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MdResult {
    #[serde(rename = "md")]
    pub value: usize,
    pub witness: EdgeColoring,
    pub blocks: Vec<BlockReport>,
    pub bounds: Vec<(usize, String)>,
}

impl MdResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Sum over blocks of 1 per bridge and `floor(n_B/2)` per 2-connected block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub value: usize,
    /// Contribution and description per block.
    pub sources: Vec<(usize, String)>,
}

pub fn upper_bound(g: &Graph) -> Result<UpperBound> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(block_bound(g))
}

fn block_bound(g: &Graph) -> UpperBound {
    let bd = block_decomposition(g);
    let sources: Vec<(usize, String)> = (0..bd.blocks.len())
        .map(|i| {
            if bd.is_bridge[i] {
                (1, format!("bridge {}", bd.blocks[i][0]))
            } else {
                let nb = bd.block_vertices(g, i).len();
                (nb / 2, format!("2-connected block on {nb} vertices"))
            }
        })
        .collect();
    UpperBound {
        value: sources.iter().map(|s| s.0).sum(),
        sources,
    }
}

/// Every pair of distinct vertices has at least three common neighbors.
pub fn has_three_common_neighbors(g: &Graph) -> Result<bool> {
    if g.n() < 2 {
        return Err(Error::precondition("need at least two vertices"));
    }
    for u in 0..g.n() {
        if g.degree(u) < 3 {
            return Ok(false);
        }
        for v in u + 1..g.n() {
            if common_neighbors(g, u, v)?.len() < 3 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn md_exact(g: &Graph) -> MdResult {
    md_exact_with(g, SearchOptions::default())
}

/// [`md_exact`] with explicit search options; the value never depends on them.
pub fn md_exact_with(g: &Graph, opts: SearchOptions) -> MdResult {
    let bd = block_decomposition(g);
    let mut per_block = Vec::with_capacity(bd.blocks.len());
    let mut reports = Vec::with_capacity(bd.blocks.len());
    for (i, block) in bd.blocks.iter().enumerate() {
        let sub = g.edge_subgraph(block).graph;
        let (value, coloring, method) = solve_block(&sub, bd.is_bridge[i], opts);
        per_block.push(coloring);
        reports.push(BlockReport {
            edges: block.clone(),
            method,
            value,
        });
    }
    let witness = compose_block_colorings(g, &per_block).expect("block witnesses verify");
    let value = reports.iter().map(|r| r.value).sum();

    let components = g.components();
    let block_ub = block_bound(g).value;
    let bounds = vec![
        (
            block_ub,
            "blocks: 1 per bridge, floor(n_B/2) per 2-connected block".to_string(),
        ),
        (
            g.n() - components.len(),
            "spanning forest: n - components".to_string(),
        ),
    ];
    debug_assert!(value <= block_ub);
    MdResult {
        value,
        witness,
        blocks: reports,
        bounds,
    }
}

fn solve_block(
    b: &Graph,
    is_bridge: bool,
    opts: SearchOptions,
) -> (usize, EdgeColoring, BlockMethod) {
    if is_bridge {
        return (1, EdgeColoring::uniform(1), BlockMethod::Bridge);
    }
    if b.m() == b.n() {
        let c = color_unicyclic(b).expect("cycle block");
        return (b.n() / 2, c, BlockMethod::CycleFormula);
    }
    if md1_certificate(b).expect("blocks are connected").is_some() {
        return (
            1,
            EdgeColoring::uniform(b.m()),
            BlockMethod::ClosureCertificate,
        );
    }
    for k in (2..=b.n() / 2).rev() {
        if let Some(c) = md_decide_with(b, k, opts).expect("blocks are connected") {
            debug_assert_eq!(c.palette_size(), k);
            return (k, c, BlockMethod::Search);
        }
    }
    (1, EdgeColoring::uniform(b.m()), BlockMethod::Search)
}
