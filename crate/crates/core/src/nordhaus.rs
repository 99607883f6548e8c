//! Nordhaus–Gaddum sums and products of `md` over complementary pairs.
//!
//! [`scan_order`] enumerates every labelled graph on `n <= 6` vertices as an
//! adjacency bitmask (see [`Graph::from_mask`]); [`sampled_search`] draws
//! G(n, 1/2) samples for larger `n`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::experiments::{gnp_with, stream_rng};
use crate::graph::{block_decomposition, complement, Graph};
use crate::solver::{md_decide, md_exact};

/// `md` of a graph and of its complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NgRecord {
    pub n: usize,
    pub graph: Graph,
    pub md: usize,
    pub md_complement: usize,
    pub sum: usize,
    pub product: usize,
}

impl NgRecord {
    fn new(graph: Graph, md: usize, md_complement: usize) -> Self {
        NgRecord {
            n: graph.n(),
            graph,
            md,
            md_complement,
            sum: md + md_complement,
            product: md * md_complement,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

fn check_sides(g: &Graph, co: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::SideDisconnected { side: "graph" });
    }
    if !co.is_connected() {
        return Err(Error::SideDisconnected { side: "complement" });
    }
    Ok(())
}

pub fn ng_pair(g: &Graph) -> Result<NgRecord> {
    if g.n() < 4 {
        return Err(Error::precondition(format!(
            "need at least 4 vertices, got {}",
            g.n()
        )));
    }
    let co = complement(g);
    check_sides(g, &co)?;
    Ok(NgRecord::new(
        g.clone(),
        md_exact(g).value,
        md_exact(&co).value,
    ))
}

/// An extreme value with the smallest mask attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extreme {
    pub value: usize,
    pub mask: u64,
    pub md: usize,
    pub md_complement: usize,
    pub witness: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub dedup: bool,
    /// Adjacency masks enumerated.
    pub scanned: u64,
    /// Graphs (or isomorphism classes, with dedup) with both sides connected.
    pub qualified: u64,
    pub min_sum: Extreme,
    pub max_sum: Extreme,
    pub min_product: Extreme,
    pub max_product: Extreme,
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub const SCAN_ORDERS: std::ops::RangeInclusive<usize> = 4..=6;

/// Extremes of `md(G) + md(co G)` and `md(G) * md(co G)` over all graphs on
/// `n` vertices whose complement is also connected.
///
/// With `dedup` only the canonical representative of each isomorphism class
/// is visited. Witnesses are the smallest qualifying mask attaining each
/// extreme, so ties resolve the same way regardless of thread scheduling.
pub fn scan_order(n: usize, dedup: bool) -> Result<ScanReport> {
    if !SCAN_ORDERS.contains(&n) {
        return Err(Error::precondition(format!(
            "exhaustive scan covers 4 <= n <= 6, got {n}; use the sampled search"
        )));
    }
    let pairs = n * (n - 1) / 2;
    let full = (1u64 << pairs) - 1;
    let canon = dedup.then(|| Canonicalizer::new(n));
    let qualifies = |mask: u64| {
        Graph::from_mask(n, mask).is_connected() && Graph::from_mask(n, full ^ mask).is_connected()
    };

    let chosen: Vec<u64> = (0..=full)
        .into_par_iter()
        .filter(|&mask| canon.as_ref().is_none_or(|c| c.canonical(mask) == mask))
        .filter(|&mask| qualifies(mask))
        .collect();

    // md of every side that appears: the chosen graphs and their complements
    let mut needed: Vec<u64> = chosen.iter().flat_map(|&m| [m, full ^ m]).collect();
    if let Some(c) = &canon {
        needed.iter_mut().for_each(|m| *m = c.canonical(*m));
    }
    needed.sort_unstable();
    needed.dedup();
    let md: HashMap<u64, usize> = needed
        .par_iter()
        .map(|&m| (m, md_exact(&Graph::from_mask(n, m)).value))
        .collect();
    let lookup = |m: u64| match &canon {
        Some(c) => md[&c.canonical(m)],
        None => md[&m],
    };

    let rows: Vec<(u64, usize, usize)> = chosen
        .iter()
        .map(|&m| (m, lookup(m), lookup(full ^ m)))
        .collect();
    let extreme = |key: fn(usize, usize) -> usize, want_max: bool| {
        let &(mask, a, b) = rows
            .iter()
            .min_by(|x, y| {
                let (kx, ky) = (key(x.1, x.2), key(y.1, y.2));
                let by_value = if want_max { ky.cmp(&kx) } else { kx.cmp(&ky) };
                by_value.then(x.0.cmp(&y.0))
            })
            .expect("every order in range has a qualifying graph");
        Extreme {
            value: key(a, b),
            mask,
            md: a,
            md_complement: b,
            witness: Graph::from_mask(n, mask),
        }
    };
    let sum = |a, b| a + b;
    let product = |a, b| a * b;
    Ok(ScanReport {
        n,
        dedup,
        scanned: full + 1,
        qualified: rows.len() as u64,
        min_sum: extreme(sum, false),
        max_sum: extreme(sum, true),
        min_product: extreme(product, false),
        max_product: extreme(product, true),
    })
}

/// Smallest adjacency mask over all relabellings of the vertices.
pub fn canonical_mask(n: usize, mask: u64) -> u64 {
    Canonicalizer::new(n).canonical(mask)
}

struct Canonicalizer {
    /// per permutation: image of each pair bit
    images: Vec<Vec<u8>>,
}

impl Canonicalizer {
    fn new(n: usize) -> Self {
        assert!(n <= 8, "permutation canonical form is limited to n <= 8");
        let pair_bits: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut images = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            images.push(
                pair_bits
                    .iter()
                    .map(|&(u, v)| crate::graph::pair_index(n, perm[u], perm[v]) as u8)
                    .collect(),
            );
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Canonicalizer { images }
    }

    fn canonical(&self, mask: u64) -> u64 {
        self.images
            .iter()
            .map(|img| {
                let mut out = 0u64;
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest.trailing_zeros() as usize;
                    out |= 1 << img[bit];
                    rest &= rest - 1;
                }
                out
            })
            .min()
            .unwrap_or(mask)
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// What [`sampled_search`] looks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Sum(usize),
    Product(usize),
}

impl Target {
    fn of(&self, a: usize, b: usize) -> usize {
        match self {
            Target::Sum(_) => a + b,
            Target::Product(_) => a * b,
        }
    }

    fn value(&self) -> usize {
        match self {
            Target::Sum(t) | Target::Product(t) => *t,
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    /// `sum=V` or `product=V`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::precondition(format!(
                "target must look like sum=V or product=V, got {s:?}"
            ))
        };
        let (key, value) = s.split_once('=').ok_or_else(bad)?;
        let value: usize = value.trim().parse().map_err(|_| bad())?;
        match key.trim() {
            "sum" => Ok(Target::Sum(value)),
            "product" | "prod" => Ok(Target::Product(value)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Sum(v) => write!(f, "sum={v}"),
            Target::Product(v) => write!(f, "product={v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    /// Attempts drawn before stopping (all of them if nothing was found).
    pub attempts: u64,
    /// Attempts whose graph and complement were both connected.
    pub qualified: u64,
    pub witness: Option<NgRecord>,
}

/// Cheap bounds on `md` of a connected graph: one color per block is always
/// possible, and no block exceeds its `1` or `floor(n_B/2)` bound.
fn md_bounds(g: &Graph) -> (usize, usize) {
    let bd = block_decomposition(g);
    let ub = (0..bd.blocks.len())
        .map(|i| {
            if bd.is_bridge[i] {
                1
            } else {
                bd.block_vertices(g, i).len() / 2
            }
        })
        .sum();
    (bd.blocks.len(), ub)
}

const BATCH: u64 = 256;

/// Draws up to `budget` samples of G(n, 1/2) and returns the first (by
/// attempt index) whose pair matches `target`.
///
/// Attempt `i` uses stream `i` of `seed`. A witness has both `md` values
/// confirmed by an exhaustive `md_decide(side, md + 1) = absent` check.
pub fn sampled_search(n: usize, target: Target, budget: u64, seed: u64) -> Result<SearchOutcome> {
    if n < 7 {
        return Err(Error::precondition(format!(
            "sampled search is for n >= 7, got {n}; use the exhaustive scan"
        )));
    }
    let mut qualified = 0;
    let mut start = 0;
    while start < budget {
        let end = (start + BATCH).min(budget);
        let results: Vec<(bool, Option<NgRecord>)> = (start..end)
            .into_par_iter()
            .map(|attempt| try_attempt(n, target, seed, attempt))
            .collect();
        for (i, (q, hit)) in results.into_iter().enumerate() {
            qualified += q as u64;
            if let Some(rec) = hit {
                confirm_exact(&rec)?;
                return Ok(SearchOutcome {
                    attempts: start + i as u64 + 1,
                    qualified,
                    witness: Some(rec),
                });
            }
        }
        start = end;
    }
    Ok(SearchOutcome {
        attempts: budget,
        qualified,
        witness: None,
    })
}

fn try_attempt(n: usize, target: Target, seed: u64, attempt: u64) -> (bool, Option<NgRecord>) {
    let g = gnp_with(n, 0.5, &mut stream_rng(seed, attempt));
    let co = complement(&g);
    if check_sides(&g, &co).is_err() {
        return (false, None);
    }
    let ((lo_g, hi_g), (lo_c, hi_c)) = (md_bounds(&g), md_bounds(&co));
    let t = target.value();
    if target.of(lo_g, lo_c) > t || target.of(hi_g, hi_c) < t {
        return (true, None);
    }
    let (a, b) = (md_exact(&g).value, md_exact(&co).value);
    if target.of(a, b) != t {
        return (true, None);
    }
    (true, Some(NgRecord::new(g, a, b)))
}

/// Both sides admit no MD-coloring with one more color than recorded.
fn confirm_exact(rec: &NgRecord) -> Result<()> {
    let co = complement(&rec.graph);
    for (side, md) in [(&rec.graph, rec.md), (&co, rec.md_complement)] {
        if md_decide(side, md + 1)?.is_some() {
            return Err(Error::precondition(format!(
                "witness check failed: a side admits more than {md} colors"
            )));
        }
    }
    Ok(())
}
