//! Depth-first search over canonical colorings.
//!
//! Colorings are enumerated as restricted-growth strings, so each set
//! partition of the edges is visited once. Edges that the gadget closure
//! forces to share a color are contracted into a single unit first. Two
//! filters cut partial assignments:
//!
//! * a fully assigned cycle of a fundamental cycle basis on which some color
//!   occurs exactly once (an MD-coloring uses each color 0 or >= 2 times on
//!   every cycle);
//! * too few unassigned units left to reach the requested palette.
//!
//! Surviving complete assignments are checked with the MD verifier.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicBool, Ordering};

use super::certificate::closure_classes;
use crate::coloring::{EdgeColoring, Verifier};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Explore the two top-level branches concurrently. The decision is
    /// unaffected; which witness is returned may vary between runs.
    pub parallel: bool,
    /// Contract gadget-closure classes before searching.
    pub contract_gadgets: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            parallel: false,
            contract_gadgets: true,
        }
    }
}

/// An MD-coloring of `g` with at least `k` colors, if one exists.
pub fn md_decide(g: &Graph, k: usize) -> Result<Option<EdgeColoring>> {
    md_decide_with(g, k, SearchOptions::default())
}

pub fn md_decide_with(g: &Graph, k: usize, opts: SearchOptions) -> Result<Option<EdgeColoring>> {
    if k == 0 {
        return Err(Error::precondition("target palette k must be at least 1"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if k + 1 > g.n() {
        return Ok(None);
    }
    let problem = Problem::new(g, k, opts.contract_gadgets);
    if !opts.parallel || problem.units < 2 {
        return Ok(problem.solve_from(&[], None));
    }
    let stop = AtomicBool::new(false);
    // unit 0 is color 1; unit 1 is either a new color 2 or color 1
    let (a, b) = rayon::join(
        || problem.solve_from(&[1, 2], Some(&stop)),
        || problem.solve_from(&[1, 1], Some(&stop)),
    );
    Ok(a.or(b))
}

struct Problem<'g> {
    g: &'g Graph,
    k: usize,
    units: usize,
    unit_of_edge: Vec<usize>,
    /// per cycle: (unit, number of cycle edges in that unit)
    cycles: Vec<Vec<(usize, u32)>>,
    /// cycles whose last unit (in assignment order) is the index
    closing: Vec<Vec<usize>>,
}

impl<'g> Problem<'g> {
    fn new(g: &'g Graph, k: usize, contract: bool) -> Self {
        let unit_of_edge = if contract {
            closure_classes(g)
        } else {
            (0..g.m()).collect()
        };
        let units = unit_of_edge.iter().map(|&u| u + 1).max().unwrap_or(0);
        let mut cycles = Vec::new();
        let mut closing = vec![Vec::new(); units];
        for cyc in fundamental_cycles(g) {
            let mut counts: Vec<(usize, u32)> = Vec::new();
            for e in cyc {
                let u = unit_of_edge[e];
                match counts.iter_mut().find(|(x, _)| *x == u) {
                    Some((_, c)) => *c += 1,
                    None => counts.push((u, 1)),
                }
            }
            // a cycle inside one unit constrains nothing
            if counts.len() < 2 {
                continue;
            }
            let last = counts.iter().map(|&(u, _)| u).max().unwrap();
            closing[last].push(cycles.len());
            cycles.push(counts);
        }
        Problem {
            g,
            k,
            units,
            unit_of_edge,
            cycles,
            closing,
        }
    }

    fn solve_from(&self, prefix: &[u32], stop: Option<&AtomicBool>) -> Option<EdgeColoring> {
        let mut st = State {
            p: self,
            assign: vec![0; self.units],
            counts: vec![0; self.units + 2],
            edge_colors: vec![0; self.g.m()],
            verifier: Verifier::new(self.g),
            stop,
        };
        let mut used = 0;
        for (u, &c) in prefix.iter().enumerate() {
            st.assign[u] = c;
            used = used.max(c);
            if !st.cycles_ok(u) {
                return None;
            }
        }
        if st.dfs(prefix.len(), used) {
            if let Some(s) = stop {
                s.store(true, Ordering::Relaxed);
            }
            Some(EdgeColoring::from_canonical(st.edge_colors))
        } else {
            None
        }
    }
}

struct State<'p, 'g> {
    p: &'p Problem<'g>,
    assign: Vec<u32>,
    counts: Vec<u32>,
    edge_colors: Vec<u32>,
    verifier: Verifier<'g>,
    stop: Option<&'p AtomicBool>,
}

impl State<'_, '_> {
    fn cycles_ok(&mut self, u: usize) -> bool {
        for &ci in &self.p.closing[u] {
            let cyc = &self.p.cycles[ci];
            for &(x, mult) in cyc {
                self.counts[self.assign[x] as usize] += mult;
            }
            let bad = cyc
                .iter()
                .any(|&(x, _)| self.counts[self.assign[x] as usize] == 1);
            for &(x, _) in cyc {
                self.counts[self.assign[x] as usize] = 0;
            }
            if bad {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, u: usize, used: u32) -> bool {
        if let Some(s) = self.stop {
            if s.load(Ordering::Relaxed) {
                return false;
            }
        }
        if (used as usize) + (self.p.units - u) < self.p.k {
            return false;
        }
        if u == self.p.units {
            for (e, c) in self.edge_colors.iter_mut().enumerate() {
                *c = self.assign[self.p.unit_of_edge[e]];
            }
            return self.verifier.is_md(&self.edge_colors, used);
        }
        // a fresh color first, then the existing ones in order
        let choices = std::iter::once(used + 1).chain(1..=used);
        for c in choices {
            self.assign[u] = c;
            if self.cycles_ok(u) && self.dfs(u + 1, used.max(c)) {
                return true;
            }
        }
        self.assign[u] = 0;
        false
    }
}

/// Edge sets of the fundamental cycles of a BFS spanning forest.
pub(crate) fn fundamental_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut tree_edge = vec![false; g.m()];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.incident(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    parent_edge[w] = e;
                    depth[w] = depth[v] + 1;
                    tree_edge[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut out = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if tree_edge[e] {
            continue;
        }
        let mut cyc = vec![e];
        let (mut x, mut y) = (a, b);
        while x != y {
            if depth[x] >= depth[y] {
                cyc.push(parent_edge[x]);
                x = parent[x];
            } else {
                cyc.push(parent_edge[y]);
                y = parent[y];
            }
        }
        out.push(cyc);
    }
    out
}
