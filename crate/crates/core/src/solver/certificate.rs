//! Closure certificates for `md(G) = 1`.
//!
//! A gadget is a triangle or a `K_{2,s}` (`s >= 3`) inside `G`; both admit
//! only the one-color MD-coloring. Any MD-coloring colors each gadget with a
//! single color, and two gadgets sharing two vertices must carry the same
//! color (otherwise no monochromatic cut separates the shared pair). If the
//! gadgets chain together over every edge, the whole graph is forced to one
//! color.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GadgetKind {
    #[serde(rename = "triangle")]
    Triangle,
    /// `K_{2,s}` with `s >= 3`: `vertices = [x, y, w_1, .., w_s]`, edges `x w_i`, `y w_i`.
    #[serde(rename = "K23")]
    K23,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Union of gadgets `first` and `second`, justified by the shared vertex pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Merge {
    pub first: usize,
    pub second: usize,
    pub shared: (usize, usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClosureCertificate {
    pub gadgets: Vec<Gadget>,
    pub merge_trace: Vec<Merge>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Every triangle, and one `K_{2,s}` per vertex pair with `s >= 3` common neighbors.
fn collect_gadgets(g: &Graph) -> Vec<Gadget> {
    let mut gadgets = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let cn = crate::graph::common_neighbors(g, u, v).unwrap();
        for w in cn.into_iter().filter(|&w| w > v) {
            let mut edges = vec![e, g.edge_id(u, w).unwrap(), g.edge_id(v, w).unwrap()];
            edges.sort_unstable();
            gadgets.push(Gadget {
                kind: GadgetKind::Triangle,
                vertices: vec![u, v, w],
                edges,
            });
        }
    }
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let cn = crate::graph::common_neighbors(g, x, y).unwrap();
            if cn.len() < 3 {
                continue;
            }
            let mut edges: Vec<usize> = cn
                .iter()
                .flat_map(|&w| [g.edge_id(x, w).unwrap(), g.edge_id(y, w).unwrap()])
                .collect();
            edges.sort_unstable();
            let mut vertices = vec![x, y];
            vertices.extend(cn);
            gadgets.push(Gadget {
                kind: GadgetKind::K23,
                vertices,
                edges,
            });
        }
    }
    gadgets
}

/// Unions gadgets that share a vertex pair, bucketing gadgets by each pair
/// they contain. Only merges that join two different groups are recorded.
fn merge_gadgets(gadgets: &[Gadget]) -> (Vec<Merge>, UnionFind) {
    let mut uf = UnionFind::new(gadgets.len());
    let mut bucket: HashMap<(usize, usize), usize> = HashMap::new();
    let mut trace = Vec::new();
    for (id, gad) in gadgets.iter().enumerate() {
        let vs = &gad.vertices;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let pair = (vs[i].min(vs[j]), vs[i].max(vs[j]));
                match bucket.get(&pair) {
                    Some(&other) => {
                        if uf.union(other, id) {
                            trace.push(Merge {
                                first: other,
                                second: id,
                                shared: pair,
                            });
                        }
                    }
                    None => {
                        bucket.insert(pair, id);
                    }
                }
            }
        }
    }
    (trace, uf)
}

/// Class id per edge under the gadget closure, numbered by smallest edge id.
/// Edges in no gadget form singleton classes.
pub(crate) fn closure_classes(g: &Graph) -> Vec<usize> {
    let gadgets = collect_gadgets(g);
    let (_, mut guf) = merge_gadgets(&gadgets);
    let mut euf = UnionFind::new(g.m());
    let mut rep: HashMap<usize, usize> = HashMap::new();
    for (id, gad) in gadgets.iter().enumerate() {
        let root = guf.find(id);
        let anchor = *rep.entry(root).or_insert(gad.edges[0]);
        for &e in &gad.edges {
            euf.union(anchor, e);
        }
    }
    let mut label = HashMap::new();
    (0..g.m())
        .map(|e| {
            let r = euf.find(e);
            let next = label.len();
            *label.entry(r).or_insert(next)
        })
        .collect()
}

/// A certificate that `md(g) = 1`, when the gadget closure covers every edge.
/// Absence does not imply `md(g) > 1`.
pub fn md1_certificate(g: &Graph) -> Result<Option<ClosureCertificate>> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gadgets = collect_gadgets(g);
    let (merge_trace, mut uf) = merge_gadgets(&gadgets);
    let cert = ClosureCertificate {
        gadgets,
        merge_trace,
    };
    if g.m() == 1 {
        return Ok(Some(cert));
    }
    let mut covered = vec![false; g.m()];
    for gad in &cert.gadgets {
        for &e in &gad.edges {
            covered[e] = true;
        }
    }
    let one_group = (1..cert.gadgets.len()).all(|i| uf.find(i) == uf.find(0));
    Ok((covered.iter().all(|&c| c) && one_group).then_some(cert))
}

fn check_gadget(g: &Graph, gad: &Gadget) -> std::result::Result<(), String> {
    let vs = &gad.vertices;
    if vs.iter().any(|&v| v >= g.n()) {
        return Err("gadget vertex out of range".into());
    }
    let mut sorted = vs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != vs.len() {
        return Err("gadget repeats a vertex".into());
    }
    let pairs: Vec<(usize, usize)> = match gad.kind {
        GadgetKind::Triangle => {
            if vs.len() != 3 {
                return Err("triangle gadget must list 3 vertices".into());
            }
            vec![(vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])]
        }
        GadgetKind::K23 => {
            if vs.len() < 5 {
                return Err("K23 gadget must list at least 5 vertices".into());
            }
            vs[2..]
                .iter()
                .flat_map(|&w| [(vs[0], w), (vs[1], w)])
                .collect()
        }
    };
    let mut want = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        match g.edge_id(a, b) {
            Some(e) => want.push(e),
            None => return Err(format!("gadget needs missing edge ({a}, {b})")),
        }
    }
    want.sort_unstable();
    let mut got = gad.edges.clone();
    got.sort_unstable();
    if got != want {
        return Err("gadget edge ids do not match its vertices".into());
    }
    Ok(())
}

/// Re-validates a certificate from scratch against `g`.
pub fn check_certificate(g: &Graph, cert: &ClosureCertificate) -> std::result::Result<(), String> {
    for (i, gad) in cert.gadgets.iter().enumerate() {
        check_gadget(g, gad).map_err(|r| format!("invalid gadget {i}: {r}"))?;
    }
    let mut euf = UnionFind::new(g.m());
    for gad in &cert.gadgets {
        for w in gad.edges.windows(2) {
            euf.union(w[0], w[1]);
        }
    }
    for (i, mg) in cert.merge_trace.iter().enumerate() {
        let (a, b) = (mg.first, mg.second);
        if a >= cert.gadgets.len() || b >= cert.gadgets.len() || a == b {
            return Err(format!("merge {i} names invalid gadgets"));
        }
        let (x, y) = mg.shared;
        let holds = |gi: usize| {
            let vs = &cert.gadgets[gi].vertices;
            vs.contains(&x) && vs.contains(&y)
        };
        if x == y || !holds(a) || !holds(b) {
            return Err(format!(
                "merge {i}: gadgets {a} and {b} do not share the pair ({x}, {y})"
            ));
        }
        euf.union(cert.gadgets[a].edges[0], cert.gadgets[b].edges[0]);
    }
    match g.m() {
        0 => return Err("graph has no edges".into()),
        1 => return Ok(()),
        _ => {}
    }
    // largest class among edges that some gadget covers
    let mut in_gadget = vec![false; g.m()];
    cert.gadgets
        .iter()
        .flat_map(|gd| &gd.edges)
        .for_each(|&e| in_gadget[e] = true);
    let mut size: HashMap<usize, usize> = HashMap::new();
    for e in (0..g.m()).filter(|&e| in_gadget[e]) {
        *size.entry(euf.find(e)).or_default() += 1;
    }
    let best = size.values().copied().max().unwrap_or(0);
    if best < g.m() {
        return Err(format!("coverage {best} of {} edges", g.m()));
    }
    Ok(())
}
