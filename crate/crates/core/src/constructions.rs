//! Named graph families and explicit extremal MD-colorings.
//!
//! Vertex labelling is fixed per family so that emitted files are stable:
//! cycles run `0..n` in cyclic order, stars and brooms are centred at `0`.

use rand::Rng;

use crate::coloring::{verify_md, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{self, block_decomposition, complement, Graph};
use crate::solver;

pub fn path(n: usize) -> Graph {
    Graph::from_simple(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// `C_n` with edge `i` joining `i` and `i + 1 (mod n)`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::precondition(format!(
            "a cycle needs n >= 3, got {n}"
        )));
    }
    let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    e.push((0, n - 1));
    Ok(Graph::from_simple(n, e))
}

pub fn complete(n: usize) -> Graph {
    complement(&Graph::empty(n))
}

/// `K_n` minus the edge `{0, 1}`.
pub fn complete_minus(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::precondition("K_n^- needs n >= 2"));
    }
    let e = complete(n).edges()[1..].to_vec();
    Ok(Graph::from_simple(n, e))
}

/// `K_{1,n-1}` centred at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::precondition("a star needs n >= 2"));
    }
    Ok(Graph::from_simple(n, (1..n).map(|v| (0, v)).collect()))
}

/// Complete multipartite graph; part `i` takes the next `sizes[i]` vertex ids.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.contains(&0) {
        return Err(Error::precondition("part sizes must be positive"));
    }
    let mut part = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let n = part.len();
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                e.push((u, v));
            }
        }
    }
    Ok(Graph::from_simple(n, e))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &e).unwrap()
}

/// A cycle `0..c` with a path of `tail` extra vertices hanging off vertex 0.
pub fn unicyclic(c: usize, tail: usize) -> Result<Graph> {
    let base = cycle(c)?;
    let mut e = base.edges().to_vec();
    let mut prev = 0;
    for v in c..c + tail {
        e.push((prev, v));
        prev = v;
    }
    Ok(Graph::from_simple(c + tail, e))
}

/// Uniform random labelled tree on `n >= 1` vertices (Prüfer decoding).
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &code {
        degree[x] += 1;
    }
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &code {
        let std::cmp::Reverse(leaf) = heap.pop().unwrap();
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 {
            heap.push(std::cmp::Reverse(x));
        }
    }
    let std::cmp::Reverse(a) = heap.pop().unwrap();
    let std::cmp::Reverse(b) = heap.pop().unwrap();
    edges.push((a.min(b), a.max(b)));
    Graph::from_simple(n, edges)
}

/// Color keys for the edges `e_1 .. e_len` of a cycle, before canonicalization:
/// `e_j` is keyed by `j mod floor(len / 2)`.
fn cycle_keys(len: usize) -> Vec<u32> {
    let r = len / 2;
    (1..=len).map(|j| (j % r) as u32).collect()
}

fn from_keys(keys: &[u32]) -> EdgeColoring {
    // shift so that every key is positive before relabelling
    EdgeColoring::new(keys.iter().map(|k| k + 1).collect())
        .unwrap()
        .canonicalize()
}

/// `C_n` together with an MD-coloring using `floor(n/2)` colors.
pub fn color_cycle(n: usize) -> Result<(Graph, EdgeColoring)> {
    let g = cycle(n)?;
    Ok((g, from_keys(&cycle_keys(n))))
}

/// All-distinct coloring of a tree.
pub fn color_tree(t: &Graph) -> Result<EdgeColoring> {
    if !t.is_tree() {
        return Err(Error::precondition("input is not a tree"));
    }
    Ok(EdgeColoring::rainbow(t.m()))
}

/// Cycle vertices of a connected unicyclic graph in cyclic order, found by
/// peeling degree-one vertices. Starts at the smallest cycle vertex and
/// continues towards its smaller cycle neighbor.
fn cycle_walk(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        removed[v] = true;
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let start = (0..n).find(|&v| !removed[v]).unwrap();
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .find(|&w| !removed[w] && w != prev)
            .unwrap();
        if next == start {
            break;
        }
        walk.push(next);
        prev = cur;
        cur = next;
    }
    walk
}

/// Extremal coloring of a connected unicyclic graph: the cycle gets the
/// cycle construction and every tree edge its own color.
pub fn color_unicyclic(g: &Graph) -> Result<EdgeColoring> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.m() != g.n() {
        return Err(Error::precondition(format!(
            "a unicyclic graph has m = n, got n = {} and m = {}",
            g.n(),
            g.m()
        )));
    }
    let walk = cycle_walk(g);
    let len = walk.len();
    let cyc = cycle_keys(len);
    let r = (len / 2) as u32;
    let mut keys = vec![u32::MAX; g.m()];
    for j in 0..len {
        let e = g.edge_id(walk[j], walk[(j + 1) % len]).unwrap();
        keys[e] = cyc[j];
    }
    for (fresh, k) in (r..).zip(keys.iter_mut().filter(|k| **k == u32::MAX)) {
        *k = fresh;
    }
    Ok(from_keys(&keys))
}

/// Glues MD-colorings of the blocks of `g` (in block-decomposition order,
/// each indexed by the block's sorted edge ids) using disjoint palettes.
pub fn compose_block_colorings(g: &Graph, per_block: &[EdgeColoring]) -> Result<EdgeColoring> {
    let bd = block_decomposition(g);
    if per_block.len() != bd.blocks.len() {
        return Err(Error::precondition(format!(
            "{} block colorings supplied for {} blocks",
            per_block.len(),
            bd.blocks.len()
        )));
    }
    let mut colors = vec![0u32; g.m()];
    let mut offset = 0;
    for (i, (block, c)) in bd.blocks.iter().zip(per_block).enumerate() {
        let sub = g.edge_subgraph(block);
        match verify_md(&sub.graph, c) {
            Ok(v) if v.is_md => {}
            _ => return Err(Error::BlockColoring { block: i }),
        }
        let c = c.canonicalize();
        for (&e, &k) in block.iter().zip(c.colors()) {
            colors[e] = offset + k;
        }
        offset += c.palette_size() as u32;
    }
    Ok(EdgeColoring::new(colors)?.canonicalize())
}

/// Broom `B_n`: center 0 joined to `1..=n-2`, plus the edge `{n-2, n-1}`.
pub fn broom(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::precondition(format!(
            "a broom needs n >= 4, got {n}"
        )));
    }
    let mut e: Vec<_> = (1..n - 1).map(|v| (0, v)).collect();
    e.push((n - 2, n - 1));
    Ok(Graph::from_simple(n, e))
}

/// Two-sided `md = 1` construction for `n >= 8`.
///
/// Labels: `a = 0, b = 1, u = 2, v = 3`, then `A` (size `ceil((n-4)/2)`),
/// then `B`. Start from the complete bipartite graph between `A ∪ {a, u}`
/// and `B ∪ {b, v}` and delete the 4-cycle `a b u v`.
pub fn ng_lower_graph(n: usize) -> Result<Graph> {
    if n < 8 {
        return Err(Error::precondition(format!(
            "the construction needs |A|, |B| >= 2, i.e. n >= 8, got {n}"
        )));
    }
    let size_a = (n - 4).div_ceil(2);
    let left: Vec<usize> = [0, 2].into_iter().chain(4..4 + size_a).collect();
    let right: Vec<usize> = [1, 3].into_iter().chain(4 + size_a..n).collect();
    let removed = [(0, 1), (1, 2), (2, 3), (0, 3)];
    let mut e = Vec::new();
    for &x in &left {
        for &y in &right {
            let p = (x.min(y), x.max(y));
            if !removed.contains(&p) {
                e.push(p);
            }
        }
    }
    e.sort_unstable();
    Ok(Graph::from_simple(n, e))
}

/// `C_5` on `0..5` with a pendant vertex 5 on vertex 0, and its complement.
pub fn n6_product_lower_pair() -> (Graph, Graph) {
    let g = unicyclic(5, 1).unwrap();
    let co = complement(&g);
    (g, co)
}

/// A graph family addressed by name, as used on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Star(usize),
    Tree { n: usize, seed: u64 },
    Cycle(usize),
    Unicyclic { cycle: usize, tail: usize },
    Complete(usize),
    CompleteMinus(usize),
    CompleteMultipartite(Vec<usize>),
    Petersen,
    Broom(usize),
    NgLower(usize),
    N6Lower,
    Join(Box<Family>, Box<Family>),
    Square(Box<Family>),
    LineGraph(Box<Family>),
}

impl Family {
    /// Parses a whole token list such as `["square", "path", "5"]`.
    pub fn parse(tokens: &[&str]) -> Result<Family> {
        let (f, rest) = Self::parse_prefix(tokens)?;
        if !rest.is_empty() {
            return Err(Error::precondition(format!(
                "unexpected family parameters {rest:?}"
            )));
        }
        Ok(f)
    }

    fn parse_prefix<'a, 'b>(tokens: &'a [&'b str]) -> Result<(Family, &'a [&'b str])> {
        let (name, rest) = tokens
            .split_first()
            .ok_or_else(|| Error::precondition("missing family name"))?;
        let num = |i: usize| -> Result<usize> {
            let t = rest.get(i).ok_or_else(|| {
                Error::precondition(format!("family {name} needs more parameters"))
            })?;
            t.parse()
                .map_err(|_| Error::precondition(format!("bad parameter {t:?} for family {name}")))
        };
        Ok(match *name {
            "path" => (Family::Path(num(0)?), &rest[1..]),
            "star" => (Family::Star(num(0)?), &rest[1..]),
            "tree" => (
                Family::Tree {
                    n: num(0)?,
                    seed: num(1)? as u64,
                },
                &rest[2..],
            ),
            "cycle" => (Family::Cycle(num(0)?), &rest[1..]),
            "unicyclic" => (
                Family::Unicyclic {
                    cycle: num(0)?,
                    tail: num(1)?,
                },
                &rest[2..],
            ),
            "complete" => (Family::Complete(num(0)?), &rest[1..]),
            "complete_minus" => (Family::CompleteMinus(num(0)?), &rest[1..]),
            "complete_multipartite" => {
                let spec = rest.first().ok_or_else(|| {
                    Error::precondition("complete_multipartite needs sizes like 2,3")
                })?;
                let sizes = spec
                    .split(',')
                    .map(|s| s.parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::precondition(format!("bad part sizes {spec:?}")))?;
                (Family::CompleteMultipartite(sizes), &rest[1..])
            }
            "petersen" => (Family::Petersen, rest),
            "broom" => (Family::Broom(num(0)?), &rest[1..]),
            "ng_lower" => (Family::NgLower(num(0)?), &rest[1..]),
            "n6_lower" => (Family::N6Lower, rest),
            "join" => {
                let (a, rest) = Self::parse_prefix(rest)?;
                let (b, rest) = Self::parse_prefix(rest)?;
                (Family::Join(Box::new(a), Box::new(b)), rest)
            }
            "square" => {
                let (a, rest) = Self::parse_prefix(rest)?;
                (Family::Square(Box::new(a)), rest)
            }
            "line_graph" => {
                let (a, rest) = Self::parse_prefix(rest)?;
                (Family::LineGraph(Box::new(a)), rest)
            }
            other => return Err(Error::precondition(format!("unknown family {other:?}"))),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        use rand::SeedableRng;
        Ok(match self {
            Family::Path(n) => path(*n),
            Family::Star(n) => star(*n)?,
            Family::Tree { n, seed } => {
                random_tree(*n, &mut rand_chacha::ChaCha8Rng::seed_from_u64(*seed))
            }
            Family::Cycle(n) => cycle(*n)?,
            Family::Unicyclic { cycle, tail } => unicyclic(*cycle, *tail)?,
            Family::Complete(n) => complete(*n),
            Family::CompleteMinus(n) => complete_minus(*n)?,
            Family::CompleteMultipartite(s) => complete_multipartite(s)?,
            Family::Petersen => petersen(),
            Family::Broom(n) => broom(*n)?,
            Family::NgLower(n) => ng_lower_graph(*n)?,
            Family::N6Lower => n6_product_lower_pair().0,
            Family::Join(a, b) => graph::join(&a.build()?, &b.build()?),
            Family::Square(a) => graph::square(&a.build()?)?,
            Family::LineGraph(a) => graph::line_graph(&a.build()?)?,
        })
    }

    /// The family's graph with an extremal MD-coloring: the explicit
    /// constructions where one exists, otherwise the exact solver's witness.
    pub fn build_colored(&self) -> Result<(Graph, EdgeColoring)> {
        let g = self.build()?;
        let c = match self {
            Family::Cycle(n) => color_cycle(*n)?.1,
            Family::Path(_) | Family::Star(_) | Family::Tree { .. } | Family::Broom(_) => {
                color_tree(&g)?
            }
            Family::Unicyclic { .. } => color_unicyclic(&g)?,
            _ => solver::md_exact(&g).witness,
        };
        Ok((g, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_md(g: &Graph, c: &EdgeColoring) -> bool {
        verify_md(g, c).unwrap().is_md
    }

    #[test]
    fn cycle_colorings() {
        let (g, c) = color_cycle(4).unwrap();
        assert_eq!(c.colors(), &[1, 2, 1, 2]);
        assert!(is_md(&g, &c));
        let (g, c) = color_cycle(5).unwrap();
        assert_eq!(c.palette_size(), 2);
        assert!(c.classes().iter().any(|(_, es)| es.len() == 3));
        assert!(is_md(&g, &c));
        let (_, c) = color_cycle(3).unwrap();
        assert_eq!(c.colors(), &[1, 1, 1]);
        assert!(color_cycle(2).is_err());
    }

    #[test]
    fn cycle_palette_is_half_the_length() {
        for n in 3..=64 {
            let (g, c) = color_cycle(n).unwrap();
            assert_eq!(c.palette_size(), n / 2, "n = {n}");
            assert!(is_md(&g, &c), "n = {n}");
        }
    }

    #[test]
    fn trees() {
        assert_eq!(color_tree(&path(4)).unwrap().colors(), &[1, 2, 3]);
        assert_eq!(color_tree(&path(2)).unwrap().colors(), &[1]);
        assert_eq!(color_tree(&star(5).unwrap()).unwrap().palette_size(), 4);
        assert!(color_tree(&cycle(4).unwrap()).is_err());
    }

    #[test]
    fn unicyclic_palettes() {
        for (c, t, want) in [(3, 1, 2), (4, 2, 4), (5, 0, 2)] {
            let g = unicyclic(c, t).unwrap();
            let col = color_unicyclic(&g).unwrap();
            assert_eq!(col.palette_size(), want);
            assert!(is_md(&g, &col));
        }
        assert!(color_unicyclic(&path(4)).is_err());
    }

    #[test]
    fn composition() {
        let bowtie = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let c = compose_block_colorings(
            &bowtie,
            &[EdgeColoring::uniform(3), EdgeColoring::uniform(3)],
        )
        .unwrap();
        assert_eq!(c.palette_size(), 2);
        assert!(is_md(&bowtie, &c));

        let p4 = path(4);
        let one = EdgeColoring::uniform(1);
        let c = compose_block_colorings(&p4, &[one.clone(), one.clone(), one]).unwrap();
        assert_eq!(c.palette_size(), 3);

        let g = unicyclic(4, 2).unwrap();
        let bd = block_decomposition(&g);
        let per: Vec<EdgeColoring> = bd
            .blocks
            .iter()
            .map(|b| {
                if b.len() == 1 {
                    EdgeColoring::uniform(1)
                } else {
                    EdgeColoring::new(vec![1, 2, 1, 2]).unwrap()
                }
            })
            .collect();
        let c = compose_block_colorings(&g, &per).unwrap();
        assert_eq!(
            c.palette_size(),
            color_unicyclic(&g).unwrap().palette_size()
        );

        let bad = compose_block_colorings(
            &bowtie,
            &[EdgeColoring::rainbow(3), EdgeColoring::uniform(3)],
        );
        assert!(matches!(bad, Err(Error::BlockColoring { block: 0 })));
    }

    #[test]
    fn brooms() {
        assert_eq!(broom(5).unwrap().degree_sequence(), vec![3, 2, 1, 1, 1]);
        let b4 = broom(4).unwrap();
        assert_eq!(b4.max_degree(), 2);
        assert!(b4.is_tree());
        assert_eq!(broom(8).unwrap().max_degree(), 6);
        assert!(broom(3).is_err());
    }

    #[test]
    fn broom_complement_is_near_clique_plus_pendant() {
        for n in 5..=10 {
            let co = complement(&broom(n).unwrap());
            assert!(co.is_connected());
            // the center becomes the pendant vertex, hanging off the extended leaf's end
            assert_eq!(co.degree(0), 1);
            assert!(co.has_edge(0, n - 1));
            let rest = co.remove_vertex(0).graph;
            let k = n - 1;
            assert_eq!(rest.m(), k * (k - 1) / 2 - 1);
        }
    }

    #[test]
    fn ng_lower_sizes() {
        let g = ng_lower_graph(8).unwrap();
        assert_eq!(g.m(), 12);
        assert!(g.is_connected() && complement(&g).is_connected());
        assert_eq!(ng_lower_graph(9).unwrap().m(), 16);
        assert!(ng_lower_graph(7).is_err());
    }

    #[test]
    fn n6_pair() {
        let (g, co) = n6_product_lower_pair();
        assert_eq!((g.n(), g.m()), (6, 6));
        assert_eq!(
            block_decomposition(&g)
                .is_bridge
                .iter()
                .filter(|&&b| b)
                .count(),
            1
        );
        assert_eq!(co.m(), 9);
    }

    #[test]
    fn family_parsing() {
        assert_eq!(Family::parse(&["cycle", "5"]).unwrap(), Family::Cycle(5));
        let f = Family::parse(&["join", "complete", "1", "path", "3"]).unwrap();
        assert_eq!(f.build().unwrap().m(), 5);
        let f = Family::parse(&["line_graph", "complete", "4"]).unwrap();
        assert_eq!(f.build().unwrap().n(), 6);
        assert_eq!(
            Family::parse(&["complete_multipartite", "2,3"])
                .unwrap()
                .build()
                .unwrap()
                .m(),
            6
        );
        assert!(Family::parse(&["cycle"]).is_err());
        assert!(Family::parse(&["cycle", "5", "6"]).is_err());
        assert!(Family::parse(&["nope"]).is_err());
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.m(), 15);
        assert_eq!(p.degree_sequence(), vec![3; 10]);
    }
}
