//! Edge colorings and the monochromatic-disconnection check.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One positive color id per edge id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeColoring {
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(edge) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor { edge });
        }
        Ok(EdgeColoring { colors })
    }

    /// Every edge gets color 1.
    pub fn uniform(m: usize) -> Self {
        EdgeColoring { colors: vec![1; m] }
    }

    /// Edge `i` gets color `i + 1`.
    pub fn rainbow(m: usize) -> Self {
        EdgeColoring {
            colors: (1..=m as u32).collect(),
        }
    }

    pub(crate) fn from_canonical(colors: Vec<u32>) -> Self {
        debug_assert!(is_restricted_growth(&colors));
        EdgeColoring { colors }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    /// Number of distinct colors used.
    pub fn palette_size(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Restricted-growth relabelling: scanning edges in id order, each new
    /// color gets the smallest id not yet used.
    pub fn canonicalize(&self) -> EdgeColoring {
        let mut map = HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = map.len() as u32 + 1;
                *map.entry(*c).or_insert(next)
            })
            .collect();
        EdgeColoring { colors }
    }

    pub fn is_canonical(&self) -> bool {
        is_restricted_growth(&self.colors)
    }

    /// Colors of the listed edges, in the listed order.
    pub fn restrict(&self, edge_ids: &[usize]) -> EdgeColoring {
        EdgeColoring {
            colors: edge_ids.iter().map(|&e| self.colors[e]).collect(),
        }
    }

    /// Edge ids grouped by color, classes ordered by color id.
    pub fn classes(&self) -> Vec<(u32, Vec<usize>)> {
        let mut by: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
        for (e, &c) in self.colors.iter().enumerate() {
            by.entry(c).or_default().push(e);
        }
        by.into_iter().collect()
    }

    /// Parses the coloring file format: whitespace-separated positive integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut colors = Vec::new();
        for (i, line) in text.lines().enumerate() {
            for tok in line.split_whitespace() {
                let c: u32 = tok.parse().map_err(|_| {
                    Error::parse(i + 1, format!("expected a color id, found {tok:?}"))
                })?;
                if c == 0 {
                    return Err(Error::parse(i + 1, "color ids must be positive"));
                }
                colors.push(c);
            }
        }
        Ok(EdgeColoring { colors })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Single line, space separated, LF terminated.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(3 * self.colors.len() + 1);
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            write!(s, "{c}").unwrap();
        }
        s.push('\n');
        s
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

pub(crate) fn is_restricted_growth(colors: &[u32]) -> bool {
    let mut max = 0;
    for &c in colors {
        if c == 0 || c > max + 1 {
            return false;
        }
        max = max.max(c);
    }
    true
}

/// Outcome of [`verify_md`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MdVerdict {
    pub is_md: bool,
    /// Vertex pairs `u < v` with no monochromatic cut, in lexicographic order.
    pub uncovered_pairs: Vec<(usize, usize)>,
}

/// Colors `k` such that `u` and `v` fall in different components of `G`
/// minus the edges colored `k`. Pairs in different components of `G` are
/// separated by every color.
pub fn separating_colors(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> Result<Vec<u32>> {
    check_len(g, c)?;
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
    let mut palette: Vec<u32> = c.colors.clone();
    palette.sort_unstable();
    palette.dedup();
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    Ok(palette
        .into_iter()
        .filter(|&k| {
            seen.iter_mut().for_each(|s| *s = false);
            seen[u] = true;
            queue.clear();
            queue.push_back(u);
            while let Some(x) = queue.pop_front() {
                for &(y, e) in g.incident(x) {
                    if c.colors[e] != k && !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            !seen[v]
        })
        .collect())
}

/// Decides whether `c` is an MD-coloring of `g`.
pub fn verify_md(g: &Graph, c: &EdgeColoring) -> Result<MdVerdict> {
    check_len(g, c)?;
    let canon = c.canonicalize();
    let mut verifier = Verifier::new(g);
    let palette = canon.palette_size() as u32;
    verifier.cover(&canon.colors, palette);
    let uncovered_pairs = verifier.uncovered();
    Ok(MdVerdict {
        is_md: uncovered_pairs.is_empty(),
        uncovered_pairs,
    })
}

fn check_len(g: &Graph, c: &EdgeColoring) -> Result<()> {
    if c.len() != g.m() {
        return Err(Error::ColoringLength {
            expected: g.m(),
            got: c.len(),
        });
    }
    Ok(())
}

/// Reusable MD checker for colorings whose ids are `1..=palette`.
///
/// For each color class the components of `G` minus that class are computed
/// once with a union-find; every vertex then marks the vertices outside its
/// component as covered in a per-vertex bitmask.
pub(crate) struct Verifier<'g> {
    g: &'g Graph,
    words: usize,
    base: Vec<u64>,
    covered: Vec<u64>,
    parent: Vec<usize>,
    comp: Vec<u64>,
}

impl<'g> Verifier<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut base = vec![0u64; n * words];
        // pairs in different components of G are separated by any cut
        let label = g.component_labels();
        for u in 0..n {
            for v in 0..n {
                if label[u] != label[v] {
                    base[u * words + v / 64] |= 1 << (v % 64);
                }
            }
        }
        Verifier {
            g,
            words,
            base,
            covered: vec![0; n * words],
            parent: vec![0; n],
            comp: vec![0; n * words],
        }
    }

    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    pub(crate) fn cover(&mut self, colors: &[u32], palette: u32) {
        let (n, w) = (self.g.n(), self.words);
        self.covered.copy_from_slice(&self.base);
        for k in 1..=palette {
            for (i, p) in self.parent.iter_mut().enumerate() {
                *p = i;
            }
            for (e, &(a, b)) in self.g.edges().iter().enumerate() {
                if colors[e] != k {
                    let ra = Self::find(&mut self.parent, a);
                    let rb = Self::find(&mut self.parent, b);
                    if ra != rb {
                        self.parent[ra] = rb;
                    }
                }
            }
            for v in 0..n {
                let r = Self::find(&mut self.parent, v);
                self.parent[v] = r;
                self.comp[r * w + v / 64] |= 1 << (v % 64);
            }
            for v in 0..n {
                let r = self.parent[v];
                for j in 0..w {
                    self.covered[v * w + j] |= !self.comp[r * w + j];
                }
            }
            for v in 0..n {
                if self.parent[v] == v {
                    self.comp[v * w..(v + 1) * w]
                        .iter_mut()
                        .for_each(|x| *x = 0);
                }
            }
        }
    }

    fn row_complete(&self, v: usize) -> bool {
        let (n, w) = (self.g.n(), self.words);
        (0..w).all(|j| {
            let mut want = if (j + 1) * 64 <= n {
                u64::MAX
            } else {
                (1u64 << (n - j * 64)) - 1
            };
            if v / 64 == j {
                want &= !(1 << (v % 64));
            }
            self.covered[v * w + j] & want == want
        })
    }

    pub(crate) fn is_md(&mut self, colors: &[u32], palette: u32) -> bool {
        self.cover(colors, palette);
        (0..self.g.n()).all(|v| self.row_complete(v))
    }

    fn uncovered(&self) -> Vec<(usize, usize)> {
        let (n, w) = (self.g.n(), self.words);
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.covered[u * w + v / 64] >> (v % 64) & 1 == 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }
}
