//! Text formats for graphs.
//!
//! The canonical format is an edge list: a header line `n m` followed by `m`
//! lines `u v` with 0-based vertex ids. Input whose first line contains no
//! space is decoded as graph6 instead.

use std::fmt::Write as _;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

/// Parses either format, detected from the first line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .next()
        .ok_or_else(|| Error::parse(1, "empty input"))?;
    if first.trim_end().contains(' ') {
        parse_edge_list(text)
    } else {
        parse_graph6(first.trim())
    }
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    std::fs::write(path, to_edge_list(g))?;
    Ok(())
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(Error::parse(1, "header must be \"n m\""));
    }
    let n = parse_usize(head[0], 1, "vertex count")?;
    let m = parse_usize(head[1], 1, "edge count")?;
    let mut pairs = Vec::with_capacity(m);
    let mut last_line = 1;
    for (lineno, line) in lines {
        last_line = lineno;
        if line.trim().is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(lineno, "edge line must be \"u v\""));
        }
        if pairs.len() == m {
            return Err(Error::parse(lineno, format!("more than {m} edge lines")));
        }
        let u = parse_usize(toks[0], lineno, "vertex id")?;
        let v = parse_usize(toks[1], lineno, "vertex id")?;
        if u >= n || v >= n {
            return Err(Error::parse(
                lineno,
                format!("vertex {} out of range 0..{n}", u.max(v)),
            ));
        }
        if u == v {
            return Err(Error::parse(lineno, format!("loop edge ({u}, {v})")));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::parse(
            last_line,
            format!("header announces {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::new(n, &pairs)
}

/// Canonical edge-list rendering, LF terminated.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = String::with_capacity(8 * (g.m() + 1));
    writeln!(s, "{} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is allowed).
/// Edges come out in column order: `(0,1), (0,2), (1,2), (0,3), ..`.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(1, "empty graph6 string"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(
            1,
            format!("invalid graph6 byte at offset {pos}"),
        ));
    }
    let six = |bs: &[u8]| {
        bs.iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
    };
    let (n, body) = if bytes[0] != 126 {
        (six(&bytes[..1]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::parse(1, "truncated graph6 size"));
        }
        (six(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Error::parse(1, "truncated graph6 size"));
        }
        (six(&bytes[2..8]), &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::parse(
            1,
            format!(
                "graph6 body has {} bytes, expected {}",
                body.len(),
                bits.div_ceil(6)
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::from_simple(n, edges))
}
