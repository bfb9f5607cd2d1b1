//! Text formats: graph6, edge lists, partitions and permutations.
//!
//! graph6 follows the nauty definition: a size header of 1, 4 or 8 bytes,
//! then the upper triangle of the adjacency matrix in column-major order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::partition::Partition;
use crate::perm::Permutation;

const G6_OFFSET: u8 = 63;

/// Parses one graph6 record. A trailing line ending is tolerated; a
/// `>>graph6<<` header is not.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = trim_line_end(text);
    if let Some(&b) = text.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} out of range 63..=126")));
    }
    let sextets: Vec<u8> = text.iter().map(|&b| b - G6_OFFSET).collect();
    let (n, header) = match sextets.as_slice() {
        [] => return Err(Error::MalformedGraph6("empty record".into())),
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::MalformedGraph6("truncated 8-byte size header".into()));
            }
            (rest[..6].iter().fold(0usize, |acc, &s| (acc << 6) | s as usize), 8)
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::MalformedGraph6("truncated 4-byte size header".into()));
            }
            (rest[..3].iter().fold(0usize, |acc, &s| (acc << 6) | s as usize), 4)
        }
        [first, ..] => (*first as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::GraphTooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header + bits.div_ceil(6);
    if sextets.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} bytes for n = {n}, found {}",
            sextets.len()
        )));
    }
    let payload = &sextets[header..];
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if (payload[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Emits the canonical graph6 record (zero padding, shortest header).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8);
    } else if n <= 258_047 {
        out.extend([63, (n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63]);
    } else {
        out.extend([63, 63]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i)) as u8 & 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (6 - filled));
    }
    out.into_iter().map(|s| (s + G6_OFFSET) as char).collect()
}

/// Parses `n m` followed by `m` lines `u v` (1-based).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace();
    let mut next_number = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::MalformedEdgeList(format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| Error::MalformedEdgeList(format!("bad {what} {tok:?}")))
    };
    let n = next_number("vertex count")?;
    let m = next_number("edge count")?;
    if n == 0 {
        return Err(Error::MalformedEdgeList("vertex count must be positive".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::GraphTooLarge(n));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = next_number("endpoint")?;
        let v = next_number("endpoint")?;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        edges.push((u - 1, v - 1));
    }
    if tokens.next().is_some() {
        return Err(Error::MalformedEdgeList(format!("more than {m} edges")));
    }
    Graph::from_edges(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    s
}

/// Guesses the format of a graph file: an edge list starts with two
/// decimal numbers on its first line, graph6 never contains whitespace.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let looks_like_edges = first.split_whitespace().count() == 2
        && first.split_whitespace().all(|t| t.bytes().all(|b| b.is_ascii_digit()));
    if looks_like_edges {
        parse_edge_list(text)
    } else {
        parse_graph6(first.trim().as_bytes())
    }
}

/// Parses one cell per line, vertices 1-based. Blank lines and `#`
/// comments are skipped. The ground set is `1..=n`.
pub fn parse_partition(text: &str, n: usize) -> Result<Partition> {
    let mut cells = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let cell = line
            .split_whitespace()
            .map(|tok| match tok.parse::<usize>() {
                Ok(v) if v >= 1 && v <= n => Ok(v - 1),
                Ok(v) => Err(Error::VertexOutOfRange { vertex: v, n }),
                Err(_) => Err(Error::MalformedPartition(format!("bad vertex {tok:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        cells.push(cell);
    }
    Partition::from_cells(n, &cells)
}

/// Like [`parse_partition`] with the ground set taken as `1..=max id`.
pub fn parse_partition_infer(text: &str) -> Result<Partition> {
    let n = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .ok_or_else(|| Error::MalformedPartition("no vertices".into()))?;
    parse_partition(text, n)
}

pub fn format_partition(p: &Partition) -> String {
    let mut s = String::new();
    for cell in p.cells() {
        let ids: Vec<String> = cell.iter().map(|v| (v + 1).to_string()).collect();
        s.push_str(&ids.join(" "));
        s.push('\n');
    }
    s
}

/// Parses cycle notation such as `(1 4)(2 3)` over `1..=n`; `()` is the
/// identity.
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation> {
    let mut images: Vec<usize> = (0..n).collect();
    let mut seen = vec![false; n];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::MalformedPermutation(format!("expected '(' at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::MalformedPermutation("unclosed cycle".into()))?;
        let cycle = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(v) if v >= 1 && v <= n => Ok(v - 1),
                Ok(v) => Err(Error::VertexOutOfRange { vertex: v, n }),
                Err(_) => Err(Error::MalformedPermutation(format!("bad vertex {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        for (i, &v) in cycle.iter().enumerate() {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotPermutation(n));
            }
            images[v] = cycle[(i + 1) % cycle.len()];
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::new(images)
}

fn trim_line_end(mut text: &[u8]) -> &[u8] {
    while let [head @ .., b'\n' | b'\r'] = text {
        text = head;
    }
    text
}
