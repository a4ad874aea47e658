//! Edge-list text and graph6 encodings.
//!
//! Edge-list format: first line `n m`, then `m` lines `u v` (0-indexed,
//! `u < v`, ascending). Blank lines and `#` comments are ignored on input.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let (n, m) = pair(header)?;
    let edges = lines.map(pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    let g = Graph::from_edge_list(n, &edges)?;
    if g.edge_count() != m {
        return Err(Error::Parse("duplicate edges in edge list".into()));
    }
    Ok(g)
}

fn pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad integer '{t}' in line '{line}'")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!("expected two integers, got '{line}'"))),
    }
}

/// graph6 encoding (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let s = line.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).as_bytes();
    if s.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse("graph6 byte outside 63..=126".into()));
    }
    let take = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body) = match s {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => (take(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (take(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(Error::Parse("truncated graph6 size field".into())),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {}",
            body.len(),
            pairs.div_ceil(6)
        )));
    }
    let mut g = Graph::try_empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Reads either format: a single graph6 token or edge-list text.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let single_token = !trimmed.contains(char::is_whitespace);
    if single_token && !trimmed.chars().all(|c| c.is_ascii_digit()) {
        parse_graph6(trimmed)
    } else {
        parse_edge_list(text)
    }
}
