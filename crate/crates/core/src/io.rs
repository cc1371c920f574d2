//! graph6 and edge-list text formats.
//!
//! graph6: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed big-endian into
//! 6-bit groups, each written as `chr(value + 63)` and zero padded.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v` with
//! `0 <= u < v < n`. Blank lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push(char::from(n as u8 + 63));
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(char::from(((n >> shift) & 63) as u8 + 63));
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + 63));
    }
    out
}

/// Parses one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(g6_err(base, "empty input"));
    }
    if let Some(i) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(g6_err(
            base + i,
            format!(
                "byte 0x{:02x} outside the printable range 63..=126",
                body[i]
            ),
        ));
    }
    let value = |i: usize| u64::from(body[i] - 63);
    let (n, header_len) = if body[0] != b'~' {
        (value(0), 1)
    } else if body.len() > 1 && body[1] == b'~' {
        if body.len() < 8 {
            return Err(g6_err(base, "truncated 8-byte vertex count"));
        }
        ((2..8).fold(0, |acc, i| (acc << 6) | value(i)), 8)
    } else {
        if body.len() < 4 {
            return Err(g6_err(base, "truncated 4-byte vertex count"));
        }
        ((1..4).fold(0, |acc, i| (acc << 6) | value(i)), 4)
    };
    if n > MAX_VERTICES as u64 {
        return Err(g6_err(
            base,
            format!("{n} vertices; at most {MAX_VERTICES} are supported"),
        ));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != expected {
        return Err(g6_err(
            base + header_len,
            format!(
                "expected {expected} adjacency bytes for n = {n}, found {}",
                data.len()
            ),
        ));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = data[expected - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(g6_err(
                base + header_len + expected - 1,
                "nonzero padding bits",
            ));
        }
    }
    Ok(g)
}

/// Parses a graph6 line file, skipping blank lines. Errors carry the
/// 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| match e {
            Error::Graph6 { offset, message } => Error::Graph6 {
                offset,
                message: format!("line {}: {message}", i + 1),
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}

fn el_err(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| el_err(1, "missing header line \"n m\""))?;
    let nums = parse_pair(hline, header)?;
    let (n, m) = nums;
    if n > MAX_VERTICES {
        return Err(el_err(
            hline,
            format!("{n} vertices; at most {MAX_VERTICES} are supported"),
        ));
    }
    let mut g = Graph::new(n)?;
    let mut count = 0;
    for (lineno, line) in lines {
        let (u, v) = parse_pair(lineno, line)?;
        if u >= v {
            return Err(el_err(
                lineno,
                format!("edge \"{u} {v}\" must satisfy u < v"),
            ));
        }
        if v >= n {
            return Err(el_err(
                lineno,
                format!("vertex {v} out of range for n = {n}"),
            ));
        }
        if g.has_edge(u, v) {
            return Err(el_err(lineno, format!("duplicate edge {u}-{v}")));
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(el_err(
            hline,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

fn parse_pair(lineno: usize, line: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(el_err(
            lineno,
            format!("expected two integers, found {:?}", line),
        ));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| el_err(lineno, format!("not a non-negative integer: {s:?}")))
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
