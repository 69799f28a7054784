//! graph6 and plain edge-list text formats.
//!
//! graph6 follows the standard byte encoding: an order prefix followed by
//! the upper triangle of the adjacency matrix in column order, six bits per
//! printable byte (value + 63), most significant bit first, zero padded.
//!
//! The edge-list format is a line with the order `n` followed by one
//! `u v` pair per line. Blank lines and lines starting with `#` are ignored,
//! and a new one-token line starts the next graph in a multi-graph file.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::MAX_ORDER;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

fn sixbits(bytes: &[u8], at: usize, base: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(g6_err(base + at, format!("byte 0x{b:02x} is outside the printable range 63..=126"))),
        None => Err(g6_err(base + at, "unexpected end of input")),
    }
}

/// Parses one graph6 string (no trailing newline). `base` shifts reported offsets.
fn parse_graph6_at(text: &str, base: usize) -> Result<Graph> {
    let (bytes, base) = match text.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest.as_bytes(), base + GRAPH6_HEADER.len()),
        None => (text.as_bytes(), base),
    };
    if bytes.is_empty() {
        return Err(g6_err(base, "empty graph6 string"));
    }
    let (order, mut pos) = match bytes[0] {
        b @ 63..=125 => (u64::from(b - 63), 1),
        126 => {
            if bytes.get(1) == Some(&126) {
                let mut n = 0u64;
                for i in 2..8 {
                    n = n << 6 | sixbits(bytes, i, base)?;
                }
                (n, 8)
            } else {
                let mut n = 0u64;
                for i in 1..4 {
                    n = n << 6 | sixbits(bytes, i, base)?;
                }
                (n, 4)
            }
        }
        b => return Err(g6_err(base, format!("byte 0x{b:02x} is not a valid order prefix"))),
    };
    let order = usize::try_from(order).unwrap_or(usize::MAX);
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge(order));
    }
    let bit_count = order * order.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let mut edges = Vec::new();
    let mut k = 0usize;
    for _ in 0..byte_count {
        let chunk = sixbits(bytes, pos, base)?;
        for shift in (0..6).rev() {
            let bit = chunk >> shift & 1 == 1;
            if k < bit_count {
                if bit {
                    // k indexes the upper triangle column by column
                    let mut j = 1;
                    while j * (j + 1) / 2 <= k {
                        j += 1;
                    }
                    let i = k - j * (j - 1) / 2;
                    edges.push((i, j));
                }
            } else if bit {
                return Err(g6_err(base + pos, "non-zero padding bit"));
            }
            k += 1;
        }
        pos += 1;
    }
    if pos != bytes.len() {
        return Err(g6_err(base + pos, format!("{} trailing byte(s)", bytes.len() - pos)));
    }
    Graph::new(order, edges)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_at(text.trim_end_matches(['\n', '\r']), 0)
}

/// One graph per non-empty line; offsets in errors are relative to the whole input.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line = raw.trim_end_matches(['\n', '\r']);
        if !line.is_empty() {
            out.push(parse_graph6_at(line, offset)?);
        }
        offset += raw.len();
    }
    Ok(out)
}

pub fn to_graph6(graph: &Graph) -> String {
    let n = graph.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(graph.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn el_err(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList { line, message: message.into() }
}

/// A graph being read: the line of its order, the order, its edges so far.
type Pending = (usize, usize, Vec<(usize, usize)>);

pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut current: Option<Pending> = None;
    let finish = |cur: Pending| -> Result<Graph> {
        let (line, n, edges) = cur;
        Graph::new(n, edges).map_err(|e| el_err(line, e.to_string()))
    };
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse = |t: &str| t.parse::<usize>().map_err(|_| el_err(line_no, format!("`{t}` is not a vertex label")));
        match tokens.as_slice() {
            [n] => {
                if let Some(cur) = current.take() {
                    graphs.push(finish(cur)?);
                }
                current = Some((line_no, parse(n)?, Vec::new()));
            }
            [u, v] => {
                let (u, v) = (parse(u)?, parse(v)?);
                let Some((_, n, edges)) = current.as_mut() else {
                    return Err(el_err(line_no, "edge before the order line"));
                };
                if u >= *n || v >= *n {
                    return Err(el_err(line_no, format!("edge {u} {v} uses a label outside 0..{n}")));
                }
                if u == v {
                    return Err(el_err(line_no, format!("loop at vertex {u}")));
                }
                edges.push((u, v));
            }
            _ => return Err(el_err(line_no, "expected `n` or `u v`")),
        }
    }
    if let Some(cur) = current.take() {
        graphs.push(finish(cur)?);
    }
    Ok(graphs)
}

/// Parses exactly one graph.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graphs = parse_edge_lists(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(el_err(1, "no graph found")),
        k => Err(el_err(1, format!("expected one graph, found {k}"))),
    }
}

pub fn to_edge_list(graph: &Graph) -> String {
    let mut out = format!("{}\n", graph.order());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
