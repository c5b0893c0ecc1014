//! graph6, edge-list and DOT text formats.
//!
//! graph6 follows the `formats.txt` definition shipped with nauty: an order
//! header followed by the upper triangle of the adjacency matrix read column
//! by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per
//! byte and offset by 63. Orders up to 62 use the one-byte header and orders
//! up to 258047 the four-byte `~` header; larger graphs are rejected.

use std::fmt::Write as _;

use crate::error::FormatError;
use crate::graph::Graph;

/// Largest order representable with the one- and four-byte headers.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

pub fn encode_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= GRAPH6_MAX_ORDER {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| 63 + x as u8));
    } else {
        return Err(FormatError::TooLarge { n, max: GRAPH6_MAX_ORDER });
    }
    let (mut acc, mut fill) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            fill += 1;
            if fill == 6 {
                out.push(63 + acc);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push(63 + (acc << (6 - fill)));
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Decodes one graph6 string. Surrounding whitespace (such as the trailing
/// newline of a `.g6` line) is ignored; padding bits are not checked.
pub fn decode_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(FormatError::BadChar { pos, byte: bytes[pos] });
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(FormatError::TooLarge { n: GRAPH6_MAX_ORDER + 1, max: GRAPH6_MAX_ORDER });
        }
        if bytes.len() < 4 {
            return Err(FormatError::TruncatedHeader);
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::PayloadLength { expected, found: body.len() });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded endpoints are in range"))
}

/// Undirected DOT output: one node statement per vertex, then one line per
/// edge in lexicographic order. `labels`, when given, replace the vertex
/// numbers as quoted node names.
pub fn export_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let name = |v: usize| match labels.and_then(|l| l.get(v)) {
        Some(s) => format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\"")),
        None => v.to_string(),
    };
    let mut out = String::from("graph {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {};", name(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", name(u), name(v));
    }
    out.push_str("}\n");
    out
}

/// Parses `n m` followed by `m` lines `u v`. Blank lines are skipped and any
/// run of whitespace separates fields.
pub fn read_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let err = |line: usize, msg: String| FormatError::EdgeList { line, msg };
    let pair = |line: usize, s: &str| -> Result<(usize, usize), FormatError> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(line, format!("expected two integers, found {:?}", s)));
        }
        let parse =
            |f: &str| f.parse::<usize>().map_err(|_| err(line, format!("{:?} is not a non-negative integer", f)));
        Ok((parse(fields[0])?, parse(fields[1])?))
    };
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing \"n m\" header".into()))?;
    let (n, m) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for _ in 0..m {
        let (line, s) =
            lines.next().ok_or_else(|| err(last + 1, format!("expected {m} edges, found {}", edges.len())))?;
        let (u, v) = pair(line, s)?;
        if u >= n || v >= n {
            return Err(err(line, format!("endpoint out of range in ({u}, {v}) for n = {n}")));
        }
        if u == v {
            return Err(err(line, format!("loop ({u}, {v})")));
        }
        edges.push((u, v));
        last = line;
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, format!("more than the {m} declared edges")));
    }
    Ok(Graph::from_edges(n, &edges).expect("validated above"))
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
