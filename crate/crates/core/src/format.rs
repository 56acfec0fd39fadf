//! Text formats: graph6, whitespace-separated edge lists and DOT.
//!
//! graph6 follows the usual definition: the vertex count `N(n)` followed by
//! the upper triangle of the adjacency matrix, column by column, packed six
//! bits per printable byte. All three size encodings are read and written.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "edges" => Ok(GraphFormat::Edgelist),
            other => Err(Error::parse(0, format!("unknown graph format `{other}`"))),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => from_graph6(text),
        GraphFormat::Edgelist => from_edgelist(text),
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => to_graph6(g),
        GraphFormat::Edgelist => to_edgelist(g),
    }
}

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
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
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line; an optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let trimmed = text.trim();
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, lead + HEADER.len()),
        None => (trimmed, lead),
    };
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + i, format!("byte {b:#04x} is not a graph6 character")));
        }
    }
    let value = |range: std::ops::Range<usize>| -> Result<usize> {
        if range.end > bytes.len() {
            return Err(Error::parse(base + bytes.len(), "truncated vertex count"));
        }
        Ok(bytes[range]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, mut pos) = match bytes {
        [] => return Err(Error::parse(base, "empty graph6 string")),
        [126, 126, ..] => (value(2..8)?, 8),
        [126, ..] => (value(1..4)?, 4),
        [b, ..] => ((*b - 63) as usize, 1),
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(Error::parse(
            base + bytes.len().min(pos + needed),
            format!("expected {needed} adjacency bytes for {n} vertices, found {}", bytes.len() - pos),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos] - 63;
            if byte & (1 << (5 - bit)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == 6 {
                bit = 0;
                pos += 1;
            }
        }
    }
    Ok(Graph::from_valid_edges(n, edges))
}

/// `"n m"` header followed by `m` lines `"u v"` with 0-based endpoints.
pub fn to_edgelist(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn from_edgelist(text: &str) -> Result<Graph> {
    let mut tokens = Tokens::new(text);
    let n = tokens.number("vertex count")?;
    let m = tokens.number("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let at = tokens.offset();
        let u = tokens.number("edge endpoint")?;
        let v = tokens.number("edge endpoint")?;
        if u >= n || v >= n {
            return Err(Error::parse(at, format!("edge ({u}, {v}) out of range for {n} vertices")));
        }
        if u == v {
            return Err(Error::parse(at, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if let Some((at, extra)) = tokens.next() {
        return Err(Error::parse(at, format!("unexpected trailing token `{extra}`")));
    }
    Ok(Graph::from_valid_edges(n, edges))
}

struct Tokens<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Tokens { text, pos: 0 }
    }

    fn offset(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        if rest.is_empty() {
            return None;
        }
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let start = self.pos;
        self.pos += len;
        Some((start, &rest[..len]))
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let end = self.text.len();
        let (at, tok) = self
            .next()
            .ok_or_else(|| Error::parse(end, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| Error::parse(at, format!("invalid {what} `{tok}`")))
    }
}

/// Graphviz rendering, optionally with one label per vertex.
pub fn to_dot(g: &Graph, name: &str, labels: Option<&[String]>) -> String {
    let mut s = format!("graph {name} {{\n");
    for v in 0..g.n() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let _ = writeln!(s, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}
