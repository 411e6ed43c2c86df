//! Graph file formats: graph6, DOT, and plain edge lists.
//!
//! graph6 follows the standard header-less encoding: the vertex count `N(n)`,
//! then the upper triangle of the adjacency matrix in column order
//! (`(0,1), (0,2), (1,2), (0,3), …`) packed into 6-bit groups, each offset by 63.
//! DOT and edge lists use 1-based vertex labels.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Dot,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "dot" => Ok(GraphFormat::Dot),
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            other => Err(Error::InvalidParameter(format!("unknown graph format {other:?}"))),
        }
    }
}

const GRAPH6_MAX_VERTICES: u64 = 68_719_476_735;

pub fn export(g: &Graph, format: GraphFormat) -> Result<Vec<u8>> {
    match format {
        GraphFormat::Graph6 => to_graph6(g).map(String::into_bytes),
        GraphFormat::Dot => Ok(to_dot(g).into_bytes()),
        GraphFormat::EdgeList => Ok(to_edge_list(g).into_bytes()),
    }
}

pub fn import(bytes: &[u8], format: GraphFormat) -> Result<Graph> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))?;
    match format {
        GraphFormat::Graph6 => from_graph6(text),
        GraphFormat::Dot => from_dot(text),
        GraphFormat::EdgeList => from_edge_list(text),
    }
}

fn encode_size(n: u64, out: &mut Vec<u8>) {
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

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n as u64 > GRAPH6_MAX_VERTICES {
        return Err(Error::cap("graph6 vertices", n, GRAPH6_MAX_VERTICES as usize));
    }
    let mut out = Vec::new();
    encode_size(n as u64, &mut out);
    let mut chunk = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(chunk + 63);
                chunk = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((chunk << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("printable ASCII"))
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Format("graph6 byte outside 63..=126".into()));
    }
    let value = |bs: &[u8]| bs.iter().fold(0u64, |acc, &b| (acc << 6) | (b - 63) as u64);
    let (n, body) = match bytes {
        [] => return Err(Error::Format("empty graph6 string".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => (value(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => (value(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(Error::Format("truncated graph6 size".into())),
        [b, rest @ ..] => ((b - 63) as u64, rest),
    };
    let n = usize::try_from(n).map_err(|_| Error::Format("graph6 size too large".into()))?;
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != needed {
        return Err(Error::Format(format!(
            "graph6 body has {} bytes, expected {needed}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        writeln!(s, "  {};", v + 1).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {} -- {};", u + 1, v + 1).unwrap();
    }
    s.push_str("}\n");
    s
}

fn parse_vertex(tok: &str) -> Result<usize> {
    let v: usize = tok
        .trim()
        .trim_matches('"')
        .parse()
        .map_err(|_| Error::Format(format!("bad vertex label {tok:?}")))?;
    if v == 0 {
        return Err(Error::Format("vertex labels are 1-based".into()));
    }
    Ok(v - 1)
}

/// Reads the DOT subset written by [`to_dot`]: vertex statements `k;` and edges `u -- v;`.
pub fn from_dot(text: &str) -> Result<Graph> {
    let open = text.find('{').ok_or_else(|| Error::Format("missing '{'".into()))?;
    let close = text.rfind('}').ok_or_else(|| Error::Format("missing '}'".into()))?;
    let header = text[..open].trim();
    if !header.starts_with("graph") && !header.starts_with("strict graph") {
        return Err(Error::Format("only undirected DOT graphs are supported".into()));
    }
    let mut n = 0;
    let mut edges = Vec::new();
    for stmt in text[open + 1..close].split([';', '\n']) {
        let stmt = stmt.trim();
        if stmt.is_empty() {
            continue;
        }
        if let Some((a, b)) = stmt.split_once("--") {
            let (u, v) = (parse_vertex(a)?, parse_vertex(b)?);
            n = n.max(u + 1).max(v + 1);
            edges.push((u, v));
        } else {
            let v = parse_vertex(stmt)?;
            n = n.max(v + 1);
        }
    }
    Graph::from_edges(n, &edges)
}

/// A `# vertices N` header, then one `u v` line per edge, 1-based.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("# vertices {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(s, "{} {}", u + 1, v + 1).unwrap();
    }
    s
}

/// Reads `u v` lines. The vertex count is the largest label seen, unless a
/// `# vertices N` comment line fixes it; other `#` lines are ignored.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut n = 0;
    let mut edges = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("vertices") {
                let count = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| Error::Format(format!("bad vertex count line {line:?}")))?;
                declared = Some(count);
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Format(format!("expected 'u v', got {line:?}")));
        };
        let (u, v) = (parse_vertex(a)?, parse_vertex(b)?);
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    if let Some(d) = declared {
        if d < n {
            return Err(Error::Format(format!("edge uses vertex {n} beyond declared {d}")));
        }
        n = d;
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_c_tilde() {
        assert_eq!(to_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(from_graph6("C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn single_vertex() {
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(from_graph6("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn known_string_from_reference_tools() {
        // 5 vertices, edges 1-3, 1-5, 2-4, 4-5
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn large_size_prefix() {
        let g = Graph::cycle(100);
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_graph6() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("C\x01").is_err());
    }

    #[test]
    fn dot_and_edge_list_round_trip() {
        let g = Graph::cycle(5).disjoint_union(&Graph::empty(1));
        assert_eq!(from_dot(&to_dot(&g)).unwrap(), g);
        let el = to_edge_list(&Graph::cycle(5));
        assert_eq!(el.lines().take(2).collect::<Vec<_>>(), ["# vertices 5", "1 2"]);
        assert_eq!(from_edge_list(&el).unwrap(), Graph::cycle(5));
        assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(from_edge_list("1 2\n2 3\n").unwrap().vertex_count(), 3);
        assert!(from_edge_list("1 2 3\n").is_err());
        assert!(from_edge_list("0 1\n").is_err());
        assert!(from_dot("digraph G { 1 -> 2; }").is_err());
    }
}
