//! Text formats: graph6, whitespace edge lists, and generator spec strings.

use crate::error::ParseError;
use crate::graph::{subdivide3, Graph, SubdivisionMap};

const BIAS: u8 = 63;

/// Decode one graph6 line (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(ParseError::BadByte { offset, byte: bytes[offset] });
    }
    let (n, header) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        (read_n(bytes, 1, 3)?, 4)
    } else {
        (read_n(bytes, 2, 6)?, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(ParseError::BadLength { n, expected, got: bytes.len() });
    }
    let data = &bytes[header..];
    let bit = |k: usize| (data[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (bits..(data.len() * 6)).any(bit) {
        return Err(ParseError::NonZeroPadding);
    }
    // column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn read_n(bytes: &[u8], start: usize, len: usize) -> Result<usize, ParseError> {
    let header_len = start + len;
    if bytes.len() < header_len {
        return Err(ParseError::BadLength { n: 0, expected: header_len, got: bytes.len() });
    }
    Ok(bytes[start..header_len]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize))
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parse `"n m"` followed by `m` lines `"u v"`. `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, msg: &str| ParseError::EdgeList { line, msg: msg.to_string() };
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let nums = parse_pair(header).ok_or_else(|| err(hline, "expected header `n m`"))?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let e = parse_pair(l).ok_or_else(|| err(line, "expected `u v`"))?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(err(hline, &format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// A graph together with how it was produced.
#[derive(Clone, Debug)]
pub struct GraphSource {
    pub name: String,
    pub graph: Graph,
    /// Present when the graph is a 3-subdivision produced by `subdiv2:`.
    pub subdivision: Option<SubdivisionMap>,
}

impl GraphSource {
    pub fn plain(name: impl Into<String>, graph: Graph) -> Self {
        GraphSource { name: name.into(), graph, subdivision: None }
    }
}

/// Build a graph from a generator spec such as `cycle:8`, `subdiv2:cycle:3`,
/// or `union:cycle:4+cycle:8`. `petersen` and `g6:<graph6>` are also accepted.
pub fn parse_generator(spec: &str) -> Result<GraphSource, ParseError> {
    let bad = |msg: &str| ParseError::Generator { spec: spec.to_string(), msg: msg.to_string() };
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("union:") {
        let mut parts = rest.split('+');
        let first = parts.next().ok_or_else(|| bad("empty union"))?;
        let mut g = parse_generator(first)?.graph;
        let mut count = 1;
        for p in parts {
            g = g.disjoint_union(&parse_generator(p)?.graph);
            count += 1;
        }
        if count < 2 {
            return Err(bad("union needs at least two operands joined by `+`"));
        }
        return Ok(GraphSource::plain(spec, g));
    }
    if let Some(rest) = spec.strip_prefix("subdiv2:") {
        let base = parse_generator(rest)?.graph;
        let (g, map) = subdivide3(&base);
        return Ok(GraphSource { name: spec.to_string(), graph: g, subdivision: Some(map) });
    }
    if let Some(code) = spec.strip_prefix("g6:") {
        return Ok(GraphSource::plain(spec, parse_graph6(code)?));
    }
    if spec == "petersen" {
        return Ok(GraphSource::plain(spec, Graph::petersen()));
    }
    let (kind, arg) = spec.split_once(':').ok_or_else(|| bad("expected `kind:size`"))?;
    let n: usize = arg.parse().map_err(|_| bad("size is not a number"))?;
    let g = match kind {
        "cycle" => Graph::cycle(n)?,
        "path" => Graph::path(n)?,
        "complete" => Graph::complete(n)?,
        _ => return Err(bad("unknown generator")),
    };
    Ok(GraphSource::plain(spec, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent decoder: walks the bit string directly instead of indexing by `k`.
    fn oracle_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let bits: Vec<bool> = b[1..]
            .iter()
            .flat_map(|&c| (0..6).rev().map(move |i| ((c - 63) >> i) & 1 == 1))
            .collect();
        let mut pos = 0;
        let mut edges = vec![];
        for j in 0..n {
            for i in 0..j {
                if bits[pos] {
                    edges.push((i, j));
                }
                pos += 1;
            }
        }
        edges.sort();
        (n, edges)
    }

    #[test]
    fn k2_from_graph6() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
        assert_eq!(oracle_decode("A_"), (2, vec![(0, 1)]));
        assert_eq!(emit_graph6(&g), "A_");
    }

    #[test]
    fn known_encodings() {
        // petgraph's test graph: edges a-c, a-e, b-d, d-e
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        for s in ["DQc", "Ch", "E]~o", "I}qOoq`_G"] {
            let g = parse_graph6(s).unwrap();
            let (n, edges) = oracle_decode(s);
            assert_eq!(g.n(), n);
            assert_eq!(g.edges().collect::<Vec<_>>(), edges);
            assert_eq!(emit_graph6(&g), s);
        }
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert_eq!(parse_graph6("A "), Err(ParseError::BadByte { offset: 1, byte: b' ' }));
        assert!(matches!(parse_graph6("C"), Err(ParseError::BadLength { n: 4, .. })));
        assert_eq!(parse_graph6("A`"), Err(ParseError::NonZeroPadding));
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::cycle(70).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("# C4\n4 4\n0 1\n1 2 # spoke\n2 3\n3 0\n").unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        assert!(matches!(parse_edge_list("3 1\n0 0\n"), Err(ParseError::Graph(_))));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(ParseError::EdgeList { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(ParseError::EdgeList { line: 2, .. })));
    }

    #[test]
    fn generator_specs() {
        assert_eq!(parse_generator("cycle:8").unwrap().graph.m(), 8);
        assert_eq!(parse_generator("path:5").unwrap().graph.m(), 4);
        assert_eq!(parse_generator("complete:4").unwrap().graph.m(), 6);
        let s = parse_generator("subdiv2:cycle:3").unwrap();
        assert_eq!(s.graph.n(), 9);
        assert!(s.subdivision.is_some());
        let u = parse_generator("union:cycle:4+cycle:8").unwrap().graph;
        assert_eq!((u.n(), u.components().len()), (12, 2));
        assert!(parse_generator("cycle:2").is_err());
        assert!(parse_generator("wheel:5").is_err());
        assert!(parse_generator("union:cycle:4").is_err());
        assert_eq!(parse_generator("g6:A_").unwrap().graph.n(), 2);
    }
}
