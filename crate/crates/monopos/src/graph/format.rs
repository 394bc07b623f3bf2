//! Text formats: graph6 and a plain edge list.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...`) into 6-bit groups, most
//! significant bit first, each group offset by 63 into the printable range.
//! Orders up to 62 use a single header byte `n + 63`; larger orders use a
//! `~` prefix followed by three 6-bit digits. Parsing is strict: stray
//! bytes, short payloads and nonzero padding are rejected with the byte
//! offset of the problem.
//!
//! The edge-list format is line oriented: the first line is the order, each
//! following nonblank line one `u v` pair, 0-based.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

const G6_HEADER: &str = ">>graph6<<";

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => to_graph6(g),
        GraphFormat::EdgeList => to_edge_list(g),
    }
}

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6Parse { offset, reason: reason.into() }
}

fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\r', '\n']);
    let (line, base) = match line.strip_prefix(G6_HEADER) {
        Some(rest) => (rest, G6_HEADER.len()),
        None => (line, 0),
    };
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(base + i, format!("byte {b:#04x} outside graph6 range")));
        }
    }

    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(g6_err(base, "truncated extended order field"));
        }
        if bytes[1] == 126 {
            return Err(g6_err(base + 1, "orders beyond 18 bits are not supported"));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };

    if n == 0 {
        return Err(g6_err(base, "graph order must be at least 1"));
    }
    if n > MAX_VERTICES {
        return Err(g6_err(base, format!("order {n} exceeds the supported maximum of {MAX_VERTICES}")));
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return Err(g6_err(
            base + bytes.len(),
            format!("payload too short: expected {nbytes} data bytes, found {}", bytes.len() - pos),
        ));
    }
    if bytes.len() - pos > nbytes {
        return Err(g6_err(base + pos + nbytes, "trailing bytes after payload"));
    }

    let mut g = Graph::empty_order(n)?;
    let mut bit_index = 0usize;
    let mut it = upper_triangle(n);
    while bit_index < nbytes * 6 {
        let byte = bytes[pos] - 63;
        for k in 0..6 {
            let bit = byte >> (5 - k) & 1;
            match it.next() {
                Some((i, j)) => {
                    if bit == 1 {
                        g.add_edge(i, j);
                    }
                }
                None => {
                    if bit == 1 {
                        return Err(g6_err(base + pos, "nonzero padding bits"));
                    }
                }
            }
            bit_index += 1;
        }
        pos += 1;
    }
    Ok(g)
}

fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for (i, j) in upper_triangle(n) {
        acc = acc << 1 | g.has_edge(i, j) as u8;
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Column-major upper-triangle pair order shared by graph6 and the
/// connected-graph generator.
pub(crate) fn upper_triangle(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines
        .next()
        .ok_or(Error::EdgeListParse { line: 1, reason: "missing order line".into() })?;
    let n: usize = header.parse().map_err(|_| Error::EdgeListParse {
        line: line_no,
        reason: format!("expected graph order, found {header:?}"),
    })?;
    if n == 0 {
        return Err(Error::EdgeListParse { line: line_no, reason: "graph order must be at least 1".into() });
    }
    if n > MAX_VERTICES {
        return Err(Error::EdgeListParse {
            line: line_no,
            reason: format!("order {n} exceeds the supported maximum of {MAX_VERTICES}"),
        });
    }

    let mut g = Graph::empty_order(n)?;
    for (line_no, line) in lines {
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::EdgeListParse {
                    line: line_no,
                    reason: format!("expected \"u v\", found {line:?}"),
                })
            }
        };
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::EdgeListParse {
                line: line_no,
                reason: format!("bad vertex {s:?}"),
            })
        };
        let (u, v) = (parse(u)?, parse(v)?);
        g.add_edge_checked(u, v).map_err(|e| Error::EdgeListParse {
            line: line_no,
            reason: e.to_string(),
        })?;
    }
    Ok(g)
}

fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // 'D' = 68 encodes order 5; payload "?{" decodes to bits
    // 000000 111100 over the pair order (0,1),(0,2),(1,2),(0,3),(1,3),
    // (2,3),(0,4),(1,4),(2,4),(3,4): a star with centre 4.
    #[test]
    fn graph6_hand_decoded_star() {
        let g = parse_graph("D?{", GraphFormat::Graph6).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(serialize_graph(&g, GraphFormat::Graph6), "D?{");
    }

    #[test]
    fn graph6_accepts_header_and_newline() {
        let g = parse_graph(">>graph6<<D?{\n", GraphFormat::Graph6).unwrap();
        assert_eq!(g.n(), 5);
    }

    #[test]
    fn graph6_single_vertex() {
        let g = parse_graph("@", GraphFormat::Graph6).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(serialize_graph(&g, GraphFormat::Graph6), "@");
    }

    #[test]
    fn graph6_rejects_malformed() {
        // byte below the printable offset
        let err = parse_graph("D?\x20", GraphFormat::Graph6).unwrap_err();
        assert!(matches!(err, Error::Graph6Parse { offset: 2, .. }), "{err:?}");
        // short payload
        assert!(matches!(parse_graph("D?", GraphFormat::Graph6), Err(Error::Graph6Parse { .. })));
        // trailing bytes
        assert!(matches!(parse_graph("D?{?", GraphFormat::Graph6), Err(Error::Graph6Parse { .. })));
        // nonzero padding: order 2 has one data bit; 'O' decodes to 0b010000,
        // whose second (padding) bit is set
        assert!(matches!(parse_graph("AO", GraphFormat::Graph6), Err(Error::Graph6Parse { .. })));
        // while '_' = 0b100000 is the valid encoding of K_2
        assert_eq!(parse_graph("A_", GraphFormat::Graph6).unwrap().edges(), vec![(0, 1)]);
        // empty
        assert!(parse_graph("", GraphFormat::Graph6).is_err());
        // order above capacity: 129 = 126,'?','B','B'? use encoder to build it
        let mut big = String::from("~");
        big.push((63 + 0) as u8 as char);
        big.push((63 + 2) as u8 as char);
        big.push((63 + 1) as u8 as char); // (2 << 6) | 1 = 129
        let err = parse_graph(&big, GraphFormat::Graph6).unwrap_err();
        assert!(matches!(err, Error::Graph6Parse { .. }));
    }

    #[test]
    fn graph6_extended_order_round_trip() {
        use crate::graph::Family;
        let g = Family::Path(70).generate().unwrap();
        let s = serialize_graph(&g, GraphFormat::Graph6);
        assert!(s.starts_with('~'));
        let back = parse_graph(&s, GraphFormat::Graph6).unwrap();
        assert_eq!(back, g);
    }

    // Exhaustive round-trip over every labelled graph of order <= 5 plus a
    // stride sample of order 6: serialize then parse is the identity.
    #[test]
    fn graph6_round_trip_exhaustive_small() {
        for n in 1..=6usize {
            let m = n * (n - 1) / 2;
            let step = if n < 6 { 1 } else { 7 };
            let mut mask = 0u64;
            while mask < 1u64 << m {
                let mut g = Graph::empty_order(n).unwrap();
                for (k, (i, j)) in upper_triangle(n).enumerate() {
                    if mask >> k & 1 == 1 {
                        g.add_edge(i, j);
                    }
                }
                let s = to_graph6(&g);
                let back = parse_graph6(&s).unwrap();
                assert_eq!(back, g, "round trip failed for n={n} mask={mask:b}");
                assert_eq!(to_graph6(&back), s);
                mask += step;
            }
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_graph("3\n0 1\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let text = serialize_graph(&g, GraphFormat::EdgeList);
        assert_eq!(text, "3\n0 1\n1 2\n");
        assert_eq!(parse_graph(&text, GraphFormat::EdgeList).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let loop_err = parse_graph("2\n0 0\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(loop_err, Error::EdgeListParse { line: 2, .. }), "{loop_err:?}");
        let dup = parse_graph("3\n0 1\n\n1 0\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(dup, Error::EdgeListParse { line: 4, .. }), "{dup:?}");
        let range = parse_graph("2\n0 5\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(range, Error::EdgeListParse { line: 2, .. }));
        let malformed = parse_graph("2\n0\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(malformed, Error::EdgeListParse { line: 2, .. }));
        assert!(parse_graph("", GraphFormat::EdgeList).is_err());
        assert!(parse_graph("x\n", GraphFormat::EdgeList).is_err());
    }
}
