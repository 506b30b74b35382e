//! Text formats: graph6 and whitespace-separated edge lists.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const HEADER: &str = ">>graph6<<";

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

/// Decodes either graph6 or an edge list, deciding by the first non-blank line:
/// a single token made only of printable graph6 bytes is read as graph6.
pub fn decode_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| parse_err("line 1", "empty input"))?;
    let token = first.strip_prefix(HEADER).unwrap_or(first);
    let looks_graph6 = !token.is_empty()
        && !token.contains(char::is_whitespace)
        && token.bytes().all(|b| (63..=126).contains(&b));
    if looks_graph6 {
        decode_graph6(first)
    } else {
        decode_edge_list(text)
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let at = |i: usize| -> Result<u64> {
        let b = *bytes
            .get(i)
            .ok_or_else(|| parse_err(format!("byte {i}"), "truncated size header"))?;
        if !(63..=126).contains(&b) {
            return Err(parse_err(format!("byte {i}"), format!("invalid graph6 byte {b}")));
        }
        Ok(u64::from(b - 63))
    };
    let first = *bytes
        .first()
        .ok_or_else(|| parse_err("byte 0", "empty graph6 string"))?;
    if first != 126 {
        return Ok((at(0)? as usize, 1));
    }
    if bytes.get(1) != Some(&126) {
        let n = (at(1)? << 12) | (at(2)? << 6) | at(3)?;
        return Ok((n as usize, 4));
    }
    let mut n = 0u64;
    for i in 2..8 {
        n = (n << 6) | at(i)?;
    }
    Ok((n as usize, 8))
}

/// Decodes one graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let body = line.strip_prefix(HEADER).unwrap_or(line);
    let offset = line.len() - body.len();
    let bytes = body.as_bytes();
    let (n, header_len) = decode_size(bytes)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() != needed {
        return Err(parse_err(
            format!("byte {}", offset + header_len + data.len().min(needed)),
            format!(
                "expected {needed} data bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte_pos = k / 6;
            let b = data[byte_pos];
            if !(63..=126).contains(&b) {
                return Err(parse_err(
                    format!("byte {}", offset + header_len + byte_pos),
                    format!("invalid graph6 byte {b}"),
                ));
            }
            if (b - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i as Vertex, j as Vertex)?;
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if let Some(&last) = data.last() {
        let used = pairs - (needed - 1) * 6;
        let pad_mask = (1u8 << (6 - used)) - 1;
        if (last.wrapping_sub(63)) & pad_mask != 0 {
            return Err(parse_err(
                format!("byte {}", offset + header_len + needed - 1),
                "nonzero padding bits",
            ));
        }
    }
    Ok(g)
}

/// Encodes as graph6. Labels are compacted to `0..n` in ascending order first.
pub fn encode_graph6(g: &Graph) -> String {
    let g = if g.is_compact() { g.clone() } else { g.compact() };
    let n = g.v();
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
    let mut bits = 0;
    for j in 1..n as Vertex {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses `u v` pairs, one per line; blank lines and `#` comments are skipped.
/// The vertex set is `0..=max label`.
pub fn decode_edge_list(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let loc = format!("line {}", lineno + 1);
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(loc, format!("expected two vertices, found {line:?}")));
        }
        let parse = |s: &str| {
            s.parse::<Vertex>()
                .map_err(|_| parse_err(loc.clone(), format!("invalid vertex {s:?}")))
        };
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        if u == v {
            return Err(parse_err(loc, format!("loop at vertex {u}")));
        }
        pairs.push((lineno + 1, u, v));
    }
    let n = pairs
        .iter()
        .map(|&(_, u, v)| u.max(v) as usize + 1)
        .max()
        .unwrap_or(0);
    let mut g = Graph::empty(n);
    for (lineno, u, v) in pairs {
        if g.has_edge(u, v) {
            return Err(parse_err(
                format!("line {lineno}"),
                format!("duplicate edge {u} {v}"),
            ));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

pub fn encode_edge_list(g: &Graph) -> String {
    g.edges().map(|e| format!("{} {}\n", e.0, e.1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_dqc_by_hand() {
        // D = 5 vertices; Q c = 010010 100100 over pairs (0,1),(0,2),(1,2),(0,3),...
        let g = decode_graph("DQc").unwrap();
        assert_eq!(g.v(), 5);
        let edges: Vec<_> = g.edges().map(|e| (e.0, e.1)).collect();
        assert_eq!(edges, vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(encode_graph6(&g), "DQc");
    }

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&Graph::complete(4)), "C~");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(decode_graph6(">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn edge_list_triangle() {
        let g = decode_graph("0 1\n1 2\n2 0").unwrap();
        assert_eq!(g, Graph::cycle(3));
        assert_eq!(decode_edge_list(&encode_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(decode_graph("0 0"), Err(Error::Parse { .. })));
        let err = decode_graph("0 1\n1 0\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = decode_graph("0 1\n1 x\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        assert!(decode_graph("0 1 2").is_err());
    }

    #[test]
    fn graph6_errors() {
        // header says 5 vertices but only one data byte
        let err = decode_graph6("DQ").unwrap_err().to_string();
        assert!(err.contains("byte"), "{err}");
        // padding bits set: K3 is "Bw", "Bx" sets a padding bit
        assert!(decode_graph6("Bw").is_ok());
        assert!(decode_graph6("Bx").is_err());
    }

    #[test]
    fn long_header_roundtrip() {
        let g = Graph::cycle(70);
        let s = encode_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }
}
