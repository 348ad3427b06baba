//! graph6 encoding for graphs of order at most 62.
//!
//! The header is the single byte `n + 63`. The body packs the upper triangle
//! column by column (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups,
//! most significant bit first, each group offset by 63 and the last one
//! zero-padded.

use selfloop_core::graph::SimpleGraph;

use crate::error::{Result, ShellError};

/// Largest order with a one-byte header.
pub const MAX_ORDER: usize = 62;

fn err(msg: impl Into<String>) -> ShellError {
    ShellError::Graph6(msg.into())
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&header, body) = bytes.split_first().ok_or_else(|| err("empty string"))?;
    if let Some(&b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(err(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    if header == 126 {
        return Err(err(format!(
            "multi-byte headers are not supported (n > {MAX_ORDER})"
        )));
    }
    let n = usize::from(header - 63);
    let expected = body_len(n);
    if body.len() != expected {
        return Err(err(format!(
            "order {n} needs {expected} body bytes, found {}",
            body.len()
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(err("non-zero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(SimpleGraph::new(n, edges)?)
}

pub fn print_graph6(g: &SimpleGraph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(err(format!("order {n} exceeds {MAX_ORDER}")));
    }
    let mut body = vec![0u8; body_len(n)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(body.len() + 1);
    out.push(char::from(n as u8 + 63));
    out.extend(body.into_iter().map(|b| char::from(b + 63)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.edges()), (2, &[(0, 1)][..]));
        // Order 5 has ten triangle bits, so two body bytes.
        let e5 = parse_graph6("D??").unwrap();
        assert_eq!((e5.order(), e5.size()), (5, 0));
        assert!(matches!(parse_graph6("D?"), Err(ShellError::Graph6(_))));
    }

    #[test]
    fn known_strings() {
        // K₃ has bits 111 → 111000 = 56 → 'w'.
        assert_eq!(print_graph6(&SimpleGraph::complete(3)).unwrap(), "Bw");
        assert_eq!(print_graph6(&SimpleGraph::empty(1)).unwrap(), "@");
        assert_eq!(print_graph6(&SimpleGraph::empty(0)).unwrap(), "?");
        assert_eq!(print_graph6(&SimpleGraph::complete(4)).unwrap(), "C~");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A").is_err());
        assert!(parse_graph6("A_?").is_err());
        assert!(parse_graph6("A ").is_err());
        assert!(parse_graph6("A`").is_err(), "padding bit set");
        assert!(parse_graph6("~?@?").is_err());
        assert!(print_graph6(&SimpleGraph::empty(63)).is_err());
    }
}
