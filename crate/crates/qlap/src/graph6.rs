//! graph6 codec and the plain edge-list text format.
//!
//! graph6 is the printable encoding used by graph corpora: a size field, then
//! the upper triangle of the adjacency matrix packed six bits per byte, each
//! byte offset by 63 into the printable range. This codec covers the published
//! format for every order this crate can build — including the three-byte size
//! form needed beyond order 62 — and is bit-exact: encoding is canonical
//! (zero padding bits) and decoding rejects malformed input with the byte
//! position of the failure.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;
const LONG_SIZE_MARK: u8 = 126;
/// Optional header some tools prepend to graph6 data.
const HEADER: &str = ">>graph6<<";

/// Encode a graph in canonical graph6 form.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        // 63 <= n <= 258047: '~' then three sextets, most significant first.
        out.push(LONG_SIZE_MARK);
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    }

    let mut group = 0u8;
    let mut bits_in_group = 0;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            bits_in_group += 1;
            if bits_in_group == 6 {
                out.push(OFFSET + group);
                group = 0;
                bits_in_group = 0;
            }
        }
    }
    if bits_in_group > 0 {
        group <<= 6 - bits_in_group;
        out.push(OFFSET + group);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decode a graph6 string (with or without the `>>graph6<<` header).
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let s = s.trim_end_matches(['\r', '\n']);
    let bytes = s.as_bytes();
    let fail = |position: usize, message: &str| Error::Graph6Parse {
        position,
        message: message.into(),
    };

    if bytes.is_empty() {
        return Err(fail(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(fail(i, "byte outside the graph6 alphabet (63..=126)"));
        }
    }

    // Size field.
    let (n, mut pos) = if bytes[0] != LONG_SIZE_MARK {
        ((bytes[0] - OFFSET) as usize, 1)
    } else if bytes.get(1) == Some(&LONG_SIZE_MARK) {
        // Eight-byte form encodes orders >= 258048, far past this crate's cap.
        if bytes.len() < 8 {
            return Err(fail(bytes.len(), "truncated eight-byte size field"));
        }
        let mut n: u64 = 0;
        for &b in &bytes[2..8] {
            n = (n << 6) | u64::from(b - OFFSET);
        }
        return Err(Error::TooLarge {
            requested: usize::try_from(n).unwrap_or(usize::MAX),
            cap: MAX_ORDER,
        });
    } else {
        if bytes.len() < 4 {
            return Err(fail(bytes.len(), "truncated three-byte size field"));
        }
        let n = ((bytes[1] - OFFSET) as usize) << 12
            | ((bytes[2] - OFFSET) as usize) << 6
            | (bytes[3] - OFFSET) as usize;
        (n, 4)
    };

    if n == 0 {
        return Err(fail(0, "order 0 is not supported"));
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge {
            requested: n,
            cap: MAX_ORDER,
        });
    }

    let pair_count = n * (n - 1) / 2;
    let body_len = pair_count.div_ceil(6);
    if bytes.len() - pos < body_len {
        return Err(fail(bytes.len(), "truncated adjacency bits"));
    }
    if bytes.len() - pos > body_len {
        return Err(fail(pos + body_len, "trailing data after adjacency bits"));
    }

    let mut g = Graph::empty(n)?;
    let mut bit_index = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + bit_index / 6] - OFFSET;
            let bit = byte >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                g.add_edge(u, v);
            }
            bit_index += 1;
        }
    }
    // Canonical form requires zeroed padding in the final byte.
    if pair_count > 0 {
        let padding = body_len * 6 - pair_count;
        let last = bytes[pos + body_len - 1] - OFFSET;
        if padding > 0 && last & ((1 << padding) - 1) != 0 {
            return Err(fail(pos + body_len - 1, "nonzero padding bits"));
        }
    }
    pos += body_len;
    let _ = pos;
    Ok(g)
}

/// Write the edge-list text format: a `n m` header line, then one `u v` line
/// per edge (0-based, lexicographic).
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parse the edge-list text format. Errors carry the 1-based line number.
pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let fail = |line: usize, message: String| Error::EdgeListParse { line, message };
    let mut lines = text.lines().enumerate();

    let (_, header) = lines
        .next()
        .ok_or_else(|| fail(1, "missing `n m` header line".into()))?;
    let mut header_fields = header.split_whitespace();
    let n: usize = header_fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| fail(1, format!("header must be `n m`, got {header:?}")))?;
    let m: usize = header_fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| fail(1, format!("header must be `n m`, got {header:?}")))?;
    if header_fields.next().is_some() {
        return Err(fail(1, format!("header must be `n m`, got {header:?}")));
    }

    let mut g = Graph::empty(n).map_err(|e| fail(1, e.to_string()))?;
    let mut read = 0usize;
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if read == m {
            return Err(fail(line_no, format!("more than {m} edge lines")));
        }
        let mut fields = line.split_whitespace();
        let parse = |t: Option<&str>| -> Result<usize> {
            t.and_then(|t| t.parse().ok())
                .ok_or_else(|| fail(line_no, format!("edge line must be `u v`, got {line:?}")))
        };
        let u = parse(fields.next())?;
        let v = parse(fields.next())?;
        if fields.next().is_some() {
            return Err(fail(line_no, format!("edge line must be `u v`, got {line:?}")));
        }
        g.check_endpoints(u, v)
            .map_err(|e| fail(line_no, e.to_string()))?;
        g.add_edge(u, v);
        read += 1;
    }
    if read < m {
        return Err(fail(
            text.lines().count().max(1),
            format!("header promised {m} edges but only {read} were given"),
        ));
    }
    Ok(g)
}
