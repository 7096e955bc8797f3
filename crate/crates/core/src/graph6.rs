//! graph6 codec.
//!
//! Byte 0 carries `n + 63` (or `~` followed by three bytes of an 18-bit `n` for
//! `n >= 63`). The remaining bytes each hold 6 bits of the column-major upper
//! triangle `x(0,1), x(0,2), x(1,2), x(0,3), ...`, most significant bit first,
//! zero padded and offset by 63.

use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

fn malformed(line: &str, what: &str) -> Error {
    Error::MalformedGraph6(format!("{what} in {line:?}"))
}

/// Parses one graph6 line. Trailing `\r`/`\n` are ignored; anything else after
/// the last data byte is rejected.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let text = line.trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::TruncatedGraph6("empty line".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(text, &format!("byte {} at offset {pos}", bytes[pos])));
    }

    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Error::TruncatedGraph6(format!("short size field in {text:?}")));
        }
        if bytes[1] == 126 {
            return Err(Error::UnsupportedSize(usize::MAX));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::UnsupportedSize(n));
    }

    let pairs = pair_count(n);
    let need = pairs.div_ceil(6);
    if body.len() < need {
        return Err(Error::TruncatedGraph6(format!(
            "{text:?} declares n = {n}, needs {need} data bytes, has {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(malformed(text, "trailing bytes"));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    let pad = need * 6 - pairs;
    if pad > 0 && (body[need - 1] - 63) & ((1u8 << pad) - 1) != 0 {
        return Err(malformed(text, "nonzero padding bits"));
    }
    Ok(g)
}

/// Canonical graph6 encoding of `g`.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + pair_count(n).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a graph6 document: one graph per line, optional `>>graph6<<` header
/// prefix on the first line, blank lines ignored.
pub fn parse_graph6_lines(text: &str, origin: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let mut line = raw.trim_end_matches('\r');
        if idx == 0 {
            line = line.strip_prefix(HEADER).unwrap_or(line);
        }
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| Error::Corpus {
            path: origin.to_string(),
            line: idx + 1,
            source: Box::new(e),
        })?;
        out.push(g);
    }
    Ok(out)
}
