//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed into 6-bit chunks offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_size(n, &mut out);

    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let body = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "byte {} at position {pos} outside 63..=126",
            body[pos]
        )));
    }
    let (n, data) = decode_size(body)?;
    if n == 0 {
        return Err(Error::Graph6("graph has zero vertices".into()));
    }

    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            data.len()
        )));
    }

    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edge_list(n, &pairs)
}

fn decode_size(body: &[u8]) -> Result<(usize, &[u8])> {
    let take = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
    match body {
        [] => Err(Error::Graph6("empty record".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 8-byte size header".into()));
            }
            let n = take(&rest[..6]);
            if n <= 258_047 {
                return Err(Error::Graph6(format!("non-canonical size header for n = {n}")));
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 4-byte size header".into()));
            }
            let n = take(&rest[..3]);
            if n <= 62 {
                return Err(Error::Graph6(format!("non-canonical size header for n = {n}")));
            }
            Ok((n, &rest[3..]))
        }
        [first, rest @ ..] => Ok((usize::from(first - 63), rest)),
    }
}
