use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

/// Encodes `g` in graph6: one size byte, then the upper triangle column by
/// column (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits per byte,
/// each byte offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let Some((&first, body)) = bytes.split_first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if first == b'~' {
        return Err(Error::Graph6(format!(
            "multi-byte size field; orders above {MAX_ORDER} are unsupported"
        )));
    }
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("bad size byte {first:#x}")));
    }
    let n = (first - 63) as usize;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, got {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6(format!("bad data byte {byte:#x}")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        let pad = expected * 6 - nbits;
        if !(63..=126).contains(&last) || (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}
