//! Histogram CSV and the binary distance table.
//!
//! The distance table is a 16-byte header followed by one byte per vertex
//! in rank order:
//!
//! | bytes | content |
//! |-------|---------|
//! | 0..8  | `CAYDIST1` |
//! | 8     | line count |
//! | 9     | generator label, `I` or `H` |
//! | 10..12 | zero |
//! | 12..16 | vertex count, little-endian `u32` |

use revgraph_core::cayley::vertex_count;
use revgraph_core::{GeneratorKind, Histogram};

use crate::{Error, Result};

pub const MAGIC: &[u8; 8] = b"CAYDIST1";
pub const HEADER_LEN: usize = 16;

/// `<label>,count` header, then one row per non-zero bucket, ascending.
pub fn histogram_csv(label: &str, h: &Histogram) -> String {
    let mut out = format!("{label},count\n");
    for (value, count) in h.iter() {
        out.push_str(&format!("{value},{count}\n"));
    }
    out
}

pub fn parse_histogram_csv(text: &str) -> Result<Histogram> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Format("empty CSV".into()))?;
    if !header.ends_with(",count") {
        return Err(Error::parse(1, format!("unexpected header `{header}`")));
    }
    let mut h = Histogram::new();
    for (idx, row) in lines.enumerate() {
        let bad = || Error::parse(idx + 2, format!("bad row `{row}`"));
        let (v, c) = row.split_once(',').ok_or_else(bad)?;
        let v: usize = v.parse().map_err(|_| bad())?;
        let c: u64 = c.parse().map_err(|_| bad())?;
        for _ in 0..c {
            h.add(v);
        }
    }
    Ok(h)
}

pub fn encode_distances(kind: GeneratorKind, lines: u32, distances: &[u8]) -> Result<Vec<u8>> {
    let expected = vertex_count(lines)?;
    if distances.len() != expected {
        return Err(Error::Format(format!("{} distances for {expected} vertices", distances.len())));
    }
    let mut out = Vec::with_capacity(HEADER_LEN + distances.len());
    out.extend_from_slice(MAGIC);
    out.push(lines as u8);
    out.push(kind.label() as u8);
    out.extend_from_slice(&[0, 0]);
    out.extend_from_slice(&(distances.len() as u32).to_le_bytes());
    out.extend_from_slice(distances);
    Ok(out)
}

pub fn decode_distances(bytes: &[u8]) -> Result<(GeneratorKind, u32, Vec<u8>)> {
    if bytes.len() < HEADER_LEN || &bytes[..8] != MAGIC {
        return Err(Error::Format("not a distance table".into()));
    }
    let lines = bytes[8] as u32;
    let kind = match bytes[9] {
        b'I' => GeneratorKind::Generalized,
        b'H' => GeneratorKind::MultipleControl,
        other => return Err(Error::Format(format!("unknown generator label {other:#04x}"))),
    };
    if bytes[10..12] != [0, 0] {
        return Err(Error::Format("reserved header bytes are not zero".into()));
    }
    let count = u32::from_le_bytes(bytes[12..16].try_into().expect("four bytes")) as usize;
    let body = &bytes[HEADER_LEN..];
    if count != vertex_count(lines)? || body.len() != count {
        return Err(Error::Format(format!("vertex count {count} does not match {} bytes", body.len())));
    }
    Ok((kind, lines, body.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let h = Histogram::from_counts(vec![1, 4, 0, 7]);
        let text = histogram_csv("distance", &h);
        assert_eq!(text, "distance,count\n0,1\n1,4\n3,7\n");
        assert_eq!(parse_histogram_csv(&text).unwrap(), h);
        assert!(parse_histogram_csv("a,b\n").is_err());
        assert!(parse_histogram_csv("distance,count\n1;2\n").is_err());
    }

    #[test]
    fn header_layout() {
        let bytes = encode_distances(GeneratorKind::MultipleControl, 1, &[0, 1]).unwrap();
        assert_eq!(&bytes[..16], b"CAYDIST1\x01H\x00\x00\x02\x00\x00\x00");
        assert_eq!(&bytes[16..], &[0, 1]);
        assert_eq!(decode_distances(&bytes).unwrap(), (GeneratorKind::MultipleControl, 1, vec![0, 1]));
    }

    #[test]
    fn rejects_damaged_tables() {
        let good = encode_distances(GeneratorKind::Generalized, 1, &[0, 1]).unwrap();
        assert!(encode_distances(GeneratorKind::Generalized, 1, &[0]).is_err());
        let mut short = good.clone();
        short.pop();
        assert!(decode_distances(&short).is_err());
        let mut label = good.clone();
        label[9] = b'X';
        assert!(decode_distances(&label).is_err());
        let mut magic = good;
        magic[0] = b'X';
        assert!(decode_distances(&magic).is_err());
    }
}
