//! The planar code format: a 15-byte header `>>planar_code<<`, then per graph
//! one byte `n` followed by each vertex's clockwise neighbour list (1-based),
//! each list terminated by a zero byte.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::planegraph::PlaneGraph;

pub const HEADER: &[u8; 15] = b">>planar_code<<";

/// Decodes every graph in `bytes`.
pub fn decode_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>> {
    let body = bytes
        .strip_prefix(HEADER.as_slice())
        .ok_or_else(|| Error::Format("missing >>planar_code<< header".into()))?;
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < body.len() {
        let n = body[pos] as usize;
        pos += 1;
        if n == 0 {
            return Err(Error::Format(format!("graph {} has no vertices", out.len() + 1)));
        }
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let mut list = Vec::new();
            loop {
                let Some(&b) = body.get(pos) else {
                    return Err(Error::Format(format!("graph {} truncated at vertex {}", out.len() + 1, v + 1)));
                };
                pos += 1;
                if b == 0 {
                    break;
                }
                let w = b as usize;
                if w > n {
                    return Err(Error::Format(format!("neighbour {w} out of range 1..={n}")));
                }
                list.push(w - 1);
            }
            adj.push(list);
        }
        out.push(PlaneGraph::build_from_rotation(&adj)?);
    }
    Ok(out)
}

/// Encodes `graphs`, which must have at most 255 vertices each.
pub fn encode_planar_code(graphs: &[PlaneGraph]) -> Result<Vec<u8>> {
    let mut out = HEADER.to_vec();
    for g in graphs {
        let (g, _) = g.compact();
        let n = g.vertex_count();
        if n > 255 {
            return Err(Error::BoundExceeded { what: "planar code vertex count", value: n, bound: 255 });
        }
        out.push(n as u8);
        for list in g.to_adjacency() {
            out.extend(list.iter().map(|&w| (w + 1) as u8));
            out.push(0);
        }
    }
    Ok(out)
}

pub fn read_planar_code(mut r: impl Read) -> Result<Vec<PlaneGraph>> {
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes).map_err(|e| Error::Format(e.to_string()))?;
    decode_planar_code(&bytes)
}

pub fn write_planar_code(mut w: impl Write, graphs: &[PlaneGraph]) -> Result<()> {
    let bytes = encode_planar_code(graphs)?;
    w.write_all(&bytes).map_err(|e| Error::Format(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planegraph::named::*;
    use crate::CanonicalCode;

    fn tetra_bytes() -> Vec<u8> {
        let mut b = HEADER.to_vec();
        b.extend([4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0]);
        b
    }

    #[test]
    fn decodes_the_tetrahedron() {
        let gs = decode_planar_code(&tetra_bytes()).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(CanonicalCode::of(&gs[0]), CanonicalCode::of(&k4()));
        assert_eq!(encode_planar_code(&gs).unwrap(), tetra_bytes());
    }

    #[test]
    fn empty_body_and_bad_header() {
        assert!(decode_planar_code(HEADER).unwrap().is_empty());
        assert_eq!(encode_planar_code(&[]).unwrap(), HEADER.to_vec());
        assert!(matches!(decode_planar_code(b">>planar_kode<<"), Err(Error::Format(_))));
    }

    #[test]
    fn truncated_and_inconsistent_records() {
        let b = tetra_bytes();
        assert!(matches!(decode_planar_code(&b[..b.len() - 3]), Err(Error::Format(_))));
        let mut bad = HEADER.to_vec();
        bad.extend([2, 2, 0, 0]);
        assert!(decode_planar_code(&bad).is_err());
    }

    #[test]
    fn multigraphs_round_trip() {
        let gs = vec![theta(), circular_ladder(2), cube()];
        let bytes = encode_planar_code(&gs).unwrap();
        let back = decode_planar_code(&bytes).unwrap();
        assert_eq!(encode_planar_code(&back).unwrap(), bytes);
        for (a, b) in gs.iter().zip(&back) {
            assert_eq!(CanonicalCode::of(a), CanonicalCode::of(b));
        }
    }
}
