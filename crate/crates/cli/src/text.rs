//! Line-oriented text forms: 1-based rotations, edge labels, and witness
//! documents made of `key: value` lines separated by blank lines.

use std::fmt;

use anyhow::{anyhow, bail, Context, Result};
use chordfactor::{Coloring, EdgeId, PlaneGraph, TwoFactor, VertexId};

/// Rebuilds `g` from its compacted rotation, so that vertex and edge ids are
/// exactly those a reader of the printed rotation will reconstruct.
pub fn normalize(g: &PlaneGraph) -> Result<PlaneGraph> {
    Ok(PlaneGraph::build_from_rotation(&g.to_adjacency())?)
}

/// `2 3 4 | 1 4 3 | ...`: the clockwise neighbors of each vertex, 1-based.
pub fn format_rotation(g: &PlaneGraph) -> String {
    g.to_adjacency()
        .iter()
        .map(|l| l.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}

pub fn parse_rotation(s: &str) -> Result<PlaneGraph> {
    let adj = s
        .split('|')
        .map(|part| {
            part.split_whitespace()
                .map(|t| match t.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(anyhow!("bad vertex {t:?} in rotation")),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PlaneGraph::build_from_rotation(&adj)?)
}

/// Rank of `e` among the parallel edges between its ends, counted in the
/// rotation of the smaller end, from 1.
fn parallel_rank(g: &PlaneGraph, e: EdgeId) -> (VertexId, VertexId, usize) {
    let (a, b) = g.endpoints(e);
    let (u, v) = (a.min(b), a.max(b));
    let rank = g.darts_at(u).filter(|&d| g.head(d) == v).position(|d| d >> 1 == e).unwrap_or(0);
    (u, v, rank + 1)
}

/// `u-v`, or `u-v/k` when there are parallel edges.
pub fn edge_label(g: &PlaneGraph, e: EdgeId) -> String {
    let (u, v, k) = parallel_rank(g, e);
    if g.multiplicity(u, v) > 1 {
        format!("{}-{}/{k}", u + 1, v + 1)
    } else {
        format!("{}-{}", u + 1, v + 1)
    }
}

/// Sorted, space-separated edge labels.
pub fn edge_list(g: &PlaneGraph, edges: &[EdgeId]) -> String {
    let mut keyed: Vec<_> = edges.iter().map(|&e| (parallel_rank(g, e), e)).collect();
    keyed.sort_unstable();
    keyed.iter().map(|&(_, e)| edge_label(g, e)).collect::<Vec<_>>().join(" ")
}

/// Parses `u,v`, `u-v`, `u,v/k` or `u-v/k` and returns the dart of that
/// edge leaving `u`.
pub fn parse_dart(g: &PlaneGraph, s: &str) -> Result<usize> {
    let (pair, rank) = match s.split_once('/') {
        Some((p, k)) => (p, Some(k.trim().parse::<usize>().with_context(|| format!("bad edge rank in {s:?}"))?)),
        None => (s, None),
    };
    let (a, b) = pair
        .split_once(',')
        .or_else(|| pair.split_once('-'))
        .ok_or_else(|| anyhow!("edge {s:?} is not of the form u,v"))?;
    let vertex = |t: &str| -> Result<VertexId> {
        let n: usize = t.trim().parse().with_context(|| format!("bad vertex {t:?} in edge {s:?}"))?;
        if n == 0 || n > g.vertex_count() {
            bail!("vertex {n} out of range 1..={}", g.vertex_count());
        }
        Ok(n - 1)
    };
    let (u, v) = (vertex(a)?, vertex(b)?);
    let (lo, hi) = (u.min(v), u.max(v));
    let mut found = g.darts_at(lo).filter(|&d| g.head(d) == hi);
    let d = match rank {
        Some(0) => bail!("edge ranks start at 1"),
        Some(k) => found.nth(k - 1),
        None => {
            if g.multiplicity(lo, hi) > 1 {
                bail!("{s:?} names one of several parallel edges; add /k");
            }
            found.next()
        }
    }
    .ok_or_else(|| anyhow!("no edge {s:?}"))?;
    Ok(if g.origin(d) == u { d } else { d ^ 1 })
}

pub fn parse_edge(g: &PlaneGraph, s: &str) -> Result<EdgeId> {
    Ok(parse_dart(g, s)? >> 1)
}

pub fn parse_edge_list(g: &PlaneGraph, s: &str) -> Result<Vec<EdgeId>> {
    s.split_whitespace().map(|t| parse_edge(g, t)).collect()
}

/// Each cycle as its 1-based vertex sequence, cycles separated by ` | `.
pub fn cycles_line(f: &TwoFactor) -> String {
    f.cycles()
        .iter()
        .map(|c| c.vertices.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}

pub fn coloring_line(g: &PlaneGraph, f: &Coloring) -> String {
    g.vertices().map(|v| f.get(v).as_char()).collect()
}

pub fn parse_coloring(g: &PlaneGraph, s: &str) -> Result<Coloring> {
    let colors: Vec<_> = s
        .trim()
        .chars()
        .map(|c| chordfactor::Color::from_char(c).ok_or_else(|| anyhow!("bad color {c:?}")))
        .collect::<Result<_>>()?;
    if colors.len() != g.vertex_count() {
        bail!("coloring has {} colors for {} vertices", colors.len(), g.vertex_count());
    }
    Ok(Coloring::from_vec(colors))
}

pub fn vertex_list(vs: &[VertexId]) -> String {
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_vertex_list(g: &PlaneGraph, s: &str) -> Result<Vec<VertexId>> {
    s.split_whitespace()
        .map(|t| match t.parse::<usize>() {
            Ok(n) if (1..=g.vertex_count()).contains(&n) => Ok(n - 1),
            _ => Err(anyhow!("bad vertex {t:?}")),
        })
        .collect()
}

/// One witness document: ordered `key: value` lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub fields: Vec<(String, String)>,
}

impl Document {
    pub fn new(operation: &str) -> Self {
        let mut d = Document::default();
        d.push("operation", operation);
        d
    }

    pub fn push(&mut self, key: &str, value: impl Into<String>) {
        self.fields.push((key.to_string(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| anyhow!("document has no {key:?} line"))
    }

    pub fn graph(&self) -> Result<PlaneGraph> {
        parse_rotation(self.require("graph")?)
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.fields {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

/// Splits a text stream into documents. Lines starting with `#` are
/// comments; a line without a key is read as a bare `graph` line.
pub fn parse_documents(text: &str) -> Result<Vec<Document>> {
    let mut docs = Vec::new();
    let mut cur = Document::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            if !cur.fields.is_empty() {
                docs.push(std::mem::take(&mut cur));
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        match raw.trim_end().split_once(':') {
            Some((k, v)) => cur.push(k.trim(), v.strip_prefix(' ').unwrap_or(v)),
            None if line.chars().all(|c| c.is_ascii_digit() || c == '|' || c.is_whitespace()) => {
                if !cur.fields.is_empty() {
                    docs.push(std::mem::take(&mut cur));
                }
                cur.push("graph", line);
                docs.push(std::mem::take(&mut cur));
            }
            None => bail!("line {}: expected `key: value` or a rotation", i + 1),
        }
    }
    if !cur.fields.is_empty() {
        docs.push(cur);
    }
    Ok(docs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use chordfactor::named;

    #[test]
    fn rotation_round_trip_keeps_labels() {
        let g = normalize(&named::theta()).unwrap();
        let h = parse_rotation(&format_rotation(&g)).unwrap();
        for e in g.edges() {
            assert_eq!(edge_label(&g, e), edge_label(&h, e));
            assert_eq!(parse_edge(&h, &edge_label(&g, e)).unwrap(), e);
        }
    }

    #[test]
    fn parallel_edges_need_a_rank() {
        let g = normalize(&named::theta()).unwrap();
        assert!(parse_edge(&g, "1,2").is_err());
        assert!(parse_edge(&g, "1,2/3").is_ok());
        assert!(parse_edge(&g, "1,2/4").is_err());
    }

    #[test]
    fn dart_follows_the_given_order() {
        let g = normalize(&named::k4()).unwrap();
        let d = parse_dart(&g, "3,1").unwrap();
        assert_eq!((g.origin(d), g.head(d)), (2, 0));
    }

    #[test]
    fn documents_split_on_blank_lines_and_bare_rotations() {
        let docs = parse_documents("operation: dual\ngraph: 2 | 1\n\n2 3 4 | 1 4 3\n# note\nverdict: x\n").unwrap();
        assert_eq!(docs.len(), 3);
        assert_eq!(docs[1].get("graph"), Some("2 3 4 | 1 4 3"));
        assert_eq!(docs[2].get("verdict"), Some("x"));
    }
}
