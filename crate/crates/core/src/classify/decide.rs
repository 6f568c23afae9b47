//! Recursive decision procedures. Every reduction keeps the ids of surviving
//! vertices and edges, so a witness found on a smaller graph lifts to the
//! larger one by adding edges.

use super::{recognize_hn, Decomposition, Step};
use crate::error::{Error, Result};
use crate::factors::{separating_pm_preconditions, factor_avoiding, factor_containing, separating_pm_through_edge};
use crate::matching::{perfect_matching_through, perfect_matching_with};
use crate::planegraph::{edge_of, Connectivity, CutKind, EdgeId, PlaneGraph, VertexId};

/// Either a 2-factor with two or more cycles containing the edge, or the
/// decomposition showing that every 2-factor through it is Hamiltonian.
pub(super) enum Forced {
    No(Vec<EdgeId>),
    Yes(Decomposition),
}

/// Either a separating perfect matching containing the edge, or the
/// decomposition showing there is none.
pub(super) enum Sep {
    Yes(Vec<EdgeId>),
    No(Decomposition),
}

const RED_ZONE: usize = 256 * 1024;
const STACK: usize = 16 * 1024 * 1024;

pub(super) fn forced(g: &PlaneGraph, e: EdgeId) -> Result<Forced> {
    stacker::maybe_grow(RED_ZONE, STACK, || forced_step(g, e))
}

pub(super) fn sep(g: &PlaneGraph, e: EdgeId) -> Result<Sep> {
    stacker::maybe_grow(RED_ZONE, STACK, || sep_step(g, e))
}

fn union(parts: &[&[EdgeId]]) -> Vec<EdgeId> {
    let mut out: Vec<EdgeId> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn complement(g: &PlaneGraph, edges: &[EdgeId]) -> Vec<EdgeId> {
    g.edges().filter(|f| !edges.contains(f)).collect()
}

fn matching_through(g: &PlaneGraph, e: EdgeId) -> Result<Vec<EdgeId>> {
    perfect_matching_through(g, e).ok_or_else(|| Error::Internal(format!("no perfect matching through edge {e}")))
}

fn node(step: Step, g: &PlaneGraph, parts: Vec<Decomposition>) -> Decomposition {
    Decomposition { step, vertices: g.vertex_count(), parts }
}

/// The edges at `v` other than `e`.
fn others_at(g: &PlaneGraph, v: VertexId, e: EdgeId) -> Vec<EdgeId> {
    g.darts_at(v).map(edge_of).filter(|&f| f != e).collect()
}

/// `g` with the connected set `set` shrunk to a vertex of degree two and
/// then suppressed, keeping edge `keep`.
fn shrink(g: &PlaneGraph, set: &[VertexId], keep: EdgeId) -> Result<PlaneGraph> {
    let mut h = g.clone();
    h.contract_set_mut(set, set[0])?;
    h.suppress_mut(set[0], keep)?;
    h.check_plane()?;
    Ok(h)
}

/// `g` with the connected set `set` shrunk to a single (cubic) vertex.
fn collapse(g: &PlaneGraph, set: &[VertexId]) -> Result<PlaneGraph> {
    let mut h = g.clone();
    h.contract_set_mut(set, set[0])?;
    h.check_plane()?;
    Ok(h)
}

/// The 2-edge-cut avoiding `e` whose side away from `e` is largest; ties go
/// to the lexicographically least cut.
fn widest_cut_avoiding(g: &PlaneGraph, e: EdgeId) -> Option<(EdgeId, EdgeId)> {
    let (u, _) = g.endpoints(e);
    let mut best: Option<((EdgeId, EdgeId), usize)> = None;
    for (f, h) in g.two_edge_cuts() {
        if f == e || h == e {
            continue;
        }
        let (a, b) = g.sides_of_cut(&[f, h]);
        let far = if a.contains(&u) { b.len() } else { a.len() };
        if best.is_none_or(|(_, size)| far > size) {
            best = Some(((f, h), far));
        }
    }
    best.map(|(c, _)| c)
}

fn forced_step(g: &PlaneGraph, e: EdgeId) -> Result<Forced> {
    if g.vertex_count() == 2 {
        return hn_leaf(g, e);
    }
    let (u, _) = g.endpoints(e);
    let status = g.edge_cut_status(e);
    if status.kind == CutKind::TwoEdgeCut {
        let f = if status.edges[0] == e { status.edges[1] } else { status.edges[0] };
        // g1 holds u with e joining u to f's end there; g2 holds v with f
        let (g1, g2) = g.split_two_edge_cut(e, f, u)?;
        let d1 = match forced(&g1, e)? {
            Forced::No(f1) => return Ok(Forced::No(union(&[&f1, &factor_containing(&g2, f)?]))),
            Forced::Yes(d) => d,
        };
        let d2 = match forced(&g2, f)? {
            Forced::No(f2) => return Ok(Forced::No(union(&[&factor_containing(&g1, e)?, &f2]))),
            Forced::Yes(d) => d,
        };
        return Ok(Forced::Yes(node(Step::CutThroughEdge { other: f }, g, vec![d1, d2])));
    }
    if let Some((f, h)) = widest_cut_avoiding(g, e) {
        return forced_across_cut(g, e, f, h);
    }
    forced_three_connected(g, e)
}

fn hn_leaf(g: &PlaneGraph, e: EdgeId) -> Result<Forced> {
    let d = recognize_hn(g, e)
        .ok_or_else(|| Error::Internal("3-edge-connected graph with a forced edge is not H_n".into()))?;
    Ok(Forced::Yes(node(Step::Hn(d), g, Vec::new())))
}

/// `{f, h}` is a 2-edge-cut avoiding `e`. A 2-factor through `e` either
/// crosses the cut twice or not at all; in the latter case it is disconnected.
fn forced_across_cut(g: &PlaneGraph, e: EdgeId, f: EdgeId, h: EdgeId) -> Result<Forced> {
    let (u, _) = g.endpoints(e);
    let (g1, g2) = g.split_two_edge_cut(f, h, u)?;
    let d1 = match forced(&g1, e)? {
        Forced::No(f1) => {
            let f2 = if f1.contains(&f) { factor_containing(&g2, h)? } else { factor_avoiding(&g2, h)? };
            return Ok(Forced::No(union(&[&f1, &f2])));
        }
        Forced::Yes(d) => d,
    };
    if let Some(m1) = perfect_matching_with(&g1, &[f], &[e]) {
        let f1 = complement(&g1, &m1);
        let f2 = factor_avoiding(&g2, h)?;
        return Ok(Forced::No(union(&[&f1, &f2])));
    }
    let d2 = match forced(&g2, h)? {
        Forced::No(f2) => return Ok(Forced::No(union(&[&factor_containing(&g1, e)?, &f2]))),
        Forced::Yes(d) => d,
    };
    Ok(Forced::Yes(node(Step::CutAvoidingEdge { cut: (f, h) }, g, vec![d1, d2])))
}

/// Separating matchings through the other edges at `u` or `v` give
/// disconnected 2-factors through `e`; failing that `u` lies on a triangle,
/// which is contracted.
fn forced_three_connected(g: &PlaneGraph, e: EdgeId) -> Result<Forced> {
    let (u, v) = g.endpoints(e);
    for x in [u, v] {
        for a in others_at(g, x, e) {
            if separating_pm_preconditions(g, a).is_ok() {
                let m = separating_pm_through_edge(g, a)?;
                return Ok(Forced::No(complement(g, m.edges())));
            }
        }
    }
    for x in [u, v] {
        let out = others_at(g, x, e);
        let [a, b] = out[..] else { continue };
        let x1 = g.head(dart_from(g, a, x));
        let x2 = g.head(dart_from(g, b, x));
        let Some(d12) = g.dart_between(x1, x2) else { continue };
        let c = edge_of(d12);
        let third = |y: VertexId| others_at(g, y, c).into_iter().find(|&f| f != a && f != b);
        let (Some(t1), Some(_)) = (third(x1), third(x2)) else { continue };
        let h = collapse(g, &[x, x1, x2])?;
        return match forced(&h, e)? {
            Forced::No(f) => {
                // the factor enters the triangle at x and leaves through t1 or t2
                let path = if f.contains(&t1) { [b, c] } else { [a, c] };
                Ok(Forced::No(union(&[&f, &path])))
            }
            Forced::Yes(_) => hn_leaf(g, e),
        };
    }
    Err(Error::Internal(format!("no triangle at the ends of forced edge {e}")))
}

fn dart_from(g: &PlaneGraph, e: EdgeId, x: VertexId) -> usize {
    if g.origin(2 * e) == x {
        2 * e
    } else {
        2 * e + 1
    }
}

fn sep_step(g: &PlaneGraph, e: EdgeId) -> Result<Sep> {
    if g.vertex_count() == 2 {
        return Ok(Sep::No(node(Step::Base, g, Vec::new())));
    }
    let (u, v) = g.endpoints(e);
    if g.multiplicity(u, v) > 1 {
        return sep_parallel(g, e);
    }
    if g.edge_cut_status(e).kind == CutKind::TwoEdgeCut {
        return Ok(Sep::Yes(matching_through(g, e)?));
    }
    let rest = Connectivity::new(g).without_vertices(&[u, v]);
    if !rest.is_connected() {
        return sep_disconnected(g, e);
    }
    if let Some(&pq) = rest.bridges().first() {
        return sep_bridge(g, e, pq);
    }
    Ok(Sep::Yes(separating_pm_through_edge(g, e)?.edges().to_vec()))
}

/// `e = uv` with a parallel edge `e'`: the complement of a matching through
/// `e` runs `u_1 u v v_1`, so it corresponds to a 2-factor of the graph with
/// `u, v` replaced by an edge `u_1 v_1`.
fn sep_parallel(g: &PlaneGraph, e: EdgeId) -> Result<Sep> {
    let (u, v) = g.endpoints(e);
    let twin = g
        .darts_at(u)
        .map(edge_of)
        .find(|&f| f != e && g.head(dart_from(g, f, u)) == v)
        .expect("parallel edge");
    let a = others_at(g, u, e).into_iter().find(|&f| f != twin).expect("cubic");
    let b = others_at(g, v, e).into_iter().find(|&f| f != twin).expect("cubic");
    let h = shrink(g, &[u, v], a)?;
    match forced(&h, a)? {
        Forced::No(f) => Ok(Sep::Yes(complement(g, &union(&[&f, &[twin, b]])))),
        Forced::Yes(d) => Ok(Sep::No(node(Step::ParallelEdge { parallel: twin, joined: a }, g, vec![d]))),
    }
}

/// `G - {u, v}` has two components, each meeting one edge from `u` and one
/// from `v`. Each side closed up by an edge `u_i v_i` must force a
/// Hamiltonian cycle for the answer to be negative.
fn sep_disconnected(g: &PlaneGraph, e: EdgeId) -> Result<Sep> {
    let (u, v) = g.endpoints(e);
    let (comp, count) = Connectivity::new(g).without_vertices(&[u, v]).components();
    if count != 2 {
        return Err(Error::Internal(format!("removing the ends of edge {e} left {count} components")));
    }
    let into = |x: VertexId, side: usize| {
        others_at(g, x, e).into_iter().find(|&f| comp[g.head(dart_from(g, f, x))] == side)
    };
    let (Some(a1), Some(a2), Some(b1), Some(b2)) = (into(u, 0), into(u, 1), into(v, 0), into(v, 1)) else {
        return Err(Error::Internal("a component of G - {u, v} meets only one end".into()));
    };
    let side = |keep: usize| -> Vec<VertexId> {
        let mut s = vec![u, v];
        s.extend(g.vertices().filter(|&w| comp[w] != usize::MAX && comp[w] != keep));
        s
    };
    let g1 = shrink(g, &side(0), a1)?;
    let g2 = shrink(g, &side(1), a2)?;
    let d1 = match forced(&g1, a1)? {
        Forced::No(f1) => {
            let f = union(&[&f1, &factor_containing(&g2, a2)?, &[b1, b2]]);
            return Ok(Sep::Yes(complement(g, &f)));
        }
        Forced::Yes(d) => d,
    };
    let d2 = match forced(&g2, a2)? {
        Forced::No(f2) => {
            let f = union(&[&factor_containing(&g1, a1)?, &f2, &[b1, b2]]);
            return Ok(Sep::Yes(complement(g, &f)));
        }
        Forced::Yes(d) => d,
    };
    Ok(Sep::No(node(Step::Disconnected { joined: (a1, a2) }, g, vec![d1, d2])))
}

/// `G - {u, v}` is connected with a bridge `pq`. When both sides of the
/// bridge meet one edge from each of `u, v`, shrinking either side together
/// with `u, v` gives two smaller instances on the edge `pq`. Otherwise one
/// side meets a single edge `h` and `{h, pq}` is a 2-edge-cut avoiding `e`.
fn sep_bridge(g: &PlaneGraph, e: EdgeId, pq: EdgeId) -> Result<Sep> {
    let (u, v) = g.endpoints(e);
    let (comp, _) = Connectivity::new(g).without_vertices(&[u, v]).without_edges(&[pq]).components();
    let comp = &comp;
    let (p, _) = g.endpoints(pq);
    let c1 = comp[p];
    let into_c1: Vec<EdgeId> = [u, v]
        .iter()
        .flat_map(|&x| others_at(g, x, e).into_iter().filter(move |&f| comp[g.head(dart_from(g, f, x))] == c1))
        .collect();
    if into_c1.len() != 2 {
        let single = if into_c1.len() == 1 {
            into_c1[0]
        } else {
            [u, v]
                .iter()
                .flat_map(|&x| others_at(g, x, e))
                .find(|f| !into_c1.contains(f))
                .expect("one edge into the other side")
        };
        return sep_across_cut(g, e, single.min(pq), single.max(pq));
    }
    let side = |keep: usize| -> Vec<VertexId> {
        let mut s = vec![u, v];
        s.extend(g.vertices().filter(|&w| comp[w] != usize::MAX && comp[w] != keep));
        s
    };
    let g1 = collapse(g, &side(c1))?;
    let g2 = collapse(g, &side(1 - c1))?;
    let d1 = match sep(&g1, pq)? {
        Sep::Yes(m1) => return Ok(Sep::Yes(union(&[&m1, &matching_through(&g2, pq)?, &[e]]))),
        Sep::No(d) => d,
    };
    let d2 = match sep(&g2, pq)? {
        Sep::Yes(m2) => return Ok(Sep::Yes(union(&[&matching_through(&g1, pq)?, &m2, &[e]]))),
        Sep::No(d) => d,
    };
    Ok(Sep::No(node(Step::Bridge { bridge: pq }, g, vec![d1, d2])))
}

/// `{f, h}` is a 2-edge-cut avoiding `e`. A matching through `e` holding the
/// cut is separating; otherwise the complement crosses the cut and is
/// disconnected iff one of the two closed-up sides is.
fn sep_across_cut(g: &PlaneGraph, e: EdgeId, f: EdgeId, h: EdgeId) -> Result<Sep> {
    let (u, _) = g.endpoints(e);
    let (g1, g2) = g.split_two_edge_cut(f, h, u)?;
    if let Some(m1) = perfect_matching_with(&g1, &[e, f], &[]) {
        return Ok(Sep::Yes(union(&[&m1, &matching_through(&g2, h)?])));
    }
    let d1 = match sep(&g1, e)? {
        Sep::Yes(m1) => {
            let m2 = complement(&g2, &factor_containing(&g2, h)?);
            return Ok(Sep::Yes(union(&[&m1, &m2])));
        }
        Sep::No(d) => d,
    };
    let d2 = match forced(&g2, h)? {
        Forced::No(f2) => {
            let m1 = matching_through(&g1, e)?;
            return Ok(Sep::Yes(union(&[&m1, &complement(&g2, &f2)])));
        }
        Forced::Yes(d) => d,
    };
    Ok(Sep::No(node(Step::CutAvoidingEdge { cut: (f, h) }, g, vec![d1, d2])))
}
