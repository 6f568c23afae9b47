use super::{ChordWitness, Matching, TwoFactor};
use crate::coloring::{special_3coloring, verify_special, Color, Coloring};
use crate::error::{Error, Result};
use crate::matching::perfect_matching_through;
use crate::planegraph::{CutKind, EdgeId, NearTriangulation, PlaneGraph, VertexId};

/// A perfect matching of a cubic bridgeless graph that contains `e`.
pub fn perfect_matching_through_edge(g: &PlaneGraph, e: EdgeId) -> Result<Matching> {
    g.require_cubic()?;
    if !g.is_edge(e) {
        return Err(Error::Precondition(format!("no edge {e}")));
    }
    if g.bridges().contains(&e) {
        return Err(Error::Bridge(e));
    }
    let m = perfect_matching_through(g, e)
        .ok_or_else(|| Error::Precondition(format!("no perfect matching contains edge {e}")))?;
    Matching::new(g, m)
}

/// The dual triangulation labeled for edge `e`: `v_1, v_2` are the ends of
/// the dual edge (origin and head of dart `2e` in the dual) and the outer
/// face is the one containing that dart.
pub fn dual_for_edge(g: &PlaneGraph, e: EdgeId) -> Result<NearTriangulation> {
    if !g.is_edge(e) {
        return Err(Error::Precondition(format!("no edge {e}")));
    }
    NearTriangulation::new(g.dual(), 2 * e)
}

/// Reads a special coloring of the dual back as a chorded 2-factor: the edges
/// crossing monochromatic dual edges, together with `e`, form a perfect
/// matching, and `e` is a chord of a cycle of its complement.
pub fn coloring_to_twofactor(g: &PlaneGraph, t: &PlaneGraph, f: &Coloring, e: EdgeId) -> Result<ChordWitness> {
    g.require_cubic()?;
    let (x, y) = t.endpoints(e);
    let (v1, _) = match (f.get(x), f.get(y)) {
        (Color::A, Color::B) => (x, y),
        (Color::B, Color::A) => (y, x),
        _ => return Err(Error::InvalidColoring(format!("ends of dual edge {e} are not colored a, b"))),
    };
    let d = if t.origin(2 * e) == v1 { 2 * e } else { 2 * e + 1 };
    let nt = NearTriangulation::new(t.clone(), d)?;
    if !verify_special(&nt, f) {
        return Err(Error::InvalidColoring("not a special coloring".into()));
    }
    let mut m = vec![e];
    for x in t.edges() {
        let (a, b) = t.endpoints(x);
        if f.get(a) == f.get(b) {
            m.push(x);
        }
    }
    let m = Matching::new(g, m)?;
    if !m.is_perfect() {
        return Err(Error::Internal("monochromatic dual edges do not give a perfect matching".into()));
    }
    ChordWitness::new(g, m.complement(g)?, e)
}

/// Inverse direction: 2-color the faces of `g` by the parity of the cycles of
/// `factor` around them, then recolor to `b` the part of the chord's region on
/// the far side of the chord. The result is a special coloring of `dual(g)`
/// with `v_1 = a` at the origin of dual dart `2e`.
pub fn twofactor_to_coloring(g: &PlaneGraph, factor: &TwoFactor, e: EdgeId) -> Result<Coloring> {
    g.require_cubic()?;
    let w = ChordWitness::new(g, factor.clone(), e)?;
    let t = g.dual();
    let nf = t.vertex_slots();
    // regions: components of faces joined across matching edges other than e
    let mut region = vec![usize::MAX; nf];
    let mut regions = 0;
    for s in t.vertices() {
        if region[s] != usize::MAX {
            continue;
        }
        flood(&t, s, &mut region, regions, |x| !w.factor.contains(x));
        regions += 1;
    }
    // region adjacency across factor edges forms a tree; 2-color it from v_1
    let (v1, v2) = (t.origin(2 * e), t.head(2 * e));
    let mut side = vec![None; regions];
    side[region[v1]] = Some(Color::A);
    let mut stack = vec![region[v1]];
    let mut members: Vec<Vec<VertexId>> = vec![Vec::new(); regions];
    for v in t.vertices() {
        members[region[v]].push(v);
    }
    while let Some(r) = stack.pop() {
        let c = side[r].unwrap();
        let other = if c == Color::A { Color::C } else { Color::A };
        for &v in &members[r] {
            for d in t.darts_at(v) {
                if !w.factor.contains(d >> 1) {
                    continue;
                }
                let s = region[t.head(d)];
                match side[s] {
                    None => {
                        side[s] = Some(other);
                        stack.push(s);
                    }
                    Some(x) if x == c => {
                        return Err(Error::Internal("cycle regions are not 2-colorable".into()));
                    }
                    _ => {}
                }
            }
        }
    }
    let mut f = Coloring::new(nf);
    for v in t.vertices() {
        f.set(v, side[region[v]].unwrap());
    }
    // split the chord's region at the chord and move v_2's part to b
    let mut part = vec![usize::MAX; nf];
    flood(&t, v2, &mut part, 0, |x| x != e && !w.factor.contains(x));
    if part[v1] == 0 {
        return Err(Error::Internal("chord does not split its region".into()));
    }
    for v in t.vertices().filter(|&v| part[v] == 0) {
        f.set(v, Color::B);
    }
    Ok(f)
}

fn flood(t: &PlaneGraph, s: VertexId, label: &mut [usize], id: usize, pass: impl Fn(EdgeId) -> bool) {
    label[s] = id;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for d in t.darts_at(v) {
            let w = t.head(d);
            if label[w] == usize::MAX && pass(d >> 1) {
                label[w] = id;
                stack.push(w);
            }
        }
    }
}

/// A 2-factor in which `e` is a chord of some cycle, for a 2-edge-connected
/// cubic plane graph and an edge in no 2-edge-cut.
pub fn two_factor_with_chord(g: &PlaneGraph, e: EdgeId) -> Result<ChordWitness> {
    g.require_cubic()?;
    if !g.is_edge(e) {
        return Err(Error::Precondition(format!("no edge {e}")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let status = g.edge_cut_status(e);
    match status.kind {
        CutKind::Bridge => return Err(Error::Bridge(e)),
        CutKind::TwoEdgeCut => return Err(Error::InTwoEdgeCut(e)),
        CutKind::None => {}
    }
    if let Some(b) = g.bridges().first() {
        return Err(Error::Bridge(*b));
    }
    let nt = dual_for_edge(g, e)?;
    let f = special_3coloring(&nt)?;
    coloring_to_twofactor(g, nt.graph(), &f, e)
}
