//! The inductive construction, run as a recursion on owned graphs.
//!
//! Vertex ids are global: every subproblem is a restriction or in-place
//! modification of its parent, so colorings from subproblems are merged by
//! vertex id. Every call checks that its vertex count is below the bound
//! passed by its caller.

use super::{penaud_raw, Color, Coloring};
use crate::error::{Error, Result};
use crate::planegraph::{
    edge_of, find_face, find_parallel_pair, separating_triangles_in, split_at_cycle, Dart, EdgeId,
    PlaneGraph, VertexId,
};

/// Colorings for `abbc`, `abca`, `abcc`, in that order.
pub(crate) type Four = [Option<Coloring>; 3];

const RED_ZONE: usize = 256 * 1024;
const STACK: usize = 16 * 1024 * 1024;

fn internal(msg: &str) -> Error {
    Error::Internal(msg.to_string())
}

fn shrinks(n: usize, bound: usize) -> Result<()> {
    if n >= bound {
        return Err(Error::Internal(format!(
            "recursion did not shrink: {n} vertices under a bound of {bound}"
        )));
    }
    Ok(())
}

fn outer_dart(g: &PlaneGraph, b: &[VertexId]) -> Result<Dart> {
    find_face(g, b).ok_or_else(|| Error::Internal(format!("boundary {b:?} is not a face")))
}

/// Color map sending the `a, c` palette of a 2-coloring onto `{x, z}`.
fn palette(x: Color, z: Color) -> [Color; 3] {
    [x, Color::B, z]
}

/// Direction away from `avoid` around the origin of `from`, given that the
/// two are rotation neighbors.
fn away(g: &PlaneGraph, from: Dart, avoid: Dart) -> impl Fn(Dart) -> Dart + '_ {
    let backwards = g.next(from) == avoid;
    move |d| if backwards { g.prev(d) } else { g.next(d) }
}

fn dart(g: &PlaneGraph, u: VertexId, v: VertexId) -> Result<Dart> {
    g.dart_between(u, v)
        .ok_or_else(|| Error::Internal(format!("expected an edge {u}-{v}")))
}

// ---------------------------------------------------------------------------
// Splitting along 2-cycles and separating triangles
// ---------------------------------------------------------------------------

enum Cut {
    /// Parallel edges `keep` and `drop` with ends `p`, `q`.
    TwoCycle { p: VertexId, q: VertexId, cycle: [Dart; 2] },
    Triangle { cycle: [Dart; 3] },
}

fn find_cut(g: &PlaneGraph, outer: Dart) -> Result<Option<Cut>> {
    if let Some((e1, e2)) = find_parallel_pair(g) {
        let (p, q) = g.endpoints(e1);
        let d1 = 2 * e1;
        let d2 = if g.origin(2 * e2) == q { 2 * e2 } else { 2 * e2 + 1 };
        return Ok(Some(Cut::TwoCycle { p, q, cycle: [d1, d2] }));
    }
    let mut tri = None;
    separating_triangles_in(g, outer, |t| {
        tri = Some(t);
        true
    });
    match tri {
        Some([u, v, w]) => Ok(Some(Cut::Triangle {
            cycle: [dart(g, u, v)?, dart(g, v, w)?, dart(g, w, u)?],
        })),
        None => Ok(None),
    }
}

/// The two halves of a cut, ready for recursion.
struct Halves {
    /// The closed exterior, with the cut collapsed to a triangle face or a single edge.
    outside: PlaneGraph,
    /// The closed interior as a triangulation.
    inside: PlaneGraph,
    /// Which vertices to color in the inside: `Two(p, q, x)` with `(p, q, x)`
    /// its outer face, or `Three([p, q, r])`.
    shape: Shape,
}

enum Shape {
    Two(VertexId, VertexId, VertexId),
    Three([VertexId; 3]),
}

fn halve(g: &PlaneGraph, outer: Dart, cut: Cut) -> Result<Halves> {
    match cut {
        Cut::TwoCycle { p, q, cycle } => {
            let split = split_at_cycle(g, outer, &cycle)?;
            let (e1, e2) = (edge_of(cycle[0]), edge_of(cycle[1]));
            let outer_edges: Vec<EdgeId> = g.face_darts(outer).into_iter().map(edge_of).collect();
            let drop_out = if outer_edges.contains(&e2) { e1 } else { e2 };
            let mut outside = split.outside;
            outside.remove_edge_mut(drop_out);
            let od = split.inside.outer();
            let mut inside = split.inside.into_graph();
            let drop_in = if edge_of(od) == e1 { e2 } else { e1 };
            inside.remove_edge_mut(drop_in);
            let x = inside.face_third(od);
            Ok(Halves { outside, inside, shape: Shape::Two(p, q, x) })
        }
        Cut::Triangle { cycle } => {
            let split = split_at_cycle(g, outer, &cycle)?;
            let tri = [g.origin(cycle[0]), g.origin(cycle[1]), g.origin(cycle[2])];
            Ok(Halves { outside: split.outside, inside: split.inside.into_graph(), shape: Shape::Three(tri) })
        }
    }
}

/// Colors the inside half so that it agrees with `f` on the shared vertices.
fn fill(inside: &PlaneGraph, shape: &Shape, f: &Coloring, bound: usize) -> Result<Coloring> {
    match *shape {
        Shape::Two(p, q, x) => {
            let (fp, fq) = (f.get(p), f.get(q));
            if fp.is_ab_pair(fq) {
                let (pa, pb) = if fp == Color::A { (p, q) } else { (q, p) };
                solve3(inside.clone(), [pa, pb, x], bound)
            } else if fp == fq {
                let other = if fp == Color::C { Color::A } else { Color::C };
                Ok(penaud_raw(inside, [p, q, x])?.permuted(palette(fp, other)))
            } else {
                Ok(penaud_raw(inside, [q, x, p])?.permuted(palette(fq, fp)))
            }
        }
        Shape::Three(t) => {
            let c = t.map(|v| f.get(v));
            if c[0] != c[1] && c[1] != c[2] && c[0] != c[2] {
                let pick = |col: Color| t[c.iter().position(|&x| x == col).unwrap()];
                return solve3(inside.clone(), [pick(Color::A), pick(Color::B), pick(Color::C)], bound);
            }
            // two vertices share a color y, the third has z
            let (i, j, k) = if c[0] == c[1] {
                (0, 1, 2)
            } else if c[1] == c[2] {
                (1, 2, 0)
            } else {
                (2, 0, 1)
            };
            let (y, z) = (c[i], c[k]);
            if y == z {
                return Err(internal("monochromatic triangle in the outer coloring"));
            }
            if y.is_ab_pair(z) {
                return Err(internal("separating triangle colored with a and b only"));
            }
            Ok(penaud_raw(inside, [t[i], t[j], t[k]])?.permuted(palette(y, z)))
        }
    }
}

fn merge(base: &Coloring, part: &Coloring, part_graph: &PlaneGraph) -> Coloring {
    let mut out = base.clone();
    out.copy_from(part, part_graph.vertices());
    out
}

// ---------------------------------------------------------------------------
// Triangulations
// ---------------------------------------------------------------------------

pub(crate) fn solve3(g: PlaneGraph, b: [VertexId; 3], bound: usize) -> Result<Coloring> {
    stacker::maybe_grow(RED_ZONE, STACK, || solve3_inner(g, b, bound))
}

fn solve3_inner(mut g: PlaneGraph, b: [VertexId; 3], bound: usize) -> Result<Coloring> {
    let n = g.vertex_count();
    shrinks(n, bound)?;
    let outer = outer_dart(&g, &b)?;
    let [v1, v2, v3] = b;
    if let Some(cut) = find_cut(&g, outer)? {
        let h = halve(&g, outer, cut)?;
        let f = solve3(h.outside, b, n)?;
        let fi = fill(&h.inside, &h.shape, &f, n)?;
        return Ok(merge(&f, &fi, &h.inside));
    }
    let mut f = Coloring::new(g.vertex_slots());
    f.set(v1, Color::A);
    f.set(v2, Color::B);
    f.set(v3, Color::C);
    match n {
        3 => return Ok(f),
        4 => {
            let x = g.vertices().find(|v| !b.contains(v)).unwrap();
            f.set(x, Color::C);
            return Ok(f);
        }
        _ => {}
    }
    let d31 = dart(&g, v3, v1)?;
    let d32 = dart(&g, v3, v2)?;
    let step = away(&g, d31, d32);
    let x4 = step(d31);
    let v4 = g.head(x4);
    let v5 = g.head(step(x4));
    let deg = g.degree(v3);
    drop(step);
    if deg >= 5 {
        let nd = g.flip_mut(x4)?;
        let d15 = if g.origin(nd) == v1 { nd } else { nd ^ 1 };
        if g.origin(d15) != v1 || g.head(d15) != v5 {
            return Err(internal("flip did not produce v1v5"));
        }
        g.contract_mut(d15)?;
        let mut f = solve3(g, b, n)?;
        f.set(v5, f.get(v1));
        Ok(f)
    } else if deg == 4 {
        g.remove_vertex_mut(v3);
        let r = solve4(g, [v1, v2, v5, v4], n, false)?;
        let [abbc, abca, _] = r;
        let mut f = abbc.or(abca).ok_or_else(|| internal("no abbc or abca coloring"))?;
        f.set(v3, Color::C);
        Ok(f)
    } else {
        Err(internal("low-degree apex in a reduced triangulation"))
    }
}

// ---------------------------------------------------------------------------
// 4-sided near-triangulations
// ---------------------------------------------------------------------------

pub(crate) fn solve4(g: PlaneGraph, b: [VertexId; 4], bound: usize, mirrored: bool) -> Result<Four> {
    stacker::maybe_grow(RED_ZONE, STACK, || solve4_inner(g, b, bound, mirrored))
}

fn with_colors(slots: usize, pairs: &[(VertexId, Color)]) -> Coloring {
    let mut f = Coloring::new(slots);
    for &(v, c) in pairs {
        f.set(v, c);
    }
    f
}

fn solve4_inner(mut g: PlaneGraph, b: [VertexId; 4], bound: usize, mirrored: bool) -> Result<Four> {
    use Color::{A, B, C};
    let n = g.vertex_count();
    shrinks(n, bound)?;
    let outer = outer_dart(&g, &b)?;
    let [v1, v2, v3, v4] = b;
    let slots = g.vertex_slots();

    if let Some(cut) = find_cut(&g, outer)? {
        let h = halve(&g, outer, cut)?;
        let outs = solve4(h.outside, b, n, false)?;
        let mut memo: Vec<(Vec<Color>, Coloring)> = Vec::new();
        let mut result: Four = [None, None, None];
        for (i, f) in outs.into_iter().enumerate() {
            let Some(f) = f else { continue };
            let key: Vec<Color> = match h.shape {
                Shape::Two(p, q, _) => vec![f.get(p), f.get(q)],
                Shape::Three(t) => t.iter().map(|&v| f.get(v)).collect(),
            };
            let fi = match memo.iter().find(|(k, _)| *k == key) {
                Some((_, fi)) => fi.clone(),
                None => {
                    let fi = fill(&h.inside, &h.shape, &f, n)?;
                    memo.push((key, fi.clone()));
                    fi
                }
            };
            result[i] = Some(merge(&f, &fi, &h.inside));
        }
        return Ok(result);
    }

    if g.adjacent(v1, v3) {
        return Ok([
            None,
            Some(with_colors(slots, &[(v1, A), (v2, B), (v3, C), (v4, A)])),
            Some(with_colors(slots, &[(v1, A), (v2, B), (v3, C), (v4, C)])),
        ]);
    }
    if g.adjacent(v2, v4) {
        return Ok([
            Some(with_colors(slots, &[(v1, A), (v2, B), (v3, B), (v4, C)])),
            None,
            Some(with_colors(slots, &[(v1, A), (v2, B), (v3, C), (v4, C)])),
        ]);
    }

    let d12 = dart(&g, v1, v2)?;
    let inner12 = if g.face_darts(d12).len() == 3 { d12 } else { d12 ^ 1 };
    let v5 = g.face_third(inner12);
    let (a3, a4) = (g.adjacent(v5, v3), g.adjacent(v5, v4));
    if a3 && a4 {
        if n != 5 {
            return Err(internal("wheel with extra vertices"));
        }
        return Ok([
            Some(with_colors(slots, &[(v1, A), (v2, B), (v3, B), (v4, C), (v5, C)])),
            Some(with_colors(slots, &[(v1, A), (v2, B), (v3, C), (v4, A), (v5, C)])),
            None,
        ]);
    }
    if a3 {
        return apex_next_to_v3(g, b, v5, n);
    }
    if a4 {
        return mirror(g, b, bound, mirrored);
    }

    let d52 = dart(&g, v5, v2)?;
    let d51 = dart(&g, v5, v1)?;
    let step = away(&g, d52, d51);
    let x6 = step(d52);
    let v6 = g.head(x6);
    let v7 = g.head(step(x6));
    drop(step);
    let deg5 = g.degree(v5);
    if deg5 >= 5 {
        let nd = g.flip_mut(x6)?;
        let d27 = if g.origin(nd) == v2 { nd } else { nd ^ 1 };
        if g.origin(d27) != v2 || g.head(d27) != v7 {
            return Err(internal("flip did not produce v2v7"));
        }
        g.contract_mut(d27)?;
        let r = solve4(g, b, n, false)?;
        return Ok(r.map(|f| {
            f.map(|mut f| {
                f.set(v7, B);
                f
            })
        }));
    }
    if deg5 != 4 {
        return Err(internal("interior apex of degree below four"));
    }

    if let Some(r) = four_cycle_surgery(&g, outer, b, [v5, v6, v7], n)? {
        return Ok(r);
    }
    if g.adjacent(v7, v4) && g.adjacent(v6, v3) {
        return crosswise(g, b, [v5, v6, v7], n);
    }
    if g.adjacent(v6, v3) {
        return mirror(g, b, bound, mirrored);
    }
    fan(g, b, [v5, v6], n)
}

/// Relabels the boundary as `v_2, v_1, v_4, v_3` and swaps `a` with `b`.
/// Under this transform `abbc` and `abca` trade places and `abcc` is fixed.
fn mirror(g: PlaneGraph, b: [VertexId; 4], bound: usize, mirrored: bool) -> Result<Four> {
    if mirrored {
        return Err(internal("mirrored instance asked to mirror again"));
    }
    let [r0, r1, r2] = solve4(g, [b[1], b[0], b[3], b[2]], bound, true)?;
    let sw = |f: Option<Coloring>| f.map(|f| f.swap_ab());
    Ok([sw(r1), sw(r0), sw(r2)])
}

/// `v_5` adjacent to `v_3` but not `v_4`: drop `v_2`, close `v_1 v_3` outside.
fn apex_next_to_v3(mut g: PlaneGraph, b: [VertexId; 4], v5: VertexId, n: usize) -> Result<Four> {
    let [v1, v2, v3, v4] = b;
    if g.degree(v2) != 3 {
        return Err(internal("v2 should have degree three"));
    }
    g.remove_vertex_mut(v2);
    let face = find_face(&g, &[v1, v5, v3, v4]).ok_or_else(|| internal("missing face v1 v5 v3 v4"))?;
    g.add_edge_in_face(face, v1, v3)?;
    let mut out: Four = [None, None, None];
    let mut f = solve3(g.clone(), [v1, v3, v5], n)?;
    f.set(v2, Color::B);
    out[0] = Some(f);
    let mut f = penaud_raw(&g, [v3, v5, v1])?.permuted(palette(Color::C, Color::A));
    f.set(v2, Color::B);
    let idx = if f.get(v4) == Color::A { 1 } else { 2 };
    out[idx] = Some(f);
    Ok(out)
}

/// Looks for a 4-cycle `v_1, v_2, p, q` as in the reduction, replaces its
/// interior by the gadget of the interior's type and recombines.
fn four_cycle_surgery(
    g: &PlaneGraph,
    outer: Dart,
    b: [VertexId; 4],
    fan: [VertexId; 3],
    n: usize,
) -> Result<Option<Four>> {
    let [v1, v2, v3, v4] = b;
    let d12 = dart(g, v1, v2)?;
    let mut best: Option<(usize, crate::planegraph::CycleSplit, VertexId, VertexId)> = None;
    for dp in g.darts_at(v2) {
        let p = g.head(dp);
        if p == v1 {
            continue;
        }
        for dq in g.darts_at(v1) {
            let q = g.head(dq);
            if q == v2 || q == p {
                continue;
            }
            let Some(dpq) = g.dart_between(p, q) else { continue };
            if fan.contains(&p) && fan.contains(&q) {
                continue;
            }
            if (p == v3 && q == v4) || (p == v4 && q == v3) {
                continue;
            }
            let split = split_at_cycle(g, outer, &[d12, dp, dpq, dq ^ 1])?;
            let size = split.inside.graph().vertex_count();
            if best.as_ref().is_none_or(|(s, ..)| size > *s) {
                best = Some((size, split, p, q));
            }
        }
    }
    let Some((_, split, p, q)) = best else {
        return Ok(None);
    };
    let inner = split.inside.graph().clone();
    let r1 = solve4(inner.clone(), [v1, v2, p, q], n, false)?;
    let has = |i: usize| r1[i].is_some();
    let mut h = split.outside;
    let hole = split.hole;
    if has(0) && has(1) {
        h.stack_vertex_mut(hole)?;
    } else if has(1) && has(2) {
        h.add_edge_in_face(hole, v1, p)?;
    } else if has(0) && has(2) {
        h.add_edge_in_face(hole, v2, q)?;
    } else {
        return Err(internal("interior has fewer than two assignments"));
    }
    let r2 = solve4(h, b, n, false)?;
    let mut out: Four = [None, None, None];
    for (i, f2) in r2.into_iter().enumerate() {
        let Some(f2) = f2 else { continue };
        let s = f2.restrict(&[v1, v2, p, q]);
        let j = s
            .four_sided_index()
            .ok_or_else(|| internal("gadget coloring gives an assignment outside S"))?;
        let f1 = r1[j].as_ref().ok_or_else(|| internal("gadget type mismatch"))?;
        out[i] = Some(merge(&f2, f1, &inner));
    }
    Ok(Some(out))
}

/// `v_7 ~ v_4` and `v_6 ~ v_3`: two triangulations on the rest give `abbc` and `abca`.
fn crosswise(g: PlaneGraph, b: [VertexId; 4], fan: [VertexId; 3], n: usize) -> Result<Four> {
    use Color::{A, B, C};
    let [v1, v2, v3, v4] = b;
    let [v5, v6, v7] = fan;
    let mut rest = g;
    for v in [v1, v2, v5] {
        rest.remove_vertex_mut(v);
    }
    let face = find_face(&rest, &[v3, v6, v7, v4]).ok_or_else(|| internal("missing face v3 v6 v7 v4"))?;
    let mut out: Four = [None, None, None];
    for (idx, (x, y), tri) in [(0, (v3, v7), [v7, v3, v4]), (1, (v4, v6), [v4, v6, v3])] {
        let mut h = rest.clone();
        h.add_edge_in_face(face, x, y)?;
        let mut f = solve3(h, tri, n)?;
        f.set(v1, A);
        f.set(v2, B);
        f.set(v5, C);
        out[idx] = Some(f);
    }
    Ok(out)
}

/// The fan around `w`, the far vertex on `v_2 v_6`: flip and contract every
/// other spoke into `v_2`, then color `w` with `c` and the merged vertices with `b`.
fn fan(mut g: PlaneGraph, b: [VertexId; 4], fan: [VertexId; 2], n: usize) -> Result<Four> {
    let v2 = b[1];
    let [v5, v6] = fan;
    let d26 = dart(&g, v2, v6)?;
    let w = if g.face_third(d26) == v5 { g.face_third(d26 ^ 1) } else { g.face_third(d26) };
    let dw2 = dart(&g, w, v2)?;
    let dw6 = dart(&g, w, v6)?;
    let step = away(&g, dw2, dw6);
    let mut spokes = vec![dw2];
    while *spokes.last().unwrap() != dw6 {
        let nx = step(*spokes.last().unwrap());
        spokes.push(nx);
        if spokes.len() > g.degree(w) {
            return Err(internal("fan walk did not reach v6"));
        }
    }
    drop(step);
    let ws: Vec<VertexId> = spokes.iter().map(|&d| g.head(d)).collect();
    let d = ws.len();
    // 1-based: flip w w_{2i}, contract w_{2i+1} into v2, for 1 <= i < ceil(d/2)
    let mut merged = Vec::new();
    for i in 1..d.div_ceil(2) {
        let spoke = spokes[2 * i - 1];
        let nd = g.flip_mut(spoke)?;
        let target = ws[2 * i];
        let dd = if g.origin(nd) == v2 { nd } else { nd ^ 1 };
        if g.origin(dd) != v2 || g.head(dd) != target {
            return Err(internal("fan flip did not reach the next spoke"));
        }
        g.contract_mut(dd)?;
        merged.push(target);
    }
    if d % 2 == 1 {
        g.remove_vertex_mut(w);
        let lp = g
            .darts_at(v2)
            .find(|&x| g.head(x) == v2)
            .ok_or_else(|| internal("odd fan left no loop"))?;
        g.remove_edge_mut(edge_of(lp));
        let dup = g
            .darts_at(v2)
            .find(|&x| g.head(x) == v5 && g.face_darts(x).len() == 2)
            .ok_or_else(|| internal("odd fan left no digon at v2 v5"))?;
        g.remove_edge_mut(edge_of(dup));
    }
    if g.has_self_loop() {
        return Err(internal("fan reduction left a loop"));
    }
    let r = solve4(g, b, n, false)?;
    Ok(r.map(|f| {
        f.map(|mut f| {
            f.set(w, Color::C);
            for &m in &merged {
                f.set(m, Color::B);
            }
            f
        })
    }))
}
