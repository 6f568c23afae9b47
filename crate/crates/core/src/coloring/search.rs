use super::{BoundaryAssignment, Color, Coloring};
use crate::planegraph::{Dart, PlaneGraph, VertexId};

/// Backtracking search for a special coloring with boundary colors `s`.
/// Exponential in the worst case; meant for the assignments the recursion
/// does not construct.
pub(crate) fn exact_special_search(
    g: &PlaneGraph,
    outer: Dart,
    boundary: &[VertexId],
    s: &BoundaryAssignment,
) -> Option<Coloring> {
    if boundary.len() != s.len() || s.0[0] != Color::A || s.0[1] != Color::B {
        return None;
    }
    let (v1, v2) = (boundary[0], boundary[1]);
    let slots = g.vertex_slots();
    let (fidx, _) = g.face_index();
    let outer_face = fidx[outer];
    let mut faces_at: Vec<Vec<[VertexId; 3]>> = vec![Vec::new(); slots];
    for f in g.faces() {
        if fidx[f[0]] == outer_face {
            continue;
        }
        let t = [g.origin(f[0]), g.origin(f[1]), g.origin(f[2])];
        for &v in &t {
            faces_at[v].push(t);
        }
    }
    let mut color: Vec<Option<Color>> = vec![None; slots];
    for (&v, &c) in boundary.iter().zip(&s.0) {
        color[v] = Some(c);
    }
    let ok_at = |color: &[Option<Color>], v: VertexId| -> bool {
        let c = color[v].unwrap();
        for d in g.darts_at(v) {
            let w = g.head(d);
            if let Some(cw) = color[w] {
                if c.is_ab_pair(cw) && !((v == v1 && w == v2) || (v == v2 && w == v1)) {
                    return false;
                }
            }
        }
        faces_at[v].iter().all(|t| {
            let cs: Vec<_> = t.iter().map(|&x| color[x]).collect();
            cs.iter().any(|c| c.is_none()) || !(cs[0] == cs[1] && cs[1] == cs[2])
        })
    };
    if !boundary.iter().all(|&v| ok_at(&color, v)) {
        return None;
    }
    // breadth-first order from the boundary keeps constraints tight
    let mut order = Vec::new();
    let mut seen = vec![false; slots];
    let mut queue: std::collections::VecDeque<VertexId> = boundary.iter().copied().collect();
    for &v in boundary {
        seen[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        for d in g.darts_at(v) {
            let w = g.head(d);
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    fn go(
        i: usize,
        order: &[VertexId],
        color: &mut Vec<Option<Color>>,
        ok_at: &dyn Fn(&[Option<Color>], VertexId) -> bool,
    ) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        for c in Color::ALL {
            color[v] = Some(c);
            if ok_at(color, v) && go(i + 1, order, color, ok_at) {
                return true;
            }
        }
        color[v] = None;
        false
    }
    if go(0, &order, &mut color, &ok_at) {
        Some(Coloring::from_vec(color.into_iter().map(|c| c.unwrap_or_default()).collect()))
    } else {
        None
    }
}
