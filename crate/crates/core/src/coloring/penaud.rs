use std::collections::VecDeque;

use super::{Color, Coloring};
use crate::error::{Error, Result};
use crate::matching::perfect_matching_through;
use crate::planegraph::{edge_of, find_face, PlaneGraph, VertexId};

/// Two-coloring of a loopless triangulation with `v_1 = v_2 = a`, `v_3 = c`
/// and no monochromatic face.
///
/// A perfect matching `M` of the dual through the dual of `v_1 v_2` leaves a
/// 2-factor of disjoint cycles; two adjacent vertices get the same color
/// exactly when the dual of their edge lies in `M`, i.e. when no cycle
/// separates their faces.
pub(crate) fn penaud_raw(g: &PlaneGraph, b: [VertexId; 3]) -> Result<Coloring> {
    let outer = find_face(g, &b)
        .ok_or_else(|| Error::Precondition(format!("{b:?} is not a face")))?;
    let e12 = g
        .face_darts(outer)
        .into_iter()
        .find(|&d| {
            let (x, y) = (g.origin(d), g.head(d));
            (x == b[0] && y == b[1]) || (x == b[1] && y == b[0])
        })
        .map(edge_of)
        .ok_or_else(|| Error::Internal("boundary edge v1v2 missing".into()))?;
    let dual = g.dual();
    let m = perfect_matching_through(&dual, e12)
        .ok_or_else(|| Error::Internal("dual has no perfect matching through the boundary edge".into()))?;
    let mut in_m = vec![false; g.edge_slots()];
    for e in m {
        in_m[e] = true;
    }
    let mut color: Vec<Option<Color>> = vec![None; g.vertex_slots()];
    color[b[0]] = Some(Color::A);
    let mut queue = VecDeque::from([b[0]]);
    while let Some(x) = queue.pop_front() {
        let cx = color[x].unwrap();
        for d in g.darts_at(x) {
            let y = g.head(d);
            let want = if in_m[edge_of(d)] {
                cx
            } else if cx == Color::A {
                Color::C
            } else {
                Color::A
            };
            match color[y] {
                None => {
                    color[y] = Some(want);
                    queue.push_back(y);
                }
                Some(c) if c != want => {
                    return Err(Error::Internal("cycle parity is inconsistent".into()));
                }
                Some(_) => {}
            }
        }
    }
    Ok(Coloring::from_vec(color.into_iter().map(|c| c.unwrap_or_default()).collect()))
}
