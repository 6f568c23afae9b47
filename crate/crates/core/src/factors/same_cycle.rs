use super::{two_factor_with_chord, TwoFactor};
use crate::error::{Error, Result};
use crate::matching::perfect_matching_through;
use crate::planegraph::{Dart, EdgeId, PlaneGraph, VertexId};

/// A 2-factor with two given edges on one of its cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SameCycleWitness {
    pub factor: TwoFactor,
    pub cycle: usize,
    pub edges: (EdgeId, EdgeId),
}

impl SameCycleWitness {
    pub fn new(g: &PlaneGraph, factor: TwoFactor, e1: EdgeId, e2: EdgeId) -> Result<Self> {
        let c1 = factor.cycle_of_edge(g, e1);
        let c2 = factor.cycle_of_edge(g, e2);
        match (c1, c2) {
            (Some(a), Some(b)) if a == b => Ok(SameCycleWitness { factor, cycle: a, edges: (e1, e2) }),
            _ => Err(Error::Internal(format!("edges {e1} and {e2} are not on one cycle"))),
        }
    }

    pub fn validate(&self, g: &PlaneGraph) -> Result<()> {
        let (e1, e2) = self.edges;
        let again = TwoFactor::new(g, self.factor.edges().to_vec())?;
        SameCycleWitness::new(g, again, e1, e2).map(|_| ())
    }
}

/// Two edges on a common face: subdivide both, join the new vertices across
/// the face, and take a 2-factor in which the new edge is a chord.
pub fn same_cycle_2factor_facial(g: &PlaneGraph, e1: EdgeId, e2: EdgeId) -> Result<SameCycleWitness> {
    g.require_cubic()?;
    for e in [e1, e2] {
        if !g.is_edge(e) {
            return Err(Error::Precondition(format!("no edge {e}")));
        }
    }
    if e1 == e2 {
        return Err(Error::Precondition("the two edges must differ".into()));
    }
    let (d1, d2) = common_face(g, e1, e2)
        .ok_or_else(|| Error::Precondition(format!("edges {e1} and {e2} share no face")))?;
    let mut h = g.clone();
    let (_, f1) = h.subdivide_mut(d1);
    let (_, f2) = h.subdivide_mut(d2);
    // d1 and d2 still run along the same face, now ending at x and y
    let chord = h.add_edge_mut(Ok(h.prev(2 * f1)), Ok(h.prev(2 * f2)));
    let w = two_factor_with_chord(&h, chord)?;
    let edges: Vec<EdgeId> = w.factor.edges().iter().copied().filter(|&e| e != f1 && e != f2).collect();
    let factor = TwoFactor::new(g, edges)?;
    SameCycleWitness::new(g, factor, e1, e2)
}

/// Darts of `e1` and `e2` in the first face, in face order, containing both.
fn common_face(g: &PlaneGraph, e1: EdgeId, e2: EdgeId) -> Option<(Dart, Dart)> {
    for face in g.faces() {
        let d1 = face.iter().copied().find(|&d| d >> 1 == e1);
        let d2 = face.iter().copied().find(|&d| d >> 1 == e2);
        if let (Some(a), Some(b)) = (d1, d2) {
            return Some((a, b));
        }
    }
    None
}

/// Any two edges of a connected cubic plane bipartite graph lie on one cycle
/// of some 2-factor. Reduces along 2-edge-cuts and quadrilateral faces.
pub fn same_cycle_2factor_bipartite(g: &PlaneGraph, e1: EdgeId, e2: EdgeId) -> Result<SameCycleWitness> {
    g.require_cubic()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_bipartite(g) {
        return Err(Error::NotBipartite);
    }
    for e in [e1, e2] {
        if !g.is_edge(e) {
            return Err(Error::Precondition(format!("no edge {e}")));
        }
    }
    let edges = stacker::maybe_grow(256 * 1024, 16 * 1024 * 1024, || bipartite_rec(g.clone(), e1, e2))?;
    let factor = TwoFactor::new(g, edges)?;
    SameCycleWitness::new(g, factor, e1, e2)
}

pub(crate) fn is_bipartite(g: &PlaneGraph) -> bool {
    let mut side = vec![u8::MAX; g.vertex_slots()];
    for s in g.vertices() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for d in g.darts_at(v) {
                let w = g.head(d);
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Edges of a 2-factor of `g` containing `e`.
pub(crate) fn factor_containing(g: &PlaneGraph, e: EdgeId) -> Result<Vec<EdgeId>> {
    let (u, _) = g.endpoints(e);
    let other = g
        .darts_at(u)
        .map(|d| d >> 1)
        .find(|&f| f != e)
        .ok_or_else(|| Error::Internal("isolated edge".into()))?;
    complement_of_matching_through(g, other)
}

/// Edges of a 2-factor of `g` avoiding `e`.
pub(crate) fn factor_avoiding(g: &PlaneGraph, e: EdgeId) -> Result<Vec<EdgeId>> {
    complement_of_matching_through(g, e)
}

fn complement_of_matching_through(g: &PlaneGraph, e: EdgeId) -> Result<Vec<EdgeId>> {
    let m = perfect_matching_through(g, e)
        .ok_or_else(|| Error::Internal(format!("no perfect matching through edge {e}")))?;
    Ok(g.edges().filter(|f| !m.contains(f)).collect())
}

fn on_one_cycle(g: &PlaneGraph, edges: &[EdgeId], e1: EdgeId, e2: EdgeId) -> Result<bool> {
    let f = TwoFactor::new(g, edges.to_vec())?;
    Ok(matches!((f.cycle_of_edge(g, e1), f.cycle_of_edge(g, e2)), (Some(a), Some(b)) if a == b))
}

fn bipartite_rec(g: PlaneGraph, e1: EdgeId, e2: EdgeId) -> Result<Vec<EdgeId>> {
    stacker::maybe_grow(256 * 1024, 16 * 1024 * 1024, || bipartite_step(g, e1, e2))
}

fn bipartite_step(g: PlaneGraph, e1: EdgeId, e2: EdgeId) -> Result<Vec<EdgeId>> {
    if e1 == e2 {
        return factor_containing(&g, e1);
    }
    if g.vertex_count() == 2 {
        return Ok(vec![e1, e2]);
    }
    if let Some(&(a, b)) = g.two_edge_cuts().first() {
        return split_at_cut(&g, a, b, e1, e2);
    }
    reduce_quadrilateral(g, e1, e2)
}

/// Splits along the 2-edge-cut `{a, b}`; the side holding `a`'s lower end
/// keeps id `a` for its new edge, the other side keeps `b`. With these ids the
/// 2-factor of the whole graph is the union of the two sides' factors.
fn split_at_cut(g: &PlaneGraph, a: EdgeId, b: EdgeId, e1: EdgeId, e2: EdgeId) -> Result<Vec<EdgeId>> {
    let (pa, _) = g.endpoints(a);
    let (g1, g2) = g.split_two_edge_cut(a, b, pa)?;
    // an edge of the cut is renamed to the new edge of the side it is assigned to
    let place = |e: EdgeId, prefer_first: bool| -> (usize, EdgeId) {
        if e == a || e == b {
            if prefer_first { (1, a) } else { (2, b) }
        } else if g1.is_edge(e) {
            (1, e)
        } else {
            (2, e)
        }
    };
    let (s1, x1) = place(e1, true);
    let (s2, x2) = place(e2, false);
    let (f1, f2) = match (s1, s2) {
        (1, 1) | (2, 2) => {
            let (home, away, link_home, link_away) =
                if s1 == 1 { (&g1, &g2, a, b) } else { (&g2, &g1, b, a) };
            let fh = bipartite_rec(home.clone(), x1, x2)?;
            let fa = if fh.contains(&link_home) {
                factor_containing(away, link_away)?
            } else {
                factor_avoiding(away, link_away)?
            };
            (fh, fa)
        }
        _ => {
            let (x_in_1, x_in_2) = if s1 == 1 { (x1, x2) } else { (x2, x1) };
            (bipartite_rec(g1.clone(), x_in_1, a)?, bipartite_rec(g2.clone(), x_in_2, b)?)
        }
    };
    let mut out = f1;
    out.extend(f2);
    out.sort_unstable();
    out.dedup();
    if !on_one_cycle(g, &out, e1, e2)? {
        return Err(Error::Internal("2-edge-cut recombination lost the common cycle".into()));
    }
    Ok(out)
}

/// Removes a quadrilateral face `v_1 v_2 v_3 v_4` avoiding both edges,
/// reconnects its outer neighbours by `u_1 u_4` and `u_2 u_3`, recurses and
/// re-expands.
fn reduce_quadrilateral(g: PlaneGraph, e1: EdgeId, e2: EdgeId) -> Result<Vec<EdgeId>> {
    let (quad, spokes) = pick_quadrilateral(&g, e1, e2)
        .ok_or_else(|| Error::Internal("no quadrilateral face avoids both edges".into()))?;
    let touches = |e: EdgeId| spokes.iter().position(|&s| s == e);
    // relabel so that a touched spoke of e1 (or else e2) is spoke 0, and a
    // touched spoke of the other edge is spoke 1 or 2
    let mut order = [0usize, 1, 2, 3];
    let (first, second) = if touches(e1).is_some() { (e1, e2) } else { (e2, e1) };
    if let Some(i) = touches(first) {
        order = [i, (i + 1) % 4, (i + 2) % 4, (i + 3) % 4];
        if let Some(j) = touches(second) {
            if j == order[3] {
                order = [i, (i + 3) % 4, (i + 2) % 4, (i + 1) % 4];
            }
        }
    }
    let v: [VertexId; 4] = order.map(|i| quad[i]);
    let s: [EdgeId; 4] = order.map(|i| spokes[i]);
    let u: [VertexId; 4] = std::array::from_fn(|i| {
        let (a, b) = g.endpoints(s[i]);
        if a == v[i] { b } else { a }
    });
    let ring: [EdgeId; 4] = std::array::from_fn(|i| {
        let d = g.dart_between(v[i], v[(i + 1) % 4]).expect("quadrilateral edge");
        d >> 1
    });
    // corners at u_i just before the spoke, in the merged face after deletion
    let mut h = g.clone();
    let corner: [Dart; 4] = std::array::from_fn(|i| {
        let d = g.darts_at(u[i]).find(|&d| d >> 1 == s[i]).unwrap();
        g.prev(d)
    });
    for &x in &v {
        h.remove_vertex_mut(x);
    }
    let n14 = h.add_edge_mut(Ok(corner[0]), Ok(corner[3]));
    let n23 = h.add_edge_mut(Ok(corner[1]), Ok(corner[2]));
    h.check_plane()?;
    let rename = |e: EdgeId| -> EdgeId {
        if e == s[0] {
            n14
        } else if e == s[1] || e == s[2] {
            n23
        } else {
            e
        }
    };
    let f = bipartite_rec(h, rename(e1), rename(e2))?;
    let has14 = f.contains(&n14);
    let has23 = f.contains(&n23);
    let mut out: Vec<EdgeId> = f.into_iter().filter(|&e| e != n14 && e != n23).collect();
    // ring[i] joins v_i and v_{i+1}
    let (r12, r23, r34, r41) = (ring[0], ring[1], ring[2], ring[3]);
    match (has14, has23) {
        (false, false) => out.extend(ring),
        (true, false) => out.extend([s[0], r12, r23, r34, s[3]]),
        (false, true) => out.extend([s[1], r12, r41, r34, s[2]]),
        (true, true) => out.extend([s[0], s[1], s[2], s[3], r41, r23]),
    }
    out.sort_unstable();
    if !on_one_cycle(&g, &out, e1, e2)? {
        return Err(Error::Internal("quadrilateral re-expansion lost the common cycle".into()));
    }
    Ok(out)
}

/// First face of length 4 with no edge among `e1`, `e2` on it and four
/// distinct outer neighbours. Returns the face vertices in order and the
/// spoke edge at each.
fn pick_quadrilateral(g: &PlaneGraph, e1: EdgeId, e2: EdgeId) -> Option<([VertexId; 4], [EdgeId; 4])> {
    'faces: for face in g.faces() {
        if face.len() != 4 || face.iter().any(|&d| d >> 1 == e1 || d >> 1 == e2) {
            continue;
        }
        let v: [VertexId; 4] = std::array::from_fn(|i| g.origin(face[i]));
        let mut spokes = [0; 4];
        let mut outer = [0; 4];
        for i in 0..4 {
            let on_face = [face[i] >> 1, face[(i + 3) % 4] >> 1];
            let Some(d) = g.darts_at(v[i]).find(|&d| !on_face.contains(&(d >> 1))) else {
                continue 'faces;
            };
            spokes[i] = d >> 1;
            outer[i] = g.head(d);
        }
        let mut sorted = outer;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) || outer.iter().any(|o| v.contains(o)) {
            continue;
        }
        return Some((v, spokes));
    }
    None
}
