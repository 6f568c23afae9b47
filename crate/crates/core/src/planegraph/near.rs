use std::collections::VecDeque;

use super::{edge_of, Dart, EdgeId, PlaneGraph, VertexId};
use crate::error::{Error, Result};

/// A plane graph with a distinguished outer face whose other faces are all
/// triangles. `boundary` lists the outer face as `v_1, ..., v_l`; it may run
/// either way around the face.
#[derive(Clone, Debug)]
pub struct NearTriangulation {
    graph: PlaneGraph,
    outer: Dart,
    boundary: Vec<VertexId>,
}

impl NearTriangulation {
    /// Wraps `graph` with the face containing `outer` as the outer face; the
    /// boundary is read off that face starting at `origin(outer)`.
    pub fn new(graph: PlaneGraph, outer: Dart) -> Result<Self> {
        if !graph.is_edge(edge_of(outer)) {
            return Err(Error::NotNearTriangulation("outer dart is not live".into()));
        }
        let boundary = graph.face_vertices(outer);
        let nt = NearTriangulation { graph, outer, boundary };
        nt.validate()?;
        Ok(nt)
    }

    /// Wraps `graph` with the face whose vertices are `boundary` (in either
    /// circular direction, starting at `boundary[0]`) as the outer face.
    pub fn with_boundary(graph: PlaneGraph, boundary: &[VertexId]) -> Result<Self> {
        let outer = find_face(&graph, boundary).ok_or_else(|| {
            Error::NotNearTriangulation(format!("no face with boundary {boundary:?}"))
        })?;
        let nt = NearTriangulation { graph, outer, boundary: boundary.to_vec() };
        nt.validate()?;
        Ok(nt)
    }

    pub(crate) fn from_parts_unchecked(graph: PlaneGraph, outer: Dart, boundary: Vec<VertexId>) -> Self {
        NearTriangulation { graph, outer, boundary }
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn into_graph(self) -> PlaneGraph {
        self.graph
    }

    /// A dart on the outer face.
    pub fn outer(&self) -> Dart {
        self.outer
    }

    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    /// Same graph and outer face with a relabeled boundary, which must be a
    /// rotation or reflection of the current one.
    pub fn relabel(&self, boundary: &[VertexId]) -> Result<Self> {
        Self::with_boundary(self.graph.clone(), boundary)
    }

    /// Is `d` on the outer face?
    pub fn on_outer_face(&self, d: Dart) -> bool {
        let mut x = self.outer;
        loop {
            if x == d {
                return true;
            }
            x = self.graph.face_next(x);
            if x == self.outer {
                return false;
            }
        }
    }

    /// An edge is internal when neither of its darts bounds the outer face.
    pub fn is_internal_edge(&self, e: EdgeId) -> bool {
        !self.on_outer_face(2 * e) && !self.on_outer_face(2 * e + 1)
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.graph;
        g.check_plane()?;
        if g.has_self_loop() {
            return Err(Error::NotNearTriangulation("self-loop".into()));
        }
        let face = g.face_vertices(self.outer);
        if !same_cycle(&face, &self.boundary) {
            return Err(Error::NotNearTriangulation(format!(
                "outer face {face:?} does not match boundary {:?}",
                self.boundary
            )));
        }
        if face.len() < 2 {
            return Err(Error::NotNearTriangulation("outer face too short".into()));
        }
        let (fidx, _) = g.face_index();
        let outer_face = fidx[self.outer];
        let mut mark = vec![usize::MAX; g.vertex_slots()];
        for (i, f) in g.faces().into_iter().enumerate() {
            if fidx[f[0]] != outer_face && f.len() != 3 {
                return Err(Error::NotNearTriangulation(format!(
                    "internal face of length {}",
                    f.len()
                )));
            }
            for &d in &f {
                let v = g.origin(d);
                if mark[v] == i {
                    return Err(Error::NotNearTriangulation(format!(
                        "vertex {v} repeats on a face boundary"
                    )));
                }
                mark[v] = i;
            }
        }
        Ok(())
    }

    /// Flips the internal edge `e`; see [`PlaneGraph::flip`].
    pub fn flip(&self, e: EdgeId) -> Result<NearTriangulation> {
        if !self.graph.is_edge(e) || !self.is_internal_edge(e) {
            return Err(Error::Precondition(format!("edge {e} is not internal")));
        }
        let graph = self.graph.flip(e)?;
        Ok(NearTriangulation { graph, outer: self.outer, boundary: self.boundary.clone() })
    }

    /// Contracts the internal edge `e` into `keep`; see [`PlaneGraph::contract_to`].
    pub fn contract_to(&self, e: EdgeId, keep: VertexId) -> Result<PlaneGraph> {
        if !self.graph.is_edge(e) || !self.is_internal_edge(e) {
            return Err(Error::Precondition(format!("edge {e} is not internal")));
        }
        self.graph.contract_to(e, keep)
    }

    /// All triangles that are not faces, as sorted vertex triples. Requires a
    /// simple graph. For `l = 3` the outer face counts as a face.
    pub fn separating_triangles(&self) -> Vec<[VertexId; 3]> {
        let mut out = Vec::new();
        separating_triangles_in(&self.graph, self.outer, |t| {
            out.push(t);
            false
        });
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Splits along the cycle given by its darts in face order.
    pub fn split_at_cycle(&self, cycle: &[Dart]) -> Result<CycleSplit> {
        split_at_cycle(&self.graph, self.outer, cycle)
    }
}

fn same_cycle(a: &[VertexId], b: &[VertexId]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let Some(s) = a.iter().position(|&x| x == b[0]) else {
        return false;
    };
    (0..n).all(|i| a[(s + i) % n] == b[i]) || (0..n).all(|i| a[(s + n - i) % n] == b[i])
}

/// A dart whose face runs through exactly the vertices of `boundary`, in
/// either direction.
pub(crate) fn find_face(g: &PlaneGraph, boundary: &[VertexId]) -> Option<Dart> {
    let l = boundary.len();
    if l < 2 || !g.is_vertex(boundary[0]) {
        return None;
    }
    let v1 = boundary[0];
    for d in g.darts_at(v1) {
        let h = g.head(d);
        if h == boundary[1] || h == boundary[l - 1] {
            let face = g.face_vertices(d);
            if same_cycle(&face, boundary) {
                return Some(d);
            }
        }
    }
    None
}

/// Calls `found` on every non-facial triangle (sorted) until it returns true.
/// Non-triangular faces other than the one containing `outer` are assumed absent.
pub(crate) fn separating_triangles_in(
    g: &PlaneGraph,
    outer: Dart,
    mut found: impl FnMut([VertexId; 3]) -> bool,
) {
    let outer_len = g.face_darts(outer).len();
    let outer_triangle = if outer_len == 3 {
        let mut t = [g.origin(outer), g.head(outer), g.face_third(outer)];
        t.sort_unstable();
        Some(t)
    } else {
        None
    };
    let mut mark = vec![usize::MAX; g.vertex_slots()];
    for u in g.vertices() {
        for d in g.darts_at(u) {
            mark[g.head(d)] = u;
        }
        for d in g.darts_at(u) {
            let v = g.head(d);
            if v <= u {
                continue;
            }
            let faces_of = |x: Dart| {
                if g.face_darts(x).len() == 3 {
                    Some(g.face_third(x))
                } else {
                    None
                }
            };
            let t1 = faces_of(d);
            let t2 = faces_of(d ^ 1);
            for x in g.darts_at(v) {
                let w = g.head(x);
                if w <= v || mark[w] != u {
                    continue;
                }
                if Some(w) == t1 || Some(w) == t2 {
                    continue;
                }
                let t = [u, v, w];
                if Some(t) == outer_triangle {
                    continue;
                }
                if found(t) {
                    return;
                }
            }
        }
    }
}

/// A pair of parallel edges `(e1, e2)`, if any.
pub(crate) fn find_parallel_pair(g: &PlaneGraph) -> Option<(EdgeId, EdgeId)> {
    let mut stamp = vec![usize::MAX; g.vertex_slots()];
    let mut via = vec![0; g.vertex_slots()];
    for u in g.vertices() {
        for d in g.darts_at(u) {
            let w = g.head(d);
            if stamp[w] == u {
                return Some((via[w], edge_of(d)));
            }
            stamp[w] = u;
            via[w] = edge_of(d);
        }
    }
    None
}

/// The two sides of a cycle. Vertex and edge ids are those of the input.
#[derive(Clone, Debug)]
pub struct CycleSplit {
    /// The closed interior of the cycle, with the cycle as its outer face.
    pub inside: NearTriangulation,
    /// The closed exterior; the cycle bounds the face containing `hole`.
    pub outside: PlaneGraph,
    /// A dart on the original outer face, valid in `outside`.
    pub outside_outer: Dart,
    /// A dart of `outside` on the face bounded by the cycle.
    pub hole: Dart,
}

impl CycleSplit {
    /// Reassembles the input graph by inserting `inside` into the hole.
    pub fn glue(&self) -> Result<PlaneGraph> {
        glue(&self.outside, self.hole, self.inside.graph())
    }
}

/// Splits `g` along the cycle `cycle` (darts in walking order). The side
/// containing the face of `outer` is the outside.
pub(crate) fn split_at_cycle(g: &PlaneGraph, outer: Dart, cycle: &[Dart]) -> Result<CycleSplit> {
    let n = cycle.len();
    if n < 2 {
        return Err(Error::Precondition("cycle needs at least two edges".into()));
    }
    let mut on_cycle_vertex = std::collections::HashSet::new();
    for i in 0..n {
        let d = cycle[i];
        if !g.is_edge(edge_of(d)) || g.head(d) != g.origin(cycle[(i + 1) % n]) {
            return Err(Error::Precondition("darts do not form a closed walk".into()));
        }
        if !on_cycle_vertex.insert(g.origin(d)) {
            return Err(Error::Precondition("cycle repeats a vertex".into()));
        }
    }
    let mut on_cycle = vec![false; g.edge_slots()];
    for &d in cycle {
        on_cycle[edge_of(d)] = true;
    }
    let (fidx, fcount) = g.face_index();
    // face adjacency without crossing the cycle
    let mut region = vec![false; fcount];
    let mut queue = VecDeque::from([fidx[outer]]);
    region[fidx[outer]] = true;
    let faces = g.faces();
    while let Some(f) = queue.pop_front() {
        for &d in &faces[f] {
            if on_cycle[edge_of(d)] {
                continue;
            }
            let h = fidx[d ^ 1];
            if !region[h] {
                region[h] = true;
                queue.push_back(h);
            }
        }
    }
    let mut keep_out = vec![false; g.edge_slots()];
    let mut keep_in = vec![false; g.edge_slots()];
    let mut inside_outer = None;
    let mut hole = None;
    for e in g.edges() {
        let (a, b) = (region[fidx[2 * e]], region[fidx[2 * e + 1]]);
        if on_cycle[e] {
            if a == b {
                return Err(Error::Precondition("cycle does not separate".into()));
            }
            keep_out[e] = true;
            keep_in[e] = true;
            let (out_dart, in_dart) = if a { (2 * e, 2 * e + 1) } else { (2 * e + 1, 2 * e) };
            inside_outer.get_or_insert(out_dart);
            hole.get_or_insert(in_dart);
        } else if a && b {
            keep_out[e] = true;
        } else if !a && !b {
            keep_in[e] = true;
        } else {
            return Err(Error::Internal("edge crosses the cycle".into()));
        }
    }
    let outside = g.restrict_to_edges(&keep_out);
    let inside_graph = g.restrict_to_edges(&keep_in);
    let inside_outer = inside_outer.unwrap();
    let boundary = inside_graph.face_vertices(inside_outer);
    let inside = NearTriangulation::from_parts_unchecked(inside_graph, inside_outer, boundary);
    Ok(CycleSplit { inside, outside, outside_outer: outer, hole: hole.unwrap() })
}

/// Inserts `inside` (whose outer face is the cycle bounding the face of
/// `hole` in `outside`) into that face. Both parts must use the same ids.
pub(crate) fn glue(outside: &PlaneGraph, hole: Dart, inside: &PlaneGraph) -> Result<PlaneGraph> {
    let slots_v = outside.vertex_slots().max(inside.vertex_slots());
    let slots_e = outside.edge_slots().max(inside.edge_slots());
    let mut endpoints = vec![(0, 0); slots_e];
    let mut live = vec![false; slots_e];
    for g in [outside, inside] {
        for e in g.edges() {
            endpoints[e] = g.endpoints(e);
            live[e] = true;
        }
    }
    let mut rotation: Vec<Vec<EdgeId>> = vec![Vec::new(); slots_v];
    for v in outside.vertices() {
        rotation[v] = outside.darts_at(v).map(edge_of).collect();
    }
    for v in inside.vertices() {
        if !outside.is_vertex(v) {
            rotation[v] = inside.darts_at(v).map(edge_of).collect();
        }
    }
    for h in outside.face_darts(hole) {
        let x = outside.origin(h);
        let e1 = edge_of(outside.prev(h));
        let e2 = edge_of(h);
        let start = inside
            .darts_at(x)
            .find(|&d| edge_of(d) == e1)
            .ok_or_else(|| Error::Precondition("inside part lacks a cycle edge".into()))?;
        let mut run = Vec::new();
        let mut d = inside.next(start);
        while edge_of(d) != e2 {
            run.push(edge_of(d));
            d = inside.next(d);
            if d == start {
                return Err(Error::Precondition("inside part lacks a cycle edge".into()));
            }
        }
        let rot = &mut rotation[x];
        let at = rot.iter().position(|&e| e == e1).unwrap();
        rot.splice(at + 1..at + 1, run);
    }
    // dense rebuild with dead slots mapped away
    let mut vmap = vec![usize::MAX; slots_v];
    let mut nv = 0;
    for v in 0..slots_v {
        if !rotation[v].is_empty() {
            vmap[v] = nv;
            nv += 1;
        }
    }
    let mut emap = vec![usize::MAX; slots_e];
    let mut dense_endpoints = Vec::new();
    for e in 0..slots_e {
        if live[e] {
            emap[e] = dense_endpoints.len();
            let (a, b) = endpoints[e];
            dense_endpoints.push((vmap[a], vmap[b]));
        }
    }
    let dense_rot: Vec<Vec<EdgeId>> = rotation
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| r.iter().map(|&e| emap[e]).collect())
        .collect();
    PlaneGraph::from_edge_rotation(nv, &dense_endpoints, &dense_rot)
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::super::CanonicalCode;
    use super::*;

    fn nt(g: PlaneGraph, b: &[VertexId]) -> NearTriangulation {
        NearTriangulation::with_boundary(g, b).unwrap()
    }

    /// Brute force: triples that form a triangle and have vertices on both sides.
    fn brute_separating(t: &NearTriangulation) -> Vec<[VertexId; 3]> {
        let g = t.graph();
        let vs: Vec<_> = g.vertices().collect();
        let mut out = Vec::new();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                for k in j + 1..vs.len() {
                    let (a, b, c) = (vs[i], vs[j], vs[k]);
                    let (Some(x), Some(y), Some(z)) =
                        (g.dart_between(a, b), g.dart_between(b, c), g.dart_between(c, a))
                    else {
                        continue;
                    };
                    let Ok(s) = split_at_cycle(g, t.outer(), &[x, y, z]) else {
                        continue;
                    };
                    let inner = s.inside.graph().vertex_count() > 3;
                    let outer = s.outside.vertex_count() > 3;
                    if inner && outer {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn separating_triangle_examples() {
        let t = nt(k4(), &[0, 1, 2]);
        assert!(t.separating_triangles().is_empty());
        let g = bipyramid();
        let t = nt(g, &[0, 1, 3]);
        assert_eq!(t.separating_triangles(), vec![[0, 1, 2]]);
        assert_eq!(t.separating_triangles(), brute_separating(&t));
        // K4 with a vertex stacked into face 1,2,3, viewed from face 0,1,2
        let base = k4();
        let d = base.dart_between(1, 2).unwrap();
        let d = if base.face_vertices(d).contains(&3) { d } else { d ^ 1 };
        let (stacked, _) = base.insert_in_face(d).unwrap();
        let t = nt(stacked, &[0, 1, 2]);
        assert_eq!(t.separating_triangles(), brute_separating(&t));
        assert_eq!(t.separating_triangles().len(), 1);
    }

    #[test]
    fn split_bipyramid_gives_two_tetrahedra() {
        let t = nt(bipyramid(), &[0, 1, 3]);
        let g = t.graph();
        let cyc = [
            g.dart_between(0, 1).unwrap(),
            g.dart_between(1, 2).unwrap(),
            g.dart_between(2, 0).unwrap(),
        ];
        let s = t.split_at_cycle(&cyc).unwrap();
        assert_eq!(CanonicalCode::of(s.inside.graph()), CanonicalCode::of(&k4()));
        assert_eq!(CanonicalCode::of(&s.outside.compact().0), CanonicalCode::of(&k4()));
        assert!(s.inside.graph().vertices().all(|v| v != 3));
        let glued = s.glue().unwrap();
        assert_eq!(CanonicalCode::of(&glued), CanonicalCode::of(g));
    }

    #[test]
    fn split_at_a_face_leaves_the_face_alone() {
        let t = nt(octahedron(), &[0, 1, 2]);
        let g = t.graph();
        let d = g.dart_between(1, 5).unwrap();
        let cyc = g.face_darts(d);
        let s = t.split_at_cycle(&cyc).unwrap();
        assert_eq!(s.inside.graph().vertex_count(), 3);
        assert_eq!(s.inside.graph().edge_count(), 3);
        assert_eq!(s.outside.vertex_count(), 6);
        assert_eq!(CanonicalCode::of(&s.glue().unwrap()), CanonicalCode::of(g));
    }

    #[test]
    fn split_at_a_two_cycle() {
        // dual of the 2-ladder has a doubled edge separating two vertices
        let g = circular_ladder(2).dual();
        let (e1, e2) = find_parallel_pair(&g).unwrap();
        let d1 = 2 * e1;
        let d2 = if g.origin(2 * e2) == g.head(d1) { 2 * e2 } else { 2 * e2 + 1 };
        let outer = g.darts().find(|&d| edge_of(d) != e1 && edge_of(d) != e2).unwrap();
        let s = split_at_cycle(&g, outer, &[d1, d2]).unwrap();
        assert_eq!(s.inside.boundary().len(), 2);
        assert_eq!(s.inside.graph().vertex_count(), 3);
        assert_eq!(s.outside.vertex_count(), 3);
        assert_eq!(CanonicalCode::of(&s.glue().unwrap()), CanonicalCode::of(&g));
    }

    #[test]
    fn nt_flip_and_contract() {
        // two triangles glued on an edge: flip the shared edge
        let g = PlaneGraph::build_from_rotation(&[vec![1, 2, 3], vec![2, 0], vec![3, 0, 1], vec![0, 2]]).unwrap();
        let t = nt(g, &[0, 1, 2, 3]);
        let e = t.graph().dart_between(0, 2).unwrap() >> 1;
        let f = t.flip(e).unwrap();
        assert!(f.graph().adjacent(1, 3));
        assert!(!f.graph().adjacent(0, 2));
        let back = f.flip(e).unwrap();
        assert_eq!(CanonicalCode::of(back.graph()), CanonicalCode::of(t.graph()));
        let outer_edge = t.graph().dart_between(0, 1).unwrap() >> 1;
        assert!(t.flip(outer_edge).is_err());
        assert!(t.contract_to(outer_edge, 0).is_err());
    }

    #[test]
    fn validation_rejects_non_triangular_inner_faces() {
        let g = cube();
        assert!(NearTriangulation::new(g, 0).is_err());
        let t = nt(k4(), &[2, 1, 0]);
        assert_eq!(t.boundary(), &[2, 1, 0]);
    }
}
