use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::planegraph::{named, CanonicalCode, EdgeId, NearTriangulation, PlaneGraph, VertexId};

/// Largest triangulation order produced by [`enumerate_triangulations`].
pub const MAX_ENUMERATED_ORDER: usize = 11;

/// Pairwise non-isomorphic plane graphs, ordered by canonical code.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    members: BTreeMap<CanonicalCode, PlaneGraph>,
    /// How the corpus was produced, e.g. `enumerate n=7` or `random n=50 seed=3`.
    pub provenance: String,
}

impl Corpus {
    pub fn new(provenance: impl Into<String>) -> Self {
        Corpus { members: BTreeMap::new(), provenance: provenance.into() }
    }

    /// Adds `g` unless an isomorphic graph is present; returns whether it was new.
    pub fn insert(&mut self, g: PlaneGraph) -> bool {
        let g = if g.vertex_count() == g.vertex_slots() && g.edge_count() == g.edge_slots() {
            g
        } else {
            g.compact().0
        };
        let code = CanonicalCode::of(&g);
        if self.members.contains_key(&code) {
            return false;
        }
        self.members.insert(code, g);
        true
    }

    pub fn contains(&self, g: &PlaneGraph) -> bool {
        self.members.contains_key(&CanonicalCode::of(g))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalCode, &PlaneGraph)> {
        self.members.iter()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &PlaneGraph> {
        self.members.values()
    }

    pub fn into_graphs(self) -> Vec<PlaneGraph> {
        self.members.into_values().collect()
    }
}

/// Simple plane triangulations on `n` vertices, one per isomorphism class
/// (reflections identified).
pub fn enumerate_triangulations(n: usize) -> Result<Corpus> {
    if !(4..=MAX_ENUMERATED_ORDER).contains(&n) {
        return Err(Error::BoundExceeded { what: "triangulation order", value: n, bound: MAX_ENUMERATED_ORDER });
    }
    Ok(triangulation_levels(n).pop().expect("at least one level"))
}

/// Triangulation corpora for every order from 4 to `max_n`, each built from
/// the previous one by inserting a degree-3 vertex in every face and then
/// closing under flips. Exhaustive because the flip graph on a fixed number
/// of vertices is connected.
pub fn triangulation_levels(max_n: usize) -> Vec<Corpus> {
    let mut levels = Vec::new();
    let mut cur = Corpus::new("enumerate n=4");
    cur.insert(named::k4());
    levels.push(cur.clone());
    for n in 5..=max_n {
        let mut next = Corpus::new(format!("enumerate n={n}"));
        for g in cur.graphs() {
            for f in g.faces() {
                let (h, _) = g.insert_in_face(f[0]).expect("triangular face");
                next.insert(h);
            }
        }
        close_under_flips(&mut next);
        levels.push(next.clone());
        cur = next;
    }
    levels
}

fn close_under_flips(c: &mut Corpus) {
    let mut queue: Vec<PlaneGraph> = c.graphs().cloned().collect();
    while let Some(g) = queue.pop() {
        for e in g.edges() {
            if let Some(h) = simple_flip(&g, e) {
                if !c.contains(&h) {
                    c.insert(h.clone());
                    queue.push(h);
                }
            }
        }
    }
}

/// Flips `e` if the result is again a simple triangulation.
pub(crate) fn simple_flip(g: &PlaneGraph, e: EdgeId) -> Option<PlaneGraph> {
    let mut h = g.clone();
    simple_flip_mut(&mut h, e).then_some(h)
}

pub(crate) fn simple_flip_mut(g: &mut PlaneGraph, e: EdgeId) -> bool {
    let (u, v) = g.endpoints(e);
    if g.degree(u) <= 3 || g.degree(v) <= 3 {
        return false;
    }
    let d = 2 * e;
    let (wa, wb) = (g.face_third(d), g.face_third(d ^ 1));
    if wa == wb || g.adjacent(wa, wb) {
        return false;
    }
    g.flip_mut(d).is_ok()
}

/// 4-sided near-triangulations with at most `max_vertices` vertices, obtained
/// by deleting a degree-4 vertex from each triangulation with one more vertex,
/// with every rotation and reflection of the boundary labels. Labelings that
/// coincide under an isomorphism are kept once.
pub fn four_sided_corpus(max_vertices: usize) -> Vec<NearTriangulation> {
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let levels = triangulation_levels((max_vertices + 1).clamp(5, MAX_ENUMERATED_ORDER));
    for level in &levels {
        for g in level.graphs() {
            for v in g.vertices().filter(|&v| g.degree(v) == 4) {
                let ring: Vec<VertexId> = g.neighbors(v);
                let mut h = g.clone();
                h.remove_vertex_mut(v);
                let (h, map) = h.compact();
                let ring: Vec<VertexId> = ring.iter().map(|&x| map[x].unwrap()).collect();
                for rot in 0..4 {
                    for rev in [false, true] {
                        let mut b: Vec<VertexId> = (0..4).map(|i| ring[(rot + i) % 4]).collect();
                        if rev {
                            b = (0..4).map(|i| ring[(rot + 4 - i) % 4]).collect();
                        }
                        let Ok(nt) = NearTriangulation::with_boundary(h.clone(), &b) else { continue };
                        let Some(d) = outer_dart_from(&nt, b[0], b[1]) else { continue };
                        if seen.insert(CanonicalCode::from_dart(nt.graph(), d)) {
                            out.push(nt);
                        }
                    }
                }
            }
        }
    }
    out
}

fn outer_dart_from(nt: &NearTriangulation, a: VertexId, b: VertexId) -> Option<usize> {
    let g = nt.graph();
    g.darts_at(a).find(|&d| g.head(d) == b && nt.on_outer_face(d))
}

/// Cubic plane graphs with at most `max_vertices` vertices that are
/// 3-edge-connected: `K_2^3` and the duals of the triangulation corpus.
pub fn cubic_corpus(max_vertices: usize) -> Corpus {
    let mut c = Corpus::new(format!("cubic duals max_vertices={max_vertices}"));
    for g in three_connected_cubic(max_vertices) {
        c.insert(g);
    }
    c
}

fn three_connected_cubic(max_vertices: usize) -> Vec<PlaneGraph> {
    let mut out = vec![named::theta()];
    let max_n = (max_vertices / 2 + 2).min(MAX_ENUMERATED_ORDER);
    if max_n >= 4 {
        for level in triangulation_levels(max_n) {
            out.extend(level.graphs().map(|t| t.dual()).filter(|d| d.vertex_count() <= max_vertices));
        }
    }
    out
}

/// Cubic plane graphs with at most `max_vertices` vertices built from the
/// 3-edge-connected ones by repeated 2-sums: every member has a 2-edge-cut,
/// and nesting the sums yields chains and trees of cuts.
pub fn two_sum_corpus(max_vertices: usize) -> Corpus {
    let mut c = Corpus::new(format!("nested 2-sums max_vertices={max_vertices}"));
    let pieces = three_connected_cubic(max_vertices / 2);
    let mut frontier = pieces.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &pieces {
                if a.vertex_count() + b.vertex_count() <= max_vertices {
                    next.extend(sums_into(&mut c, a, b));
                }
            }
        }
        frontier = next;
    }
    c
}

/// Inserts every 2-sum of `a` and `b`, returning the new members.
fn sums_into(c: &mut Corpus, a: &PlaneGraph, b: &PlaneGraph) -> Vec<PlaneGraph> {
    let mut fresh = Vec::new();
    for ea in a.edges() {
        for eb in b.edges() {
            for cross in [false, true] {
                if let Ok(s) = two_sum(a, ea, b, eb, cross) {
                    if c.insert(s.clone()) {
                        fresh.push(s);
                    }
                }
            }
        }
    }
    fresh
}

/// Joins `a` and `b` across edges `ea = p_1 p_2` and `eb = q_1 q_2`: both are
/// deleted and replaced by `p_1 q_1`, `p_2 q_2` (or `p_1 q_2`, `p_2 q_1` with
/// `cross`). The mirror image of `b` is used when needed for planarity.
pub fn two_sum(a: &PlaneGraph, ea: EdgeId, b: &PlaneGraph, eb: EdgeId, cross: bool) -> Result<PlaneGraph> {
    let (a, _, aemap) = a.compact_with_edges();
    let (b, _, bemap) = b.compact_with_edges();
    let (ea, eb) = (
        aemap[ea].ok_or_else(|| Error::Precondition("no such edge".into()))?,
        bemap[eb].ok_or_else(|| Error::Precondition("no such edge".into()))?,
    );
    let na = a.vertex_count();
    let (p1, p2) = a.endpoints(ea);
    let (mut q1, mut q2) = b.endpoints(eb);
    if cross {
        std::mem::swap(&mut q1, &mut q2);
    }
    if p1 == p2 || q1 == q2 {
        return Err(Error::Precondition("cannot 2-sum along a loop".into()));
    }
    let mut last = Err(Error::NonZeroGenus(1));
    for mirror in [false, true] {
        let mut endpoints: Vec<(VertexId, VertexId)> = Vec::new();
        let mut id_a = vec![usize::MAX; a.edge_slots()];
        let mut id_b = vec![usize::MAX; b.edge_slots()];
        for e in a.edges().filter(|&e| e != ea) {
            id_a[e] = endpoints.len();
            endpoints.push(a.endpoints(e));
        }
        for e in b.edges().filter(|&e| e != eb) {
            id_b[e] = endpoints.len();
            let (x, y) = b.endpoints(e);
            endpoints.push((x + na, y + na));
        }
        let j1 = endpoints.len();
        endpoints.push((p1, q1 + na));
        let j2 = endpoints.len();
        endpoints.push((p2, q2 + na));
        let mut rotation: Vec<Vec<EdgeId>> = Vec::new();
        for v in a.vertices() {
            rotation.push(
                a.darts_at(v)
                    .map(|d| {
                        let e = d >> 1;
                        if e == ea {
                            if v == p1 { j1 } else { j2 }
                        } else {
                            id_a[e]
                        }
                    })
                    .collect(),
            );
        }
        for v in b.vertices() {
            let mut r: Vec<EdgeId> = b
                .darts_at(v)
                .map(|d| {
                    let e = d >> 1;
                    if e == eb {
                        if v == q1 { j1 } else { j2 }
                    } else {
                        id_b[e]
                    }
                })
                .collect();
            if mirror {
                r.reverse();
            }
            rotation.push(r);
        }
        match PlaneGraph::from_edge_rotation(na + b.vertex_count(), &endpoints, &rotation) {
            Ok(g) => return Ok(g),
            Err(e) => last = Err(e),
        }
    }
    last
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = triangulation_levels(8).iter().map(|c| c.len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn flip_closure_is_a_fixpoint() {
        let mut c = enumerate_triangulations(7).unwrap();
        let before = c.len();
        close_under_flips(&mut c);
        assert_eq!(c.len(), before);
    }

    #[test]
    fn two_sum_of_two_k4_is_cubic_with_a_cut() {
        let g = two_sum(&named::k4(), 0, &named::k4(), 0, false).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert!(g.is_cubic());
        assert!(g.is_two_edge_connected());
        assert!(!g.two_edge_cuts().is_empty());
    }

    #[test]
    fn cubic_corpus_is_three_edge_connected() {
        let c = cubic_corpus(12);
        assert_eq!(c.len(), 1 + 1 + 1 + 2 + 5 + 14);
        assert!(c.graphs().all(|g| g.is_cubic() && g.two_edge_cuts().is_empty()));
    }

    #[test]
    fn two_sum_corpus_members_have_cuts() {
        let c = two_sum_corpus(10);
        assert!(!c.is_empty());
        for g in c.graphs() {
            assert!(g.is_cubic() && g.is_two_edge_connected() && g.vertex_count() <= 10);
            assert!(!g.two_edge_cuts().is_empty());
        }
    }
}
