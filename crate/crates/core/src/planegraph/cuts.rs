use super::{Dart, EdgeId, PlaneGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutKind {
    Bridge,
    TwoEdgeCut,
    None,
}

/// Result of [`PlaneGraph::edge_cut_status`]. For `Bridge` and `TwoEdgeCut`
/// the sides are the two components left after deleting `edges`; for `None`
/// both `edges` and the sides are empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCutReport {
    pub kind: CutKind,
    pub edges: Vec<EdgeId>,
    pub sides: (Vec<VertexId>, Vec<VertexId>),
}

/// Connectivity queries on a graph with some vertices and edges masked out.
pub(crate) struct Connectivity<'a> {
    g: &'a PlaneGraph,
    dead_vertex: Vec<bool>,
    dead_edge: Vec<bool>,
}

impl<'a> Connectivity<'a> {
    pub(crate) fn new(g: &'a PlaneGraph) -> Self {
        Connectivity {
            g,
            dead_vertex: vec![false; g.vertex_slots()],
            dead_edge: vec![false; g.edge_slots()],
        }
    }

    pub(crate) fn without_vertices(mut self, vs: &[VertexId]) -> Self {
        for &v in vs {
            self.dead_vertex[v] = true;
            for d in self.g.darts_at(v) {
                self.dead_edge[d >> 1] = true;
            }
        }
        self
    }

    pub(crate) fn without_edges(mut self, es: &[EdgeId]) -> Self {
        for &e in es {
            self.dead_edge[e] = true;
        }
        self
    }

    fn live_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.g.vertices().filter(|&v| !self.dead_vertex[v])
    }

    /// Component label per vertex slot (`usize::MAX` for masked vertices) and the count.
    pub(crate) fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.g.vertex_slots()];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in self.live_vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for d in self.g.darts_at(v) {
                    if self.dead_edge[d >> 1] {
                        continue;
                    }
                    let w = self.g.head(d);
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub(crate) fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Bridges of the masked multigraph (parallel edges are never bridges).
    pub(crate) fn bridges(&self) -> Vec<EdgeId> {
        let g = self.g;
        let n = g.vertex_slots();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = Vec::new();
        let mut time = 0;
        // frames: (vertex, edge used to enter it, next dart to scan)
        let mut stack: Vec<(VertexId, Option<EdgeId>, Option<Dart>)> = Vec::new();
        for s in self.live_vertices() {
            if disc[s] != usize::MAX {
                continue;
            }
            disc[s] = time;
            low[s] = time;
            time += 1;
            stack.push((s, None, g.dart_at(s)));
            while let Some(top) = stack.last_mut() {
                let (v, via) = (top.0, top.1);
                if let Some(d) = top.2 {
                    let n = g.next(d);
                    top.2 = if Some(n) == g.dart_at(v) { None } else { Some(n) };
                    let e = d >> 1;
                    if self.dead_edge[e] || Some(e) == via {
                        continue;
                    }
                    let w = g.head(d);
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, Some(e), g.dart_at(w)));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(via.unwrap());
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl PlaneGraph {
    pub fn bridges(&self) -> Vec<EdgeId> {
        Connectivity::new(self).bridges()
    }

    pub fn is_two_edge_connected(&self) -> bool {
        self.is_connected() && self.bridges().is_empty()
    }

    /// Every 2-edge-cut `{e, f}` with `e < f`, in lexicographic order.
    pub fn two_edge_cuts(&self) -> Vec<(EdgeId, EdgeId)> {
        let mut out = Vec::new();
        for e in self.edges() {
            for f in Connectivity::new(self).without_edges(&[e]).bridges() {
                if f > e {
                    out.push((e, f));
                }
            }
        }
        out
    }

    /// Is `e` a bridge, in a 2-edge-cut (with the lowest-id partner), or neither?
    pub fn edge_cut_status(&self, e: EdgeId) -> EdgeCutReport {
        let none = EdgeCutReport {
            kind: CutKind::None,
            edges: Vec::new(),
            sides: (Vec::new(), Vec::new()),
        };
        if !self.is_edge(e) {
            return none;
        }
        let (kind, edges) = if self.bridges().contains(&e) {
            (CutKind::Bridge, vec![e])
        } else if let Some(&f) = Connectivity::new(self).without_edges(&[e]).bridges().first() {
            (CutKind::TwoEdgeCut, vec![e.min(f), e.max(f)])
        } else {
            return none;
        };
        let sides = self.sides_of_cut(&edges);
        EdgeCutReport { kind, edges, sides }
    }

    /// Vertex sets of the two components after deleting `cut`; the first
    /// side contains the lowest-numbered endpoint of `cut[0]`.
    pub fn sides_of_cut(&self, cut: &[EdgeId]) -> (Vec<VertexId>, Vec<VertexId>) {
        let (comp, _) = Connectivity::new(self).without_edges(cut).components();
        let (u, v) = self.endpoints(cut[0]);
        let anchor = comp[u.min(v)];
        let mut a = Vec::new();
        let mut b = Vec::new();
        for w in self.vertices() {
            if comp[w] == anchor {
                a.push(w);
            } else {
                b.push(w);
            }
        }
        (a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    /// Two copies of K4 with one edge removed from each, joined by two edges
    /// between the degree-2 vertices.
    fn barbell() -> PlaneGraph {
        // block A: 0,1,2,3 without edge 0-1; block B: 4,5,6,7 without edge 4-5
        // joins 0-4 and 1-5
        let adj = vec![
            vec![4, 2, 3],
            vec![3, 2, 5],
            vec![0, 1, 3],
            vec![0, 2, 1],
            vec![0, 7, 6],
            vec![1, 6, 7],
            vec![4, 7, 5],
            vec![4, 5, 6],
        ];
        PlaneGraph::build_from_rotation(&adj).unwrap()
    }

    fn brute_cuts(g: &PlaneGraph) -> Vec<(EdgeId, EdgeId)> {
        let es: Vec<EdgeId> = g.edges().collect();
        let mut out = Vec::new();
        for (i, &e) in es.iter().enumerate() {
            for &f in &es[i + 1..] {
                let c = Connectivity::new(g).without_edges(&[e, f]);
                let single_e = Connectivity::new(g).without_edges(&[e]).is_connected();
                let single_f = Connectivity::new(g).without_edges(&[f]).is_connected();
                if !c.is_connected() && single_e && single_f {
                    out.push((e, f));
                }
            }
        }
        out
    }

    #[test]
    fn theta_has_no_cuts() {
        let g = theta();
        for e in g.edges() {
            assert_eq!(g.edge_cut_status(e).kind, CutKind::None);
        }
    }

    #[test]
    fn barbell_joins_form_a_two_edge_cut() {
        let g = barbell();
        g.require_cubic().unwrap();
        assert_eq!(g.two_edge_cuts(), brute_cuts(&g));
        let j0 = g.dart_between(0, 4).unwrap() >> 1;
        let j1 = g.dart_between(1, 5).unwrap() >> 1;
        let r = g.edge_cut_status(j0);
        assert_eq!(r.kind, CutKind::TwoEdgeCut);
        assert_eq!(r.edges, vec![j0.min(j1), j0.max(j1)]);
        assert_eq!(r.sides, (vec![0, 1, 2, 3], vec![4, 5, 6, 7]));
    }

    #[test]
    fn path_edge_is_a_bridge() {
        let g = PlaneGraph::build_from_rotation(&[vec![1], vec![0, 2], vec![1]]).unwrap();
        let r = g.edge_cut_status(0);
        assert_eq!(r.kind, CutKind::Bridge);
        assert_eq!(g.bridges(), vec![0, 1]);
    }

    #[test]
    fn prism_and_cube_are_three_edge_connected() {
        for g in [prism(), cube(), k4()] {
            assert!(g.two_edge_cuts().is_empty());
            assert!(g.is_two_edge_connected());
        }
        let g = circular_ladder(2);
        assert_eq!(g.two_edge_cuts(), brute_cuts(&g));
        assert!(!g.two_edge_cuts().is_empty());
    }
}
