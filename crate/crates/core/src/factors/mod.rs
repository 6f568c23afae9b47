//! Perfect matchings, 2-factors and chord witnesses on cubic plane graphs.

mod chord;
mod same_cycle;
mod separating;

use crate::error::{Error, Result};
use crate::planegraph::{EdgeId, PlaneGraph, VertexId};

pub use chord::{
    coloring_to_twofactor, dual_for_edge, perfect_matching_through_edge, two_factor_with_chord,
    twofactor_to_coloring,
};
pub use same_cycle::{same_cycle_2factor_bipartite, same_cycle_2factor_facial, SameCycleWitness};
pub use separating::{separating_pm_preconditions, separating_pm_through_edge};
pub(crate) use same_cycle::{factor_avoiding, factor_containing};

/// A set of pairwise non-adjacent edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<EdgeId>,
    perfect: bool,
    separating: bool,
}

impl Matching {
    /// Validates `edges` as a matching of `g`. `separating` is set for perfect
    /// matchings of cubic graphs whose complement has two or more cycles.
    pub fn new(g: &PlaneGraph, mut edges: Vec<EdgeId>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let mut covered = vec![false; g.vertex_slots()];
        for &e in &edges {
            if !g.is_edge(e) {
                return Err(Error::Precondition(format!("{e} is not an edge")));
            }
            let (u, v) = g.endpoints(e);
            if u == v || covered[u] || covered[v] {
                return Err(Error::Precondition(format!("edge {e} meets another matching edge")));
            }
            covered[u] = true;
            covered[v] = true;
        }
        let perfect = g.vertices().all(|v| covered[v]);
        let mut m = Matching { edges, perfect, separating: false };
        if perfect && g.is_cubic() {
            m.separating = m.complement(g)?.cycle_count() >= 2;
        }
        Ok(m)
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn is_perfect(&self) -> bool {
        self.perfect
    }

    pub fn is_separating(&self) -> bool {
        self.separating
    }

    /// The complementary 2-factor of a perfect matching in a cubic graph.
    pub fn complement(&self, g: &PlaneGraph) -> Result<TwoFactor> {
        let rest = g.edges().filter(|&e| !self.contains(e)).collect();
        TwoFactor::new(g, rest)
    }
}

/// A closed walk given by its vertices and the edges between consecutive ones;
/// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A spanning subgraph with every vertex of degree two, with its cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactor {
    edges: Vec<EdgeId>,
    cycles: Vec<Cycle>,
    cycle_of: Vec<usize>,
}

impl TwoFactor {
    /// Validates `edges` as a 2-factor of `g` and decomposes it into cycles.
    pub fn new(g: &PlaneGraph, mut edges: Vec<EdgeId>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let slots = g.vertex_slots();
        let mut inc: Vec<Vec<EdgeId>> = vec![Vec::new(); slots];
        for &e in &edges {
            if !g.is_edge(e) {
                return Err(Error::Precondition(format!("{e} is not an edge")));
            }
            let (u, v) = g.endpoints(e);
            inc[u].push(e);
            inc[v].push(e);
        }
        if let Some(v) = g.vertices().find(|&v| inc[v].len() != 2) {
            return Err(Error::Precondition(format!(
                "vertex {v} has degree {} in the edge set",
                inc[v].len()
            )));
        }
        let mut cycle_of = vec![usize::MAX; slots];
        let mut cycles = Vec::new();
        for start in g.vertices() {
            if cycle_of[start] != usize::MAX {
                continue;
            }
            let idx = cycles.len();
            let mut c = Cycle { vertices: Vec::new(), edges: Vec::new() };
            let mut v = start;
            let mut via = inc[start][0];
            loop {
                cycle_of[v] = idx;
                c.vertices.push(v);
                c.edges.push(via);
                let (x, y) = g.endpoints(via);
                let w = if x == v { y } else { x };
                if w == start {
                    break;
                }
                via = if inc[w][0] == via { inc[w][1] } else { inc[w][0] };
                v = w;
            }
            cycles.push(c);
        }
        Ok(TwoFactor { edges, cycles, cycle_of })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.cycles.len() == 1
    }

    /// Index of the cycle through `v`.
    pub fn cycle_of(&self, v: VertexId) -> usize {
        self.cycle_of[v]
    }

    /// Index of the cycle containing edge `e`, if `e` is in the factor.
    pub fn cycle_of_edge(&self, g: &PlaneGraph, e: EdgeId) -> Option<usize> {
        self.contains(e).then(|| self.cycle_of[g.endpoints(e).0])
    }

    /// The complementary perfect matching in a cubic graph.
    pub fn complement(&self, g: &PlaneGraph) -> Result<Matching> {
        let rest = g.edges().filter(|&e| !self.contains(e)).collect();
        Matching::new(g, rest)
    }
}

/// A 2-factor together with an edge outside it whose ends lie on one of its cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordWitness {
    pub factor: TwoFactor,
    pub cycle: usize,
    pub chord: EdgeId,
}

impl ChordWitness {
    /// Builds and checks a witness; `cycle` is read off the chord's endpoints.
    pub fn new(g: &PlaneGraph, factor: TwoFactor, chord: EdgeId) -> Result<Self> {
        let w = ChordWitness { cycle: factor.cycle_of(g.endpoints(chord).0), factor, chord };
        w.validate(g)?;
        Ok(w)
    }

    /// Chord outside the factor, both ends on the named cycle, and contracting
    /// that cycle turns the chord into a loop.
    pub fn validate(&self, g: &PlaneGraph) -> Result<()> {
        let bad = |m: &str| Err(Error::Precondition(format!("invalid chord witness: {m}")));
        if !g.is_edge(self.chord) {
            return bad("chord is not an edge");
        }
        if self.factor.contains(self.chord) {
            return bad("chord lies in the 2-factor");
        }
        let (u, v) = g.endpoints(self.chord);
        if u == v {
            return bad("chord is a loop");
        }
        let Some(c) = self.factor.cycles.get(self.cycle) else {
            return bad("no such cycle");
        };
        if !c.vertices.contains(&u) || !c.vertices.contains(&v) {
            return bad("chord endpoints are not on the cycle");
        }
        let mut contracted = (0..g.vertex_slots()).collect::<Vec<_>>();
        for &e in &c.edges {
            let (x, y) = g.endpoints(e);
            let (rx, ry) = (root(&mut contracted, x), root(&mut contracted, y));
            contracted[rx] = ry;
        }
        if root(&mut contracted, u) != root(&mut contracted, v) {
            return bad("chord does not become a loop after contracting the cycle");
        }
        Ok(())
    }
}

fn root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_special;
    use crate::oracle::{cubic_corpus, enumerate_2factors, two_sum_corpus};
    use crate::planegraph::named::*;

    fn edge(g: &PlaneGraph, u: VertexId, v: VertexId) -> EdgeId {
        g.dart_between(u, v).expect("adjacent") >> 1
    }

    fn pairs(g: &PlaneGraph, edges: &[EdgeId]) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<_> = edges
            .iter()
            .map(|&e| {
                let (u, v) = g.endpoints(e);
                (u.min(v), u.max(v))
            })
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn matching_through_an_edge_of_k4_is_forced() {
        let g = k4();
        let m = perfect_matching_through_edge(&g, edge(&g, 0, 1)).unwrap();
        assert_eq!(pairs(&g, m.edges()), vec![(0, 1), (2, 3)]);
        assert!(m.is_perfect() && !m.is_separating());
    }

    #[test]
    fn matching_through_theta_edge_is_that_edge() {
        let g = theta();
        for e in g.edges() {
            assert_eq!(perfect_matching_through_edge(&g, e).unwrap().edges(), &[e]);
        }
    }

    #[test]
    fn matching_through_prism_rung() {
        let g = prism();
        let m = perfect_matching_through_edge(&g, edge(&g, 0, 3)).unwrap();
        let p = pairs(&g, m.edges());
        assert!(p == vec![(0, 3), (1, 4), (2, 5)] || p == vec![(0, 3), (1, 2), (4, 5)]);
    }

    #[test]
    fn two_factor_of_k4_is_a_four_cycle_with_chord() {
        let g = k4();
        let e = edge(&g, 0, 1);
        let w = two_factor_with_chord(&g, e).unwrap();
        assert!(w.factor.is_hamiltonian());
        assert_eq!(pairs(&g, w.factor.complement(&g).unwrap().edges()), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn prism_rung_is_a_chord_of_a_hamiltonian_cycle() {
        let g = prism();
        let w = two_factor_with_chord(&g, edge(&g, 0, 3)).unwrap();
        assert!(w.factor.is_hamiltonian());
        assert_eq!(w.factor.cycles()[0].len(), 6);
    }

    #[test]
    fn every_edge_of_the_cube_gets_a_witness() {
        let g = cube();
        let all = enumerate_2factors(&g).unwrap();
        for e in g.edges() {
            let w = two_factor_with_chord(&g, e).unwrap();
            w.validate(&g).unwrap();
            assert!(all.iter().any(|f| f.edges() == w.factor.edges()));
        }
    }

    #[test]
    fn edges_in_two_edge_cuts_are_rejected() {
        let g = circular_ladder(2);
        let (a, _) = g.two_edge_cuts()[0];
        assert!(matches!(two_factor_with_chord(&g, a), Err(Error::InTwoEdgeCut(_))));
    }

    #[test]
    fn factor_coloring_round_trip_on_small_cubic_graphs() {
        for g in cubic_corpus(12).graphs().chain(two_sum_corpus(12).graphs()) {
            for e in g.edges() {
                let Ok(w) = two_factor_with_chord(g, e) else { continue };
                let t = g.dual();
                let f = twofactor_to_coloring(g, &w.factor, e).unwrap();
                let nt = dual_for_edge(g, e).unwrap();
                assert!(verify_special(&nt, &f));
                let back = coloring_to_twofactor(g, &t, &f, e).unwrap();
                assert_eq!(back.factor.edges(), w.factor.edges());
            }
        }
    }

    #[test]
    fn coloring_with_a_monochromatic_face_is_rejected() {
        let g = k4();
        let t = g.dual();
        let f = crate::coloring::Coloring::new(t.vertex_slots());
        assert!(coloring_to_twofactor(&g, &t, &f, 0).is_err());
    }

    #[test]
    fn factor_without_the_chord_is_rejected() {
        let g = prism();
        let e = edge(&g, 0, 3);
        let tri = TwoFactor::new(&g, vec![edge(&g, 0, 1), edge(&g, 1, 2), edge(&g, 0, 2), edge(&g, 3, 4), edge(&g, 4, 5), edge(&g, 3, 5)])
            .unwrap();
        assert!(twofactor_to_coloring(&g, &tri, e).is_err());
    }

    #[test]
    fn separating_matching_through_prism_rung_is_the_rungs() {
        let g = prism();
        let m = separating_pm_through_edge(&g, edge(&g, 0, 3)).unwrap();
        assert_eq!(pairs(&g, m.edges()), vec![(0, 3), (1, 4), (2, 5)]);
        assert_eq!(m.complement(&g).unwrap().cycle_count(), 2);
    }

    #[test]
    fn separating_matching_on_k4_fails_the_precondition() {
        let g = k4();
        assert!(matches!(separating_pm_through_edge(&g, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn separating_matchings_on_the_cube() {
        let g = cube();
        for e in g.edges() {
            let m = separating_pm_through_edge(&g, e).unwrap();
            assert!(m.contains(e) && m.is_separating());
        }
    }

    #[test]
    fn facial_pairs() {
        let g = prism();
        let w = same_cycle_2factor_facial(&g, edge(&g, 0, 1), edge(&g, 1, 2)).unwrap();
        w.validate(&g).unwrap();
        let g = cube();
        for face in g.faces() {
            for i in 0..face.len() {
                for j in 0..face.len() {
                    if i != j {
                        let (a, b) = (face[i] >> 1, face[j] >> 1);
                        same_cycle_2factor_facial(&g, a, b).unwrap().validate(&g).unwrap();
                    }
                }
            }
        }
        assert!(same_cycle_2factor_facial(&g, edge(&g, 0, 1), edge(&g, 6, 7)).is_err());
    }

    #[test]
    fn bipartite_pairs_on_ladders() {
        for k in [2, 4, 6, 8] {
            let g = circular_ladder(k);
            for a in g.edges() {
                for b in g.edges() {
                    same_cycle_2factor_bipartite(&g, a, b).unwrap().validate(&g).unwrap();
                }
            }
        }
        let g = theta();
        let w = same_cycle_2factor_bipartite(&g, 0, 1).unwrap();
        assert_eq!(w.factor.cycles()[0].len(), 2);
        assert!(matches!(same_cycle_2factor_bipartite(&prism(), 0, 1), Err(Error::NotBipartite)));
    }
}
