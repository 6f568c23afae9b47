//! Exhaustive ground truth for small instances, plus the graph corpora used to
//! exercise the constructive algorithms.

mod corpus;
mod random;

use crate::coloring::{BoundaryAssignment, Color, Coloring};
use crate::error::{Error, Result};
use crate::factors::{Matching, TwoFactor};
use crate::planegraph::{EdgeId, NearTriangulation, PlaneGraph, VertexId};

pub use corpus::{
    cubic_corpus, enumerate_triangulations, four_sided_corpus, triangulation_levels, two_sum, two_sum_corpus, Corpus,
};
pub use random::random_triangulation;

/// Largest graph accepted by [`enumerate_perfect_matchings`].
pub const DEFAULT_MAX_MATCHING_VERTICES: usize = 24;
/// Largest near-triangulation accepted by [`brute_special_feasible`].
pub const DEFAULT_MAX_BRUTE_VERTICES: usize = 20;

/// All perfect matchings of `g`, parallel edges counted separately.
pub fn enumerate_perfect_matchings(g: &PlaneGraph) -> Result<Vec<Matching>> {
    enumerate_perfect_matchings_capped(g, DEFAULT_MAX_MATCHING_VERTICES)
}

pub fn enumerate_perfect_matchings_capped(g: &PlaneGraph, cap: usize) -> Result<Vec<Matching>> {
    if g.vertex_count() > cap {
        return Err(Error::BoundExceeded { what: "vertices", value: g.vertex_count(), bound: cap });
    }
    raw_perfect_matchings(g)
        .into_iter()
        .map(|m| Matching::new(g, m))
        .collect()
}

/// Edge sets of all perfect matchings, by backtracking on the lowest
/// uncovered vertex.
pub(crate) fn raw_perfect_matchings(g: &PlaneGraph) -> Vec<Vec<EdgeId>> {
    let mut inc: Vec<Vec<EdgeId>> = vec![Vec::new(); g.vertex_slots()];
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        if u != v {
            inc[u].push(e);
            inc[v].push(e);
        }
    }
    for l in &mut inc {
        l.sort_unstable();
    }
    let order: Vec<VertexId> = g.vertices().collect();
    let mut covered = vec![false; g.vertex_slots()];
    let mut cur = Vec::new();
    let mut out = Vec::new();
    fn go(
        g: &PlaneGraph,
        inc: &[Vec<EdgeId>],
        order: &[VertexId],
        i: usize,
        covered: &mut [bool],
        cur: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        let mut i = i;
        while i < order.len() && covered[order[i]] {
            i += 1;
        }
        if i == order.len() {
            out.push(cur.clone());
            return;
        }
        let v = order[i];
        for &e in &inc[v] {
            let (a, b) = g.endpoints(e);
            let w = if a == v { b } else { a };
            if covered[w] {
                continue;
            }
            covered[v] = true;
            covered[w] = true;
            cur.push(e);
            go(g, inc, order, i + 1, covered, cur, out);
            cur.pop();
            covered[v] = false;
            covered[w] = false;
        }
    }
    go(g, &inc, &order, 0, &mut covered, &mut cur, &mut out);
    out
}

/// All 2-factors of a cubic graph, as complements of its perfect matchings.
pub fn enumerate_2factors(g: &PlaneGraph) -> Result<Vec<TwoFactor>> {
    g.require_cubic()?;
    raw_perfect_matchings(g)
        .into_iter()
        .map(|m| {
            let rest = g.edges().filter(|e| !m.contains(e)).collect();
            TwoFactor::new(g, rest)
        })
        .collect()
}

/// Does some special coloring of `nt` extend the boundary colors `s`?
pub fn brute_special_feasible(nt: &NearTriangulation, s: &BoundaryAssignment) -> Result<bool> {
    brute_special_feasible_capped(nt, s, DEFAULT_MAX_BRUTE_VERTICES)
}

pub fn brute_special_feasible_capped(nt: &NearTriangulation, s: &BoundaryAssignment, cap: usize) -> Result<bool> {
    Ok(brute_special_coloring(nt, s, cap)?.is_some())
}

/// A special coloring extending `s`, found by exhaustive search over the
/// interior vertices in id order.
pub fn brute_special_coloring(nt: &NearTriangulation, s: &BoundaryAssignment, cap: usize) -> Result<Option<Coloring>> {
    let g = nt.graph();
    if g.vertex_count() > cap {
        return Err(Error::BoundExceeded { what: "vertices", value: g.vertex_count(), bound: cap });
    }
    let b = nt.boundary();
    if s.len() != b.len() {
        return Err(Error::Precondition(format!("assignment {s} does not fit a {}-sided boundary", b.len())));
    }
    let (v1, v2) = (b[0], b[1]);
    let slots = g.vertex_slots();
    let mut rank = vec![usize::MAX; slots];
    let mut order: Vec<VertexId> = b.to_vec();
    order.extend(g.vertices().filter(|v| !b.contains(v)));
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    // constraints are checked when their last vertex (by rank) is colored
    let mut edges_at: Vec<Vec<VertexId>> = vec![Vec::new(); order.len()];
    for e in g.edges() {
        let (x, y) = g.endpoints(e);
        if (x == v1 && y == v2) || (x == v2 && y == v1) {
            continue;
        }
        let (lo, hi) = if rank[x] < rank[y] { (x, y) } else { (y, x) };
        edges_at[rank[hi]].push(lo);
    }
    let (fidx, _) = g.face_index();
    let outer = fidx[nt.outer()];
    let mut faces_at: Vec<Vec<Vec<VertexId>>> = vec![Vec::new(); order.len()];
    for f in g.faces() {
        if fidx[f[0]] == outer {
            continue;
        }
        let vs: Vec<VertexId> = f.iter().map(|&d| g.origin(d)).collect();
        let last = vs.iter().map(|&v| rank[v]).max().unwrap();
        faces_at[last].push(vs);
    }
    let mut col: Vec<Color> = vec![Color::A; slots];
    let ok = |col: &[Color], i: usize| -> bool {
        let v = order[i];
        edges_at[i].iter().all(|&w| !col[v].is_ab_pair(col[w]))
            && faces_at[i].iter().all(|f| f.iter().any(|&x| col[x] != col[f[0]]))
    };
    for (&v, &c) in b.iter().zip(&s.0) {
        col[v] = c;
    }
    if col[v1] != Color::A || col[v2] != Color::B {
        return Ok(None);
    }
    for i in 0..b.len() {
        if !ok(&col, i) {
            return Ok(None);
        }
    }
    fn go(i: usize, order: &[VertexId], col: &mut Vec<Color>, ok: &dyn Fn(&[Color], usize) -> bool) -> bool {
        if i == order.len() {
            return true;
        }
        for c in Color::ALL {
            col[order[i]] = c;
            if ok(col, i) && go(i + 1, order, col, ok) {
                return true;
            }
        }
        false
    }
    if go(b.len(), &order, &mut col, &ok) {
        Ok(Some(Coloring::from_vec(col)))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planegraph::named::*;

    #[test]
    fn matching_counts() {
        assert_eq!(enumerate_perfect_matchings(&theta()).unwrap().len(), 3);
        assert_eq!(enumerate_perfect_matchings(&k4()).unwrap().len(), 3);
        assert_eq!(enumerate_perfect_matchings(&prism()).unwrap().len(), 4);
        assert_eq!(enumerate_perfect_matchings(&cube()).unwrap().len(), 9);
    }

    #[test]
    fn two_factor_shapes() {
        let k4f = enumerate_2factors(&k4()).unwrap();
        assert!(k4f.iter().all(|f| f.is_hamiltonian()));
        let pf = enumerate_2factors(&prism()).unwrap();
        assert_eq!(pf.iter().filter(|f| f.is_hamiltonian()).count(), 3);
        assert_eq!(pf.iter().filter(|f| f.cycle_count() == 2).count(), 1);
        let cf = enumerate_2factors(&cube()).unwrap();
        assert_eq!(cf.len(), 9);
        assert!(cf.iter().any(|f| f.cycle_count() >= 2));
    }

    #[test]
    fn cap_is_enforced() {
        let g = circular_ladder(13);
        assert!(matches!(
            enumerate_perfect_matchings(&g),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn brute_feasibility_examples() {
        let t = NearTriangulation::with_boundary(k3(), &[0, 1, 2]).unwrap();
        assert!(brute_special_feasible(&t, &BoundaryAssignment::abc()).unwrap());
    }
}
