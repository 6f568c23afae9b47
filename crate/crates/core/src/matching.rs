//! Perfect matchings on plane multigraphs, backed by petgraph's blossom search.

use std::collections::HashMap;

use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};

use crate::planegraph::{EdgeId, PlaneGraph, VertexId};

/// A perfect matching of `g` minus the vertices in `removed`, as edge ids, or
/// `None` if there is none. Loops are ignored; of several parallel edges the
/// lowest id is used.
pub(crate) fn perfect_matching_without(g: &PlaneGraph, removed: &[VertexId]) -> Option<Vec<EdgeId>> {
    matching_avoiding(g, removed, &[])
}

fn matching_avoiding(g: &PlaneGraph, removed: &[VertexId], banned: &[EdgeId]) -> Option<Vec<EdgeId>> {
    let mut dead = vec![false; g.vertex_slots()];
    for &v in removed {
        dead[v] = true;
    }
    let mut node = vec![NodeIndex::end(); g.vertex_slots()];
    let mut pg: UnGraph<VertexId, ()> = UnGraph::default();
    for v in g.vertices().filter(|&v| !dead[v]) {
        node[v] = pg.add_node(v);
    }
    let mut edge_of_pair: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        if u == v || dead[u] || dead[v] || banned.contains(&e) {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if let std::collections::hash_map::Entry::Vacant(slot) = edge_of_pair.entry(key) {
            slot.insert(e);
            pg.add_edge(node[u], node[v], ());
        }
    }
    let m = maximum_matching(&pg);
    if !m.is_perfect() {
        return None;
    }
    let mut out: Vec<EdgeId> = m
        .edges()
        .map(|(a, b)| {
            let (u, v) = (pg[a], pg[b]);
            edge_of_pair[&(u.min(v), u.max(v))]
        })
        .collect();
    out.sort_unstable();
    Some(out)
}

/// A perfect matching of `g` containing edge `e`, or `None`.
pub(crate) fn perfect_matching_through(g: &PlaneGraph, e: EdgeId) -> Option<Vec<EdgeId>> {
    let (u, v) = g.endpoints(e);
    if u == v {
        return None;
    }
    let mut m = perfect_matching_without(g, &[u, v])?;
    m.push(e);
    m.sort_unstable();
    Some(m)
}

/// A perfect matching of `g` containing every edge of `through` and none of
/// `banned`, or `None`.
pub(crate) fn perfect_matching_with(g: &PlaneGraph, through: &[EdgeId], banned: &[EdgeId]) -> Option<Vec<EdgeId>> {
    let mut removed = Vec::new();
    for &e in through {
        let (u, v) = g.endpoints(e);
        if u == v || removed.contains(&u) || removed.contains(&v) || banned.contains(&e) {
            return None;
        }
        removed.extend([u, v]);
    }
    let mut m = matching_avoiding(g, &removed, banned)?;
    m.extend_from_slice(through);
    m.sort_unstable();
    Some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planegraph::named::*;

    #[test]
    fn through_every_edge_of_small_cubic_graphs() {
        for g in [k4(), theta(), prism(), cube(), circular_ladder(5)] {
            for e in g.edges() {
                let m = perfect_matching_through(&g, e).unwrap();
                assert!(m.contains(&e));
                let mut covered = vec![0; g.vertex_slots()];
                for &f in &m {
                    let (a, b) = g.endpoints(f);
                    covered[a] += 1;
                    covered[b] += 1;
                }
                assert!(g.vertices().all(|v| covered[v] == 1));
            }
        }
    }

    #[test]
    fn banned_edges_are_avoided() {
        let g = prism();
        let rung = g.dart_between(0, 3).unwrap() >> 1;
        let tri = g.dart_between(1, 2).unwrap() >> 1;
        let m = perfect_matching_with(&g, &[rung], &[tri]).unwrap();
        assert!(m.contains(&rung) && !m.contains(&tri));
        assert_eq!(m.len(), 3);
        let other = g.dart_between(4, 5).unwrap() >> 1;
        assert!(perfect_matching_with(&g, &[rung, other], &[tri]).is_none());
    }

    #[test]
    fn odd_remainder_has_no_matching() {
        assert!(perfect_matching_without(&k4(), &[0]).is_none());
    }
}
