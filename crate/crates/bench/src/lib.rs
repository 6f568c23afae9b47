//! Benchmark inputs shared by the criterion targets.

use chordfactor::oracle::random_triangulation;
use chordfactor::{EdgeId, NearTriangulation, PlaneGraph};

/// A random triangulation on `n` vertices labeled at its first dart.
pub fn labeled_triangulation(n: usize, seed: u64) -> NearTriangulation {
    NearTriangulation::new(random_triangulation(n, seed), 0).expect("random triangulations are simple")
}

/// The cubic dual of a random triangulation on `n` vertices, with an edge.
/// Duals of simple triangulations are 3-edge-connected, so every edge works.
pub fn cubic_with_edge(n: usize, seed: u64) -> (PlaneGraph, EdgeId) {
    let g = random_triangulation(n, seed).dual();
    let e = g.edges().next().expect("nonempty");
    (g, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_have_the_requested_size() {
        assert_eq!(labeled_triangulation(40, 1).graph().vertex_count(), 40);
        let (g, e) = cubic_with_edge(40, 1);
        assert_eq!(g.vertex_count(), 2 * 40 - 4);
        assert!(g.is_cubic() && g.is_edge(e));
    }
}
