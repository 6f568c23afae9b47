use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::corpus::simple_flip_mut;
use crate::planegraph::{named, PlaneGraph};

/// A simple plane triangulation on `n >= 4` vertices: random face insertions
/// starting from the tetrahedron, then `10 n` attempted random flips.
/// Deterministic for a given seed.
pub fn random_triangulation(n: usize, seed: u64) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = named::k4();
    while g.vertex_count() < n.max(4) {
        let d = rng.random_range(0..2 * g.edge_slots());
        g.stack_vertex_mut(d).expect("faces of a simple triangulation are triangles");
    }
    for _ in 0..10 * n {
        let e = rng.random_range(0..g.edge_slots());
        simple_flip_mut(&mut g, e);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planegraph::CanonicalCode;

    #[test]
    fn tiny_is_the_tetrahedron() {
        let g = random_triangulation(4, 9);
        assert_eq!(CanonicalCode::of(&g), CanonicalCode::of(&named::k4()));
    }

    #[test]
    fn deterministic_and_valid() {
        let a = random_triangulation(100, 1);
        let b = random_triangulation(100, 1);
        assert_eq!(CanonicalCode::of(&a), CanonicalCode::of(&b));
        a.check_plane().unwrap();
        assert!(a.is_triangulation());
        assert_eq!(a.vertex_count(), 100);
        for v in a.vertices() {
            let mut nb = a.neighbors(v);
            nb.sort_unstable();
            nb.dedup();
            assert_eq!(nb.len(), a.degree(v));
        }
    }
}
