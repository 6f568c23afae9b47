use proptest::prelude::*;

use chordfactor::classify::{edge_in_separating_pm, forced_hamiltonian, Verdict};
use chordfactor::coloring::{special_3coloring, verify_special};
use chordfactor::factors::{perfect_matching_through_edge, two_factor_with_chord};
use chordfactor::io::{decode_planar_code, encode_planar_code};
use chordfactor::oracle::{enumerate_2factors, random_triangulation, two_sum};
use chordfactor::{BoundaryAssignment, CanonicalCode, CutKind, Error, NearTriangulation, PlaneGraph};

fn triangulation() -> impl Strategy<Value = PlaneGraph> {
    (4usize..40, any::<u64>()).prop_map(|(n, seed)| random_triangulation(n, seed))
}

fn small_cubic() -> impl Strategy<Value = PlaneGraph> {
    (4usize..8, any::<u64>()).prop_map(|(n, seed)| random_triangulation(n, seed).dual())
}

/// A 2-sum of two small 3-edge-connected cubic graphs.
fn two_summed() -> impl Strategy<Value = PlaneGraph> {
    (small_cubic(), small_cubic(), any::<prop::sample::Index>(), any::<prop::sample::Index>(), any::<bool>())
        .prop_map(|(a, b, i, j, cross)| {
            let ea = a.edges().nth(i.index(a.edge_count())).unwrap();
            let eb = b.edges().nth(j.index(b.edge_count())).unwrap();
            two_sum(&a, ea, &b, eb, cross).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_formula(g in triangulation()) {
        prop_assert_eq!(g.vertex_count() + g.face_count(), g.edge_count() + 2);
        let d = g.dual();
        prop_assert!(d.is_cubic());
        prop_assert_eq!(d.vertex_count(), g.face_count());
    }

    #[test]
    fn dual_of_dual_is_the_graph(g in triangulation()) {
        prop_assert_eq!(CanonicalCode::of(&g.dual().dual()), CanonicalCode::of(&g));
    }

    #[test]
    fn flipping_twice_restores_the_triangulation(g in triangulation(), i in any::<prop::sample::Index>()) {
        let e = g.edges().nth(i.index(g.edge_count())).unwrap();
        if let Ok(h) = g.flip(e) {
            prop_assert!(h.is_triangulation());
            let back = h.flip(e).unwrap();
            prop_assert_eq!(CanonicalCode::of(&back), CanonicalCode::of(&g));
        }
    }

    #[test]
    fn special_coloring_for_any_outer_dart(g in triangulation(), i in any::<prop::sample::Index>()) {
        let d = g.darts().nth(i.index(2 * g.edge_count())).unwrap();
        let nt = NearTriangulation::new(g, d).unwrap();
        let f = special_3coloring(&nt).unwrap();
        prop_assert!(verify_special(&nt, &f));
        prop_assert_eq!(f.restrict(nt.boundary()), BoundaryAssignment::abc());
    }

    #[test]
    fn chord_witness_for_any_edge_of_a_dual(g in triangulation(), i in any::<prop::sample::Index>()) {
        let c = g.dual();
        let e = c.edges().nth(i.index(c.edge_count())).unwrap();
        let w = two_factor_with_chord(&c, e).unwrap();
        prop_assert!(w.validate(&c).is_ok());
        prop_assert_eq!(w.chord, e);
    }

    #[test]
    fn matching_and_factor_complements_are_inverse(g in triangulation(), i in any::<prop::sample::Index>()) {
        let c = g.dual();
        let e = c.edges().nth(i.index(c.edge_count())).unwrap();
        let m = perfect_matching_through_edge(&c, e).unwrap();
        let f = m.complement(&c).unwrap();
        prop_assert_eq!(f.edges().len() + m.edges().len(), c.edge_count());
        prop_assert_eq!(f.complement(&c).unwrap(), m);
    }

    #[test]
    fn planar_code_round_trip(gs in prop::collection::vec(triangulation(), 0..4)) {
        let bytes = encode_planar_code(&gs).unwrap();
        let back = decode_planar_code(&bytes).unwrap();
        prop_assert_eq!(encode_planar_code(&back).unwrap(), bytes);
        for (a, b) in back.iter().zip(&gs) {
            prop_assert_eq!(CanonicalCode::of(a), CanonicalCode::of(b));
        }
    }

    #[test]
    fn two_sums_have_a_cut_and_every_edge_is_resolved(g in two_summed()) {
        prop_assert!(g.is_cubic() && g.is_two_edge_connected());
        prop_assert!(!g.two_edge_cuts().is_empty());
        for e in g.edges() {
            let in_cut = g.edge_cut_status(e).kind == CutKind::TwoEdgeCut;
            match two_factor_with_chord(&g, e) {
                Ok(w) => prop_assert!(!in_cut && w.validate(&g).is_ok()),
                Err(err) => prop_assert!(in_cut && err == Error::InTwoEdgeCut(e)),
            }
        }
    }

    #[test]
    fn classification_of_two_sums_matches_enumeration(g in two_summed()) {
        let factors = enumerate_2factors(&g).unwrap();
        for e in g.edges() {
            let forced = factors.iter().filter(|f| f.contains(e)).all(|f| f.is_hamiltonian());
            let sep = factors.iter().any(|f| !f.contains(e) && f.cycle_count() >= 2);
            prop_assert_eq!(forced_hamiltonian(&g, e).unwrap().verdict == Verdict::ForcedHamiltonian, forced);
            prop_assert_eq!(edge_in_separating_pm(&g, e).unwrap().verdict == Verdict::HasSeparatingPm, sep);
        }
    }
}
