use chordfactor::coloring::{
    classify_4sided, special_3coloring, special_3coloring_4sided, verify_special, BoundaryAssignment,
};
use chordfactor::oracle::{brute_special_feasible, four_sided_corpus, random_triangulation, triangulation_levels};
use chordfactor::suites::labelings;

#[test]
fn every_labeled_small_triangulation_has_a_special_coloring() {
    for level in triangulation_levels(9) {
        for g in level.graphs() {
            for nt in labelings(g).unwrap() {
                let f = special_3coloring(&nt).unwrap_or_else(|e| panic!("{e} on {:?}", nt.graph().to_adjacency()));
                assert!(verify_special(&nt, &f));
                assert_eq!(f.restrict(nt.boundary()), BoundaryAssignment::abc());
            }
        }
    }
}

#[test]
fn four_sided_near_triangulations_have_two_feasible_assignments() {
    for nt in four_sided_corpus(8) {
        let t = classify_4sided(&nt).unwrap_or_else(|e| panic!("{e} on {:?} {:?}", nt.graph().to_adjacency(), nt.boundary()));
        assert!(t.count() >= 2);
        for s in BoundaryAssignment::four_sided() {
            let got = special_3coloring_4sided(&nt, &s).unwrap();
            assert_eq!(got.is_some(), brute_special_feasible(&nt, &s).unwrap());
            if let Some(f) = got {
                assert!(verify_special(&nt, &f));
                assert_eq!(f.restrict(nt.boundary()), s);
            }
        }
    }
}

#[test]
fn random_triangulations_color() {
    for seed in 0..20 {
        let g = random_triangulation(200, seed);
        for nt in labelings(&g).unwrap().into_iter().step_by(97) {
            let f = special_3coloring(&nt).unwrap();
            assert!(verify_special(&nt, &f));
        }
    }
}
