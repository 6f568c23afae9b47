//! One pass/fail line per acceptance criterion, at the full size limits.

use std::process::ExitCode;
use std::time::Duration;

use chordfactor::suites::{run_suites, SuiteConfig};

const CRITERIA: [(u32, &str, &str); 8] = [
    (1, "coloring", "special 3-colorings of every labeled triangulation on 4-11 vertices"),
    (2, "lemma4sides", "4-sided near-triangulations on at most 10 vertices have two feasible assignments"),
    (3, "chord", "chorded 2-factor or 2-edge-cut for every edge of the cubic corpus"),
    (4, "seppm", "separating perfect matchings cross-checked against 2-factor enumeration"),
    (5, "classify", "H_n, disconnected 2-factors, and both edge questions against the oracles"),
    (6, "bipartite", "same-cycle 2-factors for every ordered edge pair of the bipartite graphs"),
    (7, "roundtrip", "2-factor to coloring to 2-factor is the identity"),
    (8, "scale", "2000-vertex triangulations colored under the time limit, 100 seeds"),
];

fn main() -> ExitCode {
    let cfg = SuiteConfig {
        triangulation_order: 11,
        four_sided_vertices: 10,
        cubic_vertices: 18,
        two_sum_vertices: 14,
        oracle_vertices: 16,
        hn_max: 5,
        scale_order: 2000,
        scale_seeds: 100,
        scale_limit: Duration::from_secs(10),
        roundtrip_vertices: 16,
        roundtrip_two_sum_vertices: 12,
        planar_code_order: 11,
    };
    let names: Vec<&str> = CRITERIA.iter().map(|c| c.1).collect();
    let reports = run_suites(&names, &cfg).expect("suite names are valid");
    let mut all = true;
    for ((n, name, what), r) in CRITERIA.iter().zip(&reports) {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        all &= r.passed();
        println!(
            "criterion {n} {status} [{name}] {what}: {} checks, {} failures, {:.1?}",
            r.checked, r.failed, r.elapsed
        );
        for note in &r.notes {
            println!("    {note}");
        }
        for f in &r.failures {
            println!("    failure: {f}");
        }
    }
    if all { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
