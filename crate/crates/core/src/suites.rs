//! Exhaustive verification suites over the bundled corpora. Each suite checks
//! one family of claims on every instance up to pinned size limits and
//! reports every failure it finds.

use std::collections::HashSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::classify::{build_hn, edge_in_separating_pm, forced_hamiltonian, recognize_hn, Verdict};
use crate::coloring::{
    classify_4sided, special_3coloring, special_3coloring_4sided, verify_special, BoundaryAssignment,
};
use crate::error::{Error, Result};
use crate::factors::{
    separating_pm_preconditions, coloring_to_twofactor, dual_for_edge, same_cycle_2factor_bipartite,
    separating_pm_through_edge, two_factor_with_chord, twofactor_to_coloring,
};
use crate::io::{decode_planar_code, encode_planar_code};
use crate::oracle::{
    brute_special_feasible, cubic_corpus, enumerate_2factors, four_sided_corpus, random_triangulation,
    triangulation_levels, two_sum_corpus,
};
use crate::planegraph::{named, CanonicalCode, CutKind, EdgeId, NearTriangulation, PlaneGraph};

/// Names accepted by [`run_suite`], in their natural order.
pub const SUITES: [&str; 9] = [
    "coloring",
    "lemma4sides",
    "chord",
    "seppm",
    "classify",
    "bipartite",
    "roundtrip",
    "scale",
    "planar-code",
];

/// Failures kept verbatim per suite; the rest are only counted.
const KEPT_FAILURES: usize = 20;

/// Size limits for the suites. `Default` gives the full acceptance limits.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Largest triangulation order for the coloring suite.
    pub triangulation_order: usize,
    /// Largest vertex count of 4-sided near-triangulations.
    pub four_sided_vertices: usize,
    /// Largest 3-edge-connected cubic graph in the factor suites.
    pub cubic_vertices: usize,
    /// Largest 2-sum graph in the factor suites.
    pub two_sum_vertices: usize,
    /// Largest graph compared against the enumeration oracles.
    pub oracle_vertices: usize,
    /// `H_n` is checked for `n = 1..=hn_max`.
    pub hn_max: usize,
    /// Largest 3-edge-connected cubic graph in the round-trip suite.
    pub roundtrip_vertices: usize,
    /// Largest 2-sum graph in the round-trip suite.
    pub roundtrip_two_sum_vertices: usize,
    pub scale_order: usize,
    pub scale_seeds: u64,
    pub scale_limit: Duration,
    /// Largest triangulation order in the planar code suite.
    pub planar_code_order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            triangulation_order: 11,
            four_sided_vertices: 10,
            cubic_vertices: 18,
            two_sum_vertices: 14,
            oracle_vertices: 16,
            hn_max: 5,
            roundtrip_vertices: 16,
            roundtrip_two_sum_vertices: 12,
            scale_order: 2000,
            scale_seeds: 100,
            scale_limit: Duration::from_secs(10),
            planar_code_order: 11,
        }
    }
}

impl SuiteConfig {
    /// Small limits for smoke tests.
    pub fn quick() -> Self {
        SuiteConfig {
            triangulation_order: 8,
            four_sided_vertices: 7,
            cubic_vertices: 12,
            two_sum_vertices: 10,
            oracle_vertices: 10,
            hn_max: 4,
            roundtrip_vertices: 10,
            roundtrip_two_sum_vertices: 8,
            scale_order: 300,
            scale_seeds: 3,
            scale_limit: Duration::from_secs(10),
            planar_code_order: 8,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    /// Individual claims checked.
    pub checked: usize,
    /// Claims that failed.
    pub failed: usize,
    /// Descriptions of the first failures.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }

    fn absorb(&mut self, t: Tally) {
        self.checked += t.checked;
        self.failed += t.failed;
        for f in t.failures {
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(f);
            }
        }
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failed += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(what);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(f);
            }
        }
        self
    }
}

fn over<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync + Send) -> Tally {
    items
        .par_iter()
        .map(|x| {
            let mut t = Tally::default();
            f(x, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

fn show(g: &PlaneGraph) -> String {
    format!("{:?}", g.to_adjacency())
}

/// Runs a single suite by name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    Ok(run_suites(&[name], cfg)?.remove(0))
}

/// Runs several suites, sharing the corpora they have in common.
pub fn run_suites(names: &[&str], cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    if let Some(bad) = names.iter().find(|n| !SUITES.contains(n)) {
        return Err(Error::Precondition(format!("unknown suite {bad}; expected one of {}", SUITES.join(", "))));
    }
    let ctx = Ctx { cfg, cubic: OnceLock::new(), two_sum: OnceLock::new() };
    Ok(names.iter().map(|&n| ctx.run(n)).collect())
}

struct Ctx<'a> {
    cfg: &'a SuiteConfig,
    cubic: OnceLock<Vec<PlaneGraph>>,
    two_sum: OnceLock<Vec<PlaneGraph>>,
}

impl Ctx<'_> {
    fn cubic(&self) -> &[PlaneGraph] {
        self.cubic.get_or_init(|| cubic_corpus(self.cfg.cubic_vertices).into_graphs())
    }

    fn two_sum(&self) -> &[PlaneGraph] {
        self.two_sum.get_or_init(|| two_sum_corpus(self.cfg.two_sum_vertices).into_graphs())
    }

    /// Every corpus cubic graph: the 3-edge-connected ones, then the 2-sums.
    fn corpus(&self) -> Vec<PlaneGraph> {
        self.cubic().iter().chain(self.two_sum()).cloned().collect()
    }

    fn run(&self, name: &str) -> SuiteReport {
        let start = Instant::now();
        let mut r = SuiteReport { name: name.to_string(), ..Default::default() };
        match name {
            "coloring" => self.coloring(&mut r),
            "lemma4sides" => self.lemma4sides(&mut r),
            "chord" => self.chord(&mut r),
            "seppm" => self.seppm(&mut r),
            "classify" => self.classify(&mut r),
            "bipartite" => self.bipartite(&mut r),
            "roundtrip" => self.roundtrip(&mut r),
            "scale" => self.scale(&mut r),
            "planar-code" => self.planar_code(&mut r),
            _ => unreachable!("names are checked by run_suites"),
        }
        r.elapsed = start.elapsed();
        r
    }

    fn coloring(&self, r: &mut SuiteReport) {
        for level in triangulation_levels(self.cfg.triangulation_order) {
            let graphs = level.into_graphs();
            r.notes.push(format!("order {}: {} triangulations", graphs[0].vertex_count(), graphs.len()));
            r.absorb(over(&graphs, |g, t| {
                let all = match labelings(g) {
                    Ok(all) => all,
                    Err(e) => return t.fail(format!("cannot label ({e}) {}", show(g))),
                };
                for nt in all {
                    let ok = match special_3coloring(&nt) {
                        Ok(f) => verify_special(&nt, &f) && f.restrict(nt.boundary()) == BoundaryAssignment::abc(),
                        Err(_) => false,
                    };
                    t.check(ok, || format!("no special coloring for boundary {:?} of {}", nt.boundary(), show(g)));
                }
            }));
        }
    }

    fn lemma4sides(&self, r: &mut SuiteReport) {
        let corpus = four_sided_corpus(self.cfg.four_sided_vertices);
        r.notes.push(format!("{} labeled 4-sided near-triangulations", corpus.len()));
        r.absorb(over(&corpus, |nt, t| {
            let at = || format!("boundary {:?} of {}", nt.boundary(), show(nt.graph()));
            let ty = match classify_4sided(nt) {
                Ok(ty) => ty,
                Err(e) => return t.fail(format!("classify failed ({e}) on {}", at())),
            };
            t.check(ty.count() >= 2, || format!("{} feasible assignments on {}", ty.count(), at()));
            let feasible = ty.feasible_set();
            for s in BoundaryAssignment::four_sided() {
                let built = match special_3coloring_4sided(nt, &s) {
                    Ok(b) => b,
                    Err(e) => return t.fail(format!("construction failed ({e}) for {s:?} on {}", at())),
                };
                match built {
                    Some(f) => {
                        t.check(verify_special(nt, &f) && f.restrict(nt.boundary()) == s, || {
                            format!("constructed coloring for {s:?} does not verify on {}", at())
                        });
                        t.check(feasible.contains(&s), || format!("{s:?} constructed but not classified on {}", at()));
                    }
                    None => {
                        t.check(brute_special_feasible(nt, &s) == Ok(false), || {
                            format!("{s:?} reported infeasible but brute force disagrees on {}", at())
                        });
                        t.check(!feasible.contains(&s), || format!("{s:?} classified but not constructed on {}", at()));
                    }
                }
            }
        }));
    }

    fn chord(&self, r: &mut SuiteReport) {
        let graphs = self.corpus();
        r.notes.push(format!("{} cubic graphs", graphs.len()));
        r.absorb(over(&graphs, |g, t| {
            for e in g.edges() {
                let in_cut = g.edge_cut_status(e).kind == CutKind::TwoEdgeCut;
                let ok = match two_factor_with_chord(g, e) {
                    Ok(w) => !in_cut && w.validate(g).is_ok() && w.chord == e,
                    Err(Error::InTwoEdgeCut(_)) => in_cut,
                    Err(_) => false,
                };
                t.check(ok, || format!("edge {e} (in 2-edge-cut: {in_cut}) of {}", show(g)));
            }
        }));
    }

    fn seppm(&self, r: &mut SuiteReport) {
        let graphs = self.corpus();
        let skipped = over(&graphs, |g, t| {
            let factors: HashSet<Vec<EdgeId>> = match enumerate_2factors(g) {
                Ok(fs) => fs.iter().map(|f| f.edges().to_vec()).collect(),
                Err(e) => return t.fail(format!("oracle failed ({e}) on {}", show(g))),
            };
            for e in g.edges() {
                let meets = separating_pm_preconditions(g, e).is_ok();
                let got = separating_pm_through_edge(g, e);
                if !meets {
                    t.check(got.is_err(), || format!("edge {e} fails the preconditions but got a matching on {}", show(g)));
                    continue;
                }
                let ok = got.ok().and_then(|m| m.complement(g).ok().map(|f| (m, f))).is_some_and(|(m, f)| {
                    m.contains(e) && m.is_perfect() && f.cycle_count() >= 2 && factors.contains(f.edges())
                });
                t.check(ok, || format!("edge {e} of {}", show(g)));
            }
        });
        r.notes.push(format!("{} cubic graphs", graphs.len()));
        r.absorb(skipped);
    }

    fn classify(&self, r: &mut SuiteReport) {
        let mut hn = Tally::default();
        for n in 1..=self.cfg.hn_max {
            let g = build_hn(n).expect("n >= 1");
            let e = g.dart_between(0, n).expect("diameter") >> 1;
            let through: Vec<_> = enumerate_2factors(&g).unwrap_or_default().into_iter().filter(|f| f.contains(e)).collect();
            hn.check(!through.is_empty() && through.iter().all(|f| f.is_hamiltonian()), || {
                format!("oracle finds a non-Hamiltonian 2-factor through the diameter of H_{n}")
            });
            let v = forced_hamiltonian(&g, e).map(|c| c.verdict);
            hn.check(v == Ok(Verdict::ForcedHamiltonian), || format!("H_{n}: got {v:?}"));
        }
        r.absorb(hn);

        let three: Vec<_> = self.cubic().iter().filter(|g| g.two_edge_cuts().is_empty()).cloned().collect();
        r.notes.push(format!("{} 3-edge-connected graphs", three.len()));
        r.absorb(over(&three, |g, t| {
            for e in g.edges() {
                let hn = recognize_hn(g, e).is_some();
                let got = forced_hamiltonian(g, e);
                let ok = match &got {
                    Ok(c) if hn => c.verdict == Verdict::ForcedHamiltonian,
                    Ok(c) => c.verdict == Verdict::HasDisconnectedTwoFactor && c.validate(g, e).is_ok(),
                    Err(_) => false,
                };
                t.check(ok, || format!("edge {e} (H_n: {hn}) got {:?} on {}", got.map(|c| c.verdict), show(g)));
            }
        }));

        let small: Vec<_> =
            self.corpus().into_iter().filter(|g| g.vertex_count() <= self.cfg.oracle_vertices).collect();
        r.notes.push(format!("{} graphs compared with the oracle", small.len()));
        r.absorb(over(&small, |g, t| {
            let factors = match enumerate_2factors(g) {
                Ok(fs) => fs,
                Err(e) => return t.fail(format!("oracle failed ({e}) on {}", show(g))),
            };
            for e in g.edges() {
                let through = factors.iter().filter(|f| f.contains(e));
                let forced = through.clone().all(|f| f.is_hamiltonian());
                let sep = factors.iter().any(|f| !f.contains(e) && f.cycle_count() >= 2);
                let want_forced = if forced { Verdict::ForcedHamiltonian } else { Verdict::HasDisconnectedTwoFactor };
                let want_sep = if sep { Verdict::HasSeparatingPm } else { Verdict::NoSeparatingPm };
                let got = forced_hamiltonian(g, e).map(|c| c.verdict);
                t.check(got == Ok(want_forced), || format!("edge {e}: {got:?}, oracle {want_forced} on {}", show(g)));
                let got = edge_in_separating_pm(g, e).map(|c| c.verdict);
                t.check(got == Ok(want_sep), || format!("edge {e}: {got:?}, oracle {want_sep} on {}", show(g)));
            }
        }));
    }

    fn bipartite(&self, r: &mut SuiteReport) {
        let mut graphs = vec![("cube", named::cube()), ("K_2^3", named::theta())];
        for k in 2..=4 {
            graphs.push(("ladder", named::circular_ladder(2 * k)));
        }
        r.absorb(over(&graphs, |(name, g), t| {
            for e1 in g.edges() {
                for e2 in g.edges().filter(|&e2| e2 != e1) {
                    let ok = same_cycle_2factor_bipartite(g, e1, e2).is_ok_and(|w| w.validate(g).is_ok());
                    t.check(ok, || format!("{name} on {} vertices, edges {e1}, {e2}", g.vertex_count()));
                }
            }
        }));
    }

    fn roundtrip(&self, r: &mut SuiteReport) {
        let mut graphs = cubic_corpus(self.cfg.roundtrip_vertices).into_graphs();
        graphs.extend(two_sum_corpus(self.cfg.roundtrip_two_sum_vertices).into_graphs());
        r.notes.push(format!("{} cubic graphs", graphs.len()));
        r.absorb(over(&graphs, |g, t| {
            let t_dual = g.dual();
            let factors = match enumerate_2factors(g) {
                Ok(fs) => fs,
                Err(e) => return t.fail(format!("oracle failed ({e}) on {}", show(g))),
            };
            for f in &factors {
                for e in g.edges().filter(|&e| !f.contains(e)) {
                    let Ok(col) = twofactor_to_coloring(g, f, e) else { continue };
                    let special = dual_for_edge(g, e).is_ok_and(|nt| verify_special(&nt, &col));
                    let back = coloring_to_twofactor(g, &t_dual, &col, e);
                    let ok = special && back.is_ok_and(|w| w.factor.edges() == f.edges());
                    t.check(ok, || format!("factor {:?}, chord {e} of {}", f.edges(), show(g)));
                }
            }
        }));
    }

    fn scale(&self, r: &mut SuiteReport) {
        let (mut slowest, mut slowest_verify) = (Duration::ZERO, Duration::ZERO);
        let mut t = Tally::default();
        for seed in 0..self.cfg.scale_seeds {
            let g = random_triangulation(self.cfg.scale_order, seed);
            let nt = match NearTriangulation::new(g, 0) {
                Ok(nt) => nt,
                Err(e) => {
                    t.fail(format!("seed {seed}: {e}"));
                    continue;
                }
            };
            let start = Instant::now();
            let got = special_3coloring(&nt);
            let took = start.elapsed();
            slowest = slowest.max(took);
            match got {
                Ok(f) => {
                    let start = Instant::now();
                    let ok = verify_special(&nt, &f);
                    slowest_verify = slowest_verify.max(start.elapsed());
                    t.check(ok, || format!("seed {seed}: coloring does not verify"));
                }
                Err(Error::Internal(m)) => t.fail(format!("seed {seed}: termination check fired: {m}")),
                Err(e) => t.fail(format!("seed {seed}: {e}")),
            }
            t.check(took <= self.cfg.scale_limit, || format!("seed {seed}: took {took:?}"));
        }
        r.notes.push(format!("slowest coloring {slowest:?}, slowest verification {slowest_verify:?}"));
        r.absorb(t);
    }

    fn planar_code(&self, r: &mut SuiteReport) {
        let mut batches: Vec<Vec<PlaneGraph>> =
            triangulation_levels(self.cfg.planar_code_order).into_iter().map(|c| c.into_graphs()).collect();
        batches.push(self.cubic().to_vec());
        batches.push(self.two_sum().to_vec());
        r.absorb(over(&batches, |graphs, t| {
            let ok = encode_planar_code(graphs).and_then(|bytes| {
                let back = decode_planar_code(&bytes)?;
                let same = back.len() == graphs.len()
                    && back.iter().zip(graphs).all(|(a, b)| CanonicalCode::of(a) == CanonicalCode::of(b));
                Ok(same && encode_planar_code(&back)? == bytes)
            });
            t.check(ok == Ok(true), || format!("batch of {} graphs: {ok:?}", graphs.len()));
        }));
    }
}

/// The triangulation `g` with every face as the outer face and every
/// rotation and reflection of its boundary labels.
pub fn labelings(g: &PlaneGraph) -> Result<Vec<NearTriangulation>> {
    let mut out = Vec::new();
    for face in g.faces() {
        let vs: Vec<_> = face.iter().map(|&d| g.origin(d)).collect();
        for r in 0..3 {
            let fwd = [vs[r], vs[(r + 1) % 3], vs[(r + 2) % 3]];
            let back = [vs[r], vs[(r + 2) % 3], vs[(r + 1) % 3]];
            for b in [fwd, back] {
                out.push(NearTriangulation::with_boundary(g.clone(), &b)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        let cfg = SuiteConfig::quick();
        for r in run_suites(&SUITES, &cfg).unwrap() {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", &SuiteConfig::quick()).is_err());
    }
}
