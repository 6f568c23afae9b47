//! Edges through which every 2-factor is Hamiltonian, and edges lying in no
//! separating perfect matching. Both questions are decided by recursive
//! reductions that return either a witness or the decomposition that rules
//! one out.

mod decide;
mod hn;

use std::fmt;

use crate::error::{Error, Result};
use crate::factors::{Matching, TwoFactor};
use crate::planegraph::{EdgeId, PlaneGraph};
use decide::{Forced, Sep};

pub use hn::{build_hn, recognize_hn, HnDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    ForcedHamiltonian,
    HasDisconnectedTwoFactor,
    NoSeparatingPm,
    HasSeparatingPm,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::ForcedHamiltonian => "forced-hamiltonian",
            Verdict::HasDisconnectedTwoFactor => "has-disconnected-2factor",
            Verdict::NoSeparatingPm => "no-separating-pm",
            Verdict::HasSeparatingPm => "has-separating-pm",
        }
    }

    pub fn parse(s: &str) -> Option<Verdict> {
        [
            Verdict::ForcedHamiltonian,
            Verdict::HasDisconnectedTwoFactor,
            Verdict::NoSeparatingPm,
            Verdict::HasSeparatingPm,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One reduction in a negative answer. Edge ids refer to the graph at that
/// node of the decomposition, which shares ids with its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// The graph is `K_2^3`.
    Base,
    /// The graph is `H_n` and the edge is `v_0 v_n`.
    Hn(HnDescriptor),
    /// The edge and `other` form a 2-edge-cut; parts are the two closed-up sides.
    CutThroughEdge { other: EdgeId },
    /// A 2-edge-cut avoiding the edge; the first part holds the edge.
    CutAvoidingEdge { cut: (EdgeId, EdgeId) },
    /// The edge has a parallel twin; its ends were replaced by the edge `joined`.
    ParallelEdge { parallel: EdgeId, joined: EdgeId },
    /// Removing the ends of the edge disconnects the graph; the sides were
    /// closed up by the edges `joined`.
    Disconnected { joined: (EdgeId, EdgeId) },
    /// Removing the ends of the edge leaves the bridge `bridge`; each part
    /// shrinks one side of it together with the ends.
    Bridge { bridge: EdgeId },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Base => write!(f, "base K_2^3"),
            Step::Hn(d) => write!(f, "H_{}", d.n()),
            Step::CutThroughEdge { other } => write!(f, "2-edge-cut through the edge with {other}"),
            Step::CutAvoidingEdge { cut: (a, b) } => write!(f, "2-edge-cut {{{a}, {b}}}"),
            Step::ParallelEdge { parallel, joined } => write!(f, "parallel edge {parallel}, joined by {joined}"),
            Step::Disconnected { joined: (a, b) } => write!(f, "ends separate the graph, joined by {a} and {b}"),
            Step::Bridge { bridge } => write!(f, "ends leave bridge {bridge}"),
        }
    }
}

/// A tree of reductions ending in `K_2^3` or `H_n` leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub step: Step,
    pub vertices: usize,
    pub parts: Vec<Decomposition>,
}

impl Decomposition {
    /// One line per node, indented by depth.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.render(0, &mut out);
        out
    }

    fn render(&self, depth: usize, out: &mut Vec<String>) {
        out.push(format!("{}{} ({} vertices)", "  ".repeat(depth), self.step, self.vertices));
        for p in &self.parts {
            p.render(depth + 1, out);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    TwoFactor(TwoFactor),
    Matching(Matching),
    Decomposition(Decomposition),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub witness: Witness,
}

impl ClassificationResult {
    /// Checks the witness against `g` and `e`: a disconnected 2-factor
    /// through `e`, a separating perfect matching through `e`, or a
    /// decomposition whose root describes `g`.
    pub fn validate(&self, g: &PlaneGraph, e: EdgeId) -> Result<()> {
        let bad = |m: String| Err(Error::Precondition(format!("invalid {} witness: {m}", self.verdict)));
        match (&self.verdict, &self.witness) {
            (Verdict::HasDisconnectedTwoFactor, Witness::TwoFactor(f)) => {
                let f = TwoFactor::new(g, f.edges().to_vec())?;
                if !f.contains(e) || f.cycle_count() < 2 {
                    return bad(format!("{} cycles, contains edge: {}", f.cycle_count(), f.contains(e)));
                }
            }
            (Verdict::HasSeparatingPm, Witness::Matching(m)) => {
                let m = Matching::new(g, m.edges().to_vec())?;
                if !m.contains(e) || !m.is_perfect() || !m.is_separating() {
                    return bad("not a separating perfect matching through the edge".into());
                }
            }
            (Verdict::ForcedHamiltonian | Verdict::NoSeparatingPm, Witness::Decomposition(d)) => {
                if d.vertices != g.vertex_count() {
                    return bad("decomposition root has the wrong size".into());
                }
                match &d.step {
                    Step::Hn(h) => h.validate(g, e)?,
                    Step::Base if g.vertex_count() != 2 => return bad("base case on a larger graph".into()),
                    _ => {}
                }
            }
            _ => return bad("witness kind does not match the verdict".into()),
        }
        Ok(())
    }
}

fn require_class(g: &PlaneGraph, e: EdgeId) -> Result<()> {
    g.require_cubic()?;
    if !g.is_edge(e) {
        return Err(Error::Precondition(format!("no edge {e}")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(&b) = g.bridges().first() {
        return Err(Error::Bridge(b));
    }
    Ok(())
}

/// Is every 2-factor containing `e` a Hamiltonian cycle? If not, returns a
/// 2-factor through `e` with at least two cycles.
pub fn forced_hamiltonian(g: &PlaneGraph, e: EdgeId) -> Result<ClassificationResult> {
    require_class(g, e)?;
    let r = match decide::forced(g, e)? {
        Forced::No(edges) => ClassificationResult {
            verdict: Verdict::HasDisconnectedTwoFactor,
            witness: Witness::TwoFactor(TwoFactor::new(g, edges)?),
        },
        Forced::Yes(d) => ClassificationResult { verdict: Verdict::ForcedHamiltonian, witness: Witness::Decomposition(d) },
    };
    r.validate(g, e).map_err(|err| Error::Internal(err.to_string()))?;
    Ok(r)
}

/// Does some separating perfect matching contain `e`?
pub fn edge_in_separating_pm(g: &PlaneGraph, e: EdgeId) -> Result<ClassificationResult> {
    require_class(g, e)?;
    let r = match decide::sep(g, e)? {
        Sep::Yes(edges) => ClassificationResult {
            verdict: Verdict::HasSeparatingPm,
            witness: Witness::Matching(Matching::new(g, edges)?),
        },
        Sep::No(d) => ClassificationResult { verdict: Verdict::NoSeparatingPm, witness: Witness::Decomposition(d) },
    };
    r.validate(g, e).map_err(|err| Error::Internal(err.to_string()))?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{cubic_corpus, enumerate_2factors, two_sum_corpus};
    use crate::planegraph::named::*;

    fn oracle_forced(g: &PlaneGraph, e: EdgeId) -> bool {
        enumerate_2factors(g).unwrap().iter().filter(|f| f.contains(e)).all(|f| f.is_hamiltonian())
    }

    fn oracle_sep(g: &PlaneGraph, e: EdgeId) -> bool {
        enumerate_2factors(g).unwrap().iter().any(|f| !f.contains(e) && f.cycle_count() >= 2)
    }

    #[test]
    fn hn_edges_are_forced() {
        for n in 1..=6 {
            let g = build_hn(n).unwrap();
            let e = g.dart_between(0, n).unwrap() >> 1;
            let r = forced_hamiltonian(&g, e).unwrap();
            assert_eq!(r.verdict, Verdict::ForcedHamiltonian);
        }
    }

    #[test]
    fn prism_triangle_edge_has_two_triangles() {
        let g = prism();
        let e = g.dart_between(0, 1).unwrap() >> 1;
        let r = forced_hamiltonian(&g, e).unwrap();
        assert_eq!(r.verdict, Verdict::HasDisconnectedTwoFactor);
        let Witness::TwoFactor(f) = r.witness else { panic!() };
        assert!(f.cycles().iter().all(|c| c.len() == 3));
    }

    #[test]
    fn small_named_cases() {
        let g = theta();
        assert_eq!(edge_in_separating_pm(&g, 0).unwrap().verdict, Verdict::NoSeparatingPm);
        let g = k4();
        for e in g.edges() {
            assert_eq!(edge_in_separating_pm(&g, e).unwrap().verdict, Verdict::NoSeparatingPm);
        }
        let g = cube();
        for e in g.edges() {
            assert_eq!(edge_in_separating_pm(&g, e).unwrap().verdict, Verdict::HasSeparatingPm);
            assert_eq!(forced_hamiltonian(&g, e).unwrap().verdict, Verdict::HasDisconnectedTwoFactor);
        }
    }

    #[test]
    fn agrees_with_enumeration_on_small_corpus() {
        for g in cubic_corpus(12).graphs().chain(two_sum_corpus(12).graphs()) {
            for e in g.edges() {
                let f = forced_hamiltonian(g, e).unwrap();
                assert_eq!(f.verdict == Verdict::ForcedHamiltonian, oracle_forced(g, e), "{:?} {e}", g.to_adjacency());
                let s = edge_in_separating_pm(g, e).unwrap();
                assert_eq!(s.verdict == Verdict::HasSeparatingPm, oracle_sep(g, e), "{:?} {e}", g.to_adjacency());
            }
        }
    }
}
