//! Re-verification of witness documents against the library's checkers.

use anyhow::{anyhow, bail, ensure, Result};
use chordfactor::classify::{edge_in_separating_pm, forced_hamiltonian, Verdict};
use chordfactor::coloring::verify_special;
use chordfactor::factors::separating_pm_preconditions;
use chordfactor::oracle::enumerate_2factors;
use chordfactor::{BoundaryAssignment, ChordWitness, CutKind, EdgeId, Matching, NearTriangulation, PlaneGraph, SameCycleWitness, TwoFactor};

use crate::text::{parse_coloring, parse_edge, parse_edge_list, parse_vertex_list, Document};

/// Which classification question a document answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Question {
    Forced,
    Separating,
}

impl Question {
    pub fn as_str(self) -> &'static str {
        match self {
            Question::Forced => "forced",
            Question::Separating => "separating",
        }
    }

    fn parse(s: &str) -> Result<Question> {
        match s {
            "forced" => Ok(Question::Forced),
            "separating" => Ok(Question::Separating),
            _ => bail!("unknown question {s:?}"),
        }
    }

    pub fn decide(self, g: &PlaneGraph, e: EdgeId) -> chordfactor::Result<chordfactor::classify::ClassificationResult> {
        match self {
            Question::Forced => forced_hamiltonian(g, e),
            Question::Separating => edge_in_separating_pm(g, e),
        }
    }
}

/// The verdict of the enumeration oracle for a classification question.
pub fn oracle_verdict(g: &PlaneGraph, e: EdgeId, q: Question) -> Result<Verdict> {
    let factors = enumerate_2factors(g)?;
    Ok(match q {
        Question::Forced => {
            if factors.iter().filter(|f| f.contains(e)).all(|f| f.is_hamiltonian()) {
                Verdict::ForcedHamiltonian
            } else {
                Verdict::HasDisconnectedTwoFactor
            }
        }
        Question::Separating => {
            if factors.iter().any(|f| !f.contains(e) && f.cycle_count() >= 2) {
                Verdict::HasSeparatingPm
            } else {
                Verdict::NoSeparatingPm
            }
        }
    })
}

fn factor(g: &PlaneGraph, doc: &Document) -> Result<TwoFactor> {
    Ok(TwoFactor::new(g, parse_edge_list(g, doc.require("two_factor")?)?)?)
}

/// Checks that the payload of `doc` supports its verdict. Negative
/// classification verdicts are re-derived, and confirmed by enumeration when
/// the graph has at most `max_brute` vertices.
pub fn check_document(doc: &Document, max_brute: usize) -> Result<()> {
    let op = doc.require("operation")?;
    let g = doc.graph()?;
    let verdict = doc.get("verdict").unwrap_or("");
    if verdict == "counterexample" {
        bail!("recorded counterexample: {}", doc.get("reason").unwrap_or("no reason given"));
    }
    match op {
        "dual" | "gen" | "enum" => {}
        "color" => {
            ensure!(verdict == "special-3coloring", "unexpected verdict {verdict:?}");
            let b = parse_vertex_list(&g, doc.require("boundary")?)?;
            let nt = NearTriangulation::with_boundary(g.clone(), &b)?;
            let f = parse_coloring(&g, doc.require("coloring")?)?;
            ensure!(verify_special(&nt, &f), "coloring is not special");
            ensure!(f.restrict(nt.boundary()) == BoundaryAssignment::abc(), "boundary is not colored abc");
        }
        "chord" => {
            let e = parse_edge(&g, doc.require("edge")?)?;
            match verdict {
                "chorded-2factor" => ChordWitness::new(&g, factor(&g, doc)?, e)?.validate(&g)?,
                "in-2-edge-cut" => {
                    let cut = parse_edge_list(&g, doc.require("cut")?)?;
                    ensure!(cut.len() == 2 && cut.contains(&e), "cut must be two edges including the edge");
                    let (a, b) = g.sides_of_cut(&cut);
                    ensure!(!a.is_empty() && !b.is_empty(), "cut does not disconnect the graph");
                    ensure!(g.edge_cut_status(e).kind == CutKind::TwoEdgeCut, "edge is in no 2-edge-cut");
                }
                _ => bail!("unexpected verdict {verdict:?}"),
            }
        }
        "seppm" => {
            let e = parse_edge(&g, doc.require("edge")?)?;
            match verdict {
                "separating-pm" => {
                    let m = Matching::new(&g, parse_edge_list(&g, doc.require("matching")?)?)?;
                    ensure!(m.contains(e), "matching does not contain the edge");
                    ensure!(m.is_perfect() && m.is_separating(), "matching is not a separating perfect matching");
                }
                "not-applicable" => {
                    ensure!(separating_pm_preconditions(&g, e).is_err(), "the preconditions hold");
                }
                _ => bail!("unexpected verdict {verdict:?}"),
            }
        }
        "classify" => {
            let e = parse_edge(&g, doc.require("edge")?)?;
            let q = Question::parse(doc.require("question")?)?;
            let v = Verdict::parse(verdict).ok_or_else(|| anyhow!("unknown verdict {verdict:?}"))?;
            match v {
                Verdict::HasDisconnectedTwoFactor => {
                    ensure!(q == Question::Forced, "verdict does not answer the question");
                    let f = factor(&g, doc)?;
                    ensure!(f.contains(e) && f.cycle_count() >= 2, "not a disconnected 2-factor through the edge");
                }
                Verdict::HasSeparatingPm => {
                    ensure!(q == Question::Separating, "verdict does not answer the question");
                    let m = Matching::new(&g, parse_edge_list(&g, doc.require("matching")?)?)?;
                    ensure!(m.contains(e) && m.is_perfect() && m.is_separating(), "not a separating perfect matching");
                }
                Verdict::ForcedHamiltonian | Verdict::NoSeparatingPm => {
                    let again = q.decide(&g, e)?.verdict;
                    ensure!(again == v, "re-running gives {again}");
                    if g.vertex_count() <= max_brute {
                        let want = oracle_verdict(&g, e, q)?;
                        ensure!(want == v, "enumeration gives {want}");
                    }
                }
            }
        }
        "samecycle" => {
            ensure!(verdict == "same-cycle", "unexpected verdict {verdict:?}");
            let edges = parse_edge_list(&g, doc.require("edges")?)?;
            ensure!(edges.len() == 2, "expected two edges");
            SameCycleWitness::new(&g, factor(&g, doc)?, edges[0], edges[1])?.validate(&g)?;
        }
        _ => bail!("unknown operation {op:?}"),
    }
    Ok(())
}
