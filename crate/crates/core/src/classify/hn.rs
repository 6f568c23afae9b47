use crate::error::{Error, Result};
use crate::planegraph::{named, CanonicalCode, EdgeId, PlaneGraph, VertexId};

/// Labels identifying a graph with `H_n`: vertex `v` of the graph is `v_i`
/// of the defining cycle when `label(v) = Some(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnDescriptor {
    n: usize,
    label: Vec<Option<usize>>,
}

impl HnDescriptor {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, v: VertexId) -> Option<usize> {
        self.label.get(v).copied().flatten()
    }

    /// The vertex labelled `v_i`.
    pub fn vertex(&self, i: usize) -> Option<VertexId> {
        self.label.iter().position(|&l| l == Some(i))
    }

    /// The labels are a bijection onto `v_0 .. v_{2n-1}`, the edges map onto
    /// those of `H_n`, `e` maps to `v_0 v_n`, and the embeddings agree.
    pub fn validate(&self, g: &PlaneGraph, e: EdgeId) -> Result<()> {
        let bad = |m: &str| Err(Error::Precondition(format!("invalid H_n descriptor: {m}")));
        let m = 2 * self.n;
        if self.n == 0 || g.vertex_count() != m || self.label.len() < g.vertex_slots() {
            return bad("wrong size");
        }
        let mut seen = vec![false; m];
        for v in g.vertices() {
            match self.label(v) {
                Some(i) if i < m && !seen[i] => seen[i] = true,
                _ => return bad("labels are not a bijection"),
            }
        }
        let lab = |v: VertexId| self.label(v).unwrap();
        let mut got: Vec<(usize, usize)> = g
            .edges()
            .map(|f| {
                let (x, y) = g.endpoints(f);
                let (a, b) = (lab(x), lab(y));
                (a.min(b), a.max(b))
            })
            .collect();
        got.sort_unstable();
        if got != hn_edges(self.n) {
            return bad("edges differ from H_n");
        }
        let (x, y) = g.endpoints(e);
        let (a, b) = (lab(x), lab(y));
        if (a.min(b), a.max(b)) != (0, self.n) {
            return bad("edge is not v_0 v_n");
        }
        let h = build_hn(self.n)?;
        let e0 = h.dart_between(0, self.n).expect("v_0 v_n is an edge") >> 1;
        if CanonicalCode::rooted(g, e) != CanonicalCode::rooted(&h, e0) {
            return bad("embedding differs from H_n");
        }
        Ok(())
    }
}

fn hn_edges(n: usize) -> Vec<(usize, usize)> {
    let m = 2 * n;
    let mut out: Vec<(usize, usize)> = (0..m).map(|i| (i.min((i + 1) % m), i.max((i + 1) % m))).collect();
    out.push((0, n));
    out.extend((1..n).map(|i| (i, m - i)));
    out.sort_unstable();
    out
}

/// `H_n`: the cycle `v_0 .. v_{2n-1}` with chords `v_0 v_n` and `v_i v_{2n-i}`,
/// all drawn inside the cycle. Vertex `i` is `v_i`.
pub fn build_hn(n: usize) -> Result<PlaneGraph> {
    if n == 0 {
        return Err(Error::Precondition("H_n needs n >= 1".into()));
    }
    if n == 1 {
        return Ok(named::theta());
    }
    let m = 2 * n;
    let adj: Vec<Vec<VertexId>> = (0..m)
        .map(|v| match v {
            0 => vec![n, 1, m - 1],
            v if v == n => vec![n - 1, 0, n + 1],
            v if v < n => vec![v - 1, v + 1, m - v],
            v => vec![(v + 1) % m, m - v, v - 1],
        })
        .collect();
    PlaneGraph::build_from_rotation(&adj)
}

/// Identifies `(g, e)` with `(H_n, v_0 v_n)`, or `None` if they differ.
pub fn recognize_hn(g: &PlaneGraph, e: EdgeId) -> Option<HnDescriptor> {
    if !g.is_edge(e) || !g.is_cubic() || !g.is_connected() {
        return None;
    }
    let nv = g.vertex_count();
    let (a, b) = g.endpoints(e);
    if !nv.is_multiple_of(2) || a == b {
        return None;
    }
    let n = nv / 2;
    let m = nv;
    for (x, y) in [(a, b), (b, a)] {
        let mut others: Vec<VertexId> = g.darts_at(x).filter(|&d| d >> 1 != e).map(|d| g.head(d)).collect();
        if others.len() != 2 {
            return None;
        }
        for _ in 0..2 {
            others.swap(0, 1);
            let mut v = vec![usize::MAX; m];
            v[0] = x;
            v[n] = y;
            if n > 1 {
                v[1] = others[0];
                v[m - 1] = others[1];
            }
            let mut ok = true;
            for i in 1..n.saturating_sub(1) {
                match (third(g, v[i], v[i - 1], v[m - i]), third(g, v[m - i], v[(m - i + 1) % m], v[i])) {
                    (Some(p), Some(q)) => {
                        v[i + 1] = p;
                        v[m - i - 1] = q;
                    }
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let mut label = vec![None; g.vertex_slots()];
            for (i, &w) in v.iter().enumerate() {
                if w >= label.len() || label[w].is_some() {
                    ok = false;
                    break;
                }
                label[w] = Some(i);
            }
            if !ok {
                continue;
            }
            let d = HnDescriptor { n, label };
            if d.validate(g, e).is_ok() {
                return Some(d);
            }
        }
    }
    None
}

/// The neighbour of `v` left after removing one occurrence each of `p` and `q`.
fn third(g: &PlaneGraph, v: VertexId, p: VertexId, q: VertexId) -> Option<VertexId> {
    let mut ns = g.neighbors(v);
    for x in [p, q] {
        let i = ns.iter().position(|&w| w == x)?;
        ns.swap_remove(i);
    }
    (ns.len() == 1).then(|| ns[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planegraph::named::*;

    #[test]
    fn small_cases_are_theta_k4_and_the_prism() {
        for (n, g) in [(1, theta()), (2, k4()), (3, prism())] {
            assert_eq!(CanonicalCode::of(&build_hn(n).unwrap()), CanonicalCode::of(&g));
        }
        assert!(build_hn(0).is_err());
    }

    #[test]
    fn recognizes_its_own_construction() {
        for n in 1..=12 {
            let g = build_hn(n).unwrap();
            assert!(g.is_cubic());
            let e = g.dart_between(0, n).unwrap() >> 1;
            assert_eq!(recognize_hn(&g, e).unwrap().n(), n);
        }
    }

    #[test]
    fn every_k4_edge_and_only_prism_rungs() {
        let g = k4();
        assert!(g.edges().all(|e| recognize_hn(&g, e).map(|d| d.n()) == Some(2)));
        let g = prism();
        for e in g.edges() {
            let (u, v) = g.endpoints(e);
            let rung = u.abs_diff(v) == 3;
            assert_eq!(recognize_hn(&g, e).is_some(), rung);
        }
        let g = cube();
        assert!(g.edges().all(|e| recognize_hn(&g, e).is_none()));
    }
}
