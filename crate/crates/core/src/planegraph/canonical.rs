use super::{Dart, EdgeId, PlaneGraph};

/// Canonical form of an embedded graph, invariant under relabeling and reflection.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    /// Lexicographically least breadth-first code over all root darts and
    /// both orientations. Only roots whose (origin degree, head degree) is
    /// minimal are tried, which is itself an invariant choice.
    pub fn of(g: &PlaneGraph) -> Self {
        let roots: Vec<Dart> = g.darts().collect();
        Self::min_over(g, &roots)
    }

    /// Canonical form of the pair (graph, distinguished edge `e`), treating
    /// the edge as unoriented.
    pub fn rooted(g: &PlaneGraph, e: EdgeId) -> Self {
        Self::min_over(g, &[2 * e, 2 * e + 1])
    }

    /// Code of the map rooted at dart `d` in its own orientation; equal codes
    /// mean an orientation-preserving isomorphism matching the root darts.
    pub fn from_dart(g: &PlaneGraph, d: Dart) -> Self {
        CanonicalCode(Scratch::new(g).code(g, d, false, None).expect("no bound given"))
    }

    fn min_over(g: &PlaneGraph, candidates: &[Dart]) -> Self {
        if g.edge_count() == 0 {
            return CanonicalCode(vec![g.vertex_count() as u32, 0]);
        }
        let key = |d: Dart| (g.degree(g.origin(d)), g.degree(g.head(d)));
        let best_key = candidates.iter().map(|&d| key(d)).min().unwrap();
        let mut scratch = Scratch::new(g);
        let mut best: Option<Vec<u32>> = None;
        for &d in candidates.iter().filter(|&&d| key(d) == best_key) {
            for mirrored in [false, true] {
                if let Some(code) = scratch.code(g, d, mirrored, best.as_deref()) {
                    best = Some(code);
                }
            }
        }
        CanonicalCode(best.unwrap())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Little-endian byte serialization.
    pub fn as_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|x| x.to_le_bytes()).collect()
    }
}

struct Scratch {
    label: Vec<u32>,
    entry: Vec<Dart>,
    order: Vec<usize>,
}

const UNSET: u32 = u32::MAX;

impl Scratch {
    fn new(g: &PlaneGraph) -> Self {
        Scratch {
            label: vec![UNSET; g.vertex_slots()],
            entry: vec![0; g.vertex_slots()],
            order: Vec::with_capacity(g.vertex_count()),
        }
    }

    /// Code from root `root`, or `None` as soon as it is known to exceed `bound`.
    fn code(&mut self, g: &PlaneGraph, root: Dart, mirrored: bool, bound: Option<&[u32]>) -> Option<Vec<u32>> {
        let step = |d: Dart| if mirrored { g.prev(d) } else { g.next(d) };
        for &v in &self.order {
            self.label[v] = UNSET;
        }
        self.order.clear();
        let mut out: Vec<u32> = Vec::with_capacity(2 + 3 * g.edge_count() + g.vertex_count());
        let mut less = false;
        let mut push = |out: &mut Vec<u32>, x: u32| -> bool {
            if !less {
                if let Some(b) = bound {
                    let i = out.len();
                    match b.get(i).map(|&y| x.cmp(&y)) {
                        Some(std::cmp::Ordering::Greater) | None => return false,
                        Some(std::cmp::Ordering::Less) => less = true,
                        Some(std::cmp::Ordering::Equal) => {}
                    }
                }
            }
            out.push(x);
            true
        };
        let r = g.origin(root);
        self.label[r] = 0;
        self.entry[r] = root;
        self.order.push(r);
        let mut i = 0;
        while i < self.order.len() {
            let v = self.order[i];
            i += 1;
            let start = self.entry[v];
            let mut deg = 0u32;
            let mut d = start;
            loop {
                deg += 1;
                d = step(d);
                if d == start {
                    break;
                }
            }
            if !push(&mut out, deg) {
                return None;
            }
            let mut d = start;
            loop {
                let w = g.head(d);
                if self.label[w] == UNSET {
                    self.label[w] = self.order.len() as u32;
                    self.entry[w] = d ^ 1;
                    self.order.push(w);
                }
                // position of the twin in w's rotation, counted from w's entry
                let mut pos = 0u32;
                let mut x = self.entry[w];
                while x != d ^ 1 {
                    x = step(x);
                    pos += 1;
                }
                if !push(&mut out, self.label[w]) || !push(&mut out, pos) {
                    return None;
                }
                d = step(d);
                if d == start {
                    break;
                }
            }
        }
        if !less && bound.is_some_and(|b| b.len() <= out.len()) {
            return None;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn equal_for_relabeled_k4() {
        let a = k4();
        let b = PlaneGraph::build_from_rotation(&[vec![3, 2, 1], vec![2, 3, 0], vec![1, 0, 3], vec![2, 0, 1]])
            .unwrap();
        assert_eq!(CanonicalCode::of(&a), CanonicalCode::of(&b));
    }

    #[test]
    fn distinguishes_small_graphs() {
        assert_ne!(CanonicalCode::of(&k4()), CanonicalCode::of(&theta()));
        // prism vs the 6-vertex chain of theta pieces (two digons joined in a ring)
        let chain = circular_ladder(3).dual().dual();
        assert_eq!(CanonicalCode::of(&chain), CanonicalCode::of(&prism()));
        let theta_chain = PlaneGraph::build_from_rotation(&[
            vec![1, 1, 5],
            vec![0, 2, 0],
            vec![3, 3, 1],
            vec![2, 4, 2],
            vec![5, 5, 3],
            vec![4, 0, 4],
        ])
        .unwrap();
        assert_ne!(CanonicalCode::of(&theta_chain), CanonicalCode::of(&prism()));
    }

    #[test]
    fn rooted_codes_separate_edge_orbits() {
        let p = prism();
        let rung = p.edges().find(|&e| p.endpoints(e) == (0, 3)).unwrap();
        let tri = p.edges().find(|&e| p.endpoints(e) == (0, 1)).unwrap();
        assert_ne!(CanonicalCode::rooted(&p, rung), CanonicalCode::rooted(&p, tri));
        let g = k4();
        let codes: std::collections::BTreeSet<_> = g.edges().map(|e| CanonicalCode::rooted(&g, e)).collect();
        assert_eq!(codes.len(), 1);
    }
}
