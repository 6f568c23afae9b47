//! Special 3-colorings of triangulations and 4-sided near-triangulations.
//!
//! A coloring is special for a near-triangulation with boundary `v_1, v_2, ...`
//! when no internal face is monochromatic and the only edge joining an
//! `a`-vertex to a `b`-vertex is `v_1 v_2` with `v_1 = a`, `v_2 = b`.

mod penaud;
mod search;
mod solve;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::planegraph::{NearTriangulation, PlaneGraph, VertexId};

pub(crate) use penaud::penaud_raw;
pub(crate) use search::exact_special_search;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Color {
    #[default]
    A,
    B,
    C,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::A, Color::B, Color::C];

    pub fn as_char(self) -> char {
        match self {
            Color::A => 'a',
            Color::B => 'b',
            Color::C => 'c',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'a' => Some(Color::A),
            'b' => Some(Color::B),
            'c' => Some(Color::C),
            _ => None,
        }
    }

    /// Exchanges `a` and `b`, fixing `c`.
    pub fn swap_ab(self) -> Color {
        match self {
            Color::A => Color::B,
            Color::B => Color::A,
            Color::C => Color::C,
        }
    }

    /// Is `{self, other} = {a, b}`?
    pub fn is_ab_pair(self, other: Color) -> bool {
        matches!((self, other), (Color::A, Color::B) | (Color::B, Color::A))
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// A color per vertex slot of some graph.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(slots: usize) -> Self {
        Coloring(vec![Color::A; slots])
    }

    pub fn from_vec(colors: Vec<Color>) -> Self {
        Coloring(colors)
    }

    pub fn get(&self, v: VertexId) -> Color {
        self.0.get(v).copied().unwrap_or_default()
    }

    pub fn set(&mut self, v: VertexId, c: Color) {
        if v >= self.0.len() {
            self.0.resize(v + 1, Color::A);
        }
        self.0[v] = c;
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Applies `map[c]` to every color (indexed by `Color as usize`).
    pub fn permuted(&self, map: [Color; 3]) -> Coloring {
        Coloring(self.0.iter().map(|&c| map[c.index()]).collect())
    }

    /// Exchanges the colors `a` and `b` everywhere.
    pub fn swap_ab(&self) -> Coloring {
        Coloring(self.0.iter().map(|&c| c.swap_ab()).collect())
    }

    /// Copies the colors of `vertices` from `other`.
    pub(crate) fn copy_from(&mut self, other: &Coloring, vertices: impl Iterator<Item = VertexId>) {
        for v in vertices {
            self.set(v, other.get(v));
        }
    }

    /// The colors of `vertices` as a boundary string.
    pub fn restrict(&self, vertices: &[VertexId]) -> BoundaryAssignment {
        BoundaryAssignment(vertices.iter().map(|&v| self.get(v)).collect())
    }
}

impl std::ops::Index<VertexId> for Coloring {
    type Output = Color;

    fn index(&self, v: VertexId) -> &Color {
        &self.0[v]
    }
}

/// A string over `{a, b, c}` assigned to a boundary `v_1, ..., v_l`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryAssignment(pub Vec<Color>);

impl BoundaryAssignment {
    pub fn abc() -> Self {
        "abc".parse().unwrap()
    }

    pub fn abbc() -> Self {
        "abbc".parse().unwrap()
    }

    pub fn abca() -> Self {
        "abca".parse().unwrap()
    }

    pub fn abcc() -> Self {
        "abcc".parse().unwrap()
    }

    /// The three 4-sided assignments in their fixed order `abbc, abca, abcc`.
    pub fn four_sided() -> [Self; 3] {
        [Self::abbc(), Self::abca(), Self::abcc()]
    }

    /// Position of `self` in [`BoundaryAssignment::four_sided`].
    pub fn four_sided_index(&self) -> Option<usize> {
        Self::four_sided().iter().position(|s| s == self)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for BoundaryAssignment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| Color::from_char(c).ok_or_else(|| Error::Precondition(format!("bad color {c:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(BoundaryAssignment)
    }
}

impl fmt::Display for BoundaryAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeTag {
    /// `abbc` and `abca` feasible.
    T1,
    /// `abca` and `abcc` feasible.
    T2,
    /// `abbc` and `abcc` feasible.
    T3,
}

/// Which of `abbc, abca, abcc` are feasible for a 4-sided near-triangulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FourSidedType {
    pub feasible: [bool; 3],
}

impl FourSidedType {
    pub fn feasible_set(&self) -> Vec<BoundaryAssignment> {
        BoundaryAssignment::four_sided()
            .into_iter()
            .zip(self.feasible)
            .filter_map(|(s, ok)| ok.then_some(s))
            .collect()
    }

    pub fn count(&self) -> usize {
        self.feasible.iter().filter(|&&x| x).count()
    }

    /// Every tag whose two assignments are feasible.
    pub fn tags(&self) -> Vec<TypeTag> {
        let [abbc, abca, abcc] = self.feasible;
        let mut out = Vec::new();
        if abbc && abca {
            out.push(TypeTag::T1);
        }
        if abca && abcc {
            out.push(TypeTag::T2);
        }
        if abbc && abcc {
            out.push(TypeTag::T3);
        }
        out
    }
}

/// Does every internal face have two distinct colors?
pub fn verify_nonmonochromatic(nt: &NearTriangulation, f: &Coloring) -> bool {
    nonmonochromatic_in(nt.graph(), nt.outer(), f)
}

pub(crate) fn nonmonochromatic_in(g: &PlaneGraph, outer: usize, f: &Coloring) -> bool {
    let (fidx, _) = g.face_index();
    let outer_face = fidx[outer];
    g.faces().iter().all(|face| {
        fidx[face[0]] == outer_face || {
            let c = f.get(g.origin(face[0]));
            face.iter().any(|&d| f.get(g.origin(d)) != c)
        }
    })
}

/// Non-monochromatic, `f(v_1) = a`, `f(v_2) = b`, and every `ab`-edge joins `v_1` and `v_2`.
pub fn verify_special(nt: &NearTriangulation, f: &Coloring) -> bool {
    let b = nt.boundary();
    special_in(nt.graph(), nt.outer(), b[0], b[1], f)
}

pub(crate) fn special_in(g: &PlaneGraph, outer: usize, v1: VertexId, v2: VertexId, f: &Coloring) -> bool {
    if f.get(v1) != Color::A || f.get(v2) != Color::B {
        return false;
    }
    let ab_ok = g.edges().all(|e| {
        let (x, y) = g.endpoints(e);
        !f.get(x).is_ab_pair(f.get(y)) || (x == v1 && y == v2) || (x == v2 && y == v1)
    });
    ab_ok && nonmonochromatic_in(g, outer, f)
}

fn require_boundary(nt: &NearTriangulation, l: usize) -> Result<()> {
    if nt.boundary().len() != l {
        return Err(Error::Precondition(format!(
            "expected a {l}-sided boundary, got {}",
            nt.boundary().len()
        )));
    }
    Ok(())
}

/// A non-monochromatic coloring with colors `a, c` only, `v_1 = v_2 = a` and `v_3 = c`.
pub fn penaud_2coloring(nt: &NearTriangulation) -> Result<Coloring> {
    require_boundary(nt, 3)?;
    let b = nt.boundary();
    let f = penaud_raw(nt.graph(), [b[0], b[1], b[2]])?;
    let ok = verify_nonmonochromatic(nt, &f)
        && f.get(b[0]) == Color::A
        && f.get(b[1]) == Color::A
        && f.get(b[2]) == Color::C;
    if !ok {
        return Err(Error::Internal("2-coloring failed verification".into()));
    }
    Ok(f)
}

/// A special coloring with boundary `abc`.
pub fn special_3coloring(nt: &NearTriangulation) -> Result<Coloring> {
    require_boundary(nt, 3)?;
    let b = nt.boundary();
    let f = stacker::maybe_grow(RED_ZONE, STACK, || {
        solve::solve3(nt.graph().clone(), [b[0], b[1], b[2]], usize::MAX)
    })?;
    if f.restrict(b) != BoundaryAssignment::abc() || !verify_special(nt, &f) {
        return Err(Error::Internal("special coloring failed verification".into()));
    }
    Ok(f)
}

/// A special coloring with boundary `s`, or `None` when `s` is infeasible.
/// `s` must be one of `abbc, abca, abcc`.
pub fn special_3coloring_4sided(nt: &NearTriangulation, s: &BoundaryAssignment) -> Result<Option<Coloring>> {
    require_boundary(nt, 4)?;
    let idx = s
        .four_sided_index()
        .ok_or_else(|| Error::Precondition(format!("{s} is not one of abbc, abca, abcc")))?;
    let mut all = construct_4sided(nt)?;
    if let Some(f) = all[idx].take() {
        return Ok(Some(f));
    }
    let b = nt.boundary();
    Ok(exact_special_search(nt.graph(), nt.outer(), b, s))
}

/// The exact set of feasible assignments among `abbc, abca, abcc`.
pub fn classify_4sided(nt: &NearTriangulation) -> Result<FourSidedType> {
    require_boundary(nt, 4)?;
    let all = construct_4sided(nt)?;
    let mut feasible = [false; 3];
    for (i, s) in BoundaryAssignment::four_sided().iter().enumerate() {
        feasible[i] = all[i].is_some() || exact_special_search(nt.graph(), nt.outer(), nt.boundary(), s).is_some();
    }
    Ok(FourSidedType { feasible })
}

/// Colorings constructed by the recursion for each of `abbc, abca, abcc`; at
/// least two are present and every present one is verified.
pub(crate) fn construct_4sided(nt: &NearTriangulation) -> Result<[Option<Coloring>; 3]> {
    let b = nt.boundary();
    let out = stacker::maybe_grow(RED_ZONE, STACK, || {
        solve::solve4(nt.graph().clone(), [b[0], b[1], b[2], b[3]], usize::MAX, false)
    })?;
    let strings = BoundaryAssignment::four_sided();
    for (f, s) in out.iter().zip(&strings) {
        if let Some(f) = f {
            if f.restrict(b) != *s || !verify_special(nt, f) {
                return Err(Error::Internal(format!("constructed {s} coloring failed verification")));
            }
        }
    }
    if out.iter().filter(|f| f.is_some()).count() < 2 {
        return Err(Error::Internal("fewer than two assignments constructed".into()));
    }
    Ok(out)
}

const RED_ZONE: usize = 256 * 1024;
const STACK: usize = 16 * 1024 * 1024;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planegraph::named::*;

    fn cols(s: &str) -> Coloring {
        Coloring::from_vec(BoundaryAssignment::from_str(s).unwrap().0)
    }

    fn quad_with_chord(chord13: bool) -> NearTriangulation {
        let adj = if chord13 {
            vec![vec![1, 2, 3], vec![2, 0], vec![3, 0, 1], vec![0, 2]]
        } else {
            vec![vec![1, 3], vec![2, 3, 0], vec![3, 1], vec![0, 1, 2]]
        };
        let g = PlaneGraph::build_from_rotation(&adj).unwrap();
        NearTriangulation::with_boundary(g, &[0, 1, 2, 3]).unwrap()
    }

    fn wheel4() -> NearTriangulation {
        let adj = vec![vec![1, 4, 3], vec![2, 4, 0], vec![3, 4, 1], vec![0, 4, 2], vec![0, 1, 2, 3]];
        let g = PlaneGraph::build_from_rotation(&adj).unwrap();
        NearTriangulation::with_boundary(g, &[0, 1, 2, 3]).unwrap()
    }

    #[test]
    fn checker_examples() {
        let k3t = NearTriangulation::with_boundary(k3(), &[0, 1, 2]).unwrap();
        assert!(verify_nonmonochromatic(&k3t, &cols("abc")));
        assert!(verify_special(&k3t, &cols("abc")));
        assert!(!verify_special(&k3t, &cols("abb")));
        let t = NearTriangulation::with_boundary(k4(), &[0, 1, 2]).unwrap();
        assert!(!verify_nonmonochromatic(&t, &cols("aaaa")));
        assert!(verify_special(&t, &cols("abcc")));
        let q = quad_with_chord(true);
        assert!(!verify_special(&q, &cols("abbc")));
        assert!(verify_special(&q, &cols("abca")));
    }

    #[test]
    fn transforms() {
        let f = cols("abcab");
        assert_eq!(f.swap_ab(), cols("bacba"));
        assert_eq!(f.permuted([Color::C, Color::B, Color::A]), cols("cbacb"));
        assert_eq!(f.swap_ab().swap_ab(), f);
    }

    #[test]
    fn tetrahedron_interior_gets_c() {
        let t = NearTriangulation::with_boundary(k4(), &[0, 1, 2]).unwrap();
        let f = special_3coloring(&t).unwrap();
        assert_eq!(f.restrict(&[0, 1, 2, 3]).to_string(), "abcc");
    }

    #[test]
    fn penaud_on_small_triangulations() {
        for (g, b) in [(k3(), [0, 1, 2]), (k4(), [0, 1, 2]), (bipyramid(), [0, 1, 3])] {
            let t = NearTriangulation::with_boundary(g, &b).unwrap();
            let f = penaud_2coloring(&t).unwrap();
            assert!(f.as_slice().iter().all(|&c| c != Color::B));
        }
    }

    #[test]
    fn chord_and_wheel_types() {
        let t2 = classify_4sided(&quad_with_chord(true)).unwrap();
        assert_eq!(t2.feasible, [false, true, true]);
        assert_eq!(t2.tags(), vec![TypeTag::T2]);
        let t3 = classify_4sided(&quad_with_chord(false)).unwrap();
        assert_eq!(t3.feasible, [true, false, true]);
        let t1 = classify_4sided(&wheel4()).unwrap();
        assert_eq!(t1.tags(), vec![TypeTag::T1]);
        let q = quad_with_chord(true);
        assert!(special_3coloring_4sided(&q, &BoundaryAssignment::abbc()).unwrap().is_none());
        let f = special_3coloring_4sided(&q, &BoundaryAssignment::abca()).unwrap().unwrap();
        assert_eq!(f.restrict(q.boundary()), BoundaryAssignment::abca());
        let w = wheel4();
        let f = special_3coloring_4sided(&w, &BoundaryAssignment::abbc()).unwrap().unwrap();
        assert_eq!(f.get(4), Color::C);
    }

    #[test]
    fn octahedron_every_face_and_labeling() {
        let g = octahedron();
        for face in g.faces() {
            let vs = g.face_vertices(face[0]);
            for r in 0..3 {
                for rev in [false, true] {
                    let mut b: Vec<_> = (0..3).map(|i| vs[(i + r) % 3]).collect();
                    if rev {
                        b.swap(0, 1);
                    }
                    let t = NearTriangulation::with_boundary(g.clone(), &b).unwrap();
                    special_3coloring(&t).unwrap();
                }
            }
        }
    }
}
