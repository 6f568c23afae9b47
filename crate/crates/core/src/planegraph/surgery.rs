//! Id-preserving reductions used by the factor and classification algorithms.
//! Surviving vertices and edges keep their ids, so witnesses found on a
//! reduced graph translate back by set union.

use super::{edge_of, Dart, EdgeId, PlaneGraph, VertexId};
use crate::error::{Error, Result};

impl PlaneGraph {
    /// Splits the edge of `d` (from `a` to `b`) with a new vertex `x`. The
    /// edge id now joins `a` and `x`, keeping `d` in place at `a`; the new
    /// edge joins `x` and `b` in the old position at `b`.
    pub(crate) fn subdivide_mut(&mut self, d: Dart) -> (VertexId, EdgeId) {
        let t = d ^ 1;
        let b = self.origin[t];
        let p = self.prev[t];
        let alone = p == t;
        self.unlink(t);
        let x = self.add_vertex_mut();
        self.origin[t] = x;
        self.link_alone(t);
        let corner = if alone { Err(b) } else { Ok(p) };
        let f = self.add_edge_mut(Ok(t), corner);
        (x, f)
    }

    /// Moves dart `d` to the origin of `after`, right after it in clockwise order.
    pub(crate) fn move_dart_mut(&mut self, d: Dart, after: Dart) {
        self.unlink(d);
        self.origin[d] = self.origin[after];
        self.link_after(d, after);
    }

    /// Adds an edge `u v` through the face of `face`; both must lie on it.
    pub(crate) fn add_edge_in_face(&mut self, face: Dart, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let darts = self.face_darts(face);
        let at = |x: VertexId| {
            darts
                .iter()
                .copied()
                .find(|&d| self.origin[d] == x)
                .ok_or_else(|| Error::Internal(format!("vertex {x} is not on the face")))
        };
        let (du, dv) = (at(u)?, at(v)?);
        let (cu, cv) = (self.prev[du], self.prev[dv]);
        Ok(self.add_edge_mut(Ok(cu), Ok(cv)))
    }

    /// Contracts the edge of `d` into its origin, splicing the head's rotation
    /// in place of `d`. Other edges between the two ends become loops.
    pub(crate) fn contract_edge_mut(&mut self, d: Dart) {
        let t = d ^ 1;
        let u = self.origin[d];
        let v = self.origin[t];
        debug_assert_ne!(u, v);
        let mut moved = Vec::new();
        let mut x = self.next[t];
        while x != t {
            moved.push(x);
            x = self.next[x];
        }
        let mut after = self.prev[d];
        self.remove_edge_mut(edge_of(d));
        for &x in &moved {
            self.unlink(x);
        }
        let mut alone = after == d;
        for &x in &moved {
            self.origin[x] = u;
            if alone {
                self.link_alone(x);
                alone = false;
            } else {
                self.link_after(x, after);
            }
            after = x;
        }
        self.vertex_alive[v] = false;
        self.first[v] = None;
        self.live_vertices -= 1;
    }

    /// Contracts the connected vertex set `set` into `keep`, dropping every
    /// edge inside it.
    pub(crate) fn contract_set_mut(&mut self, set: &[VertexId], keep: VertexId) -> Result<()> {
        let mut inside = vec![false; self.vertex_slots()];
        for &v in set {
            inside[v] = true;
        }
        if !inside[keep] {
            return Err(Error::Precondition(format!("vertex {keep} is not in the set")));
        }
        let mut merged = vec![false; self.vertex_slots()];
        merged[keep] = true;
        let mut remaining = set.len() - 1;
        while remaining > 0 {
            let d = self
                .darts_at(keep)
                .find(|&d| {
                    let h = self.head(d);
                    inside[h] && !merged[h]
                })
                .ok_or_else(|| Error::Precondition("contracted set is not connected".into()))?;
            merged[self.head(d)] = true;
            self.contract_edge_mut(d);
            remaining -= 1;
        }
        while let Some(d) = self.darts_at(keep).find(|&d| self.head(d) == keep) {
            self.remove_edge_mut(edge_of(d));
        }
        Ok(())
    }

    /// Removes a degree-2 vertex `y`, joining its two neighbours by the edge
    /// `keep` (one of its edges); the other edge is deleted.
    pub(crate) fn suppress_mut(&mut self, y: VertexId, keep: EdgeId) -> Result<()> {
        let darts: Vec<Dart> = self.darts_at(y).collect();
        if darts.len() != 2 {
            return Err(Error::Precondition(format!("vertex {y} does not have degree 2")));
        }
        let (ky, gy) = if edge_of(darts[0]) == keep { (darts[0], darts[1]) } else { (darts[1], darts[0]) };
        if edge_of(ky) != keep {
            return Err(Error::Precondition(format!("edge {keep} is not at vertex {y}")));
        }
        let gp = gy ^ 1;
        let p2 = self.origin[gp];
        if p2 == y {
            return Err(Error::Precondition("cannot suppress a vertex carrying a loop".into()));
        }
        self.unlink(ky);
        self.origin[ky] = p2;
        self.link_after(ky, gp);
        self.remove_edge_mut(edge_of(gy));
        self.vertex_alive[y] = false;
        self.first[y] = None;
        self.live_vertices -= 1;
        Ok(())
    }

    /// The two sides of a 2-edge-cut `{f, g}` closed up into cubic graphs:
    /// the side containing `side_of` gets edge `f` joining its two cut ends,
    /// the other side gets edge `g`. Vertex ids are those of `self`.
    pub(crate) fn split_two_edge_cut(
        &self,
        f: EdgeId,
        g: EdgeId,
        side_of: VertexId,
    ) -> Result<(PlaneGraph, PlaneGraph)> {
        let (a, b) = self.sides_of_cut(&[f, g]);
        let (mine, other) = if a.contains(&side_of) { (a, b) } else { (b, a) };
        if mine.is_empty() || other.is_empty() {
            return Err(Error::Precondition(format!("{{{f}, {g}}} is not a 2-edge-cut")));
        }
        let close = |collapse: &[VertexId], keep_edge: EdgeId| -> Result<PlaneGraph> {
            let mut h = self.clone();
            let y = collapse[0];
            h.contract_set_mut(collapse, y)?;
            h.suppress_mut(y, keep_edge)?;
            h.check_plane()?;
            Ok(h)
        };
        Ok((close(&other, f)?, close(&mine, g)?))
    }
}

#[cfg(test)]
mod tests {
    use crate::planegraph::named::*;

    #[test]
    fn subdivide_keeps_faces_and_planarity() {
        let mut g = k4();
        let faces = g.face_count();
        let (x, f) = g.subdivide_mut(0);
        g.check_plane().unwrap();
        assert_eq!(g.face_count(), faces);
        assert_eq!(g.degree(x), 2);
        assert_eq!(g.head(0), x);
        assert!(g.is_edge(f));
    }

    #[test]
    fn contracting_a_triangle_of_the_prism_gives_k4() {
        let mut g = prism();
        let tri: Vec<_> = g.faces().into_iter().find(|f| f.len() == 3).unwrap();
        let set: Vec<_> = tri.iter().map(|&d| g.origin(d)).collect();
        g.contract_set_mut(&set, set[0]).unwrap();
        g.check_plane().unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert!(g.is_cubic());
        assert!(g.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn two_edge_cut_split_of_a_ladder() {
        let g = circular_ladder(2);
        let (f, h) = g.two_edge_cuts()[0];
        let (a, b) = g.split_two_edge_cut(f, h, g.endpoints(f).0).unwrap();
        for s in [&a, &b] {
            assert!(s.is_cubic());
            s.check_plane().unwrap();
        }
        assert_eq!(a.vertex_count() + b.vertex_count(), 4);
        assert!(a.is_edge(f) && b.is_edge(h));
    }
}
