//! Plane multigraphs stored as rotation systems.
//!
//! Every edge `e` owns the two darts `2e` and `2e + 1`; `twin(d) = d ^ 1`.
//! `next(d)` is the clockwise successor of `d` around its origin vertex, and
//! faces are the orbits of `d -> next(twin(d))`. Removed vertices and edges
//! leave tombstones so that ids stay stable across surgery; `compact` renumbers.

mod canonical;
mod cuts;
mod near;
mod surgery;

pub use canonical::CanonicalCode;
pub use cuts::{CutKind, EdgeCutReport};
pub(crate) use cuts::Connectivity;
pub use near::{CycleSplit, NearTriangulation};
pub(crate) use near::{find_face, find_parallel_pair, separating_triangles_in, split_at_cycle};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type Dart = usize;

#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn edge_of(d: Dart) -> EdgeId {
    d >> 1
}

#[derive(Clone, Debug)]
pub struct PlaneGraph {
    origin: Vec<VertexId>,
    next: Vec<Dart>,
    prev: Vec<Dart>,
    /// Some dart leaving each live vertex; `None` marks a removed (or isolated) slot.
    first: Vec<Option<Dart>>,
    vertex_alive: Vec<bool>,
    edge_alive: Vec<bool>,
    live_vertices: usize,
    live_edges: usize,
}

impl PlaneGraph {
    /// Builds a graph from explicit edges and per-vertex clockwise lists of
    /// incident edge ids. This is the unambiguous constructor: parallel edges
    /// are told apart by id. Self-loops are rejected.
    pub fn from_edge_rotation(
        vertex_count: usize,
        endpoints: &[(VertexId, VertexId)],
        rotation: &[Vec<EdgeId>],
    ) -> Result<Self> {
        let g = Self::from_edge_rotation_unchecked(vertex_count, endpoints, rotation)?;
        g.check_plane()?;
        Ok(g)
    }

    pub(crate) fn from_edge_rotation_unchecked(
        vertex_count: usize,
        endpoints: &[(VertexId, VertexId)],
        rotation: &[Vec<EdgeId>],
    ) -> Result<Self> {
        if rotation.len() != vertex_count {
            return Err(Error::InconsistentRotation(format!(
                "{} rotation lists for {} vertices",
                rotation.len(),
                vertex_count
            )));
        }
        let m = endpoints.len();
        let mut origin = vec![usize::MAX; 2 * m];
        for (e, &(u, v)) in endpoints.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InconsistentRotation(format!(
                    "edge {e} has an endpoint out of range"
                )));
            }
            if u == v {
                return Err(Error::InconsistentRotation(format!("edge {e} is a self-loop")));
            }
            origin[2 * e] = u;
            origin[2 * e + 1] = v;
        }
        let mut next = vec![usize::MAX; 2 * m];
        let mut prev = vec![usize::MAX; 2 * m];
        let mut seen = vec![false; 2 * m];
        let mut first = vec![None; vertex_count];
        for (v, list) in rotation.iter().enumerate() {
            let mut darts = Vec::with_capacity(list.len());
            for &e in list {
                if e >= m {
                    return Err(Error::InconsistentRotation(format!(
                        "vertex {v} lists unknown edge {e}"
                    )));
                }
                let d = if origin[2 * e] == v {
                    2 * e
                } else if origin[2 * e + 1] == v {
                    2 * e + 1
                } else {
                    return Err(Error::InconsistentRotation(format!(
                        "vertex {v} lists edge {e} which is not incident to it"
                    )));
                };
                if seen[d] {
                    return Err(Error::InconsistentRotation(format!(
                        "edge {e} listed twice at vertex {v}"
                    )));
                }
                seen[d] = true;
                darts.push(d);
            }
            for i in 0..darts.len() {
                let d = darts[i];
                let n = darts[(i + 1) % darts.len()];
                next[d] = n;
                prev[n] = d;
            }
            first[v] = darts.first().copied();
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(Error::InconsistentRotation(format!(
                "edge {} missing from the rotation at vertex {}",
                edge_of(d),
                origin[d]
            )));
        }
        Ok(Self {
            origin,
            next,
            prev,
            first,
            vertex_alive: vec![true; vertex_count],
            edge_alive: vec![true; m],
            live_vertices: vertex_count,
            live_edges: m,
        })
    }

    /// Builds a graph from per-vertex clockwise neighbor lists, as found in
    /// planar code. Occurrences of a repeated neighbor are paired in reverse
    /// cyclic order (the only pairings that can be planar); the offset of each
    /// such pairing is searched until the embedding has genus 0.
    pub fn build_from_rotation(adj: &[Vec<VertexId>]) -> Result<Self> {
        let n = adj.len();
        // positions[(u, v)] for u < v: occurrences of v in adj[u] and of u in adj[v]
        let mut pairs: std::collections::BTreeMap<(VertexId, VertexId), (Vec<usize>, Vec<usize>)> =
            Default::default();
        for (u, list) in adj.iter().enumerate() {
            for (i, &v) in list.iter().enumerate() {
                if v >= n {
                    return Err(Error::InconsistentRotation(format!(
                        "vertex {u} lists neighbor {v} out of range"
                    )));
                }
                if v == u {
                    return Err(Error::InconsistentRotation(format!("self-loop at vertex {u}")));
                }
                let key = (u.min(v), u.max(v));
                let entry = pairs.entry(key).or_default();
                if u < v {
                    entry.0.push(i);
                } else {
                    entry.1.push(i);
                }
            }
        }
        let keys: Vec<_> = pairs.keys().copied().collect();
        for k in &keys {
            let (a, b) = &pairs[k];
            if a.len() != b.len() {
                return Err(Error::InconsistentRotation(format!(
                    "vertices {} and {} disagree on edge multiplicity",
                    k.0, k.1
                )));
            }
        }
        let multi: Vec<usize> = (0..keys.len())
            .filter(|&i| pairs[&keys[i]].0.len() > 1)
            .collect();
        let combos: usize = multi
            .iter()
            .map(|&i| pairs[&keys[i]].0.len())
            .try_fold(1usize, |acc, m| acc.checked_mul(m))
            .unwrap_or(usize::MAX);
        const MAX_PAIRINGS: usize = 1 << 16;
        if combos > MAX_PAIRINGS {
            return Err(Error::BoundExceeded {
                what: "multi-edge pairings",
                value: combos,
                bound: MAX_PAIRINGS,
            });
        }
        let mut offsets = vec![0usize; keys.len()];
        let mut last_err = None;
        for _ in 0..combos {
            let mut endpoints = Vec::new();
            let mut rotation: Vec<Vec<Option<EdgeId>>> =
                adj.iter().map(|l| vec![None; l.len()]).collect();
            for (ki, k) in keys.iter().enumerate() {
                let (pu, pv) = &pairs[k];
                let m = pu.len();
                for i in 0..m {
                    let j = (offsets[ki] + m - i) % m;
                    let e = endpoints.len();
                    endpoints.push((k.0, k.1));
                    rotation[k.0][pu[i]] = Some(e);
                    rotation[k.1][pv[j]] = Some(e);
                }
            }
            let rotation: Vec<Vec<EdgeId>> = rotation
                .into_iter()
                .map(|l| l.into_iter().map(|e| e.expect("every slot paired")).collect())
                .collect();
            match Self::from_edge_rotation(n, &endpoints, &rotation) {
                Ok(g) => return Ok(g),
                Err(e @ Error::NonZeroGenus(_)) => last_err = Some(e),
                Err(e) => return Err(e),
            }
            // advance the mixed-radix counter over multi-edge offsets
            for &i in &multi {
                offsets[i] += 1;
                if offsets[i] < pairs[&keys[i]].0.len() {
                    break;
                }
                offsets[i] = 0;
            }
        }
        Err(last_err.unwrap_or(Error::NonZeroGenus(1)))
    }

    /// Checks the rotation-system invariants, connectivity and genus 0.
    pub fn check_plane(&self) -> Result<()> {
        self.check_links()?;
        if self.live_edges == 0 {
            return if self.live_vertices <= 1 {
                Ok(())
            } else {
                Err(Error::Disconnected)
            };
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let chi = self.live_vertices as isize - self.live_edges as isize + self.face_count() as isize;
        if chi != 2 {
            return Err(Error::NonZeroGenus(((2 - chi) / 2).max(0) as usize));
        }
        Ok(())
    }

    fn check_links(&self) -> Result<()> {
        for e in self.edges() {
            for d in [2 * e, 2 * e + 1] {
                let v = self.origin[d];
                if !self.vertex_alive[v] {
                    return Err(Error::Internal(format!("dart {d} leaves removed vertex {v}")));
                }
                if self.prev[self.next[d]] != d || self.next[self.prev[d]] != d {
                    return Err(Error::Internal(format!("rotation links broken at dart {d}")));
                }
                if self.origin[self.next[d]] != v {
                    return Err(Error::Internal(format!("rotation at {v} leaves the vertex")));
                }
            }
        }
        for v in self.vertices() {
            if let Some(d) = self.first[v] {
                if !self.edge_alive[edge_of(d)] || self.origin[d] != v {
                    return Err(Error::Internal(format!("stale first dart at vertex {v}")));
                }
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.live_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// Number of vertex slots (live and removed).
    pub fn vertex_slots(&self) -> usize {
        self.first.len()
    }

    pub fn edge_slots(&self) -> usize {
        self.edge_alive.len()
    }

    pub fn is_vertex(&self, v: VertexId) -> bool {
        v < self.vertex_alive.len() && self.vertex_alive[v]
    }

    pub fn is_edge(&self, e: EdgeId) -> bool {
        e < self.edge_alive.len() && self.edge_alive[e]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.first.len()).filter(move |&v| self.vertex_alive[v])
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_alive.len()).filter(move |&e| self.edge_alive[e])
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.edges().flat_map(|e| [2 * e, 2 * e + 1])
    }

    #[inline]
    pub fn origin(&self, d: Dart) -> VertexId {
        self.origin[d]
    }

    #[inline]
    pub fn head(&self, d: Dart) -> VertexId {
        self.origin[d ^ 1]
    }

    #[inline]
    pub fn next(&self, d: Dart) -> Dart {
        self.next[d]
    }

    #[inline]
    pub fn prev(&self, d: Dart) -> Dart {
        self.prev[d]
    }

    /// Successor of `d` along its face.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        self.next[d ^ 1]
    }

    /// Predecessor of `d` along its face.
    #[inline]
    pub fn face_prev(&self, d: Dart) -> Dart {
        self.prev[d] ^ 1
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.origin[2 * e], self.origin[2 * e + 1])
    }

    /// Some dart leaving `v`, if `v` has any incident edge.
    pub fn dart_at(&self, v: VertexId) -> Option<Dart> {
        self.first.get(v).copied().flatten()
    }

    /// Darts leaving `v` in clockwise order.
    pub fn darts_at(&self, v: VertexId) -> RotationIter<'_> {
        RotationIter {
            g: self,
            start: self.dart_at(v),
            cur: self.dart_at(v),
        }
    }

    /// Darts leaving `origin(d)` in clockwise order starting with `d`.
    pub fn darts_from(&self, d: Dart) -> RotationIter<'_> {
        RotationIter {
            g: self,
            start: Some(d),
            cur: Some(d),
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.darts_at(v).count()
    }

    /// Neighbors of `v` in clockwise order, with repetition for parallel edges.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.darts_at(v).map(|d| self.head(d)).collect()
    }

    /// A dart from `u` to `v`, if the two are adjacent.
    pub fn dart_between(&self, u: VertexId, v: VertexId) -> Option<Dart> {
        self.darts_at(u).find(|&d| self.head(d) == v)
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.dart_between(u, v).is_some()
    }

    /// Number of edges joining `u` and `v`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.darts_at(u).filter(|&d| self.head(d) == v).count()
    }

    /// Darts of the face containing `d`, starting at `d`.
    pub fn face_darts(&self, d: Dart) -> Vec<Dart> {
        let mut out = vec![d];
        let mut x = self.face_next(d);
        while x != d {
            out.push(x);
            x = self.face_next(x);
        }
        out
    }

    /// Vertices around the face containing `d` (origins of its darts).
    pub fn face_vertices(&self, d: Dart) -> Vec<VertexId> {
        self.face_darts(d).into_iter().map(|x| self.origin[x]).collect()
    }

    /// All faces as dart cycles. Face `i` is the orbit discovered `i`-th when
    /// scanning darts in increasing order.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.origin.len()];
        let mut out = Vec::new();
        for d in self.darts() {
            if seen[d] {
                continue;
            }
            let face = self.face_darts(d);
            for &x in &face {
                seen[x] = true;
            }
            out.push(face);
        }
        out
    }

    /// Face index of every dart, consistent with [`PlaneGraph::faces`].
    pub fn face_index(&self) -> (Vec<usize>, usize) {
        let mut idx = vec![usize::MAX; self.origin.len()];
        let mut count = 0;
        for d in self.darts() {
            if idx[d] != usize::MAX {
                continue;
            }
            let mut x = d;
            loop {
                idx[x] = count;
                x = self.face_next(x);
                if x == d {
                    break;
                }
            }
            count += 1;
        }
        (idx, count)
    }

    pub fn face_count(&self) -> usize {
        self.face_index().1
    }

    pub fn is_connected(&self) -> bool {
        let Some(start) = self.vertices().next() else {
            return true;
        };
        let mut seen = vec![false; self.first.len()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for d in self.darts_at(v) {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.live_vertices
    }

    pub fn has_self_loop(&self) -> bool {
        self.edges().any(|e| {
            let (u, v) = self.endpoints(e);
            u == v
        })
    }

    pub fn is_cubic(&self) -> bool {
        self.vertices().all(|v| self.degree(v) == 3)
    }

    pub fn require_cubic(&self) -> Result<()> {
        for v in self.vertices() {
            let d = self.degree(v);
            if d != 3 {
                return Err(Error::NotCubic(v, d));
            }
        }
        Ok(())
    }

    /// Is every face bounded by exactly three darts?
    pub fn is_triangulation(&self) -> bool {
        !self.has_self_loop() && self.faces().iter().all(|f| f.len() == 3)
    }

    /// Per-vertex clockwise neighbor lists over live vertices, renumbered densely.
    pub fn to_adjacency(&self) -> Vec<Vec<VertexId>> {
        let (g, _) = self.compact();
        g.vertices().map(|v| g.neighbors(v)).collect()
    }

    /// Per-vertex clockwise lists of incident edge ids (live slots only; removed
    /// vertices get empty lists).
    pub fn edge_rotation(&self) -> Vec<Vec<EdgeId>> {
        (0..self.first.len())
            .map(|v| {
                if self.vertex_alive[v] {
                    self.darts_at(v).map(edge_of).collect()
                } else {
                    Vec::new()
                }
            })
            .collect()
    }

    /// Renumbers live vertices and edges densely. Returns the new graph and
    /// the map from old vertex ids to new ones.
    pub fn compact(&self) -> (PlaneGraph, Vec<Option<VertexId>>) {
        let (g, vmap, _) = self.compact_with_edges();
        (g, vmap)
    }

    pub fn compact_with_edges(&self) -> (PlaneGraph, Vec<Option<VertexId>>, Vec<Option<EdgeId>>) {
        let mut vmap = vec![None; self.first.len()];
        for (i, v) in self.vertices().enumerate() {
            vmap[v] = Some(i);
        }
        let mut emap = vec![None; self.edge_alive.len()];
        let mut endpoints = Vec::with_capacity(self.live_edges);
        for (i, e) in self.edges().enumerate() {
            emap[e] = Some(i);
            let (u, v) = self.endpoints(e);
            endpoints.push((vmap[u].unwrap(), vmap[v].unwrap()));
        }
        let n = self.live_vertices;
        let mut origin = vec![0; 2 * endpoints.len()];
        let mut next = vec![0; 2 * endpoints.len()];
        let mut prev = vec![0; 2 * endpoints.len()];
        let mut first = vec![None; n];
        let map_dart = |d: Dart| 2 * emap[edge_of(d)].unwrap() + (d & 1);
        for v in self.vertices() {
            let nv = vmap[v].unwrap();
            for d in self.darts_at(v) {
                let nd = map_dart(d);
                origin[nd] = nv;
                next[nd] = map_dart(self.next[d]);
                prev[nd] = map_dart(self.prev[d]);
                first[nv].get_or_insert(nd);
            }
        }
        let g = PlaneGraph {
            origin,
            next,
            prev,
            first,
            vertex_alive: vec![true; n],
            edge_alive: vec![true; endpoints.len()],
            live_vertices: n,
            live_edges: endpoints.len(),
        };
        (g, vmap, emap)
    }

    /// The planar dual. Dual vertex `i` is face `i` of `self` (see
    /// [`PlaneGraph::faces`]); dual edge `e` crosses primal edge `e`, so the
    /// edge correspondence is the identity on edge ids. Removed edge slots of
    /// `self` stay removed in the dual.
    pub fn dual(&self) -> PlaneGraph {
        let (fidx, fcount) = self.face_index();
        let m = self.edge_alive.len();
        let mut origin = vec![0; 2 * m];
        let mut next = vec![0; 2 * m];
        let mut prev = vec![0; 2 * m];
        let mut first = vec![None; fcount];
        for d in self.darts() {
            let f = fidx[d];
            origin[d] = f;
            let n = self.face_next(d);
            next[d] = n;
            prev[n] = d;
            first[f].get_or_insert(d);
        }
        PlaneGraph {
            origin,
            next,
            prev,
            first,
            vertex_alive: vec![true; fcount],
            edge_alive: self.edge_alive.clone(),
            live_vertices: fcount,
            live_edges: self.live_edges,
        }
    }

    // ---------------------------------------------------------------
    // In-place surgery. Callers are responsible for keeping the result a
    // plane map; the public non-mutating wrappers validate.
    // ---------------------------------------------------------------

    fn unlink(&mut self, d: Dart) {
        let v = self.origin[d];
        let (p, n) = (self.prev[d], self.next[d]);
        if n == d {
            self.first[v] = None;
        } else {
            self.next[p] = n;
            self.prev[n] = p;
            if self.first[v] == Some(d) {
                self.first[v] = Some(n);
            }
        }
        self.next[d] = d;
        self.prev[d] = d;
    }

    /// Links `d` (already carrying its origin) into the rotation right after `after`.
    fn link_after(&mut self, d: Dart, after: Dart) {
        let n = self.next[after];
        self.next[after] = d;
        self.prev[d] = after;
        self.next[d] = n;
        self.prev[n] = d;
    }

    fn link_alone(&mut self, d: Dart) {
        self.next[d] = d;
        self.prev[d] = d;
        self.first[self.origin[d]] = Some(d);
    }

    pub(crate) fn add_vertex_mut(&mut self) -> VertexId {
        self.first.push(None);
        self.vertex_alive.push(true);
        self.live_vertices += 1;
        self.first.len() - 1
    }

    /// Adds an edge whose end at `origin(a)` sits right after `a` and whose end
    /// at `origin(b)` sits right after `b` in clockwise order. Either corner may
    /// be given as `Err(v)` for a vertex that currently has no edges.
    pub(crate) fn add_edge_mut(
        &mut self,
        a: std::result::Result<Dart, VertexId>,
        b: std::result::Result<Dart, VertexId>,
    ) -> EdgeId {
        let e = self.edge_alive.len();
        self.edge_alive.push(true);
        self.live_edges += 1;
        let u = match a {
            Ok(d) => self.origin[d],
            Err(v) => v,
        };
        let v = match b {
            Ok(d) => self.origin[d],
            Err(v) => v,
        };
        self.origin.extend([u, v]);
        self.next.extend([2 * e, 2 * e + 1]);
        self.prev.extend([2 * e, 2 * e + 1]);
        for (d, corner) in [(2 * e, a), (2 * e + 1, b)] {
            match corner {
                Ok(after) => self.link_after(d, after),
                Err(_) => self.link_alone(d),
            }
        }
        e
    }

    pub(crate) fn remove_edge_mut(&mut self, e: EdgeId) {
        debug_assert!(self.edge_alive[e]);
        self.unlink(2 * e);
        self.unlink(2 * e + 1);
        self.edge_alive[e] = false;
        self.live_edges -= 1;
    }

    /// Removes `v` and all its incident edges.
    pub(crate) fn remove_vertex_mut(&mut self, v: VertexId) {
        while let Some(d) = self.first[v] {
            self.remove_edge_mut(edge_of(d));
        }
        self.vertex_alive[v] = false;
        self.live_vertices -= 1;
    }

    /// Third vertex of the (triangular) face containing `d`.
    #[inline]
    pub fn face_third(&self, d: Dart) -> VertexId {
        self.head(self.face_next(d))
    }

    /// Replaces the edge of `d` by the other diagonal of its two incident
    /// triangles, keeping the edge id. Returns the new dart from the third
    /// vertex of `d`'s face to the third vertex of the twin's face.
    pub(crate) fn flip_mut(&mut self, d: Dart) -> Result<Dart> {
        let t = d ^ 1;
        if self.face_darts(d).len() != 3 || self.face_darts(t).len() != 3 {
            return Err(Error::Precondition("flip needs two triangular faces".into()));
        }
        // face of d: u->v, v->wa, wa->u ; face of t: v->u, u->wb, wb->v
        let x = self.face_next(d); // v -> wa
        let y = self.face_next(t); // u -> wb
        let wa = self.head(x);
        let wb = self.head(y);
        if wa == wb {
            return Err(Error::Precondition(
                "flip needs distinct opposite vertices".into(),
            ));
        }
        self.unlink(d);
        self.unlink(t);
        // corner at wa between (wa->v) and (wa->u); at wb between (wb->u) and (wb->v)
        self.origin[d] = wa;
        self.origin[t] = wb;
        self.link_after(d, x ^ 1);
        self.link_after(t, y ^ 1);
        Ok(d)
    }

    /// Contracts the edge of `d` (from `u` to `v`) into `u`: deletes the edge
    /// and the two edges from `v` to the opposite vertices of its triangles,
    /// then moves the remaining edges of `v` to `u` at the position of the
    /// deleted edge. Parallel `u`-`v` edges become self-loops at `u`.
    pub(crate) fn contract_mut(&mut self, d: Dart) -> Result<()> {
        let t = d ^ 1;
        let u = self.origin[d];
        let v = self.origin[t];
        if u == v {
            return Err(Error::Precondition("cannot contract a self-loop".into()));
        }
        if self.face_darts(d).len() != 3 || self.face_darts(t).len() != 3 {
            return Err(Error::Precondition("contraction needs two triangular faces".into()));
        }
        let a = self.next[t]; // v -> wa
        let b = self.prev[t]; // v -> wb
        if a == b || edge_of(a) == edge_of(b) {
            return Err(Error::Precondition("contracted vertex has degree 2".into()));
        }
        // remaining darts at v in clockwise order, from after a up to before b
        let mut moved = Vec::new();
        let mut x = self.next[a];
        while x != b {
            moved.push(x);
            x = self.next[x];
        }
        let anchor = self.prev[d];
        for e in [edge_of(a), edge_of(b)] {
            self.remove_edge_mut(e);
        }
        for &x in &moved {
            self.unlink(x);
        }
        self.remove_edge_mut(edge_of(d));
        let mut after = if anchor == d { None } else { Some(anchor) };
        for &x in &moved {
            self.origin[x] = u;
            match after {
                Some(p) => self.link_after(x, p),
                None => self.link_alone(x),
            }
            after = Some(x);
        }
        self.vertex_alive[v] = false;
        self.first[v] = None;
        self.live_vertices -= 1;
        Ok(())
    }

    /// Graph restricted to the given edges; every vertex slot is kept but
    /// vertices left without edges are removed. Rotations are inherited.
    pub(crate) fn restrict_to_edges(&self, keep: &[bool]) -> PlaneGraph {
        let mut g = self.clone();
        for e in self.edges() {
            if !keep[e] {
                g.remove_edge_mut(e);
            }
        }
        for v in self.vertices() {
            if g.first[v].is_none() {
                g.vertex_alive[v] = false;
                g.live_vertices -= 1;
            }
        }
        g
    }

    // ---------------------------------------------------------------
    // Validated, non-mutating surgery.
    // ---------------------------------------------------------------

    /// Flips edge `e`; see [`NearTriangulation::flip`] for the boundary-aware variant.
    pub fn flip(&self, e: EdgeId) -> Result<PlaneGraph> {
        if !self.is_edge(e) {
            return Err(Error::Precondition(format!("no edge {e}")));
        }
        let mut g = self.clone();
        g.flip_mut(2 * e)?;
        g.check_plane()?;
        Ok(g)
    }

    /// Contracts edge `e` into its endpoint `keep`. Vertex and edge ids of the
    /// survivors are unchanged; the result may contain self-loops.
    pub fn contract_to(&self, e: EdgeId, keep: VertexId) -> Result<PlaneGraph> {
        if !self.is_edge(e) {
            return Err(Error::Precondition(format!("no edge {e}")));
        }
        let d = if self.origin[2 * e] == keep {
            2 * e
        } else if self.origin[2 * e + 1] == keep {
            2 * e + 1
        } else {
            return Err(Error::Precondition(format!("vertex {keep} is not an end of edge {e}")));
        };
        let mut g = self.clone();
        g.contract_mut(d)?;
        g.check_plane()?;
        Ok(g)
    }

    /// Adds a new vertex of degree 3 inside the triangular face of `d`.
    pub fn insert_in_face(&self, d: Dart) -> Result<(PlaneGraph, VertexId)> {
        if self.face_darts(d).len() != 3 {
            return Err(Error::Precondition("face is not a triangle".into()));
        }
        let mut g = self.clone();
        let v = g.stack_vertex_mut(d)?;
        Ok((g, v))
    }

    /// Adds a new vertex inside the face of `d`, joined to every vertex of that face.
    pub(crate) fn stack_vertex_mut(&mut self, d: Dart) -> Result<VertexId> {
        let face = self.face_darts(d);
        let mut seen = std::collections::HashSet::new();
        if !face.iter().all(|&x| seen.insert(self.origin[x])) {
            return Err(Error::Precondition("face repeats a vertex".into()));
        }
        let v = self.add_vertex_mut();
        // the face corner at origin(x) follows prev(x)
        let mut last: Option<Dart> = None;
        for &x in &face {
            let e = self.add_edge_mut(Ok(self.prev[x]), last.ok_or(v));
            last = Some(2 * e + 1);
        }
        // clockwise order at v is the reverse of the face order
        let darts: Vec<Dart> = self.darts_at(v).collect();
        let rev: Vec<Dart> = darts.iter().rev().copied().collect();
        for i in 0..rev.len() {
            let a = rev[i];
            let b = rev[(i + 1) % rev.len()];
            self.next[a] = b;
            self.prev[b] = a;
        }
        self.first[v] = Some(rev[0]);
        Ok(v)
    }
}

pub struct RotationIter<'a> {
    g: &'a PlaneGraph,
    start: Option<Dart>,
    cur: Option<Dart>,
}

impl Iterator for RotationIter<'_> {
    type Item = Dart;

    fn next(&mut self) -> Option<Dart> {
        let d = self.cur?;
        let n = self.g.next[d];
        self.cur = if Some(n) == self.start { None } else { Some(n) };
        Some(d)
    }
}

/// Small named graphs used throughout tests, examples and the CLI.
pub mod named {
    use super::*;

    /// Builds a graph from clockwise neighbor lists that are known to be valid.
    fn from_lists(adj: &[&[VertexId]]) -> PlaneGraph {
        let adj: Vec<Vec<VertexId>> = adj.iter().map(|l| l.to_vec()).collect();
        PlaneGraph::build_from_rotation(&adj).expect("named graph is a valid plane embedding")
    }

    pub fn k3() -> PlaneGraph {
        from_lists(&[&[1, 2], &[2, 0], &[0, 1]])
    }

    /// The tetrahedron `K4`.
    pub fn k4() -> PlaneGraph {
        from_lists(&[&[1, 2, 3], &[0, 3, 2], &[0, 1, 3], &[0, 2, 1]])
    }

    /// Two vertices joined by three parallel edges.
    pub fn theta() -> PlaneGraph {
        from_lists(&[&[1, 1, 1], &[0, 0, 0]])
    }

    /// The triangular prism `K3 x K2`: triangles 0,1,2 and 3,4,5 with rungs i -- i+3.
    pub fn prism() -> PlaneGraph {
        from_lists(&[
            &[1, 2, 3],
            &[2, 0, 4],
            &[0, 1, 5],
            &[0, 5, 4],
            &[1, 3, 5],
            &[2, 4, 3],
        ])
    }

    /// The cube `Q3`: square 0,1,2,3 and square 4,5,6,7 with rungs i -- i+4.
    pub fn cube() -> PlaneGraph {
        circular_ladder(4)
    }

    /// The prism over a `k`-cycle (`k >= 2`): outer cycle 0..k, inner cycle k..2k,
    /// rungs i -- i+k. For `k = 2` the cycles are 2-cycles.
    pub fn circular_ladder(k: usize) -> PlaneGraph {
        assert!(k >= 2);
        let mut endpoints = Vec::new();
        let outer: Vec<EdgeId> = (0..k)
            .map(|i| {
                endpoints.push((i, (i + 1) % k));
                endpoints.len() - 1
            })
            .collect();
        let inner: Vec<EdgeId> = (0..k)
            .map(|i| {
                endpoints.push((k + i, k + (i + 1) % k));
                endpoints.len() - 1
            })
            .collect();
        let rung: Vec<EdgeId> = (0..k)
            .map(|i| {
                endpoints.push((i, k + i));
                endpoints.len() - 1
            })
            .collect();
        let mut rot = vec![Vec::new(); 2 * k];
        for i in 0..k {
            let p = (i + k - 1) % k;
            rot[i] = vec![outer[i], outer[p], rung[i]];
            rot[k + i] = vec![inner[i], rung[i], inner[p]];
        }
        PlaneGraph::from_edge_rotation(2 * k, &endpoints, &rot)
            .expect("circular ladder is planar")
    }

    /// The octahedron.
    pub fn octahedron() -> PlaneGraph {
        // poles 0 and 5, equator 1,2,3,4
        from_lists(&[
            &[1, 2, 3, 4],
            &[0, 4, 5, 2],
            &[0, 1, 5, 3],
            &[0, 2, 5, 4],
            &[0, 3, 5, 1],
            &[1, 4, 3, 2],
        ])
    }

    /// The triangular bipyramid: equator 0,1,2 and apexes 3, 4.
    pub fn bipyramid() -> PlaneGraph {
        from_lists(&[&[1, 3, 2, 4], &[2, 3, 0, 4], &[0, 3, 1, 4], &[0, 1, 2], &[0, 2, 1]])
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn vef(g: &PlaneGraph) -> (usize, usize, usize) {
        (g.vertex_count(), g.edge_count(), g.face_count())
    }

    #[test]
    fn named_graphs_satisfy_euler() {
        assert_eq!(vef(&k4()), (4, 6, 4));
        assert_eq!(vef(&theta()), (2, 3, 3));
        assert_eq!(vef(&k3()), (3, 3, 2));
        assert_eq!(vef(&prism()), (6, 9, 5));
        assert_eq!(vef(&cube()), (8, 12, 6));
        assert_eq!(vef(&octahedron()), (6, 12, 8));
        assert_eq!(vef(&bipyramid()), (5, 9, 6));
        assert_eq!(vef(&circular_ladder(2)), (4, 6, 4));
    }

    #[test]
    fn k5_rotation_is_rejected() {
        let adj: Vec<Vec<usize>> = (0..5)
            .map(|v| (1..5).map(|i| (v + i) % 5).collect())
            .collect();
        assert!(matches!(
            PlaneGraph::build_from_rotation(&adj),
            Err(Error::NonZeroGenus(_))
        ));
    }

    #[test]
    fn inconsistent_and_disconnected_inputs_are_rejected() {
        let bad = vec![vec![1, 2], vec![0], vec![1]];
        assert!(matches!(
            PlaneGraph::build_from_rotation(&bad),
            Err(Error::InconsistentRotation(_))
        ));
        let two_edges = vec![vec![1], vec![0], vec![3], vec![2]];
        assert_eq!(
            PlaneGraph::build_from_rotation(&two_edges).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn face_lengths() {
        assert!(theta().faces().iter().all(|f| f.len() == 2));
        assert!(k4().faces().iter().all(|f| f.len() == 3));
        let cube_faces = cube().faces();
        assert_eq!(cube_faces.len(), 6);
        assert!(cube_faces.iter().all(|f| f.len() == 4));
    }

    #[test]
    fn cube_faces_match_hand_trace() {
        // squares of the circular ladder: outer 0123, inner 4567, and four sides
        let g = cube();
        let mut faces: Vec<Vec<usize>> = g
            .faces()
            .iter()
            .map(|f| {
                let mut vs: Vec<usize> = f.iter().map(|&d| g.origin(d)).collect();
                vs.sort();
                vs
            })
            .collect();
        faces.sort();
        assert_eq!(
            faces,
            vec![
                vec![0, 1, 2, 3],
                vec![0, 1, 4, 5],
                vec![0, 3, 4, 7],
                vec![1, 2, 5, 6],
                vec![2, 3, 6, 7],
                vec![4, 5, 6, 7]
            ]
        );
    }

    #[test]
    fn dual_examples() {
        let d = theta().dual();
        assert_eq!(vef(&d), (3, 3, 2));
        assert!(d.is_triangulation());
        let d = k4().dual();
        assert_eq!(CanonicalCode::of(&d), CanonicalCode::of(&k4()));
        let d = prism().dual();
        assert_eq!(CanonicalCode::of(&d), CanonicalCode::of(&bipyramid()));
    }

    #[test]
    fn dual_of_dual_is_identity_up_to_embedding() {
        for g in [k4(), theta(), prism(), cube(), octahedron(), circular_ladder(5)] {
            assert_eq!(CanonicalCode::of(&g.dual().dual()), CanonicalCode::of(&g));
            // dual edge e crosses primal e in both directions
            let dd = g.dual().dual();
            assert_eq!(dd.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn flip_is_an_involution() {
        let g = octahedron();
        for e in g.edges() {
            let f = g.flip(e).unwrap();
            assert_eq!(f.face_count(), g.face_count());
            assert!(f.faces().iter().all(|x| x.len() == 3));
            let back = f.flip(e).unwrap();
            assert_eq!(CanonicalCode::of(&back), CanonicalCode::of(&g));
        }
    }

    #[test]
    fn contract_drops_one_vertex_and_three_edges() {
        let g = octahedron();
        for e in g.edges() {
            let (u, _) = g.endpoints(e);
            let c = g.contract_to(e, u).unwrap();
            assert_eq!(c.vertex_count(), 5);
            assert_eq!(c.edge_count(), 9);
            assert!(c.faces().iter().all(|f| f.len() == 3));
        }
    }

    #[test]
    fn contracting_inside_a_two_cycle_creates_a_loop() {
        let t = circular_ladder(2).dual();
        let multi = t
            .edges()
            .find(|&e| {
                let (u, v) = t.endpoints(e);
                t.multiplicity(u, v) > 1
            })
            .unwrap();
        let (u, _) = t.endpoints(multi);
        let c = t.contract_to(multi, u).unwrap();
        assert!(c.has_self_loop());
    }

    #[test]
    fn stacking_a_vertex_keeps_a_triangulation() {
        let g = k4();
        let d = g.darts().next().unwrap();
        let (h, v) = g.insert_in_face(d).unwrap();
        h.check_plane().unwrap();
        assert_eq!(h.degree(v), 3);
        assert!(h.is_triangulation());
        assert_eq!(h.vertex_count(), 5);
    }

    #[test]
    fn compact_renumbers() {
        let g = octahedron();
        let c = g.contract_to(0, g.endpoints(0).0).unwrap();
        let (k, map) = c.compact();
        assert_eq!(k.vertex_count(), 5);
        assert_eq!(map.iter().filter(|m| m.is_none()).count(), 1);
        k.check_plane().unwrap();
    }
}
