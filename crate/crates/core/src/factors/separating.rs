use super::{two_factor_with_chord, Matching, TwoFactor};
use crate::error::{Error, Result};
use crate::planegraph::{Connectivity, EdgeId, PlaneGraph};

/// A perfect matching containing `e = uv` whose complement has at least two
/// cycles. Requires no edge parallel to `e` and `G - {u, v}` 2-edge-connected.
///
/// `u` and `v` are replaced by two adjacent vertices `u'`, `v'`, with `u'`
/// joined to the neighbours of `u` and `v` on one side of `e` and `v'` to those
/// on the other side. A 2-factor with chord `u'v'` then splits into two cycles
/// through `u` and `v`.
pub fn separating_pm_through_edge(g: &PlaneGraph, e: EdgeId) -> Result<Matching> {
    g.require_cubic()?;
    if !g.is_edge(e) {
        return Err(Error::Precondition(format!("no edge {e}")));
    }
    separating_pm_preconditions(g, e)?;
    let h = swap_sides(g, e)?;
    let w = two_factor_with_chord(&h, e)?;
    let factor = TwoFactor::new(g, w.factor.edges().to_vec())?;
    if factor.cycle_count() < 2 {
        return Err(Error::Internal("lifted 2-factor is connected".into()));
    }
    let m = factor.complement(g)?;
    if !m.contains(e) || !m.is_separating() {
        return Err(Error::Internal("separating matching failed verification".into()));
    }
    Ok(m)
}

/// Do `no parallel edge` and `G - {u, v}` 2-edge-connected hold for `e`?
pub fn separating_pm_preconditions(g: &PlaneGraph, e: EdgeId) -> Result<()> {
    let (u, v) = g.endpoints(e);
    if u == v {
        return Err(Error::Precondition(format!("edge {e} is a loop")));
    }
    if g.multiplicity(u, v) > 1 {
        return Err(Error::Precondition(format!("edge {e} has a parallel edge")));
    }
    let c = Connectivity::new(g).without_vertices(&[u, v]);
    if !c.is_connected() {
        return Err(Error::Precondition(format!("removing the ends of edge {e} disconnects the graph")));
    }
    if let Some(&b) = c.bridges().first() {
        return Err(Error::Precondition(format!(
            "removing the ends of edge {e} leaves the bridge {b}"
        )));
    }
    Ok(())
}

/// Moves the far-side edge of `v` to `u` and the far-side edge of `u` to `v`,
/// keeping all ids.
fn swap_sides(g: &PlaneGraph, e: EdgeId) -> Result<PlaneGraph> {
    let du = 2 * e;
    let dv = du ^ 1;
    let mut h = g.clone();
    // u: [du, u1, u2]; v: [dv, v2, v1] clockwise; u1 and v1 share a face, as do u2 and v2
    let a = g.prev(dv); // v -> v1
    let b = g.prev(du); // u -> u2
    h.move_dart_mut(a, du);
    h.move_dart_mut(b, dv);
    h.check_plane()?;
    Ok(h)
}
