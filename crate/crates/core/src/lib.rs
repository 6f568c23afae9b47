//! Chorded 2-factors of planar cubic graphs via special 3-colorings of
//! their dual triangulations.

pub mod classify;
pub mod coloring;
pub mod error;
pub mod factors;
pub mod io;
mod matching;
pub mod oracle;
pub mod planegraph;
pub mod suites;

pub use coloring::{BoundaryAssignment, Color, Coloring, FourSidedType, TypeTag};
pub use error::{Error, Result};
pub use factors::{ChordWitness, Cycle, Matching, SameCycleWitness, TwoFactor};
pub use planegraph::{
    named, CanonicalCode, CutKind, CycleSplit, Dart, EdgeCutReport, EdgeId, NearTriangulation,
    PlaneGraph, VertexId,
};
