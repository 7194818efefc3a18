//! Finite racks and quandles, knot and surface colorings, rack/quandle
//! homology and cocycle state-sum invariants.

pub mod algebra;
pub mod cli;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod homology;
pub mod invariant;

pub use error::{Error, Result};
