//! Exact invariants of normal surface singularities from their weighted
//! dual resolution graphs.
//!
//! The crate works entirely in exact integer and rational arithmetic:
//!
//! - [`graph`]: dual graphs, cycles and the intersection pairing;
//! - [`cycles`]: fundamental cycles, the canonical cycle, `χ` and
//!   Riemann–Roch colengths;
//! - [`elliptic`]: minimally elliptic cycles and elliptic sequences;
//! - [`classify`]: elliptic ideals whose normal tangent cone is Gorenstein,
//!   and normal Hilbert data;
//! - [`wh`]: geometric genus of weighted homogeneous hypersurfaces;
//! - [`artinian`]: colengths of `(f) + M` for monomial ideals `M`.

pub mod artinian;
pub mod classify;
pub mod cycles;
pub mod elliptic;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod poly;
pub mod wh;

pub use error::{Error, Result};
pub use graph::{Cycle, DualGraph, QCycle, Vertex};
