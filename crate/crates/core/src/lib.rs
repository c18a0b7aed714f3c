//! Proximinal and farthest bipartite graphs of finite semimetric spaces.
//!
//! Given a finite space with exact rational distances and two disjoint parts
//! `A` and `B`, the proximinal graph joins `a ∈ A` to `b ∈ B` when
//! `d(a, b) = dist(A, B)`, and the farthest graph joins them when `d(a, b)`
//! is the maximum over `A × B`. The crate computes both, decides which
//! bipartite graphs arise this way over metric and ultrametric spaces, and
//! builds witness spaces for the realizable ones.

pub mod bigraph;
pub mod dot;
pub mod dynamics;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod gen;
pub mod io;
pub mod proximity;
pub mod rational;
pub mod realize;
pub mod space;

pub use bigraph::{BipartiteGraph, Cardinality, Decomposition, IsoMode};
pub use error::{Error, Result};
pub use proximity::{farthest_graph, proximinal_graph, Mode, ProximityReport};
pub use rational::Rational;
pub use space::{FiniteSpace, Level, SpaceClass};
