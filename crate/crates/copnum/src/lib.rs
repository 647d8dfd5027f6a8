//! Cops and robbers on directed and undirected abelian Cayley graphs.
//!
//! The crate bundles:
//!
//! - finite abelian group arithmetic with table-backed quotients ([`group`]),
//! - Cayley game instances `(G, S, T)` with boundary classification and
//!   DOT/JSON export ([`cayley`]),
//! - guard accounting: which difference elements neutralize which robber
//!   moves ([`accounting`]),
//! - an exact cop-number solver by symmetry-reduced retrograde analysis
//!   ([`solver`]),
//! - constructive cop strategies built from guard certificates, playable
//!   against arbitrary robber adversaries ([`strategy`]),
//! - closed-form bound functions and their numerical verification sweeps
//!   ([`bounds`]),
//! - Sidon-type extremal constructions with certified cop numbers
//!   ([`constructions`]).

pub mod accounting;
pub mod bounds;
pub mod cayley;
pub mod constructions;
pub mod group;
pub mod solver;
pub mod strategy;

pub use cayley::{build_instance, BoundaryClass, GameInstance};
pub use group::{AbelianGroup, GroupElement, QuotientMap};
