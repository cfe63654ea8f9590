//! Exact computation in finite braid groups and the locally finite tower
//! built from them.
//!
//! The crate has three layers:
//!
//! * [`word`] — braid words in the Artin generators, the permutation map,
//!   strand forgetting, pairwise winding numbers, and the standard pure
//!   generators. Triviality is decided by two independent exact solvers
//!   ([`dynnikov`] and [`handle`]).
//! * [`tower`] and [`ext`] — level-indexed families of pure braid words
//!   modeling elements of the inverse limit of the pure braid groups, the
//!   dyadic ultrametric and product metric on them, winding obstructions,
//!   Cauchy diagonals, and the finitary full-group extension.
//! * [`geom`] — based piecewise-linear loops in the plane with exact
//!   rational coordinates, certified configuration metrics, winding
//!   degrees, and the sweep that converts a loop into a braid word.
//!
//! Everything is `no_std` + `alloc`; there is no floating point anywhere.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod dynnikov;
pub mod ext;
pub mod geom;
pub mod handle;
pub mod tower;
pub mod word;

pub use ext::{ExtDistance, ExtElement};
pub use tower::{DyadicDistance, ProductDistance, Rule, TowerElement};
pub use word::{BraidError, BraidWord, Permutation, Solver};
