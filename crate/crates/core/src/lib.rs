//! Maps on orientable surfaces, their partial duals, and the Lagrangian
//! matroids they carry, in exact arithmetic.
//!
//! * [`perm`]: permutations and permutation-group orders.
//! * [`map`]: oriented maps, duals, partial duals, isomorphism.
//! * [`lagrangian`]: admissible sets and Lagrangian matroids.
//! * [`repr`]: exact rational representations `(X|Y)`.
//! * [`polytope`]: matroid polytopes and the root-direction edge test.
//! * [`hyperoct`]: signed permutations acting on all of the above.
//! * [`doc`]: JSON documents for maps, matroids, matrices, and polytopes.

#![allow(clippy::needless_range_loop)]

pub mod doc;
pub mod error;
pub mod hyperoct;
pub mod lagrangian;
pub mod linalg;
pub mod lp;
pub mod map;
pub mod perm;
pub mod polytope;
pub mod repr;

pub use error::{Error, Result};
pub use map::{EdgeSubset, OrientedMap};
pub use perm::Perm;
