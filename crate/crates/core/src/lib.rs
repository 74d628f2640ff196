//! Exact computation of the graded pieces of T¹ for affine semigroup rings,
//! with inseparability, semi-rigidity and rigidity tools for numerical
//! semigroups with three generators, edge rings of bipartite graphs and
//! polyomino rings.
//!
//! Indices are 0-based throughout the library.

pub mod bipartite;
pub mod error;
pub mod linalg;
pub mod numsgp3;
pub mod polyomino;
pub mod semigroup;
pub mod separation;
pub mod t1;

pub use error::{Error, Result};
pub use linalg::{IntMatrix, IntVector};
pub use semigroup::{AffineSemigroup, OracleChoice, OracleKind};
pub use t1::{Presentation, T1Report};
