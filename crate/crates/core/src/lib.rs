//! Exact characters and weight multiplicities for the A-series Lie algebras.
//!
//! The library works over `sl(N)` (i.e. `A_{N-1}`) and computes the full
//! multiplicity table of an irreducible highest-weight representation by
//! expanding its character into Weyl-orbit characters, rewriting both sides as
//! polynomials in the power-sum indeterminates, and solving the resulting
//! linear system exactly.  Every number in the pipeline is an
//! arbitrary-precision rational, so results are exact by construction.
//!
//! Independent oracles (semistandard-tableau counting, the Freudenthal
//! recursion, hook-content dimensions, and the Weyl alternant ratio) live in
//! [`oracles`] and are used to cross-check the primary route.

pub mod document;
pub mod error;
mod linalg;
pub mod multiplicity;
pub mod oracles;
pub mod orbits;
pub mod poly;
pub mod symfunc;
pub mod weights;

pub use error::{Error, Result};
