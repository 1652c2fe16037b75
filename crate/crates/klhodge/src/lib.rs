//! Exact computation of Hodge numbers, cohomology dimensions and graded
//! cohomology bases for symmetric powers of Kloosterman and Airy connections.
//!
//! The crate is `no_std` and only needs an allocator. Every quantity is an
//! integer or an exact rational; there is no floating point anywhere.
//!
//! Layers, bottom up:
//!
//! * [`exact`]: rationals, dense polynomials, truncated bivariate series and
//!   sparse integer elimination.
//! * [`counts`]: the combinatorial side (lattice counts, cyclotomic vanishing
//!   sums, orbit counts, local solution dimensions).
//! * [`sympower`]: graded two-term complexes built from the derivation actions
//!   `N_k`, `E_k` on symmetric powers, with explicit cokernel bases.
//! * [`weyl`]: the 15-dimensional representation `V_{2,1}` of `SL_3`.
//! * [`hodge`]: closed-form Hodge tables, their basis-counting counterparts and
//!   the consistency engine that compares the two.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod counts;
pub mod error;
pub mod exact;
pub mod hodge;
pub mod sympower;
pub mod weyl;

pub use error::{Error, Result};
