//! Combinatorial counts: `Q_k`, lattice counts `N_{d,k}` and `n_{d,k}`, the
//! series `h(t,x)`, cyclotomic vanishing sums and their orbit counts, and the
//! local solution dimensions.

mod cyclo;
mod lattice;
mod multi;
mod orbits;
mod soln;

pub use cyclo::{cyclotomic_poly, CycloInt, CycloRing};
pub use lattice::{h_denominator, h_series, lattice_N, lattice_table, q_bar, q_coeffs, q_poly, small_n, small_n_table};
pub use multi::{binomial, gcd, MultiIndex};
pub use orbits::{a_count, b_count, d_count, signed_shift_sum, vanishing_indices, OrbitSet};
pub use soln::{soln_infty, soln_zero, KlFamily};
