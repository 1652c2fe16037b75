//! Symmetric-power derivations, the graded complexes they generate and
//! explicit bases of the resulting cohomology.
//!
//! Fibers carry a weight grading with `N` raising weight by one and `E`
//! lowering it. A [`GradedChain`] tensors a fiber with `C[z]` (or `C[t]`) and
//! slices it by total degree, so that `θ̄` becomes a finite matrix between
//! consecutive slices.

mod basis;
mod chain;
mod eigen;
mod fiber;

pub use basis::{w_basis, w_mid_basis, BasisKind, BasisSet};
pub use chain::{
    build_chain, coker_slice_dims, default_max_degree, is_supported, kernel_slice_dims, slice_degrees_consistent,
    ChainFamily, GradedChain, SliceElem,
};
pub use eigen::{apply_tilde_theta, eigen_relation_via_chain, eigen_rhs, eta_power, f_basic, f_vector, CycloVector};
pub use fiber::{ek_apply, nk_apply, Fiber, FiberLabel};

use alloc::vec::Vec;

/// Jordan block sizes of `N_k` on `Sym^k C^{n+1}`, descending.
pub fn jordan_blocks(n: u32, k: u32) -> Vec<usize> {
    Fiber::sym(n as usize + 1, k).jordan_blocks()
}

/// Per-weight dimensions of `coker N_k` on `Sym^k C^{n+1}`.
pub fn coker_nk_dims(n: u32, k: u32) -> Vec<usize> {
    Fiber::sym(n as usize + 1, k).coker_n_dims()
}
