//! Hodge tables: closed formulas, the basis-counting routes, dimension
//! reports and the consistency engine.

mod closed;
mod diamond;
mod dims;
mod from_basis;
mod verify;

pub use closed::{
    hodge_airy_closed, hodge_kl3_div3, hodge_kl_closed, hodge_tilde_kl3_pure, mixed_hodge_kl3, mixed_hodge_tilde_kl3,
};
pub use diamond::{level_display, level_string, DiamondFamily, HodgeDiamond};
pub use dims::{dims_airy, dims_kl, DimReport};
pub use from_basis::{
    hodge_airy_from_basis, hodge_kl_from_basis, hodge_tilde_from_basis, hodge_v21, kl_mid_counts, tilde_mid_counts,
};

pub use verify::{verify, Check, ConsistencyReport};
