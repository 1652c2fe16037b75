use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::lattice::q_coeffs;
use super::orbits::{a_count, b_count, d_count};
use crate::Result;

/// Which Kloosterman connection: the plain one or its pullback along `z = t^{n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KlFamily {
    Kl,
    KlTilde,
}

/// `Soln_0 = Σ_{d=0}^{⌊nk/2⌋} q_{d,k}`, the dimension of `coker N_k`.
pub fn soln_zero(n: u32, k: u32) -> Result<u64> {
    let q = q_coeffs(n, k)?;
    let s: BigInt = q.iter().take((n * k / 2) as usize + 1).sum();
    debug_assert!(!s.is_negative());
    Ok(s.to_u64().expect("solution dimension fits in u64"))
}

/// Dimension of the solutions at infinity.
pub fn soln_infty(n: u32, k: u32, family: KlFamily) -> u64 {
    let m = n + 1;
    let v = match family {
        KlFamily::KlTilde if (n * k).is_multiple_of(2) => d_count(m, k),
        KlFamily::KlTilde => 0,
        KlFamily::Kl if n.is_multiple_of(2) => a_count(m, k).0,
        KlFamily::Kl if (n * k) % 2 == 1 => 0,
        KlFamily::Kl => b_count(m, k),
    };
    v as u64
}
