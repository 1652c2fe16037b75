use alloc::vec::Vec;

use num_bigint::BigInt;

use super::diamond::{DiamondFamily, HodgeDiamond};
use crate::counts::{d_count, gcd};
use crate::exact::BigRat;
use crate::sympower::{build_chain, is_supported, w_basis, w_mid_basis, ChainFamily};
use crate::weyl::v21_chain;
use crate::{Error, Result};

/// Per-degree middle-basis cardinalities of `Sym^k Kl_{n+1}` in `z`-grading.
pub fn kl_mid_counts(n: u32, k: u32, max_degree: Option<usize>) -> Result<Vec<usize>> {
    if !is_supported(ChainFamily::KlZ, n, k) {
        if gcd(u64::from(k), u64::from(n + 1)) == 1 {
            let count = d_count(n + 1, k);
            return Err(Error::VanishingSums { k, m: n + 1, count });
        }
        return Err(Error::CoprimalityRequired { k, m: n + 1 });
    }
    let chain = build_chain(ChainFamily::KlZ, n, k, max_degree)?;
    Ok(w_mid_basis(&chain)?.cardinalities())
}

/// Per-degree middle-basis cardinalities of `Sym^k K̃l_3` in `t`-grading, `n = 2`.
pub fn tilde_mid_counts(k: u32, max_degree: Option<usize>) -> Result<Vec<usize>> {
    let chain = build_chain(ChainFamily::KlTildeT, 2, k, max_degree)?;
    Ok(w_mid_basis(&chain)?.cardinalities())
}

/// Pure Hodge numbers of `Sym^k Kl_{n+1}` read off the middle basis: an
/// element of degree `d` lies in `gr_F^{nk+1-d}` and contributes to
/// `h^{nk+1-d, d}`.
///
/// When `gcd(k, n+1) > 1` (so `n = 2`, `3 | k`) the degree-to-level map is
/// only available for `d ≤ k`; those counts give `h^{2k+1-d, d}` and
/// `h^{d, 2k+1-d}` together.
pub fn hodge_kl_from_basis(n: u32, k: u32) -> Result<HodgeDiamond> {
    let counts = kl_mid_counts(n, k, None)?;
    let w = n * k + 1;
    let mut d = HodgeDiamond::new(DiamondFamily::Kl, n, k, w, false);
    for p in 0..=w {
        d.add_int(i64::from(p), i64::from(w - p), 0);
    }
    if gcd(u64::from(k), u64::from(n + 1)) != 1 {
        for (deg, &c) in counts.iter().enumerate().take(k as usize + 1) {
            let deg = deg as i64;
            d.add_int(i64::from(w) - deg, deg, c as u64);
            d.add_int(deg, i64::from(w) - deg, c as u64);
        }
        return Ok(d);
    }
    for (deg, &c) in counts.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let deg = deg as u32;
        if deg > w {
            return Err(Error::StabilizationFailed {
                degree: deg as usize,
                dim: c,
            });
        }
        d.add_int(i64::from(w - deg), i64::from(deg), c as u64);
    }
    Ok(d)
}

/// Pure Hodge numbers of `Sym^k K̃l_3` from the middle basis in `t`-grading.
///
/// Degrees `0..=k` give `h^{2k+1-d, d}` and, by symmetry, `h^{d, 2k+1-d}`.
pub fn hodge_tilde_from_basis(k: u32) -> Result<HodgeDiamond> {
    let counts = tilde_mid_counts(k, None)?;
    let w = 2 * k + 1;
    let mut d = HodgeDiamond::new(DiamondFamily::KlTilde, 2, k, w, false);
    for p in 0..=w {
        d.add_int(i64::from(p), i64::from(w - p), 0);
    }
    for (deg, &c) in counts.iter().enumerate().take(k as usize + 1) {
        let deg = deg as i64;
        d.add_int(i64::from(w) - deg, deg, c as u64);
        d.add_int(deg, i64::from(w) - deg, c as u64);
    }
    Ok(d)
}

/// Hodge numbers of `Sym^k Ai_n` from the cokernel basis: an element of
/// degree `d` sits at level `(nk+1-d)/(n+1)`.
pub fn hodge_airy_from_basis(n: u32, k: u32) -> Result<HodgeDiamond> {
    if n < 2 {
        return Err(Error::BadFamilyParams {
            family: "airy",
            reason: "n must be at least 2",
        });
    }
    if gcd(u64::from(k), u64::from(n)) != 1 {
        return Err(Error::CoprimalityRequired { k, m: n });
    }
    let chain = build_chain(ChainFamily::AiryZ, n, k, None)?;
    let counts = w_basis(&chain).cardinalities();
    let top = (n * k + 1 - n - k) as usize;
    let den = BigInt::from(n + 1);
    let mut d = HodgeDiamond::new(DiamondFamily::Airy, n, k, k + 1, false);
    for (deg, &c) in counts.iter().enumerate() {
        if deg > top {
            if c != 0 {
                return Err(Error::StabilizationFailed { degree: deg, dim: c });
            }
            continue;
        }
        let deg = deg as u32;
        d.add(
            BigRat::new(BigInt::from(n * k + 1 - deg), den.clone()),
            BigRat::new(BigInt::from(deg + n + k), den.clone()),
            c as u64,
        );
    }
    Ok(d)
}

/// Hodge numbers of the `V_{2,1}` motive: weight 9, an element of the middle
/// basis of degree `d` contributes to `h^{9-d, d}`.
pub fn hodge_v21() -> Result<HodgeDiamond> {
    let chain = v21_chain(None)?;
    let counts = w_mid_basis(&chain)?.cardinalities();
    let mut d = HodgeDiamond::new(DiamondFamily::V21, 2, 4, 9, false);
    for (deg, &c) in counts.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if deg > 9 {
            return Err(Error::StabilizationFailed { degree: deg, dim: c });
        }
        d.add_int(9 - deg as i64, deg as i64, c as u64);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::closed::{hodge_airy_closed, hodge_kl3_div3, hodge_kl_closed, hodge_tilde_kl3_pure};

    #[test]
    fn golden_by_basis() {
        assert_eq!(hodge_kl_from_basis(2, 10).unwrap(), hodge_kl_closed(2, 10).unwrap());
    }

    #[test]
    fn degenerate_by_basis() {
        assert_eq!(hodge_kl_from_basis(2, 3).unwrap().total(), 0);
    }

    #[test]
    fn kl3_by_basis() {
        assert_eq!(hodge_kl_from_basis(2, 6).unwrap(), hodge_kl3_div3(6).unwrap());
    }

    #[test]
    fn tilde_by_basis() {
        for k in [1, 2, 3, 4, 6] {
            assert_eq!(
                hodge_tilde_from_basis(k).unwrap(),
                hodge_tilde_kl3_pure(k).unwrap(),
                "k={k}"
            );
        }
    }

    #[test]
    fn airy_by_basis() {
        assert_eq!(hodge_airy_from_basis(3, 2).unwrap(), hodge_airy_closed(3, 2).unwrap());
        assert_eq!(hodge_airy_from_basis(2, 5).unwrap(), hodge_airy_closed(2, 5).unwrap());
        assert_eq!(hodge_airy_from_basis(4, 3).unwrap().total(), 5);
    }

    #[test]
    fn v21_numbers() {
        let d = hodge_v21().unwrap();
        assert_eq!(d.support().len(), 2);
        assert_eq!(d.get_int(4, 5), 1);
        assert_eq!(d.get_int(5, 4), 1);
        assert!(d.is_symmetric());
    }
}
