use num_bigint::BigInt;

use crate::counts::{binomial, d_count, gcd, soln_infty, soln_zero, KlFamily};
use crate::exact::BigRat;
use crate::{Error, Result};

/// Cohomology dimensions and local solution counts of one connection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimReport {
    pub dim_h1: u64,
    pub dim_mid: u64,
    pub soln_0: u64,
    pub soln_inf: u64,
    /// Irregularity at infinity; only tabulated for the Kloosterman families.
    pub irregularity: Option<BigRat>,
}

/// Dimensions for `Sym^k Kl_{n+1}` or its pullback.
pub fn dims_kl(n: u32, k: u32, family: KlFamily) -> Result<DimReport> {
    let m = n + 1;
    let total = binomial(u64::from(n + k), u64::from(n)) as u64 - d_count(m, k) as u64;
    let irregularity = match family {
        KlFamily::Kl => BigRat::new(BigInt::from(total), BigInt::from(m)),
        KlFamily::KlTilde => BigRat::from_integer(BigInt::from(total)),
    };
    let dim_h1 = match family {
        KlFamily::KlTilde => total,
        KlFamily::Kl if total.is_multiple_of(u64::from(m)) => total / u64::from(m),
        KlFamily::Kl => {
            return Err(Error::NonIntegralDimension {
                value: total,
                modulus: m,
            })
        }
    };
    let soln_0 = soln_zero(n, k)?;
    let soln_inf = soln_infty(n, k, family);
    let dim_mid = dim_h1.checked_sub(soln_0 + soln_inf).ok_or(Error::DimensionMismatch {
        expected: dim_h1 as usize,
        found: (soln_0 + soln_inf) as usize,
    })?;
    Ok(DimReport {
        dim_h1,
        dim_mid,
        soln_0,
        soln_inf,
        irregularity: Some(irregularity),
    })
}

/// Dimensions for `Sym^k Ai_n`, which has no local solutions to remove.
pub fn dims_airy(n: u32, k: u32) -> Result<DimReport> {
    if gcd(u64::from(k), u64::from(n)) != 1 {
        return Err(Error::CoprimalityRequired { k, m: n });
    }
    let b = binomial(u64::from(k + n - 1), u64::from(n - 1)) as u64;
    if !b.is_multiple_of(u64::from(n)) {
        return Err(Error::NonIntegralDimension { value: b, modulus: n });
    }
    let dim = b / u64::from(n);
    Ok(DimReport {
        dim_h1: dim,
        dim_mid: dim,
        soln_0: 0,
        soln_inf: 0,
        irregularity: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kl_examples() {
        let r = dims_kl(2, 10, KlFamily::Kl).unwrap();
        assert_eq!((r.dim_h1, r.dim_mid), (22, 16));
        assert_eq!(dims_kl(2, 3, KlFamily::Kl).unwrap().dim_mid, 0);
        assert_eq!(dims_kl(2, 3, KlFamily::KlTilde).unwrap().dim_mid, 6);
        assert_eq!(dims_kl(2, 3, KlFamily::KlTilde).unwrap().dim_h1, 9);
    }

    #[test]
    fn n_two_closed_forms() {
        // dim_mid = (k+1)(k+2)/6 - d/3 - 1 - ⌊k/2⌋ - a for the plain family.
        for k in 1..=15u32 {
            let d = u64::from(k % 3 == 0);
            let plain = dims_kl(2, k, KlFamily::Kl).unwrap().dim_mid;
            let expect = (u64::from((k + 1) * (k + 2)) - 2 * d) / 6 - 1 - u64::from(k / 2) - d;
            assert_eq!(plain, expect, "k={k}");
            let tilde = dims_kl(2, k, KlFamily::KlTilde).unwrap().dim_mid;
            assert_eq!(tilde, u64::from((k + 1) * (k + 2) / 2) - 1 - u64::from(k / 2) - 2 * d);
        }
    }

    #[test]
    fn airy_examples() {
        assert_eq!(dims_airy(3, 2).unwrap().dim_h1, 2);
        assert_eq!(dims_airy(2, 1).unwrap().dim_h1, 1);
        assert_eq!(dims_airy(4, 3).unwrap().dim_mid, 5);
        assert!(matches!(dims_airy(2, 4), Err(Error::CoprimalityRequired { .. })));
    }
}
