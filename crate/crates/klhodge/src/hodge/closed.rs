use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::diamond::{DiamondFamily, HodgeDiamond};
use crate::counts::{d_count, gcd, h_denominator};
use crate::exact::{expand_rational, BigRat, DensePoly};
use crate::{Error, Result};

fn coefficient_u64(c: &BigInt) -> Result<u64> {
    c.to_u64().ok_or(Error::NonIntegerCoefficient { t: 0, x: 0 })
}

/// Pure Hodge numbers of `Sym^k Kl_{n+1}` for `gcd(k, n+1) = 1` and
/// `d(k, n+1) = 0`. The two conditions agree when `n + 1` is a prime power.
///
/// `h^{p,nk+1-p}` is the `t^p x^k` coefficient of
/// `(1-t) t^{n+1} / ((1-t^{n+1})(1-x)(1-tx)⋯(1-t^n x))` for `p ≤ (nk+1)/2`,
/// and the table is completed by symmetry.
pub fn hodge_kl_closed(n: u32, k: u32) -> Result<HodgeDiamond> {
    if gcd(u64::from(k), u64::from(n + 1)) != 1 {
        return Err(Error::CoprimalityRequired { k, m: n + 1 });
    }
    let count = d_count(n + 1, k);
    if count != 0 {
        return Err(Error::VanishingSums { k, m: n + 1, count });
    }
    let w = n * k + 1;
    let mut num = alloc::vec![0i64; n as usize + 3];
    num[n as usize + 1] = 1;
    num[n as usize + 2] = -1;
    let series = expand_rational(
        &DensePoly::from_ints(&num),
        &h_denominator(n),
        w as usize + 1,
        k as usize + 1,
    )?;
    let mut d = HodgeDiamond::new(DiamondFamily::Kl, n, k, w, false);
    for p in 0..=w {
        let src = if 2 * p <= w { p } else { w - p };
        let h = coefficient_u64(series.get(src as usize, k as usize))?;
        d.add_int(i64::from(p), i64::from(w - p), h);
    }
    Ok(d)
}

fn kl3_pure_number(k: u32, p: u32) -> u64 {
    let base = u64::from(p / 6) + u64::from(matches!(p % 6, 3 | 5));
    base - u64::from(p == k)
}

/// Pure Hodge numbers of `Sym^k Kl_3` for `3 | k`:
/// `h^{p,2k+1-p} = ⌊p/6⌋ + [p ≡ 3, 5 mod 6] - δ_{p,k}` for `p ≤ k`, with the
/// Kronecker term applied in both congruence classes, completed by symmetry.
pub fn hodge_kl3_div3(k: u32) -> Result<HodgeDiamond> {
    if k == 0 || !k.is_multiple_of(3) {
        return Err(Error::BadFamilyParams {
            family: "kl",
            reason: "this table needs 3 | k",
        });
    }
    let w = 2 * k + 1;
    let mut d = HodgeDiamond::new(DiamondFamily::Kl, 2, k, w, false);
    for p in 0..=w {
        let src = p.min(w - p);
        d.add_int(i64::from(p), i64::from(w - p), kl3_pure_number(k, src));
    }
    Ok(d)
}

/// `(1 + 2⌊k/2⌋ - k)`, the `k`-parity term on the diagonal.
fn parity_term(k: u32) -> u64 {
    u64::from(1 + 2 * (k / 2) - k)
}

fn add_odd_diagonal(d: &mut HodgeDiamond, k: u32) {
    for p in (k + 2)..=(2 * k + 1) {
        d.add_int(i64::from(p), i64::from(p), u64::from(p % 2 == 1));
    }
}

/// The full mixed table of `H^1(G_m, Sym^k K̃l_3)`.
pub fn mixed_hodge_tilde_kl3(k: u32) -> Result<HodgeDiamond> {
    if k == 0 {
        return Err(Error::BadFamilyParams {
            family: "kl-tilde",
            reason: "k must be positive",
        });
    }
    let w = 2 * k + 1;
    let dk = d_count(3, k) as u64;
    let mut d = HodgeDiamond::new(DiamondFamily::KlTilde, 2, k, w, true);
    for p in 0..=w {
        let q = w - p;
        let base = u64::from(p.min(q).div_ceil(2));
        let cut = (u64::from(p == k) + u64::from(p == k + 1)) * dk;
        d.add_int(i64::from(p), i64::from(q), base - cut);
    }
    d.add_int(i64::from(k + 1), i64::from(k + 1), parity_term(k) + dk);
    add_odd_diagonal(&mut d, k);
    Ok(d)
}

/// The weight-`2k+1` part of [`mixed_hodge_tilde_kl3`].
pub fn hodge_tilde_kl3_pure(k: u32) -> Result<HodgeDiamond> {
    let mut d = mixed_hodge_tilde_kl3(k)?;
    let w = BigRat::from_integer(BigInt::from(2 * k + 1));
    d.levels.retain(|(p, q), _| p + q == w);
    d.mixed = false;
    Ok(d)
}

/// The full mixed table of `H^1(G_m, Sym^k Kl_3)` for `3 | k`: the pure part
/// of [`hodge_kl3_div3`] plus the diagonal.
pub fn mixed_hodge_kl3(k: u32) -> Result<HodgeDiamond> {
    let pure = hodge_kl3_div3(k)?;
    let mut d = HodgeDiamond { mixed: true, ..pure };
    d.add_int(i64::from(k + 1), i64::from(k + 1), parity_term(k) + 1);
    add_odd_diagonal(&mut d, k);
    Ok(d)
}

/// Hodge numbers of `Sym^k Ai_n` for `gcd(k, n) = 1`: the `t^p x^k`
/// coefficient of `(1-t)/((1-t^n)(1-x)(1-tx)⋯(1-t^{n-1}x))` sits at level
/// `((p+n+k)/(n+1), (nk+1-p)/(n+1))` for `0 ≤ p ≤ nk-n-k+1`.
pub fn hodge_airy_closed(n: u32, k: u32) -> Result<HodgeDiamond> {
    if n < 2 {
        return Err(Error::BadFamilyParams {
            family: "airy",
            reason: "n must be at least 2",
        });
    }
    if gcd(u64::from(k), u64::from(n)) != 1 {
        return Err(Error::CoprimalityRequired { k, m: n });
    }
    let top = n * k + 1 - n - k;
    let series = expand_rational(
        &DensePoly::from_ints(&[1, -1]),
        &h_denominator(n - 1),
        top as usize + 1,
        k as usize + 1,
    )?;
    let den = BigInt::from(n + 1);
    let mut d = HodgeDiamond::new(DiamondFamily::Airy, n, k, k + 1, false);
    for p in 0..=top {
        let h = coefficient_u64(series.get(p as usize, k as usize))?;
        d.add(
            BigRat::new(BigInt::from(p + n + k), den.clone()),
            BigRat::new(BigInt::from(n * k + 1 - p), den.clone()),
            h,
        );
    }
    Ok(d)
}
