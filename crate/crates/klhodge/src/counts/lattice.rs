use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::{expand_rational, BiSeries, DensePoly};
use crate::Result;

/// `Q_k(t) = Π_{i=1}^{k} (1 - t^{n+i}) / Π_{i=2}^{k} (1 - t^i)`.
///
/// The coefficient of `t^d` is the number of Jordan blocks of size
/// `nk - 2d + 1` of `N_k` on `Sym^k C^{n+1}` (signed, antisymmetric past the
/// middle).
pub fn q_poly(n: u32, k: u32) -> Result<DensePoly> {
    let n = n as usize;
    let mut q = DensePoly::one_minus_t_pow(n + 1);
    for i in 2..=k as usize {
        q = q.mul(&DensePoly::one_minus_t_pow(n + i));
        q = q.div_exact(&DensePoly::one_minus_t_pow(i))?;
    }
    Ok(q)
}

/// Integer coefficients `q_{0,k}, …, q_{nk+1,k}` (zero-padded).
pub fn q_coeffs(n: u32, k: u32) -> Result<Vec<BigInt>> {
    let q = q_poly(n, k)?;
    let len = (n * k + 2) as usize;
    Ok((0..len)
        .map(|d| {
            let c = q.coeff(d);
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect())
}

/// `q̄_{d,k}`: `q_{d,k}` for `d ≤ nk/2`, zero otherwise.
pub fn q_bar(q: &[BigInt], n: u32, k: u32, d: i64) -> BigInt {
    if d < 0 || 2 * d > i64::from(n * k) {
        return BigInt::zero();
    }
    q.get(d as usize).cloned().unwrap_or_default()
}

/// `N_{d,k}` for `d = 0..=dmax`.
///
/// Counts `(a, I_0, …, I_n)` with `|I| = k` and `(n+1)a + Σ i·I_i = d`, by a
/// knapsack over the part types `i = 0..n` followed by the `a` part.
pub fn lattice_table(n: u32, k: u32, dmax: usize) -> Vec<BigInt> {
    let (n, k) = (n as usize, k as usize);
    // dp[j][d]: ways to pick j parts (from the types seen so far) of total weight d.
    let mut dp = vec![vec![BigInt::zero(); dmax + 1]; k + 1];
    dp[0][0] = BigInt::from(1);
    for i in 0..=n {
        for j in 1..=k {
            for d in i..=dmax {
                let prev = dp[j - 1][d - i].clone();
                if !prev.is_zero() {
                    dp[j][d] += prev;
                }
            }
        }
    }
    let mut row = core::mem::take(&mut dp[k]);
    for d in (n + 1)..=dmax {
        let prev = row[d - n - 1].clone();
        row[d] += prev;
    }
    row
}

/// `N_{d,k}`; zero for negative `d`.
#[allow(non_snake_case)]
pub fn lattice_N(n: u32, k: u32, d: i64) -> BigInt {
    if d < 0 {
        return BigInt::zero();
    }
    lattice_table(n, k, d as usize).pop().unwrap_or_default()
}

/// `n_{d,k} = N_{d,k} - N_{d-1,k}` for `d = 0..=dmax`.
pub fn small_n_table(n: u32, k: u32, dmax: usize) -> Vec<BigInt> {
    let big = lattice_table(n, k, dmax);
    (0..=dmax)
        .map(|d| if d == 0 { big[0].clone() } else { &big[d] - &big[d - 1] })
        .collect()
}

/// `n_{d,k}`; zero for negative `d`.
pub fn small_n(n: u32, k: u32, d: i64) -> BigInt {
    if d < 0 {
        return BigInt::zero();
    }
    small_n_table(n, k, d as usize).pop().unwrap_or_default()
}

/// Denominator factors `(a, b)` of `H(t,x) = 1/((1-t^{n+1}) Π_{i=0}^{n} (1 - t^i x))`.
pub fn h_denominator(n: u32) -> Vec<(usize, usize)> {
    let mut f = vec![(n as usize + 1, 0)];
    f.extend((0..=n as usize).map(|i| (i, 1)));
    f
}

/// Truncated expansion of `h(t,x) = (1-t)·H(t,x)`.
pub fn h_series(n: u32, trunc_t: usize, trunc_x: usize) -> Result<BiSeries> {
    expand_rational(&DensePoly::from_ints(&[1, -1]), &h_denominator(n), trunc_t, trunc_x)
}
