use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::DensePoly;
use crate::{Error, Result};

/// A power series in `t` and `x` known modulo `(t^trunc_t, x^trunc_x)`.
///
/// Entry `(d, k)` is the coefficient of `t^d x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    trunc_t: usize,
    trunc_x: usize,
    table: Vec<BigInt>,
}

impl BiSeries {
    pub fn zero(trunc_t: usize, trunc_x: usize) -> Self {
        Self {
            trunc_t,
            trunc_x,
            table: vec![BigInt::zero(); trunc_t * trunc_x],
        }
    }

    /// The polynomial `num(t)` (constant in `x`), truncated.
    ///
    /// Fails if a coefficient of `num` below the truncation is not an integer.
    pub fn from_t_poly(num: &DensePoly, trunc_t: usize, trunc_x: usize) -> Result<Self> {
        let mut s = Self::zero(trunc_t, trunc_x);
        if trunc_x == 0 {
            return Ok(s);
        }
        for (d, c) in num.coeffs().iter().enumerate().take(trunc_t) {
            if !c.is_integer() {
                return Err(Error::NonIntegerCoefficient { t: d, x: 0 });
            }
            *s.at_mut(d, 0) = c.to_integer();
        }
        Ok(s)
    }

    pub fn trunc_t(&self) -> usize {
        self.trunc_t
    }

    pub fn trunc_x(&self) -> usize {
        self.trunc_x
    }

    /// Coefficient of `t^d x^k`.
    ///
    /// # Panics
    /// Panics if `(d, k)` lies outside the truncation.
    pub fn get(&self, d: usize, k: usize) -> &BigInt {
        assert!(d < self.trunc_t && k < self.trunc_x, "entry outside truncation");
        &self.table[d * self.trunc_x + k]
    }

    fn at_mut(&mut self, d: usize, k: usize) -> &mut BigInt {
        &mut self.table[d * self.trunc_x + k]
    }

    /// Divides in place by `1 - t^a x^b`.
    pub fn divide_by_factor(&mut self, a: usize, b: usize) -> Result<()> {
        if a == 0 && b == 0 {
            return Err(Error::InvalidFactor { a, b });
        }
        for d in a..self.trunc_t {
            for k in b..self.trunc_x {
                let prev = self.get(d - a, k - b).clone();
                if !prev.is_zero() {
                    *self.at_mut(d, k) += prev;
                }
            }
        }
        Ok(())
    }

    /// Multiplies in place by `1 - t^a x^b`.
    pub fn multiply_by_factor(&mut self, a: usize, b: usize) {
        if a == 0 && b == 0 {
            self.table.iter_mut().for_each(|c| *c = BigInt::zero());
            return;
        }
        for d in (a..self.trunc_t).rev() {
            for k in (b..self.trunc_x).rev() {
                let prev = self.get(d - a, k - b).clone();
                if !prev.is_zero() {
                    *self.at_mut(d, k) -= prev;
                }
            }
        }
    }

    /// Truncated product; both operands must share the same truncation.
    ///
    /// # Panics
    /// Panics on mismatched truncations.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.trunc_t, self.trunc_x), (other.trunc_t, other.trunc_x));
        let mut out = Self::zero(self.trunc_t, self.trunc_x);
        for d1 in 0..self.trunc_t {
            for k1 in 0..self.trunc_x {
                let a = self.get(d1, k1);
                if a.is_zero() {
                    continue;
                }
                for d2 in 0..self.trunc_t - d1 {
                    for k2 in 0..self.trunc_x - k1 {
                        let b = other.get(d2, k2);
                        if !b.is_zero() {
                            *out.at_mut(d1 + d2, k1 + k2) += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

/// Expands `num(t) / Π (1 - t^a x^b)` modulo `(t^trunc_t, x^trunc_x)`.
pub fn expand_rational(
    num: &DensePoly,
    denom_factors: &[(usize, usize)],
    trunc_t: usize,
    trunc_x: usize,
) -> Result<BiSeries> {
    let mut s = BiSeries::from_t_poly(num, trunc_t, trunc_x)?;
    for &(a, b) in denom_factors {
        s.divide_by_factor(a, b)?;
    }
    Ok(s)
}
