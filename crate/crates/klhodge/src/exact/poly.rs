use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::BigRat;
use crate::{Error, Result};

/// Dense univariate polynomial with rational coefficients in ascending degree.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DensePoly {
    coeffs: Vec<BigRat>,
}

impl DensePoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRat::from_integer(c.into())).collect())
    }

    /// `1 - t^a`; for `a = 0` this is the zero polynomial.
    pub fn one_minus_t_pow(a: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); a + 1];
        coeffs[0] += BigRat::one();
        coeffs[a] -= BigRat::one();
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^d` (zero past the degree).
    pub fn coeff(&self, d: usize) -> BigRat {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn to_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Long division returning `(quotient, remainder)`.
    ///
    /// # Panics
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * b;
            }
            quot[i] = c;
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact quotient `a / b`.
    ///
    /// Fails with [`Error::RemainderNonzero`] when `b` does not divide `a`.
    ///
    /// # Panics
    /// Panics if `b` is zero.
    pub fn div_exact(&self, b: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::RemainderNonzero)
        }
    }
}

impl fmt::Debug for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{d}")?,
            }
        }
        Ok(())
    }
}

/// Convenience for `poly_mul`.
pub fn poly_mul(a: &DensePoly, b: &DensePoly) -> DensePoly {
    a.mul(b)
}

/// Convenience for `poly_div_exact`.
pub fn poly_div_exact(a: &DensePoly, b: &DensePoly) -> Result<DensePoly> {
    a.div_exact(b)
}
