use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::DensePoly;

/// The `m`-th cyclotomic polynomial, integer coefficients in ascending degree.
///
/// Computed as `x^m - 1` divided exactly by `Φ_d` for every proper divisor `d`.
///
/// # Panics
/// Panics if `m == 0`.
pub fn cyclotomic_poly(m: u32) -> Vec<BigInt> {
    assert!(m > 0, "cyclotomic polynomial of order 0");
    let mut num = DensePoly::one_minus_t_pow(m as usize);
    num = num.mul(&DensePoly::from_ints(&[-1]));
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let phi_d = DensePoly::from_coeffs(
            cyclotomic_poly(d)
                .into_iter()
                .map(crate::exact::BigRat::from_integer)
                .collect(),
        );
        num = num.div_exact(&phi_d).expect("cyclotomic factors divide x^m - 1");
    }
    num.to_integer_coeffs().expect("cyclotomic polynomials are integral")
}

/// The ring `Z[ζ_m] = Z[x]/Φ_m(x)`, with `ζ_m` a primitive `m`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloRing {
    m: u32,
    phi: Vec<BigInt>,
}

impl CycloRing {
    /// # Panics
    /// Panics if `m == 0`.
    pub fn new(m: u32) -> Self {
        Self {
            m,
            phi: cyclotomic_poly(m),
        }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    /// `φ(m)`, the rank of the ring over `Z`.
    pub fn rank(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn zero(&self) -> CycloInt {
        CycloInt {
            m: self.m,
            coeffs: vec![BigInt::zero(); self.rank()],
        }
    }

    pub fn from_int(&self, c: impl Into<BigInt>) -> CycloInt {
        let mut z = self.zero();
        z.coeffs[0] = c.into();
        z
    }

    /// Reduces an arbitrary integer polynomial modulo `Φ_m` (which is monic).
    pub fn reduce(&self, poly: &[BigInt]) -> CycloInt {
        let r = self.rank();
        let mut p: Vec<BigInt> = poly.to_vec();
        for top in (r..p.len()).rev() {
            let c = core::mem::take(&mut p[top]);
            if c.is_zero() {
                continue;
            }
            for (j, f) in self.phi.iter().enumerate().take(r) {
                p[top - r + j] -= &c * f;
            }
        }
        p.resize(r, BigInt::zero());
        CycloInt { m: self.m, coeffs: p }
    }

    /// `ζ^j`.
    pub fn zeta_pow(&self, j: i64) -> CycloInt {
        let e = j.rem_euclid(i64::from(self.m)) as usize;
        let mut p = vec![BigInt::zero(); e + 1];
        p[e] = BigInt::one();
        self.reduce(&p)
    }

    /// `C_I = Σ_j I_j ζ^j`.
    pub fn c_sum(&self, entries: &[u32]) -> CycloInt {
        let mut p = vec![BigInt::zero(); entries.len()];
        for (j, &c) in entries.iter().enumerate() {
            p[j] = BigInt::from(c);
        }
        self.reduce(&p)
    }

    pub fn mul(&self, a: &CycloInt, b: &CycloInt) -> CycloInt {
        debug_assert!(a.m == self.m && b.m == self.m);
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut p = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                p[i + j] += x * y;
            }
        }
        self.reduce(&p)
    }
}

/// An element of `Z[ζ_m]` in the power basis `1, ζ, …, ζ^{φ(m)-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloInt {
    m: u32,
    coeffs: Vec<BigInt>,
}

impl CycloInt {
    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as an integer, if only the constant coordinate is nonzero.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            m: self.m,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }
}

impl Add for &CycloInt {
    type Output = CycloInt;
    fn add(self, rhs: &CycloInt) -> CycloInt {
        assert_eq!(self.m, rhs.m, "mixed cyclotomic orders");
        CycloInt {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycloInt {
    type Output = CycloInt;
    fn sub(self, rhs: &CycloInt) -> CycloInt {
        assert_eq!(self.m, rhs.m, "mixed cyclotomic orders");
        CycloInt {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        CycloInt {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[ζ_{}]{:?}", self.m, self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for m in 2..13 {
            let r = CycloRing::new(m);
            let mut acc = r.zero();
            for j in 0..i64::from(m) {
                acc = &acc + &r.zeta_pow(j);
            }
            assert!(acc.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn zeta_has_exact_order() {
        for m in 2..13u32 {
            let r = CycloRing::new(m);
            let z = r.zeta_pow(1);
            let mut p = r.from_int(1);
            for j in 1..=m {
                p = r.mul(&p, &z);
                assert_eq!(p == r.from_int(1), j == m, "m = {m}, j = {j}");
            }
        }
    }

    #[test]
    fn c_sum_vanishing() {
        let r = CycloRing::new(3);
        assert!(r.c_sum(&[1, 1, 1]).is_zero());
        assert!(!r.c_sum(&[2, 1, 0]).is_zero());
        let r4 = CycloRing::new(4);
        assert!(r4.c_sum(&[1, 0, 1, 0]).is_zero());
        assert!(r4.c_sum(&[0, 1, 0, 1]).is_zero());
        assert!(!r4.c_sum(&[1, 1, 0, 0]).is_zero());
    }
}
