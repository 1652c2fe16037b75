use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::chain::GradedChain;
use super::fiber::{ek_apply, nk_apply};
use crate::counts::{CycloInt, CycloRing, MultiIndex};
use crate::exact::SparseVec;

/// A polynomial in `t` and `v_0, …, v_n` with coefficients in `Z[ζ_{n+1}]`,
/// keyed by `(t-power, v-exponent)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloVector {
    pub n: u32,
    pub terms: BTreeMap<(u32, MultiIndex), CycloInt>,
}

impl CycloVector {
    fn one(ring: &CycloRing, n: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, MultiIndex::new(alloc::vec![0; n as usize + 1])), ring.from_int(1));
        Self { n, terms }
    }

    fn add_term(&mut self, key: (u32, MultiIndex), c: CycloInt) {
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                if !c.is_zero() {
                    self.terms.insert(key, c);
                }
            }
        }
    }

    fn mul(&self, ring: &CycloRing, other: &Self) -> Self {
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for ((ta, ia), ca) in &self.terms {
            for ((tb, ib), cb) in &other.terms {
                let e: Vec<u32> = ia.entries().iter().zip(ib.entries()).map(|(x, y)| x + y).collect();
                out.add_term((ta + tb, MultiIndex::new(e)), ring.mul(ca, cb));
            }
        }
        out
    }

    /// Multiplies every coefficient by `c` and the whole vector by `t^shift`.
    pub fn scale_shift(&self, ring: &CycloRing, c: &CycloInt, shift: u32) -> Self {
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for ((t, i), v) in &self.terms {
            out.add_term((t + shift, i.clone()), ring.mul(v, c));
        }
        out
    }

    /// Integer coefficients, if every coefficient is rational.
    pub fn to_integer_terms(&self) -> Option<Vec<((u32, MultiIndex), BigInt)>> {
        self.terms
            .iter()
            .map(|(key, c)| c.as_integer().map(|v| (key.clone(), v)))
            .collect()
    }
}

/// `f_j = Σ_i ζ^{j(n-i)} t^{n-i} v_i`.
pub fn f_basic(ring: &CycloRing, n: u32, j: u32) -> CycloVector {
    let mut out = CycloVector {
        n,
        terms: BTreeMap::new(),
    };
    for i in 0..=n {
        let exp = i64::from(j) * i64::from(n - i);
        out.add_term(
            (n - i, MultiIndex::pure(n as usize + 1, i as usize, 1)),
            ring.zeta_pow(exp),
        );
    }
    out
}

/// `f^I = Π_j f_j^{I_j}`, homogeneous of `t`-degree `nk`.
pub fn f_vector(n: u32, i: &MultiIndex) -> CycloVector {
    let ring = CycloRing::new(n + 1);
    let mut acc = CycloVector::one(&ring, n);
    for j in 0..=n {
        let f = f_basic(&ring, n, j);
        for _ in 0..i.get(j as usize) {
            acc = acc.mul(&ring, &f);
        }
    }
    acc
}

/// `(n+1)(N_k + t^{n+1} E_k)` applied term by term through the derivation
/// formulas.
pub fn apply_tilde_theta(v: &CycloVector) -> CycloVector {
    let n = v.n;
    let scale = BigInt::from(n + 1);
    let mut out = CycloVector {
        n,
        terms: BTreeMap::new(),
    };
    for ((t, i), c) in &v.terms {
        for (r, a) in nk_apply(i) {
            out.add_term((*t, r), c.scale(&(&a * &scale)));
        }
        for (r, a) in ek_apply(i) {
            out.add_term((t + n + 1, r), c.scale(&(&a * &scale)));
        }
    }
    out
}

/// Splits a cyclotomic vector of `t`-degree `nk` into one integer slice
/// vector per power-basis coordinate of `Z[ζ]`.
fn coordinate_slices(chain: &GradedChain, d: usize, v: &CycloVector, rank: usize) -> Vec<SparseVec> {
    (0..rank)
        .map(|c| {
            SparseVec::from_pairs(v.terms.iter().map(|((t, i), val)| {
                let j = chain.fiber().index_of_monomial(i).expect("monomial of the fiber");
                let idx = chain.index_of(d, *t, j).expect("homogeneous term");
                (idx, val.coeffs()[c].clone())
            }))
        })
        .collect()
}

/// Checks `θ̄ f^I = (n+1) C_I t f^I` by multiplying the coordinates of `f^I`
/// with the slice matrix from degree `nk` to `nk+1` of the tilde chain.
pub fn eigen_relation_via_chain(chain: &GradedChain, i: &MultiIndex) -> bool {
    let n = chain.n();
    let d = (n * chain.k()) as usize;
    let ring = CycloRing::new(n + 1);
    let f = f_vector(n, i);
    let rhs = eigen_rhs(n, i, &f);
    let lhs_parts: Vec<SparseVec> = coordinate_slices(chain, d, &f, ring.rank())
        .iter()
        .map(|u| chain.apply_theta_bar(d + 1, u))
        .collect();
    lhs_parts == coordinate_slices(chain, d + 1, &rhs, ring.rank())
}

/// Right-hand side of the eigen-relation: `(n+1)·C_I·t·f^I`.
pub fn eigen_rhs(n: u32, i: &MultiIndex, f: &CycloVector) -> CycloVector {
    let ring = CycloRing::new(n + 1);
    let c = ring.c_sum(i.entries()).scale(&BigInt::from(n + 1));
    f.scale_shift(&ring, &c, 1)
}

/// `η^{k/3} = f^{(k/3, k/3, k/3)}` for `n = 2`, with integer coefficients in
/// `(t-power, v-exponent)` coordinates.
///
/// # Panics
/// Panics if `3 ∤ k` or if a coefficient fails to be rational.
pub fn eta_power(k: u32) -> Vec<((u32, MultiIndex), BigInt)> {
    assert!(k.is_multiple_of(3), "η-power needs 3 | k");
    let l = k / 3;
    f_vector(2, &MultiIndex::new(alloc::vec![l, l, l]))
        .to_integer_terms()
        .expect("η has rational coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn eta_is_the_expected_cubic() {
        let mut eta = eta_power(3);
        eta.sort();
        let mut expect = vec![
            ((6, mi(&[3, 0, 0])), BigInt::from(1)),
            ((3, mi(&[0, 3, 0])), BigInt::from(1)),
            ((0, mi(&[0, 0, 3])), BigInt::from(1)),
            ((3, mi(&[1, 1, 1])), BigInt::from(-3)),
        ];
        expect.sort();
        assert_eq!(eta, expect);
    }

    #[test]
    fn eigen_relation_small() {
        for n in 1..=2 {
            for k in 1..=4 {
                for i in MultiIndex::all(n as usize + 1, k) {
                    let f = f_vector(n, &i);
                    assert!(f.terms.keys().all(|(t, j)| t + j.degree() == n * k));
                    assert_eq!(apply_tilde_theta(&f), eigen_rhs(n, &i, &f), "n={n} I={i:?}");
                }
            }
        }
    }

    #[test]
    fn vanishing_c_gives_kernel() {
        let f = f_vector(2, &mi(&[1, 1, 1]));
        assert!(apply_tilde_theta(&f).terms.is_empty());
    }
}
