use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::eigen::eta_power;
use super::fiber::Fiber;
use crate::counts::{d_count, gcd, MultiIndex};
use crate::exact::{BigRat, Echelon, QMatrix, SparseVec};
use crate::{Error, Result};

/// The graded two-term complexes handled by [`GradedChain`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainFamily {
    /// `C[z] ⊗ Sym^k C^{n+1}`, `θ̄ = N_k + z E_k`, `deg z = n+1`.
    KlZ,
    /// `C[t] ⊗ Sym^k C^{n+1}`, `θ̄ = (n+1)(N_k + t^{n+1} E_k)`, `deg t = 1`.
    KlTildeT,
    /// `C[z] ⊗ Sym^k C^n`, `θ̄ = N_k + z E_k`, `deg z = n`.
    AiryZ,
    /// `C[z] ⊗ V_{2,1}`, `θ̄ = N + z E`, `deg z = 3`.
    V21,
}

impl ChainFamily {
    pub fn name(self) -> &'static str {
        match self {
            ChainFamily::KlZ => "kl",
            ChainFamily::KlTildeT => "kl-tilde",
            ChainFamily::AiryZ => "airy",
            ChainFamily::V21 => "v21",
        }
    }
}

impl fmt::Display for ChainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An element `var^p ⊗ b_j` of a chain slice: grading-variable power `p` and
/// fiber basis index `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SliceElem {
    pub var_power: u32,
    pub fiber_index: usize,
}

/// The complex `G⁺ → G⁺` materialised degree by degree.
///
/// Slice `d` lists the elements of degree `d`, ordered by variable power and
/// then by fiber index. `theta_columns(d)` holds the images of slice `d-1`
/// in slice `d` coordinates.
#[derive(Clone, Debug)]
pub struct GradedChain {
    family: ChainFamily,
    n: u32,
    k: u32,
    max_degree: usize,
    fiber: Fiber,
    var_weight: u32,
    e_shift: u32,
    scale: BigInt,
    slices: Vec<Vec<SliceElem>>,
    offsets: Vec<Vec<usize>>,
    theta: Vec<Vec<SparseVec>>,
    eta: Option<Vec<((u32, MultiIndex), BigInt)>>,
}

/// Default top degree: `nk + 2` for the symmetric-power families, 10 for `V_{2,1}`.
pub fn default_max_degree(family: ChainFamily, n: u32, k: u32) -> usize {
    match family {
        ChainFamily::V21 => 10,
        _ => (n * k + 2) as usize,
    }
}

/// Whether the closed formulas and the basis construction cover `(family, n, k)`.
pub fn is_supported(family: ChainFamily, n: u32, k: u32) -> bool {
    match family {
        ChainFamily::KlZ => {
            (gcd(u64::from(k), u64::from(n + 1)) == 1 && d_count(n + 1, k) == 0) || (n == 2 && k.is_multiple_of(3))
        }
        ChainFamily::KlTildeT => gcd(u64::from(k), u64::from(n + 1)) == 1 || (n == 2 && k.is_multiple_of(3)),
        ChainFamily::AiryZ => gcd(u64::from(k), u64::from(n)) == 1,
        ChainFamily::V21 => true,
    }
}

/// Builds the chain for a family.
///
/// `max_degree` defaults to [`default_max_degree`].
pub fn build_chain(family: ChainFamily, n: u32, k: u32, max_degree: Option<usize>) -> Result<GradedChain> {
    let bad = |reason| Error::BadFamilyParams {
        family: family.name(),
        reason,
    };
    if k == 0 {
        return Err(bad("k must be positive"));
    }
    let (fiber, var_weight, e_shift, scale) = match family {
        ChainFamily::KlZ => {
            if n == 0 {
                return Err(bad("n must be positive"));
            }
            (Fiber::sym(n as usize + 1, k), n + 1, 1, BigInt::from(1))
        }
        ChainFamily::KlTildeT => {
            if n == 0 {
                return Err(bad("n must be positive"));
            }
            (Fiber::sym(n as usize + 1, k), 1, n + 1, BigInt::from(n + 1))
        }
        ChainFamily::AiryZ => {
            if n < 2 {
                return Err(bad("n must be at least 2"));
            }
            (Fiber::sym(n as usize, k), n, 1, BigInt::from(1))
        }
        ChainFamily::V21 => {
            if (n, k) != (2, 4) {
                return Err(bad("V21 is defined only for (n, k) = (2, 4)"));
            }
            (crate::weyl::v21_fiber()?, 3, 1, BigInt::from(1))
        }
    };
    let max_degree = max_degree.unwrap_or_else(|| default_max_degree(family, n, k));
    let top = max_degree + 1;
    let mut slices = Vec::with_capacity(top + 1);
    let mut offsets = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let mut slice = Vec::new();
        let mut offs = Vec::new();
        let mut p = 0u32;
        while (var_weight * p) as usize <= d {
            offs.push(slice.len());
            let w = d as i64 - i64::from(var_weight * p);
            slice.extend(fiber.of_weight(w).iter().map(|&j| SliceElem {
                var_power: p,
                fiber_index: j,
            }));
            p += 1;
        }
        slices.push(slice);
        offsets.push(offs);
    }
    let eta = (matches!(family, ChainFamily::KlZ | ChainFamily::KlTildeT) && n == 2 && k.is_multiple_of(3))
        .then(|| eta_power(k));
    let mut chain = GradedChain {
        family,
        n,
        k,
        max_degree,
        fiber,
        var_weight,
        e_shift,
        scale,
        slices,
        offsets,
        theta: Vec::new(),
        eta,
    };
    chain.theta = (0..=top)
        .map(|d| {
            if d == 0 {
                return Vec::new();
            }
            chain.slices[d - 1]
                .iter()
                .map(|&e| chain.theta_bar_elem(d - 1, e))
                .collect()
        })
        .collect();
    Ok(chain)
}

impl GradedChain {
    pub fn family(&self) -> ChainFamily {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn fiber(&self) -> &Fiber {
        &self.fiber
    }

    /// Grading weight of the variable `z` (or `t`).
    pub fn var_weight(&self) -> u32 {
        self.var_weight
    }

    /// Whether the chain carries the kernel tower `C[var]·η^{k/3}`.
    pub fn has_eta_tower(&self) -> bool {
        self.eta.is_some()
    }

    pub fn slice(&self, d: usize) -> &[SliceElem] {
        &self.slices[d]
    }

    pub fn slice_dim(&self, d: usize) -> usize {
        self.slices.get(d).map_or(0, Vec::len)
    }

    /// Position of `var^p ⊗ b_j` in slice `d`, if it has degree `d`.
    pub fn index_of(&self, d: usize, p: u32, j: usize) -> Option<usize> {
        let deg = (self.var_weight * p) as usize + self.fiber.weight(j) as usize;
        if deg != d || d >= self.slices.len() {
            return None;
        }
        Some(self.offsets[d][p as usize] + self.fiber.pos_in_weight(j))
    }

    fn theta_bar_elem(&self, d: usize, e: SliceElem) -> SparseVec {
        let target = d + 1;
        let mut pairs = Vec::new();
        for (t, c) in self.fiber.n_image(e.fiber_index).entries() {
            let idx = self.index_of(target, e.var_power, *t).expect("N is homogeneous");
            pairs.push((idx, c * &self.scale));
        }
        for (t, c) in self.fiber.e_image(e.fiber_index).entries() {
            let idx = self
                .index_of(target, e.var_power + self.e_shift, *t)
                .expect("E term is homogeneous");
            pairs.push((idx, c * &self.scale));
        }
        SparseVec::from_pairs(pairs)
    }

    /// Images of the slice `d-1` basis in slice `d` coordinates (empty for `d = 0`).
    pub fn theta_columns(&self, d: usize) -> &[SparseVec] {
        &self.theta[d]
    }

    /// `θ̄` from slice `d-1` to slice `d` as a dense matrix.
    ///
    /// # Panics
    /// Panics if `d = 0` or `d > max_degree + 1`.
    pub fn theta_matrix(&self, d: usize) -> QMatrix {
        assert!(d >= 1, "no map into degree 0");
        QMatrix::from_sparse_columns(self.slice_dim(d), &self.theta[d])
    }

    /// Applies `θ̄` to a vector of slice `d-1`.
    pub fn apply_theta_bar(&self, d: usize, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(
            v.entries()
                .iter()
                .flat_map(|(j, c)| self.theta[d][*j].entries().iter().map(move |(t, a)| (*t, a * c))),
        )
    }

    /// The degree-`d` element of the kernel tower, in slice `d` coordinates.
    pub fn tower_vector(&self, d: usize) -> Option<SparseVec> {
        let eta = self.eta.as_ref()?;
        let base = 2 * self.k as usize;
        if d < base || d >= self.slices.len() {
            return None;
        }
        let step = d - base;
        let (extra, divisor) = match self.family {
            ChainFamily::KlZ if step.is_multiple_of(3) => ((step / 3) as u32, 3),
            ChainFamily::KlTildeT => (step as u32, 1),
            _ => return None,
        };
        let mut pairs = Vec::new();
        for ((tp, i), c) in eta {
            debug_assert!(tp % divisor == 0);
            let p = tp / divisor + extra;
            let j = self.fiber.index_of_monomial(i).expect("η monomial in fiber");
            pairs.push((self.index_of(d, p, j).expect("η is homogeneous"), c.clone()));
        }
        Some(SparseVec::from_pairs(pairs))
    }

    /// Last degree at which the cokernel may be nonzero, for supported cases.
    pub fn support_end(&self) -> Option<usize> {
        if !is_supported(self.family, self.n, self.k) {
            return None;
        }
        let (n, k) = (i64::from(self.n), i64::from(self.k));
        let end = match self.family {
            ChainFamily::KlZ if self.eta.is_some() => 2 * k + 1,
            ChainFamily::KlZ => n * k - n,
            ChainFamily::KlTildeT => n * k,
            ChainFamily::AiryZ => n * k - n - k + 1,
            ChainFamily::V21 => 5,
        };
        Some(end.max(0) as usize)
    }

    /// Echelon of `θ̄(slice_{d-1})` plus the tower element at `d` when present.
    pub fn image_echelon(&self, d: usize) -> Echelon {
        let mut e = Echelon::new(self.slice_dim(d));
        for col in &self.theta[d] {
            let _ = e.insert(col.clone());
        }
        if let Some(t) = self.tower_vector(d) {
            let _ = e.insert(t);
        }
        e
    }

    /// Renders an element as `var^p*label`.
    pub fn render_elem(&self, e: SliceElem) -> alloc::string::String {
        let var = if self.family == ChainFamily::KlTildeT { "t" } else { "z" };
        let label = self.fiber.label(e.fiber_index).render();
        match e.var_power {
            0 => label,
            1 => alloc::format!("{var}*{label}"),
            p => alloc::format!("{var}^{p}*{label}"),
        }
    }

    /// The full connection operator on a finite sum of elements, keyed by
    /// `(var power, fiber index)`:
    /// `θ(z^ℓ v) = ℓ z^ℓ v + z^ℓ θ̄ v` for the Kloosterman families and `V_{2,1}`,
    /// `θ(z^ℓ v) = ℓ z^{ℓ-1} v + z^ℓ θ̄ v` for Airy.
    pub fn theta_full(&self, v: &BTreeMap<(u32, usize), BigRat>) -> BTreeMap<(u32, usize), BigRat> {
        let mut out: BTreeMap<(u32, usize), BigRat> = BTreeMap::new();
        let mut add = |key: (u32, usize), c: BigRat| {
            let entry = out.entry(key).or_insert_with(BigRat::zero);
            *entry += c;
        };
        for (&(p, j), c) in v {
            if p > 0 {
                let l = BigRat::from_integer(BigInt::from(p));
                match self.family {
                    ChainFamily::AiryZ => add((p - 1, j), &l * c),
                    _ => add((p, j), &l * c),
                }
            }
            for (t, a) in self.fiber.n_image(j).entries() {
                add((p, *t), c * BigRat::from_integer(a * &self.scale));
            }
            for (t, a) in self.fiber.e_image(j).entries() {
                add((p + self.e_shift, *t), c * BigRat::from_integer(a * &self.scale));
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// Per-degree cokernel dimensions for `d = 0..=max_degree`.
///
/// In the chains with a kernel tower the quotient is also taken modulo the
/// tower. For supported parameters every slice past the support must vanish.
pub fn coker_slice_dims(chain: &GradedChain) -> Result<Vec<usize>> {
    let dims: Vec<usize> = (0..=chain.max_degree())
        .map(|d| chain.slice_dim(d) - chain.image_echelon(d).rank())
        .collect();
    if let Some(end) = chain.support_end() {
        for (d, &c) in dims.iter().enumerate().skip(end + 1) {
            if c != 0 {
                return Err(Error::StabilizationFailed { degree: d, dim: c });
            }
        }
    }
    Ok(dims)
}

/// Per-degree kernel dimensions of `θ̄` on slices `0..=max_degree`.
pub fn kernel_slice_dims(chain: &GradedChain) -> Vec<usize> {
    (0..=chain.max_degree())
        .map(|d| {
            let mut e = Echelon::new(chain.slice_dim(d + 1));
            for col in chain.theta_columns(d + 1) {
                let _ = e.insert(col.clone());
            }
            chain.slice_dim(d) - e.rank()
        })
        .collect()
}

/// Checks that slice `d` contains exactly the elements of degree `d`.
pub fn slice_degrees_consistent(chain: &GradedChain) -> bool {
    (0..chain.slices.len()).all(|d| {
        chain.slices[d]
            .iter()
            .all(|e| (chain.var_weight * e.var_power) as usize + chain.fiber.weight(e.fiber_index) as usize == d)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::{binomial, d_count, small_n};
    use alloc::vec::Vec;

    #[test]
    fn kl2_slices_are_lines() {
        let c = build_chain(ChainFamily::KlZ, 1, 1, Some(6)).unwrap();
        for d in 0..=6 {
            assert_eq!(c.slice_dim(d), 1);
            if d > 0 {
                let m = c.theta_matrix(d);
                assert_eq!((m.rows(), m.cols()), (1, 1));
            }
        }
        assert!(slice_degrees_consistent(&c));
    }

    #[test]
    fn slice_two_for_n2_k2() {
        let c = build_chain(ChainFamily::KlZ, 2, 2, None).unwrap();
        assert_eq!(c.slice_dim(2), 2);
        assert_eq!(coker_slice_dims(&c).unwrap()[4], 0);
    }

    #[test]
    fn tilde_kernel_n2_k3() {
        let c = build_chain(ChainFamily::KlTildeT, 2, 3, None).unwrap();
        assert_eq!(c.theta_matrix(7).kernel_basis().len(), 1);
        let ker = kernel_slice_dims(&c);
        assert_eq!(ker[5], 0);
        assert_eq!(ker[6], 1);
        assert_eq!(ker[7], 1);
        assert_eq!(coker_slice_dims(&c).unwrap()[2], 2);
    }

    #[test]
    fn tower_is_in_the_kernel() {
        for family in [ChainFamily::KlZ, ChainFamily::KlTildeT] {
            let c = build_chain(family, 2, 6, None).unwrap();
            for d in 0..c.max_degree() {
                if let Some(t) = c.tower_vector(d) {
                    assert!(c.apply_theta_bar(d + 1, &t).is_zero(), "{family} d={d}");
                }
            }
        }
    }

    #[test]
    fn coker_matches_lattice_counts() {
        for (n, k) in [(1u32, 1u32), (1, 3), (2, 4), (2, 5), (3, 3), (4, 2)] {
            let c = build_chain(ChainFamily::KlZ, n, k, None).unwrap();
            let dims = coker_slice_dims(&c).unwrap();
            for (d, &v) in dims.iter().enumerate() {
                assert_eq!(BigInt::from(v), small_n(n, k, d as i64), "n={n} k={k} d={d}");
            }
            let total: usize = dims.iter().sum();
            let expect = (binomial(u64::from(n + k), u64::from(n)) as usize - d_count(n + 1, k)) / (n as usize + 1);
            assert_eq!(total, expect);
            assert!(kernel_slice_dims(&c).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn theta_full_has_the_l_term() {
        let c = build_chain(ChainFamily::KlZ, 2, 2, None).unwrap();
        let j = c
            .fiber()
            .index_of_monomial(&MultiIndex::new(alloc::vec![2, 0, 0]))
            .unwrap();
        let mut v = BTreeMap::new();
        v.insert((3u32, j), BigRat::from_integer(BigInt::from(1)));
        let out = c.theta_full(&v);
        assert_eq!(out.get(&(3, j)), Some(&BigRat::from_integer(BigInt::from(3))));
        let bar: Vec<_> = out.keys().filter(|key| **key != (3, j)).collect();
        assert_eq!(bar.len(), 1);

        let a = build_chain(ChainFamily::AiryZ, 2, 1, None).unwrap();
        let mut v = BTreeMap::new();
        v.insert((2u32, 0usize), BigRat::from_integer(BigInt::from(1)));
        let out = a.theta_full(&v);
        assert_eq!(out.get(&(1, 0)), Some(&BigRat::from_integer(BigInt::from(2))));
    }

    #[test]
    fn bad_params() {
        assert!(build_chain(ChainFamily::KlZ, 0, 2, None).is_err());
        assert!(build_chain(ChainFamily::AiryZ, 1, 2, None).is_err());
        assert!(build_chain(ChainFamily::KlZ, 2, 0, None).is_err());
    }
}
