use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::chain::{ChainFamily, GradedChain};
use crate::exact::{BigRat, Echelon, SparseVec};
use crate::{Error, Result};

/// Which cohomology a [`BasisSet`] spans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Full,
    Mid,
}

/// Degree-indexed cohomology representatives, each vector given in the
/// coordinates of its chain slice.
#[derive(Clone, Debug)]
pub struct BasisSet {
    pub kind: BasisKind,
    pub per_degree: Vec<Vec<SparseVec>>,
}

impl BasisSet {
    pub fn cardinalities(&self) -> Vec<usize> {
        self.per_degree.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.per_degree.iter().map(Vec::len).sum()
    }
}

/// Representatives of `slice_d / θ̄(slice_{d-1})` (modulo the kernel tower
/// where present): the non-pivot monomials of the image echelon.
pub fn w_basis(chain: &GradedChain) -> BasisSet {
    let per_degree = (0..=chain.max_degree())
        .map(|d| {
            chain
                .image_echelon(d)
                .complement()
                .into_iter()
                .map(SparseVec::unit)
                .collect()
        })
        .collect();
    BasisSet {
        kind: BasisKind::Full,
        per_degree,
    }
}

/// The `var⁰` monomials of slice `d` that complement `N(fiber_{d-1})`.
fn sigma_indices(chain: &GradedChain, d: usize) -> Vec<usize> {
    chain
        .fiber()
        .coker_n_complement(d as i64)
        .into_iter()
        .map(|j| chain.index_of(d, 0, j).expect("weight-d fiber vector sits in slice d"))
        .collect()
}

/// The extra direction removed at degree `k` when the chain has a kernel tower.
fn special_vector(chain: &GradedChain, d: usize) -> Option<SparseVec> {
    if !chain.has_eta_tower() || d != chain.k() as usize {
        return None;
    }
    let p = match chain.family() {
        ChainFamily::KlZ => chain.k() / 3,
        _ => chain.k(),
    };
    let v0 = chain
        .fiber()
        .index_of_monomial(&crate::counts::MultiIndex::pure(3, 0, chain.k()))?;
    chain.index_of(d, p, v0).map(SparseVec::unit)
}

/// Clears denominators of a rational sparse combination.
fn integral(v: &[(usize, BigRat)]) -> (SparseVec, BigInt) {
    let l = v.iter().fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
    let s = SparseVec::from_pairs(v.iter().map(|(i, c)| (*i, c.numer() * (&l / c.denom()))));
    (s, l)
}

/// Middle-cohomology representatives.
///
/// For each degree `d` the `var⁰` part of every cokernel representative is
/// pushed into the span of `Σ_d`, a complement of `N(fiber_{d-1})`, by adding
/// a coboundary. The survivors, taken modulo the image, the tower, `Σ_d` and
/// (for chains with a kernel tower, at `d = k`) the line through
/// `var^p v_0^k`, form the middle basis. All kept vectors have zero `var⁰`
/// component.
pub fn w_mid_basis(chain: &GradedChain) -> Result<BasisSet> {
    if chain.family() == ChainFamily::AiryZ {
        return Err(Error::BadFamilyParams {
            family: "airy",
            reason: "the Airy connection has no separate middle basis",
        });
    }
    let mut per_degree = Vec::with_capacity(chain.max_degree() + 1);
    for d in 0..=chain.max_degree() {
        let mut ech = chain.image_echelon(d);
        let sigma = sigma_indices(chain, d);
        for &s in &sigma {
            ech.insert(SparseVec::unit(s))
                .map_err(|_| Error::DegenerateReduction { degree: d })?;
        }
        if let Some(sp) = special_vector(chain, d) {
            ech.insert(sp).map_err(|_| Error::DegenerateReduction { degree: d })?;
        }
        let complement = ech.complement();

        let fiber = chain.fiber();
        let weight_d = fiber.of_weight(d as i64);
        let weight_prev = fiber.of_weight(d as i64 - 1);
        let mut solver = Echelon::tracked(weight_d.len());
        let slice_d = chain.slice(d);
        for &j in weight_prev {
            let col = chain.index_of(d - 1, 0, j).expect("var⁰ element of slice d-1");
            let img = SparseVec::from_pairs(
                chain.theta_columns(d)[col]
                    .entries()
                    .iter()
                    .filter(|(t, _)| slice_d[*t].var_power == 0)
                    .map(|(t, c)| (fiber.pos_in_weight(slice_d[*t].fiber_index), c.clone())),
            );
            let _ = solver.insert(img);
        }
        for &s in &sigma {
            let j = chain.slice(d)[s].fiber_index;
            let _ = solver.insert(SparseVec::unit(fiber.pos_in_weight(j)));
        }

        let mut kept = Vec::new();
        for idx in complement {
            let elem = chain.slice(d)[idx];
            let w_mod = if elem.var_power > 0 {
                SparseVec::unit(idx)
            } else {
                let target = SparseVec::unit(fiber.pos_in_weight(elem.fiber_index));
                let combo = solver
                    .express(&target)
                    .ok_or(Error::DegenerateReduction { degree: d })?;
                let n_gens = weight_prev.len();
                // w' = Σ c [θ̄e]_0 + Σ c σ over the two generator groups, so h = -Σ c e and g = Σ c σ.
                let mut h = Vec::new();
                let mut g = Vec::new();
                for (id, c) in combo {
                    if id < n_gens {
                        let j = weight_prev[id];
                        let pos = chain.index_of(d - 1, 0, j).expect("var⁰ element of slice d-1");
                        h.push((pos, -c));
                    } else {
                        g.push((sigma[id - n_gens], c));
                    }
                }
                let (h_int, lh) = integral(&h);
                let (g_int, lg) = integral(&g);
                let l = lh.lcm(&lg);
                let theta_h = chain.apply_theta_bar(d, &h_int).scale(&(&l / &lh));
                let g_scaled = g_int.scale(&(&l / &lg));
                let w = SparseVec::unit(idx).scale(&l);
                let v = w.add(&theta_h).combine(&BigInt::one(), &g_scaled, &BigInt::one());
                let mut v = v;
                let c = v.content();
                if !c.is_zero() {
                    v.div_exact(&c);
                }
                v
            };
            let var0_clean = w_mod.entries().iter().all(|(i, _)| chain.slice(d)[*i].var_power > 0);
            if !var0_clean {
                return Err(Error::DegenerateReduction { degree: d });
            }
            if ech.insert(w_mod.clone()).is_ok() {
                kept.push(w_mod);
            }
        }
        per_degree.push(kept);
    }
    Ok(BasisSet {
        kind: BasisKind::Mid,
        per_degree,
    })
}
