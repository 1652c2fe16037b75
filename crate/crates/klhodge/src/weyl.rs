//! The 15-dimensional `SL_3`-representation `V_{2,1}`, cut out of `V^{⊗4}`
//! (with `V = C^3`) by a Young symmetrizer, together with the graded chain
//! `C[z] ⊗ V_{2,1}` it supports.
//!
//! Tensor monomials `e_{s0} ⊗ e_{s1} ⊗ e_{s2} ⊗ e_{s3}` are indexed by
//! `27 s0 + 9 s1 + 3 s2 + s3` and have weight `s0 + s1 + s2 + s3`. `N` and `E`
//! act on `V^{⊗4}` as derivations: `N e_i = e_{i+1}`, `E e_2 = e_0`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{BigRat, QMatrix, SparseVec};
use crate::sympower::{build_chain, ChainFamily, Fiber, FiberLabel, GradedChain};
use crate::{Error, Result};

pub const TENSOR_DIM: usize = 81;
pub const V21_DIM: usize = 15;

fn slots(idx: usize) -> [usize; 4] {
    [idx / 27, (idx / 9) % 3, (idx / 3) % 3, idx % 3]
}

fn index(s: [usize; 4]) -> usize {
    27 * s[0] + 9 * s[1] + 3 * s[2] + s[3]
}

/// Weight `Σ slots` of a tensor monomial.
pub fn tensor_weight(idx: usize) -> u32 {
    slots(idx).iter().sum::<usize>() as u32
}

fn derivation(idx: usize, step: impl Fn(usize) -> Option<usize>) -> SparseVec {
    let s = slots(idx);
    SparseVec::from_pairs((0..4).filter_map(|pos| {
        step(s[pos]).map(|to| {
            let mut r = s;
            r[pos] = to;
            (index(r), BigInt::one())
        })
    }))
}

/// `N` on a tensor monomial.
pub fn tensor_n(idx: usize) -> SparseVec {
    derivation(idx, |i| (i < 2).then_some(i + 1))
}

/// `E` on a tensor monomial.
pub fn tensor_e(idx: usize) -> SparseVec {
    derivation(idx, |i| (i == 2).then_some(0))
}

/// Matrix of the slot permutation `perm` (slot `i` content moves to slot `perm[i]`).
pub fn permutation_matrix(perm: [usize; 4]) -> QMatrix {
    let mut m = QMatrix::zero(TENSOR_DIM, TENSOR_DIM);
    for col in 0..TENSOR_DIM {
        let s = slots(col);
        let mut r = [0; 4];
        for i in 0..4 {
            r[perm[i]] = s[i];
        }
        m.set(index(r), col, BigRat::one());
    }
    m
}

type Perm = [usize; 4];

/// The symmetrizer group `P` (all permutations of the first three slots) and
/// the antisymmetrizer group `Q` (identity and the swap of slots 0 and 3,
/// with its sign).
fn young_groups() -> (Vec<Perm>, Vec<(Perm, i64)>) {
    let p = vec![
        [0, 1, 2, 3],
        [1, 0, 2, 3],
        [0, 2, 1, 3],
        [2, 1, 0, 3],
        [1, 2, 0, 3],
        [2, 0, 1, 3],
    ];
    let q = vec![([0, 1, 2, 3], 1), ([3, 1, 2, 0], -1)];
    (p, q)
}

fn sparse_matrix(f: impl Fn(usize) -> SparseVec) -> QMatrix {
    let cols: Vec<SparseVec> = (0..TENSOR_DIM).map(f).collect();
    QMatrix::from_sparse_columns(TENSOR_DIM, &cols)
}

/// `N` on `V^{⊗4}` as an 81×81 matrix.
pub fn tensor_n_matrix() -> QMatrix {
    sparse_matrix(tensor_n)
}

/// `E` on `V^{⊗4}` as an 81×81 matrix.
pub fn tensor_e_matrix() -> QMatrix {
    sparse_matrix(tensor_e)
}

/// The projector onto `V_{2,1}` and a weight-adapted basis of its image.
#[derive(Clone, Debug)]
pub struct ProjectedSpace {
    /// `c / λ`, where `c = Σ_{g∈P, h∈Q} sign(h) g·h` and `c² = λ c`.
    pub projector: QMatrix,
    pub lambda: BigRat,
    /// Integer basis vectors in tensor coordinates, ordered by weight, in
    /// echelon form within each weight.
    pub image_basis: Vec<SparseVec>,
    pub weights: Vec<u32>,
    /// Leading tensor index of each basis vector.
    pub pivots: Vec<usize>,
    pub dim: usize,
}

/// Hermite-style echelon basis of the lattice spanned by integer vectors.
///
/// Rows come out with strictly increasing leading positions and positive
/// leading entries; returns `(rows, leading positions)`.
fn lattice_basis(mut rows: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    for c in 0..cols {
        let mut pivot: Option<Vec<BigInt>> = None;
        let mut rest = Vec::new();
        for row in rows.drain(..) {
            if row[c].is_zero() {
                rest.push(row);
                continue;
            }
            pivot = Some(match pivot {
                None => row,
                Some(p) => {
                    let eg = p[c].extended_gcd(&row[c]);
                    let (a, b) = (&p[c] / &eg.gcd, &row[c] / &eg.gcd);
                    let merged: Vec<BigInt> = p.iter().zip(&row).map(|(x, y)| &eg.x * x + &eg.y * y).collect();
                    let cleared: Vec<BigInt> = p.iter().zip(&row).map(|(x, y)| &a * y - &b * x).collect();
                    rest.push(cleared);
                    merged
                }
            });
        }
        rows = rest;
        if let Some(mut p) = pivot {
            if p[c].is_negative() {
                p.iter_mut().for_each(|x| *x = -&*x);
            }
            out.push(p);
            pivots.push(c);
        }
    }
    (out, pivots)
}

/// Builds the Young projector and its image.
///
/// The basis spans the lattice `c·Z^81` weight by weight, which `N` and `E`
/// preserve, so both act by integer matrices on it. Fails with
/// [`Error::DimensionMismatch`] unless the image has dimension 15.
pub fn young_projector() -> Result<ProjectedSpace> {
    let (p, q) = young_groups();
    let mut c = QMatrix::zero(TENSOR_DIM, TENSOR_DIM);
    for g in &p {
        let mg = permutation_matrix(*g);
        for (h, sign) in &q {
            let mut term = mg.mul(&permutation_matrix(*h));
            if *sign < 0 {
                term = QMatrix::zero(TENSOR_DIM, TENSOR_DIM).sub(&term);
            }
            c = QMatrix::from_fn(TENSOR_DIM, TENSOR_DIM, |i, j| c.get(i, j) + term.get(i, j));
        }
    }
    let c2 = c.mul(&c);
    let (i0, j0) = (0..TENSOR_DIM)
        .flat_map(|i| (0..TENSOR_DIM).map(move |j| (i, j)))
        .find(|&(i, j)| !c.get(i, j).is_zero())
        .expect("symmetrizer is nonzero");
    let lambda = c2.get(i0, j0) / c.get(i0, j0);
    let projector = QMatrix::from_fn(TENSOR_DIM, TENSOR_DIM, |i, j| c.get(i, j) / &lambda);

    let mut image_basis = Vec::new();
    let mut weights = Vec::new();
    let mut pivots = Vec::new();
    for w in 0..=8u32 {
        let cols: Vec<usize> = (0..TENSOR_DIM).filter(|&t| tensor_weight(t) == w).collect();
        let rows: Vec<Vec<BigInt>> = cols
            .iter()
            .map(|&t| (0..TENSOR_DIM).map(|i| c.get(i, t).to_integer()).collect())
            .collect();
        let (basis, piv) = lattice_basis(rows);
        for (row, pv) in basis.into_iter().zip(piv) {
            image_basis.push(SparseVec::from_pairs(
                row.into_iter().enumerate().filter(|(_, x)| !x.is_zero()),
            ));
            weights.push(w);
            pivots.push(pv);
        }
    }
    let dim = image_basis.len();
    if dim != V21_DIM {
        return Err(Error::DimensionMismatch {
            expected: V21_DIM,
            found: dim,
        });
    }
    Ok(ProjectedSpace {
        projector,
        lambda,
        image_basis,
        weights,
        pivots,
        dim,
    })
}

impl ProjectedSpace {
    /// Integer coordinates of a tensor vector, or `None` if it is not in the
    /// lattice spanned by the basis.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut rest = v.clone();
        let mut coords = Vec::new();
        for (b, (basis, &p)) in self.image_basis.iter().zip(&self.pivots).enumerate() {
            let (q, r) = rest.get(p).div_rem(&basis.get(p));
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                rest = rest.combine(&BigInt::one(), basis, &q);
                coords.push((b, q));
            }
        }
        rest.is_zero().then(|| SparseVec::from_pairs(coords))
    }

    pub fn is_idempotent(&self) -> bool {
        self.projector.mul(&self.projector) == self.projector
    }

    /// `[π, N] = 0` and `[π, E] = 0`.
    pub fn commutes_with_n_and_e(&self) -> bool {
        [tensor_n_matrix(), tensor_e_matrix()]
            .iter()
            .all(|m| self.projector.mul(m) == m.mul(&self.projector))
    }
}

fn apply(f: fn(usize) -> SparseVec, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (i, c) in v.entries() {
        out = out.add(&f(*i).scale(c));
    }
    out
}

/// `V_{2,1}` as a fiber: basis from [`young_projector`], with `N` and `E`
/// induced from `V^{⊗4}` and `E` lowering weight by 2.
pub fn v21_fiber() -> Result<Fiber> {
    let space = young_projector()?;
    let mut n_op = Vec::with_capacity(space.dim);
    let mut e_op = Vec::with_capacity(space.dim);
    for b in &space.image_basis {
        for (f, out) in [(tensor_n as fn(usize) -> SparseVec, &mut n_op), (tensor_e, &mut e_op)] {
            let coords = space.coordinates(&apply(f, b)).ok_or(Error::DimensionMismatch {
                expected: space.dim,
                found: space.dim + 1,
            })?;
            out.push(coords);
        }
    }
    let labels = space.image_basis.iter().cloned().map(FiberLabel::Tensor).collect();
    Ok(Fiber::from_parts(labels, space.weights, n_op, e_op, 2))
}

/// The chain `C[z] ⊗ V_{2,1}` with `θ̄ = N + zE` and `deg z = 3`.
pub fn v21_chain(max_degree: Option<usize>) -> Result<GradedChain> {
    build_chain(ChainFamily::V21, 2, 4, max_degree)
}

/// Jordan block sizes of `N` on `V_{2,1}`, descending.
pub fn v21_jordan_blocks() -> Result<Vec<usize>> {
    Ok(v21_fiber()?.jordan_blocks())
}
