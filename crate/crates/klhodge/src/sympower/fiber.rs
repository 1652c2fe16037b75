use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::counts::MultiIndex;
use crate::exact::{Echelon, SparseVec};

/// `N_k v^I = Σ_{i<m-1} I_i · v^{I - e_i + e_{i+1}}`.
pub fn nk_apply(i: &MultiIndex) -> Vec<(MultiIndex, BigInt)> {
    let m = i.len();
    (0..m.saturating_sub(1))
        .filter_map(|j| i.shift_unit(j, j + 1).map(|r| (r, BigInt::from(i.get(j)))))
        .collect()
}

/// `E_k v^I = I_{m-1} · v^{I - e_{m-1} + e_0}`.
pub fn ek_apply(i: &MultiIndex) -> Vec<(MultiIndex, BigInt)> {
    let m = i.len();
    if m == 0 {
        return Vec::new();
    }
    i.shift_unit(m - 1, 0)
        .map(|r| vec![(r, BigInt::from(i.get(m - 1)))])
        .unwrap_or_default()
}

/// Label of a fiber basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberLabel {
    /// The symmetric monomial `v^I`.
    Monomial(MultiIndex),
    /// A vector of `V^{⊗4}` given in tensor-monomial coordinates.
    Tensor(SparseVec),
}

impl FiberLabel {
    pub fn render(&self) -> String {
        match self {
            FiberLabel::Monomial(i) => {
                let mut s = String::new();
                for (j, &e) in i.entries().iter().enumerate() {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("v{j}")),
                        _ => s.push_str(&format!("v{j}^{e}")),
                    }
                }
                if s.is_empty() {
                    s.push('1');
                }
                s
            }
            FiberLabel::Tensor(v) => {
                let mut s = String::from("[");
                for (t, (idx, c)) in v.entries().iter().enumerate() {
                    if t > 0 {
                        s.push_str(", ");
                    }
                    let slots = [idx / 27, (idx / 9) % 3, (idx / 3) % 3, idx % 3];
                    s.push_str(&format!("{c}*e{}{}{}{}", slots[0], slots[1], slots[2], slots[3]));
                }
                s.push(']');
                s
            }
        }
    }
}

/// A finite-dimensional graded representation with a raising operator `N`
/// (weight +1) and a corner operator `E` that lowers weight by `e_drop`, on a fixed
/// basis.
#[derive(Clone, Debug)]
pub struct Fiber {
    labels: Vec<FiberLabel>,
    weights: Vec<u32>,
    n_op: Vec<SparseVec>,
    e_op: Vec<SparseVec>,
    by_weight: Vec<Vec<usize>>,
    pos_in_weight: Vec<usize>,
    e_drop: u32,
}

impl Fiber {
    /// Assembles a fiber from basis data. `n_op[j]` and `e_op[j]` are the
    /// images of basis vector `j` in basis coordinates.
    ///
    /// # Panics
    /// Panics if an operator does not shift weights as declared.
    pub fn from_parts(
        labels: Vec<FiberLabel>,
        weights: Vec<u32>,
        n_op: Vec<SparseVec>,
        e_op: Vec<SparseVec>,
        e_drop: u32,
    ) -> Self {
        let max_w = weights.iter().copied().max().unwrap_or(0) as usize;
        let mut by_weight = vec![Vec::new(); max_w + 1];
        let mut pos_in_weight = vec![0; weights.len()];
        for (j, &w) in weights.iter().enumerate() {
            pos_in_weight[j] = by_weight[w as usize].len();
            by_weight[w as usize].push(j);
        }
        for j in 0..weights.len() {
            for (t, _) in n_op[j].entries() {
                assert_eq!(weights[*t], weights[j] + 1, "N must raise weight by one");
            }
            for (t, _) in e_op[j].entries() {
                assert_eq!(weights[*t] + e_drop, weights[j], "E must lower weight by {e_drop}");
            }
        }
        Self {
            labels,
            weights,
            n_op,
            e_op,
            by_weight,
            pos_in_weight,
            e_drop,
        }
    }

    /// `Sym^k C^m` with monomials in ascending lexicographic order.
    pub fn sym(m: usize, k: u32) -> Self {
        let monos = MultiIndex::all(m, k);
        let index = |i: &MultiIndex| monos.binary_search(i).expect("monomial present");
        let to_sparse =
            |terms: Vec<(MultiIndex, BigInt)>| SparseVec::from_pairs(terms.into_iter().map(|(r, c)| (index(&r), c)));
        let n_op = monos.iter().map(|i| to_sparse(nk_apply(i))).collect();
        let e_op = monos.iter().map(|i| to_sparse(ek_apply(i))).collect();
        let weights = monos.iter().map(MultiIndex::degree).collect();
        let labels = monos.into_iter().map(FiberLabel::Monomial).collect();
        Self::from_parts(labels, weights, n_op, e_op, m.saturating_sub(1) as u32)
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn label(&self, j: usize) -> &FiberLabel {
        &self.labels[j]
    }

    pub fn weight(&self, j: usize) -> u32 {
        self.weights[j]
    }

    pub fn max_weight(&self) -> u32 {
        self.by_weight.len().saturating_sub(1) as u32
    }

    /// Basis indices of weight `w`, ascending.
    pub fn of_weight(&self, w: i64) -> &[usize] {
        if w < 0 {
            return &[];
        }
        self.by_weight.get(w as usize).map_or(&[], Vec::as_slice)
    }

    pub fn pos_in_weight(&self, j: usize) -> usize {
        self.pos_in_weight[j]
    }

    pub fn n_image(&self, j: usize) -> &SparseVec {
        &self.n_op[j]
    }

    pub fn e_image(&self, j: usize) -> &SparseVec {
        &self.e_op[j]
    }

    pub fn e_drop(&self) -> u32 {
        self.e_drop
    }

    /// Index of a monomial label, if this fiber is a symmetric power.
    pub fn index_of_monomial(&self, i: &MultiIndex) -> Option<usize> {
        self.labels
            .iter()
            .position(|l| matches!(l, FiberLabel::Monomial(x) if x == i))
    }

    /// Applies `N` to a vector in basis coordinates.
    pub fn apply_n(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(
            v.entries()
                .iter()
                .flat_map(|(j, c)| self.n_op[*j].entries().iter().map(move |(t, a)| (*t, a * c))),
        )
    }

    /// Per-weight dimension of `coker N`.
    pub fn coker_n_dims(&self) -> Vec<usize> {
        (0..self.by_weight.len())
            .map(|w| self.coker_n_complement(w as i64).len())
            .collect()
    }

    /// Basis indices (of weight `w`) whose span complements `N(fiber_{w-1})`
    /// inside `fiber_w`, preferring low indices.
    pub fn coker_n_complement(&self, w: i64) -> Vec<usize> {
        let target = self.of_weight(w);
        let mut e = Echelon::new(target.len());
        for &j in self.of_weight(w - 1) {
            let img = SparseVec::from_pairs(
                self.n_op[j]
                    .entries()
                    .iter()
                    .map(|(t, c)| (self.pos_in_weight[*t], c.clone())),
            );
            let _ = e.insert(img);
        }
        e.complement().into_iter().map(|p| target[p]).collect()
    }

    /// Jordan block sizes of `N`, descending, from the ranks of its powers.
    pub fn jordan_blocks(&self) -> Vec<usize> {
        let dim = self.dim();
        let mut ranks = vec![dim];
        let mut images: Vec<SparseVec> = (0..dim).map(SparseVec::unit).collect();
        loop {
            images = images.iter().map(|v| self.apply_n(v)).collect();
            let mut e = Echelon::new(dim);
            for v in &images {
                let _ = e.insert(v.clone());
            }
            ranks.push(e.rank());
            if e.rank() == 0 {
                break;
            }
        }
        ranks.push(0);
        let mut blocks = Vec::new();
        for s in 1..ranks.len() - 1 {
            let count = ranks[s - 1] + ranks[s + 1] - 2 * ranks[s];
            blocks.extend(core::iter::repeat_n(s, count));
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        blocks
    }
}
