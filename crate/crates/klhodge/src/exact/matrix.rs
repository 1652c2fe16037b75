use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::echelon::{Echelon, SparseVec};
use super::BigRat;

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRat>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Builds from integer rows.
    ///
    /// # Panics
    /// Panics if the rows are ragged.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| BigRat::from_integer(rows[i][j].into()))
    }

    /// Builds a `rows × cols` matrix whose column `j` is `columns[j]`.
    pub fn from_sparse_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = Self::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col.entries() {
                m.set(*i, j, BigRat::from_integer(c.clone()));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// # Panics
    /// Panics on incompatible shapes.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// # Panics
    /// Panics on incompatible shapes.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    /// # Panics
    /// Panics if `v.len() != cols`.
    pub fn mul_vec(&self, v: &[BigRat]) -> Vec<BigRat> {
        assert_eq!(v.len(), self.cols, "shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = BigRat::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Row scale factors that clear denominators row by row.
    fn row_scales(&self) -> Vec<BigInt> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(BigInt::one(), |l, j| l.lcm(self.get(i, j).denom())))
            .collect()
    }

    /// Columns as integer vectors after clearing row denominators.
    fn integer_columns(&self) -> Vec<SparseVec> {
        let scales = self.row_scales();
        (0..self.cols)
            .map(|j| {
                SparseVec::from_pairs((0..self.rows).filter_map(|i| {
                    let c = self.get(i, j);
                    (!c.is_zero()).then(|| (i, c.numer() * (&scales[i] / c.denom())))
                }))
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.rows);
        for col in self.integer_columns() {
            let _ = e.insert(col);
        }
        e.rank()
    }

    /// A basis of `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRat>> {
        let mut e = Echelon::tracked(self.rows);
        let mut out = Vec::new();
        for (j, col) in self.integer_columns().into_iter().enumerate() {
            if let Err(rel) = e.insert(col) {
                let mut v = rel.combo.to_dense(self.cols);
                v[j] = BigRat::from_integer(rel.mult.clone());
                out.push(v);
            }
        }
        out
    }

    /// Row indices `i` such that the unit vectors `e_i` span a complement of
    /// the column space, preferring low indices.
    pub fn coker_complement(&self) -> Vec<usize> {
        let mut e = Echelon::new(self.rows);
        for col in self.integer_columns() {
            let _ = e.insert(col);
        }
        e.complement()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_full_rank() {
        let m = QMatrix::identity(3);
        assert_eq!(m.rank(), 3);
        assert!(m.kernel_basis().is_empty());
        assert!(m.coker_complement().is_empty());
    }

    #[test]
    fn zero_map() {
        let m = QMatrix::zero(2, 2);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().len(), 2);
        assert_eq!(m.coker_complement(), vec![0, 1]);
    }

    #[test]
    fn proportional_rows() {
        let m = QMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn rational_entries() {
        let half = BigRat::new(1.into(), 2.into());
        let third = BigRat::new(1.into(), 3.into());
        let mut m = QMatrix::zero(2, 2);
        m.set(0, 0, half.clone());
        m.set(0, 1, third.clone());
        m.set(1, 0, half * BigRat::from_integer(2.into()));
        m.set(1, 1, third * BigRat::from_integer(2.into()));
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert!(m.mul_vec(&k[0]).iter().all(Zero::is_zero));
        assert_eq!(m.coker_complement(), vec![0]);
    }

    fn small_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-3i64..4, 1i64..4), r * c).prop_map(move |v| {
                QMatrix::from_fn(r, c, |i, j| {
                    let (a, b) = v[i * c + j];
                    BigRat::new(a.into(), b.into())
                })
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
            let kt = QMatrix::from_fn(m.cols(), k.len(), |i, j| k[j][i].clone());
            prop_assert_eq!(kt.rank(), k.len());
        }

        #[test]
        fn complement_spans_cokernel(m in small_matrix()) {
            let comp = m.coker_complement();
            prop_assert_eq!(comp.len() + m.rank(), m.rows());
            let mut aug = QMatrix::zero(m.rows(), m.cols() + comp.len());
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    aug.set(i, j, m.get(i, j).clone());
                }
            }
            for (t, &i) in comp.iter().enumerate() {
                aug.set(i, m.cols() + t, BigRat::one());
            }
            prop_assert_eq!(aug.rank(), m.rows());
        }

        #[test]
        fn rank_is_transpose_invariant(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn deterministic(m in small_matrix()) {
            prop_assert_eq!(m.kernel_basis(), m.kernel_basis());
            prop_assert_eq!(m.coker_complement(), m.coker_complement());
        }
    }
}
