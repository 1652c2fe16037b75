//! Incremental, fraction-free row echelon forms over the integers.
//!
//! Vectors are sparse and integral. Elimination multiplies by the pivot
//! entries instead of dividing, then strips the content, so no fractions
//! are formed until a caller explicitly asks for rational coefficients.
//! Pivots sit at the highest nonzero index of each stored row, which makes
//! the unused indices a complement that prefers low indices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BigRat;

/// A sparse integer vector: `(index, value)` pairs, strictly increasing
/// indices, no zero values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, BigInt)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from arbitrary pairs, summing duplicates and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, BigInt)>>(pairs: I) -> Self {
        let mut map: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (i, c) in pairs {
            *map.entry(i).or_insert_with(BigInt::zero) += c;
        }
        Self {
            entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn unit(i: usize) -> Self {
        Self {
            entries: alloc::vec![(i, BigInt::one())],
        }
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> BigInt {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    fn lead(&self) -> Option<&(usize, BigInt)> {
        self.entries.last()
    }

    /// `a * self - b * other`.
    pub fn combine(&self, a: &BigInt, other: &Self, b: &BigInt) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while i < x.len() || j < y.len() {
            let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
            let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
            if take_x {
                out.push((x[i].0, a * &x[i].1));
                i += 1;
            } else if take_y {
                out.push((y[j].0, -(b * &y[j].1)));
                j += 1;
            } else {
                let c = a * &x[i].1 - b * &y[j].1;
                if !c.is_zero() {
                    out.push((x[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { entries: out }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(&BigInt::one(), other, &-BigInt::one())
    }

    /// gcd of all entries (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.entries {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_exact(&mut self, g: &BigInt) {
        if g.is_one() {
            return;
        }
        for (_, c) in &mut self.entries {
            *c = &*c / g;
        }
    }

    /// Dense rational copy of length `dim`.
    pub fn to_dense(&self, dim: usize) -> Vec<BigRat> {
        let mut out = alloc::vec![BigRat::zero(); dim];
        for (i, c) in &self.entries {
            out[*i] = BigRat::from_integer(c.clone());
        }
        out
    }

    /// Scales rational entries to a primitive integer vector with the same span.
    pub fn from_rational(v: &[BigRat]) -> Self {
        let mut l = BigInt::one();
        for c in v.iter().filter(|c| !c.is_zero()) {
            l = l.lcm(c.denom());
        }
        Self::from_pairs(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.numer() * (&l / c.denom()))),
        )
    }
}

#[derive(Clone, Debug)]
struct Row {
    v: SparseVec,
    combo: SparseVec,
}

/// A dependency found when a tracked vector reduced to zero:
/// `mult * new + Σ combo[i] * generator_i = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub mult: BigInt,
    pub combo: SparseVec,
}

impl Relation {
    /// Coefficients `c_i` with `new = Σ c_i * generator_i`.
    pub fn solve(&self) -> Vec<(usize, BigRat)> {
        self.combo
            .entries()
            .iter()
            .map(|(i, c)| (*i, BigRat::new(-c.clone(), self.mult.clone())))
            .collect()
    }
}

/// Incremental echelon form of a growing list of generators.
///
/// With tracking enabled every inserted vector receives a generator id
/// (its insertion index) and stored rows remember how they were formed,
/// which lets [`Echelon::express`] write a vector in terms of generators.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: BTreeMap<usize, Row>,
    track: bool,
    generators: usize,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: BTreeMap::new(),
            track: false,
            generators: 0,
        }
    }

    pub fn tracked(dim: usize) -> Self {
        Self {
            track: true,
            ..Self::new(dim)
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Indices that are not pivots, ascending. The corresponding unit vectors
    /// span a complement of the row space.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.dim).filter(|i| !self.rows.contains_key(i)).collect()
    }

    fn reduce(&self, mut v: SparseVec, mut combo: SparseVec, mut mult: BigInt) -> (SparseVec, SparseVec, BigInt) {
        while let Some((p, cv)) = v.lead() {
            let Some(row) = self.rows.get(p) else { break };
            let cr = &row.v.lead().expect("stored rows are nonzero").1;
            let g = cv.gcd(cr);
            let a = cr / &g;
            let b = cv / &g;
            v = v.combine(&a, &row.v, &b);
            if self.track {
                combo = combo.combine(&a, &row.combo, &b);
                mult *= &a;
                let g = v.content().gcd(&combo.content()).gcd(&mult);
                if !g.is_zero() && !g.is_one() {
                    v.div_exact(&g);
                    combo.div_exact(&g);
                    mult = &mult / &g;
                }
            } else {
                let g = v.content();
                if !g.is_zero() {
                    v.div_exact(&g);
                }
            }
        }
        (v, combo, mult)
    }

    /// Inserts a generator. Returns its new pivot index if it was independent
    /// of the generators so far, otherwise the relation it satisfies
    /// (the relation is only meaningful when tracking).
    pub fn insert(&mut self, v: SparseVec) -> Result<usize, Relation> {
        debug_assert!(v.entries().iter().all(|(i, _)| *i < self.dim));
        let id = self.generators;
        self.generators += 1;
        let combo = if self.track {
            SparseVec::unit(id)
        } else {
            SparseVec::new()
        };
        let (mut v, mut combo, mult) = self.reduce(v, combo, BigInt::one());
        if v.is_zero() {
            let mut combo = combo;
            // combo includes `mult` at position `id`; split it off.
            let m = combo.get(id);
            combo = SparseVec::from_pairs(combo.entries.into_iter().filter(|(i, _)| *i != id));
            let mult = if self.track { m } else { mult };
            return Err(Relation { mult, combo });
        }
        if !self.track {
            let g = v.content();
            v.div_exact(&g);
        }
        let mut sign_fix = false;
        if let Some((_, c)) = v.lead() {
            sign_fix = c.is_negative();
        }
        if sign_fix {
            v = v.scale(&-BigInt::one());
            combo = combo.scale(&-BigInt::one());
        }
        let p = v.lead().expect("nonzero").0;
        self.rows.insert(p, Row { v, combo });
        Ok(p)
    }

    /// Whether `w` lies in the span of the generators.
    pub fn contains(&self, w: &SparseVec) -> bool {
        let (v, _, _) = self.reduce(w.clone(), SparseVec::new(), BigInt::one());
        v.is_zero()
    }

    /// Writes `w` as a rational combination of generator ids, if it lies in
    /// the span. Requires tracking.
    ///
    /// # Panics
    /// Panics if the echelon was built without tracking.
    pub fn express(&self, w: &SparseVec) -> Option<Vec<(usize, BigRat)>> {
        assert!(self.track, "express requires a tracked echelon");
        let (v, combo, mult) = self.reduce(w.clone(), SparseVec::new(), BigInt::one());
        if !v.is_zero() {
            return None;
        }
        // mult * w + Σ combo_i g_i = 0  with combo built from rows; solve for w.
        Some(Relation { mult, combo }.solve())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(pairs: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_pairs(pairs.iter().map(|&(i, c)| (i, BigInt::from(c))))
    }

    #[test]
    fn combine_cancels() {
        let a = sv(&[(0, 2), (3, 4)]);
        let b = sv(&[(3, 2), (5, 1)]);
        let c = a.combine(&BigInt::from(1), &b, &BigInt::from(2));
        assert_eq!(c, sv(&[(0, 2), (5, -2)]));
    }

    #[test]
    fn rank_and_complement() {
        let mut e = Echelon::new(4);
        assert!(e.insert(sv(&[(0, 1), (2, 1)])).is_ok());
        assert!(e.insert(sv(&[(0, 2), (2, 2)])).is_err());
        assert!(e.insert(sv(&[(1, 3)])).is_ok());
        assert_eq!(e.rank(), 2);
        assert_eq!(e.complement(), alloc::vec![0, 3]);
    }

    #[test]
    fn tracked_relation_and_expression() {
        let mut e = Echelon::tracked(3);
        e.insert(sv(&[(0, 1), (1, 1)])).unwrap();
        e.insert(sv(&[(1, 1), (2, 1)])).unwrap();
        let rel = e.insert(sv(&[(0, 1), (2, -1)])).unwrap_err();
        // g2 = g0 - g1
        let sol = rel.solve();
        assert_eq!(
            sol,
            alloc::vec![
                (0, BigRat::from_integer(1.into())),
                (1, BigRat::from_integer((-1).into()))
            ]
        );
        let w = sv(&[(0, 3), (1, 5), (2, 2)]);
        let expr = e.express(&w).unwrap();
        let mut acc = alloc::vec![BigRat::zero(); 3];
        let gens = [sv(&[(0, 1), (1, 1)]), sv(&[(1, 1), (2, 1)]), sv(&[(0, 1), (2, -1)])];
        for (g, c) in &expr {
            for (i, v) in gens[*g].entries() {
                acc[*i] += c * BigRat::from_integer(v.clone());
            }
        }
        assert_eq!(acc, w.to_dense(3));
        assert!(e.express(&sv(&[(0, 1)])).is_none());
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new(3);
        e.insert(sv(&[(0, 2), (1, 4)])).unwrap();
        assert!(e.contains(&sv(&[(0, -1), (1, -2)])));
        assert!(!e.contains(&sv(&[(0, 1)])));
    }
}
