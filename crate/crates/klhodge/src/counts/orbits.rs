use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{CycloRing, MultiIndex};

/// Multi-indices of length `m` and weight `k` with `C_I = Σ I_j ζ_m^j = 0`,
/// in ascending lexicographic order.
pub fn vanishing_indices(m: u32, k: u32) -> Vec<MultiIndex> {
    let ring = CycloRing::new(m);
    MultiIndex::all(m as usize, k)
        .into_iter()
        .filter(|i| ring.c_sum(i.entries()).is_zero())
        .collect()
}

/// `d(k, m)`: the number of multi-indices with vanishing `C_I`.
pub fn d_count(m: u32, k: u32) -> usize {
    vanishing_indices(m, k).len()
}

/// The `σ`-orbits of the vanishing set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSet {
    pub m: u32,
    pub k: u32,
    /// `(lexicographically smallest element, orbit size)`.
    pub orbits: Vec<(MultiIndex, usize)>,
}

impl OrbitSet {
    pub fn new(m: u32, k: u32) -> Self {
        let mut seen = BTreeSet::new();
        let mut orbits = Vec::new();
        for i in vanishing_indices(m, k) {
            if seen.contains(&i) {
                continue;
            }
            let orbit: BTreeSet<MultiIndex> = (0..m as usize).map(|s| i.sigma_pow(s)).collect();
            let rep = orbit.iter().next().expect("orbit is nonempty").clone();
            orbits.push((rep, orbit.len()));
            seen.extend(orbit);
        }
        Self { m, k, orbits }
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Elements of the orbit with the given representative.
    pub fn members(&self, rep: &MultiIndex) -> BTreeSet<MultiIndex> {
        (0..self.m as usize).map(|s| rep.sigma_pow(s)).collect()
    }
}

/// `a(k, m)`: the number of `σ`-orbits on the vanishing set.
pub fn a_count(m: u32, k: u32) -> (usize, OrbitSet) {
    let set = OrbitSet::new(m, k);
    (set.len(), set)
}

/// The signed shift sum `Σ_{i=0}^{m-1} (-1)^{s_i} σ^i·I` in the free abelian
/// group on multi-indices, with `s_i = Σ_{j=m-i}^{m-1} I_j`. Zero coefficients
/// are dropped.
pub fn signed_shift_sum(rep: &MultiIndex) -> BTreeMap<MultiIndex, i64> {
    let m = rep.len();
    let mut acc: BTreeMap<MultiIndex, i64> = BTreeMap::new();
    for i in 0..m {
        let s: u32 = (m - i..m).map(|j| rep.get(j)).sum();
        let sign = if s.is_multiple_of(2) { 1 } else { -1 };
        *acc.entry(rep.sigma_pow(i)).or_insert(0) += sign;
    }
    acc.retain(|_, c| *c != 0);
    acc
}

/// `b(k, m)`: orbits whose signed shift sum is nonzero.
///
/// # Panics
/// Panics if the verdict depends on the chosen orbit representative.
pub fn b_count(m: u32, k: u32) -> usize {
    let set = OrbitSet::new(m, k);
    let mut count = 0;
    for (rep, _) in &set.orbits {
        let verdict = !signed_shift_sum(rep).is_empty();
        for other in set.members(rep) {
            assert_eq!(
                !signed_shift_sum(&other).is_empty(),
                verdict,
                "signed shift sum depends on the representative of {rep:?}"
            );
        }
        count += usize::from(verdict);
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn d_examples() {
        assert_eq!(d_count(3, 3), 1);
        assert_eq!(d_count(3, 2), 0);
        assert_eq!(d_count(2, 3), 0);
        assert_eq!(d_count(4, 2), 2);
        assert_eq!(
            vanishing_indices(4, 2),
            vec![MultiIndex::new(vec![0, 1, 0, 1]), MultiIndex::new(vec![1, 0, 1, 0])]
        );
    }

    #[test]
    fn a_examples() {
        assert_eq!(a_count(3, 3).0, 1);
        assert_eq!(a_count(3, 2).0, 0);
        let (a, set) = a_count(4, 2);
        assert_eq!(a, 1);
        assert_eq!(set.orbits[0].1, 2);
    }

    #[test]
    fn b_examples() {
        assert_eq!(b_count(2, 2), 0);
        assert_eq!(b_count(3, 2), 0);
        let rep = MultiIndex::new(vec![2, 2]);
        let brute = signed_shift_sum(&rep);
        assert_eq!(brute.get(&rep), Some(&2));
        assert_eq!(b_count(2, 4), 1);
    }

    #[test]
    fn d_mod_three() {
        for k in 0..=15 {
            assert_eq!(d_count(3, k), usize::from(k % 3 == 0), "k = {k}");
        }
    }

    #[test]
    fn orbit_bounds() {
        for m in 2..6 {
            for k in 0..9 {
                let d = d_count(m, k);
                let (a, set) = a_count(m, k);
                assert!(a <= d && d <= m as usize * a);
                assert_eq!(set.orbits.iter().map(|o| o.1).sum::<usize>(), d);
            }
        }
    }
}
