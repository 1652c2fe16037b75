use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A multi-index `I = (I_0, …, I_{m-1})` of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    entries: Vec<u32>,
}

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        Self { entries }
    }

    /// The multi-index `k·e_i` of length `m`.
    pub fn pure(m: usize, i: usize, k: u32) -> Self {
        let mut entries = vec![0; m];
        entries[i] = k;
        Self { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Length `m`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `|I| = Σ I_j`.
    pub fn weight(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// `Σ j·I_j`.
    pub fn degree(&self) -> u32 {
        self.entries.iter().enumerate().map(|(j, &c)| j as u32 * c).sum()
    }

    pub fn get(&self, j: usize) -> u32 {
        self.entries[j]
    }

    /// `I - e_from + e_to`, or `None` if `I_from = 0`.
    pub fn shift_unit(&self, from: usize, to: usize) -> Option<Self> {
        if self.entries[from] == 0 {
            return None;
        }
        let mut e = self.entries.clone();
        e[from] -= 1;
        e[to] += 1;
        Some(Self { entries: e })
    }

    /// The cyclic shift `σ·I = (I_{m-1}, I_0, …, I_{m-2})`.
    pub fn sigma(&self) -> Self {
        let mut e = self.entries.clone();
        e.rotate_right(1);
        Self { entries: e }
    }

    /// `σ^i·I`.
    pub fn sigma_pow(&self, i: usize) -> Self {
        let mut e = self.entries.clone();
        if !e.is_empty() {
            let r = i % e.len();
            e.rotate_right(r);
        }
        Self { entries: e }
    }

    /// All multi-indices of length `m` and weight `k`, in ascending
    /// lexicographic order.
    pub fn all(m: usize, k: u32) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; m];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            let m = cur.len();
            if pos + 1 == m {
                cur[pos] = left;
                out.push(MultiIndex { entries: cur.clone() });
                return;
            }
            for v in 0..=left {
                cur[pos] = v;
                rec(pos + 1, left - v, cur, out);
            }
        }
        if m > 0 {
            rec(0, k, &mut cur, &mut out);
        } else if k == 0 {
            out.push(Self { entries: Vec::new() });
        }
        out
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

/// `binom(a, b)` as `u128`; zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u128, |acc, i| acc * u128::from(a - i) / u128::from(i + 1))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_and_order() {
        for m in 1..5usize {
            for k in 0..7u32 {
                let all = MultiIndex::all(m, k);
                assert_eq!(all.len() as u128, binomial(u64::from(k) + m as u64 - 1, m as u64 - 1));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|i| i.weight() == k && i.len() == m));
            }
        }
    }

    #[test]
    fn sigma_rotates_right() {
        let i = MultiIndex::new(vec![1, 2, 3]);
        assert_eq!(i.sigma(), MultiIndex::new(vec![3, 1, 2]));
        assert_eq!(i.sigma_pow(3), i);
        assert_eq!(i.sigma_pow(2), i.sigma().sigma());
    }

    #[test]
    fn degree_and_shift() {
        let i = MultiIndex::new(vec![1, 0, 2]);
        assert_eq!(i.degree(), 4);
        assert_eq!(i.shift_unit(0, 1), Some(MultiIndex::new(vec![0, 1, 2])));
        assert_eq!(i.shift_unit(1, 2), None);
    }

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(12, 2), 66);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(16, 4), 1820);
    }
}
