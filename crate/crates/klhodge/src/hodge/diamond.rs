use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::BigRat;

/// Which motive a table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiamondFamily {
    Kl,
    KlTilde,
    Airy,
    V21,
}

impl DiamondFamily {
    pub fn name(self) -> &'static str {
        match self {
            DiamondFamily::Kl => "kl",
            DiamondFamily::KlTilde => "kl-tilde",
            DiamondFamily::Airy => "airy",
            DiamondFamily::V21 => "v21",
        }
    }
}

impl fmt::Display for DiamondFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Hodge numbers `h^{p,q}` with exact rational levels.
///
/// A pure table has every entry on `p + q = weight`. Mixed tables also hold
/// entries of other weights. Zero multiplicities are kept when a route
/// enumerates a full range of levels, so tuples can be read off directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDiamond {
    pub family: DiamondFamily,
    pub n: u32,
    pub k: u32,
    pub weight: u32,
    pub mixed: bool,
    pub levels: BTreeMap<(BigRat, BigRat), u64>,
}

pub(crate) fn int(v: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(v))
}

impl HodgeDiamond {
    pub fn new(family: DiamondFamily, n: u32, k: u32, weight: u32, mixed: bool) -> Self {
        Self {
            family,
            n,
            k,
            weight,
            mixed,
            levels: BTreeMap::new(),
        }
    }

    /// Adds `mult` to `h^{p,q}`, creating the entry if needed.
    pub fn add(&mut self, p: BigRat, q: BigRat, mult: u64) {
        *self.levels.entry((p, q)).or_insert(0) += mult;
    }

    pub fn add_int(&mut self, p: i64, q: i64, mult: u64) {
        self.add(int(p), int(q), mult);
    }

    pub fn get(&self, p: &BigRat, q: &BigRat) -> u64 {
        self.levels.get(&(p.clone(), q.clone())).copied().unwrap_or(0)
    }

    pub fn get_int(&self, p: i64, q: i64) -> u64 {
        self.get(&int(p), &int(q))
    }

    pub fn total(&self) -> u64 {
        self.levels.values().sum()
    }

    /// Multiplicities of the weight-`weight` entries in ascending `p`.
    pub fn pure_tuple(&self) -> Vec<u64> {
        let w = int(i64::from(self.weight));
        self.levels
            .iter()
            .filter(|((p, q), _)| p + q == w)
            .map(|(_, &m)| m)
            .collect()
    }

    /// Entries off the pure weight.
    pub fn off_weight(&self) -> BTreeMap<(BigRat, BigRat), u64> {
        let w = int(i64::from(self.weight));
        self.levels
            .iter()
            .filter(|((p, q), _)| p + q != w)
            .map(|(key, &m)| (key.clone(), m))
            .collect()
    }

    /// Nonzero entries only.
    pub fn support(&self) -> BTreeMap<(BigRat, BigRat), u64> {
        self.levels
            .iter()
            .filter(|(_, &m)| m > 0)
            .map(|(key, &m)| (key.clone(), m))
            .collect()
    }

    /// `h^{p,q} = h^{q,p}` for every entry.
    pub fn is_symmetric(&self) -> bool {
        self.levels.iter().all(|((p, q), &m)| self.get(q, p) == m)
    }

    /// Pure tables satisfy `p + q = weight` everywhere.
    pub fn weights_consistent(&self) -> bool {
        self.mixed || self.off_weight().is_empty()
    }

    /// Every level has a denominator dividing `den`.
    pub fn denominators_divide(&self, den: u32) -> bool {
        let d = BigInt::from(den);
        self.levels.keys().all(|(p, q)| {
            let ok = |x: &BigRat| (&d % x.denom()).is_zero();
            ok(p) && ok(q)
        })
    }

    /// Same nonzero entries and the same weight.
    pub fn same_numbers(&self, other: &Self) -> bool {
        self.weight == other.weight && self.support() == other.support()
    }
}

/// Renders a level as `num/den` (always with a denominator).
pub fn level_string(x: &BigRat) -> alloc::string::String {
    alloc::format!("{}/{}", x.numer(), x.denom())
}

/// Renders a level as an integer when possible, else `num/den`.
pub fn level_display(x: &BigRat) -> alloc::string::String {
    if x.denom().is_one() {
        alloc::format!("{}", x.numer())
    } else {
        level_string(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bookkeeping() {
        let mut d = HodgeDiamond::new(DiamondFamily::Kl, 2, 4, 9, false);
        d.add_int(4, 5, 1);
        d.add_int(5, 4, 1);
        d.add_int(0, 9, 0);
        d.add_int(9, 0, 0);
        assert_eq!(d.total(), 2);
        assert!(d.is_symmetric());
        d.add_int(1, 8, 1);
        assert!(!d.is_symmetric());
        d.add_int(8, 1, 1);
        assert!(d.weights_consistent());
        assert_eq!(d.pure_tuple(), alloc::vec![0, 1, 1, 1, 1, 0]);
        assert_eq!(d.support().len(), 4);
        assert_eq!(level_string(&int(3)), "3/1");
        assert_eq!(level_display(&BigRat::new(BigInt::from(5), BigInt::from(4))), "5/4");
    }
}
