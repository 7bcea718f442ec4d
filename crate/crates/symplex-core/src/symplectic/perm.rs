//! The coordinate pairing sigma and index sets that pick one
//! coordinate out of each pair.
//!
//! Indices are 1-based throughout this module tree: rows and columns
//! of a 2n x 2n matrix run from 1 to 2n, and sigma swaps 2k-1 with 2k.

use crate::error::{Error, Result};
use std::fmt;

/// sigma(i) for 1-based i: the partner coordinate in the same pair.
pub fn sigma(i: usize) -> usize {
    if i % 2 == 1 {
        i + 1
    } else {
        i - 1
    }
}

/// The involution pairing coordinate 2k-1 with 2k, as a value for
/// contexts that want the half-size carried along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairPermutation {
    n: usize,
}

impl PairPermutation {
    pub fn new(n: usize) -> PairPermutation {
        PairPermutation { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apply(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= 2 * self.n);
        sigma(i)
    }
}

/// A subset of {1..2n} containing exactly one coordinate from each
/// sigma-pair. Its complement is again such a set, written sigma(I).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IndexSet {
    n: usize,
    members: Vec<usize>,
}

impl IndexSet {
    /// Build from an explicit member list; enforces the
    /// one-per-pair invariant.
    pub fn new(n: usize, members: &[usize]) -> Result<IndexSet> {
        if n == 0 {
            return Err(Error::BadIndices("half-size must be at least 1".into()));
        }
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != members.len() {
            return Err(Error::BadIndices("repeated index".into()));
        }
        if sorted.len() != n {
            return Err(Error::BadIndices(format!(
                "expected {n} members, got {}",
                sorted.len()
            )));
        }
        for &i in &sorted {
            if i < 1 || i > 2 * n {
                return Err(Error::BadIndices(format!("index {i} out of 1..{}", 2 * n)));
            }
        }
        for k in 1..=n {
            let a = sorted.binary_search(&(2 * k - 1)).is_ok();
            let b = sorted.binary_search(&(2 * k)).is_ok();
            if a == b {
                return Err(Error::BadIndices(format!(
                    "pair ({}, {}) must contribute exactly one member",
                    2 * k - 1,
                    2 * k
                )));
            }
        }
        Ok(IndexSet { n, members: sorted })
    }

    /// The set of all odd coordinates {1, 3, ..., 2n-1}.
    pub fn odds(n: usize) -> IndexSet {
        let members: Vec<usize> = (1..=n).map(|k| 2 * k - 1).collect();
        IndexSet { n, members }
    }

    /// The set of all even coordinates {2, 4, ..., 2n}.
    pub fn evens(n: usize) -> IndexSet {
        let members: Vec<usize> = (1..=n).map(|k| 2 * k).collect();
        IndexSet { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// The complement within {1..2n}; equals the image of self under
    /// the pairing, hence the name.
    pub fn sigma(&self) -> IndexSet {
        let members: Vec<usize> = (1..=2 * self.n).filter(|i| !self.contains(*i)).collect();
        IndexSet {
            n: self.n,
            members,
        }
    }

    /// Every admissible index set for half-size n, in a fixed order
    /// (bitmask over the pairs: bit k set means the even coordinate
    /// of pair k is the member).
    pub fn all(n: usize) -> Vec<IndexSet> {
        assert!(n <= 16, "exhaustive index set enumeration capped");
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n)
                .map(|k| {
                    if mask & (1 << k) != 0 {
                        2 * (k + 1)
                    } else {
                        2 * k + 1
                    }
                })
                .collect();
            out.push(IndexSet { n, members });
        }
        out
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_is_the_pair_swap() {
        assert_eq!(sigma(1), 2);
        assert_eq!(sigma(2), 1);
        assert_eq!(sigma(3), 4);
        assert_eq!(sigma(4), 3);
        for i in 1..=12 {
            assert_eq!(sigma(sigma(i)), i);
        }
        let p = PairPermutation::new(3);
        assert_eq!(p.apply(5), 6);
    }

    #[test]
    fn index_set_invariant_is_enforced() {
        assert!(IndexSet::new(2, &[1, 3]).is_ok());
        assert!(IndexSet::new(2, &[2, 4]).is_ok());
        assert!(IndexSet::new(2, &[1, 4]).is_ok());
        // both members of a pair
        assert!(IndexSet::new(2, &[1, 2]).is_err());
        // wrong cardinality
        assert!(IndexSet::new(2, &[1]).is_err());
        // out of range
        assert!(IndexSet::new(2, &[1, 5]).is_err());
    }

    #[test]
    fn complement_swaps_pairs() {
        let i = IndexSet::new(2, &[1, 4]).unwrap();
        let c = i.sigma();
        assert_eq!(c.members(), &[2, 3]);
        assert_eq!(c.sigma(), i);
        assert_eq!(IndexSet::odds(3).sigma(), IndexSet::evens(3));
    }

    #[test]
    fn all_enumerates_every_choice() {
        let all = IndexSet::all(3);
        assert_eq!(all.len(), 8);
        let mut seen = std::collections::BTreeSet::new();
        for i in &all {
            assert_eq!(i.members().len(), 3);
            seen.insert(i.members().to_vec());
        }
        assert_eq!(seen.len(), 8);
        assert!(all.contains(&IndexSet::odds(3)));
        assert!(all.contains(&IndexSet::evens(3)));
    }
}
