use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use serde::{Serialize, Serializer};

use super::EdgeId;
use crate::error::{Error, Result};

/// A subset of a fixed edge universe, i.e. a vector over GF(2).
///
/// Graphs obtained from one another by deletion or contraction share their
/// universe, so edge sets can be carried between them unchanged. Combining
/// sets from different universes is an error for the checked methods and a
/// panic for the operator impls.
///
/// Sets are ordered lexicographically by their sorted edge ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    universe: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(universe: usize) -> Self {
        EdgeSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = EdgeSet::empty(universe);
        for e in 0..universe {
            set.insert(e);
        }
        set
    }

    pub fn from_ids<I: IntoIterator<Item = EdgeId>>(universe: usize, ids: I) -> Result<Self> {
        let mut set = EdgeSet::empty(universe);
        for e in ids {
            if e >= universe {
                return Err(Error::UnknownEdge(e));
            }
            set.insert(e);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        e < self.universe && self.words[e / 64] >> (e % 64) & 1 == 1
    }

    /// Panics if `e` lies outside the universe.
    pub fn insert(&mut self, e: EdgeId) {
        assert!(
            e < self.universe,
            "edge {e} outside universe {}",
            self.universe
        );
        self.words[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: EdgeId) {
        if e < self.universe {
            self.words[e / 64] &= !(1 << (e % 64));
        }
    }

    pub fn toggle(&mut self, e: EdgeId) {
        assert!(
            e < self.universe,
            "edge {e} outside universe {}",
            self.universe
        );
        self.words[e / 64] ^= 1 << (e % 64);
    }

    /// Lowest edge id in the set.
    pub fn first(&self) -> Option<EdgeId> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn ids(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    fn check(&self, other: &EdgeSet) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                left: self.universe,
                right: other.universe,
            })
        }
    }

    fn zip_with(&self, other: &EdgeSet, f: impl Fn(u64, u64) -> u64) -> EdgeSet {
        EdgeSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// `X + Y = (X ∪ Y) ∖ (X ∩ Y)`.
    pub fn sym_diff(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a ^ b))
    }

    pub fn union(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a | b))
    }

    pub fn intersection(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a & b))
    }

    pub fn difference(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a & !b))
    }

    pub fn is_subset(&self, other: &EdgeSet) -> Result<bool> {
        self.check(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0))
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> Result<bool> {
        self.check(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & b == 0))
    }

    /// Size of the intersection, without allocating.
    pub fn meet_count(&self, other: &EdgeSet) -> Result<usize> {
        self.check(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| (a & b).count_ones() as usize)
            .sum())
    }

    /// In-place symmetric difference. Panics on a universe mismatch.
    pub fn toggle_all(&mut self, other: &EdgeSet) {
        self.check(other).expect("edge set universe mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

macro_rules! edge_set_op {
    ($tr:ident, $method:ident, $named:ident) => {
        impl $tr for &EdgeSet {
            type Output = EdgeSet;

            fn $method(self, rhs: &EdgeSet) -> EdgeSet {
                self.$named(rhs).expect("edge set universe mismatch")
            }
        }
    };
}

edge_set_op!(BitXor, bitxor, sym_diff);
edge_set_op!(BitOr, bitor, union);
edge_set_op!(BitAnd, bitand, intersection);
edge_set_op!(Sub, sub, difference);

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = EdgeId;

    fn next(&mut self) -> Option<EdgeId> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = EdgeId;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_diff_basics() {
        let x = EdgeSet::from_ids(5, [1, 2]).unwrap();
        let y = EdgeSet::from_ids(5, [2, 3]).unwrap();
        assert_eq!(x.sym_diff(&x).unwrap(), EdgeSet::empty(5));
        assert_eq!(x.sym_diff(&EdgeSet::empty(5)).unwrap(), x);
        assert_eq!(x.sym_diff(&y).unwrap().ids(), vec![1, 3]);
    }

    #[test]
    fn universe_mismatch_is_rejected() {
        let x = EdgeSet::empty(5);
        let y = EdgeSet::empty(6);
        assert_eq!(
            x.sym_diff(&y),
            Err(Error::UniverseMismatch { left: 5, right: 6 })
        );
    }

    #[test]
    fn iteration_crosses_word_boundaries() {
        let ids = [0, 63, 64, 65, 127, 128, 199];
        let set = EdgeSet::from_ids(200, ids).unwrap();
        assert_eq!(set.ids(), ids);
        assert_eq!(set.len(), ids.len());
        assert_eq!(set.first(), Some(0));
        assert!(EdgeSet::from_ids(10, [10]).is_err());
    }

    #[test]
    fn lexicographic_order() {
        let a = EdgeSet::from_ids(8, [0, 5]).unwrap();
        let b = EdgeSet::from_ids(8, [0, 1, 7]).unwrap();
        let c = EdgeSet::from_ids(8, [1]).unwrap();
        let mut sets = vec![c.clone(), a.clone(), b.clone()];
        sets.sort();
        assert_eq!(sets, vec![b, a, c]);
    }
}
