//! Bit-packed subsets of a finite group's element range 0..n.
//!
//! Every set carries its universe size. Mixing sets from different
//! universes is a programming error; binary operations assert agreement.
//! Sets order lexicographically as ascending member lists, which is the
//! canonical order used for partition parts everywhere in the crate.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

const WORD_BITS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetError {
    #[error("element {element} is outside the universe 0..{universe}")]
    OutOfRange { element: usize, universe: usize },
    #[error("element {0} listed twice")]
    Duplicate(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            words: vec![0; universe.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for (i, word) in set.words.iter_mut().enumerate() {
            let remaining = universe - i * WORD_BITS;
            *word = if remaining >= WORD_BITS {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        set
    }

    pub fn singleton(universe: usize, element: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(element);
        set
    }

    /// Builds a set from explicit indices, rejecting out-of-range and
    /// duplicate entries (wire inputs are never trusted).
    pub fn from_indices(universe: usize, indices: &[usize]) -> Result<Self, SetError> {
        let mut set = Self::empty(universe);
        for &x in indices {
            if x >= universe {
                return Err(SetError::OutOfRange {
                    element: x,
                    universe,
                });
            }
            if set.contains(x) {
                return Err(SetError::Duplicate(x));
            }
            set.insert(x);
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

    pub fn contains(&self, element: usize) -> bool {
        debug_assert!(element < self.universe);
        self.words[element / WORD_BITS] >> (element % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, element: usize) {
        assert!(element < self.universe, "element outside universe");
        self.words[element / WORD_BITS] |= 1 << (element % WORD_BITS);
    }

    pub fn remove(&mut self, element: usize) {
        assert!(element < self.universe, "element outside universe");
        self.words[element / WORD_BITS] &= !(1 << (element % WORD_BITS));
    }

    pub fn min_element(&self) -> Option<usize> {
        for (i, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(i * WORD_BITS + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        out
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(w, o)| w & !o == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).any(|(w, o)| w & o != 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }
}

pub struct Iter<'a> {
    set: &'a ElementSet,
    word_index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * WORD_BITS + bit)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.universe, other.universe);
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for x in self.iter() {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_membership() {
        let s = ElementSet::from_indices(7, &[3, 5, 6]).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), [3, 5, 6]);
        assert!(s.contains(5) && !s.contains(0));
        assert_eq!(s.min_element(), Some(3));
        assert_eq!(ElementSet::empty(7).min_element(), None);
    }

    #[test]
    fn rejects_bad_indices() {
        assert_eq!(
            ElementSet::from_indices(5, &[1, 5]),
            Err(SetError::OutOfRange {
                element: 5,
                universe: 5
            })
        );
        assert_eq!(
            ElementSet::from_indices(5, &[2, 2]),
            Err(SetError::Duplicate(2))
        );
    }

    #[test]
    fn full_set_masks_trailing_bits() {
        for n in [1usize, 63, 64, 65, 130] {
            let f = ElementSet::full(n);
            assert_eq!(f.len(), n);
            assert_eq!(f.complement().len(), 0);
        }
    }

    #[test]
    fn boolean_algebra() {
        let a = ElementSet::from_indices(10, &[0, 2, 4]).unwrap();
        let b = ElementSet::from_indices(10, &[2, 3]).unwrap();
        assert_eq!(a.union(&b).to_vec(), [0, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), [2]);
        assert_eq!(a.difference(&b).to_vec(), [0, 4]);
        assert!(b.intersects(&a));
        assert!(!a.is_subset(&b));
        assert!(ElementSet::empty(10).is_subset(&a));
        assert_eq!(a.complement().len(), 7);
    }

    #[test]
    fn sets_order_as_member_lists() {
        let mk = |xs: &[usize]| ElementSet::from_indices(6, xs).unwrap();
        assert!(mk(&[0, 5]) < mk(&[1, 2]));
        assert!(mk(&[1, 2]) < mk(&[1, 3]));
        assert!(mk(&[1]) < mk(&[1, 2]));
        assert_eq!(mk(&[2, 4]).cmp(&mk(&[2, 4])), Ordering::Equal);
    }

    #[test]
    fn serializes_as_sorted_indices() {
        let s = ElementSet::from_indices(9, &[8, 1, 4]).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,4,8]");
    }
}
