use alloc::vec::Vec;
use fixedbitset::FixedBitSet;

use crate::ring::Elem;

/// A subset of the elements of a ring, stored as a fixed-width bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: FixedBitSet,
}

impl SubsetMask {
    pub fn empty(size: usize) -> SubsetMask {
        SubsetMask { bits: FixedBitSet::with_capacity(size) }
    }

    pub fn full(size: usize) -> SubsetMask {
        let mut bits = FixedBitSet::with_capacity(size);
        bits.insert_range(..);
        SubsetMask { bits }
    }

    pub fn from_elems(size: usize, elems: impl IntoIterator<Item = Elem>) -> SubsetMask {
        let mut m = SubsetMask::empty(size);
        for e in elems {
            m.insert(e);
        }
        m
    }

    /// Number of ring elements the mask ranges over.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn insert(&mut self, e: Elem) {
        self.bits.insert(e.idx());
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e.idx())
    }

    #[inline]
    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        SubsetMask { bits }
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        SubsetMask { bits }
    }

    pub fn intersect_with(&mut self, other: &SubsetMask) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.ones().map(|i| Elem(i as u16))
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }
}
