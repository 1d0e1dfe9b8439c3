use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::bits::BitSet;

/// A subgroup of some parent [`Group`](crate::Group), as a member bitset.
///
/// The parent is not stored; operations take the group alongside. Subgroups
/// order by size, then by their sorted member lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    bits: BitSet,
    size: usize,
}

impl Subgroup {
    pub(crate) fn from_bits_unchecked(bits: BitSet) -> Subgroup {
        let size = bits.count();
        Subgroup { bits, size }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    /// Order of the parent group.
    pub fn parent_order(&self) -> usize {
        self.bits.universe()
    }

    pub fn index(&self) -> usize {
        self.parent_order() / self.size
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn members(&self) -> crate::bits::Ones<'_> {
        self.bits.iter()
    }

    pub fn members_vec(&self) -> Vec<usize> {
        self.bits.to_vec()
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn is_whole(&self) -> bool {
        self.size == self.parent_order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.size <= other.size && self.bits.is_subset(&other.bits)
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.size < other.size && self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_bits_unchecked(self.bits.intersection(&other.bits))
    }

    pub fn intersection_size(&self, other: &Subgroup) -> usize {
        self.bits.intersection_count(&other.bits)
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl core::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.size, self.bits)
    }
}
