//! Subsets of a ground set `{0, ..., n-1}` stored as 64-bit masks.

use std::cmp::Ordering;
use std::fmt;

use crate::error::MatroidError;

/// Largest ground set an [`ElementSet`] can address.
pub const MAX_UNIVERSE: usize = 64;

/// A subset of `{0, ..., universe - 1}`.
///
/// Two sets are equal when they have the same members and the same universe.
/// Ordering is lexicographic on the sorted member lists (`{0} < {0,1} < {0,2} < {1}`),
/// with the universe size as a final tie-break.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: u64,
    universe: u8,
}

fn full_mask(universe: usize) -> u64 {
    if universe == 64 {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    }
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_UNIVERSE, "universe {universe} exceeds {MAX_UNIVERSE}");
        ElementSet { bits: 0, universe: universe as u8 }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        s.bits = full_mask(universe);
        s
    }

    /// Builds a set from raw mask bits. Panics if a bit lies outside the universe.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        let mut s = Self::empty(universe);
        assert_eq!(bits & !full_mask(universe), 0, "bits outside universe {universe}");
        s.bits = bits;
        s
    }

    /// Checked construction from element labels.
    pub fn try_from_elements<I>(universe: usize, elements: I) -> Result<Self, MatroidError>
    where
        I: IntoIterator<Item = usize>,
    {
        if universe > MAX_UNIVERSE {
            return Err(MatroidError::TooLarge { n: universe, cap: MAX_UNIVERSE });
        }
        let mut s = Self::empty(universe);
        for e in elements {
            if e >= universe {
                return Err(MatroidError::ElementOutOfRange { element: e, n: universe });
            }
            s.bits |= 1 << e;
        }
        Ok(s)
    }

    /// Panicking construction, for literals in tests and fixtures.
    pub fn from_elements<I>(universe: usize, elements: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        Self::try_from_elements(universe, elements).expect("element out of range")
    }

    pub fn singleton(universe: usize, e: usize) -> Self {
        Self::from_elements(universe, [e])
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.universe() && self.bits & (1 << e) != 0
    }

    pub fn with(&self, e: usize) -> Self {
        assert!(e < self.universe(), "element {e} out of range");
        ElementSet { bits: self.bits | (1 << e), universe: self.universe }
    }

    pub fn without(&self, e: usize) -> Self {
        ElementSet { bits: self.bits & !(1u64.checked_shl(e as u32).unwrap_or(0)), universe: self.universe }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_universe(other);
        ElementSet { bits: self.bits | other.bits, universe: self.universe }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_universe(other);
        ElementSet { bits: self.bits & other.bits, universe: self.universe }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        ElementSet { bits: self.bits & !other.bits, universe: self.universe }
    }

    pub fn complement(&self) -> Self {
        ElementSet { bits: !self.bits & full_mask(self.universe()), universe: self.universe }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.bits & other.bits == 0
    }

    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Elements {
        Elements { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Applies a relabeling `new_label[old]`; elements mapped to `None` are dropped.
    pub fn relabel(&self, new_label: &[Option<usize>], new_universe: usize) -> Self {
        Self::from_elements(new_universe, self.iter().filter_map(|e| new_label[e]))
    }

    /// Maps each element through `old_label[new]` back into a larger universe.
    pub fn lift(&self, old_label: &[usize], old_universe: usize) -> Self {
        Self::from_elements(old_universe, self.iter().map(|e| old_label[e]))
    }

    fn check_universe(&self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe, "mixed universes");
    }
}

pub struct Elements {
    bits: u64,
}

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let e = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for &ElementSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Serializes as a sorted array of element labels.
impl serde::Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// All subsets of `{0..universe}` of size `k`, in lexicographic order.
pub fn k_subsets(universe: usize, k: usize) -> impl Iterator<Item = ElementSet> {
    use itertools::Itertools;
    (0..universe).combinations(k).map(move |c| ElementSet::from_elements(universe, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lexicographic_order() {
        let mut sets = [
            ElementSet::from_elements(4, [1]),
            ElementSet::from_elements(4, [0, 2]),
            ElementSet::from_elements(4, []),
            ElementSet::from_elements(4, [0, 1]),
            ElementSet::from_elements(4, [0]),
        ];
        sets.sort();
        let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(lists, vec![vec![], vec![0], vec![0, 1], vec![0, 2], vec![1]]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            ElementSet::try_from_elements(3, [0, 3]),
            Err(MatroidError::ElementOutOfRange { element: 3, n: 3 })
        ));
    }

    #[test]
    fn full_64_universe() {
        let s = ElementSet::full(64);
        assert_eq!(s.len(), 64);
        assert!(s.complement().is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(ElementSet::from_elements(5, [4, 0, 2]).to_string(), "{0,2,4}");
    }

    proptest! {
        #[test]
        fn iteration_is_sorted_and_roundtrips(bits in 0u64..(1 << 12)) {
            let s = ElementSet::from_bits(12, bits);
            let v = s.to_vec();
            prop_assert!(v.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(ElementSet::from_elements(12, v.iter().copied()), s);
            prop_assert_eq!(s.union(&s.complement()), ElementSet::full(12));
        }

        #[test]
        fn relabel_then_lift(bits in 0u64..(1 << 10), drop in 0u64..(1 << 10)) {
            let s = ElementSet::from_bits(10, bits);
            let dropped = ElementSet::from_bits(10, drop);
            let kept: Vec<usize> = dropped.complement().to_vec();
            let mut new_label = vec![None; 10];
            for (i, &e) in kept.iter().enumerate() {
                new_label[e] = Some(i);
            }
            let r = s.relabel(&new_label, kept.len());
            prop_assert_eq!(r.lift(&kept, 10), s.difference(&dropped));
        }
    }
}
