//! Bitmask subsets of a ground set of at most [`MAX_ELEMENTS`] elements.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

pub const MAX_ELEMENTS: usize = 20;

/// A subset of `{0, .., n-1}`; bit `i` is element `i` in declaration order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        SubsetMask(1 << i)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        indices.into_iter().fold(Self::EMPTY, |m, i| m.with(i))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1 << i))
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// Element indices in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn lowest(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Every subset of `self`, starting from `self` and ending at the empty set.
    pub fn subsets(self) -> Submasks {
        Submasks { mask: self.0, next: Some(self.0) }
    }

    /// Lexicographic comparison of the ascending element lists.
    pub fn lex_cmp(self, other: SubsetMask) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl BitOr for SubsetMask {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetMask {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        SubsetMask(self.0 & rhs.0)
    }
}

impl Sub for SubsetMask {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        SubsetMask(self.0 & !rhs.0)
    }
}

impl Not for SubsetMask {
    type Output = Self;
    fn not(self) -> Self {
        SubsetMask(!self.0)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i as usize)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Submasks {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        self.next = if cur == 0 { None } else { Some((cur - 1) & self.mask) };
        Some(SubsetMask(cur))
    }
}

/// All subsets of an `n`-element ground set in ascending bitmask order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = SubsetMask> {
    (0..1u32 << n).map(SubsetMask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn submasks_cover_every_subset_once() {
        let m = SubsetMask(0b1011);
        let mut subs: Vec<u32> = m.subsets().map(|s| s.0).collect();
        subs.sort();
        assert_eq!(subs, vec![0, 1, 2, 3, 8, 9, 10, 11]);
    }

    #[test]
    fn lex_order_differs_from_bit_order() {
        let ad = SubsetMask::from_indices([0, 3]);
        let bc = SubsetMask::from_indices([1, 2]);
        assert!(bc < ad);
        assert_eq!(ad.lex_cmp(bc), Ordering::Less);
    }

    proptest! {
        #[test]
        fn iter_round_trips(bits in 0u32..(1 << 20)) {
            let m = SubsetMask(bits);
            prop_assert_eq!(SubsetMask::from_indices(m.iter()), m);
            prop_assert_eq!(m.iter().count(), m.len());
        }
    }
}
