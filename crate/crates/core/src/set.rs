use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::MAX_ORDER;

/// A subset of the vertices `0..order` of a particular graph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    order: usize,
    bits: u64,
}

#[inline]
pub(crate) fn full_mask(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        Self { order, bits: 0 }
    }

    pub fn full(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        Self { order, bits: full_mask(order) }
    }

    pub fn from_bits(order: usize, bits: u64) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        if bits & !full_mask(order) != 0 {
            let label = 63 - (bits & !full_mask(order)).leading_zeros() as usize;
            return Err(Error::LabelOutOfRange { label, order });
        }
        Ok(Self { order, bits })
    }

    /// Caller guarantees that `bits` only uses labels below `order`.
    #[inline]
    pub(crate) fn from_bits_unchecked(order: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(order) == 0);
        Self { order, bits }
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(order: usize, labels: I) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let mut bits = 0u64;
        for label in labels {
            if label >= order {
                return Err(Error::LabelOutOfRange { label, order });
            }
            bits |= 1 << label;
        }
        Ok(Self { order, bits })
    }

    pub fn singleton(order: usize, v: usize) -> Result<Self> {
        Self::from_labels(order, [v])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.order)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.bits >> v & 1 == 1
    }

    pub fn with(&self, v: usize) -> Result<Self> {
        if v >= self.order {
            return Err(Error::LabelOutOfRange { label: v, order: self.order });
        }
        Ok(Self { order: self.order, bits: self.bits | 1 << v })
    }

    pub fn without(&self, v: usize) -> Self {
        if v >= self.order {
            return *self;
        }
        Self { order: self.order, bits: self.bits & !(1 << v) }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        Self { order: self.order, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        Self { order: self.order, bits: self.bits & other.bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        Self { order: self.order, bits: self.bits & !other.bits }
    }

    pub fn complement(&self) -> Self {
        Self { order: self.order, bits: !self.bits & full_mask(self.order) }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Members {
        Members(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`] or raw mask.
#[derive(Clone, Debug)]
pub struct Members(pub(crate) u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
