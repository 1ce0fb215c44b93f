//! Subsets of a ground set `[n]` and ordered families of them.
//!
//! A [`Subset`] packs its characteristic vector into a `u64`: position `p`
//! (1-based, as printed) lives in bit `p - 1`. Families keep list order and
//! duplicates; every predicate here treats them as multisets.

mod chains;
mod shade;

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub use chains::{chain_through, symmetric_chain_decomposition, ChainDecomposition, MATERIALIZE_LIMIT};
pub use shade::{for_each_k_subset, shade, shadow};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

pub(crate) fn check_ground(n: usize) -> Result<()> {
    if (1..=MAX_GROUND).contains(&n) {
        Ok(())
    } else {
        Err(Error::GroundSize(n))
    }
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of `[n]`, `1 <= n <= 64`.
///
/// Ordering is by the integer value of the bit encoding; ground sizes only
/// break ties between otherwise equal masks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: u64,
    n: u8,
}

impl Subset {
    pub fn empty(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(Subset { bits: 0, n: n as u8 })
    }

    pub fn full(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(Subset { bits: full_mask(n), n: n as u8 })
    }

    /// Builds a subset from its bit encoding. Bits at or above `n` are rejected.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_ground(n)?;
        if bits & !full_mask(n) != 0 {
            return Err(Error::Position { pos: 63 - bits.leading_zeros() as usize, n });
        }
        Ok(Subset { bits, n: n as u8 })
    }

    /// Builds a subset from 1-based positions.
    pub fn from_positions(n: usize, positions: &[usize]) -> Result<Self> {
        check_ground(n)?;
        let mut bits = 0u64;
        for &p in positions {
            if p == 0 || p > n {
                return Err(Error::Position { pos: p, n });
            }
            bits |= 1 << (p - 1);
        }
        Ok(Subset { bits, n: n as u8 })
    }

    /// Caller guarantees `bits` fits in `n` and `n` is in range.
    #[inline]
    pub(crate) fn raw(n: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(n) == 0);
        Subset { bits, n: n as u8 }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn ground_size(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == full_mask(self.ground_size())
    }

    /// Membership of the 1-based position `p`.
    pub fn contains(self, p: usize) -> bool {
        p >= 1 && p <= self.ground_size() && self.bits >> (p - 1) & 1 == 1
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset { bits: self.bits | other.bits, n: self.n }
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset { bits: self.bits & other.bits, n: self.n }
    }

    #[inline]
    pub fn complement(self) -> Subset {
        Subset { bits: !self.bits & full_mask(self.ground_size()), n: self.n }
    }

    /// 1-based positions in increasing order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p + 1)
            }
        })
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("{")?;
        for (i, p) in self.positions().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

/// An ordered multiset of subsets of a common ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Family {
    n: u8,
    sets: Vec<Subset>,
}

impl Family {
    pub fn new(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(Family { n: n as u8, sets: Vec::new() })
    }

    pub fn from_sets(n: usize, sets: Vec<Subset>) -> Result<Self> {
        check_ground(n)?;
        if let Some(s) = sets.iter().find(|s| s.ground_size() != n) {
            return Err(Error::GroundMismatch(n, s.ground_size()));
        }
        Ok(Family { n: n as u8, sets })
    }

    /// Convenience constructor from lists of 1-based positions.
    pub fn from_positions(n: usize, sets: &[&[usize]]) -> Result<Self> {
        let sets = sets
            .iter()
            .map(|s| Subset::from_positions(n, s))
            .collect::<Result<Vec<_>>>()?;
        Family::from_sets(n, sets)
    }

    /// Families built from masks known to fit in `[n]`.
    pub(crate) fn raw(n: usize, masks: impl IntoIterator<Item = u64>) -> Self {
        Family { n: n as u8, sets: masks.into_iter().map(|b| Subset::raw(n, b)).collect() }
    }

    pub fn push(&mut self, s: Subset) -> Result<()> {
        if s.ground_size() != self.ground_size() {
            return Err(Error::GroundMismatch(self.ground_size(), s.ground_size()));
        }
        self.sets.push(s);
        Ok(())
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Subset> {
        self.sets.iter()
    }

    /// Members whose size satisfies `keep`, in list order.
    pub fn filter_sizes(&self, mut keep: impl FnMut(usize) -> bool) -> Family {
        Family { n: self.n, sets: self.sets.iter().copied().filter(|s| keep(s.len())).collect() }
    }

    /// `(l, u)`: the smallest and largest member sizes.
    pub fn size_extremes(&self) -> Result<(usize, usize)> {
        let mut it = self.sets.iter().map(|s| s.len());
        let first = it.next().ok_or(Error::EmptyFamily)?;
        Ok(it.fold((first, first), |(l, u), k| (l.min(k), u.max(k))))
    }

    /// No member is contained in a member at another index. Repeated sets fail.
    pub fn is_sperner(&self) -> bool {
        let s = &self.sets;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i].is_subset_of(s[j]) || s[j].is_subset_of(s[i]) {
                    return false;
                }
            }
        }
        true
    }

    /// No ordered pair of members, self-pairs included, covers `[n]`.
    pub fn is_non_2_covering(&self) -> bool {
        let full = full_mask(self.ground_size());
        let s = &self.sets;
        for i in 0..s.len() {
            for j in i..s.len() {
                if s[i].bits | s[j].bits == full {
                    return false;
                }
            }
        }
        true
    }

    /// Every pair of members, self-pairs included, shares at least `k` points.
    pub fn is_k_intersecting(&self, k: usize) -> Result<bool> {
        if k < 1 {
            return Err(Error::InvalidK);
        }
        let s = &self.sets;
        for i in 0..s.len() {
            for j in i..s.len() {
                if s[i].intersection(s[j]).len() < k {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Member-wise complement, list order preserved.
    pub fn complement(&self) -> Family {
        Family { n: self.n, sets: self.sets.iter().map(|s| s.complement()).collect() }
    }

    /// Members sorted by bit encoding with duplicates removed.
    pub fn canonical(&self) -> Family {
        let mut sets = self.sets.clone();
        sets.sort_unstable();
        sets.dedup();
        Family { n: self.n, sets }
    }
}

/// `|A ∩ B| >= k` for every `A` in `a` and `B` in `b`. Vacuously true if
/// either family is empty.
pub fn are_cross_k_intersecting(a: &Family, b: &Family, k: usize) -> Result<bool> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    if a.ground_size() != b.ground_size() {
        return Err(Error::GroundMismatch(a.ground_size(), b.ground_size()));
    }
    Ok(a.iter().all(|x| b.iter().all(|y| x.intersection(*y).len() >= k)))
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a Subset;
    type IntoIter = core::slice::Iter<'a, Subset>;
    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}
