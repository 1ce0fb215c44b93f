use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::Family;
use crate::{Error, Result};

/// Calls `f` with every `k`-element submask of `mask`, in increasing
/// lexicographic order of chosen bit indices.
pub fn for_each_k_subset(mask: u64, k: usize, mut f: impl FnMut(u64)) {
    let bits: Vec<u64> = {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            v.push(m & m.wrapping_neg());
            m &= m - 1;
        }
        v
    };
    let len = bits.len();
    if k > len {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(idx.iter().fold(0, |acc, &i| acc | bits[i]));
        // advance the rightmost index that still has room
        let Some(i) = (0..k).rev().find(|&i| idx[i] < len - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The `r`-shade: all `r`-subsets of `[n]` containing some member.
/// Needs `u <= r <= n`; output is deduplicated and sorted by bit encoding.
pub fn shade(family: &Family, r: usize) -> Result<Family> {
    let n = family.ground_size();
    if r > n {
        return Err(Error::Layer { r, reason: "shade layer exceeds ground size" });
    }
    if let Ok((_, u)) = family.size_extremes() {
        if r < u {
            return Err(Error::Layer { r, reason: "shade layer below the largest member" });
        }
    }
    let full = super::full_mask(n);
    let mut out = BTreeSet::new();
    for s in family {
        let free = full & !s.bits();
        for_each_k_subset(free, r - s.len(), |extra| {
            out.insert(s.bits() | extra);
        });
    }
    Ok(Family::raw(n, out))
}

/// The `s`-shadow: all `s`-subsets contained in some member.
/// Needs `s <= l`; output is deduplicated and sorted by bit encoding.
pub fn shadow(family: &Family, s: usize) -> Result<Family> {
    let n = family.ground_size();
    if let Ok((l, _)) = family.size_extremes() {
        if s > l {
            return Err(Error::Layer { r: s, reason: "shadow layer above the smallest member" });
        }
    }
    let mut out = BTreeSet::new();
    for m in family {
        for_each_k_subset(m.bits(), s, |sub| {
            out.insert(sub);
        });
    }
    Ok(Family::raw(n, out))
}
