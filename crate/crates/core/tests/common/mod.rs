#![allow(dead_code)]

use proptest::prelude::*;
use wfp_core::codes::Code;
use wfp_core::setfam::{full_mask, Family, Subset};

/// Codes with `n <= max_n`, `q <= max_q` and at most `max_m` words,
/// deduplicated after generation.
pub fn codes(max_n: usize, max_q: usize, max_m: usize) -> impl Strategy<Value = Code> {
    (1..=max_n, 2..=max_q).prop_flat_map(move |(n, q)| {
        prop::collection::vec(prop::collection::vec(0..q as u8, n), 1..=max_m).prop_map(move |words| {
            let mut distinct: Vec<Vec<u8>> = Vec::new();
            for w in words {
                if !distinct.contains(&w) {
                    distinct.push(w);
                }
            }
            Code::new(n, q, distinct).unwrap()
        })
    })
}

/// Families of arbitrary masks (duplicates allowed) over `[n]`, `n <= max_n`.
pub fn families(max_n: usize, max_len: usize) -> impl Strategy<Value = Family> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..=full_mask(n), 0..=max_len).prop_map(move |masks| {
            Family::from_sets(n, masks.into_iter().map(|b| Subset::from_bits(n, b).unwrap()).collect()).unwrap()
        })
    })
}

pub fn sets(f: &Family) -> Vec<u64> {
    f.iter().map(|s| s.bits()).collect()
}

/// Sperner check from the definition, quadratic in the family size.
pub fn naive_sperner(masks: &[u64]) -> bool {
    (0..masks.len()).all(|i| (0..masks.len()).all(|j| i == j || masks[i] & !masks[j] != 0))
}

/// Definitional wide-sense frameproof check: every coalition of at most `t`
/// words, every word of `Q^n` in its descendant set, looks for an outsider.
/// Only meant for tiny `q^n`.
pub fn naive_twfp(code: &Code, t: usize) -> bool {
    let (n, q, m) = (code.n(), code.q(), code.len());
    let words = code.words();
    let all: Vec<Vec<u8>> = (0..(q as u32).pow(n as u32))
        .map(|mut x| {
            let mut w = vec![0u8; n];
            for p in (0..n).rev() {
                w[p] = (x % q as u32) as u8;
                x /= q as u32;
            }
            w
        })
        .collect();
    for mask in 1u32..1 << m {
        if mask.count_ones() as usize > t {
            continue;
        }
        let x: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        for y in &all {
            let descends = (0..n).all(|p| {
                let undetectable = x.iter().all(|&i| words[i][p] == words[x[0]][p]);
                !undetectable || y[p] == words[x[0]][p]
            });
            if descends && words.iter().enumerate().any(|(k, w)| w == y && !x.contains(&k)) {
                return false;
            }
        }
    }
    true
}
