//! Symmetric chain decomposition by bracket matching.
//!
//! Read a subset left to right as a bracket word: a position outside the set
//! is `(`, a member is `)`. Greedily matched pairs are frozen; the unmatched
//! positions always read `)…)(…(`, and sliding that boundary walks the chain.

use alloc::vec::Vec;

use super::{check_ground, Subset};
use crate::{Error, Result};

/// Largest `n` for which the whole power set is materialized.
pub const MATERIALIZE_LIMIT: usize = 24;

/// A partition of the power set of `[n]` into symmetric chains, ordered by
/// the bit encoding of each chain's smallest set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub n: usize,
    pub chains: Vec<Vec<Subset>>,
}

/// Returns `(frozen, unmatched)`: the members matched to an earlier
/// non-member, and the unmatched positions as single-bit masks in order.
fn match_brackets(n: usize, bits: u64) -> (u64, Vec<u64>) {
    let mut open: Vec<u64> = Vec::new();
    let mut frozen = 0u64;
    let mut unmatched_close: Vec<u64> = Vec::new();
    for p in 0..n {
        let b = 1u64 << p;
        if bits & b == 0 {
            open.push(b);
        } else if open.pop().is_some() {
            frozen |= b;
        } else {
            unmatched_close.push(b);
        }
    }
    // Opens popped by a match are gone; what is left in `open` is unmatched.
    unmatched_close.extend(open);
    (frozen, unmatched_close)
}

/// The chain of the canonical decomposition that contains `s`, smallest set
/// first. Works for every ground size up to 64.
pub fn chain_through(s: Subset) -> Vec<Subset> {
    let n = s.ground_size();
    let (frozen, unmatched) = match_brackets(n, s.bits());
    let mut cur = frozen;
    let mut chain = Vec::with_capacity(unmatched.len() + 1);
    chain.push(Subset::raw(n, cur));
    for b in unmatched {
        cur |= b;
        chain.push(Subset::raw(n, cur));
    }
    chain
}

/// Decomposes the power set of `[n]` into `C(n, ⌊n/2⌋)` symmetric chains.
pub fn symmetric_chain_decomposition(n: usize) -> Result<ChainDecomposition> {
    check_ground(n)?;
    if n > MATERIALIZE_LIMIT {
        return Err(Error::TooLarge { n, limit: MATERIALIZE_LIMIT });
    }
    let mut chains = Vec::new();
    for bits in 0..1u64 << n {
        let (frozen, _) = match_brackets(n, bits);
        // chain starts hold no unmatched member
        if frozen == bits {
            chains.push(chain_through(Subset::raw(n, bits)));
        }
    }
    Ok(ChainDecomposition { n, chains })
}
