use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::{check_params, Code};
use crate::setfam::{full_mask, Family, Subset};
use crate::{Error, Result};

/// Below this many words the sampler draws indices without replacement;
/// above it, it rejects repeated words.
const INDEX_SAMPLING_LIMIT: u128 = 1 << 24;

/// `m` distinct words drawn uniformly from `{0, .., q-1}^n`, in draw order.
pub fn random_code(n: usize, q: usize, m: usize, seed: u64) -> Result<Code> {
    check_params(n, q)?;
    let space = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if m as u128 > space {
        return Err(Error::SpaceTooSmall { m: m as u128, space });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<Vec<u8>> = if space <= INDEX_SAMPLING_LIMIT {
        rand::seq::index::sample(&mut rng, space as usize, m)
            .into_iter()
            .map(|mut x| {
                let mut w = alloc::vec![0u8; n];
                for p in (0..n).rev() {
                    w[p] = (x % q) as u8;
                    x /= q;
                }
                w
            })
            .collect()
    } else {
        let mut seen = BTreeSet::new();
        let mut words = Vec::with_capacity(m);
        while words.len() < m {
            let w: Vec<u8> = (0..n).map(|_| rng.gen_range(0..q) as u8).collect();
            if seen.insert(w.clone()) {
                words.push(w);
            }
        }
        words
    };
    Ok(Code::from_trusted(n, q as u16, words))
}

/// Pairwise conditions for [`random_family`]. All members are distinct.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FamilyConstraint {
    pub sperner: bool,
    /// Every pair of members, a member with itself included, shares at least
    /// this many positions. `0` disables the check.
    pub intersecting: usize,
    pub non_2_covering: bool,
}

impl FamilyConstraint {
    pub fn sperner() -> Self {
        FamilyConstraint { sperner: true, ..Self::default() }
    }

    pub fn intersecting(k: usize) -> Self {
        FamilyConstraint { intersecting: k, ..Self::default() }
    }

    pub fn non_2_covering() -> Self {
        FamilyConstraint { non_2_covering: true, ..Self::default() }
    }

    fn admissible(&self, s: u64, full: u64) -> bool {
        s.count_ones() as usize >= self.intersecting && (!self.non_2_covering || s != full)
    }

    fn compatible(&self, a: u64, b: u64, full: u64) -> bool {
        (!self.sperner || (a & !b != 0 && b & !a != 0))
            && (a & b).count_ones() as usize >= self.intersecting
            && (!self.non_2_covering || a | b != full)
    }

    pub fn holds(&self, f: &Family) -> bool {
        let full = full_mask(f.ground_size());
        let sets = f.sets();
        sets.iter().enumerate().all(|(i, a)| {
            self.admissible(a.bits(), full)
                && sets[i + 1..].iter().all(|b| a != b && self.compatible(a.bits(), b.bits(), full))
        })
    }
}

/// A family satisfying `constraint` with members whose sizes lie in `sizes`,
/// grown greedily from a seeded shuffle of all such subsets until it has
/// `max_len` members or nothing else fits.
pub fn random_family(
    n: usize,
    sizes: &[usize],
    constraint: FamilyConstraint,
    max_len: usize,
    seed: u64,
) -> Result<Family> {
    if !(1..=16).contains(&n) {
        return Err(Error::OracleRange("random families need 1 <= n <= 16"));
    }
    let full = full_mask(n);
    let mut pool: Vec<u64> = (0..=full)
        .filter(|s| sizes.contains(&(s.count_ones() as usize)))
        .filter(|&s| constraint.admissible(s, full))
        .collect();
    if pool.is_empty() {
        return Err(Error::Unsatisfiable("no subset of the requested sizes satisfies the constraint"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pool.shuffle(&mut rng);
    let mut chosen: Vec<u64> = Vec::new();
    for s in pool {
        if chosen.len() >= max_len {
            break;
        }
        if chosen.iter().all(|&t| constraint.compatible(s, t, full)) {
            chosen.push(s);
        }
    }
    Family::from_sets(n, chosen.into_iter().map(|b| Subset::from_bits(n, b)).collect::<Result<_>>()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_exhausting_the_space() {
        let c = random_code(2, 2, 4, 9).unwrap();
        let mut words = c.words().to_vec();
        words.sort();
        assert_eq!(words, [[0, 0], [0, 1], [1, 0], [1, 1]]);
        assert!(random_code(2, 2, 5, 9).is_err());
    }

    #[test]
    fn codes_are_seed_deterministic() {
        assert_eq!(random_code(8, 4, 10, 1).unwrap(), random_code(8, 4, 10, 1).unwrap());
        assert_ne!(random_code(8, 4, 10, 1).unwrap(), random_code(8, 4, 10, 2).unwrap());
        let big = random_code(40, 3, 20, 5).unwrap();
        assert_eq!(big.len(), 20);
        assert!(Code::new(40, 3, big.words().to_vec()).is_ok());
    }

    #[test]
    fn families_meet_their_constraint() {
        for seed in 0..50 {
            let f = random_family(4, &[2], FamilyConstraint::intersecting(1), usize::MAX, seed).unwrap();
            assert!(f.is_k_intersecting(1).unwrap());
            assert!(f.iter().all(|s| s.len() == 2));
            let f = random_family(6, &[1, 2, 3, 4], FamilyConstraint { sperner: true, intersecting: 0, non_2_covering: true }, 9, seed).unwrap();
            assert!(f.is_sperner() && f.is_non_2_covering() && f.len() <= 9);
        }
        let f = random_family(3, &[1], FamilyConstraint::sperner(), usize::MAX, 3).unwrap();
        assert_eq!(f.canonical(), Family::from_positions(3, &[&[1], &[2], &[3]]).unwrap());
    }

    #[test]
    fn family_determinism_and_errors() {
        let c = FamilyConstraint::sperner();
        assert_eq!(random_family(8, &[3, 4], c, 20, 7), random_family(8, &[3, 4], c, 20, 7));
        assert!(random_family(3, &[0], FamilyConstraint::intersecting(1), 5, 0).is_err());
        assert!(random_family(3, &[3], FamilyConstraint::non_2_covering(), 5, 0).is_err());
        assert!(random_family(17, &[3], c, 5, 0).is_err());
    }
}
