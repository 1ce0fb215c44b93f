use alloc::vec::Vec;

use super::{Instance, OracleCertificate, OracleStatus, Witness};
use crate::clique::{max_clique, BitGraph, BitSet, CliqueOutcome};
use crate::setfam::{full_mask, Family};
use crate::{Error, Result};

/// Largest ground set the family oracles accept.
pub const MAX_FAMILY_N: usize = 12;

/// Inclusive range of set sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeRange {
    pub lo: usize,
    pub hi: usize,
}

impl SizeRange {
    pub fn new(lo: usize, hi: usize) -> Self {
        SizeRange { lo, hi }
    }

    pub fn exactly(k: usize) -> Self {
        SizeRange { lo: k, hi: k }
    }

    pub fn contains(self, k: usize) -> bool {
        self.lo <= k && k <= self.hi
    }
}

/// Sperner families of distinct subsets of `[n]` whose members have sizes in
/// `sizes`, with at least one member in each range of `must_hit`, and
/// optionally non-2-covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpernerConstraint {
    pub n: usize,
    pub sizes: SizeRange,
    pub must_hit: Vec<SizeRange>,
    pub non_2_covering: bool,
}

impl SpernerConstraint {
    pub fn non_2_covering(n: usize) -> Self {
        SpernerConstraint { n, sizes: SizeRange::new(0, n), must_hit: Vec::new(), non_2_covering: true }
    }

    /// Smallest member of size exactly `l`, largest of size exactly `u`.
    pub fn forced_extremes(n: usize, l: usize, u: usize) -> Self {
        SpernerConstraint {
            n,
            sizes: SizeRange::new(l, u),
            must_hit: alloc::vec![SizeRange::exactly(l), SizeRange::exactly(u)],
            non_2_covering: false,
        }
    }

    pub fn admits(&self, f: &Family) -> bool {
        let sizes_ok = f.iter().all(|s| self.sizes.contains(s.len()));
        let hits = self.must_hit.iter().all(|r| f.iter().any(|s| r.contains(s.len())));
        sizes_ok
            && hits
            && f.ground_size() == self.n
            && f.canonical().len() == f.len()
            && f.is_sperner()
            && (!self.non_2_covering || f.is_non_2_covering())
    }
}

/// Largest Sperner, non-2-covering family of distinct subsets of `[n]`.
pub fn max_non2cov_sperner(n: usize, budget: u64) -> Result<OracleCertificate> {
    max_sperner_constrained(&SpernerConstraint::non_2_covering(n), budget)
}

/// Largest family meeting `c`, by maximum clique on the compatibility graph
/// of admissible subsets.
pub fn max_sperner_constrained(c: &SpernerConstraint, budget: u64) -> Result<OracleCertificate> {
    if c.n == 0 {
        return Err(Error::GroundSize(0));
    }
    if c.n > MAX_FAMILY_N {
        return Err(Error::OracleRange("family oracles need n <= 12"));
    }
    let full = full_mask(c.n);
    let vertices: Vec<u64> = (0..=full)
        .filter(|&s| c.sizes.contains(s.count_ones() as usize))
        .filter(|&s| !c.non_2_covering || s != full)
        .collect();
    let v = vertices.len();
    let graph = BitGraph::from_fn(v, |i, j| {
        let (a, b) = (vertices[i], vertices[j]);
        let incomparable = a & !b != 0 && b & !a != 0;
        incomparable && (!c.non_2_covering || a | b != full)
    });
    let must: Vec<BitSet> = c
        .must_hit
        .iter()
        .map(|r| {
            let mut s = BitSet::new(v);
            for (i, &x) in vertices.iter().enumerate() {
                if r.contains(x.count_ones() as usize) {
                    s.insert(i);
                }
            }
            s
        })
        .collect();
    let run = max_clique(&graph, &BitSet::full(v), &must, budget);
    let (status, best) = match run.outcome {
        CliqueOutcome::Optimal(b) => (OracleStatus::Exact, b),
        CliqueOutcome::Exhausted(b) => (OracleStatus::Inconclusive, b),
    };
    let witness = best.map(|ids| Family::raw(c.n, ids.into_iter().map(|i| vertices[i])).canonical());
    Ok(OracleCertificate {
        instance: Instance::Family(c.clone()),
        status,
        optimum: witness.as_ref().map(Family::len),
        witness: witness.map(Witness::Family),
        search_space_size: v as u128,
        nodes: run.nodes,
        elapsed: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn optimum(c: &SpernerConstraint) -> Option<usize> {
        let cert = max_sperner_constrained(c, u64::MAX).unwrap();
        assert!(cert.is_exact());
        if let Some(Witness::Family(f)) = &cert.witness {
            assert!(c.admits(f), "{f}");
        }
        cert.optimum
    }

    #[test]
    fn small_non2cov_optima() {
        assert_eq!(optimum(&SpernerConstraint::non_2_covering(1)), Some(1));
        assert_eq!(optimum(&SpernerConstraint::non_2_covering(2)), Some(1));
        let cert = max_non2cov_sperner(3, u64::MAX).unwrap();
        assert_eq!(cert.optimum, Some(3));
        assert_eq!(cert.witness, Some(Witness::Family(Family::from_positions(3, &[&[1], &[2], &[3]]).unwrap())));
    }

    #[test]
    fn range_errors() {
        assert_eq!(max_non2cov_sperner(13, 10).unwrap_err(), Error::OracleRange("family oracles need n <= 12"));
        assert!(max_non2cov_sperner(0, 10).is_err());
    }

    #[test]
    fn forced_extremes() {
        // sizes 1 and 3 in [4]: one singleton {1} leaves {2,3,4} only
        assert_eq!(optimum(&SpernerConstraint::forced_extremes(4, 1, 3)), Some(2));
        assert_eq!(optimum(&SpernerConstraint::forced_extremes(4, 2, 2)), Some(6));
        assert_eq!(optimum(&SpernerConstraint::forced_extremes(3, 0, 1)), None);
        assert_eq!(optimum(&SpernerConstraint::forced_extremes(3, 0, 0)), Some(1));
    }

    #[test]
    fn exhausted_budget_is_inconclusive() {
        let cert = max_non2cov_sperner(8, 3).unwrap();
        assert_eq!(cert.status, OracleStatus::Inconclusive);
    }
}
