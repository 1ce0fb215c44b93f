//! Exhaustive reference searches and seeded input generators.
//!
//! Every search runs under a node budget. Running out is reported through
//! [`OracleStatus::Inconclusive`], with the best witness found so far.

mod code;
mod family;
mod random;

use core::time::Duration;

use crate::codes::Code;
use crate::setfam::Family;

pub use code::{exhaustive_max_code, CodeBranch, CodeOracle, EnumerationOrder, CODE_SPACE_LIMIT};
pub use family::{max_non2cov_sperner, max_sperner_constrained, SizeRange, SpernerConstraint, MAX_FAMILY_N};
pub use random::{random_code, random_family, FamilyConstraint};

/// What an oracle was asked to maximize.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    /// Largest `(n, m, q)` wide-sense `t`-frameproof code.
    Code { n: usize, q: usize, t: usize },
    /// Largest family of distinct subsets of `[n]` under a constraint.
    Family(SpernerConstraint),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Code(Code),
    Family(Family),
}

impl Witness {
    pub fn len(&self) -> usize {
        match self {
            Witness::Code(c) => c.len(),
            Witness::Family(f) => f.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleStatus {
    /// The optimum is proven.
    Exact,
    /// The budget ran out; `optimum` is only a lower bound.
    Inconclusive,
}

impl OracleStatus {
    pub fn label(self) -> &'static str {
        match self {
            OracleStatus::Exact => "exact",
            OracleStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCertificate {
    pub instance: Instance,
    pub status: OracleStatus,
    /// Size of the witness. `None` when no object meets the constraint.
    pub optimum: Option<usize>,
    pub witness: Option<Witness>,
    /// Number of candidate elements (words or subsets) the search ranges over.
    pub search_space_size: u128,
    pub nodes: u64,
    /// Left empty by the library; front ends may fill it in.
    pub elapsed: Option<Duration>,
}

impl OracleCertificate {
    pub fn is_exact(&self) -> bool {
        self.status == OracleStatus::Exact
    }
}
