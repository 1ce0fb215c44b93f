//! Combinatorial machinery for wide-sense frameproof codes.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`setfam`]: subsets of `[n]` as 64-bit masks, families with multiset
//!   semantics, shade/shadow operators and symmetric chain decompositions.
//! * [`codes`]: codes over `{0, .., q-1}`, coincidence sets and families,
//!   descendant sets, and the direct and structural frameproof verifiers.
//! * [`bounds`]: exact upper bounds on the size of 2-frameproof codes.
//! * [`oracles`]: exhaustive reference searches and seeded generators.
//! * [`search`]: budgeted branch-and-bound search for large codes.
//!
//! Indices in the API are 0-based. Everything rendered for humans
//! (`Display`, reports) is 1-based.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod clique;
pub mod codes;
mod error;
pub mod oracles;
pub mod search;
pub mod setfam;

pub use error::{Error, Result};
