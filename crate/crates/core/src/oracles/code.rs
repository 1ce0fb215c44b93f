use alloc::vec::Vec;

use super::{Instance, OracleCertificate, OracleStatus, Witness};
use crate::codes::{check_params, extends_twfp_direct, is_twfp_direct, Code};
use crate::{Error, Result};

/// Largest `q^n` the code oracle enumerates.
pub const CODE_SPACE_LIMIT: u64 = 1 << 20;

/// Order in which symbols are tried. `Descending` relabels `s` as `q-1-s`,
/// so the fixed first word becomes all `q-1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EnumerationOrder {
    #[default]
    Ascending,
    Descending,
}

/// Exact maximum `t`-frameproof code by backtracking over sets of words that
/// contain a fixed first word.
///
/// The search is split into one branch per choice of second word. Branches
/// share only the greedy lower bound computed up front, so they can run in
/// any order or in parallel with identical results.
#[derive(Clone, Debug)]
pub struct CodeOracle {
    n: usize,
    q: usize,
    t: usize,
    words: Vec<Vec<u8>>,
    greedy: Vec<usize>,
    roots: Vec<usize>,
    greedy_nodes: u64,
}

/// Outcome of one branch: the best code beating the greedy bound, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeBranch {
    pub best: Option<Vec<usize>>,
    pub nodes: u64,
    pub exhausted: bool,
}

impl CodeOracle {
    pub fn new(n: usize, q: usize, t: usize, order: EnumerationOrder) -> Result<Self> {
        check_params(n, q)?;
        if t == 0 {
            return Err(Error::Parameter("t must be at least 1"));
        }
        let space = (q as u64).checked_pow(n as u32).filter(|&s| s <= CODE_SPACE_LIMIT);
        let Some(space) = space else {
            return Err(Error::OracleRange("code oracle needs q^n <= 2^20"));
        };
        let words: Vec<Vec<u8>> = (0..space)
            .map(|mut x| {
                let mut w = alloc::vec![0u8; n];
                for p in (0..n).rev() {
                    let s = (x % q as u64) as u8;
                    w[p] = match order {
                        EnumerationOrder::Ascending => s,
                        EnumerationOrder::Descending => (q - 1) as u8 - s,
                    };
                    x /= q as u64;
                }
                w
            })
            .collect();
        let mut oracle = CodeOracle { n, q, t, words, greedy: Vec::new(), roots: Vec::new(), greedy_nodes: 0 };
        // lexicode: scan every word once
        let mut greedy = alloc::vec![0];
        for w in 1..oracle.words.len() {
            oracle.greedy_nodes += 1;
            if oracle.extends(&greedy, w) {
                greedy.push(w);
            }
        }
        oracle.greedy = greedy;
        oracle.roots = (1..oracle.words.len()).collect();
        Ok(oracle)
    }

    fn code(&self, ids: &[usize]) -> Code {
        Code::from_trusted(self.n, self.q as u16, ids.iter().map(|&i| self.words[i].clone()).collect())
    }

    fn extends(&self, ids: &[usize], w: usize) -> bool {
        extends_twfp_direct(&self.code(ids), &self.words[w], self.t)
    }

    pub fn branch_count(&self) -> usize {
        self.roots.len()
    }

    pub fn search_space_size(&self) -> u128 {
        self.words.len() as u128
    }

    /// Explores codes whose two smallest words are the first word and root
    /// `branch`, visiting at most `budget` nodes.
    pub fn run_branch(&self, branch: usize, budget: u64) -> CodeBranch {
        let mut run = BranchRun { oracle: self, best_len: self.greedy.len(), best: None, nodes: 0, budget, exhausted: false };
        let root = self.roots[branch];
        let ids = alloc::vec![0, root];
        let cands: Vec<usize> = (root + 1..self.words.len()).filter(|&w| self.extends(&ids, w)).collect();
        run.nodes += (self.words.len() - root - 1) as u64;
        if run.nodes > budget {
            return CodeBranch { best: None, nodes: run.nodes, exhausted: true };
        }
        let mut ids = ids;
        run.visit(&mut ids, &cands);
        CodeBranch { best: run.best, nodes: run.nodes, exhausted: run.exhausted }
    }

    /// Merges branch results (in branch order) into a certificate.
    pub fn finish(&self, branches: &[CodeBranch], budget: u64) -> OracleCertificate {
        let mut best = &self.greedy;
        for b in branches {
            if let Some(ids) = &b.best {
                if ids.len() > best.len() {
                    best = ids;
                }
            }
        }
        let nodes = self.greedy_nodes + branches.iter().map(|b| b.nodes).sum::<u64>();
        let exhausted = branches.len() != self.roots.len() || nodes > budget || branches.iter().any(|b| b.exhausted);
        let witness = self.code(best);
        debug_assert!(is_twfp_direct(&witness, self.t).is_frameproof());
        OracleCertificate {
            instance: Instance::Code { n: self.n, q: self.q, t: self.t },
            status: if exhausted { OracleStatus::Inconclusive } else { OracleStatus::Exact },
            optimum: Some(witness.len()),
            witness: Some(Witness::Code(witness)),
            search_space_size: self.search_space_size(),
            nodes,
            elapsed: None,
        }
    }
}

struct BranchRun<'a> {
    oracle: &'a CodeOracle,
    best_len: usize,
    best: Option<Vec<usize>>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl BranchRun<'_> {
    fn visit(&mut self, ids: &mut Vec<usize>, cands: &[usize]) {
        if ids.len() > self.best_len {
            self.best_len = ids.len();
            self.best = Some(ids.clone());
        }
        for (a, &w) in cands.iter().enumerate() {
            if ids.len() + cands.len() - a <= self.best_len {
                return;
            }
            ids.push(w);
            let rest = &cands[a + 1..];
            self.nodes += rest.len() as u64 + 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                ids.pop();
                return;
            }
            let next: Vec<usize> = rest.iter().copied().filter(|&x| self.oracle.extends(ids, x)).collect();
            self.visit(ids, &next);
            ids.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

/// Single-threaded run of every branch of [`CodeOracle`].
pub fn exhaustive_max_code(n: usize, q: usize, t: usize, budget: u64, order: EnumerationOrder) -> Result<OracleCertificate> {
    let oracle = CodeOracle::new(n, q, t, order)?;
    let branches: Vec<CodeBranch> = (0..oracle.branch_count()).map(|b| oracle.run_branch(b, budget)).collect();
    Ok(oracle.finish(&branches, budget))
}
