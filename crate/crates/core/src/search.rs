//! Budgeted depth-first search for large frameproof codes.
//!
//! Codes are grown in canonical form: words strictly increase
//! lexicographically, the first word is all zeros, and in every column a new
//! word may use at most one symbol larger than any symbol already in that
//! column. Every code is equivalent under per-position relabeling to one in
//! this form, so an exhausted search is optimal.
//!
//! The search splits into one branch per possible second word. Each branch
//! gets a fixed share of the node budget and keeps its own best code, so the
//! merged result does not depend on how branches are scheduled.

use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use crate::bounds::best_upper_bound;
use crate::codes::{agreement, extends_twfp_direct, Code};
use crate::{Error, Result};

pub const MAX_SEARCH_N: usize = 20;
pub const MAX_SEARCH_Q: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchParams {
    pub n: usize,
    pub q: usize,
    pub t: usize,
    /// Maximum number of candidate words tested.
    pub budget: u64,
    /// Recorded in the result. The search order is fixed, so the seed does
    /// not change what is found.
    pub seed: u64,
}

impl SearchParams {
    pub fn new(n: usize, q: usize, budget: u64) -> Self {
        SearchParams { n, q, t: 2, budget, seed: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Optimal,
    BudgetExhausted,
}

impl SearchStatus {
    pub fn label(self) -> &'static str {
        match self {
            SearchStatus::Optimal => "optimal",
            SearchStatus::BudgetExhausted => "budget_exhausted",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub best_code: Code,
    pub size: usize,
    pub status: SearchStatus,
    pub nodes_explored: u64,
    pub seed: u64,
    /// Left empty by the library; front ends may fill it in.
    pub wall_time: Option<Duration>,
}

/// Best code of one branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchResult {
    pub words: Vec<Vec<u8>>,
    pub nodes: u64,
    pub exhausted: bool,
}

#[derive(Clone, Debug)]
pub struct SearchPlan {
    params: SearchParams,
    branches: u64,
    ceiling: usize,
}

impl SearchPlan {
    pub fn new(params: SearchParams) -> Result<Self> {
        let SearchParams { n, q, t, .. } = params;
        if !(1..=MAX_SEARCH_N).contains(&n) {
            return Err(Error::Parameter("search needs 1 <= n <= 20"));
        }
        if !(2..=MAX_SEARCH_Q).contains(&q) {
            return Err(Error::Parameter("search needs 2 <= q <= 8"));
        }
        if t == 0 {
            return Err(Error::Parameter("t must be at least 1"));
        }
        let space = (q as u64).pow(n as u32);
        let bound = match t {
            1 => None,
            _ => best_upper_bound(n as u64).value,
        };
        let ceiling = bound.map_or(space, |b| b.min(space)) as usize;
        Ok(SearchPlan { params, branches: (1 << n) - 1, ceiling })
    }

    pub fn params(&self) -> SearchParams {
        self.params
    }

    /// Number of branches: one per nonzero binary second word.
    pub fn branch_count(&self) -> u64 {
        self.branches
    }

    /// Node budget of branch `b`; shares differ by at most one.
    pub fn share(&self, b: u64) -> u64 {
        let (base, extra) = (self.params.budget / self.branches, self.params.budget % self.branches);
        base + u64::from(b < extra)
    }

    pub fn run_branch(&self, b: u64) -> BranchResult {
        let n = self.params.n;
        let root: Vec<u8> = (0..n).map(|p| ((b + 1) >> (n - 1 - p) & 1) as u8).collect();
        let mut run = Branch {
            q: self.params.q,
            t: self.params.t,
            budget: self.share(b),
            ceiling: self.ceiling,
            words: vec![vec![0; n]],
            agree: vec![vec![0]],
            limits: vec![0; n],
            best: Vec::new(),
            nodes: 0,
            exhausted: false,
        };
        run.push(root);
        run.best = run.words.clone();
        run.dfs();
        BranchResult { words: run.best, nodes: run.nodes, exhausted: run.exhausted }
    }

    /// Combines branch results given in branch order.
    pub fn merge(&self, results: Vec<BranchResult>) -> SearchResult {
        let complete = results.len() as u64 == self.branches;
        let nodes_explored = results.iter().map(|r| r.nodes).sum();
        let exhausted = !complete || results.iter().any(|r| r.exhausted);
        let best = results
            .into_iter()
            .map(|r| r.words)
            .reduce(|a, b| if b.len() > a.len() || (b.len() == a.len() && b < a) { b } else { a })
            .unwrap_or_else(|| vec![vec![0; self.params.n]]);
        let best_code = Code::from_trusted(self.params.n, self.params.q as u16, best);
        SearchResult {
            size: best_code.len(),
            best_code,
            status: if exhausted { SearchStatus::BudgetExhausted } else { SearchStatus::Optimal },
            nodes_explored,
            seed: self.params.seed,
            wall_time: None,
        }
    }
}

struct Branch {
    q: usize,
    t: usize,
    budget: u64,
    ceiling: usize,
    words: Vec<Vec<u8>>,
    /// `agree[i][j]` for `j < i`; the diagonal slot is unused.
    agree: Vec<Vec<u64>>,
    limits: Vec<u8>,
    best: Vec<Vec<u8>>,
    nodes: u64,
    exhausted: bool,
}

impl Branch {
    fn radix(&self, p: usize) -> u64 {
        (self.limits[p] as u64 + 2).min(self.q as u64)
    }

    /// Words of the current box that are `>= w`.
    fn remaining_from(&self, w: &[u8]) -> u64 {
        let mut rank = 0u64;
        let mut size = 1u64;
        for p in (0..w.len()).rev() {
            rank += w[p] as u64 * size;
            size *= self.radix(p);
        }
        size - rank
    }

    fn successor(&self, w: &[u8]) -> Option<Vec<u8>> {
        let mut next = w.to_vec();
        for p in (0..next.len()).rev() {
            if (next[p] as u64) + 1 < self.radix(p) {
                next[p] += 1;
                return Some(next);
            }
            next[p] = 0;
        }
        None
    }

    fn agree_of(&self, a: usize, b: usize) -> u64 {
        if a > b {
            self.agree[a][b]
        } else {
            self.agree[b][a]
        }
    }

    /// Whether `w` can join without creating distinct `a, b, c` with
    /// `I(a,b) ⊆ I(a,c)`, given that the current words have none.
    fn accepts(&self, w: &[u8]) -> bool {
        match self.t {
            1 => return true,
            2 => {}
            t => {
                let code = Code::from_trusted(w.len(), self.q as u16, self.words.clone());
                return extends_twfp_direct(&code, w, t);
            }
        }
        let m = self.words.len();
        let aw: Vec<u64> = self.words.iter().map(|x| agreement(x, w)).collect();
        for a in 0..m {
            for b in 0..m {
                if a == b {
                    continue;
                }
                let ab = self.agree_of(a, b);
                // w as the pivot, as the inner word, as the outer word
                if aw[a] & !aw[b] == 0 || aw[a] & !ab == 0 || ab & !aw[a] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn push(&mut self, w: Vec<u8>) {
        let row = self.words.iter().map(|x| agreement(x, &w)).chain([0]).collect();
        for (l, &s) in self.limits.iter_mut().zip(&w) {
            *l = (*l).max(s);
        }
        self.agree.push(row);
        self.words.push(w);
    }

    fn pop(&mut self, saved: Vec<u8>) {
        self.words.pop();
        self.agree.pop();
        self.limits = saved;
    }

    fn dfs(&mut self) {
        let mut cand = self.successor(self.words.last().expect("nonempty"));
        while let Some(w) = cand {
            if self.best.len() >= self.ceiling
                || (self.words.len() as u64).saturating_add(self.remaining_from(&w)) <= self.best.len() as u64
            {
                return;
            }
            if self.nodes >= self.budget {
                self.exhausted = true;
                return;
            }
            self.nodes += 1;
            if self.accepts(&w) {
                let saved = self.limits.clone();
                self.push(w.clone());
                if self.words.len() > self.best.len() {
                    self.best = self.words.clone();
                }
                self.dfs();
                self.pop(saved);
                if self.exhausted {
                    return;
                }
            }
            cand = self.successor(&w);
        }
    }
}

/// Runs every branch in order on the calling thread.
pub fn search_max_code(params: SearchParams) -> Result<SearchResult> {
    let plan = SearchPlan::new(params)?;
    let results = (0..plan.branch_count()).map(|b| plan.run_branch(b)).collect();
    Ok(plan.merge(results))
}
