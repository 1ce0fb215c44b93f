//! Exact maximum clique by branch and bound with greedy-coloring bounds.
//!
//! Vertices are renumbered in degeneracy order so that bitset scans visit
//! high-core vertices first; each node colors its candidate set greedily and
//! prunes once `|clique| + colors <= |best|`.

use alloc::vec;
use alloc::vec::Vec;

/// Fixed-capacity bitset over `0..len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

/// Undirected simple graph as adjacency bitsets.
#[derive(Clone, Debug)]
pub struct BitGraph {
    adj: Vec<BitSet>,
}

impl BitGraph {
    pub fn new(order: usize) -> Self {
        BitGraph { adj: vec![BitSet::new(order); order] }
    }

    /// Builds the graph on `0..order` whose edges satisfy `edge(u, v)` for `u < v`.
    pub fn from_fn(order: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = BitGraph::new(order);
        for u in 0..order {
            for v in u + 1..order {
                if edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliqueOutcome {
    /// Proven maximum (sorted vertex ids), or `None` if no clique meets the
    /// hitting constraints.
    Optimal(Option<Vec<usize>>),
    /// The node budget ran out; the best clique seen so far is attached.
    Exhausted(Option<Vec<usize>>),
}

/// Result of a clique search together with its node count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSearch {
    pub outcome: CliqueOutcome,
    pub nodes: u64,
}

struct Solver<'a> {
    graph: &'a BitGraph,
    best: Option<Vec<usize>>,
    nodes: u64,
    limit: u64,
    exhausted: bool,
}

impl Solver<'_> {
    fn best_len(&self) -> usize {
        self.best.as_ref().map_or(0, Vec::len)
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn record(&mut self, clique: &[usize]) {
        if self.best.is_none() || clique.len() > self.best_len() {
            self.best = Some(clique.to_vec());
        }
    }

    /// Greedy sequential coloring of `p`; returns vertices ordered by
    /// nondecreasing color and the matching colors.
    fn color_sort(&self, p: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = p.clone();
        let mut order = Vec::with_capacity(p.count());
        let mut colors = Vec::with_capacity(order.capacity());
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(self.graph.neighbors(v));
                uncolored.remove(v);
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }

    fn expand(&mut self, clique: &mut Vec<usize>, mut p: BitSet) {
        let (order, colors) = self.color_sort(&p);
        for idx in (0..order.len()).rev() {
            if self.exhausted || clique.len() + colors[idx] <= self.best_len() {
                return;
            }
            if !self.tick() {
                return;
            }
            let v = order[idx];
            clique.push(v);
            let mut next = p.clone();
            next.intersect_with(self.graph.neighbors(v));
            if next.is_empty() {
                self.record(clique);
            } else {
                self.expand(clique, next);
            }
            clique.pop();
            p.remove(v);
        }
    }

    fn hitting(&mut self, clique: &mut Vec<usize>, mut cands: BitSet, must: &[BitSet]) {
        let Some((first, rest)) = must.split_first() else {
            if cands.is_empty() {
                self.record(clique);
            } else {
                self.expand(clique, cands);
            }
            return;
        };
        if clique.iter().any(|&v| first.contains(v)) {
            self.hitting(clique, cands, rest);
            return;
        }
        let mut choices = cands.clone();
        choices.intersect_with(first);
        for v in choices.iter() {
            if self.exhausted || !self.tick() {
                return;
            }
            clique.push(v);
            let mut next = cands.clone();
            next.intersect_with(self.graph.neighbors(v));
            self.hitting(clique, next, rest);
            clique.pop();
            cands.remove(v);
        }
    }
}

/// Degeneracy order of the vertices in `allowed`, highest core first.
fn degeneracy_order(g: &BitGraph, allowed: &BitSet) -> Vec<usize> {
    let mut alive = allowed.clone();
    let mut degree: Vec<usize> = (0..g.order())
        .map(|v| {
            let mut n = g.neighbors(v).clone();
            n.intersect_with(allowed);
            n.count()
        })
        .collect();
    let mut removed = Vec::with_capacity(allowed.count());
    while let Some(v) = alive.iter().min_by_key(|&v| (degree[v], v)) {
        alive.remove(v);
        removed.push(v);
        for u in g.neighbors(v).iter() {
            if alive.contains(u) {
                degree[u] -= 1;
            }
        }
    }
    removed.reverse();
    removed
}

/// Maximum clique inside `allowed` that contains at least one vertex of each
/// set in `must_hit`, exploring at most `node_limit` search nodes.
pub fn max_clique(g: &BitGraph, allowed: &BitSet, must_hit: &[BitSet], node_limit: u64) -> CliqueSearch {
    let order = degeneracy_order(g, allowed);
    let k = order.len();
    // renumber: new id i is old vertex order[i]
    let mut slot = vec![usize::MAX; g.order()];
    for (i, &v) in order.iter().enumerate() {
        slot[v] = i;
    }
    let mut h = BitGraph::new(k);
    for (i, &v) in order.iter().enumerate() {
        for u in g.neighbors(v).iter() {
            if slot[u] != usize::MAX && slot[u] > i {
                h.add_edge(i, slot[u]);
            }
        }
    }
    let must: Vec<BitSet> = must_hit
        .iter()
        .map(|s| {
            let mut t = BitSet::new(k);
            for v in s.iter().filter(|&v| v < g.order() && slot[v] != usize::MAX) {
                t.insert(slot[v]);
            }
            t
        })
        .collect();
    let mut solver = Solver { graph: &h, best: None, nodes: 0, limit: node_limit, exhausted: false };
    let mut clique = Vec::new();
    solver.hitting(&mut clique, BitSet::full(k), &must);
    let best = solver.best.map(|c| {
        let mut c: Vec<usize> = c.into_iter().map(|i| order[i]).collect();
        c.sort_unstable();
        c
    });
    let outcome = if solver.exhausted { CliqueOutcome::Exhausted(best) } else { CliqueOutcome::Optimal(best) };
    CliqueSearch { outcome, nodes: solver.nodes }
}
