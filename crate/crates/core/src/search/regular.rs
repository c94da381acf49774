//! Backtracking over edge additions that bring every vertex up to a target
//! degree `r`.

use crate::graph::{complement_edges, Graph};

use super::SearchError;

/// Depth-first enumeration of subsets of a candidate edge list that exactly
/// cover per-vertex degree deficits. Subsets come out in lexicographic order
/// of candidate indices.
#[derive(Debug, Clone)]
pub(crate) struct DeficitDfs {
    deficit: Vec<usize>,
    remaining: usize,
    chosen: Vec<usize>,
    cursor: usize,
    /// `chosen` is never popped below this length.
    floor: usize,
    emitted: bool,
    done: bool,
    // scratch for the feasibility prune
    available: Vec<usize>,
}

impl DeficitDfs {
    pub(crate) fn new(deficit: Vec<usize>) -> Self {
        let remaining = deficit.iter().sum();
        let n = deficit.len();
        Self {
            deficit,
            remaining,
            chosen: Vec::new(),
            cursor: 0,
            floor: 0,
            emitted: false,
            done: false,
            available: vec![0; n],
        }
    }

    /// Restricts the enumeration to subsets whose smallest index is `first`.
    pub(crate) fn with_first(deficit: Vec<usize>, cand: &[(usize, usize)], first: usize) -> Self {
        let mut dfs = Self::new(deficit);
        let (u, v) = cand[first];
        if dfs.deficit[u] == 0 || dfs.deficit[v] == 0 {
            dfs.done = true;
        } else {
            dfs.push(cand, first);
            dfs.floor = 1;
        }
        dfs
    }

    pub(crate) fn chosen(&self) -> &[usize] {
        &self.chosen
    }

    fn push(&mut self, cand: &[(usize, usize)], j: usize) {
        let (u, v) = cand[j];
        self.deficit[u] -= 1;
        self.deficit[v] -= 1;
        self.remaining -= 2;
        self.chosen.push(j);
        self.cursor = j + 1;
    }

    fn backtrack(&mut self, cand: &[(usize, usize)]) -> bool {
        if self.chosen.len() <= self.floor {
            return false;
        }
        let j = self.chosen.pop().unwrap();
        let (u, v) = cand[j];
        self.deficit[u] += 1;
        self.deficit[v] += 1;
        self.remaining += 2;
        self.cursor = j + 1;
        true
    }

    /// Every vertex still short of its target must have enough usable
    /// candidates left.
    fn feasible(&mut self, cand: &[(usize, usize)]) -> bool {
        if self.remaining % 2 == 1 {
            return false;
        }
        self.available.iter_mut().for_each(|a| *a = 0);
        for &(u, v) in &cand[self.cursor..] {
            if self.deficit[u] > 0 && self.deficit[v] > 0 {
                self.available[u] += 1;
                self.available[v] += 1;
            }
        }
        self.deficit.iter().zip(&self.available).all(|(d, a)| d <= a)
    }

    fn extend(&mut self, cand: &[(usize, usize)]) -> bool {
        if !self.feasible(cand) {
            return false;
        }
        let next = (self.cursor..cand.len()).find(|&j| {
            let (u, v) = cand[j];
            self.deficit[u] > 0 && self.deficit[v] > 0
        });
        match next {
            Some(j) => {
                self.push(cand, j);
                true
            }
            None => false,
        }
    }

    /// Moves to the next complete subset; `false` once exhausted.
    pub(crate) fn advance(&mut self, cand: &[(usize, usize)]) -> bool {
        if self.done {
            return false;
        }
        if self.emitted {
            self.emitted = false;
            if !self.backtrack(cand) {
                self.done = true;
                return false;
            }
        }
        loop {
            if self.remaining == 0 {
                self.emitted = true;
                return true;
            }
            if !self.extend(cand) && !self.backtrack(cand) {
                self.done = true;
                return false;
            }
        }
    }
}

/// Checks `r` against `g` and returns the per-vertex degree deficits.
pub(crate) fn deficits(g: &Graph, r: usize) -> Result<Vec<usize>, SearchError> {
    let n = g.n();
    if r < g.max_degree() || r > n - 1 || (n * r) % 2 == 1 {
        return Err(SearchError::InfeasibleDegree { r, n, max_degree: g.max_degree() });
    }
    Ok((0..n).map(|v| r - g.degree(v)).collect())
}

/// Lazily yields every `r`-regular supergraph of a graph on the same vertex
/// labels, ordered lexicographically by the added edge set.
pub struct RegularSupergraphs {
    base: Graph,
    cand: Vec<(usize, usize)>,
    dfs: DeficitDfs,
}

impl Iterator for RegularSupergraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if !self.dfs.advance(&self.cand) {
            return None;
        }
        let mut g = self.base.clone();
        for &j in self.dfs.chosen() {
            let (u, v) = self.cand[j];
            g.add_edge(u, v).expect("candidate edges are in range");
        }
        Some(g)
    }
}

/// All `r`-regular graphs containing `g` as a spanning subgraph.
pub fn enumerate_regular_supergraphs(g: &Graph, r: usize) -> Result<RegularSupergraphs, SearchError> {
    let deficit = deficits(g, r)?;
    Ok(RegularSupergraphs { base: g.clone(), cand: complement_edges(g), dfs: DeficitDfs::new(deficit) })
}
