//! Exact computation of `b(G)`, the least number of edges whose addition makes
//! a graph distance-balanced.
//!
//! The search deepens over `k = 0, 1, 2, ...` and, at each `k`, walks the
//! `k`-subsets of the complement edges in lexicographic order. The first
//! level containing a distance-balanced supergraph gives `b`; the
//! lexicographically smallest subset at that level is the reported witness.
//!
//! In [`PruneMode::Regular`] only regular supergraphs are visited. That is
//! sound whenever every distance-balanced supergraph of the input is regular,
//! which holds for inputs of diameter at most 2 and for trees with
//! `Δ >= n - 3`; [`exact_b`] refuses the mode elsewhere. Since an `r`-regular
//! graph on `n` vertices has `n r / 2` edges, each level admits at most one
//! target degree.
//!
//! Levels are split into chunks by the smallest candidate index of the subset
//! and chunks may run on several threads. Results, including the explored
//! count, do not depend on the thread count.

mod bits;
mod regular;

use std::ops::ControlFlow;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{complement_edges, diameter, Graph};
use bits::BalanceChecker;
use regular::{deficits, DeficitDfs};

pub use regular::{enumerate_regular_supergraphs, RegularSupergraphs};

/// Largest vertex count the search supports.
pub const MAX_SEARCH_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("exact search supports at most {MAX_SEARCH_ORDER} vertices, got {0}")]
    TooLarge(usize),
    #[error("regular pruning needs diameter <= 2 or a tree with max degree >= n - 3")]
    PruneModeUnjustified,
    #[error("no {r}-regular supergraph on {n} vertices with max degree {max_degree}")]
    InfeasibleDegree { r: usize, n: usize, max_degree: usize },
    #[error("search budget exhausted; b >= {lower_bound} ({explored} candidates explored)")]
    BudgetExceeded {
        /// Levels `0..lower_bound` were fully searched without success.
        lower_bound: usize,
        explored: u64,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PruneMode {
    /// Test every subset.
    #[default]
    Naive,
    /// Only subsets that make the graph regular.
    Regular,
}

impl FromStr for PruneMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(PruneMode::Naive),
            "regular" => Ok(PruneMode::Regular),
            _ => Err(format!("unknown prune mode {s:?} (expected naive or regular)")),
        }
    }
}

/// Live counters, readable from another thread while a search runs.
#[derive(Debug, Default)]
pub struct SearchProgress {
    explored: AtomicU64,
    current_k: AtomicUsize,
}

impl SearchProgress {
    pub fn explored(&self) -> u64 {
        self.explored.load(Ordering::Relaxed)
    }

    pub fn current_k(&self) -> usize {
        self.current_k.load(Ordering::Relaxed)
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub prune_mode: PruneMode,
    /// Give up after this many added edges.
    pub max_k: Option<usize>,
    /// Report every minimal witness instead of the first.
    pub all_witnesses: bool,
    pub time_budget: Option<Duration>,
    /// Worker threads; 1 runs on the calling thread.
    pub threads: usize,
    pub progress: Option<Arc<SearchProgress>>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            prune_mode: PruneMode::Naive,
            max_k: None,
            all_witnesses: false,
            time_budget: None,
            threads: 1,
            progress: None,
        }
    }
}

impl SearchConfig {
    pub fn naive() -> Self {
        Self::default()
    }

    pub fn regular() -> Self {
        Self { prune_mode: PruneMode::Regular, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub b: usize,
    /// Added edge sets of size `b`, lexicographically ordered.
    pub witnesses: Vec<Vec<(usize, usize)>>,
    /// Candidate supergraphs tested for distance balance.
    pub explored: u64,
    pub mode_used: PruneMode,
}

impl SearchResult {
    /// The input with the first witness added.
    pub fn closure_of(&self, g: &Graph) -> Graph {
        let mut c = g.clone();
        for &(u, v) in &self.witnesses[0] {
            c.add_edge(u, v).expect("witness edges are valid");
        }
        c
    }
}

/// Whether regular pruning is sound for `g`: diameter at most 2, or a tree
/// whose maximum degree is at least `n - 3`.
pub fn regular_pruning_justified(g: &Graph) -> Result<bool, SearchError> {
    if diameter(g).map_err(|_| SearchError::Disconnected)? <= 2 {
        return Ok(true);
    }
    Ok(g.is_tree() && g.max_degree() + 3 >= g.n())
}

/// Computes `b(g)` exactly, with a distance-balanced witness.
pub fn exact_b(g: &Graph, cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    let base = search_rows(g)?;
    if cfg.prune_mode == PruneMode::Regular && !regular_pruning_justified(g)? {
        return Err(SearchError::PruneModeUnjustified);
    }
    let cand = complement_edges(g);
    let deadline = cfg.time_budget.map(|d| Instant::now() + d);
    let collect = if cfg.all_witnesses { Collect::All } else { Collect::First };
    let max_k = cfg.max_k.unwrap_or(cand.len()).min(cand.len());
    let mut explored = 0u64;

    for k in 0..=max_k {
        if let Some(p) = &cfg.progress {
            p.current_k.store(k, Ordering::Relaxed);
        }
        let kind = match cfg.prune_mode {
            PruneMode::Naive => LevelKind::Naive,
            PruneMode::Regular => match target_degree(g, k) {
                Some(r) => LevelKind::Regular(deficits(g, r)?),
                None => continue,
            },
        };
        let level =
            Level { base: &base, cand: &cand, k, kind, collect, deadline, progress: cfg.progress.as_deref() };
        match level.run(cfg.threads) {
            Ok(out) => {
                explored += out.explored;
                if !out.witnesses.is_empty() {
                    let witnesses =
                        out.witnesses.into_iter().map(|w| w.into_iter().map(|j| cand[j]).collect()).collect();
                    return Ok(SearchResult { b: k, witnesses, explored, mode_used: cfg.prune_mode });
                }
            }
            Err(partial) => {
                return Err(SearchError::BudgetExceeded { lower_bound: k, explored: explored + partial })
            }
        }
    }
    Err(SearchError::BudgetExceeded { lower_bound: max_k + 1, explored })
}

/// Number of `k`-edge additions that make `g` distance-balanced.
pub fn db_filter_count(g: &Graph, k: usize) -> Result<u64, SearchError> {
    let base = search_rows(g)?;
    let cand = complement_edges(g);
    if k > cand.len() {
        return Ok(0);
    }
    let level = Level {
        base: &base,
        cand: &cand,
        k,
        kind: LevelKind::Naive,
        collect: Collect::Count,
        deadline: None,
        progress: None,
    };
    Ok(level.run(1).expect("no deadline").count)
}

fn search_rows(g: &Graph) -> Result<Vec<u64>, SearchError> {
    if g.n() > MAX_SEARCH_ORDER {
        return Err(SearchError::TooLarge(g.n()));
    }
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    Ok(g.to_bit_rows().expect("n <= 64"))
}

/// The only degree an `r`-regular supergraph with `k` added edges can have.
fn target_degree(g: &Graph, k: usize) -> Option<usize> {
    let n = g.n();
    let twice_edges = 2 * (g.edge_count() + k);
    if twice_edges % n != 0 {
        return None;
    }
    let r = twice_edges / n;
    (r >= g.max_degree() && r < n).then_some(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Collect {
    First,
    All,
    Count,
}

enum LevelKind {
    Naive,
    Regular(Vec<usize>),
}

struct Level<'a> {
    base: &'a [u64],
    cand: &'a [(usize, usize)],
    k: usize,
    kind: LevelKind,
    collect: Collect,
    deadline: Option<Instant>,
    progress: Option<&'a SearchProgress>,
}

#[derive(Debug, Default)]
struct LevelOutcome {
    witnesses: Vec<Vec<usize>>,
    count: u64,
    explored: u64,
}

/// Result of one chunk. With `Collect::First`, `explored` stops at the first
/// witness.
#[derive(Debug, Default)]
struct ChunkOutcome {
    witnesses: Vec<Vec<usize>>,
    count: u64,
    explored: u64,
}

const STOP_CHECK_INTERVAL: u64 = 256;

impl Level<'_> {
    /// Runs the level; on timeout returns the number of candidates explored.
    fn run(&self, threads: usize) -> Result<LevelOutcome, u64> {
        let mut checker = BalanceChecker::new(self.base.len());
        if self.k == 0 {
            let hit = match &self.kind {
                LevelKind::Naive => true,
                LevelKind::Regular(def) => def.iter().all(|&d| d == 0),
            } && checker.is_distance_balanced(self.base);
            self.report(1);
            return Ok(LevelOutcome {
                witnesses: if hit && self.collect != Collect::Count { vec![vec![]] } else { vec![] },
                count: u64::from(hit),
                explored: 1,
            });
        }

        let chunks = self.cand.len();
        let next = AtomicUsize::new(0);
        let best = AtomicUsize::new(usize::MAX);
        let timed_out = AtomicBool::new(false);
        let partial = AtomicU64::new(0);
        let slots: Vec<Mutex<Option<ChunkOutcome>>> = (0..chunks).map(|_| Mutex::new(None)).collect();

        let worker = || {
            let mut checker = BalanceChecker::new(self.base.len());
            let mut buf = self.base.to_vec();
            loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= chunks || timed_out.load(Ordering::Relaxed) {
                    break;
                }
                if self.collect == Collect::First && best.load(Ordering::SeqCst) < i {
                    break;
                }
                let stop = || {
                    if self.deadline.is_some_and(|d| Instant::now() >= d) {
                        timed_out.store(true, Ordering::Relaxed);
                    }
                    timed_out.load(Ordering::Relaxed)
                        || (self.collect == Collect::First && best.load(Ordering::SeqCst) < i)
                };
                let out = self.run_chunk(i, &mut checker, &mut buf, &stop);
                match out {
                    Ok(out) => {
                        if self.collect == Collect::First && !out.witnesses.is_empty() {
                            best.fetch_min(i, Ordering::SeqCst);
                        }
                        *slots[i].lock().unwrap() = Some(out);
                    }
                    Err(explored) => {
                        partial.fetch_add(explored, Ordering::Relaxed);
                    }
                }
            }
        };

        if threads <= 1 {
            worker();
        } else {
            std::thread::scope(|s| {
                for _ in 0..threads {
                    s.spawn(worker);
                }
            });
        }

        let outcomes: Vec<Option<ChunkOutcome>> =
            slots.into_iter().map(|m| m.into_inner().unwrap()).collect();
        if timed_out.load(Ordering::Relaxed) {
            let done: u64 = outcomes.iter().flatten().map(|o| o.explored).sum();
            return Err(done + partial.load(Ordering::Relaxed));
        }

        let mut level = LevelOutcome::default();
        for out in outcomes {
            // Every chunk before the first hit ran to completion.
            let out = out.expect("chunk skipped before the first witness");
            level.explored += out.explored;
            level.count += out.count;
            let hit = !out.witnesses.is_empty();
            level.witnesses.extend(out.witnesses);
            if hit && self.collect == Collect::First {
                break;
            }
        }
        Ok(level)
    }

    /// Err carries the explored count of an interrupted chunk.
    fn run_chunk(
        &self,
        first: usize,
        checker: &mut BalanceChecker,
        buf: &mut [u64],
        stop: &dyn Fn() -> bool,
    ) -> Result<ChunkOutcome, u64> {
        let mut out = ChunkOutcome::default();
        let mut interrupted = false;
        let mut reported = 0u64;
        let mut visit = |subset: &[usize]| {
            buf.copy_from_slice(self.base);
            for &j in subset {
                let (u, v) = self.cand[j];
                buf[u] |= 1 << v;
                buf[v] |= 1 << u;
            }
            out.explored += 1;
            if checker.is_distance_balanced(buf) {
                out.count += 1;
                match self.collect {
                    Collect::Count => {}
                    Collect::All => out.witnesses.push(subset.to_vec()),
                    Collect::First => {
                        out.witnesses.push(subset.to_vec());
                        return ControlFlow::Break(());
                    }
                }
            }
            if out.explored % STOP_CHECK_INTERVAL == 0 {
                self.report(out.explored - reported);
                reported = out.explored;
                if stop() {
                    interrupted = true;
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        };

        match &self.kind {
            LevelKind::Naive => for_each_combination(self.cand.len(), self.k, first, &mut visit),
            LevelKind::Regular(def) => {
                let mut dfs = DeficitDfs::with_first(def.clone(), self.cand, first);
                while dfs.advance(self.cand) {
                    if visit(dfs.chosen()).is_break() {
                        break;
                    }
                }
            }
        }
        self.report(out.explored - reported);
        if interrupted {
            Err(out.explored)
        } else {
            Ok(out)
        }
    }

    fn report(&self, explored: u64) {
        if let Some(p) = self.progress {
            p.explored.fetch_add(explored, Ordering::Relaxed);
        }
    }
}

/// Visits every `k`-subset of `0..len` whose smallest element is `first`,
/// in lexicographic order.
fn for_each_combination<F>(len: usize, k: usize, first: usize, visit: &mut F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k == 0 || first + k > len {
        return;
    }
    let mut idx: Vec<usize> = (first..first + k).collect();
    loop {
        if visit(&idx).is_break() {
            return;
        }
        // Rightmost position (excluding the fixed first) that can still grow.
        let Some(p) = (1..k).rev().find(|&p| idx[p] < len - (k - p)) else {
            return;
        };
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}
