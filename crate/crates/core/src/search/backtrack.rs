//! Exhaustive search for colorings of `K_n` with no monochromatic κ-connected
//! `m`-set.
//!
//! Edges are assigned in colex order (by larger endpoint, then smaller), so
//! after coloring `{u, v}` every fully colored `m`-set containing it has the
//! form `T ∪ {u, v}` with `T ⊆ {0..u-1}`, and `{u, v}` is the last pair of
//! that set to be colored. Only those sets are tested, in every color. Color
//! symmetry is broken by first use: color `j` may appear only after colors
//! `0..j-1` have.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::coloring::{pair_count, pair_index, EdgeColoring};
use crate::error::{Error, Result};
use crate::search::arrow::{arrow_check, ArrowMode};
use crate::search::forbidden::{minimal_connected_graphs, ForbiddenList};

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchParams {
    pub n: usize,
    pub m: usize,
    pub kappa: usize,
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub workers: usize,
    /// Maximum number of color assignments before giving up.
    pub budget: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            workers: 1,
            budget: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchResult {
    /// A certified coloring with no monochromatic κ-connected `m`-set.
    Avoiding { coloring: EdgeColoring },
    /// Every coloring contains one: `n →_{κ-c} (m)²_k` holds.
    Exhausted,
    /// The node budget ran out first.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SearchStats {
    /// Color assignments attempted.
    pub nodes: u64,
    /// Assignments rejected because they completed a forbidden subgraph.
    pub forbidden_prunes: u64,
    /// Colors skipped by first-use ordering.
    pub symmetry_prunes: u64,
    pub wall_time_ms: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.forbidden_prunes += other.forbidden_prunes;
        self.symmetry_prunes += other.symmetry_prunes;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub params: SearchParams,
    pub result: SearchResult,
    pub stats: SearchStats,
    pub workers: usize,
}

impl SearchOutcome {
    pub fn is_exhausted(&self) -> bool {
        matches!(self.result, SearchResult::Exhausted)
    }

    pub fn avoiding(&self) -> Option<&EdgeColoring> {
        match &self.result {
            SearchResult::Avoiding { coloring } => Some(coloring),
            _ => None,
        }
    }
}

struct Problem {
    n: usize,
    m: usize,
    k: usize,
    /// Pairs in assignment order.
    order: Vec<(usize, usize)>,
    list: Option<Arc<ForbiddenList>>,
    /// Bit of local pair `(i, j)` inside an `m`-set, indexed `i * m + j`.
    local_bit: Vec<u32>,
}

impl Problem {
    fn new(p: SearchParams) -> Result<Self> {
        let SearchParams { n, m, kappa, k } = p;
        if m < 1 || kappa < 1 || k < 1 {
            return Err(Error::InvalidParameter(format!(
                "need m >= 1, kappa >= 1, k >= 1 (got m = {m}, kappa = {kappa}, k = {k})"
            )));
        }
        if k >= usize::from(UNSET) {
            return Err(Error::InvalidParameter(format!("at most {} colors", UNSET - 1)));
        }
        let list = if 2 <= m && m <= n {
            Some(minimal_connected_graphs(m, kappa)?)
        } else {
            None
        };
        let order = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let mut local_bit = vec![0; m * m];
        if list.is_some() {
            for i in 0..m {
                for j in i + 1..m {
                    local_bit[i * m + j] = 1 << pair_index(m, i, j);
                }
            }
        }
        Ok(Problem {
            n,
            m,
            k,
            order,
            list,
            local_bit,
        })
    }
}

enum Flow {
    Continue,
    Found,
    Halt,
}

struct Shared {
    nodes: AtomicU64,
    budget: u64,
    out_of_budget: AtomicBool,
    stop: AtomicBool,
}

struct Worker<'a> {
    p: &'a Problem,
    shared: &'a Shared,
    /// Colors in lexicographic pair layout.
    colors: Vec<u8>,
    stats: SearchStats,
    scratch: Vec<usize>,
    class_masks: Vec<u32>,
}

impl<'a> Worker<'a> {
    fn new(p: &'a Problem, shared: &'a Shared) -> Self {
        Worker {
            p,
            shared,
            colors: vec![UNSET; pair_count(p.n)],
            stats: SearchStats::default(),
            scratch: Vec::with_capacity(p.m),
            class_masks: vec![0; p.k],
        }
    }

    fn color(&self, u: usize, v: usize) -> u8 {
        self.colors[pair_index(self.p.n, u, v)]
    }

    /// Whether coloring `{u, v}` completes an `m`-set containing a
    /// monochromatic member of the forbidden list.
    fn completes_forbidden(&mut self, u: usize, v: usize) -> bool {
        let Some(list) = &self.p.list else {
            return false;
        };
        let m = self.p.m;
        for rest in (0..u).combinations(m - 2) {
            self.scratch.clear();
            self.scratch.extend_from_slice(&rest);
            self.scratch.push(u);
            self.scratch.push(v);
            self.class_masks.fill(0);
            for i in 0..m {
                for j in i + 1..m {
                    let c = self.color(self.scratch[i], self.scratch[j]);
                    self.class_masks[usize::from(c)] |= self.p.local_bit[i * m + j];
                }
            }
            if self.class_masks.iter().any(|&mask| list.contains_spanning(mask)) {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, depth: usize, used: usize, cutoff: usize, prefixes: &mut Vec<Vec<u8>>) -> Flow {
        if depth == cutoff {
            if cutoff == self.p.order.len() {
                return Flow::Found;
            }
            prefixes.push(self.colors.clone());
            return Flow::Continue;
        }
        if self.shared.stop.load(Ordering::Relaxed) {
            return Flow::Halt;
        }
        let (u, v) = self.p.order[depth];
        let slot = pair_index(self.p.n, u, v);
        let allowed = (used + 1).min(self.p.k);
        self.stats.symmetry_prunes += (self.p.k - allowed) as u64;
        for color in 0..allowed {
            self.stats.nodes += 1;
            if self.shared.nodes.fetch_add(1, Ordering::Relaxed) >= self.shared.budget {
                self.shared.out_of_budget.store(true, Ordering::Relaxed);
                self.shared.stop.store(true, Ordering::Relaxed);
                return Flow::Halt;
            }
            self.colors[slot] = color as u8;
            if self.completes_forbidden(u, v) {
                self.stats.forbidden_prunes += 1;
                continue;
            }
            match self.dfs(depth + 1, used.max(color + 1), cutoff, prefixes) {
                Flow::Continue => {}
                other => return other,
            }
        }
        self.colors[slot] = UNSET;
        Flow::Continue
    }
}

fn colors_used(colors: &[u8]) -> usize {
    colors
        .iter()
        .filter(|&&c| c != UNSET)
        .map(|&c| usize::from(c) + 1)
        .max()
        .unwrap_or(0)
}

/// Splits the search tree at a shallow depth and explores the subtrees on
/// `workers` threads, stopping at the first avoiding coloring.
fn run_parallel(p: &Problem, shared: &Shared, workers: usize, stats: &mut SearchStats) -> Option<Vec<u8>> {
    let target = workers * 8;
    let mut depth = 0;
    let mut width = 1usize;
    while depth < p.order.len() && width < target {
        width = width.saturating_mul(p.k);
        depth += 1;
    }
    let mut prefixes = Vec::new();
    let mut seed = Worker::new(p, shared);
    match seed.dfs(0, 0, depth, &mut prefixes) {
        Flow::Found => return Some(seed.colors),
        Flow::Halt => {
            stats.absorb(&seed.stats);
            return None;
        }
        Flow::Continue => {}
    }
    stats.absorb(&seed.stats);

    let next = AtomicUsize::new(0);
    let found: Mutex<Option<Vec<u8>>> = Mutex::new(None);
    let merged: Mutex<SearchStats> = Mutex::new(SearchStats::default());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let mut w = Worker::new(p, shared);
                let mut sink = Vec::new();
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(prefix) = prefixes.get(i) else { break };
                    w.colors.clone_from(prefix);
                    match w.dfs(depth, colors_used(prefix), p.order.len(), &mut sink) {
                        Flow::Found => {
                            shared.stop.store(true, Ordering::Relaxed);
                            found.lock().expect("lock").get_or_insert_with(|| w.colors.clone());
                            break;
                        }
                        Flow::Halt => break,
                        Flow::Continue => {}
                    }
                }
                merged.lock().expect("lock").absorb(&w.stats);
            });
        }
    });
    stats.absorb(&merged.into_inner().expect("lock"));
    found.into_inner().expect("lock")
}

/// Decides whether some `k`-coloring of `K_n` has no monochromatic κ-connected
/// `m`-set. An avoiding coloring is re-verified with [`arrow_check`] before it
/// is returned.
pub fn exists_avoiding_coloring(params: SearchParams, config: SearchConfig) -> Result<SearchOutcome> {
    let start = Instant::now();
    let p = Problem::new(params)?;
    let shared = Shared {
        nodes: AtomicU64::new(0),
        budget: config.budget.unwrap_or(u64::MAX),
        out_of_budget: AtomicBool::new(false),
        stop: AtomicBool::new(false),
    };
    let workers = config.workers.max(1);
    let mut stats = SearchStats::default();
    let found = if p.m == 1 && p.n >= 1 {
        // every single vertex is a monochromatic complete graph
        None
    } else if workers == 1 {
        let mut w = Worker::new(&p, &shared);
        let flow = w.dfs(0, 0, p.order.len(), &mut Vec::new());
        stats.absorb(&w.stats);
        matches!(flow, Flow::Found).then_some(w.colors)
    } else {
        run_parallel(&p, &shared, workers, &mut stats)
    };

    let result = match found {
        Some(colors) => {
            let coloring = EdgeColoring::from_colors(p.n, p.k, colors.into_iter().map(usize::from).collect())?;
            if p.m <= p.n {
                if let Some(w) = arrow_check(&coloring, params.kappa, p.m, ArrowMode::Exact)? {
                    return Err(Error::Internal(format!(
                        "search returned a coloring with witness {:?} in color {}",
                        w.vertices, w.color
                    )));
                }
            }
            SearchResult::Avoiding { coloring }
        }
        None if shared.out_of_budget.load(Ordering::Relaxed) => SearchResult::Unknown,
        None => SearchResult::Exhausted,
    };
    stats.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(SearchOutcome {
        params,
        result,
        stats,
        workers,
    })
}
