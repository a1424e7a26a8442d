//! Hamiltonian cycles and paths in the starred Goldbach graph on
//! `2, 4, ..., 2n` with odd set `P ∪ {1}`.

use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use super::{GoldbachGraph, Variant};
use crate::error::{Error, Result};
use crate::primes::is_prime_64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum PathKind {
    Cycle,
    Path,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SearchStatus {
    Found,
    /// The whole search space was explored without success.
    Exhausted,
    /// The node budget ran out first; nothing is claimed either way.
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchStats {
    pub nodes_expanded: u64,
    /// Filled in by callers that have a clock.
    pub elapsed: Option<Duration>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HamiltonianResult {
    pub kind: PathKind,
    pub n: u64,
    pub sequence: Vec<u64>,
    pub valid: bool,
    pub status: SearchStatus,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BadStep {
    OutOfRange { position: usize, vertex: u64 },
    DuplicateVertex { position: usize, vertex: u64 },
    WrongLength { expected: usize, found: usize },
    NotAdjacent { position: usize, from: u64, to: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SequenceCheck {
    pub valid: bool,
    pub first_bad_step: Option<BadStep>,
}

fn member(x: u64) -> bool {
    x == 1 || (x % 2 == 1 && is_prime_64(x))
}

/// Starred adjacency, straight from the definition.
fn conjugate(a: u64, b: u64) -> bool {
    a != b && member((a + b) / 2) && member(a.abs_diff(b) / 2)
}

fn validate(n: u64, seq: &[u64], wrap: bool) -> SequenceCheck {
    let bad = |step| SequenceCheck {
        valid: false,
        first_bad_step: Some(step),
    };
    let mut seen = vec![false; n as usize + 1];
    for (position, &vertex) in seq.iter().enumerate() {
        if vertex % 2 != 0 || vertex < 2 || vertex > 2 * n {
            return bad(BadStep::OutOfRange { position, vertex });
        }
        let slot = &mut seen[(vertex / 2) as usize];
        if *slot {
            return bad(BadStep::DuplicateVertex { position, vertex });
        }
        *slot = true;
    }
    if seq.len() != n as usize {
        return bad(BadStep::WrongLength {
            expected: n as usize,
            found: seq.len(),
        });
    }
    let steps = if wrap { seq.len() } else { seq.len() - 1 };
    for position in 0..steps {
        let (from, to) = (seq[position], seq[(position + 1) % seq.len()]);
        if !conjugate(from, to) {
            return bad(BadStep::NotAdjacent { position, from, to });
        }
    }
    SequenceCheck {
        valid: true,
        first_bad_step: None,
    }
}

/// Checks a Hamiltonian cycle (closing vertex not repeated).
pub fn validate_cycle(n: u64, seq: &[u64]) -> SequenceCheck {
    validate(n, seq, true)
}

pub fn validate_path(n: u64, seq: &[u64]) -> SequenceCheck {
    validate(n, seq, false)
}

/// Deletes `vertex` from a cycle and reads the rest as a path starting
/// right after it.
pub fn path_by_deleting(cycle: &[u64], vertex: u64) -> Option<Vec<u64>> {
    let at = cycle.iter().position(|&v| v == vertex)?;
    Some(
        cycle[at + 1..]
            .iter()
            .chain(&cycle[..at])
            .copied()
            .collect(),
    )
}

pub fn hamiltonian_cycle(n: u64) -> Result<HamiltonianResult> {
    hamiltonian_cycle_with(n, &SearchConfig::default())
}

pub fn hamiltonian_cycle_with(n: u64, config: &SearchConfig) -> Result<HamiltonianResult> {
    if n % 2 != 0 || n < 4 {
        return Err(Error::argument("Hamiltonian cycles are searched for even n >= 4"));
    }
    let mut engine = Engine::new(n, true, config.node_budget)?;
    let starts = engine.lowest_degree_order();
    // The search time is heavy-tailed in the start vertex, so runs are
    // restarted from each vertex in turn under a growing node allowance.
    // A cycle passes through every vertex, so one exhausted run settles it.
    let mut allowance = RESTART_ALLOWANCE;
    let (status, order) = 'restarts: loop {
        for &start in &starts {
            engine.run_limit = Some(allowance);
            match engine.run(start) {
                (SearchStatus::BudgetExceeded, _) if !engine.out_of_budget() => continue,
                found_or_settled => break 'restarts found_or_settled,
            }
        }
        allowance = allowance.saturating_mul(4);
    };
    let sequence = match order {
        Some(order) => canonical_cycle(engine.to_vertices(&order)),
        None => Vec::new(),
    };
    Ok(finish(PathKind::Cycle, n, sequence, status, engine.nodes))
}

const RESTART_ALLOWANCE: u64 = 2_000;

pub fn hamiltonian_path(n: u64) -> Result<HamiltonianResult> {
    hamiltonian_path_with(n, &SearchConfig::default())
}

/// Even `n`: a cycle read as a path. Odd `n`: a cycle for `n + 1` with
/// `2(n+1)` deleted. Either way a direct path search is the fallback.
pub fn hamiltonian_path_with(n: u64, config: &SearchConfig) -> Result<HamiltonianResult> {
    if n < 4 {
        return Err(Error::argument("Hamiltonian paths are searched for n >= 4"));
    }
    let cycle_n = if n % 2 == 0 { n } else { n + 1 };
    let cycle = hamiltonian_cycle_with(cycle_n, config)?;
    let mut nodes = cycle.stats.nodes_expanded;
    if cycle.status == SearchStatus::Found {
        let sequence = if n % 2 == 0 {
            cycle.sequence
        } else {
            path_by_deleting(&cycle.sequence, 2 * cycle_n).expect("cycle covers every vertex")
        };
        return Ok(finish(PathKind::Path, n, sequence, SearchStatus::Found, nodes));
    }
    let budget = config.node_budget.map(|b| b.saturating_sub(nodes));
    let mut engine = Engine::new(n, false, budget)?;
    let mut status = SearchStatus::Exhausted;
    let mut sequence = Vec::new();
    for start in engine.lowest_degree_order() {
        let (s, order) = engine.run(start);
        status = s;
        if let Some(order) = order {
            sequence = engine.to_vertices(&order);
        }
        if status != SearchStatus::Exhausted {
            break;
        }
    }
    nodes += engine.nodes;
    Ok(finish(PathKind::Path, n, sequence, status, nodes))
}

fn finish(kind: PathKind, n: u64, sequence: Vec<u64>, status: SearchStatus, nodes: u64) -> HamiltonianResult {
    let valid = status == SearchStatus::Found
        && match kind {
            PathKind::Cycle => validate_cycle(n, &sequence).valid,
            PathKind::Path => validate_path(n, &sequence).valid,
        };
    HamiltonianResult {
        kind,
        n,
        sequence,
        valid,
        status,
        stats: SearchStats {
            nodes_expanded: nodes,
            elapsed: None,
        },
    }
}

/// Rotates to start at 4 and walks towards its smaller cycle neighbour.
fn canonical_cycle(mut seq: Vec<u64>) -> Vec<u64> {
    if let Some(at) = seq.iter().position(|&v| v == 4) {
        seq.rotate_left(at);
        let len = seq.len();
        if len > 2 && seq[len - 1] < seq[1] {
            seq[1..].reverse();
        }
    }
    seq
}

enum Outcome {
    Found,
    Failed,
    Budget,
}

/// Backtracking over vertex indices `0..n` (vertex `2(i+1)`).
struct Engine {
    n: usize,
    closed: bool,
    adj: Vec<Vec<usize>>,
    bits: Vec<u64>,
    words: usize,
    visited: Vec<bool>,
    /// Unvisited neighbours per vertex.
    free: Vec<u32>,
    path: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
    /// Per-run node allowance on top of the overall budget.
    run_limit: Option<u64>,
    run_nodes: u64,
    queue: Vec<usize>,
    mark: Vec<bool>,
}

impl Engine {
    fn new(n: u64, closed: bool, budget: Option<u64>) -> Result<Self> {
        let g = GoldbachGraph::new(n, Variant::Starred)?;
        let size = n as usize;
        let slot = |v: u64| (v / 2 - 1) as usize;
        let adj: Vec<Vec<usize>> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().map(|&b| slot(b)).collect())
            .collect();
        let words = size.div_ceil(64);
        let mut bits = vec![0u64; words * size];
        for (u, list) in adj.iter().enumerate() {
            for &w in list {
                bits[u * words + w / 64] |= 1 << (w % 64);
            }
        }
        let free = adj.iter().map(|l| l.len() as u32).collect();
        Ok(Engine {
            n: size,
            closed,
            adj,
            bits,
            words,
            visited: vec![false; size],
            free,
            path: Vec::with_capacity(size),
            nodes: 0,
            budget,
            run_limit: None,
            run_nodes: 0,
            queue: Vec::with_capacity(size),
            mark: vec![false; size],
        })
    }

    fn lowest_degree_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&u| (self.adj[u].len(), u));
        order
    }

    fn to_vertices(&self, order: &[usize]) -> Vec<u64> {
        order.iter().map(|&i| 2 * (i as u64 + 1)).collect()
    }

    #[inline]
    fn edge(&self, u: usize, w: usize) -> bool {
        self.bits[u * self.words + w / 64] >> (w % 64) & 1 == 1
    }

    fn visit(&mut self, u: usize) {
        self.visited[u] = true;
        self.path.push(u);
        for i in 0..self.adj[u].len() {
            let w = self.adj[u][i];
            self.free[w] -= 1;
        }
    }

    fn unvisit(&mut self) {
        let u = self.path.pop().expect("nonempty path");
        self.visited[u] = false;
        for i in 0..self.adj[u].len() {
            let w = self.adj[u][i];
            self.free[w] += 1;
        }
    }

    fn out_of_budget(&self) -> bool {
        self.budget.is_some_and(|b| self.nodes > b)
    }

    fn run(&mut self, start: usize) -> (SearchStatus, Option<Vec<usize>>) {
        self.run_nodes = 0;
        self.visit(start);
        let outcome = self.extend();
        let result = match outcome {
            Outcome::Found => (SearchStatus::Found, Some(self.path.clone())),
            Outcome::Failed => (SearchStatus::Exhausted, None),
            Outcome::Budget => (SearchStatus::BudgetExceeded, None),
        };
        while !self.path.is_empty() {
            self.unvisit();
        }
        result
    }

    /// Connections still usable by unvisited `u`.
    fn available(&self, u: usize, end: usize, start: usize) -> u32 {
        let mut a = self.free[u] + self.edge(u, end) as u32;
        if self.closed && start != end {
            a += self.edge(u, start) as u32;
        }
        a
    }

    /// Prunes the current partial path. Returns `Some(w)` when the next
    /// vertex is forced, `Some(usize::MAX)` when it is free, `None` when
    /// the branch is dead.
    fn feasible(&mut self) -> Option<usize> {
        let start = self.path[0];
        let end = *self.path.last().unwrap();
        let remaining = self.n - self.path.len();
        let mut forced = usize::MAX;
        let mut start_claims = 0;
        let mut dead_ends = 0;
        for u in 0..self.n {
            if self.visited[u] {
                continue;
            }
            let a = self.available(u, end, start);
            if self.closed {
                if a < 2 {
                    return None;
                }
                if a == 2 && self.path.len() >= 2 {
                    let to_end = self.edge(u, end);
                    let to_start = self.edge(u, start);
                    if to_end && to_start && remaining > 1 {
                        return None;
                    }
                    if to_end {
                        if forced != usize::MAX {
                            return None;
                        }
                        forced = u;
                    }
                    if to_start {
                        start_claims += 1;
                        if start_claims > 1 {
                            return None;
                        }
                    }
                }
            } else {
                if a == 0 {
                    return None;
                }
                if a == 1 {
                    dead_ends += 1;
                    if dead_ends > 1 {
                        return None;
                    }
                }
            }
        }
        // every unvisited vertex must be reachable from the end
        self.queue.clear();
        self.queue.push(end);
        self.mark[end] = true;
        let mut reached = 0;
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            for &w in &self.adj[u] {
                if !self.visited[w] && !self.mark[w] {
                    self.mark[w] = true;
                    reached += 1;
                    self.queue.push(w);
                }
            }
        }
        for &u in &self.queue {
            self.mark[u] = false;
        }
        (reached == remaining).then_some(forced)
    }

    fn extend(&mut self) -> Outcome {
        self.nodes += 1;
        self.run_nodes += 1;
        if self.out_of_budget() || self.run_limit.is_some_and(|l| self.run_nodes > l) {
            return Outcome::Budget;
        }
        let end = *self.path.last().unwrap();
        if self.path.len() == self.n {
            let closes = !self.closed || self.edge(end, self.path[0]);
            return if closes { Outcome::Found } else { Outcome::Failed };
        }
        let forced = match self.feasible() {
            None => return Outcome::Failed,
            Some(f) => f,
        };
        let mut candidates: Vec<usize> = if forced != usize::MAX {
            vec![forced]
        } else {
            self.adj[end].iter().copied().filter(|&w| !self.visited[w]).collect()
        };
        candidates.sort_by_key(|&w| (self.free[w], w));
        for w in candidates {
            self.visit(w);
            match self.extend() {
                Outcome::Found => return Outcome::Found,
                Outcome::Budget => return Outcome::Budget,
                Outcome::Failed => self.unvisit(),
            }
        }
        Outcome::Failed
    }
}
