//! Complete bipartite subgraphs of the Goldbach graph and their mod-6 shape.

use alloc::vec::Vec;

use super::{GoldbachGraph, Variant};
use crate::error::{Error, Result};
use crate::primes::is_prime_64;

/// A complete bipartite subgraph: every `x`-`y` pair is an edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KmnWitness {
    pub x_side: Vec<u64>,
    pub y_side: Vec<u64>,
}

fn odd_prime(x: u64) -> bool {
    x % 2 == 1 && is_prime_64(x)
}

/// Edge test in the infinite Goldbach graph.
fn edge(a: u64, b: u64) -> bool {
    a != b && a % 2 == 0 && b % 2 == 0 && odd_prime((a + b) / 2) && odd_prime(a.abs_diff(b) / 2)
}

fn in_six(v: u64) -> bool {
    v % 6 == 0
}

impl KmnWitness {
    pub fn new(mut x_side: Vec<u64>, mut y_side: Vec<u64>) -> Self {
        x_side.sort_unstable();
        y_side.sort_unstable();
        KmnWitness { x_side, y_side }
    }

    /// Both sides nonempty, sorted, duplicate-free, disjoint, fully joined.
    pub fn is_verified(&self) -> bool {
        let strict = |s: &[u64]| !s.is_empty() && s.windows(2).all(|w| w[0] < w[1]);
        strict(&self.x_side)
            && strict(&self.y_side)
            && self.x_side.iter().all(|x| !self.y_side.contains(x))
            && self.cross_pairs().all(|(x, y)| edge(x, y))
    }

    fn cross_pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.x_side
            .iter()
            .flat_map(move |&x| self.y_side.iter().map(move |&y| (x, y)))
    }
}

/// Up to `limit` copies of `K_{s,t}` in `G_n`.
pub fn find_complete_bipartite(n: u64, s: usize, t: usize, limit: usize) -> Result<Vec<KmnWitness>> {
    let g = GoldbachGraph::new(n, Variant::WithZero)?;
    complete_bipartite_in(&g, s, t, limit)
}

/// Backtracking over X in increasing order, carrying the common
/// neighbourhood; Y ranges over its `t`-subsets.
///
/// When `s > t` the smaller side is grown instead and the sides swapped
/// afterwards; results are sorted by `(x_side, y_side)` either way.
pub fn complete_bipartite_in(g: &GoldbachGraph, s: usize, t: usize, limit: usize) -> Result<Vec<KmnWitness>> {
    if s < 2 || t < 2 {
        return Err(Error::argument("both sides need at least 2 vertices"));
    }
    if s > t {
        let mut out: Vec<KmnWitness> = complete_bipartite_in(g, t, s, limit)?
            .into_iter()
            .map(|w| KmnWitness {
                x_side: w.y_side,
                y_side: w.x_side,
            })
            .collect();
        out.sort_unstable_by(|a, b| (&a.x_side, &a.y_side).cmp(&(&b.x_side, &b.y_side)));
        return Ok(out);
    }
    let mut out = Vec::new();
    if limit > 0 {
        let vertices: Vec<u64> = g.vertices().collect();
        let mut xs = Vec::with_capacity(s);
        grow_x(g, &vertices, s, t, limit, &mut xs, None, &mut out);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn grow_x(
    g: &GoldbachGraph,
    vertices: &[u64],
    s: usize,
    t: usize,
    limit: usize,
    xs: &mut Vec<u64>,
    common: Option<&[u64]>,
    out: &mut Vec<KmnWitness>,
) {
    if xs.len() == s {
        let mut ys = Vec::with_capacity(t);
        choose_y(common.unwrap_or(&[]), t, 0, xs, &mut ys, limit, out);
        return;
    }
    let from = xs.last().map_or(0, |&last| vertices.partition_point(|&v| v <= last));
    for &v in &vertices[from..] {
        if out.len() >= limit {
            return;
        }
        let next: Vec<u64> = match common {
            None => g.neighbors(v).to_vec(),
            Some(c) => intersect(c, g.neighbors(v)),
        };
        if next.len() < t {
            continue;
        }
        xs.push(v);
        grow_x(g, vertices, s, t, limit, xs, Some(&next), out);
        xs.pop();
    }
}

fn choose_y(
    pool: &[u64],
    t: usize,
    from: usize,
    xs: &[u64],
    ys: &mut Vec<u64>,
    limit: usize,
    out: &mut Vec<KmnWitness>,
) {
    if ys.len() == t {
        out.push(KmnWitness {
            x_side: xs.to_vec(),
            y_side: ys.clone(),
        });
        return;
    }
    let need = t - ys.len();
    for i in from..pool.len() {
        if out.len() >= limit || pool.len() - i < need {
            return;
        }
        ys.push(pool[i]);
        choose_y(pool, t, i + 1, xs, ys, limit, out);
        ys.pop();
    }
}

fn intersect(a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Which structural theorem covers a witness of the given shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum KmnTheorem {
    /// Both sides larger than 2.
    BothSidesAboveTwo,
    /// One side of size 2, the other larger than 3.
    PairAgainstMany,
    /// Shape not covered; the pattern is reported but not asserted.
    NotCovered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Mod6Pattern {
    /// X inside 6N0, Y disjoint from it.
    XInSixYOutside,
    /// Y inside 6N0, X disjoint from it.
    YInSixXOutside,
    /// The size-2 side avoids 6N0 and at most one vertex of the other side
    /// lies outside 6N0.
    PairOutsideOthersInSix,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KmnStructureReport {
    pub theorem: KmnTheorem,
    pub pattern: Mod6Pattern,
    pub mod6_pattern_ok: bool,
    /// Edges with both ends outside 6N0 whose ends do not differ by 6.
    pub n6_violations: Vec<(u64, u64)>,
    /// Edges with both ends in 6N0 other than `{0, 6}`.
    pub d6_violations: Vec<(u64, u64)>,
}

pub fn check_kmn_structure(w: &KmnWitness) -> Result<KmnStructureReport> {
    if !w.is_verified() {
        return Err(Error::argument("witness is not a complete bipartite subgraph"));
    }
    let (x, y) = (&w.x_side, &w.y_side);
    let all_in = |s: &[u64]| s.iter().all(|&v| in_six(v));
    let none_in = |s: &[u64]| s.iter().all(|&v| !in_six(v));
    let outside = |s: &[u64]| s.iter().filter(|&&v| !in_six(v)).count();

    let x_in_y_out = all_in(x) && none_in(y);
    let y_in_x_out = all_in(y) && none_in(x);
    let pair_rule = |pair: &[u64], many: &[u64]| none_in(pair) && outside(many) <= 1;

    let (theorem, pair_ok) = if x.len() > 2 && y.len() > 2 {
        (KmnTheorem::BothSidesAboveTwo, false)
    } else if x.len() == 2 && y.len() > 3 {
        (KmnTheorem::PairAgainstMany, pair_rule(x, y))
    } else if y.len() == 2 && x.len() > 3 {
        (KmnTheorem::PairAgainstMany, pair_rule(y, x))
    } else {
        let loose = (x.len() == 2 && pair_rule(x, y)) || (y.len() == 2 && pair_rule(y, x));
        (KmnTheorem::NotCovered, loose)
    };

    let pattern = if x_in_y_out {
        Mod6Pattern::XInSixYOutside
    } else if y_in_x_out {
        Mod6Pattern::YInSixXOutside
    } else if pair_ok {
        Mod6Pattern::PairOutsideOthersInSix
    } else {
        Mod6Pattern::Mixed
    };
    let mod6_pattern_ok = match theorem {
        KmnTheorem::BothSidesAboveTwo => x_in_y_out || y_in_x_out,
        KmnTheorem::PairAgainstMany => {
            let pair_in_six = if x.len() == 2 { x_in_y_out } else { y_in_x_out };
            pair_in_six || pair_ok
        }
        KmnTheorem::NotCovered => true,
    };

    let mut n6_violations = Vec::new();
    let mut d6_violations = Vec::new();
    for (a, b) in w.cross_pairs() {
        let (a, b) = (a.min(b), a.max(b));
        if let Some(bad) = lemma_violation(a, b) {
            match bad {
                Lemma::N6 => n6_violations.push((a, b)),
                Lemma::D6 => d6_violations.push((a, b)),
            }
        }
    }
    Ok(KmnStructureReport {
        theorem,
        pattern,
        mod6_pattern_ok,
        n6_violations,
        d6_violations,
    })
}

enum Lemma {
    N6,
    D6,
}

fn lemma_violation(a: u64, b: u64) -> Option<Lemma> {
    match (in_six(a), in_six(b)) {
        (false, false) if b - a != 6 => Some(Lemma::N6),
        (true, true) if (a, b) != (0, 6) => Some(Lemma::D6),
        _ => None,
    }
}

/// Both lemmas checked over every edge of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LemmaScan {
    pub n: u64,
    pub edges_checked: usize,
    /// Edges with both ends outside 6N0.
    pub n6_edges: usize,
    pub n6_violations: Vec<(u64, u64)>,
    /// Edges with both ends in 6N0 (expected: only `{0, 6}`).
    pub d6_edges: Vec<(u64, u64)>,
}

pub fn mod6_lemma_scan(g: &GoldbachGraph) -> LemmaScan {
    let mut scan = LemmaScan {
        n: g.n(),
        edges_checked: 0,
        n6_edges: 0,
        n6_violations: Vec::new(),
        d6_edges: Vec::new(),
    };
    for (a, b) in g.edges() {
        scan.edges_checked += 1;
        match (in_six(a), in_six(b)) {
            (false, false) => {
                scan.n6_edges += 1;
                if b - a != 6 {
                    scan.n6_violations.push((a, b));
                }
            }
            (true, true) => scan.d6_edges.push((a, b)),
            _ => {}
        }
    }
    scan
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrimeWitness {
    /// `p_i = (x_i + y_1) / 2`.
    pub primes: Vec<u64>,
    /// `r_j = (y_{j+1} - y_1) / 2`.
    pub shifts: Vec<u64>,
    pub primes_ok: bool,
    /// Every `p_i + r_j` is prime.
    pub sums_ok: bool,
}

impl PrimeWitness {
    pub fn all_prime(&self) -> bool {
        self.primes_ok && self.sums_ok
    }
}

pub fn extract_prime_witness(w: &KmnWitness) -> Result<PrimeWitness> {
    if !w.is_verified() {
        return Err(Error::argument("witness is not a complete bipartite subgraph"));
    }
    let y1 = w.y_side[0];
    let primes: Vec<u64> = w.x_side.iter().map(|&x| (x + y1) / 2).collect();
    let shifts: Vec<u64> = w.y_side[1..].iter().map(|&y| (y - y1) / 2).collect();
    let primes_ok = primes.iter().all(|&p| is_prime_64(p));
    let sums_ok = primes
        .iter()
        .all(|&p| shifts.iter().all(|&r| is_prime_64(p + r)));
    Ok(PrimeWitness {
        primes,
        shifts,
        primes_ok,
        sums_ok,
    })
}
