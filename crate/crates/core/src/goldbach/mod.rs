//! The Goldbach graph: the odd-even graph whose odd set is the odd primes.
//!
//! `G_n` is its truncation to the even vertices `0, 2, ..., 2n`. The starred
//! variant drops vertex 0 and adds 1 to the odd set; that is the graph the
//! Hamiltonian search works on. Every scan that touches a conjecture reports
//! the range it covered.

mod hamiltonian;
mod independent;
mod kmn;

pub use hamiltonian::{
    hamiltonian_cycle, hamiltonian_cycle_with, hamiltonian_path, hamiltonian_path_with,
    path_by_deleting, validate_cycle, validate_path, BadStep, HamiltonianResult, PathKind,
    SearchConfig, SearchStats, SearchStatus, SequenceCheck,
};
pub use independent::{
    consecutive_independent_set, factorial_block, is_independent_u64, CertificateMethod,
    IndependentSetReport,
};
pub use kmn::{
    check_kmn_structure, complete_bipartite_in, extract_prime_witness, find_complete_bipartite, mod6_lemma_scan,
    KmnStructureReport, KmnTheorem, KmnWitness, LemmaScan, Mod6Pattern, PrimeWitness,
};

use alloc::vec;
use alloc::vec::Vec;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::primes::PrimeSieve;

/// Which truncation of the Goldbach graph to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Variant {
    /// Vertices `0, 2, ..., 2n`; odd set: odd primes.
    WithZero,
    /// Vertices `2, 4, ..., 2n`; odd set: odd primes and 1.
    Starred,
}

/// Finite Goldbach graph with precomputed neighbour lists.
#[derive(Debug, Clone)]
pub struct GoldbachGraph {
    n: u64,
    variant: Variant,
    sieve: PrimeSieve,
    /// Neighbours of vertex `2i` at slot `i`, ascending.
    neighbors: Vec<Vec<u64>>,
}

/// Builds `G_n` (or its starred variant).
pub fn build_goldbach(n: u64, variant: Variant) -> Result<GoldbachGraph> {
    GoldbachGraph::new(n, variant)
}

impl GoldbachGraph {
    pub fn new(n: u64, variant: Variant) -> Result<Self> {
        if n == 0 {
            return Err(Error::argument("n must be at least 1"));
        }
        let top = 2 * n;
        let sieve = PrimeSieve::new(top.max(2))?;
        let member = |x: u64| odd_member(&sieve, variant, x);
        // half-differences q with b = a + 2q <= 2n
        let steps: Vec<u64> = (1..=n).step_by(2).filter(|&q| member(q)).collect();
        let first = match variant {
            Variant::WithZero => 0,
            Variant::Starred => 2,
        };
        let mut neighbors = vec![Vec::new(); n as usize + 1];
        for a in (first..=top).step_by(2) {
            for &q in &steps {
                let b = a + 2 * q;
                if b > top {
                    break;
                }
                if member(a + q) {
                    neighbors[(a / 2) as usize].push(b);
                    neighbors[(b / 2) as usize].push(a);
                }
            }
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(GoldbachGraph {
            n,
            variant,
            sieve,
            neighbors,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn sieve(&self) -> &PrimeSieve {
        &self.sieve
    }

    pub fn first_vertex(&self) -> u64 {
        match self.variant {
            Variant::WithZero => 0,
            Variant::Starred => 2,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = u64> {
        (self.first_vertex()..=2 * self.n).step_by(2)
    }

    pub fn vertex_count(&self) -> usize {
        match self.variant {
            Variant::WithZero => self.n as usize + 1,
            Variant::Starred => self.n as usize,
        }
    }

    pub fn contains_vertex(&self, v: u64) -> bool {
        v % 2 == 0 && v >= self.first_vertex() && v <= 2 * self.n
    }

    /// Membership in this graph's odd set (within the sieve range).
    pub fn in_odd_set(&self, x: u64) -> bool {
        odd_member(&self.sieve, self.variant, x)
    }

    /// Arithmetic edge test: both half-values in the odd set.
    pub fn adjacent(&self, a: u64, b: u64) -> bool {
        if a == b || !self.contains_vertex(a) || !self.contains_vertex(b) {
            return false;
        }
        self.in_odd_set((a + b) / 2) && self.in_odd_set(a.abs_diff(b) / 2)
    }

    pub fn neighbors(&self, v: u64) -> &[u64] {
        if !self.contains_vertex(v) {
            return &[];
        }
        &self.neighbors[(v / 2) as usize]
    }

    /// Neighbours below `v` (arcs ascend, so these are the in-neighbours).
    pub fn in_neighbors(&self, v: u64) -> &[u64] {
        let all = self.neighbors(v);
        &all[..all.partition_point(|&b| b < v)]
    }

    pub fn out_neighbors(&self, v: u64) -> &[u64] {
        let all = self.neighbors(v);
        &all[all.partition_point(|&b| b < v)..]
    }

    pub fn degree(&self, v: u64) -> usize {
        self.neighbors(v).len()
    }

    pub fn in_degree(&self, v: u64) -> usize {
        self.in_neighbors(v).len()
    }

    pub fn out_degree(&self, v: u64) -> usize {
        self.out_neighbors(v).len()
    }

    /// Degree of `v` in the induced truncation `G_m` (neighbours `<= 2m`).
    pub fn degree_within(&self, v: u64, m: u64) -> usize {
        if v > 2 * m {
            return 0;
        }
        let all = self.neighbors(v);
        all.partition_point(|&b| b <= 2 * m)
    }

    /// Undirected edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.vertices()
            .flat_map(move |a| self.out_neighbors(a).iter().map(move |&b| (a, b)))
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.out_degree(v)).sum()
    }

    pub fn is_connected(&self) -> bool {
        let first = self.first_vertex();
        let mut sets = DisjointSets::new(self.vertex_count());
        let slot = |v: u64| ((v - first) / 2) as usize;
        for (a, b) in self.edges() {
            sets.union(slot(a), slot(b));
        }
        sets.components() == 1
    }
}

fn odd_member(sieve: &PrimeSieve, variant: Variant, x: u64) -> bool {
    match variant {
        Variant::WithZero => sieve.odd_prime(x),
        Variant::Starred => x == 1 || sieve.odd_prime(x),
    }
}

/// Unordered odd-prime pairs `(p, q)`, `p <= q`, with `p + q = v`.
pub fn goldbach_partitions(v: u64, sieve: &PrimeSieve) -> Result<Vec<(u64, u64)>> {
    if v % 2 != 0 {
        return Err(Error::argument("Goldbach partitions need an even number"));
    }
    if v > sieve.bound() {
        return Err(Error::OutOfRange {
            value: v,
            bound: sieve.bound(),
        });
    }
    Ok((3..=v / 2)
        .step_by(2)
        .filter(|&p| sieve.odd_prime(p) && sieve.odd_prime(v - p))
        .map(|p| (p, v - p))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VertexDegree {
    pub vertex: u64,
    pub in_degree: usize,
    pub out_degree: usize,
}

impl VertexDegree {
    pub fn total(&self) -> usize {
        self.in_degree + self.out_degree
    }
}

/// Per-vertex degrees of `G_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DegreeProfile {
    pub n: u64,
    pub degrees: Vec<VertexDegree>,
}

impl DegreeProfile {
    pub fn get(&self, v: u64) -> Option<&VertexDegree> {
        if v % 2 != 0 {
            return None;
        }
        self.degrees.get((v / 2) as usize)
    }

    /// First `v` in `[6, 2n]` whose in-degree differs from its number of
    /// Goldbach partitions.
    pub fn partition_mismatch(&self, sieve: &PrimeSieve) -> Result<Option<u64>> {
        for d in self.degrees.iter().filter(|d| d.vertex >= 6) {
            if goldbach_partitions(d.vertex, sieve)?.len() != d.in_degree {
                return Ok(Some(d.vertex));
            }
        }
        Ok(None)
    }
}

pub fn degree_profile(n: u64) -> Result<DegreeProfile> {
    let g = GoldbachGraph::new(n, Variant::WithZero)?;
    Ok(profile_of(&g))
}

pub fn profile_of(g: &GoldbachGraph) -> DegreeProfile {
    DegreeProfile {
        n: g.n(),
        degrees: g
            .vertices()
            .map(|v| VertexDegree {
                vertex: v,
                in_degree: g.in_degree(v),
                out_degree: g.out_degree(v),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConnectivityReport {
    pub from: u64,
    pub n_max: u64,
    pub first_disconnected: Option<u64>,
    pub all_connected: bool,
    /// Component counts of `G_1 .. G_6`, reported without interpretation.
    pub small_cases: Vec<(u64, usize)>,
}

/// Checks that `G_n` is connected for every `7 <= n <= n_max`.
///
/// Vertices are added in increasing order to a disjoint-set forest; adding
/// `2k` joins it to its smaller neighbours `p - q` for each partition
/// `2k = p + q`. After each step the component count is the exact answer
/// for `G_k`.
pub fn verify_goldbach_connectivity(n_max: u64) -> Result<ConnectivityReport> {
    if n_max < 7 {
        return Err(Error::argument("connectivity scan starts at n = 7"));
    }
    let sieve = PrimeSieve::new(2 * n_max)?;
    let mut sets = DisjointSets::new(1); // vertex 0
    let mut first_disconnected = None;
    let mut small_cases = Vec::new();
    for k in 1..=n_max {
        let v = 2 * k;
        let slot = sets.push();
        debug_assert_eq!(slot as u64, k);
        for q in (3..=k).step_by(2) {
            if sieve.odd_prime(q) && sieve.odd_prime(v - q) {
                sets.union(slot, ((v - 2 * q) / 2) as usize);
            }
        }
        if k < 7 {
            small_cases.push((k, sets.components()));
        } else if sets.components() != 1 && first_disconnected.is_none() {
            first_disconnected = Some(k);
        }
    }
    Ok(ConnectivityReport {
        from: 7,
        n_max,
        first_disconnected,
        all_connected: first_disconnected.is_none(),
        small_cases,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InDegreeReport {
    pub v_max: u64,
    pub checked: u64,
    /// Even `v` in `[6, v_max]` with no Goldbach partition.
    pub violations: Vec<u64>,
}

pub fn verify_positive_in_degree(v_max: u64) -> Result<InDegreeReport> {
    if v_max < 6 {
        return Err(Error::argument("in-degree scan needs v_max >= 6"));
    }
    let sieve = PrimeSieve::new(v_max)?;
    let mut violations = Vec::new();
    let mut checked = 0;
    for v in (6..=v_max).step_by(2) {
        checked += 1;
        let witnessed = (3..=v / 2)
            .step_by(2)
            .any(|p| sieve.odd_prime(p) && sieve.odd_prime(v - p));
        if !witnessed {
            violations.push(v);
        }
    }
    Ok(InDegreeReport {
        v_max,
        checked,
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DifferenceWitness {
    pub v: u64,
    pub lower: u64,
    pub upper: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MailletReport {
    pub v_max: u64,
    pub search_bound: u64,
    pub witnesses: Vec<DifferenceWitness>,
    /// Even `v` with no odd-prime pair `(q, q + v)` below the bound. This is
    /// a statement about the bound, not a refutation.
    pub unwitnessed: Vec<u64>,
}

/// For each even `2 <= v <= v_max`, the smallest odd primes `q, q + v` with
/// `q + v <= search_bound`.
pub fn verify_maillet(v_max: u64, search_bound: u64) -> Result<MailletReport> {
    if v_max < 2 {
        return Err(Error::argument("Maillet scan needs v_max >= 2"));
    }
    let sieve = PrimeSieve::new(search_bound.max(2))?;
    let mut witnesses = Vec::new();
    let mut unwitnessed = Vec::new();
    for v in (2..=v_max).step_by(2) {
        let found = (3..)
            .step_by(2)
            .take_while(|&q| q + v <= search_bound)
            .find(|&q| sieve.odd_prime(q) && sieve.odd_prime(q + v));
        match found {
            Some(q) => witnesses.push(DifferenceWitness {
                v,
                lower: q,
                upper: q + v,
            }),
            None => unwitnessed.push(v),
        }
    }
    Ok(MailletReport {
        v_max,
        search_bound,
        witnesses,
        unwitnessed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KroneckerCount {
    pub gap: u64,
    pub n: u64,
    /// Prime pairs `(p, p + gap)`, ascending.
    pub pairs: Vec<(u64, u64)>,
    /// The matching out-neighbours `2p + gap` of vertex `gap` in `G_n`.
    pub out_neighbors: Vec<u64>,
}

impl KroneckerCount {
    pub fn count(&self) -> usize {
        self.pairs.len()
    }
}

/// Out-degree of vertex `gap` in `G_n`, with the prime pairs behind it.
///
/// An out-neighbour `b` of `gap` has `(b - gap)/2 = p` and
/// `(b + gap)/2 = p + gap` both odd primes, so the count is the number of
/// prime pairs `(p, p + gap)` with `2p + gap <= 2n`.
pub fn count_kronecker_pairs(gap: u64, n: u64) -> Result<KroneckerCount> {
    if gap < 2 || gap % 2 != 0 {
        return Err(Error::argument("gap must be even and at least 2"));
    }
    let mut pairs = Vec::new();
    let mut out_neighbors = Vec::new();
    if gap <= 2 * n {
        let sieve = PrimeSieve::new((2 * n).max(2))?;
        for p in (3..).step_by(2).take_while(|&p| 2 * p + gap <= 2 * n) {
            if sieve.odd_prime(p) && sieve.odd_prime(p + gap) {
                pairs.push((p, p + gap));
                out_neighbors.push(2 * p + gap);
            }
        }
    }
    Ok(KroneckerCount {
        gap,
        n,
        pairs,
        out_neighbors,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrimeCountIdentity {
    pub n: u64,
    pub degree_of_zero: usize,
    /// `d_n(0) + 1`.
    pub pi: u64,
}

/// `pi(n) = d_n(0) + 1`: 0 is adjacent to `2p` for every odd prime `p <= n`,
/// and 2 is the one prime it misses.
pub fn prime_count_via_degree(n: u64) -> Result<PrimeCountIdentity> {
    if n < 2 {
        return Err(Error::argument("identity holds for n >= 2"));
    }
    let g = GoldbachGraph::new(n, Variant::WithZero)?;
    Ok(prime_count_in(&g, n))
}

/// The identity for `G_n` read off a larger graph `g` (`n <= g.n()`).
pub fn prime_count_in(g: &GoldbachGraph, n: u64) -> PrimeCountIdentity {
    assert!(n <= g.n() && g.variant() == Variant::WithZero);
    let degree_of_zero = g.degree_within(0, n);
    PrimeCountIdentity {
        n,
        degree_of_zero,
        pi: degree_of_zero as u64 + 1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InequalityReport {
    pub r: u64,
    pub n: u64,
    pub m: u64,
    /// `sum_{i<=m} d_n^+(2i)`.
    pub lhs: usize,
    /// `sum_{i<=m} d_n^-(2r - 2i)`.
    pub rhs: usize,
    pub holds: bool,
    /// The inequality is only claimed for `m <= 4`.
    pub within_theorem: bool,
}

/// Evaluates both sides of the degree inequality on `G_n`. Terms whose
/// vertex falls outside `[0, 2n]` contribute 0.
pub fn verify_degree_inequality(r: u64, n: u64, m: u64) -> Result<InequalityReport> {
    if r == 0 {
        return Err(Error::argument("r must be at least 1"));
    }
    if n < 2 * r {
        return Err(Error::argument("the inequality needs n >= 2r"));
    }
    let g = GoldbachGraph::new(n, Variant::WithZero)?;
    Ok(degree_inequality_on(&g, r, m))
}

pub fn degree_inequality_on(g: &GoldbachGraph, r: u64, m: u64) -> InequalityReport {
    let lhs = (0..=m).map(|i| g.out_degree(2 * i)).sum();
    let rhs = (0..=m)
        .filter(|&i| i <= r)
        .map(|i| g.in_degree(2 * r - 2 * i))
        .sum();
    InequalityReport {
        r,
        n: g.n(),
        m,
        lhs,
        rhs,
        holds: lhs >= rhs,
        within_theorem: m <= 4,
    }
}
