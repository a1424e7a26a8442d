//! Oriented odd-even graphs.
//!
//! The vertices are distinct non-negative even integers and an odd set `O`
//! decides the arcs: `a -> b` exactly when `(a+b)/2` and `(b-a)/2` both lie
//! in `O`. Arcs therefore always ascend, and they only ever join a vertex
//! `= 0 (mod 4)` to one `= 2 (mod 4)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::primes::{arithmetic_odd_set_from, IndexStart, OddSet, OddSetKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedOddEvenGraph {
    vertices: Vec<u64>,
    odd: OddSet,
    arcs: Vec<(u64, u64)>,
}

/// Builds `->G_A(O)`. Vertices are sorted; odd or repeated vertices are
/// rejected.
pub fn build_oriented_odd_even(vertices: &[u64], odd: &OddSet) -> Result<OrientedOddEvenGraph> {
    let vertices = checked_vertex_set(vertices)?;
    let mut arcs = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if odd.contains((a + b) / 2) && odd.contains((b - a) / 2) {
                arcs.push((a, b));
            }
        }
    }
    Ok(OrientedOddEvenGraph {
        vertices,
        odd: odd.clone(),
        arcs,
    })
}

fn checked_vertex_set(vertices: &[u64]) -> Result<Vec<u64>> {
    if let Some(v) = vertices.iter().find(|&&v| v % 2 != 0) {
        return Err(Error::argument(format!("vertex {v} is not even")));
    }
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::argument("vertices must be distinct"));
    }
    Ok(sorted)
}

impl OrientedOddEvenGraph {
    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn odd_set(&self) -> &OddSet {
        &self.odd
    }

    /// Arcs `(a, b)` with `a < b`, in lexicographic order.
    pub fn arcs(&self) -> &[(u64, u64)] {
        &self.arcs
    }

    pub fn has_arc(&self, a: u64, b: u64) -> bool {
        self.arcs.binary_search(&(a, b)).is_ok()
    }

    /// Undirected adjacency in the underlying graph.
    pub fn adjacent(&self, a: u64, b: u64) -> bool {
        self.has_arc(a.min(b), a.max(b))
    }

    /// The underlying undirected graph as sorted edge pairs.
    pub fn underlying_edges(&self) -> BTreeSet<(u64, u64)> {
        self.arcs.iter().copied().collect()
    }

    pub fn is_connected_underlying(&self) -> Result<bool> {
        if self.vertices.is_empty() {
            return Err(Error::argument("connectivity needs at least one vertex"));
        }
        let mut sets = DisjointSets::new(self.vertices.len());
        let index = |v: u64| self.vertices.binary_search(&v).unwrap();
        for &(a, b) in &self.arcs {
            sets.union(index(a), index(b));
        }
        Ok(sets.components() == 1)
    }

    /// Counts of arcs `V1 -> V2` and `V2 -> V1`.
    pub fn directional_arc_counts(&self) -> (usize, usize) {
        let forward = self.arcs.iter().filter(|(a, _)| a % 4 == 0).count();
        (forward, self.arcs.len() - forward)
    }

    /// All arcs run from `V1` to `V2`, or all from `V2` to `V1`.
    pub fn is_unidirectional(&self) -> bool {
        let (forward, backward) = self.directional_arc_counts();
        forward == 0 || backward == 0
    }
}

/// Splits even vertices into `V1` (multiples of 4) and `V2` (the rest).
pub fn partite_split(vertices: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.into_iter().partition(|v| v % 4 == 0)
}

/// The members of `O` that are a half-sum or half-difference of two distinct
/// vertices. `G_A(O)` and `G_A(O_rel)` have the same edges.
pub fn relevant_odd_set(vertices: &[u64], odd: &OddSet) -> OddSet {
    let mut found = BTreeSet::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            for candidate in [(a + b) / 2, a.abs_diff(b) / 2] {
                if candidate % 2 == 1 && odd.contains(candidate) {
                    found.insert(candidate);
                }
            }
        }
    }
    crate::primes::OddSet::from_sorted(OddSetKind::Explicit, None, found.into_iter().collect())
}

/// Result of testing the necessary condition `|O_rel| > sqrt(2|A|)` for
/// connected odd-even graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Con1Report {
    pub vertex_count: usize,
    pub relevant_odd_count: usize,
    pub connected: bool,
    pub bound_holds: bool,
    /// Edges at vertex 0 use a single odd value (`(0+b)/2 = (b-0)/2`), which
    /// breaks the pair counting behind the bound.
    pub zero_in_a: bool,
    pub theorem_violated: bool,
}

pub fn check_con1(vertices: &[u64], odd: &OddSet) -> Result<Con1Report> {
    let graph = build_oriented_odd_even(vertices, odd)?;
    let n = graph.vertices.len();
    if n < 2 {
        return Err(Error::argument("con1 needs at least two vertices"));
    }
    let k = relevant_odd_set(&graph.vertices, odd).len();
    let connected = graph.is_connected_underlying()?;
    // k > sqrt(2n)  <=>  k^2 > 2n for k >= 0
    let bound_holds = (k as u128) * (k as u128) > 2 * n as u128;
    Ok(Con1Report {
        vertex_count: n,
        relevant_odd_count: k,
        connected,
        bound_holds,
        zero_in_a: graph.vertices.first() == Some(&0),
        theorem_violated: connected && !bound_holds,
    })
}

/// Result of testing the sufficient condition `|O_rel| > 3|A|/4` on
/// `A = {0, 2, ..., 2(m-1)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Con2Report {
    pub m: u64,
    pub relevant_odd_count: usize,
    pub hypothesis_holds: bool,
    pub connected: bool,
    pub theorem_violated: bool,
}

pub fn check_con2(m: u64, odd: &OddSet) -> Result<Con2Report> {
    if m == 0 {
        return Err(Error::argument("m must be at least 1"));
    }
    let vertices: Vec<u64> = (0..m).map(|i| 2 * i).collect();
    let graph = build_oriented_odd_even(&vertices, odd)?;
    let k = relevant_odd_set(&vertices, odd).len();
    let hypothesis_holds = 4 * k as u64 > 3 * m;
    let connected = graph.is_connected_underlying()?;
    Ok(Con2Report {
        m,
        relevant_odd_count: k,
        hypothesis_holds,
        connected,
        theorem_violated: hypothesis_holds && !connected,
    })
}

/// Observed against predicted unidirectionality of `->G(O_{a,b})` on the
/// truncation `{0, 2, ..., vertex_bound}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct UnidirectionalityReport {
    pub a: u64,
    pub b: u64,
    pub start: IndexStart,
    pub vertex_bound: u64,
    pub v1_to_v2_arcs: usize,
    pub v2_to_v1_arcs: usize,
    /// First arc `V1 -> V2` and first arc `V2 -> V1`, if any.
    pub forward_witness: Option<(u64, u64)>,
    pub backward_witness: Option<(u64, u64)>,
    pub observed_unidirectional: bool,
    pub predicted: bool,
    pub agree: bool,
}

/// Vertex bound large enough to exhibit both arc directions when `4 ∤ a`.
///
/// The two witness arcs of the converse construction (`2a -> 6a+2b` and
/// `a -> 5a+2b`) need vertices up to `6a + 2b`; `10a + 4b` leaves margin.
pub fn default_unidirectionality_bound(a: u64, b: u64) -> u64 {
    10 * a + 4 * b
}

pub fn unidirectionality_scan(
    a: u64,
    b: u64,
    vertex_bound: u64,
    start: IndexStart,
) -> Result<UnidirectionalityReport> {
    if vertex_bound % 2 != 0 {
        return Err(Error::argument("vertex bound must be even"));
    }
    // Half-sums of vertices <= vertex_bound stay below vertex_bound.
    let odd = arithmetic_odd_set_from(a, b, vertex_bound.max(b), start)?;
    let vertices: Vec<u64> = (0..=vertex_bound / 2).map(|i| 2 * i).collect();
    let graph = build_oriented_odd_even(&vertices, &odd)?;
    let (forward, backward) = graph.directional_arc_counts();
    let observed = forward == 0 || backward == 0;
    let predicted = a % 4 == 0;
    Ok(UnidirectionalityReport {
        a,
        b,
        start,
        vertex_bound,
        v1_to_v2_arcs: forward,
        v2_to_v1_arcs: backward,
        forward_witness: graph.arcs.iter().copied().find(|(u, _)| u % 4 == 0),
        backward_witness: graph.arcs.iter().copied().find(|(u, _)| u % 4 == 2),
        observed_unidirectional: observed,
        predicted,
        agree: observed == predicted,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum MatrixLayout {
    /// `V1` ascending, then `V2` ascending.
    Blocked,
    /// All vertices ascending.
    Flat,
}

/// Adjacency matrix with its row/column vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AdjacencyExport {
    pub layout: MatrixLayout,
    /// Row and column labels (the same order for both).
    pub order: Vec<u64>,
    /// Number of leading `V1` vertices in a blocked layout.
    pub v1_len: usize,
    pub matrix: BinaryMatrix,
}

pub fn export_adjacency(graph: &OrientedOddEvenGraph, layout: MatrixLayout) -> AdjacencyExport {
    let (v1, v2) = partite_split(&graph.vertices);
    let v1_len = v1.len();
    let order = match layout {
        MatrixLayout::Blocked => v1.into_iter().chain(v2).collect::<Vec<_>>(),
        MatrixLayout::Flat => graph.vertices.clone(),
    };
    let mut matrix = BinaryMatrix::zeros(order.len(), order.len());
    for (i, &u) in order.iter().enumerate() {
        for (j, &v) in order.iter().enumerate() {
            if graph.has_arc(u, v) {
                matrix.set(i, j, true);
            }
        }
    }
    AdjacencyExport {
        layout,
        order,
        v1_len,
        matrix,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::arithmetic_odd_set;
    use alloc::vec;
    use proptest::prelude::*;

    fn odds(v: &[u64]) -> OddSet {
        OddSet::explicit(v.iter().copied()).unwrap()
    }

    #[test]
    fn build_examples() {
        let g = build_oriented_odd_even(&[0, 6, 10], &odds(&[3, 5])).unwrap();
        assert_eq!(g.arcs(), &[(0, 6), (0, 10)]);
        let g = build_oriented_odd_even(&[0, 2], &OddSet::empty()).unwrap();
        assert!(g.arcs().is_empty());
        let g = build_oriented_odd_even(&[4, 10], &odds(&[7, 3])).unwrap();
        assert_eq!(g.arcs(), &[(4, 10)]);
        assert!(build_oriented_odd_even(&[0, 3], &OddSet::empty()).is_err());
        assert!(build_oriented_odd_even(&[2, 2], &OddSet::empty()).is_err());
    }

    #[test]
    fn split_examples() {
        assert_eq!(partite_split(&[0, 2, 4, 6, 8]), (vec![0, 4, 8], vec![2, 6]));
        assert_eq!(partite_split(&[12]), (vec![12], vec![]));
        assert_eq!(partite_split(&[2, 6, 10]), (vec![], vec![2, 6, 10]));
    }

    #[test]
    fn relevant_examples() {
        assert_eq!(
            relevant_odd_set(&[0, 2, 4], &odds(&[1, 3, 5, 7])).as_slice(),
            &[1, 3]
        );
        assert_eq!(relevant_odd_set(&[0, 6], &odds(&[3])).as_slice(), &[3]);
        assert!(relevant_odd_set(&[0, 2, 8], &OddSet::empty()).is_empty());
    }

    #[test]
    fn connectivity_examples() {
        let g = build_oriented_odd_even(&[0, 6], &odds(&[3])).unwrap();
        assert_eq!(g.is_connected_underlying(), Ok(true));
        let g = build_oriented_odd_even(&[0, 2], &OddSet::empty()).unwrap();
        assert_eq!(g.is_connected_underlying(), Ok(false));
        let g = build_oriented_odd_even(&[0], &odds(&[1, 3])).unwrap();
        assert_eq!(g.is_connected_underlying(), Ok(true));
        let g = build_oriented_odd_even(&[], &odds(&[1])).unwrap();
        assert!(g.is_connected_underlying().is_err());
    }

    #[test]
    fn con1_examples() {
        let r = check_con1(&[0, 6], &odds(&[3])).unwrap();
        assert!(r.connected && !r.bound_holds && r.theorem_violated && r.zero_in_a);
        assert_eq!(r.relevant_odd_count, 1);

        // Boundary at |A| = 2 without 0: the edge 2-8 uses {3, 5}, and
        // 2 > sqrt(4) fails, so the strict bound is violated here too.
        let r = check_con1(&[2, 8], &odds(&[5, 3])).unwrap();
        assert!(r.connected);
        assert_eq!(r.relevant_odd_count, 2);
        assert!(!r.bound_holds && r.theorem_violated && !r.zero_in_a);

        let r = check_con1(&[0, 2], &OddSet::empty()).unwrap();
        assert!(!r.connected && !r.theorem_violated);

        assert!(check_con1(&[4], &odds(&[3])).is_err());
    }

    #[test]
    fn con2_examples() {
        let all_odds_to = |n: u64| odds(&(1..=n).step_by(2).collect::<Vec<_>>());
        let r = check_con2(8, &all_odds_to(13)).unwrap();
        assert_eq!(r.relevant_odd_count, 7);
        assert!(r.hypothesis_holds && r.connected && !r.theorem_violated);
        let r = check_con2(2, &OddSet::empty()).unwrap();
        assert!(!r.hypothesis_holds && !r.theorem_violated);
        let r = check_con2(4, &all_odds_to(5)).unwrap();
        assert!(r.relevant_odd_count <= 3);
        assert!(!r.hypothesis_holds && !r.theorem_violated);
        assert!(check_con2(0, &OddSet::empty()).is_err());
    }

    #[test]
    fn unidirectionality_examples() {
        let r = unidirectionality_scan(4, 1, 200, IndexStart::One).unwrap();
        assert!(r.observed_unidirectional && r.predicted && r.agree);
        assert!(r.v1_to_v2_arcs > 0);

        let r = unidirectionality_scan(6, 1, 200, IndexStart::One).unwrap();
        assert!(!r.observed_unidirectional && !r.predicted && r.agree);
        let g = build_oriented_odd_even(&[6, 32], &arithmetic_odd_set(6, 1, 200).unwrap()).unwrap();
        assert_eq!(g.arcs(), &[(6, 32)]);

        let r = unidirectionality_scan(8, 3, 200, IndexStart::One).unwrap();
        assert!(r.observed_unidirectional && r.predicted);

        assert!(unidirectionality_scan(5, 1, 200, IndexStart::One).is_err());
        assert!(unidirectionality_scan(4, 2, 200, IndexStart::One).is_err());
        assert!(unidirectionality_scan(4, 1, 201, IndexStart::One).is_err());
    }

    /// Brute force over the proof's converse construction: for `4 ∤ a` both
    /// witness arcs exist within the default bound.
    #[test]
    fn converse_witnesses_fit_default_bound() {
        for a in (2..=40).step_by(4) {
            for b in (1..=19).step_by(2) {
                let bound = default_unidirectionality_bound(a, b);
                assert!(6 * a + 2 * b <= bound);
                let odd = arithmetic_odd_set(a, b, bound).unwrap();
                let g = build_oriented_odd_even(&[2 * a, 6 * a + 2 * b, a, 5 * a + 2 * b], &odd).unwrap();
                assert!(g.has_arc(2 * a, 6 * a + 2 * b));
                assert!(g.has_arc(a, 5 * a + 2 * b));
            }
        }
    }

    #[test]
    fn index_start_does_not_change_unidirectionality() {
        for a in (2..=40).step_by(2) {
            for b in (1..=19).step_by(2) {
                let bound = default_unidirectionality_bound(a, b);
                let one = unidirectionality_scan(a, b, bound, IndexStart::One).unwrap();
                let zero = unidirectionality_scan(a, b, bound, IndexStart::Zero).unwrap();
                assert!(one.agree && zero.agree, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn export_examples() {
        let g = build_oriented_odd_even(&[0, 6, 10], &odds(&[3, 5])).unwrap();
        let e = export_adjacency(&g, MatrixLayout::Blocked);
        assert_eq!(e.order, vec![0, 6, 10]);
        assert_eq!(e.v1_len, 1);
        assert!(e.matrix.get(0, 1) && e.matrix.get(0, 2));
        assert_eq!(e.matrix.count_ones(), 2);

        let g = build_oriented_odd_even(&[0, 2, 4], &OddSet::empty()).unwrap();
        assert!(export_adjacency(&g, MatrixLayout::Flat).matrix.is_zero());

        let vertices: Vec<u64> = (0..=60).step_by(2).collect();
        let g = build_oriented_odd_even(&vertices, &arithmetic_odd_set(4, 1, 60).unwrap()).unwrap();
        let e = export_adjacency(&g, MatrixLayout::Blocked);
        let n = e.order.len();
        let mut upper_right = 0;
        for i in 0..n {
            for j in 0..n {
                if e.matrix.get(i, j) {
                    assert!(i < e.v1_len && j >= e.v1_len, "arc outside the V1 x V2 block");
                    upper_right += 1;
                }
            }
        }
        assert!(upper_right > 0);
    }

    fn instance() -> impl Strategy<Value = (Vec<u64>, OddSet)> {
        (
            proptest::collection::btree_set(0u64..80, 1..=32),
            proptest::collection::btree_set(0u64..40, 0..20),
        )
            .prop_map(|(a, o)| {
                (
                    a.into_iter().map(|v| 2 * v).collect(),
                    OddSet::explicit(o.into_iter().map(|v| 2 * v + 1)).unwrap(),
                )
            })
    }

    proptest! {
        #[test]
        fn arcs_satisfy_parity_invariants((a, o) in instance()) {
            let g = build_oriented_odd_even(&a, &o).unwrap();
            for &(u, v) in g.arcs() {
                prop_assert!(u < v);
                prop_assert_eq!((v - u) / 2 % 2, 1);
                prop_assert_eq!((u + v) / 2 % 2, 1);
                prop_assert_eq!((v - u) % 4, 2);
                prop_assert_eq!((u + v) % 4, 2);
                prop_assert_ne!(u % 4, v % 4);
            }
        }

        #[test]
        fn relevant_set_preserves_edges((a, o) in instance()) {
            let rel = relevant_odd_set(&a, &o);
            prop_assert!(rel.iter().all(|v| o.contains(v)));
            let full = build_oriented_odd_even(&a, &o).unwrap();
            let reduced = build_oriented_odd_even(&a, &rel).unwrap();
            prop_assert_eq!(full.underlying_edges(), reduced.underlying_edges());
        }
    }
}
