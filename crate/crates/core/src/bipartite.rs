//! Simple directed bipartite graphs and bitournaments.
//!
//! A [`Sdbg`] keeps its partite sets explicitly. Vertices are addressed by a
//! global index: `0..|X|` are the X vertices in order, followed by the Y
//! vertices. Arcs are stored as the two adjacency blocks `A` (X to Y) and
//! `B` (Y to X).
//!
//! For bitournaments the following predicates are equivalent, and each is
//! computed here by its own route so the equivalence can be checked:
//! [`Sdbg::is_bitransitive`], no directed 4-cycle, [`Sdbg::is_acyclic`],
//! [`Sdbg::bitournament_matrix_form`] and a nonempty
//! [`Sdbg::monotone_labeling`].

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Side {
    X,
    Y,
}

/// The two off-diagonal blocks of the adjacency matrix of an SDBG.
///
/// `forward[i][j]` is the arc `x_i -> y_j`, `backward[j][i]` the arc
/// `y_j -> x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AdjacencyBlocks {
    pub forward: BinaryMatrix,
    pub backward: BinaryMatrix,
}

impl AdjacencyBlocks {
    /// `B = A^T`, i.e. every arc has its reverse.
    pub fn is_symmetric(&self) -> bool {
        self.backward == self.forward.transpose()
    }
}

/// Simple directed bipartite graph `(X, Y, E)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sdbg {
    x: Vec<String>,
    y: Vec<String>,
    forward: BinaryMatrix,
    backward: BinaryMatrix,
}

impl Sdbg {
    /// Builds a graph from vertex names and named arcs.
    ///
    /// The partite sets must be nonempty and disjoint, names unique, and
    /// every arc must join X and Y. Repeated arcs are merged.
    pub fn new<S: AsRef<str>>(x: &[S], y: &[S], arcs: &[(S, S)]) -> Result<Self> {
        let x: Vec<String> = x.iter().map(|s| s.as_ref().to_string()).collect();
        let y: Vec<String> = y.iter().map(|s| s.as_ref().to_string()).collect();
        if x.is_empty() || y.is_empty() {
            return Err(Error::argument("both partite sets must be nonempty"));
        }
        let mut index = BTreeMap::new();
        for (i, name) in x.iter().chain(y.iter()).enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(Error::argument(format!(
                    "vertex {name:?} appears more than once"
                )));
            }
        }
        let nx = x.len();
        let mut forward = BinaryMatrix::zeros(nx, y.len());
        let mut backward = BinaryMatrix::zeros(y.len(), nx);
        for (u, v) in arcs {
            let lookup = |name: &str| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| Error::argument(format!("arc endpoint {name:?} is not a vertex")))
            };
            let (u, v) = (lookup(u.as_ref())?, lookup(v.as_ref())?);
            match (u < nx, v < nx) {
                (true, false) => forward.set(u, v - nx, true),
                (false, true) => backward.set(u - nx, v, true),
                _ => {
                    return Err(Error::argument(format!(
                        "arc {}->{} stays inside one partite set",
                        index_name(&x, &y, u),
                        index_name(&x, &y, v)
                    )))
                }
            }
        }
        Ok(Sdbg {
            x,
            y,
            forward,
            backward,
        })
    }

    /// Builds a graph from adjacency blocks with the given vertex names.
    pub fn from_blocks(x: Vec<String>, y: Vec<String>, blocks: AdjacencyBlocks) -> Result<Self> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::argument("both partite sets must be nonempty"));
        }
        let (f, b) = (&blocks.forward, &blocks.backward);
        if f.rows() != x.len() || f.cols() != y.len() || b.rows() != y.len() || b.cols() != x.len()
        {
            return Err(Error::argument("block shapes do not match the partite sets"));
        }
        let names: BTreeSet<&str> = x.iter().chain(y.iter()).map(String::as_str).collect();
        if names.len() != x.len() + y.len() {
            return Err(Error::argument("vertex names must be unique"));
        }
        Ok(Sdbg {
            x,
            y,
            forward: blocks.forward,
            backward: blocks.backward,
        })
    }

    /// Blocks with generated names `x1.., y1..`.
    pub fn from_blocks_unnamed(blocks: AdjacencyBlocks) -> Result<Self> {
        let x = (1..=blocks.forward.rows()).map(|i| format!("x{i}")).collect();
        let y = (1..=blocks.forward.cols()).map(|j| format!("y{j}")).collect();
        Sdbg::from_blocks(x, y, blocks)
    }

    pub fn adjacency_blocks(&self) -> AdjacencyBlocks {
        AdjacencyBlocks {
            forward: self.forward.clone(),
            backward: self.backward.clone(),
        }
    }

    pub fn x_names(&self) -> &[String] {
        &self.x
    }

    pub fn y_names(&self) -> &[String] {
        &self.y
    }

    pub fn x_len(&self) -> usize {
        self.x.len()
    }

    pub fn y_len(&self) -> usize {
        self.y.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.x.len() + self.y.len()
    }

    pub fn side(&self, v: usize) -> Side {
        if v < self.x.len() {
            Side::X
        } else {
            Side::Y
        }
    }

    pub fn name(&self, v: usize) -> &str {
        index_name(&self.x, &self.y, v)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.x
            .iter()
            .chain(self.y.iter())
            .position(|n| n == name)
    }

    /// Arc `u -> v` between global indices.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        let nx = self.x.len();
        match (u < nx, v < nx) {
            (true, false) => self.forward.get(u, v - nx),
            (false, true) => self.backward.get(u - nx, v),
            _ => false,
        }
    }

    /// All arcs as `(tail, head)` global indices, X-tailed arcs first.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let nx = self.x.len();
        let mut arcs = Vec::new();
        for i in 0..nx {
            for j in 0..self.y.len() {
                if self.forward.get(i, j) {
                    arcs.push((i, nx + j));
                }
            }
        }
        for j in 0..self.y.len() {
            for i in 0..nx {
                if self.backward.get(j, i) {
                    arcs.push((nx + j, i));
                }
            }
        }
        arcs
    }

    pub fn arc_count(&self) -> usize {
        self.forward.count_ones() + self.backward.count_ones()
    }

    pub fn out_neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.has_arc(u, v))
            .collect()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.vertex_count()).filter(|&u| self.has_arc(u, v)).count()
    }

    pub fn out_degree(&self, u: usize) -> usize {
        (0..self.vertex_count()).filter(|&v| self.has_arc(u, v)).count()
    }

    /// No pair `{x, y}` carries arcs in both directions.
    pub fn is_oriented(&self) -> bool {
        (0..self.x.len())
            .all(|i| (0..self.y.len()).all(|j| !(self.forward.get(i, j) && self.backward.get(j, i))))
    }

    /// Oriented, and every cross pair carries exactly one arc.
    pub fn is_bitournament(&self) -> bool {
        (0..self.x.len())
            .all(|i| (0..self.y.len()).all(|j| self.forward.get(i, j) != self.backward.get(j, i)))
    }

    /// `x1 -> y1 -> x2 -> y2` implies `x1 -> y2`.
    pub fn is_bitransitive(&self) -> Result<bool> {
        if !self.is_oriented() {
            return Err(Error::structure("bitransitivity is defined for oriented graphs"));
        }
        let (nx, ny) = (self.x.len(), self.y.len());
        for x1 in 0..nx {
            for y1 in 0..ny {
                if !self.forward.get(x1, y1) {
                    continue;
                }
                for x2 in 0..nx {
                    if !self.backward.get(y1, x2) {
                        continue;
                    }
                    for y2 in 0..ny {
                        if self.forward.get(x2, y2) && !self.forward.get(x1, y2) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// A directed 4-cycle `x1 -> y1 -> x2 -> y2 -> x1`, as global indices.
    pub fn find_directed_4cycle(&self) -> Option<[usize; 4]> {
        let (nx, ny) = (self.x.len(), self.y.len());
        for x1 in 0..nx {
            for y1 in (0..ny).filter(|&j| self.forward.get(x1, j)) {
                for x2 in (0..nx).filter(|&i| i != x1 && self.backward.get(y1, i)) {
                    let closing = (0..ny)
                        .find(|&y2| y2 != y1 && self.forward.get(x2, y2) && self.backward.get(y2, x1));
                    if let Some(y2) = closing {
                        return Some([x1, nx + y1, x2, nx + y2]);
                    }
                }
            }
        }
        None
    }

    pub fn has_directed_4cycle(&self) -> bool {
        self.find_directed_4cycle().is_some()
    }

    /// No directed cycle of any length. Iterative depth-first search.
    pub fn is_acyclic(&self) -> bool {
        const WHITE: u8 = 0;
        const GREY: u8 = 1;
        const BLACK: u8 = 2;
        let n = self.vertex_count();
        let adjacency: Vec<Vec<usize>> = (0..n).map(|u| self.out_neighbors(u)).collect();
        let mut colour = vec![WHITE; n];
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if colour[root] != WHITE {
                continue;
            }
            colour[root] = GREY;
            stack.push((root, 0));
            while let Some(&mut (u, ref mut next)) = stack.last_mut() {
                if let Some(&v) = adjacency[u].get(*next) {
                    *next += 1;
                    match colour[v] {
                        GREY => return false,
                        WHITE => {
                            colour[v] = GREY;
                            stack.push((v, 0));
                        }
                        _ => {}
                    }
                } else {
                    colour[u] = BLACK;
                    stack.pop();
                }
            }
        }
        true
    }

    /// Condition (4) of the bitournament characterisation: the X-to-Y block
    /// is a Ferrers matrix. The Y-to-X block of a bitournament is always the
    /// complement of its transpose; that is asserted as well.
    pub fn bitournament_matrix_form(&self) -> Result<bool> {
        if !self.is_bitournament() {
            return Err(Error::structure("matrix form is defined for bitournaments"));
        }
        if self.backward != self.forward.transpose().complement() {
            return Err(Error::structure("Y-to-X block is not the complement of A^T"));
        }
        Ok(self.forward.is_ferrers())
    }

    /// All arcs point the same way across the bipartition.
    pub fn is_unidirectional(&self) -> bool {
        self.forward.is_zero() || self.backward.is_zero()
    }

    /// Monotone labeling by vertex insertion in index order.
    pub fn monotone_labeling(&self) -> Result<Option<MonotoneLabeling>> {
        let order: Vec<usize> = (0..self.vertex_count()).collect();
        self.monotone_labeling_with_order(&order)
    }

    /// Builds a labeling `L` with `D` isomorphic to `D_{L(V)}`.
    ///
    /// Vertices are inserted one at a time in `order`. X labels stay even
    /// and Y labels odd. Let `m` be the least even number above every label
    /// so far; the new vertex gets `m` (X) or `m + 1` (Y), and every vertex
    /// it reaches by a directed path among the inserted vertices is shifted
    /// up by `m`. Returns `None` when the graph has a directed cycle.
    pub fn monotone_labeling_with_order(&self, order: &[usize]) -> Result<Option<MonotoneLabeling>> {
        if !self.is_bitournament() {
            return Err(Error::structure("monotone labelings are defined for bitournaments"));
        }
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&v| v >= n || core::mem::replace(&mut seen[v], true)) {
            return Err(Error::argument("insertion order must be a permutation of the vertices"));
        }
        if !self.is_acyclic() {
            return Ok(None);
        }

        let adjacency: Vec<Vec<usize>> = (0..n).map(|u| self.out_neighbors(u)).collect();
        let mut labels: Vec<Option<u64>> = vec![None; n];
        let mut max_label = 0u64;
        for &v in order {
            let m = (max_label / 2 + 1) * 2;
            // Out-reach of v inside the already labelled vertices.
            let mut reached = vec![false; n];
            let mut queue = VecDeque::from([v]);
            while let Some(u) = queue.pop_front() {
                for &w in &adjacency[u] {
                    if labels[w].is_some() && !reached[w] {
                        reached[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            for w in (0..n).filter(|&w| reached[w]) {
                let shifted = labels[w].unwrap() + m;
                labels[w] = Some(shifted);
                max_label = max_label.max(shifted);
            }
            let own = match self.side(v) {
                Side::X => m,
                Side::Y => m + 1,
            };
            labels[v] = Some(own);
            max_label = max_label.max(own);
        }
        let labeling = MonotoneLabeling {
            labels: labels.into_iter().map(Option::unwrap).collect(),
        };
        debug_assert!(labeling.is_valid_for(self));
        Ok(Some(labeling))
    }

    /// Checks the tree observation on an oriented tree.
    pub fn tree_alternating_equivalence(&self) -> Result<TreeAlternation> {
        if !self.is_oriented() {
            return Err(Error::structure("expected an oriented tree"));
        }
        let n = self.vertex_count();
        let undirected: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).filter(|&v| self.has_arc(u, v) || self.has_arc(v, u)).collect())
            .collect();
        if self.arc_count() != n - 1 || !connected(&undirected) {
            return Err(Error::structure("underlying graph is not a tree"));
        }

        let mut all_pairs_alternating = true;
        'sources: for source in 0..n {
            // parent pointers of the BFS tree rooted at source
            let mut parent = vec![usize::MAX; n];
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                for &v in &undirected[u] {
                    if parent[v] == usize::MAX {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            for target in 0..n {
                // walk target -> source; each interior vertex must be a
                // local source or sink of its two path arcs
                let mut prev = target;
                let mut cur = parent[target];
                while cur != source && prev != source {
                    let next = parent[cur];
                    if self.has_arc(prev, cur) == self.has_arc(cur, next) {
                        all_pairs_alternating = false;
                        break 'sources;
                    }
                    prev = cur;
                    cur = next;
                }
            }
        }

        let degree_condition = (0..n).all(|v| self.in_degree(v) == 0 || self.out_degree(v) == 0);
        Ok(TreeAlternation {
            all_pairs_alternating,
            degree_condition,
        })
    }
}

fn index_name<'a>(x: &'a [String], y: &'a [String], v: usize) -> &'a str {
    if v < x.len() {
        &x[v]
    } else {
        &y[v - x.len()]
    }
}

fn connected(adjacency: &[Vec<usize>]) -> bool {
    let n = adjacency.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

/// Outcome of [`Sdbg::tree_alternating_equivalence`]; the two flags agree on
/// every oriented tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TreeAlternation {
    pub all_pairs_alternating: bool,
    pub degree_condition: bool,
}

/// Positive integer labels, even on X and odd on Y, increasing along arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MonotoneLabeling {
    labels: Vec<u64>,
}

impl MonotoneLabeling {
    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// The labels as a sorted set `S`.
    pub fn image(&self) -> Vec<u64> {
        let mut image = self.labels.clone();
        image.sort_unstable();
        image
    }

    /// Injective, parity split by side, strictly increasing along arcs.
    pub fn is_valid_for(&self, d: &Sdbg) -> bool {
        if self.labels.len() != d.vertex_count() {
            return false;
        }
        let distinct: BTreeSet<u64> = self.labels.iter().copied().collect();
        if distinct.len() != self.labels.len() || distinct.contains(&0) {
            return false;
        }
        let x_parity = self.labels[0] % 2;
        let parity_ok = (0..d.vertex_count()).all(|v| match d.side(v) {
            Side::X => self.labels[v] % 2 == x_parity,
            Side::Y => self.labels[v] % 2 != x_parity,
        });
        parity_ok && d.arcs().iter().all(|&(u, v)| self.labels[u] < self.labels[v])
    }

    /// Rebuilds `D_S` on the image and checks it arc by arc against `d`
    /// under the labeling map.
    pub fn reproduces(&self, d: &Sdbg) -> bool {
        if !self.is_valid_for(d) {
            return false;
        }
        let Ok((ds, _)) = build_d_s(&self.labels) else {
            return false;
        };
        let position: BTreeMap<u64, usize> = ds
            .x
            .iter()
            .chain(ds.y.iter())
            .enumerate()
            .map(|(i, name)| (name.parse().unwrap(), i))
            .collect();
        let n = d.vertex_count();
        if ds.arc_count() != d.arc_count() {
            return false;
        }
        (0..n).all(|u| {
            (0..n).all(|v| {
                d.has_arc(u, v) == ds.has_arc(position[&self.labels[u]], position[&self.labels[v]])
            })
        })
    }
}

/// The parity digraph `D_S`: evens form X, odds form Y, and `a -> b`
/// whenever `b > a` with opposite parity.
///
/// Also returns the identity labeling of `D_S`.
pub fn build_d_s(values: &[u64]) -> Result<(Sdbg, MonotoneLabeling)> {
    let set: BTreeSet<u64> = values.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::argument("S must be nonempty"));
    }
    if set.contains(&0) {
        return Err(Error::argument("S must contain positive integers"));
    }
    let evens: Vec<u64> = set.iter().copied().filter(|v| v % 2 == 0).collect();
    let odds: Vec<u64> = set.iter().copied().filter(|v| v % 2 == 1).collect();
    if evens.is_empty() || odds.is_empty() {
        return Err(Error::argument("S needs both an even and an odd element"));
    }
    let mut forward = BinaryMatrix::zeros(evens.len(), odds.len());
    let mut backward = BinaryMatrix::zeros(odds.len(), evens.len());
    for (i, &e) in evens.iter().enumerate() {
        for (j, &o) in odds.iter().enumerate() {
            if o > e {
                forward.set(i, j, true);
            } else {
                backward.set(j, i, true);
            }
        }
    }
    let labels = evens.iter().chain(odds.iter()).copied().collect();
    let d = Sdbg::from_blocks(
        evens.iter().map(u64::to_string).collect(),
        odds.iter().map(u64::to_string).collect(),
        AdjacencyBlocks { forward, backward },
    )?;
    Ok((d, MonotoneLabeling { labels }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(x: &[&str], y: &[&str], arcs: &[(&str, &str)]) -> Sdbg {
        Sdbg::new(x, y, arcs).unwrap()
    }

    fn four_cycle() -> Sdbg {
        g(
            &["x1", "x2"],
            &["y1", "y2"],
            &[("x1", "y1"), ("y1", "x2"), ("x2", "y2"), ("y2", "x1")],
        )
    }

    fn arc_names(d: &Sdbg) -> BTreeSet<(String, String)> {
        d.arcs()
            .into_iter()
            .map(|(u, v)| (d.name(u).to_string(), d.name(v).to_string()))
            .collect()
    }

    #[test]
    fn construction_errors() {
        let none: [(&str, &str); 0] = [];
        assert!(Sdbg::new::<&str>(&[], &["y"], &none).is_err());
        assert!(Sdbg::new(&["a"], &["a"], &none).is_err());
        assert!(Sdbg::new(&["x1", "x2"], &["y"], &[("x1", "x2")]).is_err());
        assert!(Sdbg::new(&["x1"], &["y"], &[("x1", "zz")]).is_err());
    }

    #[test]
    fn oriented_examples() {
        assert!(g(&["x1"], &["y1"], &[("x1", "y1")]).is_oriented());
        assert!(!g(&["x1"], &["y1"], &[("x1", "y1"), ("y1", "x1")]).is_oriented());
        assert!(g(&["x1", "x2"], &["y1"], &[("x1", "y1"), ("y1", "x2")]).is_oriented());
    }

    #[test]
    fn bitournament_examples() {
        assert!(g(&["x1"], &["y1"], &[("x1", "y1")]).is_bitournament());
        assert!(!g(&["x1"], &["y1", "y2"], &[("x1", "y1")]).is_bitournament());
        assert!(build_d_s(&[1, 2, 3]).unwrap().0.is_bitournament());
    }

    #[test]
    fn bitransitive_examples() {
        let closed = g(
            &["x1", "x2"],
            &["y1", "y2"],
            &[("x1", "y1"), ("y1", "x2"), ("x2", "y2"), ("x1", "y2")],
        );
        assert_eq!(closed.is_bitransitive(), Ok(true));
        let open = g(
            &["x1", "x2"],
            &["y1", "y2"],
            &[("x1", "y1"), ("y1", "x2"), ("x2", "y2")],
        );
        assert_eq!(open.is_bitransitive(), Ok(false));
        let none: [(&str, &str); 0] = [];
        assert_eq!(g(&["x1"], &["y1"], &none).is_bitransitive(), Ok(true));
        assert!(g(&["x1"], &["y1"], &[("x1", "y1"), ("y1", "x1")])
            .is_bitransitive()
            .is_err());
    }

    #[test]
    fn four_cycles_and_acyclicity() {
        assert!(four_cycle().has_directed_4cycle());
        assert!(!four_cycle().is_acyclic());
        let (ds, _) = build_d_s(&[1, 2, 3, 4]).unwrap();
        assert!(!ds.has_directed_4cycle());
        assert!(ds.is_acyclic());
        let single = g(&["x1"], &["y1"], &[("x1", "y1")]);
        assert!(!single.has_directed_4cycle());
        assert!(g(&["x1"], &["y1", "y2"], &[("x1", "y1"), ("x1", "y2")]).is_acyclic());
    }

    #[test]
    fn long_cycle_is_found_without_a_4cycle() {
        // x1 -> y1 -> x2 -> y2 -> x3 -> y3 -> x1, a 6-cycle only
        let d = g(
            &["x1", "x2", "x3"],
            &["y1", "y2", "y3"],
            &[
                ("x1", "y1"),
                ("y1", "x2"),
                ("x2", "y2"),
                ("y2", "x3"),
                ("x3", "y3"),
                ("y3", "x1"),
            ],
        );
        assert!(!d.has_directed_4cycle());
        assert!(!d.is_acyclic());
    }

    #[test]
    fn matrix_form_examples() {
        let (ds, _) = build_d_s(&[1, 2, 3, 4]).unwrap();
        assert_eq!(ds.bitournament_matrix_form(), Ok(true));
        assert_eq!(four_cycle().bitournament_matrix_form(), Ok(false));
        assert_eq!(
            g(&["x1"], &["y1"], &[("y1", "x1")]).bitournament_matrix_form(),
            Ok(true)
        );
        assert!(g(&["x1"], &["y1", "y2"], &[("x1", "y1")])
            .bitournament_matrix_form()
            .is_err());
    }

    #[test]
    fn d_s_examples() {
        let expect = |s: &[u64], arcs: &[(&str, &str)]| {
            let (d, labeling) = build_d_s(s).unwrap();
            let want: BTreeSet<(String, String)> = arcs
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect();
            assert_eq!(arc_names(&d), want, "S = {s:?}");
            assert!(labeling.reproduces(&d));
        };
        expect(&[1, 2, 3], &[("1", "2"), ("2", "3")]);
        expect(&[1, 2, 3, 4], &[("1", "2"), ("1", "4"), ("2", "3"), ("3", "4")]);
        expect(&[2, 3], &[("2", "3")]);
        assert!(build_d_s(&[1, 3, 5]).is_err());
        assert!(build_d_s(&[]).is_err());
        assert!(build_d_s(&[0, 1]).is_err());
    }

    #[test]
    fn labeling_examples() {
        let d = g(
            &["x1", "x2"],
            &["y1", "y2"],
            &[("x1", "y1"), ("x1", "y2"), ("y1", "x2"), ("x2", "y2")],
        );
        assert!(d.is_acyclic());
        let l = d.monotone_labeling().unwrap().unwrap();
        assert!(l.reproduces(&d));

        assert_eq!(four_cycle().monotone_labeling(), Ok(None));

        let single = g(&["u"], &["v"], &[("u", "v")]);
        let l = single.monotone_labeling().unwrap().unwrap();
        assert!(l.label(0) < l.label(1));
        assert_eq!(l.label(0) % 2, 0);
        assert_eq!(l.label(1) % 2, 1);

        assert!(g(&["x1"], &["y1", "y2"], &[("x1", "y1")])
            .monotone_labeling()
            .is_err());
        assert!(single.monotone_labeling_with_order(&[0, 0]).is_err());
    }

    #[test]
    fn labeling_is_order_independent() {
        let (ds, _) = build_d_s(&[1, 2, 3, 4, 5, 6, 9, 12]).unwrap();
        let n = ds.vertex_count();
        let orders: [Vec<usize>; 3] = [
            (0..n).collect(),
            (0..n).rev().collect(),
            (0..n).map(|i| (i * 3) % n).collect(),
        ];
        for order in &orders {
            let l = ds.monotone_labeling_with_order(order).unwrap().unwrap();
            assert!(l.reproduces(&ds), "order {order:?}");
        }
    }

    #[test]
    fn unidirectional_examples() {
        assert!(g(&["x1", "x2"], &["y1", "y2"], &[("x1", "y1"), ("x2", "y2")]).is_unidirectional());
        assert!(!g(&["x1", "x2"], &["y1", "y2"], &[("x1", "y1"), ("y2", "x2")]).is_unidirectional());
        let none: [(&str, &str); 0] = [];
        assert!(g(&["x1"], &["y1"], &none).is_unidirectional());
    }

    #[test]
    fn tree_examples() {
        let in_star = g(&["u1", "u2"], &["c"], &[("u1", "c"), ("u2", "c")]);
        assert_eq!(
            in_star.tree_alternating_equivalence(),
            Ok(TreeAlternation {
                all_pairs_alternating: true,
                degree_condition: true
            })
        );
        let path = g(&["a", "c"], &["b"], &[("a", "b"), ("b", "c")]);
        assert_eq!(
            path.tree_alternating_equivalence(),
            Ok(TreeAlternation {
                all_pairs_alternating: false,
                degree_condition: false
            })
        );
        let single = g(&["a"], &["b"], &[("a", "b")]);
        let r = single.tree_alternating_equivalence().unwrap();
        assert!(r.all_pairs_alternating && r.degree_condition);
        // a forest is not a tree
        let forest = g(&["a", "c"], &["b", "d"], &[("a", "b"), ("c", "d")]);
        assert!(forest.tree_alternating_equivalence().is_err());
        // neither is a cycle
        assert!(four_cycle().tree_alternating_equivalence().is_err());
    }

    fn blocks(max: usize) -> impl Strategy<Value = AdjacencyBlocks> {
        (1..=max, 1..=max).prop_flat_map(|(nx, ny)| {
            (
                proptest::collection::vec(any::<bool>(), nx * ny),
                proptest::collection::vec(any::<bool>(), nx * ny),
            )
                .prop_map(move |(f, b)| {
                    let mut forward = BinaryMatrix::zeros(nx, ny);
                    let mut backward = BinaryMatrix::zeros(ny, nx);
                    for i in 0..nx {
                        for j in 0..ny {
                            forward.set(i, j, f[i * ny + j]);
                            backward.set(j, i, b[i * ny + j]);
                        }
                    }
                    AdjacencyBlocks { forward, backward }
                })
        })
    }

    /// Random oriented tree on `n` vertices: parent pointers plus an
    /// orientation bit per edge; sides by depth parity.
    fn oriented_tree() -> impl Strategy<Value = Sdbg> {
        (2usize..=64)
            .prop_flat_map(|n| {
                (
                    proptest::collection::vec(any::<proptest::sample::Index>(), n - 1),
                    proptest::collection::vec(any::<bool>(), n - 1),
                )
            })
            .prop_map(|(parents, flips)| {
                let n = parents.len() + 1;
                let mut depth = vec![0usize; n];
                let mut edges = Vec::new();
                for v in 1..n {
                    let p = parents[v - 1].index(v);
                    depth[v] = depth[p] + 1;
                    edges.push(if flips[v - 1] { (p, v) } else { (v, p) });
                }
                let name = |v: usize| format!("v{v}");
                let x: Vec<String> = (0..n).filter(|&v| depth[v] % 2 == 0).map(name).collect();
                let y: Vec<String> = (0..n).filter(|&v| depth[v] % 2 == 1).map(name).collect();
                let arcs: Vec<(String, String)> =
                    edges.into_iter().map(|(a, b)| (name(a), name(b))).collect();
                Sdbg::new(&x, &y, &arcs).unwrap()
            })
    }

    proptest! {
        #[test]
        fn blocks_round_trip(b in blocks(6)) {
            let d = Sdbg::from_blocks_unnamed(b.clone()).unwrap();
            prop_assert_eq!(d.adjacency_blocks(), b.clone());
            let arcs: Vec<(String, String)> = d
                .arcs()
                .into_iter()
                .map(|(u, v)| (d.name(u).to_string(), d.name(v).to_string()))
                .collect();
            let rebuilt = Sdbg::new(d.x_names(), d.y_names(), &arcs).unwrap();
            prop_assert_eq!(rebuilt.adjacency_blocks(), b);
        }

        #[test]
        fn symmetric_blocks_iff_all_arcs_reversed(b in blocks(5)) {
            let d = Sdbg::from_blocks_unnamed(b.clone()).unwrap();
            let all_reversed = d.arcs().iter().all(|&(u, v)| d.has_arc(v, u));
            prop_assert_eq!(b.is_symmetric(), all_reversed);
        }

        #[test]
        fn tree_observation_holds(t in oriented_tree()) {
            let r = t.tree_alternating_equivalence().unwrap();
            prop_assert_eq!(r.all_pairs_alternating, r.degree_condition);
        }
    }
}
