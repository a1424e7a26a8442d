//! Representing an oriented bipartite graph as an oriented odd-even graph.
//!
//! X vertices are indexed `b_0, b_2, ...` and Y vertices `b_1, b_3, ...`;
//! vertex `b_i` is sent to `f(b_i) = 10^(i+2) + 1 + (-1)^(i+1)`, so X maps
//! to powers of ten and Y to powers of ten plus two. The odd set collects
//! the half-sum and half-difference of every arc. Values outgrow 64 bits
//! quickly, hence big integers throughout.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::bipartite::Sdbg;
use crate::error::{Error, Result};

/// The `b_i` index used for `f`: positions within X and within Y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indexing {
    /// `x_order[k]` is the X-local index of `b_{2k}`.
    pub x_order: Vec<usize>,
    /// `y_order[k]` is the Y-local index of `b_{2k+1}`.
    pub y_order: Vec<usize>,
}

impl Indexing {
    /// Input order on both sides.
    pub fn natural(graph: &Sdbg) -> Self {
        Indexing {
            x_order: (0..graph.x_len()).collect(),
            y_order: (0..graph.y_len()).collect(),
        }
    }

    fn validate(&self, graph: &Sdbg) -> Result<()> {
        let is_perm = |order: &[usize], n: usize| {
            order.len() == n && order.iter().collect::<BTreeSet<_>>().len() == n && order.iter().all(|&i| i < n)
        };
        if is_perm(&self.x_order, graph.x_len()) && is_perm(&self.y_order, graph.y_len()) {
            Ok(())
        } else {
            Err(Error::argument("indexing must permute each partite set"))
        }
    }
}

/// `f(b_i) = 10^(i+2) + 1 + (-1)^(i+1)`.
pub fn vertex_image(i: u32) -> BigUint {
    let power: BigUint = Pow::pow(BigUint::from(10u32), i + 2);
    if i % 2 == 0 {
        power
    } else {
        power + 2u32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingResult {
    /// `f` per global vertex index of the source graph.
    pub images: Vec<BigUint>,
    /// `b_i` index per global vertex.
    pub b_index: Vec<u32>,
    /// Image of `f`, ascending.
    pub even_set: Vec<BigUint>,
    pub odd_set: BTreeSet<BigUint>,
    /// Every arc `u -> v` has `f(u) < f(v)`.
    pub orientation_preserved: bool,
}

pub fn embed_oriented_bipartite(graph: &Sdbg, indexing: &Indexing) -> Result<EmbeddingResult> {
    if !graph.is_oriented() {
        return Err(Error::structure("embedding needs an oriented bipartite graph"));
    }
    indexing.validate(graph)?;
    let nx = graph.x_len();
    let mut b_index = alloc::vec![0u32; graph.vertex_count()];
    for (k, &xi) in indexing.x_order.iter().enumerate() {
        b_index[xi] = 2 * k as u32;
    }
    for (k, &yj) in indexing.y_order.iter().enumerate() {
        b_index[nx + yj] = 2 * k as u32 + 1;
    }
    let images: Vec<BigUint> = b_index.iter().map(|&i| vertex_image(i)).collect();

    let mut odd_set = BTreeSet::new();
    let mut orientation_preserved = true;
    for (u, v) in graph.arcs() {
        let (fu, fv) = (&images[u], &images[v]);
        odd_set.insert((fu + fv) >> 1u32);
        let diff = if fv >= fu { fv - fu } else { fu - fv };
        odd_set.insert(diff >> 1u32);
        orientation_preserved &= fu < fv;
    }
    let mut even_set = images.clone();
    even_set.sort();
    Ok(EmbeddingResult {
        images,
        b_index,
        even_set,
        odd_set,
        orientation_preserved,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EmbeddingCheck {
    pub underlying_isomorphic: bool,
    pub oriented_isomorphic: bool,
    /// Edges of the source graph with no counterpart (by vertex name).
    pub missing_edges: Vec<(String, String)>,
    /// Edges of the odd-even graph with no preimage (by vertex name).
    pub spurious_edges: Vec<(String, String)>,
}

/// Rebuilds `->G_A(O)` from the embedding and compares it with `graph`
/// through `f`.
pub fn verify_embedding(graph: &Sdbg, result: &EmbeddingResult) -> EmbeddingCheck {
    let n = graph.vertex_count();
    let is_odd_member = |value: &BigUint| value.bit(0) && result.odd_set.contains(value);

    let mut missing_edges = Vec::new();
    let mut spurious_edges = Vec::new();
    let mut oriented = true;
    for u in 0..n {
        for v in u + 1..n {
            let (fu, fv) = (&result.images[u], &result.images[v]);
            let (lo, hi) = if fu < fv { (u, v) } else { (v, u) };
            let (flo, fhi) = (&result.images[lo], &result.images[hi]);
            let sum = flo + fhi;
            let diff = fhi - flo;
            // both must be even for the halves to be integers
            let in_image = !(sum.bit(0) || diff.bit(0))
                && is_odd_member(&(&sum >> 1u32))
                && is_odd_member(&(&diff >> 1u32));
            let in_source = graph.has_arc(u, v) || graph.has_arc(v, u);
            let pair = || (graph.name(u).to_string(), graph.name(v).to_string());
            match (in_source, in_image) {
                (true, false) => missing_edges.push(pair()),
                (false, true) => spurious_edges.push(pair()),
                (true, true) => oriented &= graph.has_arc(lo, hi),
                (false, false) => {}
            }
        }
    }
    let underlying_isomorphic = missing_edges.is_empty() && spurious_edges.is_empty();
    EmbeddingCheck {
        underlying_isomorphic,
        oriented_isomorphic: underlying_isomorphic && oriented,
        missing_edges,
        spurious_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn images_follow_the_formula() {
        assert_eq!(vertex_image(0), big(100));
        assert_eq!(vertex_image(1), big(1002));
        assert_eq!(vertex_image(2), big(10_000));
        assert_eq!(vertex_image(3), big(100_002));
        // past 64 bits
        let f20 = vertex_image(20);
        assert_eq!(f20.to_string(), "10000000000000000000000");
    }

    #[test]
    fn single_arc() {
        let g = Sdbg::new(&["x1"], &["y1"], &[("x1", "y1")]).unwrap();
        let r = embed_oriented_bipartite(&g, &Indexing::natural(&g)).unwrap();
        assert_eq!(r.images, vec![big(100), big(1002)]);
        assert_eq!(r.odd_set, [big(451), big(551)].into_iter().collect());
        assert!(r.orientation_preserved);
        let check = verify_embedding(&g, &r);
        assert!(check.underlying_isomorphic && check.oriented_isomorphic);
        assert!(check.spurious_edges.is_empty());
    }

    #[test]
    fn no_arcs() {
        let none: [(&str, &str); 0] = [];
        let g = Sdbg::new(&["x1"], &["y1"], &none).unwrap();
        let r = embed_oriented_bipartite(&g, &Indexing::natural(&g)).unwrap();
        assert!(r.odd_set.is_empty());
        let check = verify_embedding(&g, &r);
        assert!(check.underlying_isomorphic && check.oriented_isomorphic);
    }

    #[test]
    fn directed_cycle_loses_orientation() {
        let g = Sdbg::new(
            &["x1", "x2"],
            &["y1", "y2"],
            &[("x1", "y1"), ("y1", "x2"), ("x2", "y2"), ("y2", "x1")],
        )
        .unwrap();
        let r = embed_oriented_bipartite(&g, &Indexing::natural(&g)).unwrap();
        assert!(!r.orientation_preserved);
        let check = verify_embedding(&g, &r);
        assert!(check.underlying_isomorphic);
        assert!(!check.oriented_isomorphic);
        assert!(check.spurious_edges.is_empty());
    }

    #[test]
    fn indexing_controls_orientation() {
        // y1 -> x1 descends under the natural indexing (1002 > 100) but the
        // source graph is still reproduced as an undirected graph.
        let g = Sdbg::new(&["x1", "x2"], &["y1"], &[("y1", "x1"), ("x2", "y1")]).unwrap();
        let natural = embed_oriented_bipartite(&g, &Indexing::natural(&g)).unwrap();
        assert!(!natural.orientation_preserved);
        // x1 = b_2 = 10^4 now sits above y1 = b_1 = 1002
        let swapped = Indexing {
            x_order: vec![1, 0],
            y_order: vec![0],
        };
        let r = embed_oriented_bipartite(&g, &swapped).unwrap();
        assert!(r.orientation_preserved);
        assert!(verify_embedding(&g, &r).oriented_isomorphic);
    }

    #[test]
    fn rejects_bad_input() {
        let both = Sdbg::new(&["x1"], &["y1"], &[("x1", "y1"), ("y1", "x1")]).unwrap();
        assert!(embed_oriented_bipartite(&both, &Indexing::natural(&both)).is_err());
        let g = Sdbg::new(&["x1"], &["y1"], &[("x1", "y1")]).unwrap();
        let bad = Indexing {
            x_order: vec![0, 0],
            y_order: vec![0],
        };
        assert!(embed_oriented_bipartite(&g, &bad).is_err());
    }

    #[test]
    fn images_are_injective_and_even() {
        let images: Vec<BigUint> = (0..40).map(vertex_image).collect();
        let distinct: BTreeSet<&BigUint> = images.iter().collect();
        assert_eq!(distinct.len(), images.len());
        assert!(images.iter().all(|v| !v.bit(0)));
    }
}
