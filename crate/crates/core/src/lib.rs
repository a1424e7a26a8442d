//! Oriented bipartite graphs, bitournaments, oriented odd-even graphs and
//! the Goldbach graph.
//!
//! The crate is `no_std` and needs only `alloc`. Everything here is
//! deterministic and side-effect free; file formats, timing and the command
//! line live in the `oddeven` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bipartite;
pub mod dsu;
pub mod embedding;
mod error;
pub mod goldbach;
pub mod matrix;
pub mod oddeven;
pub mod primes;

pub use bipartite::{build_d_s, AdjacencyBlocks, MonotoneLabeling, Sdbg, Side, TreeAlternation};
pub use embedding::{embed_oriented_bipartite, verify_embedding, EmbeddingCheck, EmbeddingResult, Indexing};
pub use error::{Error, Result};
pub use goldbach::{build_goldbach, GoldbachGraph, Variant};
pub use matrix::{has_couple, BinaryMatrix, Couple};
pub use oddeven::{build_oriented_odd_even, OrientedOddEvenGraph};
pub use primes::{
    arithmetic_odd_set, arithmetic_odd_set_from, build_sieve, is_prime_64, odd_primes_upto, IndexStart, OddSet,
    OddSetKind, PrimeSieve,
};
