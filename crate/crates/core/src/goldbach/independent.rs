//! Independent sets of consecutive even numbers built from factorials.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::primes::is_prime_64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CertificateMethod {
    /// Deterministic 64-bit primality on every half-sum and half-difference.
    Exact64,
    /// Each half-sum `F/2 + i + j` is shown divisible by `i + j`, with the
    /// division checked in big integers.
    DivisorCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSetReport {
    pub k: usize,
    /// `m` with base `m!`.
    pub factorial_of: u64,
    pub members: Vec<BigUint>,
    pub method: CertificateMethod,
    pub pairs_checked: usize,
    /// Pairs found adjacent (empty when the set is independent).
    pub adjacent_pairs: Vec<(usize, usize)>,
}

impl IndependentSetReport {
    pub fn independent(&self) -> bool {
        self.adjacent_pairs.is_empty()
    }
}

fn factorial(m: u64) -> BigUint {
    (2..=m).fold(BigUint::one(), |acc, i| acc * i)
}

/// `{(2n+2)! + 2, (2n+2)! + 4, ..., (2n+2)! + 2(n+1)}`: `n + 1` elements.
pub fn factorial_block(n: u64) -> Vec<BigUint> {
    let base = factorial(2 * n + 2);
    (1..=n + 1).map(|i| &base + 2 * i).collect()
}

/// `k` consecutive even numbers `(2k+2)! + 2, ..., (2k+2)! + 2k`, with a
/// pairwise non-adjacency certificate.
pub fn consecutive_independent_set(k: usize) -> Result<IndependentSetReport> {
    if k == 0 {
        return Err(Error::argument("k must be at least 1"));
    }
    let m = 2 * k as u64 + 2;
    let base = factorial(m);
    let members: Vec<BigUint> = (1..=k as u64).map(|i| &base + 2 * i).collect();
    let small: Option<Vec<u64>> = members.iter().map(ToPrimitive::to_u64).collect();

    let mut pairs_checked = 0;
    let mut adjacent_pairs = Vec::new();
    let method = match small {
        Some(values) => {
            for i in 0..k {
                for j in i + 1..k {
                    pairs_checked += 1;
                    if adjacent_u64(values[i], values[j]) {
                        adjacent_pairs.push((i, j));
                    }
                }
            }
            CertificateMethod::Exact64
        }
        None => {
            let half_base: BigUint = &base >> 1u32;
            for i in 1..=k as u64 {
                for j in i + 1..=k as u64 {
                    pairs_checked += 1;
                    let half_sum = &half_base + i + j;
                    let d = BigUint::from(i + j);
                    let composite = d > BigUint::one() && d < half_sum && (&half_sum % &d).is_zero();
                    if !composite {
                        adjacent_pairs.push((i as usize - 1, j as usize - 1));
                    }
                }
            }
            CertificateMethod::DivisorCertificate
        }
    };
    Ok(IndependentSetReport {
        k,
        factorial_of: m,
        members,
        method,
        pairs_checked,
        adjacent_pairs,
    })
}

fn odd_prime(x: u64) -> bool {
    x % 2 == 1 && is_prime_64(x)
}

fn adjacent_u64(a: u64, b: u64) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    // (lo + hi) / 2 without overflow
    let half_sum = lo / 2 + hi / 2;
    lo != hi && odd_prime(half_sum) && odd_prime((hi - lo) / 2)
}

/// Pairwise non-adjacency in the Goldbach graph for even 64-bit values.
pub fn is_independent_u64(members: &[u64]) -> bool {
    members
        .iter()
        .enumerate()
        .all(|(i, &a)| members[i + 1..].iter().all(|&b| !adjacent_u64(a, b)))
}
