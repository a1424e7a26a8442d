//! Prime generation and primality testing.
//!
//! [`PrimeSieve`] is a bit-packed sieve of Eratosthenes over `[0, bound]`.
//! [`is_prime_64`] is a deterministic Miller-Rabin test that is exact for
//! every `u64`. [`OddSet`] is the finite odd set an odd-even graph is built
//! from.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Bit-packed primality flags for every integer in `[0, bound]`.
///
/// The sieve is immutable once built; growing it means building a new one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSieve {
    bound: u64,
    words: Vec<u64>,
}

impl PrimeSieve {
    /// Builds a sieve covering `[0, bound]`. `bound` must be at least 2.
    pub fn new(bound: u64) -> Result<Self> {
        if bound < 2 {
            return Err(Error::argument("sieve bound must be at least 2"));
        }
        let len = bound as usize + 1;
        // Start with every flag set, then clear 0, 1 and composites.
        let mut words = vec![u64::MAX; len.div_ceil(64)];
        let tail = len % 64;
        if tail != 0 {
            *words.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        words[0] &= !0b11;

        let mut p = 2usize;
        while p * p < len {
            if words[p / 64] >> (p % 64) & 1 == 1 {
                let mut multiple = p * p;
                while multiple < len {
                    words[multiple / 64] &= !(1u64 << (multiple % 64));
                    multiple += p;
                }
            }
            p += 1;
        }
        Ok(PrimeSieve { bound, words })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Primality of `n`; queries above the bound are an error.
    pub fn is_prime(&self, n: u64) -> Result<bool> {
        if n > self.bound {
            return Err(Error::OutOfRange {
                value: n,
                bound: self.bound,
            });
        }
        Ok(self.flag(n))
    }

    /// `n` is an odd prime (so 2 is excluded).
    pub fn is_odd_prime(&self, n: u64) -> Result<bool> {
        Ok(n != 2 && self.is_prime(n)?)
    }

    /// Unchecked-by-result lookup for hot loops; panics above the bound.
    #[inline]
    pub(crate) fn flag(&self, n: u64) -> bool {
        assert!(
            n <= self.bound,
            "sieve query {n} exceeds bound {}",
            self.bound
        );
        self.words[(n / 64) as usize] >> (n % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn odd_prime(&self, n: u64) -> bool {
        n & 1 == 1 && self.flag(n)
    }

    /// Number of primes `<= n`.
    pub fn count_upto(&self, n: u64) -> Result<u64> {
        if n > self.bound {
            return Err(Error::OutOfRange {
                value: n,
                bound: self.bound,
            });
        }
        let full = (n + 1) / 64;
        let mut count: u64 = self.words[..full as usize]
            .iter()
            .map(|w| u64::from(w.count_ones()))
            .sum();
        let rest = (n + 1) % 64;
        if rest != 0 {
            count += u64::from((self.words[full as usize] & ((1u64 << rest) - 1)).count_ones());
        }
        Ok(count)
    }

    /// All primes in `[0, bound]`, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (0..=self.bound).filter(move |&n| self.flag(n))
    }
}

/// Builds a sieve over `[0, bound]`.
pub fn build_sieve(bound: u64) -> Result<PrimeSieve> {
    PrimeSieve::new(bound)
}

/// Where the index `k` of an arithmetic odd set `a*k + b` starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum IndexStart {
    Zero,
    #[default]
    One,
}

impl IndexStart {
    fn first(self) -> u64 {
        match self {
            IndexStart::Zero => 0,
            IndexStart::One => 1,
        }
    }
}

/// How an [`OddSet`] was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum OddSetKind {
    Explicit,
    Progression { a: u64, b: u64, start: IndexStart },
    OddPrimes,
    OddPrimesWithOne,
}

/// A finite, sorted set of positive odd integers.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OddSet {
    kind: OddSetKind,
    /// Truncation bound for intensional kinds (`None` for explicit sets).
    bound: Option<u64>,
    elements: Vec<u64>,
}

impl OddSet {
    /// An explicit odd set; duplicates are merged, even values and 0 rejected.
    pub fn explicit(values: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut elements: Vec<u64> = values.into_iter().collect();
        if let Some(bad) = elements.iter().find(|&&v| v % 2 == 0) {
            return Err(Error::argument(alloc::format!(
                "odd set element {bad} is not a positive odd integer"
            )));
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(OddSet {
            kind: OddSetKind::Explicit,
            bound: None,
            elements,
        })
    }

    pub fn empty() -> Self {
        OddSet {
            kind: OddSetKind::Explicit,
            bound: None,
            elements: Vec::new(),
        }
    }

    pub(crate) fn from_sorted(kind: OddSetKind, bound: Option<u64>, elements: Vec<u64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.iter().all(|v| v % 2 == 1));
        OddSet {
            kind,
            bound,
            elements,
        }
    }

    pub fn kind(&self) -> &OddSetKind {
        &self.kind
    }

    pub fn bound(&self) -> Option<u64> {
        self.bound
    }

    pub fn contains(&self, value: u64) -> bool {
        self.elements.binary_search(&value).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }

    /// Largest element, if any.
    pub fn max(&self) -> Option<u64> {
        self.elements.last().copied()
    }
}

/// Odd primes `<= bound`, with 1 prepended when `include_one` is set.
pub fn odd_primes_upto(bound: u64, include_one: bool) -> Result<OddSet> {
    if bound < 3 {
        return Err(Error::argument("odd prime bound must be at least 3"));
    }
    let sieve = PrimeSieve::new(bound)?;
    Ok(odd_primes_from_sieve(&sieve, bound, include_one))
}

pub(crate) fn odd_primes_from_sieve(sieve: &PrimeSieve, bound: u64, include_one: bool) -> OddSet {
    let mut elements = Vec::new();
    if include_one {
        elements.push(1);
    }
    elements.extend((3..=bound).step_by(2).filter(|&n| sieve.flag(n)));
    let kind = if include_one {
        OddSetKind::OddPrimesWithOne
    } else {
        OddSetKind::OddPrimes
    };
    OddSet::from_sorted(kind, Some(bound), elements)
}

/// `{a*k + b <= bound : k >= 1}` with `a` even and `b` odd.
pub fn arithmetic_odd_set(a: u64, b: u64, bound: u64) -> Result<OddSet> {
    arithmetic_odd_set_from(a, b, bound, IndexStart::One)
}

/// [`arithmetic_odd_set`] with an explicit first index.
pub fn arithmetic_odd_set_from(a: u64, b: u64, bound: u64, start: IndexStart) -> Result<OddSet> {
    if a < 2 || a % 2 != 0 {
        return Err(Error::argument(alloc::format!(
            "progression step a={a} must be even and at least 2"
        )));
    }
    if b % 2 != 1 {
        return Err(Error::argument(alloc::format!(
            "progression offset b={b} must be odd"
        )));
    }
    if bound < b {
        return Err(Error::argument(alloc::format!(
            "bound {bound} is below the offset b={b}"
        )));
    }
    let elements = (start.first()..)
        .map(|k| a * k + b)
        .take_while(|&v| v <= bound)
        .collect();
    Ok(OddSet::from_sorted(
        OddSetKind::Progression { a, b, start },
        Some(bound),
        elements,
    ))
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    if m <= u32::MAX as u64 {
        return a * b % m;
    }
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for every 64-bit integer.
///
/// Miller-Rabin with the first twelve primes as witnesses, which has no
/// strong pseudoprimes below 3.3 * 10^24.
pub fn is_prime_64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    // no factor up to 37, so any composite is at least 41^2
    if n < 41 * 41 {
        return true;
    }
    let shift = (n - 1).trailing_zeros();
    let odd_part = (n - 1) >> shift;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, odd_part, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..shift {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn trial_division(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn small_sieves() {
        let s = build_sieve(10).unwrap();
        assert_eq!(s.primes().collect::<Vec<_>>(), vec![2, 3, 5, 7]);
        let s = build_sieve(2).unwrap();
        assert_eq!(s.primes().collect::<Vec<_>>(), vec![2]);
        let s = build_sieve(30).unwrap();
        assert_eq!(s.primes().count(), 10);
        assert_eq!(s.count_upto(30).unwrap(), 10);
        assert!(build_sieve(1).is_err());
        assert!(build_sieve(0).is_err());
    }

    #[test]
    fn sieve_rejects_queries_past_bound() {
        let s = build_sieve(100).unwrap();
        assert_eq!(
            s.is_prime(101),
            Err(Error::OutOfRange {
                value: 101,
                bound: 100
            })
        );
        assert!(s.count_upto(101).is_err());
        assert_eq!(s.is_prime(97), Ok(true));
    }

    #[test]
    fn sieve_matches_trial_division_to_1e5() {
        let s = build_sieve(100_000).unwrap();
        for n in 0..=100_000 {
            assert_eq!(s.is_prime(n).unwrap(), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn sieve_counts_across_word_boundaries() {
        let s = build_sieve(1000).unwrap();
        let mut running = 0;
        for n in 0..=1000 {
            if trial_division(n) {
                running += 1;
            }
            assert_eq!(s.count_upto(n).unwrap(), running);
        }
    }

    #[test]
    fn odd_prime_sets() {
        assert_eq!(odd_primes_upto(10, false).unwrap().as_slice(), &[3, 5, 7]);
        let with_one = odd_primes_upto(10, true).unwrap();
        assert_eq!(with_one.as_slice(), &[1, 3, 5, 7]);
        assert_eq!(with_one.kind(), &OddSetKind::OddPrimesWithOne);
        assert_eq!(odd_primes_upto(3, false).unwrap().as_slice(), &[3]);
        assert!(odd_primes_upto(2, false).is_err());
    }

    #[test]
    fn progressions() {
        assert_eq!(
            arithmetic_odd_set(4, 1, 20).unwrap().as_slice(),
            &[5, 9, 13, 17]
        );
        assert_eq!(arithmetic_odd_set(6, 1, 20).unwrap().as_slice(), &[7, 13, 19]);
        assert_eq!(arithmetic_odd_set(2, 1, 3).unwrap().as_slice(), &[3]);
        assert_eq!(
            arithmetic_odd_set_from(4, 1, 20, IndexStart::Zero)
                .unwrap()
                .as_slice(),
            &[1, 5, 9, 13, 17]
        );
        assert!(arithmetic_odd_set(3, 1, 20).is_err());
        assert!(arithmetic_odd_set(0, 1, 20).is_err());
        assert!(arithmetic_odd_set(4, 2, 20).is_err());
        assert!(arithmetic_odd_set(4, 21, 20).is_err());
    }

    #[test]
    fn explicit_sets_reject_evens() {
        assert!(OddSet::explicit([3, 4]).is_err());
        assert!(OddSet::explicit([0]).is_err());
        let s = OddSet::explicit([7, 3, 7]).unwrap();
        assert_eq!(s.as_slice(), &[3, 7]);
        assert!(s.contains(7) && !s.contains(5));
    }

    #[test]
    fn miller_rabin_examples() {
        assert!(!is_prime_64(723));
        assert!(is_prime_64(2));
        assert!(!is_prime_64(0) && !is_prime_64(1));
        // 14! + 19
        assert_eq!(is_prime_64(87_178_291_219), trial_division(87_178_291_219));
        assert!(is_prime_64(18_446_744_073_709_551_557)); // largest 64-bit prime
        assert!(!is_prime_64(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(!is_prime_64(u64::MAX));
    }

    #[test]
    fn miller_rabin_below_ten_thousand() {
        for n in 0..10_000 {
            assert_eq!(is_prime_64(n), trial_division(n), "n = {n}");
        }
        // 32-bit and wide multiplication paths around the boundary
        for n in [4_294_967_291, 4_294_967_295, 4_294_967_311, 4_294_967_297] {
            assert_eq!(is_prime_64(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn miller_rabin_agrees_with_sieve_to_1e6() {
        let s = build_sieve(1_000_000).unwrap();
        for n in 0..=1_000_000 {
            assert_eq!(is_prime_64(n), s.flag(n), "n = {n}");
        }
    }

    proptest::proptest! {
        #[test]
        fn progression_is_increasing_and_congruent(half_a in 1u64..30, half_b in 0u64..20, bound in 41u64..2000) {
            let (a, b) = (2 * half_a, 2 * half_b + 1);
            let set = arithmetic_odd_set(a, b, bound).unwrap();
            proptest::prop_assert!(set.as_slice().windows(2).all(|w| w[0] < w[1]));
            proptest::prop_assert!(set.iter().all(|v| v % a == b % a && v % 2 == 1 && v <= bound));
        }

        #[test]
        fn miller_rabin_matches_trial_division(n in 1_000_000_000u64..1_000_100_000) {
            proptest::prop_assert_eq!(is_prime_64(n), trial_division(n));
        }
    }
}
