//! Binomial calculus behind Macaulay's characterization of Hilbert
//! functions: `i`-binomial expansions, the `c^<i>` operator and O-sequences.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)`, defined as zero whenever `b < 0` or `a < b` (in particular for
/// every negative `a`).
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    let k = b.min(a - b);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= a - j;
        acc /= j + 1;
    }
    acc
}

/// `c = C(c(i), i) + C(c(i-1), i-1) + ... + C(c(j), j)` with
/// `c(i) > c(i-1) > ... > c(j) >= j >= 1`. Parts are `(top, bottom)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialExpansion {
    pub i: u32,
    pub parts: Vec<(u64, u32)>,
}

impl BinomialExpansion {
    pub fn value(&self) -> BigInt {
        self.parts
            .iter()
            .map(|&(top, k)| binomial(top as i64, k as i64))
            .sum()
    }

    /// Lexicographic comparison of the top sequences, which agrees with
    /// comparing the expanded integers.
    pub fn lex_cmp(&self, other: &BinomialExpansion) -> Ordering {
        let a = self.parts.iter().map(|p| p.0);
        let b = other.parts.iter().map(|p| p.0);
        a.cmp(b)
    }
}

/// Largest `a >= k` with `C(a, k) <= c`, found by galloping then bisection.
fn largest_top(c: &BigInt, k: u32) -> u64 {
    let k64 = k as u64;
    let fits = |a: u64| binomial(a as i64, k as i64) <= *c;
    let mut lo = k64;
    let mut step = 1u64;
    let mut hi = k64 + step;
    while fits(hi) {
        lo = hi;
        step *= 2;
        hi = k64 + step;
    }
    // C(lo, k) <= c < C(hi, k)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The greedy `i`-binomial expansion of a positive integer. Returns `None`
/// for `c <= 0` or `i == 0`.
pub fn i_binomial_expansion(c: &BigInt, i: u32) -> Option<BinomialExpansion> {
    if *c <= BigInt::zero() || i == 0 {
        return None;
    }
    let mut rest = c.clone();
    let mut parts = Vec::new();
    let mut k = i;
    while rest > BigInt::zero() && k >= 1 {
        let top = largest_top(&rest, k);
        rest -= binomial(top as i64, k as i64);
        parts.push((top, k));
        k -= 1;
    }
    debug_assert!(rest.is_zero());
    Some(BinomialExpansion { i, parts })
}

/// `c^<i>`: shift every part `(c(k), k)` to `(c(k)+1, k+1)`. `0^<i> = 0`.
pub fn macaulay_step(c: &BigInt, i: u32) -> BigInt {
    match i_binomial_expansion(c, i) {
        None => BigInt::zero(),
        Some(e) => e
            .parts
            .iter()
            .map(|&(top, k)| binomial(top as i64 + 1, k as i64 + 1))
            .sum(),
    }
}

/// First index at which `seq` stops being an O-sequence: `0` when
/// `seq[0] != 1`, otherwise the first `i + 1 >= 2` with
/// `seq[i+1] > seq[i]^<i>`. Values after a zero must be zero.
pub fn o_sequence_violation(seq: &[BigInt]) -> Option<usize> {
    let first = seq.first()?;
    if !first.is_one() {
        return Some(0);
    }
    for i in 1..seq.len().saturating_sub(1) {
        if seq[i + 1] > macaulay_step(&seq[i], i as u32) {
            return Some(i + 1);
        }
    }
    None
}

pub fn is_o_sequence(seq: &[BigInt]) -> bool {
    o_sequence_violation(seq).is_none()
}

/// Both sides of `C(m+d+1+D, d+1) - C(m+d+1, d+1) = sum_{i=1..D} C(m+d+i, d)`.
/// Panics if they differ.
pub fn lemma_1_4(d: i64, big_d: i64, m: i64) -> (BigInt, BigInt) {
    assert!(d >= 0 && big_d >= 1, "requires d >= 0 and D >= 1");
    let left = binomial(m + d + 1 + big_d, d + 1) - binomial(m + d + 1, d + 1);
    let right: BigInt = (1..=big_d).map(|i| binomial(m + d + i, d)).sum();
    assert_eq!(left, right, "binomial telescoping identity failed");
    (left, right)
}
