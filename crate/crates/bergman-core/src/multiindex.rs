//! Exponent vectors ordered graded-lexicographically.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A vector of nonnegative exponents, one per variable.
///
/// The derived ordering is graded lexicographic: indices are compared by
/// total degree first, then entrywise from the first coordinate. This is
/// the one monomial order used everywhere, so that basis enumeration and
/// term iteration are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    /// All-zero index of the given length.
    pub fn zero(len: usize) -> Self {
        MultiIndex(vec![0; len])
    }

    /// Standard unit index `e_j`. Panics if `j >= len`.
    pub fn unit(len: usize, j: usize) -> Self {
        let mut e = vec![0; len];
        e[j] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, j: usize) -> u32 {
        self.0[j]
    }

    /// Total degree `|α|`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum. Panics on length mismatch.
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, `None` if any entry would go negative.
    pub fn try_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(MultiIndex)
    }

    /// Componentwise partial order `self ≤ other`.
    pub fn leq(&self, other: &MultiIndex) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Copy with entry `j` bumped by `delta` (may be negative; panics on
    /// underflow).
    pub fn with_shift(&self, j: usize, delta: i64) -> MultiIndex {
        let mut e = self.0.clone();
        e[j] = (e[j] as i64 + delta).try_into().expect("negative exponent");
        MultiIndex(e)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All indices of length `nvars` with total degree at most `max_total`,
/// in ascending graded-lex order.
pub fn indices_up_to(nvars: usize, max_total: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    collect(&mut cur, 0, max_total, &mut out);
    out.sort();
    out
}

fn collect(cur: &mut Vec<u32>, pos: usize, budget: u32, out: &mut Vec<MultiIndex>) {
    if pos == cur.len() {
        out.push(MultiIndex(cur.clone()));
        return;
    }
    for e in 0..=budget {
        cur[pos] = e;
        collect(cur, pos + 1, budget - e, out);
    }
    cur[pos] = 0;
}

/// Binomial coefficient as an exact `u64`; sufficient for every dimension
/// count in this crate.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        // degree dominates
        assert!(MultiIndex::new(vec![2, 0]) > MultiIndex::new(vec![0, 1]));
        // within a degree, compare entrywise from the left
        assert!(MultiIndex::new(vec![0, 2]) < MultiIndex::new(vec![1, 1]));
        assert!(MultiIndex::new(vec![1, 1]) < MultiIndex::new(vec![2, 0]));
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let all = indices_up_to(2, 3);
        assert_eq!(all.len() as u64, binomial(2 + 3, 2));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], MultiIndex::zero(2));
    }

    #[test]
    fn componentwise_ops() {
        let a = MultiIndex::new(vec![2, 1]);
        let b = MultiIndex::new(vec![1, 1]);
        assert_eq!(a.add(&b), MultiIndex::new(vec![3, 2]));
        assert_eq!(a.try_sub(&b), Some(MultiIndex::new(vec![1, 0])));
        assert_eq!(b.try_sub(&a), None);
        assert!(b.leq(&a));
        assert!(!a.leq(&b));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
    }
}
