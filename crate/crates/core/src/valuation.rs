//! Cofinite sets of integers, used as value sets of fractional ideals.

use crate::error::{Error, Result};

/// A set of integers containing every integer from `threshold` on, plus
/// finitely many sporadic values below it.
///
/// Stored in canonical form: sporadic values are sorted, distinct and
/// `< threshold`, and `threshold - 1` is never sporadic (it is folded into
/// the threshold). Two sets are equal iff their canonical forms are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValuationSet {
    sporadic: Vec<i64>,
    threshold: i64,
}

impl ValuationSet {
    pub fn new(mut sporadic: Vec<i64>, mut threshold: i64) -> Self {
        sporadic.retain(|&x| x < threshold);
        sporadic.sort_unstable();
        sporadic.dedup();
        while sporadic.last() == Some(&(threshold - 1)) {
            sporadic.pop();
            threshold -= 1;
        }
        ValuationSet {
            sporadic,
            threshold,
        }
    }

    /// All integers `≥ threshold`.
    pub fn from_threshold(threshold: i64) -> Self {
        Self::new(Vec::new(), threshold)
    }

    pub fn sporadic(&self) -> &[i64] {
        &self.sporadic
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    pub fn min(&self) -> i64 {
        self.sporadic.first().copied().unwrap_or(self.threshold)
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.threshold || self.sporadic.binary_search(&x).is_ok()
    }

    /// Members strictly below `bound`, ascending.
    pub fn elements_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (self.min()..bound).filter(move |&x| self.contains(x))
    }

    /// `k + self`.
    pub fn shifted(&self, k: i64) -> Self {
        ValuationSet {
            sporadic: self.sporadic.iter().map(|&x| x + k).collect(),
            threshold: self.threshold + k,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let threshold = self.threshold.min(other.threshold);
        let mut sporadic = self.sporadic.clone();
        sporadic.extend_from_slice(&other.sporadic);
        Self::new(sporadic, threshold)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        let hi = self.threshold.max(other.threshold);
        self.threshold >= other.threshold
            && self.elements_below(hi).all(|x| other.contains(x))
    }
}

/// `|outer \ inner|`: the length of `M₂/M₁` for fractional ideals with these
/// value sets.
pub fn length_between(inner: &ValuationSet, outer: &ValuationSet) -> Result<usize> {
    let lo = inner.min().min(outer.min());
    let hi = inner.threshold.max(outer.threshold);
    let mut count = 0;
    for x in lo..hi {
        match (inner.contains(x), outer.contains(x)) {
            (true, false) => return Err(Error::NotNested(x)),
            (false, true) => count += 1,
            _ => {}
        }
    }
    Ok(count)
}
