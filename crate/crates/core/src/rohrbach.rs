//! Rohrbach numbers: the longest prefix `0, 1, …, n-1` that the pairwise
//! sums of an `r`-element set can cover.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;

/// Largest `r` accepted by [`rohrbach_number`].
pub const MAX_R: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RohrbachWitness {
    pub r: usize,
    pub value: u64,
    /// Lexicographically least set attaining `value`, ascending.
    pub witness: Vec<u64>,
}

/// `n(A)`: the least integer missing from `A + A` (0 when `0 ∉ A`).
pub fn n_of_set(a: &[i64]) -> Result<u64> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&x) = a.iter().find(|&&x| x < 0) {
        return Err(Error::OutOfRange {
            what: "set element",
            value: x,
            min: 0,
            max: i64::MAX,
        });
    }
    let max = *a.iter().max().unwrap() as usize;
    let mut sums = vec![false; 2 * max + 2];
    for &x in a {
        for &y in a {
            sums[(x + y) as usize] = true;
        }
    }
    Ok(sums.iter().take_while(|&&s| s).count() as u64)
}

/// Exhaustive search for `n̄(r)` with `1 ≤ r ≤ 10`.
///
/// Only sets `{0, 1, a₃, …}` whose every element is at most the `n` of the
/// preceding prefix are visited: an element beyond that can never cover the
/// first missing sum, and every optimal set has this shape. Prefixes of four
/// elements are searched in parallel and reduced in lexicographic order, so
/// the witness does not depend on scheduling.
pub fn rohrbach_number(r: usize) -> Result<RohrbachWitness> {
    if !(1..=MAX_R).contains(&r) {
        return Err(Error::OutOfRange {
            what: "r",
            value: r as i64,
            min: 1,
            max: MAX_R as i64,
        });
    }
    if r == 1 {
        return Ok(RohrbachWitness {
            r,
            value: 1,
            witness: vec![0],
        });
    }

    let split = r.min(4);
    let mut prefixes = Vec::new();
    collect_prefixes(&mut Node::start(), split, &mut prefixes);

    let results = par::map(&prefixes, |prefix| {
        let mut node = prefix.clone();
        let mut best = Best::default();
        search(&mut node, r, &mut best);
        best
    });
    let best = results
        .into_iter()
        .fold(Best::default(), |acc, b| if b.value > acc.value { b } else { acc });
    Ok(RohrbachWitness {
        r,
        value: best.value,
        witness: best.witness,
    })
}

/// Memoised [`rohrbach_number`].
pub fn cached(r: usize) -> Result<&'static RohrbachWitness> {
    static TABLE: [OnceLock<RohrbachWitness>; MAX_R + 1] = [const { OnceLock::new() }; MAX_R + 1];
    let slot = TABLE.get(r).ok_or(Error::OutOfRange {
        what: "r",
        value: r as i64,
        min: 1,
        max: MAX_R as i64,
    })?;
    if let Some(w) = slot.get() {
        return Ok(w);
    }
    let w = rohrbach_number(r)?;
    Ok(slot.get_or_init(|| w))
}

/// A lower bound for `n̄(r)` valid for every `r ≥ 1`, from the sets
/// `{0, …, m} ∪ {2m, 3m, …}` with `r` elements.
pub fn lower_bound(r: usize) -> u64 {
    (1..r.max(2))
        .map(|m| {
            let mut set: Vec<i64> = (0..=m as i64).collect();
            let mut k = 2;
            while set.len() < r {
                set.push(k * m as i64);
                k += 1;
            }
            set.truncate(r);
            n_of_set(&set).expect("non-empty, non-negative")
        })
        .max()
        .unwrap_or(1)
}

#[derive(Clone)]
struct Node {
    elements: Vec<u64>,
    // Bit k set iff k is in the element set / the sum set. Sums stay below 128
    // since every element is below n̄(10) < 64.
    element_mask: u128,
    sums: u128,
}

impl Node {
    fn start() -> Self {
        Node {
            elements: vec![0, 1],
            element_mask: 0b11,
            sums: 0b111,
        }
    }

    fn coverage(&self) -> u64 {
        self.sums.trailing_ones() as u64
    }

    fn push(&mut self, a: u64) -> (u128, u128) {
        let saved = (self.element_mask, self.sums);
        self.element_mask |= 1 << a;
        self.sums |= self.element_mask << a;
        self.elements.push(a);
        saved
    }

    fn pop(&mut self, saved: (u128, u128)) {
        self.elements.pop();
        (self.element_mask, self.sums) = saved;
    }

    fn candidates(&self) -> std::ops::RangeInclusive<u64> {
        self.elements.last().unwrap() + 1..=self.coverage()
    }
}

#[derive(Default)]
struct Best {
    value: u64,
    witness: Vec<u64>,
}

fn collect_prefixes(node: &mut Node, len: usize, out: &mut Vec<Node>) {
    if node.elements.len() == len {
        out.push(node.clone());
        return;
    }
    for a in node.candidates() {
        let saved = node.push(a);
        collect_prefixes(node, len, out);
        node.pop(saved);
    }
}

fn search(node: &mut Node, r: usize, best: &mut Best) {
    if node.elements.len() == r {
        let n = node.coverage();
        if n > best.value {
            best.value = n;
            best.witness = node.elements.clone();
        }
        return;
    }
    for a in node.candidates() {
        let saved = node.push(a);
        search(node, r, best);
        node.pop(saved);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_of_small_sets() {
        assert_eq!(n_of_set(&[0]).unwrap(), 1);
        assert_eq!(n_of_set(&[0, 1]).unwrap(), 3);
        assert_eq!(n_of_set(&[0, 1, 3, 5, 6]).unwrap(), 13);
        assert_eq!(n_of_set(&[1, 2]).unwrap(), 0);
        assert_eq!(n_of_set(&[]), Err(Error::EmptySet));
        assert!(n_of_set(&[0, -1]).is_err());
    }

    #[test]
    fn small_rohrbach_numbers() {
        let w = rohrbach_number(1).unwrap();
        assert_eq!((w.value, w.witness), (1, vec![0]));
        let w = rohrbach_number(2).unwrap();
        assert_eq!((w.value, w.witness), (3, vec![0, 1]));
        assert_eq!(rohrbach_number(5).unwrap().value, 13);
    }

    #[test]
    fn range() {
        assert!(rohrbach_number(0).is_err());
        assert!(rohrbach_number(11).is_err());
        assert!(cached(11).is_err());
    }

    #[test]
    fn lower_bound_is_below_exact() {
        for r in 1..=8 {
            let lb = lower_bound(r);
            assert!(lb >= 2 * r as u64 - 1 && lb <= rohrbach_number(r).unwrap().value, "r = {r}");
        }
    }

    #[test]
    fn cache_matches_direct() {
        assert_eq!(cached(4).unwrap(), &rohrbach_number(4).unwrap());
    }
}
