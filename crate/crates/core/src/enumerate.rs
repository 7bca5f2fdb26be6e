//! Exhaustive enumeration of numerical semigroups by genus.
//!
//! Uses the semigroup tree: the children of `H` are `H \ {g}` for each
//! minimal generator `g` larger than the Frobenius number, and every
//! semigroup of genus `k + 1` is the child of exactly one of genus `k`.
//! Each genus level is expanded (in parallel when enabled), then sorted by
//! generators, so output order is independent of scheduling.

use crate::error::{Error, Result};
use crate::par;
use crate::semigroup::NumericalSemigroup;

/// Largest genus bound accepted.
pub const MAX_GENUS: usize = 40;

/// How a genus level is expanded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    /// Rayon data parallelism; same as `Serial` without the `parallel` feature.
    #[default]
    Parallel,
    Serial,
}

fn check_bound(g_max: usize) -> Result<()> {
    if g_max > MAX_GENUS {
        return Err(Error::OutOfRange {
            what: "genus bound",
            value: g_max as i64,
            min: 0,
            max: MAX_GENUS as i64,
        });
    }
    Ok(())
}

fn tree_children(h: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    h.generators()
        .iter()
        .filter(|&&g| g > h.frobenius())
        .map(|&g| h.remove_generator(g))
        .collect()
}

fn next_level(level: &[NumericalSemigroup], exec: Execution) -> Vec<NumericalSemigroup> {
    let mut next = match exec {
        Execution::Parallel => par::flat_map(level, tree_children),
        Execution::Serial => level.iter().flat_map(tree_children).collect(),
    };
    next.sort_unstable_by(|a, b| a.generators().cmp(b.generators()));
    next
}

/// All semigroups of genus `0..=g_max`, one vector per genus.
pub fn enumerate_levels(g_max: usize, exec: Execution) -> Result<Vec<Vec<NumericalSemigroup>>> {
    check_bound(g_max)?;
    let mut levels = vec![vec![NumericalSemigroup::naturals()]];
    for _ in 0..g_max {
        let next = next_level(levels.last().unwrap(), exec);
        levels.push(next);
    }
    Ok(levels)
}

/// Number of semigroups of each genus `0..=g_max`.
pub fn count_by_genus(g_max: usize) -> Result<Vec<usize>> {
    Ok(enumerate_levels(g_max, Execution::default())?
        .iter()
        .map(Vec::len)
        .collect())
}

/// Streams every semigroup of genus at most `g_max`, ordered by genus and
/// then lexicographically by generators. The first item is `ℕ`.
pub fn enumerate_by_genus(g_max: usize) -> Result<GenusStream> {
    enumerate_with(g_max, Execution::default())
}

pub fn enumerate_with(g_max: usize, exec: Execution) -> Result<GenusStream> {
    check_bound(g_max)?;
    Ok(GenusStream {
        level: vec![NumericalSemigroup::naturals()],
        index: 0,
        genus: 0,
        g_max,
        exec,
    })
}

/// Iterator returned by [`enumerate_by_genus`]; materialises one genus
/// level at a time.
#[derive(Debug)]
pub struct GenusStream {
    level: Vec<NumericalSemigroup>,
    index: usize,
    genus: usize,
    g_max: usize,
    exec: Execution,
}

impl Iterator for GenusStream {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        while self.index == self.level.len() {
            if self.genus == self.g_max || self.level.is_empty() {
                return None;
            }
            self.level = next_level(&self.level, self.exec);
            self.genus += 1;
            self.index = 0;
        }
        self.index += 1;
        Some(self.level[self.index - 1].clone())
    }
}
