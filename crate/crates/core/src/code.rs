//! Leaf sequences, code books and the evaluators shared by every solver and
//! oracle: cost of a leaf sequence, realizability slack, prefix-freeness, and
//! the canonical leftmost codeword construction.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::levels::LevelSpec;
use crate::weights::WeightSeq;

/// A DP cost. `Unreachable` orders after every finite value and is never
/// produced by arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cost {
    Finite(u64),
    Unreachable,
}

impl Cost {
    pub const ZERO: Cost = Cost::Finite(0);

    pub fn finite(self) -> Option<u64> {
        match self {
            Cost::Finite(c) => Some(c),
            Cost::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Cost::Finite(_))
    }

    /// `self + edge * suffix`, unreachable stays unreachable.
    #[inline]
    pub fn extend(self, edge: u64, suffix: u64) -> Result<Cost> {
        match self {
            Cost::Unreachable => Ok(Cost::Unreachable),
            Cost::Finite(c) => edge
                .checked_mul(suffix)
                .and_then(|step| c.checked_add(step))
                .map(Cost::Finite)
                .ok_or(Error::Overflow),
        }
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cost::Finite(c) => write!(f, "{c}"),
            Cost::Unreachable => f.write_str("inf"),
        }
    }
}

/// Number of leaves on each level of a tree, level 0 (the root) first.
///
/// Trailing empty levels are trimmed, so `terminal_level()` is the deepest
/// level holding a leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeafSequence {
    counts: Vec<usize>,
}

impl LeafSequence {
    /// `counts[i]` leaves on level `i`. The root can never be a leaf.
    pub fn new(mut counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            counts.push(0);
        }
        if counts[0] != 0 {
            return Err(Error::InvalidLeafSequence);
        }
        while counts.len() > 1 && counts[counts.len() - 1] == 0 {
            counts.pop();
        }
        Ok(LeafSequence { counts })
    }

    /// Builds from `(level, count)` pairs; repeated levels accumulate.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let top = pairs.iter().map(|&(l, _)| l).max().unwrap_or(0);
        let mut counts = alloc::vec![0; top + 1];
        for &(level, count) in pairs {
            counts[level] += count;
        }
        Self::new(counts)
    }

    pub fn count(&self, level: usize) -> usize {
        self.counts.get(level).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn terminal_level(&self) -> usize {
        self.counts.len() - 1
    }

    /// Per-leaf levels, shallowest first.
    pub fn leaf_levels(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total());
        for (level, &count) in self.counts.iter().enumerate() {
            out.extend(core::iter::repeat_n(level, count));
        }
        out
    }
}

/// Remaining node slots on the terminal level after placing every leaf top
/// down. Zero means the tree is full, negative means the sequence cannot be
/// realized. Levels the spec does not describe have no slots.
pub fn kraft_slack(seq: &LeafSequence, spec: &LevelSpec) -> i128 {
    let mut remaining: i128 = 1 - seq.count(0) as i128;
    for level in 1..=seq.terminal_level() {
        let budget = if level <= spec.len() {
            remaining.saturating_mul(spec.level(level).arity as i128)
        } else if remaining < 0 {
            remaining
        } else {
            0
        };
        remaining = budget.saturating_sub(seq.count(level) as i128);
    }
    remaining
}

/// `Σ L(level(v_t)) · p_t` with weights assigned shallowest leaf first;
/// leaves past `n` carry weight zero.
pub fn cost_of_leaf_sequence(seq: &LeafSequence, w: &WeightSeq, spec: &LevelSpec) -> Result<u64> {
    if seq.terminal_level() > spec.len() || kraft_slack(seq, spec) < 0 {
        return Err(Error::InvalidLeafSequence);
    }
    let have = seq.total();
    if have < w.n() {
        return Err(Error::InsufficientLeaves { have, need: w.n() });
    }
    let mut cost: u64 = 0;
    let mut placed = 0usize;
    for (level, &count) in seq.counts().iter().enumerate() {
        if count == 0 {
            continue;
        }
        let mass = w.suffix(placed) - w.suffix(placed + count);
        let step = spec.depth(level).checked_mul(mass).ok_or(Error::Overflow)?;
        cost = cost.checked_add(step).ok_or(Error::Overflow)?;
        placed += count;
    }
    Ok(cost)
}

/// True iff no word equals, or is a proper prefix of, another.
pub fn check_prefix_free<T: Ord, W: AsRef<[T]>>(words: &[W]) -> bool {
    let mut sorted: Vec<&[T]> = words.iter().map(|w| w.as_ref()).collect();
    sorted.sort_unstable();
    sorted.windows(2).all(|pair| !pair[1].starts_with(pair[0]))
}

/// A codeword as a list of symbol indices; the symbol on level `i` ranges
/// over `0..arity(i)`.
pub type Codeword = Vec<usize>;

/// Deterministic level-order tree construction: on every level the leftmost
/// free slots become the leaves of that level, the next ones become internal
/// nodes. Words come out shallowest first, in leaf order.
pub fn leafseq_to_codewords(seq: &LeafSequence, spec: &LevelSpec) -> Result<Vec<Codeword>> {
    if seq.terminal_level() > spec.len() || kraft_slack(seq, spec) < 0 {
        return Err(Error::InvalidLeafSequence);
    }
    let mut words = Vec::with_capacity(seq.total());
    let mut frontier: Vec<Codeword> = alloc::vec![Vec::new()];
    let mut remaining = seq.total();
    for level in 1..=seq.terminal_level() {
        let arity = spec.level(level).arity;
        let here = seq.count(level);
        let deeper = remaining - here;
        let slots = frontier.len().saturating_mul(arity);
        if slots < here {
            return Err(Error::InvalidLeafSequence);
        }
        let wanted = here + deeper.min(slots - here);
        let mut children = frontier
            .iter()
            .flat_map(|parent| {
                (0..arity).map(move |s| {
                    let mut child = parent.clone();
                    child.push(s);
                    child
                })
            })
            .take(wanted);
        words.extend(children.by_ref().take(here));
        frontier = children.collect();
        remaining = deeper;
    }
    Ok(words)
}

/// A finished code: one word per weight, in sorted-weight order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeBook {
    /// `words[t]` encodes the `t`-th largest weight.
    pub words: Vec<Codeword>,
    /// Weighted depth of each word (equals its length for unit edges).
    pub depths: Vec<u64>,
    pub cost: u64,
}

impl CodeBook {
    /// Builds the canonical code of a realizable leaf sequence with exactly
    /// `w.n()` leaves.
    pub fn from_leaf_sequence(seq: &LeafSequence, w: &WeightSeq, spec: &LevelSpec) -> Result<Self> {
        if seq.total() != w.n() {
            return Err(Error::InsufficientLeaves { have: seq.total(), need: w.n() });
        }
        let cost = cost_of_leaf_sequence(seq, w, spec)?;
        let words = leafseq_to_codewords(seq, spec)?;
        let depths = seq.leaf_levels().into_iter().map(|l| spec.depth(l)).collect();
        Ok(CodeBook { words, depths, cost })
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.words.iter().map(Vec::len).collect()
    }

    pub fn is_prefix_free(&self) -> bool {
        check_prefix_free(&self.words)
    }
}
