//! Independent ground truth for small instances: exhaustive search over leaf
//! sequences and one-ended tree profiles, and the classical greedy Huffman
//! construction.
//!
//! Nothing here touches the DP code; the only shared piece is the leaf
//! sequence cost evaluator in [`crate::code`].

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::code::{cost_of_leaf_sequence, LeafSequence};
use crate::error::{Error, Result};
use crate::levels::{ChoiceLevelSpec, LevelSpec};
use crate::weights::WeightSeq;

/// Limits that keep the exhaustive searches finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    /// Maximum tree level (GMR) or codeword length (one-ended).
    pub max_level: usize,
    /// Maximum option-set size per level (choice enumeration).
    pub max_options: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_n: 8, max_level: 5, max_options: 3 }
    }
}

impl OracleBudget {
    /// Default limits for one-ended enumeration: `n ≤ 6`, length `≤ 8`.
    pub const ONE_ENDED: OracleBudget = OracleBudget { max_n: 6, max_level: 8, max_options: 1 };
}

/// Minimum cost over every realizable leaf sequence with exactly `n` leaves
/// and at most `max_level` levels.
pub fn enumerate_gmr(w: &WeightSeq, spec: &LevelSpec, max_level: usize, budget: OracleBudget) -> Result<u64> {
    if w.n() > budget.max_n || max_level > budget.max_level {
        return Err(Error::BudgetExceeded);
    }
    if max_level > spec.len() {
        return Err(Error::invalid("spec has fewer levels than max_level"));
    }
    let mut search = GmrSearch { w, spec, max_level, counts: alloc::vec![0], best: None };
    if max_level >= 1 {
        search.descend(1, spec.level(1).arity.min(w.n()), 0)?;
    }
    search.best.ok_or(Error::NoFeasibleTree)
}

struct GmrSearch<'a> {
    w: &'a WeightSeq,
    spec: &'a LevelSpec,
    max_level: usize,
    counts: Vec<usize>,
    best: Option<u64>,
}

impl GmrSearch<'_> {
    /// `slots` free nodes on `level` (capped at n, which never hides a choice).
    fn descend(&mut self, level: usize, slots: usize, placed: usize) -> Result<()> {
        let n = self.w.n();
        for here in 0..=slots.min(n - placed) {
            self.counts.push(here);
            if placed + here == n {
                let seq = LeafSequence::new(self.counts.clone())?;
                let cost = cost_of_leaf_sequence(&seq, self.w, self.spec)?;
                self.best = Some(self.best.map_or(cost, |b| b.min(cost)));
            } else if level < self.max_level && slots > here {
                let next = (slots - here).saturating_mul(self.spec.level(level + 1).arity);
                self.descend(level + 1, next.min(n), placed + here)?;
            }
            self.counts.pop();
        }
        Ok(())
    }
}

/// Minimum over every per-level option assignment of [`enumerate_gmr`].
pub fn enumerate_choice(
    w: &WeightSeq,
    cspec: &ChoiceLevelSpec,
    max_level: usize,
    budget: OracleBudget,
) -> Result<u64> {
    if max_level > cspec.len() {
        return Err(Error::invalid("spec has fewer levels than max_level"));
    }
    if (1..=max_level).any(|i| cspec.options(i).len() > budget.max_options) {
        return Err(Error::BudgetExceeded);
    }
    let mut choice = alloc::vec![0usize; max_level];
    let mut best: Option<u64> = None;
    loop {
        match enumerate_gmr(w, &cspec.select(&choice)?, max_level, budget) {
            Ok(cost) => best = Some(best.map_or(cost, |b| b.min(cost))),
            Err(Error::NoFeasibleTree) => {}
            Err(e) => return Err(e),
        }
        // odometer step
        let mut k = 0;
        loop {
            if k == max_level {
                return best.ok_or(Error::NoFeasibleTree);
            }
            choice[k] += 1;
            if choice[k] < cspec.options(k + 1).len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Minimum-cost binary code in which every word ends in `1`, over all trees
/// with codeword length at most `max_depth`.
///
/// Trees are enumerated level by level up to isomorphism: all expandable
/// nodes of a level are interchangeable, so a level is described by how many
/// `1`-children become labeled leaves and how many of the remaining nodes are
/// expanded further.
pub fn enumerate_one_ended(w: &WeightSeq, max_depth: usize, budget: OracleBudget) -> Result<u64> {
    if w.n() > budget.max_n || max_depth > budget.max_level {
        return Err(Error::BudgetExceeded);
    }
    let mut best = None;
    one_ended_descend(w, max_depth, 0, 1, 0, 0, &mut best)?;
    best.ok_or(Error::NoFeasibleTree)
}

fn one_ended_descend(
    w: &WeightSeq,
    max_depth: usize,
    depth: usize,
    expanding: usize,
    placed: usize,
    cost: u64,
    best: &mut Option<u64>,
) -> Result<()> {
    if depth == max_depth {
        return Ok(());
    }
    let n = w.n();
    let child_depth = depth as u64 + 1;
    // `expanding` internal nodes give `expanding` 0-children and as many 1-children.
    for good in 0..=expanding.min(n - placed) {
        let mass = w.suffix(placed) - w.suffix(placed + good);
        let cost = child_depth
            .checked_mul(mass)
            .and_then(|s| cost.checked_add(s))
            .ok_or(Error::Overflow)?;
        let placed = placed + good;
        if placed == n {
            *best = Some(best.map_or(cost, |b| b.min(cost)));
            continue;
        }
        let free = 2 * expanding - good;
        for next in 1..=free.min(n - placed) {
            one_ended_descend(w, max_depth, depth + 1, next, placed, cost, best)?;
        }
    }
    Ok(())
}

/// Classical `r`-ary Huffman: pad with zero weights until `(count - 1)` is a
/// multiple of `r - 1` (and there are at least two leaves, so a single weight
/// sits one level below the root), then merge the `r` smallest repeatedly.
/// Returns the weighted external path length.
pub fn huffman_greedy(w: &WeightSeq, r: usize) -> Result<u64> {
    if r < 2 {
        return Err(Error::invalid("radix must be at least 2"));
    }
    let mut heap: BinaryHeap<Reverse<u64>> = w.weights().iter().map(|&p| Reverse(p)).collect();
    while heap.len() < 2 || !(heap.len() - 1).is_multiple_of(r - 1) {
        heap.push(Reverse(0));
    }
    let mut cost = 0u64;
    while heap.len() > 1 {
        let mut merged = 0u64;
        for _ in 0..r {
            let Reverse(p) = heap.pop().expect("count stays 1 mod (r - 1)");
            merged = merged.checked_add(p).ok_or(Error::Overflow)?;
        }
        cost = cost.checked_add(merged).ok_or(Error::Overflow)?;
        heap.push(Reverse(merged));
    }
    Ok(cost)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levels::Level;
    use alloc::vec;

    fn ws(raw: &[u64]) -> WeightSeq {
        WeightSeq::new(raw).unwrap()
    }

    fn binary(levels: usize) -> LevelSpec {
        LevelSpec::uniform(2, 1, levels).unwrap()
    }

    const BIG: OracleBudget = OracleBudget { max_n: 16, max_level: 16, max_options: 4 };

    #[test]
    fn gmr_examples() {
        let b = OracleBudget::default();
        assert_eq!(enumerate_gmr(&ws(&[1, 1, 1, 1]), &binary(4), 4, b), Ok(8));
        assert_eq!(enumerate_gmr(&ws(&[3, 2, 1, 1]), &binary(4), 4, b), Ok(13));
        let spec = LevelSpec::new(vec![Level::new(2, 1), Level::new(3, 1)]).unwrap();
        assert_eq!(enumerate_gmr(&ws(&[1, 1, 1, 1, 1]), &spec, 2, b), Ok(10));
        assert_eq!(enumerate_gmr(&ws(&[4, 1, 1]), &binary(3), 3, b), Ok(8));
        assert_eq!(enumerate_gmr(&ws(&[1, 1, 1]), &binary(3), 3, b), Ok(5));
        assert_eq!(enumerate_gmr(&ws(&[5]), &binary(1), 1, b), Ok(5));
    }

    #[test]
    fn gmr_infeasible_and_budget() {
        let b = OracleBudget::default();
        assert_eq!(enumerate_gmr(&ws(&[1, 1, 1]), &binary(1), 1, b), Err(Error::NoFeasibleTree));
        assert_eq!(enumerate_gmr(&ws(&[1; 9]), &binary(9), 5, b), Err(Error::BudgetExceeded));
        assert_eq!(enumerate_gmr(&ws(&[1; 3]), &binary(6), 6, b), Err(Error::BudgetExceeded));
    }

    #[test]
    fn huffman_examples() {
        assert_eq!(huffman_greedy(&ws(&[3, 2, 1, 1]), 2), Ok(13));
        assert_eq!(huffman_greedy(&ws(&[1, 1, 1]), 3), Ok(3));
        assert_eq!(huffman_greedy(&ws(&[1, 1]), 2), Ok(2));
        assert_eq!(huffman_greedy(&ws(&[5]), 3), Ok(5));
        assert!(huffman_greedy(&ws(&[1]), 1).is_err());
    }

    #[test]
    fn huffman_matches_enumeration() {
        let cases: [&[u64]; 5] = [&[5, 5, 1, 1, 1], &[9, 3, 3, 2, 1, 1], &[1, 2, 3, 4, 5, 6, 7, 8], &[7], &[4, 4]];
        for raw in cases {
            let w = ws(raw);
            for r in 2..=4 {
                let spec = LevelSpec::uniform(r, 1, w.n()).unwrap();
                let levels = w.n().min(5);
                assert_eq!(
                    enumerate_gmr(&w, &spec, levels, OracleBudget::default()).unwrap(),
                    huffman_greedy(&w, r).unwrap(),
                    "{raw:?} r={r}"
                );
            }
        }
    }

    #[test]
    fn one_ended_examples() {
        let b = OracleBudget::ONE_ENDED;
        assert_eq!(enumerate_one_ended(&ws(&[1, 1]), 4, b), Ok(3));
        assert_eq!(enumerate_one_ended(&ws(&[2, 1]), 4, b), Ok(4));
        assert_eq!(enumerate_one_ended(&ws(&[1]), 3, b), Ok(1));
        assert_eq!(enumerate_one_ended(&ws(&[1, 1, 1]), 5, b), Ok(6));
        assert_eq!(enumerate_one_ended(&ws(&[1; 7]), 5, b), Err(Error::BudgetExceeded));
    }

    #[test]
    fn choice_examples() {
        let opts = vec![Level::new(2, 1), Level::new(4, 2)];
        let c = ChoiceLevelSpec::new(vec![opts.clone(), opts.clone()]).unwrap();
        assert_eq!(enumerate_choice(&ws(&[1, 1, 1, 1]), &c, 2, OracleBudget::default()), Ok(8));

        let single = ChoiceLevelSpec::from_spec(&binary(4));
        let w = ws(&[3, 2, 1, 1]);
        assert_eq!(
            enumerate_choice(&w, &single, 4, OracleBudget::default()),
            enumerate_gmr(&w, &binary(4), 4, OracleBudget::default())
        );
    }

    #[test]
    fn frozen_reference_values() {
        // Λ = {1, 3, 6}, r = 2 as meta-levels (2^1, 1), (2^2, 2), (2^3, 3).
        let meta = LevelSpec::new(vec![Level::new(2, 1), Level::new(4, 2), Level::new(8, 3)]).unwrap();
        let p: Vec<u64> = (1..=16).collect();
        let v = enumerate_gmr(&ws(&p), &meta, 3, BIG).unwrap();
        assert_eq!(v, WORKED_INSTANCE_COST);

        let opts = vec![Level::new(2, 1), Level::new(4, 2)];
        let c = ChoiceLevelSpec::new(vec![opts.clone(); 4]).unwrap();
        assert_eq!(enumerate_choice(&ws(&[8, 1, 1, 1]), &c, 4, BIG), Ok(CHOICE_8111_COST));
    }

    // Filled in from the oracle runs above.
    const WORKED_INSTANCE_COST: u64 = 573;
    const CHOICE_8111_COST: u64 = 16;
}
