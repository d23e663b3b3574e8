//! Top-down dynamic program for generalized mixed-radix (GMR) code trees.
//!
//! A truncated `i`-level tree is summarized by its signature `(m, b)`: `m`
//! leaves placed on levels `≤ i` and `b` nodes on level `i` marked to be
//! expanded. `OPT^i[m, b]` is the cheapest partial cost of such a tree, where
//! the partial cost charges every still-unplaced weight the current depth.
//! Expanding `(m', b')` by one level with arity `r` and edge length `c` yields
//! `(m' + b'r - b, b)` for any `0 ≤ b ≤ b'r` and adds `c · W_{m'}`.
//!
//! Two fills are provided. The naive fill minimizes over the predecessors of
//! every entry (`O(n^3)` per level). The batched fill groups the entries of a
//! level by `d = m + b`: all predecessors of that group satisfy
//! `m' + b'r = d`, and the admissible `b'` window only widens as `m` grows, so
//! one running minimum over precomputed `γ(b')` values serves the whole group
//! (`O(n^2)` per level). Both fills break ties toward the lexicographically
//! smallest predecessor and produce identical tables.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::code::{Cost, LeafSequence};
use crate::error::{Error, Result};
use crate::levels::{ChoiceLevelSpec, Level, LevelSpec};
use crate::weights::WeightSeq;

/// `(m, b)`: leaves placed so far, and bottom-level nodes marked internal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    pub m: usize,
    pub b: usize,
}

impl Signature {
    pub const ROOT: Signature = Signature { m: 0, b: 1 };

    pub const fn new(m: usize, b: usize) -> Self {
        Signature { m, b }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.b)
    }
}

/// One DP cell: its cost, and for finite cells the predecessor on the
/// previous level together with the option (arity/edge pair) that was used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Entry {
    pub cost: Cost,
    pub pred: Signature,
    pub option: usize,
}

impl Entry {
    pub const UNREACHABLE: Entry = Entry { cost: Cost::Unreachable, pred: Signature::new(0, 0), option: 0 };

    pub(crate) fn new(cost: Cost, pred: Signature, option: usize) -> Self {
        if cost.is_finite() {
            Entry { cost, pred, option }
        } else {
            Entry::UNREACHABLE
        }
    }
}

/// Which fill to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Naive,
    Batched,
}

/// `OPT^i[·,·]` for one level, holding exactly the valid signatures:
/// `b > 0` with `m + b ≤ n`, and `b = 0` with `m` in the finished-tree range
/// of the level's arity (the union of ranges when the level has options).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelTable {
    level: usize,
    n: usize,
    /// `b ≥ 1`, indexed by [`open_index`].
    open: Vec<Entry>,
    /// `b = 0`, keyed by `m`.
    closed: BTreeMap<usize, Entry>,
}

#[inline]
fn open_index(m: usize, b: usize) -> usize {
    let d = m + b;
    d * (d - 1) / 2 + (b - 1)
}

/// `[max(n, r), n + r - 1]`: leaf counts of full trees whose last level has arity `r`.
pub(crate) fn closed_range(n: usize, arity: usize) -> Result<(usize, usize)> {
    let hi = n.checked_add(arity).and_then(|x| x.checked_sub(1)).ok_or(Error::ArityOverflow)?;
    Ok((n.max(arity), hi))
}

impl LevelTable {
    fn empty(level: usize, n: usize, ranges: &[(usize, usize)]) -> Self {
        let mut closed = BTreeMap::new();
        for &(lo, hi) in ranges {
            for m in lo..=hi {
                closed.insert(m, Entry::UNREACHABLE);
            }
        }
        LevelTable { level, n, open: alloc::vec![Entry::UNREACHABLE; n * (n + 1) / 2], closed }
    }

    /// The level-0 table: only the root, marked internal, at cost 0.
    pub fn root(n: usize) -> Self {
        let mut t = Self::empty(0, n, &[]);
        t.open[open_index(0, 1)] = Entry { cost: Cost::ZERO, pred: Signature::ROOT, option: 0 };
        t
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_valid(&self, sig: Signature) -> bool {
        if sig.b == 0 {
            self.closed.contains_key(&sig.m)
        } else {
            sig.m + sig.b <= self.n
        }
    }

    pub fn get(&self, sig: Signature) -> Option<&Entry> {
        if sig.b == 0 {
            self.closed.get(&sig.m)
        } else if sig.m + sig.b <= self.n {
            Some(&self.open[open_index(sig.m, sig.b)])
        } else {
            None
        }
    }

    /// Cost of `(m, b)`; invalid signatures read as unreachable.
    #[inline]
    pub fn cost(&self, m: usize, b: usize) -> Cost {
        if b == 0 {
            self.closed.get(&m).map_or(Cost::Unreachable, |e| e.cost)
        } else if m + b <= self.n {
            self.open[open_index(m, b)].cost
        } else {
            Cost::Unreachable
        }
    }

    fn set(&mut self, sig: Signature, entry: Entry) {
        if sig.b == 0 {
            if let Some(slot) = self.closed.get_mut(&sig.m) {
                *slot = entry;
            }
        } else {
            self.open[open_index(sig.m, sig.b)] = entry;
        }
    }

    /// Every valid signature with its entry: `b > 0` grouped by `d = m + b`
    /// (then by `b`), followed by the `b = 0` entries in increasing `m`.
    pub fn entries(&self) -> impl Iterator<Item = (Signature, &Entry)> + '_ {
        let open = (1..=self.n)
            .flat_map(|d| (1..=d).map(move |b| Signature::new(d - b, b)))
            .map(|sig| (sig, &self.open[open_index(sig.m, sig.b)]));
        let closed = self.closed.iter().map(|(&m, e)| (Signature::new(m, 0), e));
        open.chain(closed)
    }

    /// Finished-tree entries `(m, 0)` in increasing `m`.
    pub fn finished(&self) -> impl Iterator<Item = (usize, &Entry)> + '_ {
        self.closed.iter().map(|(&m, e)| (m, e))
    }
}

/// Valid level-`(i-1)` signatures that expand to `sig` on level `i`, in
/// lexicographic order. Level 0 admits only `b > 0` signatures.
pub fn predecessors(i: usize, sig: Signature, spec: &LevelSpec, n: usize) -> Vec<Signature> {
    let r = spec.level(i).arity;
    let d = sig.m + sig.b;
    let low = sig.b.div_ceil(r);
    let valid_prev = |p: Signature| {
        if p.b > 0 {
            p.m + p.b <= n
        } else if i == 1 {
            false
        } else {
            closed_range(n, spec.level(i - 1).arity).is_ok_and(|(lo, hi)| lo <= p.m && p.m <= hi)
        }
    };
    (low..=d / r)
        .rev()
        .map(|bp| Signature::new(d - bp * r, bp))
        .filter(|&p| valid_prev(p))
        .collect()
}

/// Fills the table of `level` for a single option from the previous level.
///
/// `option_index` is recorded in every finite entry. `cells` accumulates the
/// number of evaluated candidates (γ evaluations and fold steps for the
/// batched fill, predecessor visits for the naive one).
pub fn fill_option(
    prev: &LevelTable,
    level: usize,
    option: Level,
    option_index: usize,
    w: &WeightSeq,
    algorithm: Algorithm,
    cells: &mut u64,
) -> Result<LevelTable> {
    let n = w.n();
    let (lo, hi) = closed_range(n, option.arity)?;
    let mut table = LevelTable::empty(level, n, &[(lo, hi)]);
    let mut fill = Fill { prev, table: &mut table, w, option, option_index, lo, hi, cells };
    match algorithm {
        Algorithm::Naive => fill.naive()?,
        Algorithm::Batched => fill.batched()?,
    }
    Ok(table)
}

struct Fill<'a> {
    prev: &'a LevelTable,
    table: &'a mut LevelTable,
    w: &'a WeightSeq,
    option: Level,
    option_index: usize,
    lo: usize,
    hi: usize,
    cells: &'a mut u64,
}

impl Fill<'_> {
    #[inline]
    fn gamma(&mut self, m: usize, b: usize) -> Result<Cost> {
        *self.cells += 1;
        self.prev.cost(m, b).extend(self.option.edge, self.w.suffix(m))
    }

    fn naive(&mut self) -> Result<()> {
        let n = self.table.n;
        let targets = (1..=n)
            .flat_map(|d| (1..=d).map(move |b| Signature::new(d - b, b)))
            .chain((self.lo..=self.hi).map(|m| Signature::new(m, 0)));
        let r = self.option.arity;
        for sig in targets {
            let d = sig.m + sig.b;
            let mut best = Entry::UNREACHABLE;
            // descending b' is ascending m'
            for bp in (sig.b.div_ceil(r)..=d / r).rev() {
                let mp = d - bp * r;
                let g = self.gamma(mp, bp)?;
                if g < best.cost {
                    best = Entry::new(g, Signature::new(mp, bp), self.option_index);
                }
            }
            self.table.set(sig, best);
        }
        Ok(())
    }

    fn batched(&mut self) -> Result<()> {
        let n = self.table.n;
        let r = self.option.arity;
        let mut gamma = Vec::new();
        if r <= n {
            for d in 1..=self.hi {
                self.batch(d, &mut gamma)?;
            }
        } else {
            // Every b' ≥ 1 expansion overshoots n, so b > 0 entries stay
            // unreachable and each (m, 0) has only (m - r, 1) and (m, 0) behind it.
            for d in 2..=n {
                self.batch(d, &mut gamma)?;
            }
            for m in self.lo..=self.hi {
                let below = self.gamma(m - r, 1)?;
                let carried = self.gamma(m, 0)?;
                let entry = if carried < below {
                    Entry::new(carried, Signature::new(m, 0), self.option_index)
                } else {
                    Entry::new(below, Signature::new(m - r, 1), self.option_index)
                };
                self.table.set(Signature::new(m, 0), entry);
            }
        }
        Ok(())
    }

    /// All valid `(m, b)` with `m + b = d`.
    fn batch(&mut self, d: usize, gamma: &mut Vec<Cost>) -> Result<()> {
        let n = self.table.n;
        let r = self.option.arity;
        let top = d / r;
        gamma.clear();
        for bp in 0..=top {
            let g = self.gamma(d - bp * r, bp)?;
            gamma.push(g);
        }
        let closed_here = self.lo <= d && d <= self.hi;
        let entry = |bp: usize, gamma: &[Cost], idx| Entry::new(gamma[bp], Signature::new(d - bp * r, bp), idx);

        if d > n {
            // only (d, 0) is valid; its window is every b'
            if closed_here {
                let mut best = top;
                for bp in (0..top).rev() {
                    *self.cells += 1;
                    if gamma[bp] < gamma[best] {
                        best = bp;
                    }
                }
                self.table.set(Signature::new(d, 0), entry(best, gamma, self.option_index));
            }
            return Ok(());
        }

        // X_m = (m, d - m) for m = d mod r ..= d; the window [ceil(b/r), top]
        // gains γ(b/r) exactly when r divides b.
        let mut best = top;
        for m in d % r..=d {
            let b = d - m;
            if b.is_multiple_of(r) && b / r != top && gamma[b / r] < gamma[best] {
                best = b / r;
            }
            *self.cells += 1;
            if b > 0 || closed_here {
                self.table.set(Signature::new(m, b), entry(best, gamma, self.option_index));
            }
        }
        Ok(())
    }
}

/// Per-entry minimum over option tables; ties keep the smallest option index.
fn combine(mut tables: Vec<LevelTable>, cells: &mut u64) -> LevelTable {
    let mut iter = tables.drain(..);
    let mut out = iter.next().expect("at least one option");
    for t in iter {
        for (slot, e) in out.open.iter_mut().zip(&t.open) {
            *cells += 1;
            if e.cost < slot.cost {
                *slot = *e;
            }
        }
        for (m, e) in t.closed {
            *cells += 1;
            match out.closed.get_mut(&m) {
                Some(slot) if e.cost < slot.cost => *slot = e,
                Some(_) => {}
                None => {
                    out.closed.insert(m, e);
                }
            }
        }
    }
    out
}

/// `(ℓ, n', cost)`: the finished tree selected as the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Answer {
    pub level: usize,
    pub leaves: usize,
    pub cost: u64,
}

fn consider(best: &mut Option<Answer>, table: &LevelTable) {
    for (m, e) in table.finished() {
        if let Cost::Finite(c) = e.cost {
            if best.is_none_or(|b| c < b.cost) {
                *best = Some(Answer { level: table.level, leaves: m, cost: c });
            }
        }
    }
}

/// Minimizes `OPT^ℓ[n', 0]` over every stored level and valid `n'`; ties go
/// to the smallest `ℓ`, then the smallest `n'`.
pub fn extract_answer(tables: &[LevelTable]) -> Result<Answer> {
    let mut best = None;
    for t in tables.iter().skip(1) {
        consider(&mut best, t);
    }
    best.ok_or(Error::NoFeasibleTree)
}

/// Follows predecessors from `(n', 0)` on level `ℓ` back to the root.
/// Returns the signature sequence (root first) and the option used on each
/// level `1..=ℓ`.
pub fn backtrack(tables: &[LevelTable], answer: Answer) -> Result<(Vec<Signature>, Vec<usize>)> {
    if answer.level == 0 || answer.level >= tables.len() {
        return Err(Error::InternalInconsistency);
    }
    let mut sig = Signature::new(answer.leaves, 0);
    let mut path = alloc::vec![sig];
    let mut options = Vec::with_capacity(answer.level);
    for i in (1..=answer.level).rev() {
        let e = tables[i].get(sig).ok_or(Error::InternalInconsistency)?;
        if !e.cost.is_finite() || !tables[i - 1].is_valid(e.pred) {
            return Err(Error::InternalInconsistency);
        }
        options.push(e.option);
        sig = e.pred;
        path.push(sig);
    }
    if sig != Signature::ROOT {
        return Err(Error::InternalInconsistency);
    }
    path.reverse();
    options.reverse();
    Ok((path, options))
}

/// Leaves added on each level along an expansion path: `m_i - m_{i-1}`.
pub fn path_to_leaf_sequence(path: &[Signature]) -> Result<LeafSequence> {
    let mut counts = alloc::vec![0usize];
    for pair in path.windows(2) {
        let added = pair[1].m.checked_sub(pair[0].m).ok_or(Error::InternalInconsistency)?;
        counts.push(added);
    }
    LeafSequence::new(counts)
}

/// Removes the deepest leaves until exactly `n` remain.
pub fn prune_to_n(seq: &LeafSequence, n: usize) -> Result<LeafSequence> {
    let have = seq.total();
    if have < n {
        return Err(Error::InsufficientLeaves { have, need: n });
    }
    let mut counts = seq.counts().to_vec();
    let mut excess = have - n;
    for count in counts.iter_mut().rev() {
        let cut = excess.min(*count);
        *count -= cut;
        excess -= cut;
    }
    LeafSequence::new(counts)
}

/// `Σ_i c_i · W_{m_{i-1}}` along an expansion path.
pub fn telescoped_cost(path: &[Signature], levels: &LevelSpec, w: &WeightSeq) -> Result<u64> {
    let mut total = 0u64;
    for (i, pair) in path.windows(2).enumerate() {
        let step = levels.level(i + 1).edge.checked_mul(w.suffix(pair[0].m)).ok_or(Error::Overflow)?;
        total = total.checked_add(step).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Solver configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub algorithm: Algorithm,
    /// Deepest level to consider; defaults to `min(n, levels in spec)`.
    pub max_level: Option<usize>,
    /// Retain every level table and backtrack. When false only two tables
    /// are alive at a time and the result carries the cost alone.
    pub keep_tables: bool,
}

impl SolveOptions {
    pub fn new(algorithm: Algorithm) -> Self {
        SolveOptions { algorithm, max_level: None, keep_tables: true }
    }

    pub fn cost_only(algorithm: Algorithm) -> Self {
        SolveOptions { algorithm, max_level: None, keep_tables: false }
    }

    pub fn with_max_level(mut self, max_level: usize) -> Self {
        self.max_level = Some(max_level);
        self
    }
}

/// Output of a GMR (or choice-GMR) solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpResult {
    /// Level tables `0..=max_level`; empty in cost-only mode.
    pub tables: Vec<LevelTable>,
    pub answer: Answer,
    /// `(0,1) → … → (n', 0)`; empty in cost-only mode.
    pub expansion: Vec<Signature>,
    /// The level parameters actually used on levels `1..=ℓ`.
    pub chosen: Option<LevelSpec>,
    /// Option index picked on each level `1..=ℓ`.
    pub options: Vec<usize>,
    /// The answer tree pruned to exactly `n` leaves.
    pub leaves: Option<LeafSequence>,
    pub cells_updated: u64,
}

impl DpResult {
    pub fn cost(&self) -> u64 {
        self.answer.cost
    }
}

/// Level parameters the engine iterates over.
pub(crate) trait LevelSource {
    fn level_count(&self) -> usize;
    fn options(&self, i: usize) -> &[Level];
}

impl LevelSource for LevelSpec {
    fn level_count(&self) -> usize {
        self.len()
    }
    fn options(&self, i: usize) -> &[Level] {
        core::slice::from_ref(&self.levels()[i - 1])
    }
}

impl LevelSource for ChoiceLevelSpec {
    fn level_count(&self) -> usize {
        self.len()
    }
    fn options(&self, i: usize) -> &[Level] {
        ChoiceLevelSpec::options(self, i)
    }
}

pub(crate) fn run<S: LevelSource>(w: &WeightSeq, spec: &S, opts: SolveOptions) -> Result<DpResult> {
    let n = w.n();
    let max_level = match opts.max_level {
        Some(l) if l > spec.level_count() => {
            return Err(Error::invalid("max_level exceeds the levels in the spec"));
        }
        Some(l) => l,
        None => n.min(spec.level_count()),
    };
    let mut cells = 0u64;
    let mut best = None;
    let mut tables = Vec::new();
    let mut prev = LevelTable::root(n);
    for i in 1..=max_level {
        let options = spec.options(i);
        let table = if options.len() == 1 {
            fill_option(&prev, i, options[0], 0, w, opts.algorithm, &mut cells)?
        } else {
            let per_option = options
                .iter()
                .enumerate()
                .map(|(j, &o)| fill_option(&prev, i, o, j, w, opts.algorithm, &mut cells))
                .collect::<Result<Vec<_>>>()?;
            combine(per_option, &mut cells)
        };
        consider(&mut best, &table);
        let done = core::mem::replace(&mut prev, table);
        if opts.keep_tables {
            tables.push(done);
        }
    }
    if opts.keep_tables {
        tables.push(prev);
    }
    let answer = best.ok_or(Error::NoFeasibleTree)?;

    let mut result = DpResult {
        tables,
        answer,
        expansion: Vec::new(),
        chosen: None,
        options: Vec::new(),
        leaves: None,
        cells_updated: cells,
    };
    if opts.keep_tables {
        let (path, options) = backtrack(&result.tables, answer)?;
        let chosen = LevelSpec::new(
            options.iter().enumerate().map(|(k, &j)| spec.options(k + 1)[j]).collect(),
        )?;
        let full = path_to_leaf_sequence(&path)?;
        result.leaves = Some(prune_to_n(&full, n)?);
        result.expansion = path;
        result.options = options;
        result.chosen = Some(chosen);
    }
    Ok(result)
}

/// Fills every level by direct minimization over predecessors.
pub fn solve_naive(w: &WeightSeq, spec: &LevelSpec, max_level: Option<usize>) -> Result<DpResult> {
    run(w, spec, SolveOptions { algorithm: Algorithm::Naive, max_level, keep_tables: true })
}

/// Fills every level batch by batch.
pub fn solve_batched(w: &WeightSeq, spec: &LevelSpec, max_level: Option<usize>) -> Result<DpResult> {
    run(w, spec, SolveOptions { algorithm: Algorithm::Batched, max_level, keep_tables: true })
}

/// General entry point.
pub fn solve(w: &WeightSeq, spec: &LevelSpec, opts: SolveOptions) -> Result<DpResult> {
    run(w, spec, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::cost_of_leaf_sequence;
    use alloc::vec;

    fn ws(raw: &[u64]) -> WeightSeq {
        WeightSeq::new(raw).unwrap()
    }

    fn binary(levels: usize) -> LevelSpec {
        LevelSpec::uniform(2, 1, levels).unwrap()
    }

    fn sig(m: usize, b: usize) -> Signature {
        Signature::new(m, b)
    }

    #[test]
    fn predecessor_examples() {
        assert_eq!(predecessors(2, sig(2, 1), &binary(3), 4), vec![sig(1, 1)]);
        assert_eq!(predecessors(2, sig(0, 1), &binary(3), 4), vec![]);
        let ternary = LevelSpec::uniform(3, 1, 3).unwrap();
        assert_eq!(predecessors(2, sig(3, 0), &ternary, 3), vec![sig(0, 1), sig(3, 0)]);
        // level 0 has no finished trees
        assert_eq!(predecessors(1, sig(3, 0), &ternary, 3), vec![sig(0, 1)]);
    }

    #[test]
    fn solve_examples() {
        for solve in [solve_naive, solve_batched] {
            let w = ws(&[1, 1, 1, 1]);
            assert_eq!(solve(&w, &binary(4), None).unwrap().cost(), 8);
            let w = ws(&[3, 2, 1, 1]);
            assert_eq!(solve(&w, &binary(4), None).unwrap().cost(), 13);
            let w = ws(&[5]);
            assert_eq!(solve(&w, &binary(1), None).unwrap().cost(), 5);
            let spec = LevelSpec::new(vec![Level::new(2, 1), Level::new(3, 1)]).unwrap();
            assert_eq!(solve(&ws(&[1; 5]), &spec, None).unwrap().cost(), 10);
        }
    }

    #[test]
    fn naive_and_batched_tables_match() {
        let w = ws(&[1, 1, 1, 1]);
        let a = solve_naive(&w, &binary(4), None).unwrap();
        let b = solve_batched(&w, &binary(4), None).unwrap();
        assert_eq!(a.tables, b.tables);
        assert_eq!(a.expansion, b.expansion);
    }

    #[test]
    fn answer_examples() {
        let r = solve_batched(&ws(&[1, 1, 1, 1]), &binary(4), None).unwrap();
        assert_eq!(r.answer, Answer { level: 2, leaves: 4, cost: 8 });
        assert_eq!(extract_answer(&r.tables), Ok(r.answer));

        // {0, 10, 11} is already full, so n' = 3 (cheaper than the 4-leaf tree)
        let r = solve_batched(&ws(&[1, 1, 1]), &binary(3), None).unwrap();
        assert_eq!(r.answer, Answer { level: 2, leaves: 3, cost: 5 });

        let quad = LevelSpec::uniform(4, 1, 2).unwrap();
        let r = solve_batched(&ws(&[1, 1]), &quad, None).unwrap();
        assert_eq!(r.answer, Answer { level: 1, leaves: 4, cost: 2 });
    }

    #[test]
    fn backtrack_examples() {
        let r = solve_batched(&ws(&[1, 1, 1, 1]), &binary(4), None).unwrap();
        assert_eq!(r.expansion, vec![sig(0, 1), sig(0, 2), sig(4, 0)]);
        assert_eq!(r.leaves.as_ref().unwrap().counts(), &[0, 0, 4]);

        let r = solve_batched(&ws(&[4, 1, 1]), &binary(3), None).unwrap();
        assert_eq!(r.expansion, vec![sig(0, 1), sig(1, 1), sig(3, 0)]);
        assert_eq!(r.leaves.as_ref().unwrap().counts(), &[0, 1, 2]);
        assert_eq!(r.cost(), 8);

        let r = solve_batched(&ws(&[5]), &binary(1), None).unwrap();
        assert_eq!(r.expansion, vec![sig(0, 1), sig(2, 0)]);
        assert_eq!(r.leaves.as_ref().unwrap().counts(), &[0, 1]);
    }

    #[test]
    fn broken_chain_is_reported() {
        let mut r = solve_batched(&ws(&[4, 1, 1]), &binary(3), None).unwrap();
        r.tables[1].set(sig(1, 1), Entry::UNREACHABLE);
        assert_eq!(backtrack(&r.tables, r.answer), Err(Error::InternalInconsistency));
    }

    #[test]
    fn prune_examples() {
        let s = |c: &[usize]| LeafSequence::new(c.to_vec()).unwrap();
        assert_eq!(prune_to_n(&s(&[0, 0, 4]), 3), Ok(s(&[0, 0, 3])));
        assert_eq!(prune_to_n(&s(&[0, 1, 2]), 3), Ok(s(&[0, 1, 2])));
        assert_eq!(prune_to_n(&s(&[0, 4]), 2), Ok(s(&[0, 2])));
        assert_eq!(prune_to_n(&s(&[0, 1, 1]), 1), Ok(s(&[0, 1])));
        assert_eq!(prune_to_n(&s(&[0, 2]), 3), Err(Error::InsufficientLeaves { have: 2, need: 3 }));
    }

    #[test]
    fn infeasible_and_bad_max_level() {
        assert_eq!(solve_batched(&ws(&[1, 1, 1]), &binary(1), None), Err(Error::NoFeasibleTree));
        assert_eq!(solve_naive(&ws(&[1, 1, 1]), &binary(1), None), Err(Error::NoFeasibleTree));
        assert!(matches!(solve_batched(&ws(&[1, 1]), &binary(1), Some(2)), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn large_arity_branch() {
        // r > n on the last level: phase two with two predecessors per entry
        let spec = LevelSpec::new(vec![Level::new(2, 1), Level::new(64, 2)]).unwrap();
        let w = ws(&[7, 5, 3, 2, 2]);
        let a = solve_naive(&w, &spec, None).unwrap();
        let b = solve_batched(&w, &spec, None).unwrap();
        assert_eq!(a.tables, b.tables);
        assert_eq!(a.answer, b.answer);
        // first level leaf for 7, then everything else one meta-level down
        assert_eq!(b.cost(), 7 + 3 * (5 + 3 + 2 + 2));
    }

    #[test]
    fn cost_only_mode_agrees() {
        let w = ws(&[9, 8, 4, 4, 3, 1, 1]);
        let spec = LevelSpec::new(vec![Level::new(3, 1), Level::new(2, 2), Level::new(2, 1), Level::new(4, 1)])
            .unwrap();
        for alg in [Algorithm::Naive, Algorithm::Batched] {
            let full = solve(&w, &spec, SolveOptions::new(alg)).unwrap();
            let lean = solve(&w, &spec, SolveOptions::cost_only(alg)).unwrap();
            assert_eq!(full.answer, lean.answer);
            assert_eq!(full.cells_updated, lean.cells_updated);
            assert!(lean.tables.is_empty() && lean.leaves.is_none());
        }
    }

    #[test]
    fn result_is_self_consistent() {
        let w = ws(&[10, 6, 6, 3, 2, 2, 1]);
        let spec = LevelSpec::new(vec![Level::new(2, 2), Level::new(3, 1), Level::new(2, 1), Level::new(2, 3)])
            .unwrap();
        let r = solve_batched(&w, &spec, None).unwrap();
        let chosen = r.chosen.as_ref().unwrap();
        let leaves = r.leaves.as_ref().unwrap();
        assert_eq!(leaves.total(), w.n());
        assert_eq!(cost_of_leaf_sequence(leaves, &w, chosen), Ok(r.cost()));
        assert_eq!(telescoped_cost(&r.expansion, chosen, &w), Ok(r.cost()));
    }
}
