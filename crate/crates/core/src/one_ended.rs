//! Minimum-cost binary prefix-free codes in which every codeword ends in `1`.
//!
//! A tree is grown level by level. Nodes on the bottom level are either good
//! (a `1`-child holding a weight) or bad (still to be expanded). Each bad node
//! gets a `0`-child, which is always bad, and a `1`-child, which is either a
//! good leaf or bad. The signature `(m, b)` counts good leaves so far and bad
//! nodes on the bottom level; expanding `(m', b')` gives `(m' + 2b' - b, b)`
//! for `b' ≤ b ≤ 2b'` and adds `W_{m'}`. The table is level-free: every
//! predecessor has a smaller `m + b`, so batches `d = m + b` are filled in
//! increasing order. Within a batch the candidates share `m' + 2b' = d` and
//! `(m, b)` reads the window `⌈b/2⌉ ≤ b' ≤ min(b, ⌊d/2⌋)`, answered by a
//! range-minimum index over that batch's `γ(b')` values.

use alloc::vec::Vec;

use crate::code::{CodeBook, Codeword, Cost};
use crate::error::{Error, Result};
use crate::gmr::{Algorithm, Entry, Signature};
use crate::rmq::SparseTable;
use crate::weights::WeightSeq;

/// `OPT[m, b]` for `0 ≤ m ≤ n`, `1 ≤ b ≤ 2n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneEndedTable {
    n: usize,
    entries: Vec<Entry>,
}

impl OneEndedTable {
    fn new(n: usize) -> Self {
        let mut t = OneEndedTable { n, entries: alloc::vec![Entry::UNREACHABLE; (n + 1) * Self::max_b(n)] };
        let root = t.index(0, 1);
        t.entries[root] = Entry { cost: Cost::ZERO, pred: Signature::ROOT, option: 0 };
        t
    }

    fn max_b(n: usize) -> usize {
        2 * n - 1
    }

    #[inline]
    fn index(&self, m: usize, b: usize) -> usize {
        m * Self::max_b(self.n) + (b - 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_valid(&self, sig: Signature) -> bool {
        sig.m <= self.n && sig.b >= 1 && sig.b <= Self::max_b(self.n)
    }

    pub fn get(&self, sig: Signature) -> Option<&Entry> {
        self.is_valid(sig).then(|| &self.entries[self.index(sig.m, sig.b)])
    }

    #[inline]
    pub fn cost(&self, m: usize, b: usize) -> Cost {
        if self.is_valid(Signature::new(m, b)) {
            self.entries[self.index(m, b)].cost
        } else {
            Cost::Unreachable
        }
    }

    fn set(&mut self, sig: Signature, entry: Entry) {
        let i = self.index(sig.m, sig.b);
        self.entries[i] = entry;
    }

    /// Every valid signature in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Signature, &Entry)> + '_ {
        (0..=self.n)
            .flat_map(|m| (1..=Self::max_b(self.n)).map(move |b| Signature::new(m, b)))
            .map(|sig| (sig, &self.entries[self.index(sig.m, sig.b)]))
    }
}

/// Valid `(m', b')` that expand to `sig`, in increasing `b'`.
pub fn oe_predecessors(sig: Signature, n: usize) -> Vec<Signature> {
    let d = sig.m + sig.b;
    if sig.b == 0 {
        return Vec::new();
    }
    (sig.b.div_ceil(2)..=sig.b.min(d / 2))
        .map(|bp| Signature::new(d - 2 * bp, bp))
        .filter(|p| p.m <= n && p.b < 2 * n)
        .collect()
}

/// A solved one-ended instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneEndedResult {
    pub cost: u64,
    pub codebook: CodeBook,
    pub table: OneEndedTable,
    /// `(0,1) → … → (n, b)`.
    pub expansion: Vec<Signature>,
    pub cells_updated: u64,
}

/// RMQ-batched solver.
pub fn solve_one_ended(w: &WeightSeq) -> Result<OneEndedResult> {
    solve_with(w, Algorithm::Batched)
}

/// Direct minimization over predecessors in lexicographic order.
pub fn solve_one_ended_naive(w: &WeightSeq) -> Result<OneEndedResult> {
    solve_with(w, Algorithm::Naive)
}

pub fn solve_with(w: &WeightSeq, algorithm: Algorithm) -> Result<OneEndedResult> {
    let n = w.n();
    let mut cells = 0u64;
    let table = match algorithm {
        Algorithm::Naive => fill_naive(w, &mut cells)?,
        Algorithm::Batched => fill_batched(w, &mut cells)?,
    };
    let (b, cost) = (1..=(2 * n).saturating_sub(2).max(1))
        .filter_map(|b| table.cost(n, b).finite().map(|c| (b, c)))
        .fold(None, |best: Option<(usize, u64)>, (b, c)| match best {
            Some((_, bc)) if bc <= c => best,
            _ => Some((b, c)),
        })
        .ok_or(Error::NoFeasibleTree)?;
    let expansion = backtrack(&table, Signature::new(n, b))?;
    let codebook = build_code(&expansion, w)?;
    if codebook.cost != cost {
        return Err(Error::InternalInconsistency);
    }
    Ok(OneEndedResult { cost, codebook, table, expansion, cells_updated: cells })
}

fn fill_naive(w: &WeightSeq, cells: &mut u64) -> Result<OneEndedTable> {
    let n = w.n();
    let mut t = OneEndedTable::new(n);
    for m in 0..=n {
        for b in 1..=OneEndedTable::max_b(n) {
            let sig = Signature::new(m, b);
            if sig == Signature::ROOT {
                continue;
            }
            let mut best = Entry::UNREACHABLE;
            for p in oe_predecessors(sig, n) {
                *cells += 1;
                let g = t.cost(p.m, p.b).extend(1, w.suffix(p.m))?;
                if g < best.cost {
                    best = Entry::new(g, p, 0);
                }
            }
            t.set(sig, best);
        }
    }
    Ok(t)
}

fn fill_batched(w: &WeightSeq, cells: &mut u64) -> Result<OneEndedTable> {
    let n = w.n();
    let max_b = OneEndedTable::max_b(n);
    let mut t = OneEndedTable::new(n);
    let mut gamma = Vec::new();
    for d in 2..=3 * n - 1 {
        // γ[k] is γ(b' = k + 1)
        gamma.clear();
        for bp in 1..=d / 2 {
            *cells += 1;
            let mp = d - 2 * bp;
            gamma.push(t.cost(mp, bp).extend(1, w.suffix(mp))?);
        }
        let rmq = SparseTable::build(&gamma)?;
        *cells += rmq.build_cells();
        for m in d.saturating_sub(max_b)..=n.min(d - 1) {
            let b = d - m;
            *cells += 1;
            let (lo, hi) = (b.div_ceil(2), b.min(d / 2));
            if lo > hi {
                // m' = d - 2b' would be negative
                continue;
            }
            let k = rmq.argmin(lo - 1, hi - 1);
            let bp = k + 1;
            t.set(Signature::new(m, b), Entry::new(gamma[k], Signature::new(d - 2 * bp, bp), 0));
        }
    }
    Ok(t)
}

fn backtrack(t: &OneEndedTable, end: Signature) -> Result<Vec<Signature>> {
    let mut path = alloc::vec![end];
    let mut sig = end;
    while sig != Signature::ROOT {
        let e = t.get(sig).ok_or(Error::InternalInconsistency)?;
        if !e.cost.is_finite() || e.pred.m + e.pred.b >= sig.m + sig.b {
            return Err(Error::InternalInconsistency);
        }
        sig = e.pred;
        path.push(sig);
    }
    path.reverse();
    Ok(path)
}

/// Grows the tree along the expansion path. Bad nodes are kept with their
/// `0`-children ahead of the unused `1`-children; each step turns the first
/// `m_i - m_{i-1}` `1`-children into leaves for the next weights.
fn build_code(path: &[Signature], w: &WeightSeq) -> Result<CodeBook> {
    let mut bad: Vec<Codeword> = alloc::vec![Vec::new()];
    let mut words = Vec::with_capacity(w.n());
    let mut depths = Vec::with_capacity(w.n());
    let mut cost = 0u64;
    for (depth, pair) in (1u64..).zip(path.windows(2)) {
        let (prev, next) = (pair[0], pair[1]);
        let good = next.m.checked_sub(prev.m).ok_or(Error::InternalInconsistency)?;
        if good > bad.len() || bad.len() != prev.b {
            return Err(Error::InternalInconsistency);
        }
        let mut zeros = Vec::with_capacity(bad.len());
        let mut ones = Vec::new();
        for (k, v) in bad.iter().enumerate() {
            let mut z = v.clone();
            z.push(0);
            zeros.push(z);
            let mut o = v.clone();
            o.push(1);
            if k < good {
                let p = w.weight(words.len() + 1);
                cost = depth.checked_mul(p).and_then(|s| cost.checked_add(s)).ok_or(Error::Overflow)?;
                words.push(o);
                depths.push(depth);
            } else {
                ones.push(o);
            }
        }
        zeros.extend(ones);
        bad = zeros;
        if bad.len() != next.b {
            return Err(Error::InternalInconsistency);
        }
    }
    if words.len() != w.n() {
        return Err(Error::InternalInconsistency);
    }
    Ok(CodeBook { words, depths, cost })
}
