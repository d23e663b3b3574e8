//! Reductions from named coding problems to (choice-)GMR instances, and the
//! mapping of solutions back to codewords over the original alphabet.

use alloc::vec::Vec;

use crate::code::{CodeBook, LeafSequence};
use crate::error::{Error, Result};
use crate::gmr::{self, Algorithm, DpResult, SolveOptions};
use crate::levels::{ChoiceLevelSpec, Level, LevelSpec};
use crate::weights::WeightSeq;

/// Arities `t_0, t_1, …`; level `i` of the tree uses `t_{i-1}`. A list
/// shorter than the tree depth repeats its last arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedRadixSpec {
    arities: Vec<usize>,
}

impl MixedRadixSpec {
    pub fn new(arities: Vec<usize>) -> Result<Self> {
        if arities.is_empty() {
            return Err(Error::invalid("mixed radix needs at least one arity"));
        }
        if arities.iter().any(|&t| t < 2) {
            return Err(Error::invalid("arity must be at least 2"));
        }
        Ok(MixedRadixSpec { arities })
    }

    pub fn arities(&self) -> &[usize] {
        &self.arities
    }

    /// `levels` levels with unit edges.
    pub fn level_spec(&self, levels: usize) -> Result<LevelSpec> {
        let last = self.arities[self.arities.len() - 1];
        LevelSpec::new(
            (0..levels).map(|i| Level::new(self.arities.get(i).copied().unwrap_or(last), 1)).collect(),
        )
    }
}

/// Alphabet size `r` and the allowed codeword lengths `γ_1 < … < γ_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReservedSpec {
    radix: usize,
    lengths: Vec<u64>,
}

impl ReservedSpec {
    pub fn new(radix: usize, lengths: Vec<u64>) -> Result<Self> {
        if radix < 2 {
            return Err(Error::invalid("radix must be at least 2"));
        }
        if lengths.is_empty() {
            return Err(Error::invalid("at least one codeword length is required"));
        }
        if lengths[0] == 0 || lengths.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::invalid("lengths must be positive and strictly increasing"));
        }
        Ok(ReservedSpec { radix, lengths })
    }

    pub fn radix(&self) -> usize {
        self.radix
    }

    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    /// One meta-level per length: arity `r^{γ_k - γ_{k-1}}`, edge `γ_k - γ_{k-1}`.
    pub fn level_spec(&self) -> Result<LevelSpec> {
        let mut prev = 0u64;
        let mut levels = Vec::with_capacity(self.lengths.len());
        for &gamma in &self.lengths {
            let step = gamma - prev;
            levels.push(Level::new(power(self.radix, step)?, step));
            prev = gamma;
        }
        LevelSpec::new(levels)
    }
}

/// Alphabet size `r` and a budget `g` of distinct codeword lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GLengthsSpec {
    radix: usize,
    g: usize,
}

impl GLengthsSpec {
    pub fn new(radix: usize, g: usize) -> Result<Self> {
        if radix < 2 {
            return Err(Error::invalid("radix must be at least 2"));
        }
        if g == 0 {
            return Err(Error::invalid("at least one codeword length is required"));
        }
        Ok(GLengthsSpec { radix, g })
    }

    pub fn radix(&self) -> usize {
        self.radix
    }

    pub fn g(&self) -> usize {
        self.g
    }

    /// `g` levels offering `(r^t, t)` for `t = 1..=1 + ⌊log_r n⌋`.
    pub fn choice_spec(&self, n: usize) -> Result<ChoiceLevelSpec> {
        let mut options = Vec::new();
        let mut arity = self.radix;
        let mut t = 1u64;
        loop {
            options.push(Level::new(arity, t));
            if arity > n {
                break;
            }
            arity = arity.checked_mul(self.radix).ok_or(Error::ArityOverflow)?;
            t += 1;
        }
        ChoiceLevelSpec::new(alloc::vec![options; self.g])
    }
}

fn power(radix: usize, exp: u64) -> Result<usize> {
    let exp = u32::try_from(exp).map_err(|_| Error::ArityOverflow)?;
    radix.checked_pow(exp).ok_or(Error::ArityOverflow)
}

/// A solved instance. `codebook` and `leaves` are absent in cost-only mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub cost: u64,
    pub codebook: Option<CodeBook>,
    /// Leaves per depth of the emitted code tree (one entry per symbol of
    /// depth for the alphabet-level reductions).
    pub leaves: Option<LeafSequence>,
    pub cells_updated: u64,
}

impl Solution {
    fn from_levels(w: &WeightSeq, r: DpResult) -> Result<Self> {
        let codebook = match (&r.leaves, &r.chosen) {
            (Some(seq), Some(spec)) => Some(CodeBook::from_leaf_sequence(seq, w, spec)?),
            _ => None,
        };
        Ok(Solution { cost: r.answer.cost, codebook, leaves: r.leaves, cells_updated: r.cells_updated })
    }

    /// Re-expands meta-level leaves into an `r`-ary tree, placing the leaves
    /// of meta-level `k` at depth `L(k)`.
    fn from_meta_levels(w: &WeightSeq, radix: usize, r: DpResult) -> Result<Self> {
        let (Some(meta), Some(chosen)) = (&r.leaves, &r.chosen) else {
            return Ok(Solution { cost: r.answer.cost, codebook: None, leaves: None, cells_updated: r.cells_updated });
        };
        let deepest = usize::try_from(chosen.depth(chosen.len())).map_err(|_| Error::Overflow)?;
        let mut counts = alloc::vec![0usize; deepest + 1];
        for (k, &c) in meta.counts().iter().enumerate().skip(1) {
            counts[chosen.depth(k) as usize] += c;
        }
        let leaves = LeafSequence::new(counts)?;
        let tree = LevelSpec::uniform(radix, 1, deepest)?;
        let codebook = CodeBook::from_leaf_sequence(&leaves, w, &tree)?;
        if codebook.cost != r.answer.cost {
            return Err(Error::InternalInconsistency);
        }
        Ok(Solution { cost: r.answer.cost, codebook: Some(codebook), leaves: Some(leaves), cells_updated: r.cells_updated })
    }
}

/// Plain GMR over an explicit level spec.
pub fn solve_gmr(w: &WeightSeq, spec: &LevelSpec, opts: SolveOptions) -> Result<Solution> {
    Solution::from_levels(w, gmr::solve(w, spec, opts)?)
}

/// Mixed-radix code with `n` levels.
pub fn solve_mixed_radix_with(w: &WeightSeq, spec: &MixedRadixSpec, opts: SolveOptions) -> Result<Solution> {
    let levels = spec.level_spec(w.n())?;
    Solution::from_levels(w, gmr::solve(w, &levels, opts)?)
}

pub fn solve_mixed_radix(w: &WeightSeq, spec: &MixedRadixSpec) -> Result<CodeBook> {
    codebook(solve_mixed_radix_with(w, spec, SolveOptions::new(Algorithm::Batched))?)
}

/// Codeword lengths restricted to a given set.
pub fn solve_reserved_given_with(w: &WeightSeq, spec: &ReservedSpec, opts: SolveOptions) -> Result<Solution> {
    let capacity = spec.lengths[spec.lengths.len() - 1];
    if power(spec.radix, capacity).is_ok_and(|slots| slots < w.n()) {
        return Err(Error::NoFeasibleTree);
    }
    let levels = spec.level_spec()?;
    let opts = SolveOptions { max_level: Some(opts.max_level.unwrap_or(levels.len())), ..opts };
    Solution::from_meta_levels(w, spec.radix, gmr::solve(w, &levels, opts)?)
}

pub fn solve_reserved_given(w: &WeightSeq, spec: &ReservedSpec) -> Result<CodeBook> {
    codebook(solve_reserved_given_with(w, spec, SolveOptions::new(Algorithm::Batched))?)
}

/// At most `g` distinct codeword lengths.
pub fn solve_reserved_g_with(w: &WeightSeq, spec: &GLengthsSpec, opts: SolveOptions) -> Result<Solution> {
    let cspec = spec.choice_spec(w.n())?;
    let opts = SolveOptions { max_level: Some(opts.max_level.unwrap_or(cspec.len())), ..opts };
    Solution::from_meta_levels(w, spec.radix, gmr::run(w, &cspec, opts)?)
}

pub fn solve_reserved_g(w: &WeightSeq, spec: &GLengthsSpec) -> Result<CodeBook> {
    codebook(solve_reserved_g_with(w, spec, SolveOptions::new(Algorithm::Batched))?)
}

/// Constant arity `r` with unit edges: an `r`-ary Huffman code.
pub fn solve_huffman_with(w: &WeightSeq, radix: usize, opts: SolveOptions) -> Result<Solution> {
    let levels = LevelSpec::uniform(radix, 1, w.n())?;
    Solution::from_levels(w, gmr::solve(w, &levels, opts)?)
}

pub fn solve_huffman_reference_adapter(w: &WeightSeq, radix: usize) -> Result<CodeBook> {
    codebook(solve_huffman_with(w, radix, SolveOptions::new(Algorithm::Batched))?)
}

fn codebook(s: Solution) -> Result<CodeBook> {
    s.codebook.ok_or(Error::InternalInconsistency)
}
