//! One entry point over every supported problem, plus the matching oracle.

use prefixdp_core::gmr::Signature;
use prefixdp_core::oracle::{enumerate_choice, enumerate_gmr, enumerate_one_ended, huffman_greedy, OracleBudget};
use prefixdp_core::one_ended;
use prefixdp_core::problems::{self, GLengthsSpec, MixedRadixSpec, ReservedSpec, Solution};
use prefixdp_core::{Algorithm, CodeBook, Error, LeafSequence, LevelSpec, Result, SolveOptions, WeightSeq};

/// A fully parameterized problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProblemSpec {
    Gmr(LevelSpec),
    MixedRadix(MixedRadixSpec),
    ReservedGiven(ReservedSpec),
    ReservedG(GLengthsSpec),
    OneEnded,
    Huffman(usize),
}

impl ProblemSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ProblemSpec::Gmr(_) => "gmr",
            ProblemSpec::MixedRadix(_) => "mixed-radix",
            ProblemSpec::ReservedGiven(_) => "reserved-given",
            ProblemSpec::ReservedG(_) => "reserved-g",
            ProblemSpec::OneEnded => "one-ended",
            ProblemSpec::Huffman(_) => "huffman",
        }
    }

    /// Largest symbol count on any level of the emitted code.
    pub fn alphabet(&self) -> usize {
        match self {
            ProblemSpec::Gmr(s) => s.levels().iter().map(|l| l.arity).max().unwrap_or(2),
            ProblemSpec::MixedRadix(s) => s.arities().iter().copied().max().unwrap_or(2),
            ProblemSpec::ReservedGiven(s) => s.radix(),
            ProblemSpec::ReservedG(s) => s.radix(),
            ProblemSpec::OneEnded => 2,
            ProblemSpec::Huffman(r) => *r,
        }
    }
}

/// What a solve produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub cost: u64,
    /// Absent in cost-only runs.
    pub codebook: Option<CodeBook>,
    pub leaves: Option<LeafSequence>,
    /// DP signatures from the root to the answer, when available.
    pub expansion: Vec<Signature>,
    pub cells_updated: u64,
}

impl From<Solution> for Outcome {
    fn from(s: Solution) -> Self {
        Outcome { cost: s.cost, codebook: s.codebook, leaves: s.leaves, expansion: Vec::new(), cells_updated: s.cells_updated }
    }
}

/// Solves `spec`. `opts.keep_tables = false` skips code reconstruction where
/// the solver supports it.
pub fn solve(spec: &ProblemSpec, w: &WeightSeq, opts: SolveOptions) -> Result<Outcome> {
    match spec {
        ProblemSpec::Gmr(levels) => {
            let r = prefixdp_core::gmr::solve(w, levels, opts)?;
            let codebook = match (&r.leaves, &r.chosen) {
                (Some(seq), Some(chosen)) => Some(CodeBook::from_leaf_sequence(seq, w, chosen)?),
                _ => None,
            };
            Ok(Outcome {
                cost: r.answer.cost,
                codebook,
                leaves: r.leaves,
                expansion: r.expansion,
                cells_updated: r.cells_updated,
            })
        }
        ProblemSpec::MixedRadix(s) => problems::solve_mixed_radix_with(w, s, opts).map(Outcome::from),
        ProblemSpec::ReservedGiven(s) => problems::solve_reserved_given_with(w, s, opts).map(Outcome::from),
        ProblemSpec::ReservedG(s) => problems::solve_reserved_g_with(w, s, opts).map(Outcome::from),
        ProblemSpec::Huffman(r) => problems::solve_huffman_with(w, *r, opts).map(Outcome::from),
        ProblemSpec::OneEnded => {
            if opts.max_level.is_some() {
                return Err(Error::InvalidInput("one-ended codes take no level limit".into()));
            }
            let r = one_ended::solve_with(w, opts.algorithm)?;
            let mut counts = vec![0usize; r.expansion.len()];
            for pair in r.expansion.windows(2).enumerate() {
                counts[pair.0 + 1] = pair.1[1].m - pair.1[0].m;
            }
            Ok(Outcome {
                cost: r.cost,
                codebook: Some(r.codebook),
                leaves: Some(LeafSequence::new(counts)?),
                expansion: r.expansion,
                cells_updated: r.cells_updated,
            })
        }
    }
}

/// Reference cost from the exhaustive or greedy oracle that matches `spec`.
pub fn oracle_cost(spec: &ProblemSpec, w: &WeightSeq, max_level: Option<usize>) -> Result<(&'static str, u64)> {
    let budget = OracleBudget::default();
    let n = w.n();
    match spec {
        ProblemSpec::Gmr(levels) => {
            let cap = max_level.unwrap_or(n.min(levels.len()));
            Ok(("enumerate_gmr", enumerate_gmr(w, levels, cap, budget)?))
        }
        ProblemSpec::MixedRadix(s) => {
            let levels = s.level_spec(n)?;
            Ok(("enumerate_gmr", enumerate_gmr(w, &levels, max_level.unwrap_or(n), budget)?))
        }
        ProblemSpec::ReservedGiven(s) => {
            let levels = s.level_spec()?;
            Ok(("enumerate_gmr", enumerate_gmr(w, &levels, max_level.unwrap_or(levels.len()), budget)?))
        }
        ProblemSpec::ReservedG(s) => {
            let cspec = s.choice_spec(n)?;
            // 1 + log_r n options per level, at most 4 within the n limit
            let budget = OracleBudget { max_options: 4, ..budget };
            Ok(("enumerate_choice", enumerate_choice(w, &cspec, max_level.unwrap_or(cspec.len()), budget)?))
        }
        ProblemSpec::OneEnded => {
            let depth = (n + 2).min(OracleBudget::ONE_ENDED.max_level);
            Ok(("enumerate_one_ended", enumerate_one_ended(w, depth, OracleBudget::ONE_ENDED)?))
        }
        ProblemSpec::Huffman(r) => Ok(("huffman_greedy", huffman_greedy(w, *r)?)),
    }
}

/// Solves with full reconstruction.
pub fn solve_full(spec: &ProblemSpec, w: &WeightSeq, algorithm: Algorithm, max_level: Option<usize>) -> Result<Outcome> {
    solve(spec, w, SolveOptions { algorithm, max_level, keep_tables: true })
}
