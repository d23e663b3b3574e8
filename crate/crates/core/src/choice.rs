//! GMR with a set of `(arity, edge)` options on every level.
//!
//! Each option is filled on its own from the combined previous level, and the
//! level table keeps the per-entry minimum (smallest option index on ties).
//! A finished signature `(m, 0)` is valid when some option's range admits it.

use crate::error::Result;
use crate::gmr::{self, Algorithm, DpResult, LevelTable, SolveOptions};
use crate::levels::{ChoiceLevelSpec, Level};
use crate::weights::WeightSeq;

/// Solves with the batched per-option fill.
pub fn solve_choice(w: &WeightSeq, cspec: &ChoiceLevelSpec, max_level: Option<usize>) -> Result<DpResult> {
    gmr::run(w, cspec, SolveOptions { algorithm: Algorithm::Batched, max_level, keep_tables: true })
}

/// Solves with the naive per-option fill.
pub fn solve_choice_naive(w: &WeightSeq, cspec: &ChoiceLevelSpec, max_level: Option<usize>) -> Result<DpResult> {
    gmr::run(w, cspec, SolveOptions { algorithm: Algorithm::Naive, max_level, keep_tables: true })
}

/// General entry point.
pub fn solve_choice_with(w: &WeightSeq, cspec: &ChoiceLevelSpec, opts: SolveOptions) -> Result<DpResult> {
    gmr::run(w, cspec, opts)
}

/// `OPT^{i,j}`: level `i` filled with option `j` alone from the combined
/// level `i - 1` table.
pub fn per_option_fill(
    i: usize,
    j: usize,
    option: Level,
    prev: &LevelTable,
    w: &WeightSeq,
    cells: &mut u64,
) -> Result<LevelTable> {
    gmr::fill_option(prev, i, option, j, w, Algorithm::Batched, cells)
}
