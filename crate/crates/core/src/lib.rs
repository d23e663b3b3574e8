//! Top-down dynamic programs for optimal prefix-free codes whose trees are
//! described level by level: mixed-radix and generalized mixed-radix (GMR)
//! codes, codes with reserved codeword lengths, and binary codes in which
//! every word ends in `1`.
//!
//! Each problem has a naive solver and a batched one that fills the DP table
//! an order of magnitude faster; both produce identical tables. The
//! [`oracle`] module holds exhaustive and greedy reference solvers.

#![no_std]

extern crate alloc;

pub mod choice;
pub mod code;
pub mod error;
pub mod gmr;
pub mod levels;
pub mod one_ended;
pub mod oracle;
pub mod problems;
pub mod rmq;
pub mod weights;

pub use code::{CodeBook, Codeword, Cost, LeafSequence};
pub use error::{Error, Result};
pub use gmr::{Algorithm, DpResult, SolveOptions};
pub use levels::{ChoiceLevelSpec, Level, LevelSpec};
pub use weights::WeightSeq;
