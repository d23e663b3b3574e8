//! Sorted weight sequences with suffix sums.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Weights sorted non-increasing, with the suffix sums `W_m = Σ_{t>m} p_t`.
///
/// Indices are 1-based in the accessors (`weight(1)` is the largest) to match
/// leaf labels; any index past `n` reads as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSeq {
    weights: Vec<u64>,
    suffix: Vec<u64>,
    order: Vec<usize>,
}

impl WeightSeq {
    /// Sorts `raw` (stably, so equal weights keep caller order) and builds the
    /// suffix sums.
    pub fn new(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::invalid("weight sequence is empty"));
        }
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by(|&a, &b| raw[b].cmp(&raw[a]));
        let weights: Vec<u64> = order.iter().map(|&i| raw[i]).collect();

        let mut suffix = alloc::vec![0u64; weights.len() + 1];
        for m in (0..weights.len()).rev() {
            suffix[m] = suffix[m + 1].checked_add(weights[m]).ok_or(Error::Overflow)?;
        }
        Ok(WeightSeq { weights, suffix, order })
    }

    /// Like [`WeightSeq::new`] but rejects negative entries.
    pub fn from_signed(raw: &[i64]) -> Result<Self> {
        let mut unsigned = Vec::with_capacity(raw.len());
        for &x in raw {
            let x = u64::try_from(x).map_err(|_| Error::invalid("negative weight"))?;
            unsigned.push(x);
        }
        Self::new(&unsigned)
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// The sorted weights `p_1 ≥ … ≥ p_n`.
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// `p_t` for 1-based `t`; zero past `n`.
    pub fn weight(&self, t: usize) -> u64 {
        if t == 0 {
            return 0;
        }
        self.weights.get(t - 1).copied().unwrap_or(0)
    }

    /// `W_m`, zero for `m ≥ n`.
    #[inline]
    pub fn suffix(&self, m: usize) -> u64 {
        self.suffix.get(m).copied().unwrap_or(0)
    }

    /// All suffix sums `W_0 … W_n`.
    pub fn suffix_sums(&self) -> &[u64] {
        &self.suffix
    }

    pub fn total(&self) -> u64 {
        self.suffix[0]
    }

    /// `order()[k]` is the caller index of the `k`-th sorted weight.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Reorders per-sorted-position items back into caller order.
    pub fn to_caller_order<T: Clone>(&self, sorted: &[T]) -> Vec<T> {
        debug_assert_eq!(sorted.len(), self.n());
        let mut out: Vec<Option<T>> = alloc::vec![None; sorted.len()];
        for (k, &orig) in self.order.iter().enumerate() {
            out[orig] = Some(sorted[k].clone());
        }
        out.into_iter().map(|x| x.expect("order is a permutation")).collect()
    }
}
