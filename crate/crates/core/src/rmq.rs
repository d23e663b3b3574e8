//! Static range-minimum queries over a sparse table.
//!
//! `O(L log L)` build, `O(1)` argmin queries. Ties resolve to the smallest
//! index. An `O(L)` construction (block decomposition plus in-block tables)
//! would remove the log factor from the one-ended batched solver; the sparse
//! table keeps the same query contract.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Argmin index over a copy of the source values.
#[derive(Clone, Debug)]
pub struct SparseTable<T> {
    values: Vec<T>,
    /// `rows[k][i]` is the argmin of `values[i .. i + 2^k]`.
    rows: Vec<Vec<u32>>,
}

impl<T: Ord + Copy> SparseTable<T> {
    pub fn build(values: &[T]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("RMQ over an empty array"));
        }
        if values.len() > u32::MAX as usize {
            return Err(Error::invalid("RMQ array too long"));
        }
        let len = values.len();
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(floor_log2(len) + 1);
        rows.push((0..len as u32).collect());
        let mut width = 1usize;
        while 2 * width <= len {
            let prev = &rows[rows.len() - 1];
            let row: Vec<u32> = (0..=len - 2 * width)
                .map(|i| pick(values, prev[i], prev[i + width]))
                .collect();
            rows.push(row);
            width *= 2;
        }
        Ok(SparseTable { values: values.to_vec(), rows })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of table cells written during the build.
    pub fn build_cells(&self) -> u64 {
        self.rows.iter().map(|r| r.len() as u64).sum()
    }

    pub fn value(&self, i: usize) -> T {
        self.values[i]
    }

    /// Smallest index of a minimum in `values[i..=j]`.
    pub fn query(&self, i: usize, j: usize) -> Result<usize> {
        if i > j || j >= self.values.len() {
            return Err(Error::InvalidRange { i, j, len: self.values.len() });
        }
        Ok(self.argmin(i, j))
    }

    /// [`SparseTable::query`] without the range check.
    #[inline]
    pub(crate) fn argmin(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= j && j < self.values.len());
        let k = floor_log2(j - i + 1);
        let row = &self.rows[k];
        pick(&self.values, row[i], row[j + 1 - (1 << k)]) as usize
    }
}

#[inline]
fn pick<T: Ord + Copy>(values: &[T], a: u32, b: u32) -> u32 {
    // a and b may coincide or overlap; ties go to the lower index.
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    if values[hi as usize] < values[lo as usize] {
        hi
    } else {
        lo
    }
}

#[inline]
fn floor_log2(x: usize) -> usize {
    debug_assert!(x > 0);
    (usize::BITS - 1 - x.leading_zeros()) as usize
}
