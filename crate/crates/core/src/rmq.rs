//! Sparse-table range-minimum queries with smallest-index tie breaking.

use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct SparseTable<T> {
    values: Vec<T>,
    levels: Vec<Vec<u32>>,
}

impl<T: Ord + Copy> SparseTable<T> {
    pub fn new(values: Vec<T>) -> Self {
        let n = values.len();
        let mut levels: Vec<Vec<u32>> = Vec::new();
        if n > 0 {
            levels.push((0..n as u32).collect());
        }
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let next = (0..=n - 2 * width).map(|i| pick(&values, prev[i], prev[i + width])).collect();
            levels.push(next);
            width *= 2;
        }
        Self { values, levels }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Smallest position of a minimum over `(b..e]`, 1-based.
    pub fn query(&self, b: usize, e: usize) -> Result<usize> {
        if b >= e {
            return Err(Error::EmptyRange { b, e });
        }
        if e > self.values.len() {
            return Err(Error::IndexOutOfRange { index: e, len: self.values.len() });
        }
        let len = e - b;
        let lvl = (usize::BITS - 1 - len.leading_zeros()) as usize;
        let row = &self.levels[lvl];
        let best = pick(&self.values, row[b], row[e - (1 << lvl)]);
        Ok(best as usize + 1)
    }

    pub fn value(&self, i: usize) -> T {
        self.values[i - 1]
    }
}

#[inline]
fn pick<T: Ord>(values: &[T], i: u32, j: u32) -> u32 {
    if values[j as usize] < values[i as usize] {
        j
    } else {
        i
    }
}
