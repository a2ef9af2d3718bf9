use alloc::vec::Vec;
use core::ops::Index;

/// A vector addressed with 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Array1<T> {
    data: Vec<T>,
}

impl<T> Array1<T> {
    pub fn from_vec(data: Vec<T>) -> Self {
        Self { data }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Element at 1-based position `i`, or `None` when `i` is 0 or past the end.
    pub fn get(&self, i: usize) -> Option<&T> {
        i.checked_sub(1).and_then(|k| self.data.get(k))
    }

    /// Values in order, as a plain slice (slot 0 holds position 1).
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn iter(&self) -> core::slice::Iter<'_, T> {
        self.data.iter()
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }
}

impl<T> Index<usize> for Array1<T> {
    type Output = T;

    #[inline]
    fn index(&self, i: usize) -> &T {
        assert!(i >= 1, "positions are 1-based");
        &self.data[i - 1]
    }
}

impl<T> From<Vec<T>> for Array1<T> {
    fn from(data: Vec<T>) -> Self {
        Self { data }
    }
}

impl<'a, T> IntoIterator for &'a Array1<T> {
    type Item = &'a T;
    type IntoIter = core::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.data.iter()
    }
}
