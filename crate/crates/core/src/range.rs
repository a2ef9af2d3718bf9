//! Definitional range counting and selection over integer arrays.
//!
//! `a[0]` holds `A[1]`; all positions in arguments and results are 1-based.

/// `Count_A(j, v)`: how many `i ∈ [1..j]` have `A[i] ≥ v`.
pub fn range_count(a: &[usize], j: usize, v: i64) -> usize {
    a[..j.min(a.len())].iter().filter(|&&x| x as i64 >= v).count()
}

/// `Select_A(r, v)`: the `r`-th smallest `i` with `A[i] ≥ v`, if there is one.
pub fn range_select(a: &[usize], r: usize, v: i64) -> Option<usize> {
    if r == 0 {
        return None;
    }
    a.iter().enumerate().filter(|(_, &x)| x as i64 >= v).nth(r - 1).map(|(i, _)| i + 1)
}

/// Smallest position of a minimum of `A` over `(b..e]`, by linear scan.
pub fn rmq_scan<T: Ord>(a: &[T], b: usize, e: usize) -> Option<usize> {
    if b >= e || e > a.len() {
        return None;
    }
    let mut best = b;
    for i in b + 1..e {
        if a[i] < a[best] {
            best = i;
        }
    }
    Some(best + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: [usize; 9] = [5, 1, 2, 8, 4, 7, 6, 2, 9];

    #[test]
    fn worked_examples() {
        assert_eq!(range_count(&A, 6, 4), 4);
        assert_eq!(range_select(&A, 4, 5), Some(7));
        assert_eq!(rmq_scan(&A, 2, 9), Some(3));
    }

    #[test]
    fn edges() {
        assert_eq!(range_count(&A, 0, 1), 0);
        assert_eq!(range_select(&A, 0, 1), None);
        assert_eq!(range_select(&A, 3, 9), None);
        assert_eq!(rmq_scan(&A, 3, 3), None);
        assert_eq!(rmq_scan(&A, 0, 1), Some(1));
    }
}
