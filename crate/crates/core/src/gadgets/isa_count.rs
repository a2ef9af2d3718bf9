use alloc::vec::Vec;

use super::{binary_text, check_permutation, push_run, Gadget, GadgetKind, QueryOutcome};
use crate::measures::{run_factorization, LzFactorization};
use crate::range::range_count;
use crate::text::{build_bundle, pattern_range, SuffixArrayBundle, Text};
use crate::{Error, Result};

/// Range counting through the inverse suffix array:
/// `T = (⊙ 0^{A[i]} 1^i) · 0^{n+1} 1^{n+1} · (⊙_{i=1..n+1} 0^{n+1} 1^i)`.
#[derive(Debug, Clone)]
pub struct IsaCountGadget {
    pub a: Vec<usize>,
    pub text: Text,
    pub bundle: SuffixArrayBundle,
    /// `anchors[v − 1] = RangeBeg(0^v 1)` for `v ∈ [1..n]`.
    pub anchors: Vec<usize>,
}

impl IsaCountGadget {
    pub fn new(a: Vec<usize>) -> Result<Self> {
        check_permutation(&a)?;
        let n = a.len();
        let mut s = Vec::new();
        for (i, &ai) in a.iter().enumerate() {
            push_run(&mut s, 0, ai);
            push_run(&mut s, 1, i + 1);
        }
        push_run(&mut s, 0, n + 1);
        push_run(&mut s, 1, n + 1);
        for i in 1..=n + 1 {
            push_run(&mut s, 0, n + 1);
            push_run(&mut s, 1, i);
        }
        let text = binary_text(s);
        let bundle = build_bundle(&text)?;
        let anchors = compute_anchors(&text, &bundle, n);
        Ok(Self { a, text, bundle, anchors })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// `Count_A(j, v) = ISA[j′] − (b + j + 1)`, where `j′` starts the copy
    /// of `0^v 1` in the `(j+1)`-th block of the tail. `v < 1` gives `j`,
    /// `v > n` gives 0.
    pub fn count_via_isa(&self, j: usize, v: i64) -> Result<i64> {
        let n = self.n();
        if j > n {
            return Err(Error::OutOfContract("j outside [0..n]"));
        }
        if v < 1 {
            return Ok(j as i64);
        }
        if v as usize > n {
            return Ok(0);
        }
        let v = v as usize;
        let b = self.anchors[v - 1];
        let delta = j * (n + 1) + j * (j + 1) / 2 + (n + 2 - v);
        let jp = n * (n + 1) + 2 * (n + 1) + delta;
        let rank = *self.bundle.isa.get(jp).ok_or(Error::InvariantViolated("ISA index past the end"))?;
        Ok(rank as i64 - (b + j + 1) as i64)
    }
}

fn compute_anchors(text: &Text, bundle: &SuffixArrayBundle, n: usize) -> Vec<usize> {
    (1..=n)
        .map(|v| {
            let mut p = alloc::vec![0u32; v];
            p.push(1);
            pattern_range(text, &bundle.sa, &p).range_beg
        })
        .collect()
}

impl Gadget for IsaCountGadget {
    fn kind(&self) -> GadgetKind {
        GadgetKind::IsaCount
    }

    fn text(&self) -> &Text {
        &self.text
    }

    fn bundle(&self) -> &SuffixArrayBundle {
        &self.bundle
    }

    fn expected_len(&self) -> usize {
        let n = self.n();
        (5 * n + 8) * (n + 1) / 2
    }

    fn expected_runs(&self) -> Option<usize> {
        Some(4 * (self.n() + 1))
    }

    fn anchors_match(&self) -> bool {
        compute_anchors(&self.text, &self.bundle, self.n()) == self.anchors
    }

    fn certificate(&self) -> (LzFactorization, usize) {
        (run_factorization(&self.text), 2 * self.expected_runs().unwrap())
    }

    fn for_each_query(&self, f: &mut dyn FnMut(QueryOutcome)) {
        let n = self.n();
        for j in 0..=n {
            for v in -1..=n as i64 + 1 {
                let expected = range_count(&self.a, j, v) as i64;
                let got = self.count_via_isa(j, v).ok();
                f(QueryOutcome { args: (j as i64, v), expected, got });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::verify_reduction;
    use alloc::vec;

    #[test]
    fn worked_instance() {
        let g = IsaCountGadget::new(vec![2, 1, 3]).unwrap();
        assert_eq!(g.count_via_isa(2, 2), Ok(1));
        assert_eq!(g.count_via_isa(2, 4), Ok(0));
        assert_eq!(g.count_via_isa(2, 0), Ok(2));
        assert!(verify_reduction(&g, 0).passed());
    }
}
