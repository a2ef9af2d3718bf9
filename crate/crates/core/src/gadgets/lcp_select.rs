use alloc::vec::Vec;

use super::{binary_text, check_permutation, push_run, Gadget, GadgetKind, QueryOutcome};
use crate::measures::{run_factorization, LzFactorization};
use crate::range::{range_count, range_select};
use crate::text::{build_bundle, pattern_range, SuffixArrayBundle, Text};
use crate::{Error, Result};

/// Range selection through the LCP array:
/// `T = (⊙_{i=1..n} 0^{A[i]} 1^i) · 0^{n+1} 1^{n+1}`.
#[derive(Debug, Clone)]
pub struct LcpSelectGadget {
    pub a: Vec<usize>,
    pub text: Text,
    pub bundle: SuffixArrayBundle,
    /// `anchors[v − 1] = RangeBeg(0^v 1)` for `v ∈ [1..n]`.
    pub anchors: Vec<usize>,
}

impl LcpSelectGadget {
    pub fn new(a: Vec<usize>) -> Result<Self> {
        check_permutation(&a)?;
        let n = a.len();
        let mut s = Vec::with_capacity((n + 2) * (n + 1));
        for (i, &ai) in a.iter().enumerate() {
            push_run(&mut s, 0, ai);
            push_run(&mut s, 1, i + 1);
        }
        push_run(&mut s, 0, n + 1);
        push_run(&mut s, 1, n + 1);
        let text = binary_text(s);
        let bundle = build_bundle(&text)?;
        let anchors = compute_anchors(&text, &bundle, n);
        Ok(Self { a, text, bundle, anchors })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// `Select_A(r, v) = LCP[b + r + 1] − v` with `b = RangeBeg(0^v 1)`;
    /// `v ≤ 0` is answered as `v = 1`.
    pub fn select_via_lcp(&self, v: i64, r: usize) -> Result<usize> {
        let n = self.n();
        let v = v.max(1);
        if v as usize > n {
            return Err(Error::OutOfContract("no entry reaches v"));
        }
        let v = v as usize;
        if r == 0 || r > range_count(&self.a, n, v as i64) {
            return Err(Error::OutOfContract("r exceeds Count(A, n, v)"));
        }
        let b = self.anchors[v - 1];
        let h = *self.bundle.lcp.get(b + r + 1).ok_or(Error::InvariantViolated("LCP index past the end"))?;
        h.checked_sub(v).ok_or(Error::InvariantViolated("LCP value below v"))
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

impl Gadget for LcpSelectGadget {
    fn kind(&self) -> GadgetKind {
        GadgetKind::LcpSelect
    }

    fn text(&self) -> &Text {
        &self.text
    }

    fn bundle(&self) -> &SuffixArrayBundle {
        &self.bundle
    }

    fn expected_len(&self) -> usize {
        (self.n() + 2) * (self.n() + 1)
    }

    fn expected_runs(&self) -> Option<usize> {
        Some(2 * (self.n() + 1))
    }

    fn anchors_match(&self) -> bool {
        compute_anchors(&self.text, &self.bundle, self.n()) == self.anchors
    }

    fn certificate(&self) -> (LzFactorization, usize) {
        let f = run_factorization(&self.text);
        (f, 2 * self.expected_runs().unwrap())
    }

    fn for_each_query(&self, f: &mut dyn FnMut(QueryOutcome)) {
        let n = self.n();
        for v in -1..=n as i64 {
            let count = range_count(&self.a, n, v);
            for r in 1..=count + 1 {
                let expected = range_select(&self.a, r, v).map_or(-1, |i| i as i64);
                let got = match self.select_via_lcp(v, r) {
                    Ok(x) => Some(x as i64),
                    Err(Error::OutOfContract(_)) => Some(-1),
                    Err(_) => None,
                };
                f(QueryOutcome { args: (v, r as i64), expected, got });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{permutations, verify_reduction};
    use alloc::vec;

    #[test]
    fn smallest_instance() {
        let g = LcpSelectGadget::new(vec![1]).unwrap();
        assert_eq!(g.text.symbols(), &[0, 1, 0, 0, 1, 1]);
        assert_eq!(g.select_via_lcp(1, 1), Ok(1));
        assert_eq!(g.select_via_lcp(0, 1), Ok(1));
        assert!(g.select_via_lcp(1, 2).is_err());
        assert!(g.select_via_lcp(2, 1).is_err());
    }

    #[test]
    fn rejects_non_permutations() {
        assert_eq!(LcpSelectGadget::new(vec![5, 1, 2, 8, 4, 7, 6, 2, 9]).err(), Some(Error::NotPermutation));
    }

    #[test]
    fn exhaustive_four() {
        for a in permutations(4) {
            let g = LcpSelectGadget::new(a).unwrap();
            let rep = verify_reduction(&g, 0);
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
