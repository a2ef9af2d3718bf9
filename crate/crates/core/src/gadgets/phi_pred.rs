use alloc::vec::Vec;

use super::{binary_text, check_set, pred_oracle, push_run, Gadget, GadgetKind, PredAnswer, QueryOutcome};
use crate::measures::{run_factorization, LzFactorization};
use crate::text::{build_bundle, pattern_range, SuffixArrayBundle, Text};
use crate::{Error, Result};

/// Predecessor through Φ:
/// `T = (⊙_{i=1..m} 0^{a_i} 1^{m²−a_i+2}) · 0^{m²+1} 1 · 0^{m²} 1^{m²+2}`.
#[derive(Debug, Clone)]
pub struct PhiPredGadget {
    pub a: Vec<u64>,
    pub text: Text,
    pub bundle: SuffixArrayBundle,
    /// `|T| − 2(m² + 1)`.
    pub delta: usize,
}

impl PhiPredGadget {
    pub fn new(a: Vec<u64>) -> Result<Self> {
        let m = check_set(&a)?;
        let sq = m * m;
        let mut s = Vec::new();
        for &ai in &a {
            push_run(&mut s, 0, ai as usize);
            push_run(&mut s, 1, sq - ai as usize + 2);
        }
        push_run(&mut s, 0, sq + 1);
        push_run(&mut s, 1, 1);
        push_run(&mut s, 0, sq);
        push_run(&mut s, 1, sq + 2);
        let text = binary_text(s);
        let bundle = build_bundle(&text)?;
        let delta = text.len() - 2 * (sq + 1);
        Ok(Self { a, text, bundle, delta })
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// `i = ⌈Φ[Δ + m² − x + 1] / (m² + 2)⌉ − 1`.
    pub fn pred_via_phi(&self, x: i64) -> Result<PredAnswer> {
        let m = self.m();
        let top = (m * m) as i64;
        let index = if x < 1 {
            0
        } else if x > top {
            m
        } else {
            let j = (self.delta as i64 + top - x + 1) as usize;
            let p = *self.bundle.phi.get(j).ok_or(Error::InvariantViolated("Φ index past the end"))?;
            p.div_ceil(m * m + 2).checked_sub(1).ok_or(Error::InvariantViolated("Φ value is zero"))?
        };
        PredAnswer::of(&self.a, index)
    }

    fn recomputed_delta(&self) -> Option<usize> {
        let sq = self.m() * self.m();
        let mut p = alloc::vec![0u32; sq];
        p.extend(core::iter::repeat_n(1, sq + 2));
        let r = pattern_range(&self.text, &self.bundle.sa, &p);
        (r.occurrences() == 1).then(|| self.bundle.sa[r.range_end] - 1)
    }
}

impl Gadget for PhiPredGadget {
    fn kind(&self) -> GadgetKind {
        GadgetKind::PhiPred
    }

    fn text(&self) -> &Text {
        &self.text
    }

    fn bundle(&self) -> &SuffixArrayBundle {
        &self.bundle
    }

    /// `m³ + 3m² + 2m + 4`.
    fn expected_len(&self) -> usize {
        let m = self.m();
        m * m * m + 3 * m * m + 2 * m + 4
    }

    fn expected_runs(&self) -> Option<usize> {
        Some(2 * (self.m() + 2))
    }

    fn anchors_match(&self) -> bool {
        self.recomputed_delta() == Some(self.delta)
    }

    fn certificate(&self) -> (LzFactorization, usize) {
        (run_factorization(&self.text), 4 * (self.m() + 2))
    }

    fn for_each_query(&self, f: &mut dyn FnMut(QueryOutcome)) {
        let top = (self.m() * self.m()) as i64;
        for x in -1..=top + 1 {
            let expected = pred_oracle(&self.a, x) as i64;
            let got = self.pred_via_phi(x).ok().map(|p| p.index as i64);
            f(QueryOutcome { args: (x, 0), expected, got });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{key_sets, verify_reduction};
    use alloc::vec;

    #[test]
    fn worked_instance() {
        let g = PhiPredGadget::new(vec![1, 3]).unwrap();
        assert_eq!(g.pred_via_phi(2).unwrap(), PredAnswer { index: 1, value: Some(1) });
        assert_eq!(g.pred_via_phi(1).unwrap().index, 0);
        let one = PhiPredGadget::new(vec![1]).unwrap();
        assert_eq!(one.text.symbols(), &[0, 1, 1, 0, 0, 1, 0, 1, 1, 1]);
    }

    #[test]
    fn exhaustive_small() {
        for m in 1..=3 {
            for a in key_sets(m) {
                let rep = verify_reduction(&PhiPredGadget::new(a).unwrap(), 0);
                assert!(rep.passed(), "{rep:?}");
            }
        }
    }
}
