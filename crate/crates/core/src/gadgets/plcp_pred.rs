use alloc::vec::Vec;

use super::{binary_text, check_set, pred_oracle, push_run, Gadget, GadgetKind, PredAnswer, QueryOutcome};
use crate::measures::{run_factorization, LzFactorization};
use crate::text::{build_bundle, pattern_range, SuffixArrayBundle, Text};
use crate::{Error, Result};

/// Predecessor through PLCP:
/// `T = (⊙_{i=1..m} 0^{a_i} 1^{m−i+2}) · 0^{m²+1} 1 · 0^{m²} 1^{m+2}`.
#[derive(Debug, Clone)]
pub struct PlcpPredGadget {
    pub a: Vec<u64>,
    pub text: Text,
    pub bundle: SuffixArrayBundle,
    /// `|T| − (m² + m + 2)`.
    pub delta: usize,
}

impl PlcpPredGadget {
    pub fn new(a: Vec<u64>) -> Result<Self> {
        let m = check_set(&a)?;
        let mut s = Vec::new();
        for (i, &ai) in a.iter().enumerate() {
            push_run(&mut s, 0, ai as usize);
            push_run(&mut s, 1, m - (i + 1) + 2);
        }
        push_run(&mut s, 0, m * m + 1);
        push_run(&mut s, 1, 1);
        push_run(&mut s, 0, m * m);
        push_run(&mut s, 1, m + 2);
        let text = binary_text(s);
        let bundle = build_bundle(&text)?;
        let delta = text.len() - (m * m + m + 2);
        Ok(Self { a, text, bundle, delta })
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// `i = (x + m + 1) − PLCP[Δ + m² − x + 1]`.
    pub fn pred_via_plcp(&self, x: i64) -> Result<PredAnswer> {
        let m = self.m();
        let top = (m * m) as i64;
        let index = if x < 1 {
            0
        } else if x > top {
            m
        } else {
            let j = (self.delta as i64 + top - x + 1) as usize;
            let h = *self.bundle.plcp.get(j).ok_or(Error::InvariantViolated("PLCP index past the end"))?;
            let i = x + m as i64 + 1 - h as i64;
            usize::try_from(i).map_err(|_| Error::InvariantViolated("negative predecessor index"))?
        };
        PredAnswer::of(&self.a, index)
    }

    fn recomputed_delta(&self) -> Option<usize> {
        let m = self.m();
        let mut p = alloc::vec![0u32; m * m];
        p.extend(core::iter::repeat_n(1, m + 2));
        let r = pattern_range(&self.text, &self.bundle.sa, &p);
        (r.occurrences() == 1).then(|| self.bundle.sa[r.range_end] - 1)
    }
}

impl Gadget for PlcpPredGadget {
    fn kind(&self) -> GadgetKind {
        GadgetKind::PlcpPred
    }

    fn text(&self) -> &Text {
        &self.text
    }

    fn bundle(&self) -> &SuffixArrayBundle {
        &self.bundle
    }

    fn expected_len(&self) -> usize {
        let m = self.m();
        let sum: u64 = self.a.iter().sum();
        sum as usize + (m + 1) * (m + 2) / 2 - 1 + 2 * m * m + m + 4
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
            let got = self.pred_via_plcp(x).ok().map(|p| p.index as i64);
            f(QueryOutcome { args: (x, 0), expected, got });
        }
    }
}
