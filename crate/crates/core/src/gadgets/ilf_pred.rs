use alloc::vec::Vec;

use super::{
    binary_text, bit_width, check_set, ebin, padded_keys, periodic_phrases, pred_oracle, Gadget, GadgetKind,
    PredAnswer, QueryOutcome,
};
use crate::measures::LzFactorization;
use crate::text::{build_bundle, pattern_range, SuffixArrayBundle, Text};
use crate::{Error, Result};

/// Predecessor through LF⁻¹:
/// `T = ⊙_{i=0..m} (1 · ebin_k(i))^{d_i} · ebin_k(i)^{m² − d_i}` with
/// `d_i = a_{i+1} − a_i`.
#[derive(Debug, Clone)]
pub struct IlfPredGadget {
    pub a: Vec<u64>,
    pub k: usize,
    pub text: Text,
    pub bundle: SuffixArrayBundle,
    /// `RangeBeg(1^{k+2} 0)`.
    pub alpha: usize,
    /// `RangeBeg(1^{k+1} 0)`.
    pub beta: usize,
}

impl IlfPredGadget {
    pub fn new(a: Vec<u64>) -> Result<Self> {
        let m = check_set(&a)?;
        let sq = m * m;
        let k = bit_width(m);
        let keys = padded_keys(&a);
        let mut s = Vec::new();
        for i in 0..=m {
            let d = (keys[i + 1] - keys[i]) as usize;
            let (marked, plain) = blocks(i, k);
            for _ in 0..d {
                s.extend_from_slice(&marked);
            }
            for _ in d..sq {
                s.extend_from_slice(&plain);
            }
        }
        let text = binary_text(s);
        let bundle = build_bundle(&text)?;
        let (alpha, beta) = anchors(&text, &bundle, k);
        Ok(Self { a, k, text, bundle, alpha, beta })
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// `i = ⌈(ILF[α + x] − β) / m²⌉ − 1`, an index into `A ∪ {0}` where
    /// `i = 0` stands for `−∞` over `A`.
    pub fn pred_via_ilf(&self, x: i64) -> Result<PredAnswer> {
        let m = self.m();
        let sq = (m * m) as i64;
        let index = if x < 1 {
            0
        } else if x > sq {
            m
        } else {
            let v = *self
                .bundle
                .ilf
                .get(self.alpha + x as usize)
                .ok_or(Error::InvariantViolated("ILF index past the end"))?;
            let num = v as i64 - self.beta as i64;
            if num < 1 {
                return Err(Error::InvariantViolated("ILF value at or before β"));
            }
            (num + sq - 1) as usize / sq as usize - 1
        };
        PredAnswer::of(&self.a, index)
    }
}

fn blocks(i: usize, k: usize) -> (Vec<u32>, Vec<u32>) {
    let plain = ebin(i, k);
    let mut marked = alloc::vec![1];
    marked.extend_from_slice(&plain);
    (marked, plain)
}

fn anchors(text: &Text, bundle: &SuffixArrayBundle, k: usize) -> (usize, usize) {
    let range = |ones: usize| {
        let mut p = alloc::vec![1u32; ones];
        p.push(0);
        pattern_range(text, &bundle.sa, &p).range_beg
    };
    (range(k + 2), range(k + 1))
}

impl Gadget for IlfPredGadget {
    fn kind(&self) -> GadgetKind {
        GadgetKind::IlfPred
    }

    fn text(&self) -> &Text {
        &self.text
    }

    fn bundle(&self) -> &SuffixArrayBundle {
        &self.bundle
    }

    fn expected_len(&self) -> usize {
        let (m, k) = (self.m(), self.k);
        m * m + (2 * k + 3) * (m + 1) * m * m
    }

    fn expected_runs(&self) -> Option<usize> {
        None
    }

    fn anchors_match(&self) -> bool {
        anchors(&self.text, &self.bundle, self.k) == (self.alpha, self.beta)
    }

    fn certificate(&self) -> (LzFactorization, usize) {
        let m = self.m();
        let keys = padded_keys(&self.a);
        let mut f = LzFactorization::default();
        let mut pos = 1;
        for i in 0..=m {
            let d = (keys[i + 1] - keys[i]) as usize;
            let (marked, plain) = blocks(i, self.k);
            periodic_phrases(&mut f, &mut pos, &marked, d);
            periodic_phrases(&mut f, &mut pos, &plain, m * m - d);
        }
        (f, (m + 1) * (4 * self.k + 9))
    }

    fn for_each_query(&self, f: &mut dyn FnMut(QueryOutcome)) {
        let top = (self.m() * self.m()) as i64;
        for x in -1..=top + 1 {
            let expected = pred_oracle(&self.a, x) as i64;
            let got = self.pred_via_ilf(x).ok().map(|p| p.index as i64);
            f(QueryOutcome { args: (x, 0), expected, got });
        }
    }
}
