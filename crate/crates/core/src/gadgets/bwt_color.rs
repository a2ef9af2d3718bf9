use alloc::vec::Vec;

use super::{
    binary_text, bit_width, check_set, ebin, padded_keys, periodic_phrases, pred_oracle, Gadget, GadgetKind,
    QueryOutcome,
};
use crate::measures::LzFactorization;
use crate::text::{build_bundle, pattern_range, SuffixArrayBundle, Text};
use crate::{Error, Result};

/// Colored predecessor through the BWT:
/// `T = ⊙_{i=0..m} (b_i · ebin_k(i))^{a_{i+1} − a_i}` with `b_i = i mod 2`.
#[derive(Debug, Clone)]
pub struct BwtColorGadget {
    pub a: Vec<u64>,
    pub k: usize,
    pub text: Text,
    pub bundle: SuffixArrayBundle,
    /// `RangeBeg(1^{k+1} 0)`.
    pub b: usize,
}

impl BwtColorGadget {
    pub fn new(a: Vec<u64>) -> Result<Self> {
        let m = check_set(&a)?;
        let k = bit_width(m);
        let keys = padded_keys(&a);
        let mut s = Vec::with_capacity((2 * k + 4) * m * m);
        for i in 0..=m {
            let block = block(i, k);
            for _ in 0..keys[i + 1] - keys[i] {
                s.extend_from_slice(&block);
            }
        }
        let text = binary_text(s);
        let bundle = build_bundle(&text)?;
        let b = anchor(&text, &bundle, k);
        Ok(Self { a, k, text, bundle, b })
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// `BWT[b + x]`; `x < 1` gives 0 and `x > m²` gives `m mod 2`.
    pub fn color_via_bwt(&self, x: i64) -> Result<u8> {
        let m = self.m();
        if x < 1 {
            return Ok(0);
        }
        if x as usize > m * m {
            return Ok((m % 2) as u8);
        }
        let c = *self.bundle.bwt.get(self.b + x as usize).ok_or(Error::InvariantViolated("BWT index past the end"))?;
        Ok(c as u8)
    }
}

fn block(i: usize, k: usize) -> Vec<u32> {
    let mut out = alloc::vec![(i % 2) as u32];
    out.extend(ebin(i, k));
    out
}

fn anchor(text: &Text, bundle: &SuffixArrayBundle, k: usize) -> usize {
    let mut p = alloc::vec![1u32; k + 1];
    p.push(0);
    pattern_range(text, &bundle.sa, &p).range_beg
}

impl Gadget for BwtColorGadget {
    fn kind(&self) -> GadgetKind {
        GadgetKind::BwtColor
    }

    fn text(&self) -> &Text {
        &self.text
    }

    fn bundle(&self) -> &SuffixArrayBundle {
        &self.bundle
    }

    fn expected_len(&self) -> usize {
        (2 * self.k + 4) * self.m() * self.m()
    }

    fn expected_runs(&self) -> Option<usize> {
        None
    }

    fn anchors_match(&self) -> bool {
        anchor(&self.text, &self.bundle, self.k) == self.b
    }

    fn certificate(&self) -> (LzFactorization, usize) {
        let m = self.m();
        let keys = padded_keys(&self.a);
        let mut f = LzFactorization::default();
        let mut pos = 1;
        for i in 0..=m {
            periodic_phrases(&mut f, &mut pos, &block(i, self.k), (keys[i + 1] - keys[i]) as usize);
        }
        (f, (m + 1) * (2 * self.k + 5))
    }

    fn for_each_query(&self, f: &mut dyn FnMut(QueryOutcome)) {
        let top = (self.m() * self.m()) as i64;
        for x in -1..=top + 1 {
            let expected = (pred_oracle(&self.a, x) % 2) as i64;
            let got = self.color_via_bwt(x).ok().map(i64::from);
            f(QueryOutcome { args: (x, 0), expected, got });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{key_sets, verify_reduction};
    use crate::measures::validate_lz_like;
    use alloc::vec;

    #[test]
    fn smallest_instance() {
        let g = BwtColorGadget::new(vec![1]).unwrap();
        assert_eq!(g.text.symbols(), &[0, 1, 1, 0, 0, 0]);
        assert_eq!(g.color_via_bwt(1), Ok(0));
        assert_eq!(g.color_via_bwt(2), Ok(1));
        assert_eq!(g.color_via_bwt(-4), Ok(0));
    }

    #[test]
    fn exhaustive_three() {
        let sets = key_sets(3);
        assert_eq!(sets.len(), 84);
        for a in sets {
            let g = BwtColorGadget::new(a).unwrap();
            let rep = verify_reduction(&g, 0);
            assert!(rep.passed(), "{rep:?}");
            assert_eq!(rep.queries, 12);
            let (cert, bound) = g.certificate();
            assert!(validate_lz_like(&g.text, &cert).unwrap() <= bound);
        }
    }
}
