use alloc::vec::Vec;

use super::{Gadget, GadgetKind, QueryOutcome};
use crate::measures::{lz77_from_bundle, morphism_expand, LzFactorization, LzPhrase};
use crate::text::{build_bundle, SuffixArrayBundle, Text};
use crate::{Error, Result};

/// Φ and Φ⁻¹ exchanged by the morphism `c ↦ 0 0 1 (σ−1−c) 1`:
/// `T′ = f(T) · 1`.
#[derive(Debug, Clone)]
pub struct PhiInverseGadget {
    pub original: Text,
    pub original_bundle: SuffixArrayBundle,
    pub text: Text,
    pub bundle: SuffixArrayBundle,
    pub sigma: u32,
    /// `SA_T[1]`.
    pub j_lexfirst: usize,
    /// `SA_T[n]`.
    pub j_lexlast: usize,
}

impl PhiInverseGadget {
    pub fn new(text: &Text, sigma: u32) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyText);
        }
        if let Some((position, &symbol)) = text.symbols().iter().enumerate().find(|(_, &c)| c >= sigma) {
            return Err(Error::SymbolOutOfRange { position: position + 1, symbol, sigma });
        }
        let original = Text::new(text.symbols().to_vec(), sigma)?;
        let mut symbols = morphism_expand(&original, &images(sigma))?.into_symbols();
        symbols.push(1);
        let out = Text::new(symbols, sigma.max(2))?;
        let original_bundle = build_bundle(&original)?;
        let bundle = build_bundle(&out)?;
        let n = original.len();
        Ok(Self {
            j_lexfirst: original_bundle.sa[1],
            j_lexlast: original_bundle.sa[n],
            original,
            original_bundle,
            text: out,
            bundle,
            sigma,
        })
    }

    pub fn n(&self) -> usize {
        self.original.len()
    }

    /// `Φ_T[j] = (Φ⁻¹_{T′}[1 + 5(j−1)] − 1)/5 + 1`.
    pub fn phi_via_invphi(&self, j: usize) -> Result<usize> {
        self.check(j)?;
        if j == self.j_lexfirst {
            return Ok(self.j_lexlast);
        }
        back_map(self.bundle.inv_phi[1 + 5 * (j - 1)])
    }

    /// `Φ⁻¹_T[j] = (Φ_{T′}[1 + 5(j−1)] − 1)/5 + 1`.
    pub fn invphi_via_phi(&self, j: usize) -> Result<usize> {
        self.check(j)?;
        if j == self.j_lexlast {
            return Ok(self.j_lexfirst);
        }
        back_map(self.bundle.phi[1 + 5 * (j - 1)])
    }

    fn check(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.n() {
            return Err(Error::IndexOutOfRange { index: j, len: self.n() });
        }
        Ok(())
    }
}

fn back_map(p: usize) -> Result<usize> {
    if p == 0 || !(p - 1).is_multiple_of(5) {
        return Err(Error::InvariantViolated("position is not a block start"));
    }
    Ok((p - 1) / 5 + 1)
}

fn images(sigma: u32) -> Vec<Vec<u32>> {
    (0..sigma.max(1)).map(|c| alloc::vec![0, 0, 1, sigma.max(1) - 1 - c, 1]).collect()
}

impl Gadget for PhiInverseGadget {
    fn kind(&self) -> GadgetKind {
        GadgetKind::PhiInverse
    }

    fn text(&self) -> &Text {
        &self.text
    }

    fn bundle(&self) -> &SuffixArrayBundle {
        &self.bundle
    }

    fn expected_len(&self) -> usize {
        5 * self.n() + 1
    }

    fn expected_runs(&self) -> Option<usize> {
        None
    }

    fn anchors_match(&self) -> bool {
        let n = self.n();
        self.original_bundle.sa[1] == self.j_lexfirst && self.original_bundle.sa[n] == self.j_lexlast
    }

    fn certificate(&self) -> (LzFactorization, usize) {
        let lz = lz77_from_bundle(&self.original, &self.original_bundle);
        let mut f = lz.under_morphism(&images(self.sigma), 5);
        f.phrases.push(LzPhrase::Literal(1));
        (f, 5 * lz.len() + 1)
    }

    fn for_each_query(&self, f: &mut dyn FnMut(QueryOutcome)) {
        for j in 1..=self.n() {
            let got = self.phi_via_invphi(j).ok().map(|p| p as i64);
            f(QueryOutcome { args: (j as i64, 0), expected: self.original_bundle.phi[j] as i64, got });
            let got = self.invphi_via_phi(j).ok().map(|p| p as i64);
            f(QueryOutcome { args: (j as i64, 1), expected: self.original_bundle.inv_phi[j] as i64, got });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{exhaustive_inputs, verify_reduction, GadgetInput};
    use alloc::vec;

    fn sample_binary() -> Text {
        let s = b"bbabaababababaababa".iter().map(|&c| (c - b'a') as u32).collect();
        Text::new(s, 2).unwrap()
    }

    #[test]
    fn sample_rows() {
        let g = PhiInverseGadget::new(&sample_binary(), 2).unwrap();
        let phi: Vec<usize> = (1..=19).map(|j| g.phi_via_invphi(j).unwrap()).collect();
        let inv: Vec<usize> = (1..=19).map(|j| g.invphi_via_phi(j).unwrap()).collect();
        assert_eq!(phi, vec![7, 11, 12, 13, 14, 8, 9, 10, 2, 15, 16, 17, 18, 19, 3, 4, 5, 6, 1]);
        assert_eq!(inv, vec![19, 9, 15, 16, 17, 18, 1, 6, 7, 8, 2, 3, 4, 5, 10, 11, 12, 13, 14]);
        assert_eq!(g.text.len(), 96);
        assert!(verify_reduction(&g, 0).passed());
    }

    #[test]
    fn single_symbol() {
        let g = PhiInverseGadget::new(&Text::new(vec![1], 2).unwrap(), 2).unwrap();
        assert_eq!(g.text.symbols(), &[0, 0, 1, 0, 1, 1]);
        assert_eq!(g.phi_via_invphi(1), Ok(1));
        assert_eq!(g.invphi_via_phi(1), Ok(1));
    }

    #[test]
    fn rejects_small_alphabet() {
        let t = Text::new(vec![0, 2, 1], 3).unwrap();
        assert!(matches!(PhiInverseGadget::new(&t, 2), Err(Error::SymbolOutOfRange { position: 2, .. })));
    }

    #[test]
    fn all_binary_texts_up_to_ten() {
        for n in 1..=10 {
            for input in exhaustive_inputs(GadgetKind::PhiInverse, n) {
                let GadgetInput::Text(t) = input else { unreachable!() };
                let rep = verify_reduction(&PhiInverseGadget::new(&t, 2).unwrap(), 0);
                assert!(rep.passed(), "{rep:?}");
            }
        }
    }
}
