use alloc::vec::Vec;

use crate::grammar::LcpRmq;
use crate::text::{build_bundle, Text};
use crate::{Array1, Error, Result};

/// Random access to a binary text from its inverse suffix array:
/// `T[j] = 0` iff `ISA[j] ≤ n₀`.
#[derive(Debug, Clone)]
pub struct AccessViaIsa {
    isa: Array1<usize>,
    zeros: usize,
}

impl AccessViaIsa {
    pub fn new(text: &Text) -> Result<Self> {
        check_binary(text)?;
        let zeros = text.symbols().iter().filter(|&&c| c == 0).count();
        Ok(Self { isa: build_bundle(text)?.isa, zeros })
    }

    pub fn access(&self, j: usize) -> Result<u32> {
        let rank = *self.isa.get(j).ok_or(Error::IndexOutOfRange { index: j, len: self.isa.len() })?;
        Ok(u32::from(rank > self.zeros))
    }
}

/// Random access to a binary text from LCE queries on `0 · T`:
/// `T[j] = 0` iff `LCE(1, j + 1) ≥ 1`.
#[derive(Debug, Clone)]
pub struct AccessViaLce {
    lce: LcpRmq,
}

impl AccessViaLce {
    pub fn new(text: &Text, epsilon: f64) -> Result<Self> {
        check_binary(text)?;
        Ok(Self { lce: LcpRmq::build(&prepend_zero(text), epsilon)? })
    }

    pub fn access(&self, j: usize) -> Result<u32> {
        if j == 0 || j >= self.lce.len() {
            return Err(Error::IndexOutOfRange { index: j, len: self.lce.len() - 1 });
        }
        Ok(u32::from(self.lce.lce(1, j + 1)? == 0))
    }
}

/// `0 · T` over the binary alphabet.
pub fn prepend_zero(text: &Text) -> Text {
    let mut s = Vec::with_capacity(text.len() + 1);
    s.push(0);
    s.extend_from_slice(text.symbols());
    Text::new(s, text.sigma().max(2)).expect("binary symbols")
}

fn check_binary(text: &Text) -> Result<()> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    match text.symbols().iter().position(|&c| c > 1) {
        Some(p) => Err(Error::SymbolOutOfRange { position: p + 1, symbol: text.symbols()[p], sigma: 2 }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{exhaustive_inputs, GadgetInput, GadgetKind};
    use crate::measures::substring_complexity;

    #[test]
    fn every_binary_text_up_to_nine() {
        for n in 1..=9 {
            for input in exhaustive_inputs(GadgetKind::PhiInverse, n) {
                let GadgetInput::Text(t) = input else { unreachable!() };
                let by_isa = AccessViaIsa::new(&t).unwrap();
                let by_lce = AccessViaLce::new(&t, 0.5).unwrap();
                for j in 1..=n {
                    assert_eq!(by_isa.access(j), Ok(t[j]));
                    assert_eq!(by_lce.access(j), Ok(t[j]));
                }
                assert!(by_lce.access(n + 1).is_err());
                let before = substring_complexity(&t).unwrap();
                let after = substring_complexity(&prepend_zero(&t)).unwrap();
                assert!(after <= before.plus_one());
            }
        }
    }

    #[test]
    fn prepending_can_leave_delta_unchanged() {
        let t = Text::new(alloc::vec![0, 1, 0, 1], 2).unwrap();
        let before = substring_complexity(&t).unwrap();
        let after = substring_complexity(&prepend_zero(&t)).unwrap();
        assert!(after < before.plus_one());
    }

    #[test]
    fn rejects_wide_symbols() {
        let t = Text::new(alloc::vec![0, 2], 3).unwrap();
        assert!(AccessViaIsa::new(&t).is_err());
        assert!(AccessViaLce::new(&t, 0.5).is_err());
    }
}
