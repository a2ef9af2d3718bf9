//! Texts and the nine suffix-derived query arrays.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

use crate::{Array1, Error, Result};

/// A sequence of integer symbols drawn from `[0..sigma)`, addressed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Text {
    symbols: Vec<u32>,
    sigma: u32,
}

impl Text {
    pub fn new(symbols: Vec<u32>, sigma: u32) -> Result<Self> {
        if sigma == 0 {
            return Err(Error::InvalidSet("alphabet bound must be at least 1"));
        }
        if let Some(k) = symbols.iter().position(|&s| s >= sigma) {
            return Err(Error::SymbolOutOfRange { position: k + 1, symbol: symbols[k], sigma });
        }
        Ok(Self { symbols, sigma })
    }

    /// Text whose alphabet bound is one more than its largest symbol.
    pub fn from_symbols(symbols: Vec<u32>) -> Self {
        let sigma = symbols.iter().copied().max().map_or(1, |s| s + 1);
        Self { symbols, sigma }
    }

    /// Bytes mapped to their code points over a 256-symbol alphabet.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        Self { symbols: bytes.iter().map(|&b| u32::from(b)).collect(), sigma: 256 }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn get(&self, j: usize) -> Option<u32> {
        j.checked_sub(1).and_then(|k| self.symbols.get(k).copied())
    }

    /// `T[i..n]` as a slice.
    pub fn suffix(&self, i: usize) -> &[u32] {
        &self.symbols[i - 1..]
    }

    pub fn reversed(&self) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Self { symbols, sigma: self.sigma }
    }

    /// `T · c`, widening the alphabet if needed.
    pub fn appended(&self, c: u32) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.push(c);
        Self { symbols, sigma: self.sigma.max(c + 1) }
    }

    pub fn into_symbols(self) -> Vec<u32> {
        self.symbols
    }
}

impl Index<usize> for Text {
    type Output = u32;

    fn index(&self, j: usize) -> &u32 {
        assert!(j >= 1, "positions are 1-based");
        &self.symbols[j - 1]
    }
}

/// The SA-interval `(range_beg..range_end]` of a pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternRange {
    pub range_beg: usize,
    pub range_end: usize,
}

impl PatternRange {
    pub fn occurrences(&self) -> usize {
        self.range_end - self.range_beg
    }
}

/// SA, ISA, LCP, PLCP, BWT, LF, LF⁻¹, Φ and Φ⁻¹ of one text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixArrayBundle {
    pub sa: Array1<usize>,
    pub isa: Array1<usize>,
    pub lcp: Array1<usize>,
    pub plcp: Array1<usize>,
    pub bwt: Array1<u32>,
    pub lf: Array1<usize>,
    pub ilf: Array1<usize>,
    pub phi: Array1<usize>,
    pub inv_phi: Array1<usize>,
}

impl SuffixArrayBundle {
    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    /// Number of equal-letter runs in the BWT.
    pub fn bwt_runs(&self) -> usize {
        let b = self.bwt.as_slice();
        if b.is_empty() {
            return 0;
        }
        1 + b.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Builds all nine arrays using prefix doubling and Kasai's LCP scan.
pub fn build_bundle(text: &Text) -> Result<SuffixArrayBundle> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    Ok(bundle_from_sa(text, suffix_array(text.symbols())))
}

/// Same as [`build_bundle`], but sorts suffixes by direct comparison.
pub fn build_bundle_naive(text: &Text) -> Result<SuffixArrayBundle> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    let sa = naive_suffix_array(text).into_vec().into_iter().map(|p| p - 1).collect();
    Ok(bundle_from_sa(text, sa))
}

/// Suffix array by sorting the suffixes with slice comparison.
pub fn naive_suffix_array(text: &Text) -> Array1<usize> {
    let s = text.symbols();
    let mut sa: Vec<usize> = (0..s.len()).collect();
    sa.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
    Array1::from_vec(sa.into_iter().map(|p| p + 1).collect())
}

fn bundle_from_sa(text: &Text, sa0: Vec<usize>) -> SuffixArrayBundle {
    let s = text.symbols();
    let n = s.len();
    let mut isa0 = vec![0usize; n];
    for (r, &p) in sa0.iter().enumerate() {
        isa0[p] = r;
    }
    let lcp0 = kasai(s, &sa0, &isa0);

    let sa: Vec<usize> = sa0.iter().map(|&p| p + 1).collect();
    let isa: Vec<usize> = isa0.iter().map(|&r| r + 1).collect();
    let mut plcp = vec![0usize; n];
    let mut bwt = vec![0u32; n];
    let mut lf = vec![0usize; n];
    let mut ilf = vec![0usize; n];
    let mut phi = vec![0usize; n];
    let mut inv_phi = vec![0usize; n];
    for r in 0..n {
        let p = sa0[r];
        plcp[p] = lcp0[r];
        let prev = if p == 0 { n - 1 } else { p - 1 };
        bwt[r] = s[prev];
        lf[r] = isa[prev];
        ilf[isa0[prev]] = r + 1;
        let before = if r == 0 { sa0[n - 1] } else { sa0[r - 1] };
        phi[p] = before + 1;
        inv_phi[before] = p + 1;
    }
    SuffixArrayBundle {
        sa: sa.into(),
        isa: isa.into(),
        lcp: lcp0.into(),
        plcp: plcp.into(),
        bwt: bwt.into(),
        lf: lf.into(),
        ilf: ilf.into(),
        phi: phi.into(),
        inv_phi: inv_phi.into(),
    }
}

/// 0-based suffix array by prefix doubling with two-pass counting sorts.
fn suffix_array(s: &[u32]) -> Vec<usize> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut alphabet: Vec<u32> = s.to_vec();
    alphabet.sort_unstable();
    alphabet.dedup();
    // Ranks start at 1 so that 0 can stand for "past the end".
    let mut rank: Vec<usize> = s.iter().map(|c| alphabet.binary_search(c).unwrap() + 1).collect();
    let mut sa: Vec<usize> = (0..n).collect();
    sa.sort_by_key(|&i| rank[i]);
    let mut classes = alphabet.len();
    let mut tmp = vec![0usize; n];
    let mut by_second = Vec::with_capacity(n);
    let mut count = vec![0usize; n + 2];
    let mut k = 1;
    while classes < n {
        by_second.clear();
        by_second.extend(n.saturating_sub(k)..n);
        by_second.extend(sa.iter().filter(|&&p| p >= k).map(|&p| p - k));

        count[..=classes].fill(0);
        for &i in &by_second {
            count[rank[i]] += 1;
        }
        let mut acc = 0;
        for c in count[..=classes].iter_mut() {
            let here = *c;
            *c = acc;
            acc += here;
        }
        for &i in &by_second {
            sa[count[rank[i]]] = i;
            count[rank[i]] += 1;
        }

        let second = |i: usize, rank: &[usize]| if i + k < n { rank[i + k] } else { 0 };
        tmp[sa[0]] = 1;
        for w in 1..n {
            let (a, b) = (sa[w - 1], sa[w]);
            let same = rank[a] == rank[b] && second(a, &rank) == second(b, &rank);
            tmp[b] = tmp[a] + usize::from(!same);
        }
        classes = tmp[sa[n - 1]];
        core::mem::swap(&mut rank, &mut tmp);
        k *= 2;
    }
    sa
}

fn kasai(s: &[u32], sa: &[usize], isa: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = isa[i];
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1];
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

/// SA-interval of `pattern`: `range_beg` counts suffixes smaller than it,
/// `range_end - range_beg` counts its occurrences.
pub fn pattern_range(text: &Text, sa: &Array1<usize>, pattern: &[u32]) -> PatternRange {
    let s = text.symbols();
    let sa = sa.as_slice();
    let range_beg = sa.partition_point(|&p| &s[p - 1..] < pattern);
    let range_end = range_beg + sa[range_beg..].partition_point(|&p| s[p - 1..].starts_with(pattern));
    PatternRange { range_beg, range_end }
}

/// Longest common extension of the suffixes starting at `i` and `j`.
pub fn lce_naive(text: &Text, i: usize, j: usize) -> Result<usize> {
    let n = text.len();
    for idx in [i, j] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange { index: idx, len: n });
        }
    }
    let s = text.symbols();
    Ok(s[i - 1..].iter().zip(&s[j - 1..]).take_while(|(a, b)| a == b).count())
}
