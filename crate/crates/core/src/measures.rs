//! Repetitiveness measures: run-length encoding, LPF and LZ77, the BWT run
//! count `r`, and substring complexity `δ`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::text::{build_bundle, SuffixArrayBundle, Text};
use crate::{Array1, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunLengthEncoding {
    pub runs: Vec<(u32, usize)>,
}

impl RunLengthEncoding {
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn decode(&self) -> Vec<u32> {
        self.runs.iter().flat_map(|&(c, l)| core::iter::repeat_n(c, l)).collect()
    }
}

pub fn run_length_encode(text: &Text) -> Result<RunLengthEncoding> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    Ok(RunLengthEncoding { runs: runs_of(text.symbols()) })
}

pub(crate) fn runs_of(s: &[u32]) -> Vec<(u32, usize)> {
    let mut runs: Vec<(u32, usize)> = Vec::new();
    for &c in s {
        match runs.last_mut() {
            Some((d, l)) if *d == c => *l += 1,
            _ => runs.push((c, 1)),
        }
    }
    runs
}

/// One phrase of an LZ77-like factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LzPhrase {
    /// A single symbol with no earlier source, written `(c, 0)`.
    Literal(u32),
    /// `len` symbols copied from the (possibly overlapping) earlier position `source`.
    Repeat { source: usize, len: usize },
}

impl LzPhrase {
    pub fn len(&self) -> usize {
        match self {
            LzPhrase::Literal(_) => 1,
            LzPhrase::Repeat { len, .. } => *len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LzFactorization {
    pub phrases: Vec<LzPhrase>,
}

impl LzFactorization {
    pub fn len(&self) -> usize {
        self.phrases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }

    /// Starting positions of the phrases.
    pub fn starts(&self) -> Vec<usize> {
        let mut pos = 1;
        self.phrases
            .iter()
            .map(|p| {
                let s = pos;
                pos += p.len();
                s
            })
            .collect()
    }

    /// The factorization of `f(T)` induced by this one under a `k`-uniform morphism.
    pub fn under_morphism(&self, images: &[Vec<u32>], k: usize) -> LzFactorization {
        let mut phrases = Vec::new();
        for p in &self.phrases {
            match *p {
                LzPhrase::Literal(c) => phrases.extend(images[c as usize].iter().map(|&d| LzPhrase::Literal(d))),
                LzPhrase::Repeat { source, len } => {
                    phrases.push(LzPhrase::Repeat { source: 1 + k * (source - 1), len: k * len })
                }
            }
        }
        LzFactorization { phrases }
    }
}

/// Longest previous factor array.
pub fn lpf_array(text: &Text) -> Result<Array1<usize>> {
    Ok(lpf_from_bundle(&build_bundle(text)?))
}

/// LPF from SA and LCP with a single stack pass over the suffix array.
pub fn lpf_from_bundle(bundle: &SuffixArrayBundle) -> Array1<usize> {
    let n = bundle.len();
    let sa = bundle.sa.as_slice();
    let mut lcp: Vec<usize> = bundle.lcp.as_slice().to_vec();
    lcp.push(0);
    let mut lpf = vec![0usize; n];
    // Ranks on the stack have increasing text positions; `lcp[r]` is
    // progressively lowered to the LCP with the rank below it on the stack.
    let mut stack: Vec<usize> = Vec::new();
    for i in 0..=n {
        while let Some(&t) = stack.last() {
            if i < n && sa[i] > sa[t] {
                break;
            }
            stack.pop();
            let below = if stack.is_empty() { 0 } else { lcp[t] };
            lpf[sa[t] - 1] = below.max(lcp[i]);
            lcp[i] = lcp[i].min(lcp[t]);
        }
        if i < n {
            stack.push(i);
        }
    }
    Array1::from_vec(lpf)
}

/// Greedy left-to-right LZ77 factorization. Each repeat phrase points at the
/// rightmost earlier occurrence of its content.
pub fn lz77_factorize(text: &Text) -> Result<LzFactorization> {
    let bundle = build_bundle(text)?;
    Ok(lz77_from_bundle(text, &bundle))
}

pub fn lz77_from_bundle(text: &Text, bundle: &SuffixArrayBundle) -> LzFactorization {
    let n = text.len();
    let lpf = lpf_from_bundle(bundle);
    let sa = bundle.sa.as_slice();
    let lcp = bundle.lcp.as_slice();
    let mut phrases = Vec::new();
    let mut s = 1;
    while s <= n {
        let len = lpf[s];
        if len == 0 {
            phrases.push(LzPhrase::Literal(text[s]));
            s += 1;
            continue;
        }
        let r = bundle.isa[s] - 1;
        let mut source = 0;
        let mut q = r;
        while q > 0 && lcp[q] >= len {
            q -= 1;
            if sa[q] < s {
                source = source.max(sa[q]);
            }
        }
        q = r + 1;
        while q < n && lcp[q] >= len {
            if sa[q] < s {
                source = source.max(sa[q]);
            }
            q += 1;
        }
        debug_assert!(source >= 1);
        phrases.push(LzPhrase::Repeat { source, len });
        s += len;
    }
    LzFactorization { phrases }
}

/// Checks that `fact` is an LZ77-like factorization of `text` and returns its
/// phrase count `k`. Also confirms the greedy factorization is no larger.
pub fn validate_lz_like(text: &Text, fact: &LzFactorization) -> Result<usize> {
    check_lz_like(text, fact)?;
    let z = lz77_factorize(text)?.len();
    let k = fact.len();
    if z > k {
        return Err(Error::LzBound { z, k });
    }
    Ok(k)
}

/// Validity check alone, without computing the greedy factorization.
pub fn check_lz_like(text: &Text, fact: &LzFactorization) -> Result<usize> {
    let s = text.symbols();
    let n = s.len();
    let mut pos = 1;
    for (idx, p) in fact.phrases.iter().enumerate() {
        let phrase = idx + 1;
        let len = p.len();
        if len == 0 {
            return Err(Error::InvalidPhrase { phrase, reason: "empty phrase" });
        }
        if pos + len - 1 > n {
            return Err(Error::InvalidPhrase { phrase, reason: "runs past the end of the text" });
        }
        match *p {
            LzPhrase::Literal(c) => {
                if s[pos - 1] != c {
                    return Err(Error::InvalidPhrase { phrase, reason: "literal differs from text" });
                }
            }
            LzPhrase::Repeat { source, len } => {
                if source == 0 || source >= pos {
                    return Err(Error::InvalidPhrase { phrase, reason: "source does not start earlier" });
                }
                let matches = (0..len).all(|d| s[source - 1 + d] == s[pos - 1 + d]);
                if !matches {
                    return Err(Error::InvalidPhrase { phrase, reason: "source does not match" });
                }
            }
        }
        pos += len;
    }
    if pos != n + 1 {
        return Err(Error::InvalidPhrase { phrase: fact.len() + 1, reason: "phrases do not cover the text" });
    }
    Ok(fact.len())
}

/// The LZ77-like factorization with two phrases per run: a literal, then a
/// copy of the run's first symbol for the rest of the run.
pub fn run_factorization(text: &Text) -> LzFactorization {
    let mut phrases = Vec::new();
    let mut pos = 1;
    for (c, l) in runs_of(text.symbols()) {
        phrases.push(LzPhrase::Literal(c));
        if l >= 2 {
            phrases.push(LzPhrase::Repeat { source: pos, len: l - 1 });
        }
        pos += l;
    }
    LzFactorization { phrases }
}

/// Substring complexity `δ = max_ℓ d_ℓ / ℓ`, kept as an exact fraction.
#[derive(Debug, Clone, Copy)]
pub struct DeltaValue {
    pub numerator: u64,
    pub denominator: u64,
    /// Smallest `ℓ` attaining the maximum.
    pub arg_len: usize,
}

impl DeltaValue {
    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    /// `self + 1`, as a fraction with the same denominator.
    pub fn plus_one(&self) -> DeltaValue {
        DeltaValue { numerator: self.numerator + self.denominator, ..*self }
    }
}

impl PartialEq for DeltaValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for DeltaValue {}

impl PartialOrd for DeltaValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DeltaValue {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = u128::from(self.numerator) * u128::from(other.denominator);
        let b = u128::from(other.numerator) * u128::from(self.denominator);
        a.cmp(&b)
    }
}

impl fmt::Display for DeltaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// `d_ℓ` for every `ℓ ∈ [1..n]` (slot 0 unused).
pub fn distinct_substring_counts(bundle: &SuffixArrayBundle) -> Vec<u64> {
    let n = bundle.len();
    let mut at_least = vec![0u64; n + 2];
    for &h in &bundle.lcp.as_slice()[1..] {
        at_least[h] += 1;
    }
    for l in (0..=n).rev() {
        at_least[l] += at_least[l + 1];
    }
    let mut d = vec![0u64; n + 1];
    for l in 1..=n {
        d[l] = (n - l + 1) as u64 - at_least[l];
    }
    d
}

pub fn substring_complexity(text: &Text) -> Result<DeltaValue> {
    Ok(delta_from_bundle(&build_bundle(text)?))
}

pub fn delta_from_bundle(bundle: &SuffixArrayBundle) -> DeltaValue {
    let d = distinct_substring_counts(bundle);
    let mut best = DeltaValue { numerator: d[1], denominator: 1, arg_len: 1 };
    for (l, &dl) in d.iter().enumerate().skip(2) {
        let cand = DeltaValue { numerator: dl, denominator: l as u64, arg_len: l };
        if cand > best {
            best = cand;
        }
    }
    best
}

/// Number of runs in the BWT.
pub fn bwt_run_count(text: &Text) -> Result<usize> {
    Ok(build_bundle(text)?.bwt_runs())
}

/// `(δ(T), δ(T·c))`, failing if appending a symbol raised `δ` by more than one.
pub fn delta_append_check(text: &Text, c: u32) -> Result<(DeltaValue, DeltaValue)> {
    let before = substring_complexity(text)?;
    let after = substring_complexity(&text.appended(c))?;
    if after > before.plus_one() {
        return Err(Error::InvariantViolated("appending a symbol raised delta by more than one"));
    }
    Ok((before, after))
}

/// Applies a morphism mapping each symbol `c` to the block `images[c]`. All
/// blocks must share one length `k ≥ 1`.
pub fn morphism_expand(text: &Text, images: &[Vec<u32>]) -> Result<Text> {
    let k = morphism_width(text, images)?;
    let mut out = Vec::with_capacity(k * text.len());
    for &c in text.symbols() {
        out.extend_from_slice(&images[c as usize]);
    }
    Ok(Text::from_symbols(out))
}

/// Common block length of the images of the symbols used by `text`.
pub fn morphism_width(text: &Text, images: &[Vec<u32>]) -> Result<usize> {
    let mut width = None;
    for &c in text.symbols() {
        let img = images.get(c as usize).ok_or(Error::MissingMorphism { symbol: c })?;
        match width {
            None if img.is_empty() => return Err(Error::RaggedMorphism { symbol: c }),
            None => width = Some(img.len()),
            Some(k) if k != img.len() => return Err(Error::RaggedMorphism { symbol: c }),
            Some(_) => {}
        }
    }
    for img in images {
        if width.is_some_and(|k| k != img.len()) {
            let symbol = images.iter().position(|i| i.len() != width.unwrap()).unwrap() as u32;
            return Err(Error::RaggedMorphism { symbol });
        }
    }
    width.ok_or(Error::EmptyText)
}
