//! Reduction gadgets: texts that encode a predecessor or range-query
//! instance so that one lookup in a text-index array answers the query.
//!
//! Each gadget stores its text, the text's suffix arrays, and the anchor
//! constants its query mapping needs. [`verify_reduction`] runs every query
//! of the instance through the mapping and through a definitional oracle.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::measures::{check_lz_like, lz77_from_bundle, LzFactorization, LzPhrase};
use crate::text::{SuffixArrayBundle, Text};
use crate::{Error, Result};

mod access;
mod bwt_color;
mod ilf_pred;
mod isa_count;
mod lcp_select;
mod phi_inverse;
mod phi_pred;
mod plcp_pred;

pub use access::{prepend_zero, AccessViaIsa, AccessViaLce};
pub use bwt_color::BwtColorGadget;
pub use ilf_pred::IlfPredGadget;
pub use isa_count::IsaCountGadget;
pub use lcp_select::LcpSelectGadget;
pub use phi_inverse::PhiInverseGadget;
pub use phi_pred::PhiPredGadget;
pub use plcp_pred::PlcpPredGadget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetKind {
    LcpSelect,
    IsaCount,
    BwtColor,
    PlcpPred,
    PhiPred,
    IlfPred,
    PhiInverse,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 7] = [
        GadgetKind::LcpSelect,
        GadgetKind::IsaCount,
        GadgetKind::BwtColor,
        GadgetKind::PlcpPred,
        GadgetKind::PhiPred,
        GadgetKind::IlfPred,
        GadgetKind::PhiInverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::LcpSelect => "lcp-select",
            GadgetKind::IsaCount => "isa-count",
            GadgetKind::BwtColor => "bwt-color",
            GadgetKind::PlcpPred => "plcp-pred",
            GadgetKind::PhiPred => "phi-pred",
            GadgetKind::IlfPred => "ilf-pred",
            GadgetKind::PhiInverse => "phi-inverse",
        }
    }

    /// What the size parameter counts: permutation length `n`, set size `m`,
    /// or text length `n`.
    pub fn input_shape(self) -> InputShape {
        match self {
            GadgetKind::LcpSelect | GadgetKind::IsaCount => InputShape::Permutation,
            GadgetKind::PhiInverse => InputShape::BinaryText,
            _ => InputShape::Set,
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GadgetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GadgetKind::ALL.into_iter().find(|k| k.name() == s).ok_or(Error::OutOfContract("unknown gadget kind"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputShape {
    Permutation,
    Set,
    BinaryText,
}

/// The instance a gadget encodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetInput {
    /// `A[1..n]`, a permutation of `1..n`.
    Permutation(Vec<usize>),
    /// `a_1 < … < a_m` drawn from `[1..m²]`.
    Set(Vec<u64>),
    /// A text and its alphabet bound.
    Text(Text),
}

/// Answer of a predecessor mapping: `index = 0` means `−∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredAnswer {
    pub index: usize,
    pub value: Option<u64>,
}

impl PredAnswer {
    pub(crate) fn of(keys: &[u64], index: usize) -> Result<Self> {
        if index > keys.len() {
            return Err(Error::InvariantViolated("mapped index outside [0..m]"));
        }
        Ok(Self { index, value: index.checked_sub(1).map(|k| keys[k]) })
    }
}

/// One query evaluated both ways. `got` is `None` if the mapping failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueryOutcome {
    pub args: (i64, i64),
    pub expected: i64,
    pub got: Option<i64>,
}

/// Common surface of all gadgets.
pub trait Gadget {
    fn kind(&self) -> GadgetKind;
    fn text(&self) -> &Text;
    fn bundle(&self) -> &SuffixArrayBundle;
    /// `|T|` by closed form.
    fn expected_len(&self) -> usize;
    /// `|RL(T)|` by closed form, where one is known.
    fn expected_runs(&self) -> Option<usize>;
    /// Whether the stored anchors equal anchors recomputed from the text.
    fn anchors_match(&self) -> bool;
    /// An LZ77-like factorization of the text and the phrase bound it must meet.
    fn certificate(&self) -> (LzFactorization, usize);
    /// Evaluates every query of the instance, including a margin outside the
    /// query domain.
    fn for_each_query(&self, f: &mut dyn FnMut(QueryOutcome));
}

/// What went wrong first in a verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    /// Ordinal of the instance within the run.
    pub instance: u64,
    pub check: &'static str,
    pub args: (i64, i64),
    pub expected: i64,
    pub got: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub kind: GadgetKind,
    pub instances: u64,
    pub queries: u64,
    pub mismatches: u64,
    pub shape_failures: u64,
    pub anchor_failures: u64,
    pub certificate_failures: u64,
    pub max_text_len: usize,
    pub max_runs: usize,
    pub max_certificate: usize,
    pub max_lz: usize,
    pub first_failure: Option<Failure>,
}

impl ReductionReport {
    pub fn empty(kind: GadgetKind) -> Self {
        Self {
            kind,
            instances: 0,
            queries: 0,
            mismatches: 0,
            shape_failures: 0,
            anchor_failures: 0,
            certificate_failures: 0,
            max_text_len: 0,
            max_runs: 0,
            max_certificate: 0,
            max_lz: 0,
            first_failure: None,
        }
    }

    pub fn failures(&self) -> u64 {
        self.mismatches + self.shape_failures + self.anchor_failures + self.certificate_failures
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// Combines two reports; the left one's first failure wins.
    pub fn merge(mut self, other: ReductionReport) -> ReductionReport {
        self.instances += other.instances;
        self.queries += other.queries;
        self.mismatches += other.mismatches;
        self.shape_failures += other.shape_failures;
        self.anchor_failures += other.anchor_failures;
        self.certificate_failures += other.certificate_failures;
        self.max_text_len = self.max_text_len.max(other.max_text_len);
        self.max_runs = self.max_runs.max(other.max_runs);
        self.max_certificate = self.max_certificate.max(other.max_certificate);
        self.max_lz = self.max_lz.max(other.max_lz);
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self
    }

    fn fail(&mut self, f: Failure) {
        if self.first_failure.is_none() {
            self.first_failure = Some(f);
        }
    }
}

/// A built gadget of any kind.
#[derive(Debug, Clone)]
pub enum GadgetInstance {
    LcpSelect(LcpSelectGadget),
    IsaCount(IsaCountGadget),
    BwtColor(BwtColorGadget),
    PlcpPred(PlcpPredGadget),
    PhiPred(PhiPredGadget),
    IlfPred(IlfPredGadget),
    PhiInverse(Box<PhiInverseGadget>),
}

impl GadgetInstance {
    pub fn build(kind: GadgetKind, input: &GadgetInput) -> Result<Self> {
        let wrong = Error::OutOfContract("input does not match the gadget kind");
        Ok(match (kind, input) {
            (GadgetKind::LcpSelect, GadgetInput::Permutation(a)) => Self::LcpSelect(LcpSelectGadget::new(a.clone())?),
            (GadgetKind::IsaCount, GadgetInput::Permutation(a)) => Self::IsaCount(IsaCountGadget::new(a.clone())?),
            (GadgetKind::BwtColor, GadgetInput::Set(a)) => Self::BwtColor(BwtColorGadget::new(a.clone())?),
            (GadgetKind::PlcpPred, GadgetInput::Set(a)) => Self::PlcpPred(PlcpPredGadget::new(a.clone())?),
            (GadgetKind::PhiPred, GadgetInput::Set(a)) => Self::PhiPred(PhiPredGadget::new(a.clone())?),
            (GadgetKind::IlfPred, GadgetInput::Set(a)) => Self::IlfPred(IlfPredGadget::new(a.clone())?),
            (GadgetKind::PhiInverse, GadgetInput::Text(t)) => {
                Self::PhiInverse(Box::new(PhiInverseGadget::new(t, t.sigma())?))
            }
            _ => return Err(wrong),
        })
    }

    pub fn as_gadget(&self) -> &dyn Gadget {
        match self {
            Self::LcpSelect(g) => g,
            Self::IsaCount(g) => g,
            Self::BwtColor(g) => g,
            Self::PlcpPred(g) => g,
            Self::PhiPred(g) => g,
            Self::IlfPred(g) => g,
            Self::PhiInverse(g) => g.as_ref(),
        }
    }
}

/// Checks one gadget: closed-form shape, anchors, the LZ-like certificate,
/// and every query against its oracle. `instance` labels failures.
pub fn verify_reduction(g: &dyn Gadget, instance: u64) -> ReductionReport {
    let mut rep = ReductionReport::empty(g.kind());
    rep.instances = 1;
    let text = g.text();
    let runs = crate::measures::runs_of(text.symbols()).len();
    rep.max_text_len = text.len();
    rep.max_runs = runs;

    let shape = |check, expected: usize, got: usize| Failure {
        instance,
        check,
        args: (0, 0),
        expected: expected as i64,
        got: Some(got as i64),
    };
    if g.expected_len() != text.len() {
        rep.shape_failures += 1;
        rep.fail(shape("text-length", g.expected_len(), text.len()));
    }
    if let Some(r) = g.expected_runs() {
        if r != runs {
            rep.shape_failures += 1;
            rep.fail(shape("run-count", r, runs));
        }
    }
    if !g.anchors_match() {
        rep.anchor_failures += 1;
        rep.fail(shape("anchors", 1, 0));
    }

    let (cert, bound) = g.certificate();
    let z = lz77_from_bundle(text, g.bundle()).len();
    rep.max_lz = z;
    rep.max_certificate = cert.len();
    match check_lz_like(text, &cert) {
        Ok(k) if z <= k && k <= bound => {}
        Ok(k) => {
            rep.certificate_failures += 1;
            rep.fail(shape("certificate-size", bound, k.max(z)));
        }
        Err(_) => {
            rep.certificate_failures += 1;
            rep.fail(shape("certificate-invalid", bound, cert.len()));
        }
    }

    g.for_each_query(&mut |q| {
        rep.queries += 1;
        if q.got != Some(q.expected) {
            rep.mismatches += 1;
            rep.fail(Failure { instance, check: "query", args: q.args, expected: q.expected, got: q.got });
        }
    });
    rep
}

pub(crate) fn push_run(out: &mut Vec<u32>, c: u32, len: usize) {
    out.extend(core::iter::repeat_n(c, len));
}

/// A text over `{0, 1}`.
pub fn binary_text(symbols: Vec<u32>) -> Text {
    Text::new(symbols, 2).expect("binary symbols")
}

/// `k = 1 + ⌊log₂ m⌋`.
pub fn bit_width(m: usize) -> usize {
    (usize::BITS - m.leading_zeros()) as usize
}

/// `bin_k(x)`: `x` in big-endian binary, padded to `k` digits.
pub fn bin(x: usize, k: usize) -> Vec<u32> {
    (0..k).rev().map(|b| ((x >> b) & 1) as u32).collect()
}

/// `ebin_k(x) = 1^{k+1} 0 bin_k(x) 0`.
pub fn ebin(x: usize, k: usize) -> Vec<u32> {
    let mut out = vec![1; k + 1];
    out.push(0);
    out.extend(bin(x, k));
    out.push(0);
    out
}

pub(crate) fn check_permutation(a: &[usize]) -> Result<()> {
    let n = a.len();
    if n == 0 {
        return Err(Error::NotPermutation);
    }
    let mut seen = vec![false; n + 1];
    for &v in a {
        if v == 0 || v > n || seen[v] {
            return Err(Error::NotPermutation);
        }
        seen[v] = true;
    }
    Ok(())
}

/// `A ⊆ [1..m²]` with `|A| = m ≥ 1`, strictly increasing.
pub(crate) fn check_set(a: &[u64]) -> Result<usize> {
    let m = a.len();
    if m == 0 {
        return Err(Error::InvalidSet("the set must be nonempty"));
    }
    let top = (m * m) as u64;
    if a[0] == 0 || a[m - 1] > top {
        return Err(Error::InvalidSet("keys must lie in [1..m^2]"));
    }
    if a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSet("keys must be strictly increasing"));
    }
    Ok(m)
}

/// `a_0 = 0, a_1, …, a_m, a_{m+1} = m²`.
pub(crate) fn padded_keys(a: &[u64]) -> Vec<u64> {
    let m = a.len() as u64;
    let mut out = Vec::with_capacity(a.len() + 2);
    out.push(0);
    out.extend_from_slice(a);
    out.push(m * m);
    out
}

/// Index of the strict predecessor of `x` in `a`, by definition.
pub fn pred_oracle(a: &[u64], x: i64) -> usize {
    a.iter().filter(|&&k| (k as i64) < x).count()
}

/// Literal phrases for `syms`, followed by one copy covering `copies − 1`
/// further repetitions of the block.
pub(crate) fn periodic_phrases(out: &mut LzFactorization, pos: &mut usize, block: &[u32], copies: usize) {
    if copies == 0 {
        return;
    }
    let start = *pos;
    out.phrases.extend(block.iter().map(|&c| LzPhrase::Literal(c)));
    *pos += block.len();
    if copies >= 2 {
        let len = (copies - 1) * block.len();
        out.phrases.push(LzPhrase::Repeat { source: start, len });
        *pos += len;
    }
}

/// Every permutation of `1..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Every `m`-subset of `[1..m²]` in lexicographic order.
pub fn key_sets(m: usize) -> Vec<Vec<u64>> {
    let top = (m * m) as u64;
    let mut cur: Vec<u64> = (1..=m as u64).collect();
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = m;
        while i > 0 && cur[i - 1] == top - (m - i) as u64 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for t in i..m {
            cur[t] = cur[t - 1] + 1;
        }
    }
}

/// All exhaustive inputs of a kind at the given size.
pub fn exhaustive_inputs(kind: GadgetKind, size: usize) -> Vec<GadgetInput> {
    match kind.input_shape() {
        InputShape::Permutation => permutations(size).into_iter().map(GadgetInput::Permutation).collect(),
        InputShape::Set => key_sets(size).into_iter().map(GadgetInput::Set).collect(),
        InputShape::BinaryText => (0u64..1 << size)
            .map(|bits| {
                let symbols = (0..size).map(|b| ((bits >> b) & 1) as u32).collect();
                GadgetInput::Text(binary_text(symbols))
            })
            .collect(),
    }
}
