//! Inverse-LF queries in space proportional to the number of BWT runs.
//!
//! The text is remapped to the ranks of its symbols, shifted up by one and
//! terminated with a unique smallest symbol. On the terminated text, LF⁻¹ is
//! piecewise linear with one piece per run boundary, so storing the boundary
//! positions `p_1 < … < p_m` and `ILF[p_j]` answers any query with a single
//! predecessor search.

use alloc::vec::Vec;

use crate::predecessor::{Predecessor, YFastTrie};
use crate::text::{build_bundle, Text};
use crate::{Error, Result};

/// `T' = (T[1]+1) … (T[n]+1) · 0`, together with the ranks of the first and
/// last suffix of `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminatedText {
    pub original: Text,
    pub shifted: Text,
    /// `ISA_T[1]`.
    pub i_first: usize,
    /// `ISA_T[n]`.
    pub i_last: usize,
}

fn shift_and_terminate(text: &Text) -> Result<Text> {
    let sigma = text.sigma().checked_add(1).ok_or(Error::AlphabetOverflow)?;
    let mut symbols: Vec<u32> = text.symbols().iter().map(|&c| c + 1).collect();
    symbols.push(0);
    Text::new(symbols, sigma)
}

/// Appends the terminator and checks that it adds at most three BWT runs.
pub fn append_terminator(text: &Text) -> Result<TerminatedText> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    let shifted = shift_and_terminate(text)?;
    let before = build_bundle(text)?;
    let after = build_bundle(&shifted)?;
    if after.bwt_runs() > before.bwt_runs() + 3 {
        return Err(Error::InvariantViolated("terminator added more than three runs"));
    }
    Ok(TerminatedText { original: text.clone(), shifted, i_first: before.isa[1], i_last: before.isa[text.len()] })
}

/// Relabels symbols by their rank among the distinct symbols of the text.
pub fn rank_remap(text: &Text) -> Text {
    let mut alphabet: Vec<u32> = text.symbols().to_vec();
    alphabet.sort_unstable();
    alphabet.dedup();
    let symbols = text.symbols().iter().map(|c| alphabet.binary_search(c).unwrap() as u32).collect();
    Text::new(symbols, alphabet.len().max(1) as u32).expect("ranks fit the alphabet")
}

/// Work done by one query.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryTrace {
    pub predecessor_queries: u32,
    pub boundary_reads: u32,
}

#[derive(Debug, Clone)]
pub struct IlfIndex<P = YFastTrie> {
    n: usize,
    boundaries: P,
    ilf_at_boundary: Vec<usize>,
    i_first: usize,
    i_last: usize,
}

/// Builds the index with a y-fast trie over the boundaries.
pub fn build_ilf_index(text: &Text) -> Result<IlfIndex> {
    IlfIndex::build(text)
}

impl<P: Predecessor> IlfIndex<P> {
    pub fn build(text: &Text) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyText);
        }
        let n = text.len();
        let terminated = shift_and_terminate(&rank_remap(text))?;
        let b = build_bundle(&terminated)?;
        let bwt = b.bwt.as_slice();
        let mut pairs: Vec<(usize, usize)> = (1..=n + 1)
            .filter(|&i| i == 1 || bwt[i - 2] != bwt[i - 1])
            .map(|i| {
                let p = b.lf[i];
                (p, b.ilf[p])
            })
            .collect();
        pairs.sort_unstable();
        let keys = pairs.iter().map(|&(p, _)| p as u64).collect();
        let boundaries = P::from_sorted(keys, (n + 1) as u64)?;
        Ok(Self {
            n,
            boundaries,
            ilf_at_boundary: pairs.into_iter().map(|(_, v)| v).collect(),
            i_first: b.isa[1] - 1,
            i_last: b.isa[n] - 1,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of stored boundaries, equal to `r` of the terminated text.
    pub fn boundary_count(&self) -> usize {
        self.ilf_at_boundary.len()
    }

    pub fn boundary_keys(&self) -> Vec<usize> {
        (1..=self.boundaries.len()).map(|i| self.boundaries.key(i).unwrap() as usize).collect()
    }

    /// `LF⁻¹[i]` of the original text.
    pub fn query(&self, i: usize) -> Result<usize> {
        self.query_traced(i).map(|(v, _)| v)
    }

    pub fn query_traced(&self, i: usize) -> Result<(usize, QueryTrace)> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, len: self.n });
        }
        let mut trace = QueryTrace::default();
        if i == self.i_last {
            return Ok((self.i_first, trace));
        }
        Ok((self.query_terminated(i + 1, &mut trace) - 1, trace))
    }

    /// `LF⁻¹[j]` of the terminated text, `j ∈ [1..n+1]`.
    fn query_terminated(&self, j: usize, trace: &mut QueryTrace) -> usize {
        let mut k = self.boundaries.pred(j as i64);
        trace.predecessor_queries += 1;
        if k < self.boundaries.len() && self.boundaries.key(k + 1) == Some(j as u64) {
            k += 1;
        }
        trace.boundary_reads += 1;
        let p = self.boundaries.key(k).expect("position 1 is always a boundary") as usize;
        self.ilf_at_boundary[k - 1] + (j - p)
    }
}
