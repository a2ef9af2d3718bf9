//! LCP range-minimum and LCE queries over a grammar for the differential
//! LCP array.

use alloc::vec::Vec;

use super::stats::RuleStats;
use super::{build_pairing_slp, widen, Slg};
use crate::text::{build_bundle, SuffixArrayBundle, Text};
use crate::{Array1, Error, Result};

/// `A[1] = LCP[1]`, `A[i] = LCP[i] − LCP[i−1]`.
pub fn diff_lcp(lcp: &Array1<usize>) -> Vec<i64> {
    let mut prev = 0i64;
    lcp.iter()
        .map(|&h| {
            let d = h as i64 - prev;
            prev = h as i64;
            d
        })
        .collect()
}

/// `k = max(1, ⌈ε · log₂ log₂ n⌉)`, and `k = 1` below `n = 4`.
pub fn widening_factor(n: usize, epsilon: f64) -> u32 {
    if n < 4 {
        return 1;
    }
    let k = libm::ceil(epsilon * libm::log2(libm::log2(n as f64)));
    if k < 1.0 {
        1
    } else {
        k as u32
    }
}

/// Pairing SLP for the differential LCP array, widened so each rhs holds at
/// most `2·2^k` symbols.
pub fn build_diff_lcp_slg(text: &Text, epsilon: f64) -> Result<(Slg, RuleStats)> {
    let bundle = build_bundle(text)?;
    build_from_bundle(&bundle, epsilon)
}

fn build_from_bundle(bundle: &SuffixArrayBundle, epsilon: f64) -> Result<(Slg, RuleStats)> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidEpsilon);
    }
    let k = widening_factor(bundle.len(), epsilon);
    let slp = build_pairing_slp(&diff_lcp(&bundle.lcp))?;
    let slg = widen(&slp, k)?;
    let stats = RuleStats::new(&slg)?;
    Ok((slg, stats))
}

/// LCP range-minimum and LCE queries answered from the differential-LCP
/// grammar. LCP values are read back as prefix sums of the grammar; the
/// inverse suffix array is kept as a plain array.
#[derive(Debug, Clone)]
pub struct LcpRmq {
    slg: Slg,
    stats: RuleStats,
    isa: Array1<usize>,
    n: usize,
    k: u32,
    slp_height: u32,
}

impl LcpRmq {
    pub fn build(text: &Text, epsilon: f64) -> Result<Self> {
        let bundle = build_bundle(text)?;
        let k = widening_factor(bundle.len(), epsilon);
        let slp_height = build_pairing_slp(&diff_lcp(&bundle.lcp))?.height();
        let (slg, stats) = build_from_bundle(&bundle, epsilon)?;
        Ok(Self { slg, stats, isa: bundle.isa, n: text.len(), k, slp_height })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn grammar(&self) -> &Slg {
        &self.slg
    }

    pub fn stats(&self) -> &RuleStats {
        &self.stats
    }

    pub fn widening(&self) -> u32 {
        self.k
    }

    /// Height of the pairing SLP before widening.
    pub fn slp_height(&self) -> u32 {
        self.slp_height
    }

    /// Largest rhs length allowed after widening, `2·2^k`.
    pub fn rhs_bound(&self) -> usize {
        2usize << self.k
    }

    /// Smallest `i ∈ (b..e]` minimizing `LCP[i]`.
    pub fn lcp_rmq(&self, b: usize, e: usize) -> Result<usize> {
        self.stats.interval_argmin_prefix_sum(b as u64, e as u64).map(|i| i as usize)
    }

    /// `LCP[i]`, as the prefix sum of the differential array.
    pub fn lcp(&self, i: usize) -> Result<usize> {
        let s = self.stats.prefix_stats_query(self.slg.start(), i as u64)?;
        Ok(s.sum as usize)
    }

    /// Longest common extension of the suffixes at `i` and `j`.
    pub fn lce(&self, i: usize, j: usize) -> Result<usize> {
        for idx in [i, j] {
            if idx == 0 || idx > self.n {
                return Err(Error::IndexOutOfRange { index: idx, len: self.n });
            }
        }
        if i == j {
            return Ok(self.n - i + 1);
        }
        let (mut b, mut e) = (self.isa[i], self.isa[j]);
        if b > e {
            core::mem::swap(&mut b, &mut e);
        }
        let m = self.lcp_rmq(b, e)?;
        self.lcp(m)
    }
}
