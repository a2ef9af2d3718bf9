//! Static predecessor search over integer key sets.
//!
//! Every structure answers with an index `i ∈ [0..m]`: `a_i` is the largest
//! key strictly smaller than the query, and `i = 0` stands for `−∞`.

use alloc::vec::Vec;

use hashbrown::HashMap;
use rustc_hash::FxBuildHasher;

use crate::{Error, Result};

pub trait Predecessor: Sized {
    /// Builds from strictly increasing keys in `[0..universe]`.
    fn from_sorted(keys: Vec<u64>, universe: u64) -> Result<Self>;

    /// Index of the strict predecessor of `x`, 0 when there is none.
    fn pred(&self, x: i64) -> usize;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `a_i` for `i ∈ [1..m]`; `None` for the `−∞` slot.
    fn key(&self, i: usize) -> Option<u64>;
}

/// Parity of the rank of `x`.
pub fn pred_color<P: Predecessor>(set: &P, x: i64) -> u8 {
    (set.pred(x) % 2) as u8
}

fn check_keys(keys: &[u64], universe: u64) -> Result<()> {
    for (k, w) in keys.windows(2).enumerate() {
        if w[0] >= w[1] {
            return Err(Error::KeysNotIncreasing { position: k + 2 });
        }
    }
    match keys.last() {
        Some(&key) if key > universe => Err(Error::KeyOutOfUniverse { key, universe }),
        _ => Ok(()),
    }
}

/// Clamps a query into the key domain: `Err(i)` is a final answer.
#[inline]
fn clamp_query(x: i64, universe: u64, m: usize) -> core::result::Result<u64, usize> {
    if x <= 0 {
        Err(0)
    } else if x as u64 > universe {
        Err(m)
    } else {
        Ok(x as u64)
    }
}

/// Sorted keys with binary search; the reference flavor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticKeySet {
    keys: Vec<u64>,
    universe: u64,
}

impl StaticKeySet {
    pub fn new(keys: Vec<u64>, universe: u64) -> Result<Self> {
        check_keys(&keys, universe)?;
        Ok(Self { keys, universe })
    }

    pub fn keys(&self) -> &[u64] {
        &self.keys
    }

    pub fn universe(&self) -> u64 {
        self.universe
    }
}

impl Predecessor for StaticKeySet {
    fn from_sorted(keys: Vec<u64>, universe: u64) -> Result<Self> {
        Self::new(keys, universe)
    }

    fn pred(&self, x: i64) -> usize {
        match clamp_query(x, self.universe, self.keys.len()) {
            Ok(y) => self.keys.partition_point(|&k| k < y),
            Err(i) => i,
        }
    }

    fn len(&self) -> usize {
        self.keys.len()
    }

    fn key(&self, i: usize) -> Option<u64> {
        i.checked_sub(1).and_then(|k| self.keys.get(k).copied())
    }
}

const FANOUT: usize = 8;

/// Flat two-level search for short key sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallSet {
    keys: Vec<u64>,
    block_last: Vec<u64>,
    universe: u64,
}

impl Predecessor for SmallSet {
    fn from_sorted(keys: Vec<u64>, universe: u64) -> Result<Self> {
        check_keys(&keys, universe)?;
        let block_last = keys.chunks(FANOUT).map(|c| *c.last().unwrap()).collect();
        Ok(Self { keys, block_last, universe })
    }

    fn pred(&self, x: i64) -> usize {
        let y = match clamp_query(x, self.universe, self.keys.len()) {
            Ok(y) => y,
            Err(i) => return i,
        };
        let block = self.block_last.iter().filter(|&&k| k < y).count();
        if block == self.block_last.len() {
            return self.keys.len();
        }
        let start = block * FANOUT;
        let end = (start + FANOUT).min(self.keys.len());
        start + self.keys[start..end].iter().filter(|&&k| k < y).count()
    }

    fn len(&self) -> usize {
        self.keys.len()
    }

    fn key(&self, i: usize) -> Option<u64> {
        i.checked_sub(1).and_then(|k| self.keys.get(k).copied())
    }
}

/// Y-fast trie: an x-fast trie of per-level prefix hash maps over bucket
/// representatives, and sorted buckets of about `log u` keys.
#[derive(Debug, Clone)]
pub struct YFastTrie {
    keys: Vec<u64>,
    universe: u64,
    bits: u32,
    bucket: usize,
    /// `levels[l]` maps each `l`-bit prefix of a representative to the
    /// smallest and largest representative index below it.
    levels: Vec<HashMap<u64, (u32, u32), FxBuildHasher>>,
}

impl YFastTrie {
    fn prefix(&self, y: u64, l: u32) -> u64 {
        if l == 0 {
            0
        } else {
            y >> (self.bits - l)
        }
    }

    /// Index of the largest representative strictly below `y`.
    fn rep_pred(&self, y: u64) -> Option<usize> {
        if self.levels[0].is_empty() {
            return None;
        }
        let (mut lo, mut hi) = (0u32, self.bits);
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if self.levels[mid as usize].contains_key(&self.prefix(y, mid)) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let (min, max) = self.levels[lo as usize][&self.prefix(y, lo)];
        if lo == self.bits {
            return (min as usize).checked_sub(1);
        }
        let bit = (y >> (self.bits - 1 - lo)) & 1;
        if bit == 1 {
            Some(max as usize)
        } else {
            (min as usize).checked_sub(1)
        }
    }
}

impl Predecessor for YFastTrie {
    fn from_sorted(keys: Vec<u64>, universe: u64) -> Result<Self> {
        check_keys(&keys, universe)?;
        let bits = (u64::BITS - universe.leading_zeros()).max(1);
        let bucket = bits as usize;
        let mut levels: Vec<HashMap<u64, (u32, u32), FxBuildHasher>> =
            (0..=bits).map(|_| HashMap::with_hasher(FxBuildHasher)).collect();
        let mut trie = Self { keys, universe, bits, bucket, levels: Vec::new() };
        for (idx, chunk) in trie.keys.chunks(bucket).enumerate() {
            let rep = chunk[0];
            for l in 0..=bits {
                let e = levels[l as usize].entry(trie.prefix(rep, l)).or_insert((idx as u32, idx as u32));
                e.1 = idx as u32;
            }
        }
        trie.levels = levels;
        Ok(trie)
    }

    fn pred(&self, x: i64) -> usize {
        let y = match clamp_query(x, self.universe, self.keys.len()) {
            Ok(y) => y,
            Err(i) => return i,
        };
        let Some(b) = self.rep_pred(y) else {
            return 0;
        };
        let start = b * self.bucket;
        let end = (start + self.bucket).min(self.keys.len());
        start + self.keys[start..end].partition_point(|&k| k < y)
    }

    fn len(&self) -> usize {
        self.keys.len()
    }

    fn key(&self, i: usize) -> Option<u64> {
        i.checked_sub(1).and_then(|k| self.keys.get(k).copied())
    }
}
