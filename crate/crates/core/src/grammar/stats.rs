//! Per-rule prefix, suffix and child statistics for prefix-sum queries.
//!
//! For a rule `N_i → R_i[1..ℓ]` and an rhs position `δ`:
//! - `P_*[δ]` describe the expansion of `R_i[1..δ)`;
//! - `S_*[δ]` describe the expansion of `R_i(δ..ℓ]`;
//! - `M_*[δ]` give the minimum prefix sum reached inside child `δ`, measured
//!   from the start of `N_i`.
//!
//! `*_min` is the minimum prefix sum, `*_pos` its smallest position; `None`
//! marks an empty span. Positions are 1-based.

use alloc::vec;
use alloc::vec::Vec;

use super::{Slg, Symbol};
use crate::predecessor::{Predecessor, SmallSet};
use crate::rmq::SparseTable;
use crate::{Error, Result};

/// Sum, minimum prefix sum, and the smallest position attaining the minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanStats {
    pub sum: i64,
    pub min: i64,
    pub argmin: u64,
}

#[derive(Debug, Clone)]
struct RuleTable {
    rhs: Vec<Symbol>,
    p_len: Vec<u64>,
    p_sum: Vec<i64>,
    p_min: Vec<Option<i64>>,
    p_pos: Vec<u64>,
    s_len: Vec<u64>,
    s_sum: Vec<i64>,
    s_min: Vec<Option<i64>>,
    s_pos: Vec<u64>,
    m_pos: Vec<u64>,
    m_rmq: SparseTable<i64>,
    bounds: SmallSet,
}

impl RuleTable {
    fn child(&self, d: usize) -> Symbol {
        self.rhs[d - 1]
    }

    /// Child index `δ` holding the `p`-th symbol of the expansion.
    fn locate(&self, p: u64) -> usize {
        self.bounds.pred(p as i64)
    }
}

#[derive(Debug, Clone)]
pub struct RuleStats {
    tables: Vec<Option<RuleTable>>,
    whole: Vec<SpanStats>,
    exp_len: Vec<u64>,
    start: usize,
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

impl RuleStats {
    pub fn new(slg: &Slg) -> Result<Self> {
        let bound = slg.id_bound();
        let mut tables: Vec<Option<RuleTable>> = vec![None; bound];
        let mut whole = vec![SpanStats { sum: 0, min: 0, argmin: 0 }; bound];
        let exp_len: Vec<u64> = (0..bound).map(|x| if slg.rule(x).is_some() { slg.exp_len(x) } else { 0 }).collect();

        for &x in slg.topological() {
            let rhs = slg.rule(x).unwrap().to_vec();
            if slg.exp_len(x) == 0 {
                return Err(Error::EmptyExpansion(x));
            }
            let child = |s: Symbol| match s {
                Symbol::Terminal(c) => SpanStats { sum: c, min: c, argmin: 1 },
                Symbol::Nonterminal(y) => whole[y],
            };
            let len_of = |s: Symbol| match s {
                Symbol::Terminal(_) => 1,
                Symbol::Nonterminal(y) => exp_len[y],
            };
            let l = rhs.len();

            let mut p_len = vec![0u64; l + 1];
            let mut p_sum = vec![0i64; l + 1];
            let mut p_min = vec![None; l];
            let mut p_pos = vec![0u64; l];
            let mut m_min = vec![0i64; l];
            let mut m_pos = vec![0u64; l];
            for d in 0..l {
                let c = child(rhs[d]);
                m_min[d] = add(p_sum[d], c.min)?;
                m_pos[d] = p_len[d] + c.argmin;
                p_len[d + 1] = p_len[d] + len_of(rhs[d]);
                p_sum[d + 1] = add(p_sum[d], c.sum)?;
                if d + 1 < l {
                    let keep = matches!(p_min[d], Some(v) if v <= m_min[d]);
                    if keep {
                        p_min[d + 1] = p_min[d];
                        p_pos[d + 1] = p_pos[d];
                    } else {
                        p_min[d + 1] = Some(m_min[d]);
                        p_pos[d + 1] = m_pos[d];
                    }
                }
            }
            let mut s_len = vec![0u64; l];
            let mut s_sum = vec![0i64; l];
            let mut s_min = vec![None; l];
            let mut s_pos = vec![0u64; l];
            for d in (0..l.saturating_sub(1)).rev() {
                let next = rhs[d + 1];
                let c = child(next);
                let cl = len_of(next);
                s_len[d] = cl + s_len[d + 1];
                s_sum[d] = add(c.sum, s_sum[d + 1])?;
                match s_min[d + 1] {
                    Some(v) if add(c.sum, v)? < c.min => {
                        s_min[d] = Some(c.sum + v);
                        s_pos[d] = cl + s_pos[d + 1];
                    }
                    _ => {
                        s_min[d] = Some(c.min);
                        s_pos[d] = c.argmin;
                    }
                }
            }

            let mut best = 0;
            for d in 1..l {
                if m_min[d] < m_min[best] {
                    best = d;
                }
            }
            whole[x] = SpanStats { sum: p_sum[l], min: m_min[best], argmin: m_pos[best] };
            let bounds = SmallSet::from_sorted(p_len.clone(), p_len[l])?;
            tables[x] = Some(RuleTable {
                rhs,
                p_len,
                p_sum,
                p_min,
                p_pos,
                s_len,
                s_sum,
                s_min,
                s_pos,
                m_pos,
                m_rmq: SparseTable::new(m_min),
                bounds,
            });
        }
        Ok(Self { tables, whole, exp_len, start: slg.start() })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn exp_len(&self, x: usize) -> u64 {
        self.exp_len[x]
    }

    /// Statistics of the full expansion of `x`.
    pub fn whole(&self, x: usize) -> Option<SpanStats> {
        self.tables.get(x)?.as_ref()?;
        Some(self.whole[x])
    }

    fn table(&self, x: usize) -> &RuleTable {
        self.tables[x].as_ref().expect("defined nonterminal")
    }

    fn check(&self, x: usize, p: u64) -> Result<()> {
        if self.tables.get(x).is_none_or(|t| t.is_none()) {
            return Err(Error::UndefinedNonterminal(x));
        }
        if p == 0 || p > self.exp_len[x] {
            return Err(Error::IndexOutOfRange { index: p as usize, len: self.exp_len[x] as usize });
        }
        Ok(())
    }

    /// Root-to-leaf path to the `p`-th expansion symbol of `x`: the rules
    /// visited with the child taken in each, and the terminal reached.
    fn descend(&self, x: usize, p: u64) -> (Vec<(usize, usize)>, i64) {
        let mut path = Vec::new();
        let (mut cur, mut pcur) = (x, p);
        loop {
            let t = self.table(cur);
            let d = t.locate(pcur);
            path.push((cur, d));
            match t.child(d) {
                Symbol::Terminal(c) => return (path, c),
                Symbol::Nonterminal(y) => {
                    pcur -= t.p_len[d - 1];
                    cur = y;
                }
            }
        }
    }

    /// Sum, minimum prefix sum and first argmin over the length-`p` prefix of
    /// the expansion of `x`.
    pub fn prefix_stats_query(&self, x: usize, p: u64) -> Result<SpanStats> {
        self.check(x, p)?;
        let (path, leaf) = self.descend(x, p);
        let mut acc_sum = 0i64;
        let mut acc_len = 0u64;
        let mut best: Option<(i64, u64)> = None;
        for &(a, d) in &path {
            let t = self.table(a);
            if let Some(pm) = t.p_min[d - 1] {
                let v = acc_sum + pm;
                if best.is_none_or(|(bv, _)| v < bv) {
                    best = Some((v, acc_len + t.p_pos[d - 1]));
                }
            }
            acc_sum += t.p_sum[d - 1];
            acc_len += t.p_len[d - 1];
        }
        let sum = acc_sum + leaf;
        Ok(match best {
            Some((v, pos)) if v <= sum => SpanStats { sum, min: v, argmin: pos },
            _ => SpanStats { sum, min: sum, argmin: p },
        })
    }

    /// Sum, minimum prefix sum and first argmin over the length-`p` suffix of
    /// the expansion of `x`; positions count from the suffix start.
    pub fn suffix_stats_query(&self, x: usize, p: u64) -> Result<SpanStats> {
        self.check(x, p)?;
        let (path, leaf) = self.descend(x, self.exp_len[x] - p + 1);
        // Walk from the leaf upwards, so the spans are met in text order.
        let mut acc_sum = leaf;
        let mut acc_len = 1u64;
        let mut best = (leaf, 1u64);
        for &(a, d) in path.iter().rev() {
            let t = self.table(a);
            if let Some(sm) = t.s_min[d - 1] {
                let v = acc_sum + sm;
                if v < best.0 {
                    best = (v, acc_len + t.s_pos[d - 1]);
                }
            }
            acc_sum += t.s_sum[d - 1];
            acc_len += t.s_len[d - 1];
        }
        Ok(SpanStats { sum: acc_sum, min: best.0, argmin: best.1 })
    }

    /// Smallest `i ∈ (b..e]` minimizing `B[1] + … + B[i]` over the expansion
    /// `B` of the start symbol.
    pub fn interval_argmin_prefix_sum(&self, b: u64, e: u64) -> Result<u64> {
        let total = self.exp_len[self.start];
        if b >= e {
            return Err(Error::EmptyRange { b: b as usize, e: e as usize });
        }
        if e > total {
            return Err(Error::IndexOutOfRange { index: e as usize, len: total as usize });
        }
        let (mut x, mut bp, mut ep) = (self.start, b, e);
        let (t, i, j) = loop {
            let t = self.table(x);
            let i = t.bounds.pred(bp as i64);
            let j = t.bounds.pred(ep as i64 + 1);
            if i != j {
                break (t, i, j);
            }
            let Symbol::Nonterminal(y) = t.child(i) else {
                unreachable!("a range of length two or more spans a nonterminal");
            };
            bp -= t.p_len[i - 1];
            ep -= t.p_len[i - 1];
            x = y;
        };
        let p_len = |d: usize| t.p_len[d - 1];
        let p_sum = |d: usize| t.p_sum[d - 1];
        let p_left = p_len(i + 1) - bp;
        let p_mid = p_len(j) - p_len(i + 1);
        let p_right = ep - p_len(j);

        let mut best: Option<(i64, u64)> = None;
        let mut s_cur = 0i64;
        let mut p_cur = 0u64;
        if p_left > 0 {
            let Symbol::Nonterminal(y) = t.child(i) else { unreachable!() };
            let l = self.suffix_stats_query(y, p_left)?;
            best = Some((l.min, l.argmin));
            s_cur = l.sum;
            p_cur = p_left;
        }
        if p_mid > 0 {
            let first = i + 1;
            let m = t.m_rmq.query(first - 1, j - 1)?;
            let v = t.m_rmq.value(m) - p_sum(first);
            let pos = t.m_pos[m - 1] - p_len(first);
            if best.is_none_or(|(bv, _)| s_cur + v < bv) {
                best = Some((s_cur + v, p_cur + pos));
            }
            s_cur += p_sum(j) - p_sum(first);
            p_cur += p_mid;
        }
        if p_right > 0 {
            let r = match t.child(j) {
                Symbol::Terminal(c) => SpanStats { sum: c, min: c, argmin: 1 },
                Symbol::Nonterminal(y) => self.prefix_stats_query(y, p_right)?,
            };
            if best.is_none_or(|(bv, _)| s_cur + r.min < bv) {
                best = Some((s_cur + r.min, p_cur + r.argmin));
            }
        }
        Ok(b + best.expect("nonempty range").1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{build_pairing_slp, widen};
    use proptest::prelude::*;
    use Symbol::{Nonterminal as N, Terminal as T};

    fn scan(b: &[i64]) -> SpanStats {
        let mut sum = 0;
        let mut best = (i64::MAX, 0u64);
        for (k, &v) in b.iter().enumerate() {
            sum += v;
            if sum < best.0 {
                best = (sum, k as u64 + 1);
            }
        }
        SpanStats { sum, min: best.0, argmin: best.1 }
    }

    fn check_all(slg: &Slg) -> core::result::Result<(), TestCaseError> {
        let stats = RuleStats::new(slg).unwrap();
        for &x in slg.topological() {
            let e = slg.expand(x).unwrap();
            let m = e.len() as u64;
            for p in 1..=m {
                prop_assert_eq!(stats.prefix_stats_query(x, p).unwrap(), scan(&e[..p as usize]));
                prop_assert_eq!(stats.suffix_stats_query(x, p).unwrap(), scan(&e[(m - p) as usize..]));
                let total: i64 = e.iter().sum();
                if p < m {
                    let a = stats.prefix_stats_query(x, p).unwrap().sum;
                    let b = stats.suffix_stats_query(x, m - p).unwrap().sum;
                    prop_assert_eq!(a + b, total);
                }
            }
        }
        let e = slg.expand(slg.start()).unwrap();
        let mut pre = vec![0i64];
        for v in &e {
            pre.push(pre.last().unwrap() + v);
        }
        for b in 0..e.len() {
            for en in b + 1..=e.len() {
                let want = crate::range::rmq_scan(&pre[1..], b, en).unwrap() as u64;
                prop_assert_eq!(stats.interval_argmin_prefix_sum(b as u64, en as u64).unwrap(), want);
            }
        }
        Ok(())
    }

    /// Random acyclic grammar: rule `i` may only use rules `< i`.
    fn grammar_strategy() -> impl Strategy<Value = Slg> {
        proptest::collection::vec(proptest::collection::vec((any::<bool>(), -5i64..=5, any::<u16>()), 1..5), 1..8)
            .prop_map(|layout| {
                let mut rules = Vec::new();
                for (i, rhs) in layout.iter().enumerate() {
                    let syms =
                        rhs.iter().map(|&(nt, c, r)| if nt && i > 0 { N(r as usize % i) } else { T(c) }).collect();
                    rules.push((i, syms));
                }
                let start = layout.len() - 1;
                Slg::from_rules(rules, start).unwrap()
            })
    }

    #[test]
    fn singletons() {
        let g = Slg::from_rules(vec![(0, vec![N(1), T(-2), N(1)]), (1, vec![T(3), T(-1)])], 0).unwrap();
        let s = RuleStats::new(&g).unwrap();
        assert_eq!(s.prefix_stats_query(0, 1).unwrap(), SpanStats { sum: 3, min: 3, argmin: 1 });
        assert_eq!(s.suffix_stats_query(0, 1).unwrap(), SpanStats { sum: -1, min: -1, argmin: 1 });
        for b in 0..5 {
            assert_eq!(s.interval_argmin_prefix_sum(b, b + 1), Ok(b + 1));
        }
        assert!(s.interval_argmin_prefix_sum(2, 2).is_err());
        assert!(s.prefix_stats_query(0, 6).is_err());
    }

    #[test]
    fn ties_pick_first() {
        // Prefix sums 0,0,0,... everywhere: the answer is always the first slot.
        let g = Slg::from_rules(vec![(0, vec![N(1), N(1), N(1)]), (1, vec![T(0), T(0)])], 0).unwrap();
        let s = RuleStats::new(&g).unwrap();
        for p in 1..=6 {
            assert_eq!(s.suffix_stats_query(0, p).unwrap().argmin, 1);
            assert_eq!(s.prefix_stats_query(0, p).unwrap().argmin, 1);
        }
        assert_eq!(s.interval_argmin_prefix_sum(1, 6), Ok(2));
    }

    #[test]
    fn empty_expansion_rejected() {
        let g = Slg::from_rules(vec![(0, vec![N(1), T(4)]), (1, vec![])], 0).unwrap();
        assert_eq!(RuleStats::new(&g).err(), Some(Error::EmptyExpansion(1)));
    }

    proptest! {
        #[test]
        fn random_grammars(g in grammar_strategy()) {
            check_all(&g)?;
        }

        #[test]
        fn widened_pairing(values in proptest::collection::vec(-3i64..4, 1..60), k in 1u32..4) {
            let g = widen(&build_pairing_slp(&values).unwrap(), k).unwrap();
            check_all(&g)?;
        }
    }
}
