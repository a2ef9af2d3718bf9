//! Straight-line grammars over integer terminals.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use rustc_hash::FxBuildHasher;

use crate::{Error, Result};

mod lcp;
mod stats;

pub use lcp::{build_diff_lcp_slg, diff_lcp, widening_factor, LcpRmq};
pub use stats::{RuleStats, SpanStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Terminal(i64),
    Nonterminal(usize),
}

/// A straight-line grammar: one rule per nonterminal, no cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slg {
    rules: Vec<Option<Vec<Symbol>>>,
    start: usize,
    order: Vec<usize>,
    exp_len: Vec<u64>,
    height: Vec<u32>,
}

impl Slg {
    /// Validates a rule table and caches expansion lengths and heights.
    pub fn from_rules(rules: Vec<(usize, Vec<Symbol>)>, start: usize) -> Result<Self> {
        let top = rules.iter().map(|(x, _)| *x).max().unwrap_or(0).max(start);
        let mut table: Vec<Option<Vec<Symbol>>> = vec![None; top + 1];
        for (x, rhs) in rules {
            if table[x].is_some() {
                return Err(Error::DuplicateRule(x));
            }
            table[x] = Some(rhs);
        }
        if table[start].is_none() {
            return Err(Error::UndefinedNonterminal(start));
        }
        for rhs in table.iter().flatten() {
            for s in rhs {
                if let Symbol::Nonterminal(y) = *s {
                    if table.get(y).is_none_or(|r| r.is_none()) {
                        return Err(Error::UndefinedNonterminal(y));
                    }
                }
            }
        }
        let order = topological_order(&table)?;
        let mut exp_len = vec![0u64; table.len()];
        let mut height = vec![0u32; table.len()];
        for &x in &order {
            let rhs = table[x].as_ref().unwrap();
            let mut len = 0u64;
            let mut h = 0u32;
            for s in rhs {
                let (l, sh) = match *s {
                    Symbol::Terminal(_) => (1, 0),
                    Symbol::Nonterminal(y) => (exp_len[y], height[y]),
                };
                len = len.checked_add(l).ok_or(Error::Overflow)?;
                h = h.max(sh + 1);
            }
            exp_len[x] = len;
            height[x] = h;
        }
        Ok(Self { rules: table, start, order, exp_len, height })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn rule(&self, x: usize) -> Option<&[Symbol]> {
        self.rules.get(x).and_then(|r| r.as_deref())
    }

    /// Defined nonterminals, children before parents.
    pub fn topological(&self) -> &[usize] {
        &self.order
    }

    pub fn id_bound(&self) -> usize {
        self.rules.len()
    }

    pub fn rule_count(&self) -> usize {
        self.order.len()
    }

    pub fn exp_len(&self, x: usize) -> u64 {
        self.exp_len[x]
    }

    pub fn height_of(&self, x: usize) -> u32 {
        self.height[x]
    }

    /// Parse-tree height of the start symbol.
    pub fn height(&self) -> u32 {
        self.height[self.start]
    }

    /// `Σ_N max(|rhs(N)|, 1)`.
    pub fn size(&self) -> usize {
        self.rules.iter().flatten().map(|r| r.len().max(1)).sum()
    }

    pub fn max_rhs(&self) -> usize {
        self.rules.iter().flatten().map(Vec::len).max().unwrap_or(0)
    }

    /// Expansion of nonterminal `x`.
    pub fn expand(&self, x: usize) -> Result<Vec<i64>> {
        if self.rule(x).is_none() {
            return Err(Error::UndefinedNonterminal(x));
        }
        let mut out = Vec::with_capacity(self.exp_len[x] as usize);
        let mut stack: Vec<(usize, usize)> = vec![(x, 0)];
        while let Some((y, i)) = stack.pop() {
            let rhs = self.rules[y].as_ref().unwrap();
            if i == rhs.len() {
                continue;
            }
            stack.push((y, i + 1));
            match rhs[i] {
                Symbol::Terminal(c) => out.push(c),
                Symbol::Nonterminal(z) => stack.push((z, 0)),
            }
        }
        Ok(out)
    }
}

fn topological_order(table: &[Option<Vec<Symbol>>]) -> Result<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let mut mark = vec![Mark::New; table.len()];
    let mut order = Vec::new();
    for root in 0..table.len() {
        if table[root].is_none() || mark[root] != Mark::New {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Open;
        while let Some(&mut (x, ref mut i)) = stack.last_mut() {
            let rhs = table[x].as_ref().unwrap();
            if *i == rhs.len() {
                mark[x] = Mark::Done;
                order.push(x);
                stack.pop();
                continue;
            }
            let s = rhs[*i];
            *i += 1;
            if let Symbol::Nonterminal(y) = s {
                match mark[y] {
                    Mark::Open => return Err(Error::CyclicNonterminal(y)),
                    Mark::New => {
                        mark[y] = Mark::Open;
                        stack.push((y, 0));
                    }
                    Mark::Done => {}
                }
            }
        }
    }
    Ok(order)
}

/// Expands `x` and returns its sequence.
pub fn expand(slg: &Slg, x: usize) -> Result<Vec<i64>> {
    slg.expand(x)
}

/// `(size, height)` of a validated grammar.
pub fn validate_slg(slg: &Slg) -> (usize, u32) {
    (slg.size(), slg.height())
}

/// Binary SLP for `values` by repeated pairing of adjacent symbols. Each
/// round replaces positions `(1,2), (3,4), …` with one nonterminal per
/// distinct pair; an odd trailing symbol is carried over.
pub fn build_pairing_slp(values: &[i64]) -> Result<Slg> {
    if values.is_empty() {
        return Err(Error::EmptyText);
    }
    let mut rules: Vec<(usize, Vec<Symbol>)> = Vec::new();
    let mut terminal_id: HashMap<i64, usize, FxBuildHasher> = HashMap::with_hasher(FxBuildHasher);
    let mut seq: Vec<usize> = values
        .iter()
        .map(|&c| {
            *terminal_id.entry(c).or_insert_with(|| {
                rules.push((rules.len(), vec![Symbol::Terminal(c)]));
                rules.len() - 1
            })
        })
        .collect();
    let mut pair_id: HashMap<(usize, usize), usize, FxBuildHasher> = HashMap::with_hasher(FxBuildHasher);
    while seq.len() > 1 {
        let mut next = Vec::with_capacity(seq.len().div_ceil(2));
        for chunk in seq.chunks(2) {
            if let [a, b] = *chunk {
                let id = *pair_id.entry((a, b)).or_insert_with(|| {
                    rules.push((rules.len(), vec![Symbol::Nonterminal(a), Symbol::Nonterminal(b)]));
                    rules.len() - 1
                });
                next.push(id);
            } else {
                next.push(chunk[0]);
            }
        }
        seq = next;
    }
    Slg::from_rules(rules, seq[0])
}

/// Replaces every right-hand side by its `k`-fold expansion (stopping at
/// terminals) and drops nonterminals no longer reachable from the start.
pub fn widen(slg: &Slg, k: u32) -> Result<Slg> {
    let k = k.max(1);
    let mut rules = Vec::new();
    let mut seen = vec![false; slg.id_bound()];
    let mut queue = VecDeque::from([slg.start()]);
    seen[slg.start()] = true;
    while let Some(x) = queue.pop_front() {
        let mut rhs: Vec<Symbol> = slg.rule(x).unwrap().to_vec();
        for _ in 0..k {
            if rhs.iter().all(|s| matches!(s, Symbol::Terminal(_))) {
                break;
            }
            rhs = rhs
                .into_iter()
                .flat_map(|s| match s {
                    Symbol::Terminal(_) => vec![s],
                    Symbol::Nonterminal(y) => slg.rule(y).unwrap().to_vec(),
                })
                .collect();
        }
        for s in &rhs {
            if let Symbol::Nonterminal(y) = *s {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        rules.push((x, rhs));
    }
    Slg::from_rules(rules, slg.start())
}
