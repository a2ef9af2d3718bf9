use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    EmptyText,
    SymbolOutOfRange { position: usize, symbol: u32, sigma: u32 },
    IndexOutOfRange { index: usize, len: usize },
    EmptyRange { b: usize, e: usize },
    AlphabetOverflow,
    InvalidPhrase { phrase: usize, reason: &'static str },
    LzBound { z: usize, k: usize },
    RaggedMorphism { symbol: u32 },
    MissingMorphism { symbol: u32 },
    KeyOutOfUniverse { key: u64, universe: u64 },
    KeysNotIncreasing { position: usize },
    UndefinedNonterminal(usize),
    DuplicateRule(usize),
    CyclicNonterminal(usize),
    EmptyExpansion(usize),
    NotPermutation,
    InvalidSet(&'static str),
    OutOfContract(&'static str),
    InvalidEpsilon,
    Overflow,
    InvariantViolated(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyText => write!(f, "text is empty"),
            Error::SymbolOutOfRange { position, symbol, sigma } => {
                write!(f, "symbol {symbol} at position {position} is outside [0..{sigma})")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "position {index} is outside [1..{len}]")
            }
            Error::EmptyRange { b, e } => write!(f, "range ({b}..{e}] is empty"),
            Error::AlphabetOverflow => write!(f, "alphabet too large to shift by one"),
            Error::InvalidPhrase { phrase, reason } => write!(f, "phrase {phrase}: {reason}"),
            Error::LzBound { z, k } => {
                write!(f, "greedy factorization has {z} phrases, more than valid factorization with {k}")
            }
            Error::RaggedMorphism { symbol } => {
                write!(f, "image of symbol {symbol} has a different block length")
            }
            Error::MissingMorphism { symbol } => write!(f, "no image given for symbol {symbol}"),
            Error::KeyOutOfUniverse { key, universe } => {
                write!(f, "key {key} is outside [0..{universe}]")
            }
            Error::KeysNotIncreasing { position } => {
                write!(f, "keys are not strictly increasing at position {position}")
            }
            Error::UndefinedNonterminal(x) => write!(f, "nonterminal N{x} has no rule"),
            Error::DuplicateRule(x) => write!(f, "nonterminal N{x} is defined more than once"),
            Error::CyclicNonterminal(x) => write!(f, "nonterminal N{x} lies on a cycle"),
            Error::EmptyExpansion(x) => write!(f, "nonterminal N{x} expands to the empty string"),
            Error::NotPermutation => write!(f, "input is not a permutation of 1..n"),
            Error::InvalidSet(why) => write!(f, "invalid key set: {why}"),
            Error::OutOfContract(why) => write!(f, "query out of contract: {why}"),
            Error::InvalidEpsilon => write!(f, "epsilon must lie in (0, 1)"),
            Error::Overflow => write!(f, "integer overflow"),
            Error::InvariantViolated(what) => write!(f, "invariant violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}
