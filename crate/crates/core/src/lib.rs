//! Compressed string-query toolkit.
//!
//! Brute-force construction of the classical suffix-based query arrays,
//! repetitiveness measures (`z`, `r`, `δ`), an `O(r)`-space inverse-LF index,
//! a grammar-based LCP range-minimum / LCE structure, and the reduction
//! gadgets that turn predecessor and range queries into single text-index
//! queries.
//!
//! All public positions are 1-based. The crate is `no_std` and needs only
//! `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod array;
mod error;

pub mod gadgets;
pub mod grammar;
pub mod ilf;
pub mod measures;
pub mod predecessor;
pub mod range;
pub mod rmq;
pub mod text;

pub use array::Array1;
pub use error::{Error, Result};
pub use text::{build_bundle, pattern_range, PatternRange, SuffixArrayBundle, Text};
