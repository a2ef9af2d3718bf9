//! Reading texts and query lists.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use strq::Text;

use crate::args::InputFormat;

/// Parses a text: ASCII bytes map to their code points, integers to themselves.
pub fn parse_text(raw: &[u8], format: InputFormat) -> Result<Text> {
    let symbols: Vec<u32> = match format {
        InputFormat::Ascii => {
            let mut s = raw;
            if let Some(rest) = s.strip_suffix(b"\n") {
                s = rest.strip_suffix(b"\r").unwrap_or(rest);
            }
            s.iter().map(|&b| u32::from(b)).collect()
        }
        InputFormat::Ints => {
            let s = std::str::from_utf8(raw).context("integer input is not UTF-8")?;
            s.split_whitespace()
                .enumerate()
                .map(|(i, tok)| tok.parse::<u32>().with_context(|| format!("token {}: {tok:?} is not a symbol", i + 1)))
                .collect::<Result<_>>()?
        }
    };
    if symbols.is_empty() {
        bail!("the text is empty");
    }
    Ok(match format {
        InputFormat::Ascii => Text::new(symbols, 256)?,
        InputFormat::Ints => Text::from_symbols(symbols),
    })
}

pub fn read_text(path: &Path, format: InputFormat) -> Result<Text> {
    let raw = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_text(&raw, format).with_context(|| format!("in {}", path.display()))
}

/// Whitespace-separated non-negative integers.
pub fn parse_numbers(s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .enumerate()
        .map(|(i, tok)| tok.parse::<usize>().with_context(|| format!("token {}: {tok:?} is not an index", i + 1)))
        .collect()
}

pub fn read_numbers(path: &Path) -> Result<Vec<usize>> {
    let s = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_numbers(&s).with_context(|| format!("in {}", path.display()))
}

pub fn read_pairs(path: &Path) -> Result<Vec<(usize, usize)>> {
    let v = read_numbers(path)?;
    if v.len() % 2 != 0 {
        bail!("{}: expected pairs, found an odd number of values", path.display());
    }
    Ok(v.chunks(2).map(|c| (c[0], c[1])).collect())
}
