//! Partial-quotient lists such as `[1, 1, 1]` or `3 6 3 6`.

use crate::error::{Error, Result};
use rug::Integer;

/// Longest accepted list.
pub const MAX_QUOTIENTS: usize = 100_000;
/// Longest accepted decimal quotient.
const MAX_DIGITS: usize = 10_000;

/// Positive integers separated by commas, semicolons or whitespace,
/// optionally enclosed in one pair of square brackets.
pub fn parse_quotients(input: &str) -> Result<Vec<Integer>> {
    let t = input.trim();
    let inner = match (t.strip_prefix('['), t.ends_with(']')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => t,
        _ => return Err(Error::parse(input, "unbalanced brackets")),
    };
    let mut out = Vec::new();
    for tok in inner.split(|c: char| c == ',' || c == ';' || c.is_whitespace()).filter(|s| !s.is_empty()) {
        if out.len() == MAX_QUOTIENTS {
            return Err(Error::parse(input, format!("more than {MAX_QUOTIENTS} quotients")));
        }
        if tok.len() > MAX_DIGITS || !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(input, format!("{tok:?} is not a positive integer")));
        }
        let v: Integer = tok.parse().map_err(|_| Error::parse(input, format!("bad integer {tok:?}")))?;
        if v == 0 {
            return Err(Error::parse(input, "partial quotients must be positive"));
        }
        out.push(v);
    }
    if out.is_empty() {
        return Err(Error::parse(input, "empty quotient list"));
    }
    Ok(out)
}
