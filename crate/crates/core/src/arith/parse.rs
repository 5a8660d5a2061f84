//! Text grammar for `Real`.
//!
//! ```text
//! real     := value [ " as " value ]
//! value    := named | decimal | ratio | surd
//! named    := ("pi" | "e" | "golden" | "sqrt2") [ ("+" | "-") int ]
//! decimal  := ["-"] digits "." digits [ "@" int ]  |  ["-"] digits "@" int
//! ratio    := ["-"] int [ "/" int ]
//! surd     := "(" sum ")" [ "/" int ]  |  sum
//! sum      := ["-"] term { ("+" | "-") term }
//! term     := int | [ int ["*"] ] "sqrt(" int ")"
//! ```
//!
//! The Unicode minus sign is accepted anywhere `-` is.

use super::real::{DecimalLiteral, NamedConstant, QuadraticSurd, Real, SurdOrRational};
use crate::error::{Error, Result};
use rug::{Integer, Rational};
use std::str::FromStr;

const MAX_INPUT: usize = 4096;
const MAX_RADICAND_BITS: u32 = 62;

impl FromStr for Real {
    type Err = Error;

    fn from_str(s: &str) -> Result<Real> {
        parse_real(s)
    }
}

pub fn parse_real(input: &str) -> Result<Real> {
    if input.len() > MAX_INPUT {
        let head: String = input.chars().take(64).collect();
        return Err(Error::parse(&head, "input too long"));
    }
    let norm = input.replace('−', "-");
    if let Some((lhs, rhs)) = norm.split_once(" as ") {
        let a = parse_value(lhs.trim(), input)?;
        let b = parse_value(rhs.trim(), input)?;
        if !same_value(&a, &b) {
            return Err(Error::parse(input, "the two sides of `as` denote different numbers"));
        }
        return Ok(b);
    }
    parse_value(norm.trim(), input)
}

fn same_value(a: &Real, b: &Real) -> bool {
    match (a.as_exact(), b.as_exact()) {
        (Some(x), Some(y)) => x == y,
        _ => a == b,
    }
}

fn parse_value(s: &str, original: &str) -> Result<Real> {
    if s.is_empty() {
        return Err(Error::parse(original, "empty input"));
    }
    if let Some(r) = parse_named(s, original)? {
        return Ok(r);
    }
    if s.contains('.') || s.contains('@') {
        return parse_decimal_literal(s, original);
    }
    if s.contains("sqrt") || s.contains('(') {
        return parse_surd(s, original);
    }
    parse_ratio(s, original)
}

fn parse_int(s: &str, original: &str) -> Result<Integer> {
    let t = s.trim();
    let digits = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(original, format!("expected an integer, found {t:?}")));
    }
    t.parse::<Integer>().map_err(|_| Error::parse(original, format!("bad integer {t:?}")))
}

fn parse_named(s: &str, original: &str) -> Result<Option<Real>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    for (name, constant) in [
        ("golden", NamedConstant::Golden),
        ("sqrt2", NamedConstant::Sqrt2),
        ("pi", NamedConstant::Pi),
        ("e", NamedConstant::E),
    ] {
        let Some(rest) = compact.strip_prefix(name) else { continue };
        if rest.is_empty() {
            return Ok(Some(Real::named(constant)));
        }
        if rest.starts_with('+') || rest.starts_with('-') {
            let k = parse_int(rest, original)?;
            return Ok(Some(Real::Named { constant, offset: k }));
        }
        if name == "e" || name == "pi" {
            continue;
        }
        return Err(Error::parse(original, format!("unexpected text after {name:?}")));
    }
    Ok(None)
}

fn parse_decimal_literal(s: &str, original: &str) -> Result<Real> {
    let (digits, places) = match s.split_once('@') {
        Some((d, p)) => {
            let p = parse_int(p, original)?;
            let p = p.to_u32().filter(|&p| p <= 100_000).ok_or_else(|| Error::parse(original, "declared places out of range"))?;
            (d.trim(), Some(p))
        }
        None => (s, None),
    };
    let lit = DecimalLiteral::new(digits, places).map_err(|_| Error::parse(original, "not a decimal number"))?;
    Ok(Real::Decimal(lit))
}

fn parse_ratio(s: &str, original: &str) -> Result<Real> {
    match s.split_once('/') {
        None => Ok(Real::Rational(Rational::from(parse_int(s, original)?))),
        Some((n, d)) => {
            let n = parse_int(n, original)?;
            let d = parse_int(d, original)?;
            if d == 0 {
                return Err(Error::parse(original, "zero denominator"));
            }
            Ok(Real::Rational(Rational::from((n, d))))
        }
    }
}

fn parse_surd(s: &str, original: &str) -> Result<Real> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (numer, denom) = if let Some(rest) = compact.strip_prefix('(') {
        let close = matching_paren(rest).ok_or_else(|| Error::parse(original, "unbalanced parenthesis"))?;
        let inner = &rest[..close];
        let tail = &rest[close + 1..];
        let denom = if tail.is_empty() {
            Integer::from(1)
        } else {
            let d = tail.strip_prefix('/').ok_or_else(|| Error::parse(original, "expected `/` after `)`"))?;
            parse_int(d, original)?
        };
        (inner.to_string(), denom)
    } else {
        (compact.clone(), Integer::from(1))
    };
    if denom == 0 {
        return Err(Error::parse(original, "zero denominator"));
    }
    let (a, b, d) = parse_sum(&numer, original)?;
    let v = QuadraticSurd::new(a, b, d, denom).map_err(|e| Error::parse(original, e.to_string()))?;
    Ok(match v {
        SurdOrRational::Rational(q) => Real::Rational(q),
        SurdOrRational::Surd(s) => Real::Surd(s),
    })
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 1usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Parses `sum` into `(a, b, d)` meaning `a + b sqrt d`.
fn parse_sum(s: &str, original: &str) -> Result<(Integer, Integer, Integer)> {
    let mut a = Integer::new();
    let mut b = Integer::new();
    let mut d: Option<Integer> = None;
    let bytes = s.as_bytes();
    let mut i = 0usize;
    let mut first = true;
    while i < bytes.len() {
        let mut sign = 1i32;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if !first {
            return Err(Error::parse(original, "expected `+` or `-` between terms"));
        }
        first = false;
        let start = i;
        let mut depth = 0i32;
        while i < bytes.len() {
            match bytes[i] {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 => break,
                _ => {}
            }
            i += 1;
        }
        let term = &s[start..i];
        if term.is_empty() {
            return Err(Error::parse(original, "empty term"));
        }
        if let Some(pos) = term.find("sqrt(") {
            let coef_txt = term[..pos].trim_end_matches('*');
            let coef = if coef_txt.is_empty() { Integer::from(1) } else { parse_int(coef_txt, original)? };
            let arg = term[pos + 5..]
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(original, "expected `)` after radicand"))?;
            let rad = parse_int(arg, original)?;
            if rad < 0 {
                return Err(Error::parse(original, "negative radicand"));
            }
            if rad.significant_bits() > MAX_RADICAND_BITS {
                return Err(Error::parse(original, "radicand too large"));
            }
            match &d {
                Some(prev) if *prev != rad => {
                    return Err(Error::parse(original, "only one distinct radicand is supported"))
                }
                _ => d = Some(rad),
            }
            b += coef * sign;
        } else {
            a += parse_int(term, original)? * sign;
        }
    }
    if first {
        return Err(Error::parse(original, "empty expression"));
    }
    Ok((a, b, d.unwrap_or_default()))
}
