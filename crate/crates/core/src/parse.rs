//! Text grammar for polynomials and ideal files.
//!
//! A polynomial is a sum of terms joined by `+`/`-`; a term is an optional
//! coefficient (integer or `a/b`), an optional `*`, and a product of
//! `var[^exp]` factors joined by `*`. Whitespace is insignificant. An ideal
//! file starts with `ring: <names> over Q|Fp:<p>` and lists one polynomial
//! per line; lines starting with `#` are comments.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring};
use crate::scalar::{Field, DEFAULT_PRIME};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Cursor {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            src,
            line,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        let byte = self.chars.get(self.pos).map_or(self.src.len(), |&(b, _)| b);
        self.src[..byte].chars().count() + 1
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse().ok()
    }

    fn identifier(&mut self) -> Option<String> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }
}

fn parse_term(cur: &mut Cursor<'_>, ring: &Arc<Ring>) -> Result<(BigRational, Monomial)> {
    let mut coeff = BigRational::one();
    let mut have_coeff = false;
    if let Some(num) = cur.digits() {
        have_coeff = true;
        coeff = BigRational::from_integer(num);
        if cur.eat('/') {
            let den = cur.digits().ok_or_else(|| cur.error("expected denominator"))?;
            if den.is_zero() {
                return Err(cur.error("zero denominator"));
            }
            coeff /= BigRational::from_integer(den);
        }
    }
    let mut mono = Monomial::ONE;
    let mut need_factor = false;
    if have_coeff {
        if cur.eat('*') {
            need_factor = true;
        } else if !matches!(cur.peek(), Some(c) if c.is_ascii_alphabetic() || c == '_') {
            return Ok((coeff, mono));
        }
    } else {
        need_factor = true;
    }
    loop {
        let name = match cur.identifier() {
            Some(n) => n,
            None if need_factor => return Err(cur.error("expected a variable")),
            None => break,
        };
        let idx = ring
            .var_index(&name)
            .ok_or_else(|| cur.error(format!("unknown variable `{name}`")))?;
        let mut e = 1u32;
        if cur.eat('^') {
            let v = cur.digits().ok_or_else(|| cur.error("expected exponent"))?;
            e = u32::try_from(v)
                .ok()
                .filter(|&e| e <= u16::MAX as u32)
                .ok_or_else(|| cur.error("exponent too large"))?;
        }
        mono.set_exp(idx, mono.exp(idx) + e);
        if !cur.eat('*') {
            break;
        }
        need_factor = true;
    }
    Ok((coeff, mono))
}

fn parse_line(ring: &Arc<Ring>, src: &str, line: usize) -> Result<Polynomial> {
    let mut cur = Cursor::new(src, line);
    if cur.peek().is_none() {
        return Err(cur.error("empty polynomial"));
    }
    let field = ring.field();
    let mut terms = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let negative = cur.eat('-');
        if !negative && !cur.eat('+') && !first {
            return Err(cur.error("expected `+` or `-`"));
        }
        first = false;
        let (mut c, m) = parse_term(&mut cur, ring)?;
        if negative {
            c = -c;
        }
        let c = field.from_ratio(&c).map_err(|_| cur.error("denominator vanishes modulo p"))?;
        terms.push((m, c));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Parses a single polynomial over `ring`.
pub fn parse_polynomial(ring: &Arc<Ring>, src: &str) -> Result<Polynomial> {
    parse_line(ring, src, 1)
}

/// Parses `Q`, `Fp` (default prime) or `Fp:<p>`.
pub fn parse_field(src: &str) -> Result<Field> {
    let s = src.trim();
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::Rational);
    }
    let lower = s.to_ascii_lowercase();
    if lower == "fp" {
        return Field::prime(DEFAULT_PRIME);
    }
    if let Some(p) = lower.strip_prefix("fp:") {
        let p: u32 = p
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad modulus `{p}`")))?;
        return Field::prime(p);
    }
    Err(Error::invalid(format!("unknown field `{s}`")))
}

/// An ideal file: its ring and the listed generators (zero lines allowed).
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ring: Arc<Ring>,
    pub polynomials: Vec<Polynomial>,
}

pub fn parse_ideal_file(src: &str) -> Result<IdealFile> {
    let mut ring: Option<Arc<Ring>> = None;
    let mut polynomials = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match &ring {
            None => ring = Some(parse_header(trimmed, line)?),
            Some(r) => polynomials.push(parse_line(r, raw, line)?),
        }
    }
    let ring = ring.ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing `ring:` header".to_string(),
    })?;
    Ok(IdealFile { ring, polynomials })
}

fn parse_header(line_src: &str, line: usize) -> Result<Arc<Ring>> {
    let err = |column: usize, message: &str| Error::Parse {
        line,
        column,
        message: message.to_string(),
    };
    let rest = line_src
        .strip_prefix("ring:")
        .ok_or_else(|| err(1, "expected `ring: <names> over <field>`"))?;
    let (names, field) = match rest.rfind(" over ") {
        Some(idx) => (&rest[..idx], &rest[idx + 6..]),
        None => return Err(err(line_src.len(), "expected `over Q` or `over Fp:<p>`")),
    };
    let names: Vec<&str> = names
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    let field = parse_field(field).map_err(|e| err(line_src.len(), &e.to_string()))?;
    Ring::new(&names, field, MonomialOrder::GRevLex).map_err(|e| err(6, &e.to_string()))
}

/// Formats a ring header line for an ideal file.
pub fn format_header(ring: &Ring) -> String {
    format!("ring: {} over {}", ring.names().join(","), ring.field())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.field();
        let names = self.ring().names();
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { field.neg(c) } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = field.is_one(&abs);
            if m.is_one() {
                write!(f, "{abs}")?;
                continue;
            }
            if !unit {
                write!(f, "{abs}*")?;
            }
            let mut first = true;
            for (i, name) in names.iter().enumerate() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}
