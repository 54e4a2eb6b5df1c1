//! Field literals: `sum := term (('+'|'-') term)*`,
//! `term := rational ['r'k] | 'r'k`, `rational := int['/'posint]`,
//! with k one of 2, 3, 5, 6, 10, 15, 30. A leading sign is allowed.
//!
//! Complex literals additionally allow an `i` right after the rational part
//! (or alone): `1/2ir3`, `-i`, `2+ir2`.

use alloc::string::String;
use core::fmt::Write;

use num_bigint::BigInt;

use super::{QuadComplex, QuadField, Rational, Ring, QUAD_RADICANDS};
use crate::{Error, Result};

const DISPLAY_ORDER: [u32; 8] = [1, 2, 3, 5, 6, 10, 15, 30];

/// Renders `x` in the literal grammar, e.g. `-1+2r2` or `3/2r15`.
pub fn format_quad(x: &QuadField) -> String {
    let mut out = String::new();
    write_terms(&mut out, x, false);
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders a complex value, real terms first, e.g. `1/2-1/2ir3`.
pub fn format_complex(x: &QuadComplex) -> String {
    let mut out = String::new();
    write_terms(&mut out, &x.re, false);
    write_terms(&mut out, &x.im, true);
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn write_terms(out: &mut String, x: &QuadField, imaginary: bool) {
    let unit = if imaginary { "i" } else { "" };
    for r in DISPLAY_ORDER {
        let c = x.coeff(r);
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let coefficient = if mag == Rational::one() && (r != 1 || imaginary) { String::new() } else { alloc::format!("{mag}") };
        if r == 1 {
            let _ = write!(out, "{coefficient}{unit}");
        } else {
            let _ = write!(out, "{coefficient}{unit}r{r}");
        }
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| core::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

/// Parses a field literal.
pub fn parse_quad(text: &str) -> Result<QuadField> {
    let value = parse_complex(text)?;
    if !value.im.is_zero() {
        return Err(Error::Parse(alloc::format!("field literal `{text}`: imaginary term in a real literal")));
    }
    Ok(value.re)
}

/// Parses a complex field literal.
pub fn parse_complex(text: &str) -> Result<QuadComplex> {
    let err = |why: &str| Error::Parse(alloc::format!("field literal `{text}`: {why}"));
    let mut cur = Cursor { s: text.as_bytes(), pos: 0 };
    let mut acc = QuadField::zero();
    let mut acc_im = QuadField::zero();
    let mut first = true;
    while cur.pos < cur.s.len() || first {
        let negative = match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                false
            }
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            _ if first => false,
            _ => return Err(err("expected `+` or `-` between terms")),
        };
        first = false;
        let coefficient = match cur.digits() {
            Some(num) => {
                let num: BigInt = num.parse().map_err(|_| err("bad integer"))?;
                if cur.peek() == Some(b'/') {
                    cur.pos += 1;
                    let den: BigInt = cur
                        .digits()
                        .ok_or_else(|| err("missing denominator"))?
                        .parse()
                        .map_err(|_| err("bad denominator"))?;
                    if den == BigInt::from(0) {
                        return Err(err("zero denominator"));
                    }
                    Rational::from_ratio(num, den)?
                } else {
                    Rational::from_bigint(num)
                }
            }
            None => {
                if !matches!(cur.peek(), Some(b'r' | b'i')) {
                    return Err(err("expected a number, `i` or `r`"));
                }
                Rational::one()
            }
        };
        let imaginary = cur.peek() == Some(b'i');
        if imaginary {
            cur.pos += 1;
        }
        let radicand = if cur.peek() == Some(b'r') {
            cur.pos += 1;
            let k: u32 = cur
                .digits()
                .ok_or_else(|| err("missing radicand after `r`"))?
                .parse()
                .map_err(|_| err("bad radicand"))?;
            if k == 1 || !QUAD_RADICANDS.contains(&k) {
                return Err(err("radicand must be one of 2,3,5,6,10,15,30"));
            }
            k
        } else {
            1
        };
        let coefficient = if negative { -coefficient } else { coefficient };
        let term = QuadField::from_term(coefficient, radicand)?;
        if imaginary {
            acc_im = acc_im + term;
        } else {
            acc = acc + term;
        }
    }
    Ok(QuadComplex::new(acc, acc_im))
}
