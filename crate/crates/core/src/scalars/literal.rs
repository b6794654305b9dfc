//! Scalar literal grammar:
//!
//! ```text
//! literal  := ws? sign? term (ws? ("+" | "-") ws? term)* ws?
//! term     := rational | rational ws? "*" ws? "z^" integer | "z^" integer
//! rational := digits | digits "/" digits        (denominator > 0)
//! integer  := "-"? digits
//! ```
//!
//! `z` denotes `ζ_N` of the surrounding field; exponents are reduced mod `N`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{CyclotomicField, Rational, Scalar};

const MAX_DIGITS: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar literal at byte {position}: {message}")]
pub struct LiteralError {
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, LiteralError> {
        Err(LiteralError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, LiteralError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected digits");
        }
        if self.pos - start > MAX_DIGITS {
            self.pos = start;
            return self.err("number too long");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits parse"))
    }

    fn rational(&mut self) -> Result<Rational, LiteralError> {
        let num = self.digits()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                self.pos = at;
                return self.err("zero denominator");
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn exponent(&mut self, order: u32) -> Result<usize, LiteralError> {
        if !(self.eat(b'z') && self.eat(b'^')) {
            return self.err("expected `z^`");
        }
        let negative = self.eat(b'-');
        let mut e = self.digits()? % BigInt::from(order);
        if negative {
            e = -e;
        }
        let n = BigInt::from(order);
        let e = ((e % &n) + &n) % &n;
        Ok(e.try_into().expect("exponent reduced below root order"))
    }
}

pub(super) fn parse(text: &str, field: &'static CyclotomicField) -> Result<Scalar, LiteralError> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let order = field.order();
    let mut poly = vec![Rational::zero(); order as usize];
    cur.skip_ws();
    let mut negative = cur.eat(b'-') || {
        cur.eat(b'+');
        false
    };
    loop {
        cur.skip_ws();
        let (coeff, power) = match cur.peek() {
            Some(b'z') => (Rational::one(), cur.exponent(order)?),
            Some(b) if b.is_ascii_digit() => {
                let r = cur.rational()?;
                cur.skip_ws();
                if cur.eat(b'*') {
                    cur.skip_ws();
                    (r, cur.exponent(order)?)
                } else {
                    (r, 0)
                }
            }
            _ => return cur.err("expected a term"),
        };
        if negative {
            poly[power] -= coeff;
        } else {
            poly[power] += coeff;
        }
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return cur.err("expected `+`, `-` or end of literal"),
        }
        cur.pos += 1;
    }
    Ok(Scalar::from_coeffs(field, poly))
}

pub(super) fn format(value: &Scalar) -> String {
    let mut out = String::new();
    for (i, c) in value.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = match i {
            0 => c.to_string(),
            _ if c.is_one() => format!("z^{i}"),
            _ if (-c).is_one() => format!("-z^{i}"),
            _ => format!("{c}*z^{i}"),
        };
        if !out.is_empty() && !c.is_negative() {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
