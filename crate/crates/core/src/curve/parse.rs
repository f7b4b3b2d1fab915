//! Text syntax for polynomials.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' exp)?
//! exp    := nat | '(' nat ')'
//! base   := rational | 'x' | 'y' | '(' expr ')'
//! rational := nat ('/' nat)?
//! ```
//!
//! Whitespace is ignored between tokens. Juxtaposition such as `2x` is
//! rejected; write `2*x`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::BiPoly;
use crate::arith::Rat;
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 256;

pub fn parse_poly(text: &str) -> Result<BiPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.unexpected());
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Syntax { pos, msg: msg.into() }
    }

    fn unexpected(&mut self) -> Error {
        match self.peek() {
            None => self.syntax(self.pos, "unexpected end of input"),
            Some(c) if c.is_ascii_alphabetic() || c.is_ascii_digit() || c == b'(' => {
                self.syntax(self.pos, "missing operator (implicit multiplication is not allowed)")
            }
            Some(c) => self.syntax(self.pos, format!("unexpected character `{}`", c as char)),
        }
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                neg = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BiPoly> {
        let base = self.base()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.exponent()?;
        Ok(base.pow(e))
    }

    fn exponent(&mut self) -> Result<u32> {
        let start = self.peek().map(|_| self.pos).unwrap_or(self.pos);
        let value = match self.peek() {
            Some(b'-') => {
                return Err(Error::BadExponent { pos: start, msg: "negative exponent".into() })
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                if !inner.is_constant() {
                    return Err(Error::BadExponent {
                        pos: start,
                        msg: "exponent must be a constant".into(),
                    });
                }
                inner.coeff(0, 0)
            }
            Some(c) if c.is_ascii_digit() => self.rational()?,
            _ => return Err(self.unexpected()),
        };
        if value.is_negative() {
            return Err(Error::BadExponent { pos: start, msg: "negative exponent".into() });
        }
        if !value.is_integer() {
            return Err(Error::BadExponent { pos: start, msg: "fractional exponent".into() });
        }
        match value.to_integer().to_u32() {
            Some(e) if e <= MAX_EXPONENT => Ok(e),
            _ => Err(Error::BadExponent {
                pos: start,
                msg: format!("exponent larger than {MAX_EXPONENT}"),
            }),
        }
    }

    fn base(&mut self) -> Result<BiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(match self.peek() {
                        None => self.syntax(self.pos, "missing `)`"),
                        _ => self.unexpected(),
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(BiPoly::constant(self.rational()?)),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match name.as_str() {
                    "x" => Ok(BiPoly::x()),
                    "y" => Ok(BiPoly::y()),
                    _ => Err(Error::UnknownIdentifier { name, pos: start }),
                }
            }
            _ => Err(self.unexpected()),
        }
    }

    fn nat(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected());
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn rational(&mut self) -> Result<Rat> {
        self.skip_ws();
        let num = self.nat()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let den = self.nat()?;
            if den.is_zero() {
                return Err(self.syntax(at, "zero denominator"));
            }
            return Ok(Rat::new(num, den));
        }
        Ok(Rat::new(num, BigInt::one()))
    }
}
