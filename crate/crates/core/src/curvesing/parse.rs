//! Recursive-descent parser for polynomial input:
//!
//! ```text
//! poly   := [sign] term (("+" | "-") [sign] term)*
//! term   := coef ["*" factor ("*" factor)*] | factor ("*" factor)*
//! factor := ("x" | "y") ["^" uint]
//! coef   := uint ["/" uint]
//! ```
//!
//! Whitespace is allowed between tokens. Positions in errors are byte
//! offsets into the input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::curvesing::SupportPoly;
use crate::error::{Error, Result};

pub fn parse_poly(text: &str) -> Result<SupportPoly<BigRational>> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0 };
    let poly = parser.poly()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> bool {
        let mut negative = false;
        while let Some(b @ (b'+' | b'-')) = self.peek() {
            negative ^= b == b'-';
            self.pos += 1;
        }
        negative
    }

    fn poly(&mut self) -> Result<SupportPoly<BigRational>> {
        let mut out = SupportPoly::zero();
        let negative = self.sign();
        let (e, c) = self.term()?;
        out.add_term(e, if negative { -c } else { c });
        while let Some(b'+' | b'-') = self.peek() {
            let negative = self.sign();
            let (e, c) = self.term()?;
            out.add_term(e, if negative { -c } else { c });
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<((u32, u32), BigRational)> {
        let mut coeff = BigRational::one();
        let mut exps = (0u32, 0u32);
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                coeff = self.coef()?;
                if !self.eat(b'*') {
                    return Ok((exps, coeff));
                }
                self.factor(&mut exps)?;
            }
            Some(b) if b.is_ascii_alphabetic() => self.factor(&mut exps)?,
            Some(_) => return Err(self.error("expected a coefficient or a variable")),
            None => return Err(self.error("unexpected end of input, expected a term")),
        }
        while self.eat(b'*') {
            self.factor(&mut exps)?;
        }
        Ok((exps, coeff))
    }

    fn factor(&mut self, exps: &mut (u32, u32)) -> Result<()> {
        self.skip_ws();
        let begin = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
            self.pos += 1;
        }
        let name = &self.src[begin..self.pos];
        if !name.first().is_some_and(u8::is_ascii_alphabetic) {
            self.pos = begin;
            return Err(self.error("expected 'x' or 'y'"));
        }
        let slot = match name {
            b"x" => &mut exps.0,
            b"y" => &mut exps.1,
            other => {
                return Err(Error::Parse {
                    position: begin,
                    message: format!("unknown variable '{}'", String::from_utf8_lossy(other)),
                })
            }
        };
        let e = if self.eat(b'^') {
            let at = self.pos;
            let digits = self.uint()?;
            u32::try_from(&digits).map_err(|_| Error::Parse {
                position: at,
                message: "exponent too large".into(),
            })?
        } else {
            1
        };
        *slot = slot.checked_add(e).ok_or_else(|| self.error("exponent too large"))?;
        Ok(())
    }

    fn coef(&mut self) -> Result<BigRational> {
        let num = self.uint()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.uint()?;
            if den.is_zero() {
                return Err(Error::Parse { position: at, message: "zero denominator".into() });
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let begin = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if begin == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[begin..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("nonempty digit string"))
    }
}
