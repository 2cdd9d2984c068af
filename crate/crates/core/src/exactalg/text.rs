//! Text form of polynomials: `3*x0^2*y1 - 1/2*x1`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::monomial::Var;
use super::poly::MultiPoly;
use super::ring::RingDescriptor;
use crate::error::{AlgebraError, Result};

/// Parses a polynomial over `ring`. Accepts `+ - * ^`, parentheses, integer
/// and `a/b` literals, and variables like `x`, `x0`, `theta2`.
pub fn parse_poly(text: &str, ring: &RingDescriptor) -> Result<MultiPoly> {
    let mut p = PolyParser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(AlgebraError::parse(p.pos, "unexpected trailing input"));
    }
    Ok(out)
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a RingDescriptor,
}

impl PolyParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
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

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            let e: u32 = digits
                .parse()
                .map_err(|_| AlgebraError::parse(start, "expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(AlgebraError::parse(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let mut q = BigRational::from_integer(num);
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let d = self.digits();
                    let d: BigInt = d
                        .parse()
                        .map_err(|_| AlgebraError::parse(at, "expected denominator"))?;
                    if d == BigInt::from(0) {
                        return Err(AlgebraError::parse(at, "zero denominator"));
                    }
                    q /= BigRational::from_integer(d);
                } else {
                    self.pos = save;
                }
                let c = self.ring.from_rational(&q).map_err(|_| {
                    AlgebraError::parse(start, format!("{q} is not in {}", self.ring))
                })?;
                Ok(MultiPoly::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_lowercase() => {
                let begin = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[begin..self.pos]).expect("ascii");
                let v = Var::parse(name).map_err(|e| match e {
                    AlgebraError::Parse { message, .. } => AlgebraError::parse(begin, message),
                    other => other,
                })?;
                Ok(MultiPoly::var(self.ring, v))
            }
            Some(_) => Err(AlgebraError::parse(self.pos, "unexpected character")),
            None => Err(AlgebraError::parse(self.pos, "unexpected end of input")),
        }
    }
}
