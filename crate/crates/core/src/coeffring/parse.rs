//! Recursive-descent reader for coefficient expressions: integers, `P`, `L`
//! (read as `P^2`), `+ - * /`, `^` with a signed integer exponent, parentheses.

use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use num_bigint::BigInt;

pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let mut p = Parser { s: s.as_bytes(), i: 0 };
    let v = p.expr()?;
    p.ws();
    if p.i != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.i, String::from_utf8_lossy(self.s)))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(b'/') => {
                    self.i += 1;
                    let d = self.unary()?;
                    acc = acc.div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'-') => {
                self.i += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.i += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            let e = self.exponent()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.peek() == Some(b'(');
        if paren {
            self.i += 1;
        }
        let neg = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                true
            }
            Some(b'+') => {
                self.i += 1;
                false
            }
            _ => false,
        };
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected exponent"));
        }
        let v: i64 =
            std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().map_err(|_| self.err("exponent too large"))?;
        if paren {
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.i += 1;
        }
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(v)
            }
            Some(b'P') => {
                self.i += 1;
                Ok(RatFunc::p())
            }
            Some(b'L') => {
                self.i += 1;
                Ok(RatFunc::l())
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().unwrap();
                Ok(RatFunc::from_bigint(n))
            }
            _ => Err(self.err("expected number, P, L or '('")),
        }
    }
}
