//! Text syntax: `x*y^2 + 4*x^2*y - c[1]^3`.
//!
//! The same tokenizer also reads rule templates, where an index may be the
//! letter `i` with an optional offset (`c[i+1]`).

use super::{Monomial, Name, PolyError, Polynomial, VarId};
use crate::scalar::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexExpr {
    None,
    Fixed(u32),
    /// `i + offset`
    Rel(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawFactor {
    pub name: Name,
    pub index: IndexExpr,
    pub exp: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTerm<C> {
    pub coeff: C,
    pub factors: Vec<RawFactor>,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
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

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> Result<&'a str, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn ident(&mut self) -> Result<&'a str, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn small_int(&mut self) -> Result<i64, PolyError> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let d = self.digits()?;
        let v: i64 = match d.parse() {
            Ok(v) => v,
            Err(_) => return self.err("integer out of range"),
        };
        Ok(if neg { -v } else { v })
    }

    fn exponent(&mut self) -> Result<i32, PolyError> {
        let paren = self.eat(b'(');
        let e = self.small_int()?;
        if paren && !self.eat(b')') {
            return self.err("expected `)`");
        }
        match i32::try_from(e) {
            Ok(e) => Ok(e),
            Err(_) => self.err("exponent out of range"),
        }
    }

    fn index(&mut self) -> Result<IndexExpr, PolyError> {
        if self.peek() == Some(b'i') {
            self.pos += 1;
            let off = match self.peek() {
                Some(b'+') | Some(b'-') => self.small_int()?,
                _ => 0,
            };
            return Ok(IndexExpr::Rel(off));
        }
        let d = self.digits()?;
        match d.parse() {
            Ok(v) => Ok(IndexExpr::Fixed(v)),
            Err(_) => self.err("index out of range"),
        }
    }

    fn term<C: Coeff>(&mut self, negative: bool) -> Result<RawTerm<C>, PolyError> {
        let mut coeff = C::one();
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let d = self.digits()?;
                    let c: C = match d.parse() {
                        Ok(c) => c,
                        Err(_) => return self.err("bad integer"),
                    };
                    coeff = coeff * c;
                }
                Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                    let at = self.pos;
                    let raw = self.ident()?;
                    let name = Name::new(raw).map_err(|_| PolyError::Parse {
                        pos: at,
                        msg: format!("invalid name `{raw}`"),
                    })?;
                    let index = if self.eat(b'[') {
                        let ix = self.index()?;
                        if !self.eat(b']') {
                            return self.err("expected `]`");
                        }
                        ix
                    } else {
                        IndexExpr::None
                    };
                    let exp = if self.eat(b'^') { self.exponent()? } else { 1 };
                    factors.push(RawFactor { name, index, exp });
                }
                _ => return self.err("expected a number or variable"),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        if negative {
            coeff = -coeff;
        }
        Ok(RawTerm { coeff, factors })
    }
}

/// Tokenizes a sum of terms, keeping index templates unresolved.
pub fn parse_terms<C: Coeff>(s: &str) -> Result<Vec<RawTerm<C>>, PolyError> {
    let mut cur = Cursor {
        src: s.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut negative = cur.eat(b'-');
    if !negative {
        cur.eat(b'+');
    }
    loop {
        terms.push(cur.term(negative)?);
        match cur.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return cur.err("expected `+`, `-` or end of input"),
        }
        cur.pos += 1;
    }
    Ok(terms)
}

/// Parses a concrete polynomial; index templates are rejected.
pub fn parse_poly<C: Coeff>(s: &str) -> Result<Polynomial<C>, PolyError> {
    let mut p = Polynomial::zero();
    for t in parse_terms::<C>(s)? {
        let mut fs = Vec::with_capacity(t.factors.len());
        for f in t.factors {
            let index = match f.index {
                IndexExpr::None => None,
                IndexExpr::Fixed(i) => Some(i),
                IndexExpr::Rel(_) => {
                    return Err(PolyError::Parse {
                        pos: 0,
                        msg: "index template `i` outside a rule".to_string(),
                    })
                }
            };
            fs.push((VarId::from_parts(f.name, index), f.exp));
        }
        p.add_term(Monomial::from_factors(fs), t.coeff);
    }
    Ok(p)
}
