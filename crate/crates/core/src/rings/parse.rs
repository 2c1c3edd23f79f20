//! A small recursive-descent parser for ring elements.
//!
//! Accepts `+ - * ^`, parentheses, integer and `p/q` literals, ring
//! variables, the base generator (`i`, `σ`/`sigma`, `ε`/`eps`/`e`) and
//! implicit multiplication (`(1-z)t^2`, `s^2t^2`, `st`). Negative exponents
//! invert through `try_invert`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Coeff, Elem, Ring, Symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                    digits.push(d);
                    chars.next();
                }
                out.push(Tok::Num(digits.parse().expect("digits")));
            }
            'σ' | 'ε' => {
                out.push(Tok::Ident(c.to_string()));
                chars.next();
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(d) = chars.peek().copied().filter(char::is_ascii_alphabetic) {
                    name.push(d);
                    chars.next();
                }
                out.push(Tok::Ident(name));
            }
            _ => {
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' | '−' => Tok::Minus,
                    '*' | '·' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    other => return Err(Error::Parse(format!("unexpected character {other:?} in {src:?}"))),
                };
                out.push(tok);
                chars.next();
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        match self.next() {
            Some(t) if t == tok => Ok(()),
            other => Err(Error::Parse(format!("expected {tok:?}, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Elem> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                -self.term()?
            }
            Some(Tok::Plus) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.try_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Elem> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.try_mul(&self.factor()?)?;
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen) => {
                    acc = acc.try_mul(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Elem> {
        if self.peek() == Some(&Tok::Minus) {
            self.next();
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.next();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.next();
            true
        } else {
            false
        };
        let Some(Tok::Num(n)) = self.next() else {
            return Err(Error::Parse("expected integer exponent".into()));
        };
        let k = i64::try_from(&n).map_err(|_| Error::Parse(format!("exponent {n} too large")))?;
        base.powi(if negative { -k } else { k })
    }

    fn atom(&mut self) -> Result<Elem> {
        match self.next() {
            Some(Tok::Num(p)) => {
                let q = if self.peek() == Some(&Tok::Slash) {
                    self.next();
                    match self.next() {
                        Some(Tok::Num(q)) if q != BigInt::from(0) => q,
                        other => return Err(Error::Parse(format!("bad denominator {other:?}"))),
                    }
                } else {
                    BigInt::from(1)
                };
                let value = BigRational::new(p, q);
                let c = Coeff::from_rational(self.ring.base(), &value)
                    .ok_or_else(|| Error::Parse(format!("{value} is not in {}", self.ring.base())))?;
                self.ring.constant(c)
            }
            Some(Tok::Ident(name)) => self.ident(&name),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn ident(&mut self, name: &str) -> Result<Elem> {
        if let Some(e) = self.single_ident(name) {
            return e;
        }
        // "st" and friends: a run of single-letter names
        if name.len() > 1 && name.chars().all(|c| self.single_ident(&c.to_string()).is_some()) {
            let mut acc = self.ring.one();
            for c in name.chars() {
                acc = acc.try_mul(&self.single_ident(&c.to_string()).expect("checked")?)?;
            }
            return Ok(acc);
        }
        Err(Error::UnknownVariable(name.to_string()))
    }

    fn single_ident(&self, name: &str) -> Option<Result<Elem>> {
        if let Some(sym) = Symbol::from_name(name) {
            if self.ring.has_var(sym) {
                return Some(self.ring.var(sym));
            }
        }
        if self.ring.base().generator_names().contains(&name) {
            return self.ring.generator().map(Ok);
        }
        None
    }
}

pub(super) fn parse_expr(ring: &Ring, src: &str) -> Result<Elem> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {src:?} at token {}", p.pos)));
    }
    Ok(e)
}
