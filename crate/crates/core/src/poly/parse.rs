//! Text syntax: rational constants, variable names, `+ - * / ^` and
//! parentheses. Division is only allowed by nonzero constants.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Num, Zero};

use crate::error::{Error, Result};
use crate::poly::context::Context;
use crate::poly::polynomial::{Polynomial, Q};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = BigInt::from_str_radix(&text[start..i], 10)
                .map_err(|_| Error::Parse { pos: start, msg: "bad integer".into() })?;
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

/// Variable names in order of first appearance.
pub fn variables_in(text: &str) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    for (_, t) in tokenize(text)? {
        if let Tok::Ident(s) = t {
            if !names.contains(&s) {
                names.push(s);
            }
        }
    }
    Ok(names)
}

struct Parser<'a> {
    ctx: &'a Arc<Context>,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.to_string() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.checked_mul(&self.unary()?)?;
            } else if self.eat('/') {
                let at = self.here();
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Parse { pos: at, msg: "division only by nonzero constants".into() });
                }
                acc = acc.scale(&d.constant_term().recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = u32::try_from(n).or_else(|_| self.err("exponent too large"))?;
                    return base.pow(e);
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ctx, Q::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                let at = self.here();
                self.pos += 1;
                match self.ctx.var_index(&name) {
                    Some(i) => Ok(Polynomial::var(self.ctx, i)),
                    None => Err(Error::Parse { pos: at, msg: format!("unknown variable `{name}`") }),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            _ => self.err("expected a number, variable or `(`"),
        }
    }
}

/// Parses `text` in the given context.
pub fn parse_polynomial(ctx: &Arc<Context>, text: &str) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty input".into() });
    }
    let mut p = Parser { ctx, toks, pos: 0, end: text.len() };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses `text`, creating an affine context. When `vars` is `None` the
/// variables are taken in order of first appearance.
pub fn parse_affine(text: &str, vars: Option<&[String]>) -> Result<Polynomial> {
    let names = match vars {
        Some(v) => v.to_vec(),
        None => variables_in(text)?,
    };
    if names.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "no variables; pass them explicitly".into() });
    }
    let ctx = Context::affine(&names)?;
    let p = parse_polynomial(&ctx, text)?;
    debug_assert!(!p.terms().iter().any(|(_, c)| c.is_zero()));
    Ok(p)
}

impl core::str::FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_affine(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn round_trip_canonical() {
        let p = parse_affine("y*u - x*v", None).unwrap();
        assert_eq!(p.to_string(), "y*u - x*v");
        let ctx = p.context().clone();
        let again = parse_polynomial(&ctx, &p.to_string()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn rationals_and_powers() {
        let names = vec!["x".to_string(), "y".to_string()];
        let p = parse_affine("3/2*x^2 - (x - y)^2 + x^2/2", Some(&names)).unwrap();
        assert_eq!(p.to_string(), "x^2 + 2*x*y - y^2");
        let c = parse_affine("-4/6 + x", None).unwrap();
        assert_eq!(c.to_string(), "x - 2/3");
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_affine("x +* y", None), Err(Error::Parse { .. })));
        assert!(matches!(parse_affine("x / y", None), Err(Error::Parse { .. })));
        assert!(matches!(parse_affine("x ^ y", None), Err(Error::Parse { .. })));
        assert!(matches!(parse_affine("x $ 1", None), Err(Error::Parse { .. })));
        let names = vec!["x".to_string()];
        assert!(matches!(parse_affine("x + z", Some(&names)), Err(Error::Parse { .. })));
    }
}
