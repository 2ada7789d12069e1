//! Recursive-descent parser for the expression grammar.
//!
//! Precedence, tightest first: `^`, unary `-`, `*` `/`, binary `+` `-`.
//! Exponents must be non-negative integer literals; `^` is right-associative.

use super::expr::{Expr, FunKind};
use crate::polyalg::rat::{parse_rat, Rat};
use num_traits::{ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownIdentifier(String),
    NonIntegerExponent,
}

/// A parse failure at a character offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error at position {}: {}", self.pos, m),
            ParseErrorKind::UnknownIdentifier(id) => write!(f, "unknown identifier '{}' at position {}", id, self.pos),
            ParseErrorKind::NonIntegerExponent => {
                write!(f, "non-integer exponent at position {} (exponents must be non-negative integer literals; use sqrt)", self.pos)
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rat),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let v = parse_rat(&s).ok_or_else(|| ParseError { pos: start, kind: ParseErrorKind::Syntax(format!("malformed number '{}'", s)) })?;
            out.push((start, Tok::Num(v)));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else if c == '\u{2212}' {
            // typographic minus
            out.push((i, Tok::Op('-')));
            i += 1;
        } else {
            return Err(ParseError { pos: i, kind: ParseErrorKind::Syntax(format!("unexpected character '{}'", c)) });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn syntax<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), kind: ParseErrorKind::Syntax(msg.to_string()) })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            if self.eat('+') {
                terms.push(self.term()?);
            } else if self.eat('-') {
                terms.push(match self.term()? {
                    Expr::Const(c) => Expr::Const(-c),
                    t => t.neg(),
                });
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Add(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                acc = match acc {
                    Expr::Mul(mut v) => {
                        v.push(rhs);
                        Expr::Mul(v)
                    }
                    other => Expr::Mul(vec![other, rhs]),
                };
            } else if self.eat('/') {
                let rhs = self.unary()?;
                acc = match (acc, rhs) {
                    // p/q literal
                    (Expr::Const(a), Expr::Const(b)) if !b.is_zero() => Expr::Const(a / b),
                    (a, b) => a.div(b),
                };
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(match self.unary()? {
                Expr::Const(c) => Expr::Const(-c),
                e => e.neg(),
            });
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        let mut exps = Vec::new();
        while self.eat('^') {
            exps.push(self.exponent()?);
        }
        let Some(mut k) = exps.pop() else { return Ok(base) };
        while let Some(e) = exps.pop() {
            k = e.checked_pow(k).ok_or(ParseError { pos: self.pos(), kind: ParseErrorKind::Syntax("exponent overflow".into()) })?;
        }
        Ok(base.pow(k))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let pos = self.pos();
        let non_int = ParseError { pos, kind: ParseErrorKind::NonIntegerExponent };
        let value = match self.peek() {
            Some(Tok::Num(v)) => {
                let v = v.clone();
                self.at += 1;
                v
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.syntax("expected ')'");
                }
                match inner {
                    Expr::Const(v) => v,
                    _ => return Err(non_int),
                }
            }
            Some(Tok::Op('-')) => return Err(non_int),
            _ => return self.syntax("expected an exponent"),
        };
        if !value.is_integer() || value < Rat::zero() {
            return Err(non_int);
        }
        value.to_integer().to_u32().ok_or(ParseError { pos, kind: ParseErrorKind::Syntax("exponent too large".into()) })
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.at += 1;
                Ok(Expr::Const(v))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.syntax("expected ')'");
                }
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if let Some(i) = self.vars.iter().position(|v| *v == name) {
                    return Ok(Expr::Var(i));
                }
                if let Some(kind) = FunKind::from_name(&name) {
                    if !self.eat('(') {
                        return self.syntax(&format!("expected '(' after {}", name));
                    }
                    let arg = self.expr()?;
                    if !self.eat(')') {
                        return self.syntax("expected ')'");
                    }
                    return Ok(Expr::fun(kind, arg));
                }
                Err(ParseError { pos, kind: ParseErrorKind::UnknownIdentifier(name) })
            }
            Some(Tok::Op(c)) => self.syntax(&format!("unexpected '{}'", c)),
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Parses `text` over the ordered variable names `vars`.
pub fn parse_expr(text: &str, vars: &[String]) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, end: text.chars().count(), vars };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.syntax("unexpected trailing input");
    }
    Ok(e)
}
