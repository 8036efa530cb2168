//! A small expression language shared by scalars, algebra elements and chains.
//!
//! Accepted syntax: integers, identifiers (`q`, `s`, `A`, `B`, `B*`, `a`,
//! `a*`, `c`, `c*`, `eta`, ...), `+ - * / ^`, parentheses, implicit
//! multiplication by juxtaposition, negative exponents (`q^-2`, `q^(-2)`),
//! and tuples `(x, y, z)`. Letters are read one at a time unless they form a
//! known word, so `BA^2` means `B·A²`. A `*` directly after `B`, `a` or `c`
//! marks the adjoint generator: `B*B` is `B*·B`.
//!
//! Products keep their written order, so the same tree evaluates correctly in
//! noncommutative targets.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

const WORDS: &[&str] = &["eta", "omega"];
const STARRABLE: &[&str] = &["B", "a", "c"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at position {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token {found} at position {pos}")]
    UnexpectedToken { found: String, pos: usize },
    #[error("exponent must be an integer, at position {0}")]
    BadExponent(usize),
    #[error("{0}")]
    Eval(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Tuple(Vec<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(v) => f.write_str(v),
            Expr::Neg(x) => write!(f, "-({x})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, e) => write!(f, "({a})^{e}"),
            Expr::Tuple(xs) => {
                f.write_str("(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A target ring (or module) an [`Expr`] can be evaluated into.
pub trait Interp {
    type Value;

    fn int(&self, n: &BigInt) -> Result<Self::Value, String>;
    fn var(&self, name: &str) -> Result<Self::Value, String>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String>;
    fn neg(&self, a: Self::Value) -> Result<Self::Value, String>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String>;
    fn div(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String>;
    fn pow(&self, a: Self::Value, e: i64) -> Result<Self::Value, String>;

    fn tuple(&self, _items: Vec<Self::Value>) -> Result<Self::Value, String> {
        Err("tuples are not allowed here".to_string())
    }
}

impl Expr {
    pub fn eval<I: Interp>(&self, it: &I) -> Result<I::Value, ParseError> {
        self.eval_inner(it).map_err(ParseError::Eval)
    }

    fn eval_inner<I: Interp>(&self, it: &I) -> Result<I::Value, String> {
        match self {
            Expr::Int(n) => it.int(n),
            Expr::Var(v) => it.var(v),
            Expr::Neg(x) => {
                let x = x.eval_inner(it)?;
                it.neg(x)
            }
            Expr::Add(a, b) => {
                let a = a.eval_inner(it)?;
                let b = b.eval_inner(it)?;
                it.add(a, b)
            }
            Expr::Sub(a, b) => {
                let a = a.eval_inner(it)?;
                let b = b.eval_inner(it)?;
                let nb = it.neg(b)?;
                it.add(a, nb)
            }
            Expr::Mul(a, b) => {
                let a = a.eval_inner(it)?;
                let b = b.eval_inner(it)?;
                it.mul(a, b)
            }
            Expr::Div(a, b) => {
                let a = a.eval_inner(it)?;
                let b = b.eval_inner(it)?;
                it.div(a, b)
            }
            Expr::Pow(a, e) => {
                let a = a.eval_inner(it)?;
                it.pow(a, *e)
            }
            Expr::Tuple(xs) => {
                let vals = xs
                    .iter()
                    .map(|x| x.eval_inner(it))
                    .collect::<Result<Vec<_>, _>>()?;
                it.tuple(vals)
            }
        }
    }
}

/// Evaluates scalar expressions in `q` and `s` inside any field, given the
/// field's value of `s`.
pub struct FieldInterp<'a, K> {
    pub s: &'a K,
}

impl<K: crate::field::Field> Interp for FieldInterp<'_, K> {
    type Value = K;

    fn int(&self, n: &BigInt) -> Result<K, String> {
        Ok(K::from_rational(&crate::field::Rational::from_integer(n.clone())))
    }

    fn var(&self, name: &str) -> Result<K, String> {
        match name {
            "s" => Ok(self.s.clone()),
            "q" => Ok(self.s.mul_ref(self.s)),
            _ => Err(format!("unknown scalar symbol {name:?} (expected q or s)")),
        }
    }

    fn add(&self, a: K, b: K) -> Result<K, String> {
        Ok(a + b)
    }

    fn neg(&self, a: K) -> Result<K, String> {
        Ok(-a)
    }

    fn mul(&self, a: K, b: K) -> Result<K, String> {
        Ok(a * b)
    }

    fn div(&self, a: K, b: K) -> Result<K, String> {
        let inv = b.inverse().ok_or("division by zero")?;
        Ok(a * inv)
    }

    fn pow(&self, a: K, e: i64) -> Result<K, String> {
        if e < 0 && a.is_zero() {
            return Err("division by zero".to_string());
        }
        Ok(a.powi(e))
    }
}

/// Parse a scalar expression and evaluate it in `K` at the given `s`.
pub fn eval_scalar<K: crate::field::Field>(text: &str, s: &K) -> Result<K, ParseError> {
    parse(text)?.eval(&FieldInterp { s })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Ident(s) => write!(f, "{s:?}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Comma => f.write_str("','"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Int(digits.parse().unwrap()), start));
            }
            '+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            '*' | '\u{00b7}' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            ',' => {
                out.push((Tok::Comma, i));
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                if WORDS.contains(&word.as_str())
                    || (word.starts_with("omega") && word[5..].chars().all(|c| c.is_ascii_digit()))
                {
                    out.push((Tok::Ident(word), start));
                    continue;
                }
                // split into single letters, digits after a letter are a juxtaposed integer
                let end = i;
                let mut j = start;
                while j < end {
                    let c = chars[j];
                    if c.is_ascii_digit() {
                        let s = j;
                        while j < end && chars[j].is_ascii_digit() {
                            j += 1;
                        }
                        let digits: String = chars[s..j].iter().collect();
                        out.push((Tok::Int(digits.parse().unwrap()), s));
                        continue;
                    }
                    if c == '_' {
                        return Err(ParseError::UnexpectedChar { ch: c, pos: j });
                    }
                    let mut name = c.to_string();
                    if j + 1 == end && i < chars.len() && chars[i] == '*' && STARRABLE.contains(&name.as_str()) {
                        name.push('*');
                        i += 1;
                    }
                    out.push((Tok::Ident(name), j));
                    j += 1;
                }
            }
            _ => return Err(ParseError::UnexpectedChar { ch, pos: i }),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(ParseError::UnexpectedToken { found: t.to_string(), pos }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let rhs = self.power()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let pos = self.here();
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.bump();
        }
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let value = match self.bump() {
            Some(Tok::Int(n)) => i64::try_from(n).map_err(|_| ParseError::BadExponent(pos))?,
            _ => return Err(ParseError::BadExponent(pos)),
        };
        if paren {
            self.expect(Tok::RParen)?;
        }
        Ok(if neg { -value } else { value })
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Expr::Int(n)),
            Some(Tok::Ident(v)) => Ok(Expr::Var(v)),
            Some(Tok::LParen) => {
                let first = self.expr()?;
                if self.peek() == Some(&Tok::Comma) {
                    let mut items = vec![first];
                    while self.peek() == Some(&Tok::Comma) {
                        self.bump();
                        items.push(self.expr()?);
                    }
                    self.expect(Tok::RParen)?;
                    return Ok(Expr::Tuple(items));
                }
                self.expect(Tok::RParen)?;
                Ok(first)
            }
            Some(t) => Err(ParseError::UnexpectedToken { found: t.to_string(), pos }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(ParseError::UnexpectedEnd);
    }
    let mut p = Parser { toks, pos: 0, end: input.chars().count() };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        let (t, pos) = p.toks[p.pos].clone();
        return Err(ParseError::UnexpectedToken { found: t.to_string(), pos });
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Box<Expr> {
        Box::new(Expr::Var(s.to_string()))
    }

    #[test]
    fn negative_exponents() {
        assert_eq!(parse("q^-2").unwrap(), Expr::Pow(v("q"), -2));
        assert_eq!(parse("q^(-2)").unwrap(), Expr::Pow(v("q"), -2));
        assert_eq!(parse("q^(\u{2212}2)").unwrap(), Expr::Pow(v("q"), -2));
    }

    #[test]
    fn juxtaposed_letters_split() {
        assert_eq!(parse("BA^2").unwrap(), Expr::Mul(v("B"), Box::new(Expr::Pow(v("A"), 2))));
        assert_eq!(parse("B*B").unwrap(), Expr::Mul(v("B*"), v("B")));
        assert_eq!(parse("2q").unwrap(), Expr::Mul(Box::new(Expr::Int(2.into())), v("q")));
    }

    #[test]
    fn tuples_and_words() {
        let e = parse("(1, A, B*)").unwrap();
        assert!(matches!(e, Expr::Tuple(ref xs) if xs.len() == 3));
        assert_eq!(parse("eta").unwrap(), Expr::Var("eta".into()));
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse("q +"), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(parse("q ? 2"), Err(ParseError::UnexpectedChar { ch: '?', pos: 2 })));
        assert!(matches!(parse("q^x"), Err(ParseError::BadExponent(_))));
    }
}
