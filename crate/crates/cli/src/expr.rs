//! Expressions over a finite-dimensional algebra.
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary ('*' unary)*            left-nested
//! unary   := '-' unary | atom
//! atom    := literal | symbol | call | '(' sum ')'
//! literal := INT ['/' INT] ['*' 'I'] | 'I'
//! call    := ('comm' | 'assoc' | 'nacomm') '(' sum (',' sum)* ')'
//! ```
//!
//! Products stay binary so that grouping survives printing and reparsing.

use std::fmt;
use std::sync::Arc;

use nonassoc::{Algebra, AlgebraError, Element, GaussianRational};
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// `re + im*I`; the parser only produces one nonzero, nonnegative part.
    Scalar(GaussianRational),
    Basis(String),
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Diff(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Comm(Box<Expr>, Box<Expr>),
    Assoc(Box<Expr>, Box<Expr>, Box<Expr>),
    NaComm(Box<Expr>, Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unknown symbol {symbol:?} in algebra {algebra}")]
    UnknownSymbol { symbol: String, algebra: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub expr: Expr,
    /// Offsets and descriptions of unparenthesized product chains.
    pub warnings: Vec<String>,
}

pub fn parse_expression(text: &str) -> Result<Parsed, ParseError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        warnings: Vec::new(),
    };
    p.skip_ws();
    if p.pos == text.len() {
        return Err(p.error("empty expression"));
    }
    let expr = p.sum()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("unexpected input"));
    }
    Ok(Parsed {
        expr,
        warnings: p.warnings,
    })
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    warnings: Vec<String>,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("{message} (found {c:?})"),
            None => format!("{message} (found end of input)"),
        };
        ParseError {
            offset: self.pos,
            message: found,
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    /// Consumes `c` after optional whitespace.
    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.product()?;
        loop {
            if self.eat('+') {
                left = Expr::Sum(Box::new(left), Box::new(self.product()?));
            } else if self.eat('-') {
                left = Expr::Diff(Box::new(left), Box::new(self.product()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut left = self.unary()?;
        let mut factors = 1;
        while self.eat('*') {
            if self.peek() == Some('*') {
                self.pos -= 1;
                return Err(self.error("'**' is not an operator"));
            }
            left = Expr::Product(Box::new(left), Box::new(self.unary()?));
            factors += 1;
        }
        if factors > 2 {
            self.warnings.push(format!(
                "offset {start}: unparenthesized product of {factors} factors is grouped from the left: {}",
                left
            ));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn integer(&mut self) -> Option<BigRational> {
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if len == 0 {
            return None;
        }
        self.pos += len;
        rest[..len].parse().ok().map(BigRational::from_integer)
    }

    /// Looks past whitespace for `*I` not followed by an identifier character.
    fn eat_times_i(&mut self) -> bool {
        let save = self.pos;
        if self.eat('*') && self.eat('I') && !self.peek().is_some_and(is_ident_char) {
            return true;
        }
        self.pos = save;
        false
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let mut value = self.integer().expect("digit present");
                let save = self.pos;
                if self.eat('/') {
                    self.skip_ws();
                    let den = self
                        .integer()
                        .ok_or_else(|| self.error("expected a denominator"))?;
                    if den.is_zero() {
                        self.pos = save;
                        return Err(self.error("zero denominator"));
                    }
                    value /= den;
                }
                if self.eat_times_i() {
                    Ok(Expr::Scalar(GaussianRational::new(
                        BigRational::zero(),
                        value,
                    )))
                } else {
                    Ok(Expr::Scalar(GaussianRational::new(
                        value,
                        BigRational::zero(),
                    )))
                }
            }
            Some(c) if is_ident_start(c) => {
                let rest = &self.src[self.pos..];
                let len = rest.find(|c: char| !is_ident_char(c)).unwrap_or(rest.len());
                let name = &rest[..len];
                self.pos += len;
                match name {
                    "I" => Ok(Expr::Scalar(GaussianRational::i())),
                    "comm" | "assoc" | "nacomm" => self.call(name, start),
                    _ => Ok(Expr::Basis(name.to_string())),
                }
            }
            _ => Err(self.error("expected an operand")),
        }
    }

    fn call(&mut self, name: &str, start: usize) -> Result<Expr, ParseError> {
        self.expect('(')?;
        let mut args = vec![self.sum()?];
        while self.eat(',') {
            args.push(self.sum()?);
        }
        self.expect(')')?;
        let arity = if name == "comm" { 2 } else { 3 };
        if args.len() != arity {
            return Err(ParseError {
                offset: start,
                message: format!("{name} takes {arity} arguments, got {}", args.len()),
            });
        }
        let mut it = args.into_iter().map(Box::new);
        let mut next = || it.next().expect("arity checked");
        Ok(match name {
            "comm" => Expr::Comm(next(), next()),
            "assoc" => Expr::Assoc(next(), next(), next()),
            _ => Expr::NaComm(next(), next(), next()),
        })
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl Expr {
    fn is_additive(&self) -> bool {
        matches!(self, Expr::Sum(..) | Expr::Diff(..))
    }

    /// Literals that contain `/` or `*` are parenthesized inside products.
    fn is_compound_literal(&self) -> bool {
        match self {
            Expr::Scalar(c) => !c.im.is_zero() || !c.re.is_integer(),
            _ => false,
        }
    }
}

fn write_literal(f: &mut fmt::Formatter<'_>, c: &GaussianRational) -> fmt::Result {
    if c.im.is_zero() {
        write!(f, "{}", c.re)
    } else if c.im.is_one() {
        f.write_str("I")
    } else {
        write!(f, "{}*I", c.im)
    }
}

impl fmt::Display for Expr {
    /// Parenthesizes exactly where the parser would otherwise build a
    /// different tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, paren: bool| {
            if paren {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            Expr::Scalar(c) => write_literal(f, c),
            Expr::Basis(name) => f.write_str(name),
            Expr::Neg(e) => {
                f.write_str("-")?;
                wrap(f, e, e.is_additive() || matches!(**e, Expr::Product(..)))
            }
            Expr::Sum(a, b) => {
                wrap(f, a, false)?;
                f.write_str(" + ")?;
                wrap(f, b, b.is_additive() || matches!(**b, Expr::Neg(..)))
            }
            Expr::Diff(a, b) => {
                wrap(f, a, false)?;
                f.write_str(" - ")?;
                wrap(f, b, b.is_additive() || matches!(**b, Expr::Neg(..)))
            }
            Expr::Product(a, b) => {
                let paren_left =
                    a.is_additive() || matches!(**a, Expr::Product(..)) || a.is_compound_literal();
                wrap(f, a, paren_left)?;
                f.write_str("*")?;
                let paren_right = b.is_additive()
                    || matches!(**b, Expr::Product(..) | Expr::Neg(..))
                    || b.is_compound_literal();
                wrap(f, b, paren_right)
            }
            Expr::Comm(a, b) => write!(f, "comm({a}, {b})"),
            Expr::Assoc(a, b, c) => write!(f, "assoc({a}, {b}, {c})"),
            Expr::NaComm(g, h1, h2) => write!(f, "nacomm({g}, {h1}, {h2})"),
        }
    }
}

/// Evaluates with `one` (or the label of a unit basis element) as the unit.
pub fn evaluate(expr: &Expr, alg: &Arc<Algebra>) -> Result<Element, EvalError> {
    let ev = |e: &Expr| evaluate(e, alg);
    Ok(match expr {
        Expr::Scalar(c) => Element::scalar(alg, c),
        Expr::Basis(name) if name == "one" => Element::unit(alg),
        Expr::Basis(name) => {
            Element::from_label(alg, name).map_err(|_| EvalError::UnknownSymbol {
                symbol: name.clone(),
                algebra: alg.name().to_string(),
            })?
        }
        Expr::Neg(e) => ev(e)?.neg(),
        Expr::Sum(a, b) => ev(a)?.add(&ev(b)?)?,
        Expr::Diff(a, b) => ev(a)?.sub(&ev(b)?)?,
        Expr::Product(a, b) => ev(a)?.mul(&ev(b)?)?,
        Expr::Comm(a, b) => ev(a)?.commutator(&ev(b)?)?,
        Expr::Assoc(a, b, c) => ev(a)?.associator(&ev(b)?, &ev(c)?)?,
        Expr::NaComm(g, h1, h2) => ev(g)?.nonassoc_commutator(&ev(h1)?, &ev(h2)?)?,
    })
}
