//! Text grammar for scalars, polynomials, vectors and matrix files.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' exponent)?
//! exponent:= primary ('^' exponent)?      -- must evaluate to an integer >= 0
//! primary := INTEGER | 'zeta(' INTEGER ')' | 'X' INTEGER | '(' expr ')'
//! ```
//!
//! `/` divides by a nonzero constant, so `3/4` and `X1/2` are accepted.
//! Error positions are 1-based character offsets; end of input is reported
//! one past the last character. Rendered scalars and polynomials parse back
//! to equal values.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::multipoly::{Polynomial, SquareMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Zeta(u32),
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Divisor position is kept for error reporting.
    Div(Box<Expr>, Box<Expr>, usize),
    /// Exponent position is kept for error reporting.
    Pow(Box<Expr>, Box<Expr>, usize),
}

impl Expr {
    pub fn max_var(&self) -> usize {
        match self {
            Expr::Int(_) | Expr::Zeta(_) => 0,
            Expr::Var(i) => *i,
            Expr::Neg(a) => a.max_var(),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b, _)
            | Expr::Pow(a, b, _) => a.max_var().max(b.max_var()),
        }
    }

    /// Evaluates in `nvars` variables.
    pub fn to_polynomial(&self, nvars: usize) -> Result<Polynomial> {
        Ok(match self {
            Expr::Int(i) => Polynomial::constant(nvars, Scalar::from(i.clone())),
            Expr::Zeta(r) => Polynomial::constant(nvars, Scalar::zeta(*r)),
            Expr::Var(i) => {
                if *i > nvars {
                    return Err(Error::IndexOutOfRange {
                        index: *i,
                        max: nvars,
                    });
                }
                Polynomial::var(nvars, i - 1)
            }
            Expr::Neg(a) => -&a.to_polynomial(nvars)?,
            Expr::Add(a, b) => a
                .to_polynomial(nvars)?
                .checked_add(&b.to_polynomial(nvars)?)?,
            Expr::Sub(a, b) => a
                .to_polynomial(nvars)?
                .checked_sub(&b.to_polynomial(nvars)?)?,
            Expr::Mul(a, b) => a
                .to_polynomial(nvars)?
                .checked_mul(&b.to_polynomial(nvars)?)?,
            Expr::Div(a, b, pos) => {
                let d = b.to_polynomial(nvars)?;
                let c = constant_of(&d).ok_or_else(|| Error::Syntax {
                    position: *pos,
                    message: "divisor must be a constant".into(),
                })?;
                a.to_polynomial(nvars)?.checked_scale(&c.inverse()?)?
            }
            Expr::Pow(a, b, pos) => {
                let e = b.to_polynomial(nvars)?;
                let exp = constant_of(&e)
                    .as_ref()
                    .and_then(Scalar::as_rational)
                    .filter(|q| q.is_integer())
                    .map(|q| q.to_integer())
                    .ok_or_else(|| Error::Syntax {
                        position: *pos,
                        message: "exponent must be an integer constant".into(),
                    })?;
                if exp.is_negative() {
                    return Err(Error::ExponentNegative { position: *pos });
                }
                let exp = exp.to_u32().ok_or_else(|| Error::Syntax {
                    position: *pos,
                    message: "exponent too large".into(),
                })?;
                a.to_polynomial(nvars)?.checked_pow(exp)?
            }
        })
    }
}

fn constant_of(p: &Polynomial) -> Option<Scalar> {
    match p.degree() {
        None => Some(Scalar::zero()),
        Some(0) => p.terms().next().map(|(_, c)| c.clone()),
        Some(_) => None,
    }
}

/// Source text together with its syntax tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedExpression {
    pub source: String,
    pub ast: Expr,
}

impl ParsedExpression {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser::new(text);
        let ast = p.expr()?;
        p.expect_end()?;
        Ok(ParsedExpression {
            source: text.to_owned(),
            ast,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(i) => format!("number {i}"),
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Sym(c) => format!("'{c}'"),
        Tok::End => "end of input".into(),
    }
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let start = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let digits: String = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_digit())
                    .collect();
                i += digits.len();
                toks.push((Tok::Int(digits.parse().expect("ascii digits")), start));
            } else if c.is_ascii_alphabetic() {
                // `X12` splits into the letter and its index
                let word: String = if c == 'X' {
                    "X".into()
                } else {
                    chars[i..]
                        .iter()
                        .take_while(|c| c.is_ascii_alphabetic())
                        .collect()
                };
                i += word.len();
                toks.push((Tok::Ident(word), start));
            } else {
                i += 1;
                toks.push((Tok::Sym(c), start));
            }
        }
        toks.push((Tok::End, chars.len() + 1));
        Parser { toks, at: 0 }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos(),
            message: message.into(),
        })
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.peek() == &Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected '{c}', found {}", describe(self.peek())))
        }
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            t => self.error(format!("unexpected {}", describe(t))),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Int(i) => {
                self.bump();
                Ok(i)
            }
            t => self.error(format!("expected a number, found {}", describe(&t))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Sym('/') => {
                    self.bump();
                    let pos = self.pos();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Tok::Sym('-') => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Tok::Sym('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        self.power_tail(base)
    }

    fn power_tail(&mut self, base: Expr) -> Result<Expr> {
        if self.peek() != &Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        if self.peek() == &Tok::Sym('-') {
            return Err(Error::ExponentNegative { position: pos });
        }
        let exp = self.power()?;
        Ok(Expr::Pow(Box::new(base), Box::new(exp), pos))
    }

    fn primary(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(i) => {
                self.bump();
                Ok(Expr::Int(i))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(w) if w == "X" => {
                self.bump();
                let idx = self.integer()?;
                match idx.to_usize() {
                    Some(i) if i >= 1 => Ok(Expr::Var(i)),
                    _ => Err(Error::Syntax {
                        position: pos,
                        message: "variables are numbered from X1".into(),
                    }),
                }
            }
            Tok::Ident(w) if w == "zeta" => {
                self.bump();
                self.expect_sym('(')?;
                let order_pos = self.pos();
                let r = self.integer()?;
                self.expect_sym(')')?;
                match r.to_u32() {
                    Some(r) if r >= 1 => Ok(Expr::Zeta(r)),
                    _ => Err(Error::Syntax {
                        position: order_pos,
                        message: "zeta order must be a positive integer".into(),
                    }),
                }
            }
            t => self.error(format!("unexpected {}", describe(&t))),
        }
    }
}

/// Parses a polynomial; the number of variables is the largest index used.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let parsed = ParsedExpression::parse(text)?;
    parsed.ast.to_polynomial(parsed.ast.max_var())
}

/// Parses a polynomial in exactly `n` variables.
pub fn parse_polynomial_in(text: &str, n: usize) -> Result<Polynomial> {
    ParsedExpression::parse(text)?.ast.to_polynomial(n)
}

/// Parses a variable-free expression.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let parsed = ParsedExpression::parse(text)?;
    if parsed.ast.max_var() > 0 {
        let position = text.find('X').map_or(1, |i| text[..i].chars().count() + 1);
        return Err(Error::Syntax {
            position,
            message: "variables are not allowed in a scalar".into(),
        });
    }
    let p = parsed.ast.to_polynomial(0)?;
    Ok(constant_of(&p).expect("no variables"))
}

/// Comma-separated scalars; error positions refer to the whole string.
pub fn parse_vector(text: &str) -> Result<Vec<Scalar>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let v = parse_scalar(part).map_err(|e| match e {
            Error::Syntax { position, message } => Error::Syntax {
                position: position + offset,
                message,
            },
            Error::ExponentNegative { position } => Error::ExponentNegative {
                position: position + offset,
            },
            other => other,
        })?;
        out.push(v);
        offset += part.chars().count() + 1;
    }
    Ok(out)
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// Matrix file format: a JSON array of rows whose entries are scalar strings
/// (plain JSON integers are accepted too).
pub fn matrix_to_json(m: &SquareMatrix) -> Value {
    Value::Array(m.rows().iter().map(|row| vector_to_json(row)).collect())
}

pub fn parse_matrix_json(text: &str) -> Result<SquareMatrix> {
    let json: Value = serde_json::from_str(text).map_err(|e| Error::Syntax {
        position: e.column(),
        message: format!("invalid JSON: {e}"),
    })?;
    matrix_from_json(&json)
}

pub fn matrix_from_json(json: &Value) -> Result<SquareMatrix> {
    let shape_error = |message: &str| Error::Syntax {
        position: 1,
        message: message.to_owned(),
    };
    let rows = json
        .as_array()
        .ok_or_else(|| shape_error("matrix must be an array of rows"))?;
    let rows: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| shape_error("each row must be an array"))?
                .iter()
                .map(|entry| match entry {
                    Value::String(s) => parse_scalar(s),
                    Value::Number(n) if n.is_i64() => {
                        Ok(Scalar::from_integer(n.as_i64().expect("checked")))
                    }
                    _ => Err(shape_error("entries must be scalar strings or integers")),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    SquareMatrix::from_rows(rows)
}
