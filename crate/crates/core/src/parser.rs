//! Recursive-descent parser for expressions over `F_p(t)`, plus the
//! canonical printer.
//!
//! Grammar:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor | <juxtaposed factor>)*
//! factor := base ('^' uint)?
//! base   := uint | 't' | '(' expr ')'
//! ```
//!
//! A juxtaposed factor must start with `(` or `t` and follow a literal, `t`
//! or `)`, so `2t^2(t+1)` reads as `2 * t^2 * (t+1)`. `^` binds tighter
//! than unary minus.

use crate::algebra::{Field, Poly, RatFunc};
use crate::curve::{Curve, Point};
use crate::error::{Error, Result};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Int,
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprToken {
    pub kind: TokenKind,
    pub offset: usize,
    /// Decimal digits for `Int` tokens.
    pub text: String,
}

pub fn tokenize(src: &str) -> Result<Vec<ExprToken>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(ExprToken {
                    kind: TokenKind::Int,
                    offset: start,
                    text: src[start..i].to_string(),
                });
                continue;
            }
            b't' => TokenKind::Var,
            b'+' => TokenKind::Plus,
            b'-' => TokenKind::Minus,
            b'*' => TokenKind::Star,
            b'/' => TokenKind::Slash,
            b'^' => TokenKind::Caret,
            b'(' => TokenKind::LParen,
            b')' => TokenKind::RParen,
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(Error::syntax(i, format!("unexpected character '{ch}'")));
            }
        };
        out.push(ExprToken {
            kind,
            offset: i,
            text: String::new(),
        });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<ExprToken>,
    pos: usize,
    end: usize,
    field: &'a Field,
}

impl Parser<'_> {
    fn peek(&self) -> Option<TokenKind> {
        self.tokens.get(self.pos).map(|t| t.kind)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.offset)
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let negate = if self.peek() == Some(TokenKind::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(TokenKind::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(TokenKind::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(TokenKind::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(TokenKind::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let rhs = self.factor()?;
                    if rhs.is_zero() {
                        return Err(Error::syntax(at, "division by the zero expression"));
                    }
                    acc = &acc / &rhs;
                }
                Some(TokenKind::LParen) | Some(TokenKind::Var) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        let base = self.base()?;
        if self.peek() == Some(TokenKind::Caret) {
            self.pos += 1;
            let at = self.offset();
            match self.tokens.get(self.pos) {
                Some(tok) if tok.kind == TokenKind::Int => {
                    let e: u64 = tok
                        .text
                        .parse()
                        .ok()
                        .filter(|&e| e <= MAX_EXPONENT)
                        .ok_or_else(|| Error::syntax(at, "exponent too large"))?;
                    self.pos += 1;
                    return base.pow(e as i64);
                }
                _ => return Err(Error::syntax(at, "expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<RatFunc> {
        let at = self.offset();
        let tok = match self.tokens.get(self.pos) {
            Some(t) => t.clone(),
            None => return Err(Error::syntax(at, "unexpected end of input")),
        };
        match tok.kind {
            TokenKind::Int => {
                self.pos += 1;
                let p = self.field.characteristic() as u64;
                let v = tok
                    .text
                    .bytes()
                    .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(RatFunc::constant(self.field, v as u32))
            }
            TokenKind::Var => {
                self.pos += 1;
                Ok(RatFunc::t(self.field))
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(TokenKind::RParen) {
                    return Err(Error::syntax(self.offset(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(Error::syntax(at, "expected a number, 't' or '('")),
        }
    }
}

/// Parses an expression in `t` into a reduced rational function over `field`.
pub fn parse_ratfunc(src: &str, field: &Field) -> Result<RatFunc> {
    let tokens = tokenize(src)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: src.len(),
        field,
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::syntax(parser.offset(), "unexpected trailing input"));
    }
    Ok(value)
}

/// Parses an expression that must be a polynomial.
pub fn parse_poly(src: &str, field: &Field) -> Result<Poly> {
    let r = parse_ratfunc(src, field)?;
    r.as_poly()
        .cloned()
        .ok_or_else(|| Error::syntax(0, "expected a polynomial"))
}

/// Parses five comma-separated coefficients `a1,a2,a3,a4,a6`.
pub fn parse_curve(src: &str, field: &Field) -> Result<Curve> {
    let mut coeffs = Vec::with_capacity(5);
    let mut start = 0usize;
    for piece in src.split(',') {
        let value = parse_ratfunc(piece, field).map_err(|e| shift_offset(e, start))?;
        coeffs.push(value);
        start += piece.len() + 1;
    }
    if coeffs.len() != 5 {
        return Err(Error::syntax(
            src.len(),
            format!("expected 5 comma-separated coefficients, found {}", coeffs.len()),
        ));
    }
    let [a1, a2, a3, a4, a6]: [RatFunc; 5] = coeffs.try_into().expect("length checked");
    Curve::new(a1, a2, a3, a4, a6)
}

/// Parses `"x;y"` (or `"O"` for the identity) and checks membership.
pub fn parse_point(src: &str, curve: &Curve) -> Result<Point> {
    if src.trim() == "O" {
        return Ok(Point::Infinity);
    }
    let (xs, ys) = src
        .split_once(';')
        .ok_or_else(|| Error::syntax(src.len(), "expected 'x;y'"))?;
    let x = parse_ratfunc(xs, curve.field())?;
    let y = parse_ratfunc(ys, curve.field()).map_err(|e| shift_offset(e, xs.len() + 1))?;
    curve.point(x, y)
}

fn shift_offset(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { offset, message } => Error::Syntax {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

/// Values with a canonical, re-parseable text form.
pub trait Canonical {
    fn canonical(&self) -> String;
}

impl Canonical for Poly {
    fn canonical(&self) -> String {
        self.to_string()
    }
}

impl Canonical for RatFunc {
    fn canonical(&self) -> String {
        self.to_string()
    }
}

impl Canonical for Curve {
    fn canonical(&self) -> String {
        self.coefficients()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Canonical for Point {
    fn canonical(&self) -> String {
        match self {
            Point::Infinity => "O".to_string(),
            Point::Affine { x, y } => format!("{x};{y}"),
        }
    }
}

/// Canonical text: descending powers, residues in `0..p`, explicit `*`.
pub fn print_canonical<T: Canonical + ?Sized>(value: &T) -> String {
    value.canonical()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn spec_examples() {
        let f = f5();
        let x = parse_ratfunc("-t*(t-2)", &f).unwrap();
        assert_eq!(x.to_string(), "4*t^2 + 2*t");
        let a4 = parse_ratfunc("2*t^2*(t+1)", &f).unwrap();
        assert_eq!(a4.to_string(), "2*t^3 + 2*t^2");
        let q = parse_ratfunc("(t^2+1)/(t^2-1)", &f).unwrap();
        assert!(q.den().is_monic());
        assert_eq!(q.to_string(), "(t^2 + 1)/(t^2 + 4)");
        assert_eq!(parse_ratfunc("t+t", &f).unwrap().to_string(), "2*t");
        assert_eq!(parse_ratfunc("t^2-1", &f).unwrap().to_string(), "t^2 + 4");
    }

    #[test]
    fn implicit_multiplication_and_precedence() {
        let f = f5();
        let a = parse_ratfunc("2t^2(t+1)", &f).unwrap();
        assert_eq!(a, parse_ratfunc("2*t^2*(t+1)", &f).unwrap());
        let b = parse_ratfunc("-t^2", &f).unwrap();
        assert_eq!(b.to_string(), "4*t^2");
        let c = parse_ratfunc("(t+1)(t-1)", &f).unwrap();
        assert_eq!(c.to_string(), "t^2 + 4");
        let d = parse_ratfunc("t(t+1)", &f).unwrap();
        assert_eq!(d.to_string(), "t^2 + t");
        assert_eq!(parse_ratfunc("12345678901234567890", &f).unwrap().to_string(), "0");
    }

    #[test]
    fn errors_carry_offsets() {
        let f = f5();
        assert_eq!(
            parse_ratfunc("t + * 2", &f),
            Err(Error::Syntax {
                offset: 4,
                message: "expected a number, 't' or '('".into()
            })
        );
        assert!(matches!(parse_ratfunc("(t+1", &f), Err(Error::Syntax { offset: 4, .. })));
        assert!(matches!(parse_ratfunc("t/(t-t)", &f), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_ratfunc("x", &f), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_ratfunc("2 3", &f), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_ratfunc("t^-1", &f), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_ratfunc("", &f), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_ratfunc("t--1", &f), Err(Error::Syntax { offset: 2, .. })));
    }

    #[test]
    fn curves() {
        let f = f5();
        let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f).unwrap();
        assert_eq!(e.canonical(), "0,4*t^2 + 2*t,0,2*t^3 + 2*t^2,0");
        assert_eq!(parse_curve("0,0,0,0,0", &f), Err(Error::SingularCurve));
        assert!(parse_curve("1,0,0,0,-t^2", &f).is_ok());
        assert!(matches!(parse_curve("0,0,0,t", &f), Err(Error::Syntax { .. })));
        assert!(matches!(parse_curve("0,0,0,t,)", &f), Err(Error::Syntax { offset: 8, .. })));
        let p = parse_point("t;t^2", &e).unwrap();
        assert_eq!(print_canonical(&p), "t;t^2");
        assert_eq!(parse_point("t;t", &e), Err(Error::OffCurve));
    }
}
