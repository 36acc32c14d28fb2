//! Expression parser shared by Ore elements, coefficient polynomials and
//! bivariate annihilating polynomials.
//!
//! Grammar (no implicit multiplication, `^` binds tightest, `*` is never
//! reordered):
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' exponent)?
//! atom   := 'x' | 'y' | 's' | 't' | nat ['/' nat] | '(' expr ')'
//! ```

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::bivar::{BivarPoly, CoeffMode};
use crate::error::{Error, Result};
use crate::ore::{OreAlgebra, OreElem};
use crate::poly::Poly;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    X,
    Y,
    S,
    T,
    Nat(BigUint),
    Frac(BigUint, BigUint),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Var(char),
    Nat(BigUint),
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::SyntaxError {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'x' | 'y' | 's' | 't' => Tok::Var(c),
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = bytes[start..i].iter().collect();
                out.push((start, Tok::Nat(digits.parse().expect("digits"))));
                continue;
            }
            other => return Err(syntax(i, format!("unexpected character `{}`", other))),
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let pos = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(syntax(pos, format!("expected {}", what))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Nat(n)) => n
                .to_u32()
                .ok_or_else(|| syntax(pos, "exponent too large")),
            Some(Tok::LParen) => {
                // parenthesized exponents surface negative literals as
                // ExponentError rather than a plain syntax error
                let negative = if self.peek() == Some(&Tok::Minus) {
                    self.bump();
                    true
                } else {
                    false
                };
                let inner = self.here();
                let n = match self.bump() {
                    Some(Tok::Nat(n)) => n,
                    _ => return Err(syntax(inner, "expected integer exponent")),
                };
                self.expect(Tok::RParen, "`)`")?;
                if negative {
                    return Err(Error::ExponentError);
                }
                n.to_u32().ok_or_else(|| syntax(pos, "exponent too large"))
            }
            Some(Tok::Minus) => Err(Error::ExponentError),
            _ => Err(syntax(pos, "expected exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Var('x')) => Ok(Expr::X),
            Some(Tok::Var('y')) => Ok(Expr::Y),
            Some(Tok::Var('s')) => Ok(Expr::S),
            Some(Tok::Var('t')) => Ok(Expr::T),
            Some(Tok::Nat(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dpos = self.here();
                    match self.bump() {
                        Some(Tok::Nat(d)) => Ok(Expr::Frac(n, d)),
                        _ => Err(syntax(dpos, "expected denominator")),
                    }
                } else {
                    Ok(Expr::Nat(n))
                }
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(t) => Err(syntax(pos, format!("unexpected token {:?}", t))),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.chars().count(),
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(syntax(p.here(), "trailing input"));
    }
    Ok(e)
}

fn scalar_of(field: FieldSpec, e: &Expr) -> Option<Result<Scalar>> {
    match e {
        Expr::Nat(n) => Some(Ok(Scalar::from_bigint(field, BigInt::from(n.clone())))),
        Expr::Frac(n, d) => Some(Scalar::from_ratio(
            field,
            BigInt::from(n.clone()),
            BigInt::from(d.clone()),
        )),
        _ => None,
    }
}

/// Evaluates an expression over x, y and scalars in the given algebra,
/// preserving the noncommutative product order.
pub fn eval_expr(e: &Expr, alg: &OreAlgebra) -> Result<OreElem> {
    if let Some(s) = scalar_of(alg.field(), e) {
        return Ok(OreElem::from_scalar(alg, &s?));
    }
    match e {
        Expr::X => Ok(OreElem::gen_x(alg)),
        Expr::Y => Ok(OreElem::gen_y(alg)),
        Expr::S | Expr::T => Err(syntax(
            0,
            "`s` and `t` are only allowed in bivariate polynomials",
        )),
        Expr::Neg(a) => Ok(eval_expr(a, alg)?.neg()),
        Expr::Add(a, b) => eval_expr(a, alg)?.add(&eval_expr(b, alg)?),
        Expr::Sub(a, b) => eval_expr(a, alg)?.sub(&eval_expr(b, alg)?),
        Expr::Mul(a, b) => eval_expr(a, alg)?.mul(&eval_expr(b, alg)?),
        Expr::Pow(a, n) => eval_expr(a, alg)?.pow(*n as usize),
        Expr::Nat(_) | Expr::Frac(_, _) => unreachable!(),
    }
}

/// Evaluates an expression over y and scalars to an element of k[y].
pub fn eval_poly(e: &Expr, field: FieldSpec) -> Result<Poly> {
    if let Some(s) = scalar_of(field, e) {
        return Ok(Poly::constant(s?));
    }
    match e {
        Expr::Y => Ok(Poly::gen(field)),
        Expr::X | Expr::S | Expr::T => Err(syntax(
            0,
            "only `y` and scalars are allowed in coefficient polynomials",
        )),
        Expr::Neg(a) => Ok(eval_poly(a, field)?.neg()),
        Expr::Add(a, b) => eval_poly(a, field)?.add(&eval_poly(b, field)?),
        Expr::Sub(a, b) => eval_poly(a, field)?.sub(&eval_poly(b, field)?),
        Expr::Mul(a, b) => eval_poly(a, field)?.mul(&eval_poly(b, field)?),
        Expr::Pow(a, n) => eval_poly(a, field)?.pow(*n as usize),
        Expr::Nat(_) | Expr::Frac(_, _) => unreachable!(),
    }
}

/// Evaluates an expression over s, t, y and scalars to a bivariate
/// polynomial; collapses to scalar mode when no y remains.
pub fn eval_bivar_expr(e: &Expr, field: FieldSpec) -> Result<BivarPoly> {
    fn go(e: &Expr, field: FieldSpec) -> Result<BivarPoly> {
        if let Some(s) = scalar_of(field, e) {
            let mut f = BivarPoly::zero(field, CoeffMode::PolyCoeffs);
            f.add_term(0, 0, Poly::constant(s?))?;
            return Ok(f);
        }
        match e {
            Expr::S => {
                let mut f = BivarPoly::zero(field, CoeffMode::PolyCoeffs);
                f.add_term(1, 0, Poly::one(field))?;
                Ok(f)
            }
            Expr::T => {
                let mut f = BivarPoly::zero(field, CoeffMode::PolyCoeffs);
                f.add_term(0, 1, Poly::one(field))?;
                Ok(f)
            }
            Expr::Y => {
                let mut f = BivarPoly::zero(field, CoeffMode::PolyCoeffs);
                f.add_term(0, 0, Poly::gen(field))?;
                Ok(f)
            }
            Expr::X => Err(syntax(0, "`x` is not allowed in bivariate polynomials")),
            Expr::Neg(a) => Ok(go(a, field)?.neg()),
            Expr::Add(a, b) => go(a, field)?.add(&go(b, field)?),
            Expr::Sub(a, b) => go(a, field)?.sub(&go(b, field)?),
            Expr::Mul(a, b) => go(a, field)?.mul(&go(b, field)?),
            Expr::Pow(a, n) => go(a, field)?.pow(*n as usize),
            Expr::Nat(_) | Expr::Frac(_, _) => unreachable!(),
        }
    }
    Ok(go(e, field)?.collapse_mode())
}
