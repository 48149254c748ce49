//! Text syntax for algebra elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (factor | '*' factor | '/' factor)*
//! factor := atom ['^' ['-'] nat]
//! atom   := symbol | nat | '(' expr ')'
//! ```
//!
//! Juxtaposition is the (noncommutative) product. Symbols are the
//! generators `a b c d`, the variable `t` (with `q` for `t^2`), and the
//! parameter symbols `mu nu chip chim sqrtD`, which need parameters at
//! evaluation. Division and negative powers are only allowed on
//! subexpressions free of generators. A run of generator letters such as
//! `da` reads as the product `d a`.

use std::fmt;

use num_bigint::BigInt;

use crate::coisotropic::Params;
use crate::error::{Error, Result};
use crate::pbw::{AlgebraElement, Generator};
use crate::scalar::{Coeff, Quadratic};
use crate::Rational;

type Sc = Quadratic<Rational>;
type El = AlgebraElement<Sc>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Gen(Generator),
    T,
    Q,
    SqrtD,
    Mu,
    Nu,
    ChiPlus,
    ChiMinus,
}

impl Symbol {
    fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "t" => Symbol::T,
            "q" => Symbol::Q,
            "sqrtD" => Symbol::SqrtD,
            "mu" => Symbol::Mu,
            "nu" => Symbol::Nu,
            "chip" => Symbol::ChiPlus,
            "chim" => Symbol::ChiMinus,
            _ => {
                let mut chars = name.chars();
                let g = Generator::from_symbol(chars.next()?)?;
                if chars.next().is_some() {
                    return None;
                }
                Symbol::Gen(g)
            }
        })
    }

    fn name(self) -> String {
        match self {
            Symbol::Gen(g) => g.symbol().to_string(),
            Symbol::T => "t".into(),
            Symbol::Q => "q".into(),
            Symbol::SqrtD => "sqrtD".into(),
            Symbol::Mu => "mu".into(),
            Symbol::Nu => "nu".into(),
            Symbol::ChiPlus => "chip".into(),
            Symbol::ChiMinus => "chim".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Sym(Symbol),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    /// Whether a generator occurs anywhere.
    pub fn has_generator(&self) -> bool {
        match self {
            Expr::Int(_) => false,
            Expr::Sym(s) => matches!(s, Symbol::Gen(_)),
            Expr::Neg(x) | Expr::Pow(x, _) => x.has_generator(),
            Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) | Expr::Div(x, y) => x.has_generator() || y.has_generator(),
        }
    }

    pub fn eval(&self, params: Option<&Params<Sc>>) -> Result<El> {
        let param = |name: &str, pick: fn(&Params<Sc>) -> Sc| {
            params.map(|p| El::scalar(pick(p))).ok_or_else(|| Error::Domain(format!("symbol `{name}` needs a parameter preset")))
        };
        Ok(match self {
            Expr::Int(n) => El::scalar(Sc::from_base(Rational::from_integer(n.clone()))),
            Expr::Sym(s) => match s {
                Symbol::Gen(g) => El::generator(*g),
                Symbol::T => El::scalar(Sc::t_pow(1)),
                Symbol::Q => El::scalar(Sc::q_pow(1)),
                Symbol::Mu => param("mu", |p| p.mu.clone())?,
                Symbol::Nu => param("nu", |p| p.nu.clone())?,
                Symbol::ChiPlus => param("chip", |p| p.chi_plus.clone())?,
                Symbol::ChiMinus => param("chim", |p| p.chi_minus.clone())?,
                Symbol::SqrtD => param("sqrtD", |p| {
                    let half = Sc::from_i64(2).inv().expect("2 invertible");
                    (p.chi_plus.clone() - p.chi_minus.clone()) * &half
                })?,
            },
            Expr::Neg(x) => -&x.eval(params)?,
            Expr::Add(x, y) => &x.eval(params)? + &y.eval(params)?,
            Expr::Sub(x, y) => &x.eval(params)? - &y.eval(params)?,
            Expr::Mul(x, y) => x.eval(params)?.multiply(&y.eval(params)?),
            Expr::Div(x, y) => {
                let den = y.eval(params)?.as_scalar().ok_or_else(|| Error::Domain("division by a non-scalar".into()))?;
                let inv = den.inv().ok_or(Error::DivisionByZero)?;
                x.eval(params)?.scale(&inv)
            }
            Expr::Pow(x, n) => {
                let base = x.eval(params)?;
                if *n >= 0 {
                    base.pow(*n as u32)
                } else {
                    let s = base.as_scalar().ok_or_else(|| Error::Domain("negative power of a non-scalar".into()))?;
                    El::scalar(s.inv().ok_or(Error::DivisionByZero)?.pow(n.unsigned_abs() as u32))
                }
            }
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Sym(s) => write!(f, "{}", s.name()),
            Expr::Neg(x) => write!(f, "-({x})"),
            Expr::Add(x, y) => write!(f, "({x} + {y})"),
            Expr::Sub(x, y) => write!(f, "({x} - {y})"),
            Expr::Mul(x, y) => write!(f, "({x} * {y})"),
            Expr::Div(x, y) => write!(f, "({x} / {y})"),
            Expr::Pow(x, n) => write!(f, "({x})^{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
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
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, ch) = bytes[i];
        if ch.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match ch {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((pos, t));
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = bytes[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Int(text.parse().expect("digits"))));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            let text: String = bytes[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Ident(text)));
        } else {
            return Err(syntax(pos, format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|(_, t)| t.clone());
        self.i += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.pos();
                    let den = self.factor()?;
                    if den.has_generator() {
                        return Err(Error::Domain(format!("division by a non-scalar at position {pos}")));
                    }
                    lhs = Expr::Div(Box::new(lhs), Box::new(den));
                }
                _ if self.starts_atom() => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.pos();
        let n = match self.bump() {
            Some(Tok::Int(n)) => i64::try_from(n).map_err(|_| syntax(pos, "exponent too large"))?,
            _ => return Err(syntax(pos, "expected an integer exponent")),
        };
        if neg && base.has_generator() {
            return Err(Error::Domain(format!("negative exponent on a generator at position {pos}")));
        }
        Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }))
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Expr::Int(n)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(syntax(self.toks.get(self.i - 1).map_or(self.end, |(p, _)| *p), "expected `)`")),
                }
            }
            Some(Tok::Ident(name)) => {
                if let Some(s) = Symbol::parse(&name) {
                    return Ok(Expr::Sym(s));
                }
                if !name.is_empty() && name.chars().all(|c| Generator::from_symbol(c).is_some()) {
                    let mut letters = name.chars().map(|c| Expr::Sym(Symbol::Gen(Generator::from_symbol(c).unwrap())));
                    let first = letters.next().unwrap();
                    return Ok(letters.fold(first, |acc, x| Expr::Mul(Box::new(acc), Box::new(x))));
                }
                Err(syntax(pos, format!("unknown symbol `{name}`")))
            }
            Some(t) => Err(syntax(pos, format!("unexpected token {t:?}"))),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

pub fn parse_expression(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser { toks, i: 0, end: src.len() };
    let e = p.expr()?;
    if p.i < p.toks.len() {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and evaluates to a normal-form element.
pub fn parse_element(src: &str, params: Option<&Params<Sc>>) -> Result<El> {
    parse_expression(src)?.eval(params)
}
