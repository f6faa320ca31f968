//! Algebraic relations satisfied by the four rank generating functions.
//!
//! The relations ship as plain-text transcriptions under `data/relations/`,
//! one polynomial expression in `x`, `y`, `q` and the series `G`, implicitly
//! equated to zero. [`Relation::parse`] reads that notation: integers,
//! the four variables, `+`, `-`, `^` with integer exponents, parentheses and
//! juxtaposition for multiplication.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::genfun::{self, GFKind};
use crate::ring::{rat, BivarPoly};
use crate::series::TruncSeries;

const PLABIC_TREE: &str = include_str!("../data/relations/plabic_tree.txt");
const PLABIC_FOREST: &str = include_str!("../data/relations/plabic_forest.txt");
const GRASS_TREE: &str = include_str!("../data/relations/grass_tree.txt");
const GRASS_FOREST: &str = include_str!("../data/relations/grass_forest.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Int(i64),
    X,
    Y,
    Q,
    G,
    Neg(Box<Expr>),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
}

/// A parsed relation `0 = P(x, y, q, G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    expr: Expr,
    degree: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Token {
    Int(i64),
    Var(char),
    Plus,
    Minus,
    Caret,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: i64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as i64))
                        .ok_or_else(|| Error::RelationParse("integer literal too large".into()))?;
                    chars.next();
                }
                out.push(Token::Int(v));
            }
            'x' | 'y' | 'q' | 'G' => {
                out.push(Token::Var(c));
                chars.next();
            }
            '+' | '-' | '^' | '(' | ')' => {
                out.push(match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    _ => Token::Close,
                });
                chars.next();
            }
            other => {
                return Err(Error::RelationParse(format!(
                    "unexpected character `{other}`"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    false
                }
                Some(Token::Minus) => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            terms.push(if negative { Expr::Neg(Box::new(t)) } else { t });
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        while matches!(
            self.peek(),
            Some(Token::Int(_) | Token::Var(_) | Token::Open)
        ) {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = match self.bump() {
            Some(Token::Int(v)) => Expr::Int(v),
            Some(Token::Var('x')) => Expr::X,
            Some(Token::Var('y')) => Expr::Y,
            Some(Token::Var('q')) => Expr::Q,
            Some(Token::Var(_)) => Expr::G,
            Some(Token::Open) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Token::Close) => e,
                    _ => return Err(Error::RelationParse("unbalanced parenthesis".into())),
                }
            }
            other => return Err(Error::RelationParse(format!("unexpected token {other:?}"))),
        };
        if self.peek() == Some(Token::Caret) {
            self.bump();
            match self.bump() {
                Some(Token::Int(e)) => {
                    let e = u32::try_from(e)
                        .map_err(|_| Error::RelationParse("exponent too large".into()))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return Err(Error::RelationParse("exponent must be an integer".into())),
            }
        }
        Ok(base)
    }
}

fn g_degree(e: &Expr) -> u32 {
    match e {
        Expr::G => 1,
        Expr::Int(_) | Expr::X | Expr::Y | Expr::Q => 0,
        Expr::Neg(a) => g_degree(a),
        Expr::Sum(v) => v.iter().map(g_degree).max().unwrap_or(0),
        Expr::Product(v) => v.iter().map(g_degree).sum(),
        Expr::Pow(a, k) => g_degree(a) * k,
    }
}

impl Relation {
    pub fn parse(src: &str) -> Result<Self> {
        let mut parser = Parser {
            tokens: tokenize(src)?,
            pos: 0,
        };
        if parser.tokens.is_empty() {
            return Err(Error::RelationParse("empty relation".into()));
        }
        let expr = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::RelationParse(format!(
                "trailing input at token {}",
                parser.pos
            )));
        }
        let degree = g_degree(&expr);
        Ok(Relation { expr, degree })
    }

    /// The shipped relation for `kind`.
    pub fn for_kind(kind: GFKind) -> Self {
        let src = match kind {
            GFKind::PlabicTree => PLABIC_TREE,
            GFKind::PlabicForest => PLABIC_FOREST,
            GFKind::GrassTree => GRASS_TREE,
            GFKind::GrassForest => GRASS_FOREST,
        };
        Relation::parse(src).expect("shipped relation data parses")
    }

    /// Degree in the series variable `G`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `P(x, y, q, G)` with `G := series`, truncated at the series order.
    pub fn evaluate(&self, series: &TruncSeries) -> TruncSeries {
        eval(&self.expr, series)
    }
}

fn eval(e: &Expr, g: &TruncSeries) -> TruncSeries {
    let order = g.order();
    match e {
        Expr::Int(v) => TruncSeries::constant(order, BivarPoly::from_int(*v)),
        Expr::X => TruncSeries::x(order),
        Expr::Y => TruncSeries::constant(order, BivarPoly::y()),
        Expr::Q => TruncSeries::constant(order, BivarPoly::q()),
        Expr::G => g.clone(),
        Expr::Neg(a) => -&eval(a, g),
        Expr::Sum(v) => v
            .iter()
            .fold(TruncSeries::zero(order), |acc, t| &acc + &eval(t, g)),
        Expr::Product(v) => v
            .iter()
            .fold(TruncSeries::one(order), |acc, t| acc.mul(&eval(t, g))),
        Expr::Pow(a, k) => eval(a, g).pow(*k),
    }
}

/// Outcome of substituting a series into a relation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub kind: GFKind,
    pub order: usize,
    pub degree: u32,
    /// First `(n, [x^n] residual)` that is nonzero.
    pub first_nonzero: Option<(usize, String)>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.first_nonzero.is_none()
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_nonzero {
            None => write!(
                f,
                "{}: degree-{} relation holds through x^{}",
                self.kind, self.degree, self.order
            ),
            Some((n, c)) => write!(
                f,
                "{}: degree-{} relation fails, residual [x^{n}] = {c}",
                self.kind, self.degree
            ),
        }
    }
}

/// Substitutes `series` into the relation for `kind`.
pub fn check_series(kind: GFKind, series: &TruncSeries) -> RelationReport {
    let relation = Relation::for_kind(kind);
    let residual = relation.evaluate(series);
    let first_nonzero = residual
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_zero())
        .map(|(n, c)| (n, c.to_string()));
    RelationReport {
        kind,
        order: series.order(),
        degree: relation.degree(),
        first_nonzero,
    }
}

/// Builds the series for `kind` at `order` and checks its relation.
pub fn verify_algebraic_relation(kind: GFKind, order: usize) -> Result<RelationReport> {
    let series = genfun::build(kind, order)?;
    Ok(check_series(kind, &series))
}

/// The series for `kind` with `x^3` added, which no relation should accept.
pub fn perturbed(kind: GFKind, order: usize) -> Result<TruncSeries> {
    let mut s = genfun::build(kind, order)?;
    s.add_monomial(3, &BivarPoly::constant(rat(1)));
    Ok(s)
}
