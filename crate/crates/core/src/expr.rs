//! Element expressions such as `2*R1*T2^3 + q*e[(1,2)]`.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := '-'? scalar? factor ('*' factor)*
//! scalar := integer ('/' integer)? | 'q' | 't' | 'a'     (followed by '*')
//! factor := 'T' j ('^' k)? | 'R' i | 'E' i | 'e[' charindex ']'
//! ```
//!
//! Whitespace is ignored; `·` is accepted for `*`. Positions in errors are
//! character offsets into the input.

use crate::characters::CharIndex;
use crate::error::{Error, Result};
use crate::hecke::{Generator, HeckeAlgebra, HeckeElem};
use crate::scalars::RatFn;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Int(i64, i64),
    Q,
    T,
    A,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    T(usize, i64),
    R(usize),
    E(usize),
    Idem(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub negate: bool,
    pub scalar: Option<Scalar>,
    /// Factors with their source positions.
    pub factors: Vec<(usize, Factor)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
}

impl Lexer {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.chars.get(self.pos) == Some(&'-');
        if neg {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        match s.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("expected an integer")
            }
        }
    }

    fn star(&mut self) -> bool {
        self.eat('*') || self.eat('·')
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut lx = Lexer {
        chars: s.chars().collect(),
        pos: 0,
    };
    let mut terms = vec![parse_term(&mut lx)?];
    while lx.eat('+') {
        terms.push(parse_term(&mut lx)?);
    }
    if lx.peek().is_some() {
        return lx.err("expected '+' or end of input");
    }
    Ok(Expr { terms })
}

fn parse_term(lx: &mut Lexer) -> Result<Term> {
    let negate = lx.eat('-');
    let scalar = match lx.peek() {
        Some(c) if c.is_ascii_digit() => {
            let num = lx.number()?;
            let den = if lx.eat('/') { lx.number()? } else { 1 };
            if den == 0 {
                return lx.err("zero denominator");
            }
            Some(Scalar::Int(num, den))
        }
        Some('q') => Some(Scalar::Q),
        Some('t') => Some(Scalar::T),
        Some('a') => Some(Scalar::A),
        _ => None,
    };
    if matches!(scalar, Some(Scalar::Q | Scalar::T | Scalar::A)) {
        lx.pos += 1;
    }
    let mut factors = Vec::new();
    if scalar.is_some() && !lx.star() {
        // a bare scalar term
        return Ok(Term {
            negate,
            scalar,
            factors,
        });
    }
    factors.push(parse_factor(lx)?);
    while lx.star() {
        factors.push(parse_factor(lx)?);
    }
    Ok(Term {
        negate,
        scalar,
        factors,
    })
}

fn parse_factor(lx: &mut Lexer) -> Result<(usize, Factor)> {
    let start = {
        lx.skip_ws();
        lx.pos
    };
    let index = |lx: &mut Lexer| -> Result<usize> {
        let at = lx.pos;
        let v = lx.number()?;
        if v < 1 {
            lx.pos = at;
            return lx.err("indices start at 1");
        }
        Ok(v as usize)
    };
    let f = match lx.peek() {
        Some('T') => {
            lx.pos += 1;
            let j = index(lx)?;
            let k = if lx.eat('^') { lx.number()? } else { 1 };
            Factor::T(j, k)
        }
        Some('R') => {
            lx.pos += 1;
            Factor::R(index(lx)?)
        }
        Some('E') => {
            lx.pos += 1;
            Factor::E(index(lx)?)
        }
        Some('e') => {
            lx.pos += 1;
            if !lx.eat('[') {
                return lx.err("expected '[' after 'e'");
            }
            let from = lx.pos;
            while lx.chars.get(lx.pos).is_some_and(|&c| c != ']') {
                lx.pos += 1;
            }
            if lx.chars.get(lx.pos) != Some(&']') {
                return lx.err("unterminated 'e['");
            }
            let body: String = lx.chars[from..lx.pos].iter().collect();
            lx.pos += 1;
            Factor::Idem(body)
        }
        _ => return lx.err("expected T, R, E or e[…]"),
    };
    Ok((start, f))
}

impl Expr {
    /// Evaluates in ℋ_{b,n} over Q(ζ_b)(q,t).
    pub fn eval(&self, alg: &HeckeAlgebra<RatFn>) -> Result<HeckeElem<RatFn>> {
        let mut total = alg.zero();
        for term in &self.terms {
            let mut h = alg.one();
            for (pos, f) in &term.factors {
                let at = |e: Error| Error::ParseError {
                    pos: *pos,
                    msg: e.to_string(),
                };
                let g = match f {
                    Factor::T(j, k) => alg.generator(Generator::TPower(*j, *k)),
                    Factor::R(i) => alg.generator(Generator::R(*i)),
                    Factor::E(i) => alg.generator(Generator::E(*i)),
                    Factor::Idem(body) => CharIndex::parse(body, alg.b()).and_then(|chi| {
                        if chi.n() != alg.n() {
                            Err(Error::DimensionMismatch(format!(
                                "character index of length {} with n = {}",
                                chi.n(),
                                alg.n()
                            )))
                        } else {
                            Ok(alg.idempotent(&chi))
                        }
                    }),
                }
                .map_err(at)?;
                h = alg.mul(&h, &g);
            }
            let mut c = match &term.scalar {
                None => RatFn::one(),
                Some(Scalar::Int(p, d)) => RatFn::from_int(*p).div(&RatFn::from_int(*d))?,
                Some(Scalar::Q) => alg.q().clone(),
                Some(Scalar::T) => RatFn::t(),
                Some(Scalar::A) => alg.a().clone(),
            };
            if term.negate {
                c = c.neg();
            }
            total = total.add(&h.scale(&c));
        }
        Ok(total)
    }
}

/// Parses and evaluates; the result is printed with q and a as labels.
pub fn eval_expr(s: &str, alg: &HeckeAlgebra<RatFn>) -> Result<HeckeElem<RatFn>> {
    parse_expr(s)?.eval(alg)
}

pub fn format_result(alg: &HeckeAlgebra<RatFn>, h: &HeckeElem<RatFn>) -> String {
    alg.format_elem(h, &[("q", alg.q().clone()), ("a", alg.a().clone())])
}
