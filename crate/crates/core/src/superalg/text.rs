//! Canonical text form of elements and a parser for the expression grammar.
//!
//! Generators: `e[i] f[i] k[i] k-[i] xi+[i,r] xi-[i,r] kap[i,r] g[i] g-[i]
//! g^(1/2) g^(-1/2) sigma[i] c`. Scalars use `q`, `i`, rational literals such
//! as `3/4` or `3/4i`, and `q^(m/2)`. Operators: `+ - * /` (division by
//! scalars only), `^` with integer exponents, `[x,y]`, `[x,y]_(a)`,
//! `Ad(e[i]; x)`, `Ad(f[i]; x)` and `sym(r=1, s=2; expr)`, which sums `expr`
//! over all permutations of the bound values.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::scalars::{GaussRational, Scalar};

use super::algebra::{sym_over, Algebra, AlgebraError};
use super::element::{Element, Monomial};
use super::gens::{Gen, Style};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{name}` at byte {pos}")]
    UnknownGenerator { pos: usize, name: String },
    #[error("at byte {pos}: {source}")]
    Algebra { pos: usize, source: AlgebraError },
}

fn syntax<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Syntax { pos, msg: msg.into() })
}

/// Writes a scalar so that it reads back as a single factor.
pub fn format_scalar_factor(c: &Scalar) -> String {
    let s = c.to_string();
    if c.denominator().is_one() && c.numerator().is_monomial() {
        s
    } else {
        format!("({s})")
    }
}

pub fn format_monomial(m: &Monomial) -> String {
    let mut parts: Vec<String> = (0..32).filter(|i| m.sigma & (1 << i) != 0).map(|i| format!("sigma[{i}]")).collect();
    parts.extend(m.word.iter().map(Gen::to_string));
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Canonical text: terms in increasing graded-lexicographic order joined by
/// ` + `, each written `coeff*monomial` (coefficient omitted when 1).
pub fn format_element(x: &Element) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in x.terms().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        match (c.is_one(), m.is_one()) {
            (true, true) => out.push_str("(1)"),
            (true, false) => out.push_str(&format_monomial(m)),
            (false, true) => out.push_str(&format_scalar_factor(c)),
            (false, false) => {
                let _ = write!(out, "{}*{}", format_scalar_factor(c), format_monomial(m));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    /// Rational literal, optionally imaginary (`3/4i`).
    Num(BigRational, bool),
    Ident(String),
    Punct(char),
    End,
}

struct Lexer;

impl Lexer {
    fn run(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
        let b = src.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < b.len() {
            let ch = b[i] as char;
            if ch.is_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            if ch.is_ascii_digit() {
                let mut j = i;
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                let num: BigInt = src[i..j].parse().expect("digits");
                let mut den = BigInt::one();
                if j + 1 < b.len() && b[j] == b'/' && b[j + 1].is_ascii_digit() {
                    let mut k = j + 1;
                    while k < b.len() && b[k].is_ascii_digit() {
                        k += 1;
                    }
                    den = src[j + 1..k].parse().expect("digits");
                    if den.is_zero() {
                        return syntax(j + 1, "zero denominator");
                    }
                    j = k;
                }
                let imag = j < b.len() && b[j] == b'i' && !(j + 1 < b.len() && (b[j + 1] as char).is_ascii_alphanumeric());
                if imag {
                    j += 1;
                }
                out.push((start, Tok::Num(BigRational::new(num, den), imag)));
                i = j;
            } else if ch.is_ascii_alphabetic() {
                let mut j = i;
                while j < b.len() && (b[j] as char).is_ascii_alphabetic() {
                    j += 1;
                }
                let mut word = src[i..j].to_string();
                let next = b.get(j).copied();
                let after = b.get(j + 1).copied();
                if (word == "k" || word == "g") && next == Some(b'-') && after == Some(b'[') {
                    word.push('-');
                    j += 1;
                } else if word == "xi" && matches!(next, Some(b'+') | Some(b'-')) {
                    word.push(next.unwrap() as char);
                    j += 1;
                }
                out.push((start, Tok::Ident(word)));
                i = j;
            } else if "+-*/^()[],;_=".contains(ch) {
                out.push((start, Tok::Punct(ch)));
                i += 1;
            } else {
                return syntax(start, format!("unexpected character `{ch}`"));
            }
        }
        out.push((src.len(), Tok::End));
        Ok(out)
    }
}

#[derive(Clone, Debug)]
enum Idx {
    Lit(i64),
    Var(String),
}

#[derive(Clone, Debug)]
struct IdxExpr(Vec<(i64, Idx)>);

impl IdxExpr {
    fn eval(&self, env: &HashMap<String, i32>, pos: usize) -> Result<i32, ParseError> {
        let mut total = 0i64;
        for (sign, t) in &self.0 {
            let v = match t {
                Idx::Lit(v) => *v,
                Idx::Var(name) => match env.get(name) {
                    Some(v) => *v as i64,
                    None => return syntax(pos, format!("unbound index `{name}`")),
                },
            };
            total += sign * v;
        }
        i32::try_from(total).or_else(|_| syntax(pos, "index out of range"))
    }
}

#[derive(Clone, Debug)]
enum Ast {
    Num(BigRational, bool),
    Q,
    I,
    Gen { pos: usize, name: String, idx: Vec<IdxExpr> },
    GammaHalfPow(i32),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(usize, Box<Ast>, Box<Ast>),
    Pow(usize, Box<Ast>, BigRational),
    Bracket(usize, Box<Ast>, Box<Ast>, Option<Box<Ast>>),
    Ad(usize, bool, IdxExpr, Box<Ast>),
    Sym(Vec<(String, i32)>, Box<Ast>),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            syntax(self.pos(), format!("expected `{c}`"))
        }
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = if self.eat('-') {
            Ast::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if *self.peek() == Tok::Punct('/') {
                let pos = self.pos();
                self.bump();
                lhs = Ast::Div(pos, Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Ast, ParseError> {
        if self.eat('-') {
            return Ok(Ast::Neg(Box::new(self.factor()?)));
        }
        let base = self.primary()?;
        if *self.peek() == Tok::Punct('^') {
            let pos = self.pos();
            self.bump();
            let e = self.exponent()?;
            return Ok(Ast::Pow(pos, Box::new(base), e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<BigRational, ParseError> {
        let paren = self.eat('(');
        let neg = paren && self.eat('-');
        let pos = self.pos();
        let v = match self.bump() {
            Tok::Num(v, false) => v,
            _ => return syntax(pos, "expected an exponent"),
        };
        if paren {
            self.expect(')')?;
        }
        Ok(if neg { -v } else { v })
    }

    fn int_lit(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat('-');
        let pos = self.pos();
        match self.bump() {
            Tok::Num(v, false) if v.is_integer() => {
                let v = v.to_integer().to_i64().ok_or(ParseError::Syntax { pos, msg: "integer too large".into() })?;
                Ok(if neg { -v } else { v })
            }
            _ => syntax(pos, "expected an integer"),
        }
    }

    fn idx_expr(&mut self) -> Result<IdxExpr, ParseError> {
        let mut parts = Vec::new();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let pos = self.pos();
            match self.bump() {
                Tok::Num(v, false) if v.is_integer() => {
                    parts.push((sign, Idx::Lit(v.to_integer().to_i64().unwrap_or(i64::MAX))));
                }
                Tok::Ident(name) => parts.push((sign, Idx::Var(name))),
                _ => return syntax(pos, "expected an index"),
            }
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(IdxExpr(parts));
            }
        }
    }

    fn gen_indices(&mut self, count: usize) -> Result<Vec<IdxExpr>, ParseError> {
        self.expect('[')?;
        let mut idx = vec![self.idx_expr()?];
        for _ in 1..count {
            self.expect(',')?;
            idx.push(self.idx_expr()?);
        }
        self.expect(']')?;
        Ok(idx)
    }

    fn primary(&mut self) -> Result<Ast, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(v, imag) => Ok(Ast::Num(v, imag)),
            Tok::Punct('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Punct('[') => {
                let x = self.expr()?;
                self.expect(',')?;
                let y = self.expr()?;
                self.expect(']')?;
                let a = if self.eat('_') {
                    self.expect('(')?;
                    let a = self.expr()?;
                    self.expect(')')?;
                    Some(Box::new(a))
                } else {
                    None
                };
                Ok(Ast::Bracket(pos, Box::new(x), Box::new(y), a))
            }
            Tok::Ident(name) => self.ident(pos, name),
            Tok::End => syntax(pos, "unexpected end of input"),
            Tok::Punct(c) => syntax(pos, format!("unexpected `{c}`")),
        }
    }

    fn ident(&mut self, pos: usize, name: String) -> Result<Ast, ParseError> {
        match name.as_str() {
            "q" => Ok(Ast::Q),
            "i" => Ok(Ast::I),
            "c" => Ok(Ast::Gen { pos, name, idx: Vec::new() }),
            "g" if *self.peek() == Tok::Punct('^') => {
                self.bump();
                let e = self.exponent()?;
                let twice = &e * BigRational::from_integer(2.into());
                if !twice.is_integer() {
                    return syntax(pos, "powers of g must be half-integers");
                }
                Ok(Ast::GammaHalfPow(twice.to_integer().to_i32().unwrap_or(0)))
            }
            "e" | "f" | "k" | "k-" | "g" | "g-" | "sigma" => {
                let idx = self.gen_indices(1)?;
                Ok(Ast::Gen { pos, name, idx })
            }
            "xi+" | "xi-" | "kap" => {
                let idx = self.gen_indices(2)?;
                Ok(Ast::Gen { pos, name, idx })
            }
            "Ad" => {
                self.expect('(')?;
                let gpos = self.pos();
                let raise = match self.bump() {
                    Tok::Ident(g) if g == "e" || g == "xi+" => true,
                    Tok::Ident(g) if g == "f" || g == "xi-" => false,
                    _ => return syntax(gpos, "Ad expects e[i], f[i], xi+[i,0] or xi-[i,0]"),
                };
                self.expect('[')?;
                let node = self.idx_expr()?;
                if self.eat(',') {
                    let ipos = self.pos();
                    if self.int_lit()? != 0 {
                        return syntax(ipos, "Ad is only defined for loop index 0");
                    }
                }
                self.expect(']')?;
                self.expect(';')?;
                let x = self.expr()?;
                self.expect(')')?;
                Ok(Ast::Ad(pos, raise, node, Box::new(x)))
            }
            "sym" => {
                self.expect('(')?;
                let mut binds = Vec::new();
                loop {
                    let npos = self.pos();
                    let Tok::Ident(var) = self.bump() else {
                        return syntax(npos, "expected an index name");
                    };
                    self.expect('=')?;
                    let v = self.int_lit()?;
                    binds.push((var, v as i32));
                    if self.eat(';') {
                        break;
                    }
                    self.expect(',')?;
                }
                let body = self.expr()?;
                self.expect(')')?;
                Ok(Ast::Sym(binds, Box::new(body)))
            }
            _ => Err(ParseError::UnknownGenerator { pos, name }),
        }
    }
}

struct Eval<'a> {
    alg: &'a Algebra,
}

impl Eval<'_> {
    fn scalar_of(&self, x: &Element, pos: usize) -> Result<Scalar, ParseError> {
        x.as_scalar().map_or_else(|| syntax(pos, "expected a scalar"), Ok)
    }

    fn algebra_err(pos: usize) -> impl Fn(AlgebraError) -> ParseError {
        move |source| ParseError::Algebra { pos, source }
    }

    fn eval(&self, ast: &Ast, env: &HashMap<String, i32>) -> Result<Element, ParseError> {
        let alg = self.alg;
        Ok(match ast {
            Ast::Num(v, imag) => {
                let z = if *imag {
                    GaussRational::new(BigRational::zero(), v.clone())
                } else {
                    GaussRational::new(v.clone(), BigRational::zero())
                };
                alg.scalar(Scalar::from_gauss(z))
            }
            Ast::Q => alg.scalar(Scalar::q()),
            Ast::I => alg.scalar(Scalar::i()),
            Ast::GammaHalfPow(m) => {
                self.check(&Gen::gamma_half(), 0)?;
                alg.gamma_half_pow(*m)
            }
            Ast::Gen { pos, name, idx } => {
                let vals: Vec<i32> = idx.iter().map(|e| e.eval(env, *pos)).collect::<Result<_, _>>()?;
                let node = |k: usize| -> Result<usize, ParseError> {
                    usize::try_from(vals[k]).or_else(|_| {
                        Err(ParseError::UnknownGenerator { pos: *pos, name: format!("{name}[{}]", vals[k]) })
                    })
                };
                let g = match name.as_str() {
                    "e" => Gen::e(node(0)?),
                    "f" => Gen::f(node(0)?),
                    "k" => Gen::k(node(0)?),
                    "k-" => Gen::k_inv(node(0)?),
                    "g" => Gen::gamma(node(0)?),
                    "g-" => Gen::gamma_inv(node(0)?),
                    "sigma" => Gen::sigma(node(0)?),
                    "xi+" => Gen::xi_plus(node(0)?, vals[1]),
                    "xi-" => Gen::xi_minus(node(0)?, vals[1]),
                    "kap" => Gen::kappa(node(0)?, vals[1]),
                    "c" => Gen::constant(),
                    _ => unreachable!("lexer only produces known generator names"),
                };
                self.check(&g, *pos)?;
                alg.gen(g)
            }
            Ast::Neg(a) => -self.eval(a, env)?,
            Ast::Add(a, b) => self.eval(a, env)? + self.eval(b, env)?,
            Ast::Sub(a, b) => self.eval(a, env)? - self.eval(b, env)?,
            Ast::Mul(a, b) => alg.mul(&self.eval(a, env)?, &self.eval(b, env)?),
            Ast::Div(pos, a, b) => {
                let d = self.scalar_of(&self.eval(b, env)?, *pos)?;
                let Some(inv) = d.inv() else {
                    return syntax(*pos, "division by zero");
                };
                self.eval(a, env)?.scale(&inv)
            }
            Ast::Pow(pos, base, e) => {
                if matches!(**base, Ast::Q) {
                    let twice = e * BigRational::from_integer(2.into());
                    if !twice.is_integer() {
                        return syntax(*pos, "powers of q must be half-integers");
                    }
                    return Ok(alg.scalar(Scalar::q_half_pow(twice.to_integer().to_i32().unwrap_or(0))));
                }
                if !e.is_integer() {
                    return syntax(*pos, "only q and g take fractional exponents");
                }
                let k = e.to_integer().to_i32().unwrap_or(0);
                let x = self.eval(base, env)?;
                match x.as_scalar() {
                    Some(s) if !(s.is_zero() && k < 0) => alg.scalar(s.pow(k)),
                    _ if k >= 0 => alg.pow(&x, k as u32),
                    _ => return syntax(*pos, "negative power of a non-scalar"),
                }
            }
            Ast::Bracket(pos, x, y, a) => {
                let a = match a {
                    Some(a) => self.scalar_of(&self.eval(a, env)?, *pos)?,
                    None => Scalar::one(),
                };
                alg.super_bracket(&self.eval(x, env)?, &self.eval(y, env)?, &a).map_err(Self::algebra_err(*pos))?
            }
            Ast::Ad(pos, raise, node, x) => {
                let i = node.eval(env, *pos)?;
                let i = usize::try_from(i).or_else(|_| syntax(*pos, "negative node"))?;
                let g = match (alg.style(), raise) {
                    (Style::Chevalley, true) => Gen::e(i),
                    (Style::Chevalley, false) => Gen::f(i),
                    (Style::Drinfeld, true) => Gen::xi_plus(i, 0),
                    (Style::Drinfeld, false) => Gen::xi_minus(i, 0),
                };
                self.check(&g, *pos)?;
                let x = self.eval(x, env)?;
                let r = if *raise { alg.ad_e(i, &x) } else { alg.ad_f(i, &x) };
                r.map_err(Self::algebra_err(*pos))?
            }
            Ast::Sym(binds, body) => {
                let values: Vec<i32> = binds.iter().map(|(_, v)| *v).collect();
                let mut err = None;
                let out = sym_over(alg.zero(), &values, |perm| {
                    let mut env2 = env.clone();
                    for ((name, _), v) in binds.iter().zip(perm) {
                        env2.insert(name.clone(), *v);
                    }
                    match self.eval(body, &env2) {
                        Ok(x) => x,
                        Err(e) => {
                            err.get_or_insert(e);
                            alg.zero()
                        }
                    }
                });
                if let Some(e) = err {
                    return Err(e);
                }
                out
            }
        })
    }

    fn check(&self, g: &Gen, pos: usize) -> Result<(), ParseError> {
        self.alg
            .validate_gen(g)
            .map_err(|_| ParseError::UnknownGenerator { pos, name: g.to_string() })
    }
}

/// Parses one expression in the given presentation. The result is
/// σ-normalised but not otherwise reduced.
pub fn parse_element(alg: &Algebra, text: &str) -> Result<Element, ParseError> {
    let toks = Lexer::run(text)?;
    let mut p = Parser { toks, at: 0 };
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return syntax(p.pos(), "trailing input");
    }
    Eval { alg }.eval(&ast, &HashMap::new())
}

/// Parses newline-terminated statements, skipping blank lines and `#`
/// comments.
pub fn parse_statements(alg: &Algebra, text: &str) -> Result<Vec<Element>, ParseError> {
    let mut offset = 0;
    let mut out = Vec::new();
    for line in text.split_inclusive('\n') {
        let body = line.trim();
        if !body.is_empty() && !body.starts_with('#') {
            let x = parse_element(alg, line).map_err(|e| shift(e, offset))?;
            out.push(x);
        }
        offset += line.len();
    }
    Ok(out)
}

fn shift(e: ParseError, by: usize) -> ParseError {
    match e {
        ParseError::Syntax { pos, msg } => ParseError::Syntax { pos: pos + by, msg },
        ParseError::UnknownGenerator { pos, name } => ParseError::UnknownGenerator { pos: pos + by, name },
        ParseError::Algebra { pos, source } => ParseError::Algebra { pos: pos + by, source },
    }
}

/// Parses a scalar expression (no generators).
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let alg = Algebra::new(crate::cartan::Family::Osp1, 1, Style::Chevalley, false)
        .expect("rank one datum exists");
    let x = parse_element(&alg, text)?;
    x.as_scalar().map_or_else(|| syntax(0, "expected a scalar"), Ok)
}
