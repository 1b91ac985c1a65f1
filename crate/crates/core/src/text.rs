//! Text grammar for scalars and forms, and the JSON matrix format.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := "-" unary | power
//! power := atom ("^" integer)?
//! atom  := integer | name | "e(" int "," int ")" | "(" expr ")"
//! ```
//!
//! Names are the variables `x y z t` (the first `n` of them) and the
//! constants `i`, `w`, `sqrt2`, `sqrt3`, `sqrt5`, `sqrtm7`. Juxtaposition
//! is not multiplication.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::{context, known_constant, Constant, Cyc, CycContext, Field};
use crate::forms::{variable_names, Form, Monomial, SquareMatrix, MAX_VARS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Num(BigInt),
    Symbol(String),
    Add(Box<ParseTree>, Box<ParseTree>),
    Mul(Box<ParseTree>, Box<ParseTree>),
    Div(Box<ParseTree>, Box<ParseTree>),
    Pow(Box<ParseTree>, u32),
    Neg(Box<ParseTree>),
    /// `e(N,k)`.
    Call(u32, i64),
}

/// Parse tree node with the byte offset where it starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseTree {
    pub pos: usize,
    pub node: Node,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v: BigInt = text[start..i].parse().expect("digits");
            out.push((start, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^(),".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::parse(i, format!("unexpected character `{c}`")));
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
        self.toks.get(self.i).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<()> {
        if self.eat(op) {
            Ok(())
        } else {
            Err(Error::parse(self.pos(), format!("expected `{op}`")))
        }
    }

    fn expr(&mut self) -> Result<ParseTree> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.pos();
            if self.eat('+') {
                let rhs = self.term()?;
                lhs = ParseTree {
                    pos: lhs.pos,
                    node: Node::Add(Box::new(lhs), Box::new(rhs)),
                };
            } else if self.eat('-') {
                let rhs = self.term()?;
                let neg = ParseTree {
                    pos,
                    node: Node::Neg(Box::new(rhs)),
                };
                lhs = ParseTree {
                    pos: lhs.pos,
                    node: Node::Add(Box::new(lhs), Box::new(neg)),
                };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<ParseTree> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                lhs = ParseTree {
                    pos: lhs.pos,
                    node: Node::Mul(Box::new(lhs), Box::new(rhs)),
                };
            } else if self.eat('/') {
                let rhs = self.unary()?;
                lhs = ParseTree {
                    pos: lhs.pos,
                    node: Node::Div(Box::new(lhs), Box::new(rhs)),
                };
            } else {
                match self.peek() {
                    Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')) => {
                        return Err(Error::parse(
                            self.pos(),
                            "missing operator (implicit multiplication is not allowed)",
                        ))
                    }
                    _ => return Ok(lhs),
                }
            }
        }
    }

    fn unary(&mut self) -> Result<ParseTree> {
        let pos = self.pos();
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(ParseTree {
                pos,
                node: Node::Neg(Box::new(inner)),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<ParseTree> {
        let base = self.atom()?;
        if self.eat('^') {
            let pos = self.pos();
            match self.peek().cloned() {
                Some(Tok::Int(v)) => {
                    self.i += 1;
                    let e: u32 = v.try_into().map_err(|_| Error::parse(pos, "exponent too large"))?;
                    return Ok(ParseTree {
                        pos: base.pos,
                        node: Node::Pow(Box::new(base), e),
                    });
                }
                _ => return Err(Error::parse(pos, "exponent must be a non-negative integer")),
            }
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<BigInt> {
        let neg = self.eat('-');
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.i += 1;
                Ok(if neg { -v } else { v })
            }
            _ => Err(Error::parse(pos, "expected an integer")),
        }
    }

    fn atom(&mut self) -> Result<ParseTree> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.i += 1;
                Ok(ParseTree {
                    pos,
                    node: Node::Num(v),
                })
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                if name == "e" && self.peek() == Some(&Tok::Op('(')) {
                    self.i += 1;
                    let npos = self.pos();
                    let n = self.signed_int()?;
                    let n: u32 = n
                        .try_into()
                        .ok()
                        .filter(|&n: &u32| n > 0)
                        .ok_or_else(|| Error::parse(npos, "conductor must be a positive integer"))?;
                    self.expect(',')?;
                    let kpos = self.pos();
                    let k: i64 = self
                        .signed_int()?
                        .try_into()
                        .map_err(|_| Error::parse(kpos, "exponent out of range"))?;
                    self.expect(')')?;
                    return Ok(ParseTree {
                        pos,
                        node: Node::Call(n, k),
                    });
                }
                Ok(ParseTree {
                    pos,
                    node: Node::Symbol(name),
                })
            }
            Some(Tok::Op('(')) => {
                self.i += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(Tok::Op(c)) => Err(Error::parse(pos, format!("unexpected `{c}`"))),
            None => Err(Error::parse(pos, "unexpected end of input")),
        }
    }
}

/// Parses text into a tree without interpreting names.
pub fn parse_tree(text: &str) -> Result<ParseTree> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        i: 0,
        end: text.len(),
    };
    let tree = p.expr()?;
    if p.i != p.toks.len() {
        return Err(Error::parse(p.pos(), "unexpected trailing input"));
    }
    Ok(tree)
}

/// Polynomial with possibly mixed degrees, used while evaluating a tree.
type Poly = BTreeMap<Monomial, Cyc>;

struct Evaluator<'a> {
    ctx: &'a CycContext,
    n: usize,
    vars: &'a [&'a str],
}

impl Evaluator<'_> {
    fn constant(&self, c: Cyc) -> Poly {
        let mut p = Poly::new();
        if !c.is_zero() {
            p.insert(Monomial::one(self.n), c);
        }
        p
    }

    fn as_scalar(&self, p: &Poly, pos: usize) -> Result<Cyc> {
        match p.len() {
            0 => Ok(Cyc::zero_in(self.ctx)),
            1 => {
                let (m, c) = p.iter().next().expect("one term");
                if m.degree() == 0 {
                    Ok(c.clone())
                } else {
                    Err(Error::parse(pos, "expected a constant expression"))
                }
            }
            _ => Err(Error::parse(pos, "expected a constant expression")),
        }
    }

    fn add(a: &mut Poly, b: Poly) {
        for (m, c) in b {
            let s = match a.remove(&m) {
                Some(v) => v + &c,
                None => c,
            };
            if !s.is_zero() {
                a.insert(m, s);
            }
        }
    }

    fn mul(a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let mut t = Poly::new();
                t.insert(ma.mul(mb), ca.clone() * cb);
                Self::add(&mut out, t);
            }
        }
        out
    }

    fn eval(&self, t: &ParseTree) -> Result<Poly> {
        match &t.node {
            Node::Num(v) => Ok(self.constant(Cyc::rational(self.ctx, &BigRational::from_integer(v.clone())))),
            Node::Symbol(name) => {
                if let Some(i) = self.vars.iter().position(|v| v == name) {
                    let mut p = Poly::new();
                    p.insert(Monomial::variable(self.n, i), Cyc::one_in(self.ctx));
                    return Ok(p);
                }
                match Constant::from_name(name) {
                    Some(c) => {
                        let v = known_constant(c, self.ctx).map_err(|e| Error::parse(t.pos, e.to_string()))?;
                        Ok(self.constant(v))
                    }
                    None => Err(Error::parse(t.pos, format!("unknown name `{name}`"))),
                }
            }
            Node::Call(n, k) => {
                let n = *n;
                if !self.ctx.conductor().is_multiple_of(n) {
                    return Err(Error::parse(
                        t.pos,
                        format!(
                            "e({n},{k}) needs a conductor divisible by {n}, got {}",
                            self.ctx.conductor()
                        ),
                    ));
                }
                let small = context(n).map_err(|e| Error::parse(t.pos, e.to_string()))?;
                let z = Cyc::zeta(&small, *k).embed(self.ctx)?;
                Ok(self.constant(z))
            }
            Node::Add(a, b) => {
                let mut p = self.eval(a)?;
                Self::add(&mut p, self.eval(b)?);
                Ok(p)
            }
            Node::Mul(a, b) => Ok(Self::mul(&self.eval(a)?, &self.eval(b)?)),
            Node::Div(a, b) => {
                let num = self.eval(a)?;
                let den = self.as_scalar(&self.eval(b)?, b.pos)?;
                let inv = den.inverse().ok_or_else(|| Error::parse(b.pos, "division by zero"))?;
                Ok(num.into_iter().map(|(m, c)| (m, c * &inv)).collect())
            }
            Node::Pow(a, e) => {
                let base = self.eval(a)?;
                let mut acc = self.constant(Cyc::one_in(self.ctx));
                for _ in 0..*e {
                    acc = Self::mul(&acc, &base);
                }
                Ok(acc)
            }
            Node::Neg(a) => Ok(self.eval(a)?.into_iter().map(|(m, c)| (m, -c)).collect()),
        }
    }
}

/// Parses a scalar in `Q(zeta_N)`.
pub fn parse_scalar(text: &str, conductor: u32) -> Result<Cyc> {
    let ctx = context(conductor)?;
    let tree = parse_tree(text)?;
    let ev = Evaluator {
        ctx: &ctx,
        n: 1,
        vars: &[],
    };
    let p = ev.eval(&tree)?;
    ev.as_scalar(&p, tree.pos)
}

/// Parses a homogeneous form in `n` variables over `Q(zeta_N)`.
pub fn parse_form(text: &str, n: usize, conductor: u32) -> Result<Form<Cyc>> {
    if !(1..=MAX_VARS).contains(&n) {
        return Err(Error::InvalidInput(format!("unsupported number of variables {n}")));
    }
    let ctx = context(conductor)?;
    let tree = parse_tree(text)?;
    let ev = Evaluator {
        ctx: &ctx,
        n,
        vars: variable_names(n),
    };
    let p = ev.eval(&tree)?;
    let mut degrees = p.keys().map(|m| m.degree());
    if let Some(d0) = degrees.next() {
        if degrees.any(|d| d != d0) {
            return Err(Error::parse(tree.pos, "form is not homogeneous"));
        }
    }
    let terms: Vec<(Vec<u16>, Cyc)> = p.into_iter().map(|(m, c)| (m.exps().to_vec(), c)).collect();
    Form::from_terms(n, &ctx, terms.iter().map(|(e, c)| (e.as_slice(), c.clone())))
}

/// Parses a matrix given as JSON, either `{"n":..,"conductor":..,"entries":[[..]]}`
/// or a bare array of rows. Entries are scalar texts or integers. A
/// `conductor` field is merged with `conductor` by least common multiple.
pub fn parse_matrix(text: &str, conductor: u32) -> Result<SquareMatrix<Cyc>> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        pos: e.column().saturating_sub(1),
        msg: e.to_string(),
    })?;
    let (rows, n, cond) = match &v {
        serde_json::Value::Array(rows) => (rows, None, conductor),
        serde_json::Value::Object(o) => {
            let rows = o
                .get("entries")
                .and_then(|e| e.as_array())
                .ok_or_else(|| Error::InvalidInput("matrix object needs an `entries` array".into()))?;
            let n = match o.get("n") {
                Some(n) => Some(
                    n.as_u64()
                        .ok_or_else(|| Error::InvalidInput("`n` must be a positive integer".into()))?,
                ),
                None => None,
            };
            let cond = match o.get("conductor") {
                Some(c) => {
                    let c = c
                        .as_u64()
                        .filter(|&c| c >= 1 && c <= u32::MAX as u64)
                        .ok_or_else(|| Error::InvalidInput("`conductor` must be a positive integer".into()))?;
                    num_integer::lcm(conductor, c as u32)
                }
                None => conductor,
            };
            (rows, n, cond)
        }
        _ => return Err(Error::InvalidInput("matrix must be a JSON array or object".into())),
    };
    if let Some(n) = n {
        if n as usize != rows.len() {
            return Err(Error::DimensionMismatch(format!(
                "`n` is {n} but there are {} rows",
                rows.len()
            )));
        }
    }
    let entries = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::InvalidInput("each row must be an array".into()))?
                .iter()
                .map(|x| match x {
                    serde_json::Value::String(t) => parse_scalar(t, cond),
                    serde_json::Value::Number(k) => parse_scalar(&k.to_string(), cond),
                    _ => Err(Error::InvalidInput("entries must be strings or integers".into())),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SquareMatrix::from_rows(entries)
}

/// The JSON object accepted by [`parse_matrix`].
pub fn matrix_json(m: &SquareMatrix<Cyc>) -> serde_json::Value {
    let entries: Vec<Vec<String>> = m
        .rows()
        .into_iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect();
    serde_json::json!({
        "n": m.dim(),
        "conductor": m.context().conductor(),
        "entries": entries,
    })
}
