//! Text syntax for polynomials.
//!
//! ```text
//! expr   := ('+' | '-')? term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' nat)?
//! atom   := int ('/' posint)? | letter | '(' expr ')'
//! ```
//!
//! Multiplication may be implicit (`3x^2y`), every letter is a variable of
//! its own, and division only appears inside rational literals. Printing
//! uses the `Display` impls of the polynomial types, which this grammar
//! reads back unchanged.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{BiPoly, MultiPoly, Rat, UniPoly};

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rat),
    Var(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn variables(&self) -> BTreeSet<char> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<char>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                out.insert(*v);
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Expands the tree over the given variables.
    pub fn to_multi(&self, vars: &[String]) -> MultiPoly {
        match self {
            Expr::Num(c) => MultiPoly::constant(vars, c.clone()),
            Expr::Var(v) => {
                let idx = vars.iter().position(|s| s.starts_with(*v) && s.len() == v.len_utf8());
                MultiPoly::var(vars, idx.expect("variable list covers the expression"))
            }
            Expr::Neg(a) => -&a.to_multi(vars),
            Expr::Add(a, b) => &a.to_multi(vars) + &b.to_multi(vars),
            Expr::Sub(a, b) => &a.to_multi(vars) - &b.to_multi(vars),
            Expr::Mul(a, b) => &a.to_multi(vars) * &b.to_multi(vars),
            Expr::Pow(a, e) => a.to_multi(vars).pow(*e),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err("expected a number");
        }
        self.pos += len;
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                Expr::Neg(Box::new(self.term()?))
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.bump();
            let rhs = Box::new(self.term()?);
            acc = if op == '+' {
                Expr::Add(Box::new(acc), rhs)
            } else {
                Expr::Sub(Box::new(acc), rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(c) if c.is_ascii_digit() || c.is_alphabetic() || c == '(' => {
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let atom = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let e = self.digits()?;
            let Ok(e) = u32::try_from(e) else {
                return self.err("exponent too large");
            };
            return Ok(Expr::Pow(Box::new(atom), e));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                if self.peek() == Some('/') {
                    self.bump();
                    let d = self.digits()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    return Ok(Expr::Num(Rat::new(n, d)));
                }
                Ok(Expr::Num(Rat::from_integer(n)))
            }
            Some(c) if c.is_alphabetic() => {
                self.bump();
                Ok(Expr::Var(c))
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(')') {
                    self.pos = self.pos.min(self.src.len());
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses the text into an expression tree; `pos` in errors is a byte
/// offset.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return p.err(format!("unexpected '{c}'"));
    }
    Ok(e)
}

/// A parsed polynomial: univariate in `t` or bivariate in `x`, `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Bi(BiPoly),
    Uni(UniPoly),
}

fn check_letters(text: &str, e: &Expr, allowed: &[char]) -> Result<()> {
    for v in e.variables() {
        if !allowed.contains(&v) {
            let pos = text.find(v).unwrap_or(0);
            return Err(Error::ParseError {
                pos,
                msg: format!("unknown variable '{v}'"),
            });
        }
    }
    Ok(())
}

fn names(vs: &[char]) -> Vec<String> {
    vs.iter().map(|c| c.to_string()).collect()
}

fn multi_to_bi(m: &MultiPoly) -> BiPoly {
    BiPoly::from_terms(m.terms().map(|(e, c)| ((e[0], e[1]), c.clone())))
}

fn multi_to_uni(m: &MultiPoly) -> UniPoly {
    let deg = m.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (e, c) in m.terms() {
        coeffs[e[0] as usize] += c;
    }
    UniPoly::new(coeffs)
}

/// Parses a polynomial in `t`, or in `x` and `y`.
pub fn parse_expression(text: &str) -> Result<Parsed> {
    let e = parse_expr(text)?;
    check_letters(text, &e, &['x', 'y', 't'])?;
    let vars = e.variables();
    if vars.contains(&'t') {
        if vars.len() > 1 {
            return Err(Error::MixedVariables);
        }
        return Ok(Parsed::Uni(multi_to_uni(&e.to_multi(&names(&['t'])))));
    }
    Ok(Parsed::Bi(multi_to_bi(&e.to_multi(&names(&['x', 'y'])))))
}

pub fn parse_bipoly(text: &str) -> Result<BiPoly> {
    match parse_expression(text)? {
        Parsed::Bi(p) => Ok(p),
        Parsed::Uni(u) if u.is_constant() => Ok(BiPoly::constant(u.coeff(0))),
        Parsed::Uni(_) => Err(Error::MixedVariables),
    }
}

pub fn parse_unipoly(text: &str) -> Result<UniPoly> {
    match parse_expression(text)? {
        Parsed::Uni(u) => Ok(u),
        Parsed::Bi(p) if p.is_constant() => Ok(UniPoly::constant(p.coeff(0, 0))),
        Parsed::Bi(_) => Err(Error::MixedVariables),
    }
}

/// Parses several polynomials over the union of their letters, ordered
/// alphabetically.
pub fn parse_system(texts: &[&str]) -> Result<Vec<MultiPoly>> {
    let exprs: Vec<Expr> = texts.iter().map(|t| parse_expr(t)).collect::<Result<_>>()?;
    let mut letters: BTreeSet<char> = exprs.iter().flat_map(Expr::variables).collect();
    if letters.is_empty() {
        letters.insert('x');
    }
    let vars = names(&letters.into_iter().collect::<Vec<_>>());
    Ok(exprs.iter().map(|e| e.to_multi(&vars)).collect())
}
