use std::fmt;
use std::str::FromStr;

use crate::boolean::{Assignment, Literal, Var};
use crate::error::{Error, Result};

/// Expression tree over literals with binary AND/OR/XOR and unary NOT.
///
/// Text form: `x3`, `!x3`, `0`, `1`, `!(e)`, `(a & b)`, `(a | b)`, `(a ^ b)`.
/// Binding strength when parsing is `!` > `&` > `^` > `|`, binary operators
/// associate to the left. [`fmt::Display`] always parenthesizes, and
/// `parse(display(e)) == e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(bool),
    Lit(Literal),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Xor(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn var(index: usize) -> Self {
        Expr::Lit(Literal::pos(index))
    }

    pub fn not_var(index: usize) -> Self {
        Expr::Lit(Literal::neg(index))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: Expr) -> Self {
        Expr::Not(Box::new(e))
    }

    pub fn and(a: Expr, b: Expr) -> Self {
        Expr::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Expr, b: Expr) -> Self {
        Expr::Or(Box::new(a), Box::new(b))
    }

    pub fn xor(a: Expr, b: Expr) -> Self {
        Expr::Xor(Box::new(a), Box::new(b))
    }

    pub fn node_count(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Lit(_) => 1,
            Expr::Not(e) => 1 + e.node_count(),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Xor(a, b) => 1 + a.node_count() + b.node_count(),
        }
    }

    pub fn max_var(&self) -> usize {
        match self {
            Expr::Const(_) => 0,
            Expr::Lit(l) => l.var.index(),
            Expr::Not(e) => e.max_var(),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Xor(a, b) => a.max_var().max(b.max_var()),
        }
    }

    /// Whether `x_i` occurs anywhere in the tree.
    pub fn mentions(&self, var: Var) -> bool {
        match self {
            Expr::Const(_) => false,
            Expr::Lit(l) => l.var == var,
            Expr::Not(e) => e.mentions(var),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Xor(a, b) => a.mentions(var) || b.mentions(var),
        }
    }

    pub fn eval(&self, asg: &Assignment) -> Result<bool> {
        Ok(match self {
            Expr::Const(c) => *c,
            Expr::Lit(l) => l.eval(asg)?,
            Expr::Not(e) => !e.eval(asg)?,
            Expr::And(a, b) => a.eval(asg)? & b.eval(asg)?,
            Expr::Or(a, b) => a.eval(asg)? | b.eval(asg)?,
            Expr::Xor(a, b) => a.eval(asg)? ^ b.eval(asg)?,
        })
    }

    /// Evaluation on an integer-encoded `n`-variable assignment. Variables
    /// must already be checked against `n`.
    pub(crate) fn eval_index(&self, index: u64, n: usize) -> bool {
        match self {
            Expr::Const(c) => *c,
            Expr::Lit(l) => ((index & l.var.mask(n)) != 0) != l.negated,
            Expr::Not(e) => !e.eval_index(index, n),
            Expr::And(a, b) => a.eval_index(index, n) && b.eval_index(index, n),
            Expr::Or(a, b) => a.eval_index(index, n) || b.eval_index(index, n),
            Expr::Xor(a, b) => a.eval_index(index, n) ^ b.eval_index(index, n),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => f.write_str(if *c { "1" } else { "0" }),
            Expr::Lit(l) => write!(f, "{l}"),
            Expr::Not(e) => match **e {
                Expr::And(..) | Expr::Or(..) | Expr::Xor(..) => write!(f, "!{e}"),
                _ => write!(f, "!({e})"),
            },
            Expr::And(a, b) => write!(f, "({a} & {b})"),
            Expr::Or(a, b) => write!(f, "({a} | {b})"),
            Expr::Xor(a, b) => write!(f, "({a} ^ {b})"),
        }
    }
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let e = p.or()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::domain(format!("expression: {msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn or(&mut self) -> Result<Expr> {
        let mut e = self.xor()?;
        while self.eat(b'|') {
            e = Expr::or(e, self.xor()?);
        }
        Ok(e)
    }

    fn xor(&mut self) -> Result<Expr> {
        let mut e = self.and()?;
        while self.eat(b'^') {
            e = Expr::xor(e, self.and()?);
        }
        Ok(e)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while self.eat(b'&') {
            e = Expr::and(e, self.unary()?);
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'!') {
            self.skip_ws();
            if self.src.get(self.pos) == Some(&b'x') {
                return Ok(Expr::Lit(self.var()?.complement()));
            }
            return Ok(Expr::not(self.unary()?));
        }
        self.atom()
    }

    fn var(&mut self) -> Result<Literal> {
        self.pos += 1;
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let index: usize = digits.parse().map_err(|_| self.error("expected variable index"))?;
        if index == 0 {
            return Err(self.error("variables are numbered from 1"));
        }
        Ok(Literal::pos(index))
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'0') => {
                self.pos += 1;
                Ok(Expr::Const(false))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Expr::Const(true))
            }
            Some(b'x') => Ok(Expr::Lit(self.var()?)),
            Some(b'(') => {
                self.pos += 1;
                let e = self.or()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            _ => Err(self.error("expected literal, constant or '('")),
        }
    }
}
