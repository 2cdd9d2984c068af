//! Expressions over symmetric functions.
//!
//! Grammar, loosest first:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | pleth
//! pleth   := power ('@' power)*
//! power   := atom ('^' integer)?
//! atom    := integer | basis '[' integer (',' integer)* ']' | '(' sum ')'
//! ```
//!
//! so `@` binds tighter than `*`, and every binary operator associates to the
//! left. Error offsets are 1-based byte columns; the end of input sits one
//! past the last byte.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use plethora::symfunc::{plethysm, Basis, SymFunc};
use plethora::{AlgebraError, Partition, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    /// `b[λ]`: the basis element indexed by `λ`, which for `e`, `p`, `w` is
    /// the product of the generators `b[λ_i]`.
    Gen(Basis, Partition),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Pleth(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Binding strength; an operand printed in a slot that needs more gets
    /// parentheses.
    fn level(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pleth(..) => 4,
            Expr::Pow(..) => 5,
            Expr::Int(_) | Expr::Gen(..) => 6,
        }
    }

    /// The syntax tree, e.g. `Sum(e[2], Scale(3, w[1]))`.
    pub fn tree(&self) -> String {
        let bin = |name: &str, a: &Expr, b: &Expr| format!("{name}({}, {})", a.tree(), b.tree());
        match self {
            Expr::Int(n) => n.to_string(),
            Expr::Gen(..) => self.to_string(),
            Expr::Neg(a) => format!("Neg({})", a.tree()),
            Expr::Add(a, b) => bin("Sum", a, b),
            Expr::Sub(a, b) => bin("Difference", a, b),
            Expr::Mul(a, b) if matches!(**a, Expr::Int(_)) => bin("Scale", a, b),
            Expr::Mul(a, b) => bin("Product", a, b),
            Expr::Div(a, b) => bin("Quotient", a, b),
            Expr::Pow(a, k) => format!("Power({}, {k})", a.tree()),
            Expr::Pleth(a, b) => bin("Plethysm", a, b),
        }
    }

    pub fn eval(&self) -> Result<SymFunc> {
        Ok(match self.eval_value()? {
            Val::Const(c) => SymFunc::rational_constant(Basis::Witt, c),
            Val::Sym(f) => f,
        })
    }

    fn eval_value(&self) -> Result<Val> {
        Ok(match self {
            Expr::Int(n) => Val::Const(BigRational::from_integer(n.clone())),
            Expr::Gen(b, l) => Val::Sym(SymFunc::basis_element(*b, l.clone())),
            Expr::Neg(a) => match a.eval_value()? {
                Val::Const(c) => Val::Const(-c),
                Val::Sym(f) => Val::Sym(f.neg()),
            },
            Expr::Add(a, b) => a.eval_value()?.add(b.eval_value()?)?,
            Expr::Sub(a, b) => a.eval_value()?.add(b.eval_value()?.neg())?,
            Expr::Mul(a, b) => match (a.eval_value()?, b.eval_value()?) {
                (Val::Const(x), Val::Const(y)) => Val::Const(x * y),
                (Val::Const(c), Val::Sym(f)) | (Val::Sym(f), Val::Const(c)) => {
                    Val::Sym(f.scale(&c))
                }
                (Val::Sym(f), Val::Sym(g)) => Val::Sym(f.try_mul(&g)?),
            },
            Expr::Div(a, b) => {
                let Val::Const(d) = b.eval_value()? else {
                    return Err(AlgebraError::Descriptor(format!(
                        "division by the non-constant `{b}`"
                    )));
                };
                if d.is_zero() {
                    return Err(AlgebraError::Descriptor("division by zero".into()));
                }
                let inv = BigRational::one() / d;
                match a.eval_value()? {
                    Val::Const(c) => Val::Const(c * inv),
                    Val::Sym(f) => Val::Sym(f.scale(&inv)),
                }
            }
            Expr::Pow(a, k) => match a.eval_value()? {
                Val::Const(c) => Val::Const(num_traits::pow(c, *k as usize)),
                Val::Sym(f) => Val::Sym(f.pow(*k)?),
            },
            Expr::Pleth(a, b) => match (a.eval_value()?, b.eval_value()?) {
                // constants are fixed by every Adams operation
                (Val::Const(c), _) => Val::Const(c),
                (Val::Sym(f), Val::Sym(g)) => Val::Sym(plethysm(&f, &g)?),
                (Val::Sym(f), Val::Const(c)) => {
                    let g = SymFunc::rational_constant(f.basis(), c);
                    Val::Sym(plethysm(&f, &g)?)
                }
            },
        })
    }
}

/// An intermediate value: constants carry no basis until they meet one.
enum Val {
    Const(BigRational),
    Sym(SymFunc),
}

impl Val {
    fn neg(self) -> Val {
        match self {
            Val::Const(c) => Val::Const(-c),
            Val::Sym(f) => Val::Sym(f.neg()),
        }
    }

    fn add(self, other: Val) -> Result<Val> {
        Ok(match (self, other) {
            (Val::Const(x), Val::Const(y)) => Val::Const(x + y),
            (Val::Const(c), Val::Sym(f)) | (Val::Sym(f), Val::Const(c)) => {
                let k = SymFunc::rational_constant(f.basis(), c);
                Val::Sym(f.try_add(&k)?)
            }
            (Val::Sym(f), Val::Sym(g)) => Val::Sym(f.try_add(&g)?),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let operand = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| {
            if e.level() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        let binary = |f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr, lvl: u8| {
            operand(f, a, lvl)?;
            f.write_str(op)?;
            operand(f, b, lvl + 1)
        };
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Gen(b, l) => write!(f, "{b}{l}"),
            Expr::Neg(a) => {
                f.write_str("-")?;
                operand(f, a, 3)
            }
            Expr::Add(a, b) => binary(f, a, " + ", b, 1),
            Expr::Sub(a, b) => binary(f, a, " - ", b, 1),
            Expr::Mul(a, b) => binary(f, a, "*", b, 2),
            Expr::Div(a, b) => binary(f, a, "/", b, 2),
            Expr::Pleth(a, b) => binary(f, a, " @ ", b, 4),
            Expr::Pow(a, k) => {
                operand(f, a, 6)?;
                write!(f, "^{k}")
            }
        }
    }
}

pub fn parse(input: &str) -> Result<Expr> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(e)
}

/// Parses and evaluates in one step.
pub fn eval_str(input: &str) -> Result<SymFunc> {
    parse(input)?.eval()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse {
            offset: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.product()?;
        loop {
            if self.eat(b'+') {
                e = Expr::Add(Box::new(e), Box::new(self.product()?));
            } else if self.eat(b'-') {
                e = Expr::Sub(Box::new(e), Box::new(self.product()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            if self.eat(b'*') {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.pleth()
    }

    fn pleth(&mut self) -> Result<Expr> {
        let mut e = self.power()?;
        while self.eat(b'@') {
            e = Expr::Pleth(Box::new(e), Box::new(self.power()?));
        }
        Ok(e)
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = self.small_integer()?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.integer()?)),
            Some(c) if Basis::from_symbol(c as char).is_some() => {
                let basis = Basis::from_symbol(c as char).expect("checked above");
                self.pos += 1;
                let open = self.pos;
                if self.src.get(self.pos) != Some(&b'[') {
                    return Err(self.error("expected `[` after a basis symbol"));
                }
                self.pos += 1;
                let mut parts = vec![self.small_integer()?];
                while self.eat(b',') {
                    parts.push(self.small_integer()?);
                }
                self.expect(b']')?;
                let lambda = Partition::new(parts).map_err(|_| AlgebraError::Parse {
                    offset: open + 1,
                    message: "partition parts must be positive".into(),
                })?;
                Ok(Expr::Gen(basis, lambda))
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits"))
    }

    fn small_integer(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.integer()?;
        u32::try_from(&n).map_err(|_| AlgebraError::Parse {
            offset: start + 1,
            message: format!("{n} is too large"),
        })
    }
}
