//! Minimal arithmetic expression evaluator for user-defined coupling models.
//!
//! Grammar (usual precedence, `^` binds tightest and is right-associative):
//!
//! ```text
//! expr   := term  (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' unary)?
//! atom   := number | ident | ident '(' expr (',' expr)* ')' | '(' expr ')'
//! ```
//!
//! The single free variable is `t`. Constants: `pi`, `e`. Functions:
//! `exp ln log tanh sinh cosh sqrt abs sigmoid min max pow`.
//! `sigmoid(x) = 1/(1+e^-x)` is evaluated overflow-free for any `x`.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub struct ExprError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at byte {})", self.message, self.pos)
    }
}

impl std::error::Error for ExprError {}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError {
        pos,
        message: message.into(),
    })
}

#[derive(Debug, Clone)]
pub enum Expr {
    Num(f64),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Exp,
    Ln,
    Tanh,
    Sinh,
    Cosh,
    Sqrt,
    Abs,
    Sigmoid,
    Min,
    Max,
    Pow,
}

impl Func {
    fn lookup(name: &str) -> Option<(Func, usize)> {
        Some(match name {
            "exp" => (Func::Exp, 1),
            "ln" | "log" => (Func::Ln, 1),
            "tanh" => (Func::Tanh, 1),
            "sinh" => (Func::Sinh, 1),
            "cosh" => (Func::Cosh, 1),
            "sqrt" => (Func::Sqrt, 1),
            "abs" => (Func::Abs, 1),
            "sigmoid" => (Func::Sigmoid, 1),
            "min" => (Func::Min, 2),
            "max" => (Func::Max, 2),
            "pow" => (Func::Pow, 2),
            _ => return None,
        })
    }
}

/// Numerically stable logistic function.
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, ExprError> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return err(p.pos, "unexpected trailing input");
        }
        Ok(e)
    }

    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Expr::Num(v) => *v,
            Expr::Var => t,
            Expr::Neg(a) => -a.eval(t),
            Expr::Add(a, b) => a.eval(t) + b.eval(t),
            Expr::Sub(a, b) => a.eval(t) - b.eval(t),
            Expr::Mul(a, b) => a.eval(t) * b.eval(t),
            Expr::Div(a, b) => a.eval(t) / b.eval(t),
            Expr::Pow(a, b) => a.eval(t).powf(b.eval(t)),
            Expr::Call(f, args) => {
                let x = args[0].eval(t);
                match f {
                    Func::Exp => x.exp(),
                    Func::Ln => x.ln(),
                    Func::Tanh => x.tanh(),
                    Func::Sinh => x.sinh(),
                    Func::Cosh => x.cosh(),
                    Func::Sqrt => x.sqrt(),
                    Func::Abs => x.abs(),
                    Func::Sigmoid => sigmoid(x),
                    Func::Min => x.min(args[1].eval(t)),
                    Func::Max => x.max(args[1].eval(t)),
                    Func::Pow => x.powf(args[1].eval(t)),
                }
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
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

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut left = self.term()?;
        loop {
            if self.eat(b'+') {
                left = Expr::Add(Box::new(left), Box::new(self.term()?));
            } else if self.eat(b'-') {
                left = Expr::Sub(Box::new(left), Box::new(self.term()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut left = self.unary()?;
        loop {
            if self.eat(b'*') {
                left = Expr::Mul(Box::new(left), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                left = Expr::Div(Box::new(left), Box::new(self.unary()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat(b'-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let exponent = self.unary()?;
            Ok(Expr::Pow(Box::new(base), Box::new(exponent)))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return err(self.pos, "expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.ident(),
            Some(c) => err(self.pos, format!("unexpected character '{}'", c as char)),
            None => err(self.pos, "unexpected end of expression"),
        }
    }

    fn number(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c.is_ascii_digit() || c == b'.' {
                self.pos += 1;
            } else if (c == b'e' || c == b'E')
                && self.pos > start
                && self
                    .src
                    .get(self.pos + 1)
                    .is_some_and(|&d| d.is_ascii_digit() || d == b'+' || d == b'-')
            {
                self.pos += 2;
            } else {
                break;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<f64>() {
            Ok(v) => Ok(Expr::Num(v)),
            Err(_) => err(start, format!("bad number literal '{text}'")),
        }
    }

    fn ident(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match name {
            "t" => Ok(Expr::Var),
            "pi" => Ok(Expr::Num(std::f64::consts::PI)),
            "e" => Ok(Expr::Num(std::f64::consts::E)),
            _ => {
                let Some((func, arity)) = Func::lookup(name) else {
                    return err(start, format!("unknown identifier '{name}'"));
                };
                if !self.eat(b'(') {
                    return err(self.pos, format!("expected '(' after '{name}'"));
                }
                let mut args = vec![self.expr()?];
                while self.eat(b',') {
                    args.push(self.expr()?);
                }
                if !self.eat(b')') {
                    return err(self.pos, "expected ')'");
                }
                if args.len() != arity {
                    return err(
                        start,
                        format!("'{name}' takes {arity} argument(s), got {}", args.len()),
                    );
                }
                Ok(Expr::Call(func, args))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(src: &str, t: f64) -> f64 {
        Expr::parse(src).unwrap().eval(t)
    }

    #[test]
    fn arithmetic_and_precedence() {
        assert_eq!(ev("1 + 2*3", 0.0), 7.0);
        assert_eq!(ev("(1+2)*3", 0.0), 9.0);
        assert_eq!(ev("2^3^2", 0.0), 512.0); // right-assoc
        assert_eq!(ev("-2^2", 0.0), -4.0); // unary minus binds looser than ^
        assert_eq!(ev("6/3/2", 0.0), 1.0);
    }

    #[test]
    fn variables_and_functions() {
        assert!((ev("sigmoid(t)", 0.0) - 0.5).abs() < 1e-15);
        assert!((ev("1/(1+exp(-t))", 2.0) - sigmoid(2.0)).abs() < 1e-15);
        assert_eq!(ev("min(1, exp(t))", 1.0), 1.0);
        assert_eq!(ev("max(t, 0)", -3.0), 0.0);
        assert!((ev("ln(e)", 0.0) - 1.0).abs() < 1e-15);
        assert!((ev("cosh(t) - sinh(t) - exp(-t)", 0.7)).abs() < 1e-15);
        assert!((ev("pow(t, 2) - t^2", 3.5)).abs() < 1e-15);
    }

    #[test]
    fn sigmoid_is_overflow_free() {
        assert_eq!(sigmoid(1e6), 1.0);
        assert_eq!(sigmoid(-1e6), 0.0);
        assert_eq!(ev("sigmoid(t)", 1e6), 1.0);
    }

    #[test]
    fn parse_errors_carry_position() {
        assert!(Expr::parse("1 +").is_err());
        assert!(Expr::parse("foo(t)").is_err());
        assert!(Expr::parse("min(1)").is_err());
        assert!(Expr::parse("(1+2").is_err());
        assert!(Expr::parse("1 2").is_err());
        let e = Expr::parse("sigmoid t").unwrap_err();
        assert!(e.message.contains("expected '('"));
    }

    #[test]
    fn scientific_notation() {
        assert_eq!(ev("1e-6", 0.0), 1e-6);
        assert_eq!(ev("2.5E+2", 0.0), 250.0);
        // bare 'e' is Euler's constant; an exponent marker needs digits after it
        assert!((ev("2*e", 0.0) - 2.0 * std::f64::consts::E).abs() < 1e-14);
        assert!(Expr::parse("2e").is_err());
    }
}
