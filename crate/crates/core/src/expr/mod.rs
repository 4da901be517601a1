//! Expressions in one variable: parsing, evaluation, printing, and symbolic
//! differentiation.
//!
//! The grammar accepts `+ - * / ^`, parentheses, unary minus, decimal and
//! scientific literals, the variable `x`, and the calls `sin cos tan exp ln
//! sqrt abs`. Precedence is `^` over unary minus over `* /` over `+ -`;
//! everything is left-associative except `^`, which associates right.
//! Implicit multiplication is rejected: write `2*x`, not `2x`.

mod deriv;
mod parse;

pub use deriv::DiffError;
pub use parse::{ParseError, ParseErrorKind};

use std::fmt;

/// The supported unary function calls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Abs,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "ln" => Func::Ln,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }
}

/// An expression tree over the single free variable `x`.
///
/// Trees are immutable after construction and compare structurally.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Constant(f64),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// Domain failures during evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalError {
    DivisionByZero {
        at: f64,
    },
    LogNonPositive {
        arg: f64,
    },
    SqrtNegative {
        arg: f64,
    },
    /// `base ^ exponent` has no real value (negative base, fractional exponent).
    PowUndefined {
        base: f64,
        exponent: f64,
    },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::DivisionByZero { at } => write!(f, "division by zero at x = {at}"),
            EvalError::LogNonPositive { arg } => write!(f, "ln of non-positive value {arg}"),
            EvalError::SqrtNegative { arg } => write!(f, "sqrt of negative value {arg}"),
            EvalError::PowUndefined { base, exponent } => {
                write!(f, "{base} ^ {exponent} has no real value")
            }
        }
    }
}

impl std::error::Error for EvalError {}

impl Expr {
    /// Parses an expression from text. See the module docs for the grammar.
    pub fn parse(text: &str) -> Result<Expr, ParseError> {
        parse::parse(text)
    }

    /// Evaluates the expression at `x` with standard real arithmetic.
    pub fn eval(&self, x: f64) -> Result<f64, EvalError> {
        match self {
            Expr::Constant(c) => Ok(*c),
            Expr::Var => Ok(x),
            Expr::Neg(inner) => Ok(-inner.eval(x)?),
            Expr::Add(lhs, rhs) => Ok(lhs.eval(x)? + rhs.eval(x)?),
            Expr::Sub(lhs, rhs) => Ok(lhs.eval(x)? - rhs.eval(x)?),
            Expr::Mul(lhs, rhs) => Ok(lhs.eval(x)? * rhs.eval(x)?),
            Expr::Div(lhs, rhs) => {
                let denom = rhs.eval(x)?;
                if denom == 0.0 {
                    return Err(EvalError::DivisionByZero { at: x });
                }
                Ok(lhs.eval(x)? / denom)
            }
            Expr::Pow(base, exp) => {
                let b = base.eval(x)?;
                let e = exp.eval(x)?;
                let value = b.powf(e);
                if value.is_nan() && !b.is_nan() && !e.is_nan() {
                    return Err(EvalError::PowUndefined {
                        base: b,
                        exponent: e,
                    });
                }
                Ok(value)
            }
            Expr::Call(func, arg) => {
                let v = arg.eval(x)?;
                match func {
                    Func::Sin => Ok(v.sin()),
                    Func::Cos => Ok(v.cos()),
                    Func::Tan => Ok(v.tan()),
                    Func::Exp => Ok(v.exp()),
                    Func::Ln => {
                        if v <= 0.0 {
                            Err(EvalError::LogNonPositive { arg: v })
                        } else {
                            Ok(v.ln())
                        }
                    }
                    Func::Sqrt => {
                        if v < 0.0 {
                            Err(EvalError::SqrtNegative { arg: v })
                        } else {
                            Ok(v.sqrt())
                        }
                    }
                    Func::Abs => Ok(v.abs()),
                }
            }
        }
    }

    /// Symbolic first derivative. Exponents must be constant; only literal
    /// zeros and ones are folded away in the result.
    pub fn differentiate(&self) -> Result<Expr, DiffError> {
        deriv::differentiate(self)
    }
}

// Printing uses minimal parentheses; `parse(print(e))` reproduces `e` for
// any tree the parser can produce.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Constant(_) | Expr::Var | Expr::Call(..) => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let prec = self.precedence();
        let needs_parens = prec < min_prec;
        if needs_parens {
            write!(f, "(")?;
        }
        match self {
            Expr::Constant(c) => {
                if *c < 0.0 || (*c == 0.0 && c.is_sign_negative()) {
                    // Negative literals only arise from programmatic trees;
                    // keep them reparseable.
                    write!(f, "(-{})", -c)?;
                } else {
                    write!(f, "{c}")?;
                }
            }
            Expr::Var => write!(f, "x")?,
            Expr::Neg(inner) => {
                write!(f, "-")?;
                inner.fmt_prec(f, 3)?;
            }
            Expr::Add(lhs, rhs) => {
                lhs.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                rhs.fmt_prec(f, 2)?;
            }
            Expr::Sub(lhs, rhs) => {
                lhs.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                rhs.fmt_prec(f, 2)?;
            }
            Expr::Mul(lhs, rhs) => {
                lhs.fmt_prec(f, 2)?;
                write!(f, " * ")?;
                rhs.fmt_prec(f, 3)?;
            }
            Expr::Div(lhs, rhs) => {
                lhs.fmt_prec(f, 2)?;
                write!(f, " / ")?;
                rhs.fmt_prec(f, 3)?;
            }
            Expr::Pow(base, exp) => {
                base.fmt_prec(f, 5)?;
                write!(f, "^")?;
                // Right-associative, and the exponent may be a unary minus.
                exp.fmt_prec(f, 3)?;
            }
            Expr::Call(func, arg) => {
                write!(f, "{}(", func.name())?;
                arg.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
        }
        if needs_parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}
