//! Symbolic differentiation with light constant folding.

use std::fmt;

use super::{Expr, Func};

/// Differentiation failures.
#[derive(Debug, Clone, PartialEq)]
pub enum DiffError {
    /// `base ^ exponent` with a non-constant exponent is out of scope.
    VariableExponent(Expr),
}

impl fmt::Display for DiffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffError::VariableExponent(e) => {
                write!(
                    f,
                    "cannot differentiate a power with variable exponent: {e}"
                )
            }
        }
    }
}

impl std::error::Error for DiffError {}

pub(super) fn differentiate(expr: &Expr) -> Result<Expr, DiffError> {
    Ok(match expr {
        Expr::Constant(_) => Expr::Constant(0.0),
        Expr::Var => Expr::Constant(1.0),
        Expr::Neg(inner) => neg(differentiate(inner)?),
        Expr::Add(lhs, rhs) => add(differentiate(lhs)?, differentiate(rhs)?),
        Expr::Sub(lhs, rhs) => sub(differentiate(lhs)?, differentiate(rhs)?),
        Expr::Mul(lhs, rhs) => add(
            mul(differentiate(lhs)?, (**rhs).clone()),
            mul((**lhs).clone(), differentiate(rhs)?),
        ),
        Expr::Div(lhs, rhs) => {
            let num = sub(
                mul(differentiate(lhs)?, (**rhs).clone()),
                mul((**lhs).clone(), differentiate(rhs)?),
            );
            div(num, mul((**rhs).clone(), (**rhs).clone()))
        }
        Expr::Pow(base, exp) => match **exp {
            Expr::Constant(c) => {
                let inner = differentiate(base)?;
                mul(
                    mul(
                        Expr::Constant(c),
                        pow((**base).clone(), Expr::Constant(c - 1.0)),
                    ),
                    inner,
                )
            }
            _ => return Err(DiffError::VariableExponent(expr.clone())),
        },
        Expr::Call(func, arg) => {
            let inner = differentiate(arg)?;
            let outer = match func {
                Func::Sin => Expr::Call(Func::Cos, arg.clone()),
                Func::Cos => neg(Expr::Call(Func::Sin, arg.clone())),
                Func::Tan => {
                    // 1 / cos^2
                    let cos = Expr::Call(Func::Cos, arg.clone());
                    return Ok(div(inner, mul(cos.clone(), cos)));
                }
                Func::Exp => Expr::Call(Func::Exp, arg.clone()),
                Func::Ln => return Ok(div(inner, (**arg).clone())),
                Func::Sqrt => {
                    let twice = mul(Expr::Constant(2.0), Expr::Call(Func::Sqrt, arg.clone()));
                    return Ok(div(inner, twice));
                }
                Func::Abs => {
                    // sign(u) = u / |u|
                    let sign = div((**arg).clone(), Expr::Call(Func::Abs, arg.clone()));
                    return Ok(mul(sign, inner));
                }
            };
            mul(outer, inner)
        }
    })
}

fn is_zero(e: &Expr) -> bool {
    matches!(e, Expr::Constant(c) if *c == 0.0)
}

fn is_one(e: &Expr) -> bool {
    matches!(e, Expr::Constant(c) if *c == 1.0)
}

fn add(lhs: Expr, rhs: Expr) -> Expr {
    if is_zero(&lhs) {
        return rhs;
    }
    if is_zero(&rhs) {
        return lhs;
    }
    Expr::Add(Box::new(lhs), Box::new(rhs))
}

fn sub(lhs: Expr, rhs: Expr) -> Expr {
    if is_zero(&rhs) {
        return lhs;
    }
    if is_zero(&lhs) {
        return neg(rhs);
    }
    Expr::Sub(Box::new(lhs), Box::new(rhs))
}

fn neg(inner: Expr) -> Expr {
    if is_zero(&inner) {
        return inner;
    }
    Expr::Neg(Box::new(inner))
}

fn mul(lhs: Expr, rhs: Expr) -> Expr {
    if is_zero(&lhs) || is_one(&rhs) {
        return lhs;
    }
    if is_zero(&rhs) || is_one(&lhs) {
        return rhs;
    }
    Expr::Mul(Box::new(lhs), Box::new(rhs))
}

fn div(num: Expr, denom: Expr) -> Expr {
    if is_zero(&num) || is_one(&denom) {
        return num;
    }
    Expr::Div(Box::new(num), Box::new(denom))
}

fn pow(base: Expr, exp: Expr) -> Expr {
    if is_one(&exp) {
        return base;
    }
    if is_zero(&exp) {
        return Expr::Constant(1.0);
    }
    Expr::Pow(Box::new(base), Box::new(exp))
}

#[cfg(test)]
mod tests {
    use super::super::Expr;

    fn d(s: &str) -> Expr {
        Expr::parse(s).unwrap().differentiate().unwrap()
    }

    #[test]
    fn power_rule() {
        let df = d("x^2");
        assert_eq!(df, Expr::parse("2*x").unwrap());
        assert_eq!(df.eval(3.0).unwrap(), 6.0);
    }

    #[test]
    fn even_multiple_root_has_zero_derivative() {
        let df = d("(x-3)^2*(x-4)^2");
        assert_eq!(df.eval(3.0).unwrap(), 0.0);
        assert_eq!(df.eval(4.0).unwrap(), 0.0);
    }

    #[test]
    fn trig_rules() {
        assert_eq!(d("sin(x)").eval(0.0).unwrap(), 1.0);
        assert_eq!(d("cos(x)").eval(0.0).unwrap(), 0.0);
        let tan = d("tan(x)");
        assert!((tan.eval(0.5).unwrap() - 1.0 / 0.5f64.cos().powi(2)).abs() < 1e-12);
    }

    #[test]
    fn quotient_rule() {
        // d/dx (x / (x + 1)) = 1 / (x + 1)^2
        let df = d("x/(x+1)");
        assert!((df.eval(1.0).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn chain_through_calls() {
        let df = d("exp(x^2)");
        let x = 0.7f64;
        assert!((df.eval(x).unwrap() - 2.0 * x * (x * x).exp()).abs() < 1e-12);
        let df = d("sqrt(x^2+1)");
        assert!((df.eval(x).unwrap() - x / (x * x + 1.0).sqrt()).abs() < 1e-12);
        let df = d("ln(x^2+1)");
        assert!((df.eval(x).unwrap() - 2.0 * x / (x * x + 1.0)).abs() < 1e-12);
    }

    #[test]
    fn abs_derivative_is_the_sign() {
        let df = d("abs(x-0.5)");
        assert_eq!(df.eval(1.0).unwrap(), 1.0);
        assert_eq!(df.eval(0.0).unwrap(), -1.0);
    }

    #[test]
    fn variable_exponent_is_unsupported() {
        assert!(Expr::parse("x^x").unwrap().differentiate().is_err());
        assert!(Expr::parse("2^x").unwrap().differentiate().is_err());
    }
}
