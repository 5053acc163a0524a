use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::exact::Interval;
use crate::num::{format_rational, Rational};

/// Radical expression over the rationals, evaluated to an [`Interval`].
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(Rational),
    Add(Arc<Expr>, Arc<Expr>),
    Sub(Arc<Expr>, Arc<Expr>),
    Mul(Arc<Expr>, Arc<Expr>),
    Div(Arc<Expr>, Arc<Expr>),
    Neg(Arc<Expr>),
    Sqrt(Arc<Expr>),
}

impl Expr {
    pub fn constant(q: Rational) -> Self {
        Expr::Const(q)
    }

    pub fn int(n: i64) -> Self {
        Expr::Const(Rational::from_integer(n.into()))
    }

    pub fn sqrt(self) -> Self {
        Expr::Sqrt(Arc::new(self))
    }

    pub fn square(self) -> Self {
        self.clone() * self
    }

    /// The exact value when no radicals are involved.
    pub fn exact_value(&self) -> Option<Rational> {
        Some(match self {
            Expr::Const(q) => q.clone(),
            Expr::Add(a, b) => a.exact_value()? + b.exact_value()?,
            Expr::Sub(a, b) => a.exact_value()? - b.exact_value()?,
            Expr::Mul(a, b) => a.exact_value()? * b.exact_value()?,
            Expr::Div(a, b) => {
                let d = b.exact_value()?;
                if d == Rational::from_integer(0.into()) {
                    return None;
                }
                a.exact_value()? / d
            }
            Expr::Neg(a) => -a.exact_value()?,
            Expr::Sqrt(_) => return None,
        })
    }

    /// Outward-rounded enclosure at `precision_bits`.
    pub fn eval(&self, precision_bits: u32) -> Result<Interval> {
        let value = match self {
            Expr::Const(q) => return Ok(Interval::point(q.clone())),
            Expr::Add(a, b) => a.eval(precision_bits)?.add(&b.eval(precision_bits)?),
            Expr::Sub(a, b) => a.eval(precision_bits)?.sub(&b.eval(precision_bits)?),
            Expr::Mul(a, b) => a.eval(precision_bits)?.mul(&b.eval(precision_bits)?),
            Expr::Div(a, b) => a.eval(precision_bits)?.div(&b.eval(precision_bits)?)?,
            Expr::Neg(a) => return Ok(a.eval(precision_bits)?.neg()),
            Expr::Sqrt(a) => a.eval(precision_bits)?.sqrt(precision_bits)?,
        };
        Ok(value.round_outward(precision_bits))
    }
}

impl From<Rational> for Expr {
    fn from(q: Rational) -> Self {
        Expr::Const(q)
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl $trait for Expr {
            type Output = Expr;

            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Arc::new(self), Arc::new(rhs))
            }
        }

        impl $trait<&Expr> for &Expr {
            type Output = Expr;

            fn $method(self, rhs: &Expr) -> Expr {
                Expr::$variant(Arc::new(self.clone()), Arc::new(rhs.clone()))
            }
        }
    };
}

binary_op!(Add, add, Add);
binary_op!(Sub, sub, Sub);
binary_op!(Mul, mul, Mul);
binary_op!(Div, div, Div);

impl Neg for Expr {
    type Output = Expr;

    fn neg(self) -> Expr {
        Expr::Neg(Arc::new(self))
    }
}

/// Operand rendering: integers and radicals stand alone, anything else is parenthesized.
struct Operand<'a>(&'a Expr);

impl fmt::Display for Operand<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Expr::Const(q) if q.is_integer() && *q >= Rational::from_integer(0.into()) => write!(f, "{}", self.0),
            Expr::Sqrt(_) => write!(f, "{}", self.0),
            other => write!(f, "({other})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(q) => write!(f, "{}", format_rational(q)),
            Expr::Add(a, b) => write!(f, "{} + {}", Operand(a), Operand(b)),
            Expr::Sub(a, b) => write!(f, "{} - {}", Operand(a), Operand(b)),
            Expr::Mul(a, b) => write!(f, "{}*{}", Operand(a), Operand(b)),
            Expr::Div(a, b) => write!(f, "{}/{}", Operand(a), Operand(b)),
            Expr::Neg(a) => write!(f, "-{}", Operand(a)),
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Proven,
    Disproven,
    UndecidableAtPrecision,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "=")]
    Equal,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Proven => "proven",
            Verdict::Disproven => "disproven",
            Verdict::UndecidableAtPrecision => "undecidable_at_precision",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Relation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Equal => "=",
        }
    }
}

/// Outcome of checking `lhs relation rhs` with interval enclosures.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertifiedComparison {
    pub name: String,
    pub lhs: String,
    pub relation: Relation,
    pub rhs: String,
    pub verdict: Verdict,
    pub precision_bits: u32,
    /// `[lo, hi]` of each side as exact rational strings.
    pub lhs_interval: [String; 2],
    pub rhs_interval: [String; 2],
    /// Floating views of the same endpoints, for humans.
    pub lhs_approx: [f64; 2],
    pub rhs_approx: [f64; 2],
}

impl CertifiedComparison {
    pub fn is_proven(&self) -> bool {
        self.verdict == Verdict::Proven
    }

    pub(crate) fn from_intervals(
        name: &str,
        lhs: String,
        relation: Relation,
        rhs: String,
        verdict: Verdict,
        precision_bits: u32,
        left: &Interval,
        right: &Interval,
    ) -> Self {
        let render = |i: &Interval| [format_rational(i.lo()), format_rational(i.hi())];
        let approx = |i: &Interval| {
            let (lo, hi) = i.to_f64_bounds();
            [lo, hi]
        };
        Self {
            name: name.to_string(),
            lhs,
            relation,
            rhs,
            verdict,
            precision_bits,
            lhs_interval: render(left),
            rhs_interval: render(right),
            lhs_approx: approx(left),
            rhs_approx: approx(right),
        }
    }
}

/// Proven iff `hi(lhs) < lo(rhs)`; disproven iff `lo(lhs) ≥ hi(rhs)`.
pub fn certify_less(lhs: &Expr, rhs: &Expr, precision_bits: u32) -> Result<CertifiedComparison> {
    certify_less_named("", lhs, rhs, precision_bits)
}

pub(crate) fn certify_less_named(
    name: &str,
    lhs: &Expr,
    rhs: &Expr,
    precision_bits: u32,
) -> Result<CertifiedComparison> {
    let left = lhs.eval(precision_bits)?;
    let right = rhs.eval(precision_bits)?;
    let verdict = if left.hi() < right.lo() {
        Verdict::Proven
    } else if left.lo() >= right.hi() {
        Verdict::Disproven
    } else {
        Verdict::UndecidableAtPrecision
    };
    Ok(CertifiedComparison::from_intervals(
        name,
        lhs.to_string(),
        Relation::Less,
        rhs.to_string(),
        verdict,
        precision_bits,
        &left,
        &right,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{parse_rational, rat};

    #[test]
    fn one_less_than_two() {
        let c = certify_less(&Expr::int(1), &Expr::int(2), 64).unwrap();
        assert_eq!(c.verdict, Verdict::Proven);
        let c = certify_less(&Expr::int(2), &Expr::int(1), 64).unwrap();
        assert_eq!(c.verdict, Verdict::Disproven);
    }

    #[test]
    fn equality_is_undecidable() {
        let root = Expr::int(2).sqrt();
        let c = certify_less(&(root.clone() * root), &Expr::int(2), 64).unwrap();
        assert_eq!(c.verdict, Verdict::UndecidableAtPrecision);
        // identical point intervals: `2 < 2` is false
        let c = certify_less(&Expr::int(2), &Expr::int(2), 64).unwrap();
        assert_eq!(c.verdict, Verdict::Disproven);
    }

    #[test]
    fn inverse_root_of_c1() {
        let c1 = Expr::constant(rat(1, 1) + parse_rational("5.3e-7").unwrap());
        let lhs = Expr::int(1) / c1.sqrt();
        let rhs = Expr::constant(parse_rational("0.99999974").unwrap());
        assert_eq!(certify_less(&lhs, &rhs, 128).unwrap().verdict, Verdict::Proven);
        // the margin is about 5e-12, invisible at 8 bits
        assert_eq!(
            certify_less(&lhs, &rhs, 8).unwrap().verdict,
            Verdict::UndecidableAtPrecision
        );
    }

    #[test]
    fn division_by_zero_propagates() {
        let zero = Expr::int(1) - Expr::int(1);
        assert!(certify_less(&(Expr::int(1) / zero), &Expr::int(2), 64).is_err());
    }

    #[test]
    fn display_is_unambiguous() {
        let e = Expr::int(1) / (Expr::int(8) * Expr::constant(rat(3, 2)));
        assert_eq!(e.to_string(), "1/(8*(3/2))");
        let e = (Expr::int(2) - Expr::int(1)).sqrt() + -Expr::int(3);
        assert_eq!(e.to_string(), "sqrt(2 - 1) + (-3)");
    }
}
