use num_complex::Complex64;
use num_traits::Zero;

use super::{Node, SmoothExpr};
use crate::error::{Error, Result};
use crate::rational::{rational_from_f64, ComplexRational, Rational};

/// Quotient denominators with magnitude below this are a domain error.
pub const DEFAULT_QUOTIENT_GUARD: f64 = 1e-300;

/// Value of an expression at an exact point: exact when the expression
/// reduces to a rational there, otherwise a flagged floating value.
#[derive(Clone, Debug, PartialEq)]
pub enum PointValue {
    Exact(ComplexRational),
    Inexact(Complex64),
}

impl PointValue {
    pub fn to_complex64(&self) -> Complex64 {
        match self {
            PointValue::Exact(c) => c.to_complex64(),
            PointValue::Inexact(z) => *z,
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self, PointValue::Exact(c) if c.is_zero())
    }
}

impl SmoothExpr {
    /// Numerical value at `x0`. Polynomials go through exact rational
    /// arithmetic at the (exactly converted) point before rounding.
    pub fn eval(&self, x0: f64) -> Result<Complex64> {
        if let (Some(p), Some(q)) = (self.poly_normal_form(), rational_from_f64(x0)) {
            return Ok(p.eval(&q).to_complex64());
        }
        self.eval_f64(x0)
    }

    /// Plain floating-point tree walk.
    pub fn eval_f64(&self, x0: f64) -> Result<Complex64> {
        self.eval_guarded(x0, DEFAULT_QUOTIENT_GUARD)
    }

    pub fn eval_guarded(&self, x0: f64, guard: f64) -> Result<Complex64> {
        let ev = |e: &SmoothExpr| e.eval_guarded(x0, guard);
        Ok(match self.node() {
            Node::Const(c) => c.to_complex64(),
            Node::Var => Complex64::new(x0, 0.0),
            Node::Sum(ts) => {
                let mut acc = Complex64::zero();
                for t in ts {
                    acc += ev(t)?;
                }
                acc
            }
            Node::Product(fs) => {
                let mut acc = Complex64::new(1.0, 0.0);
                for f in fs {
                    acc *= ev(f)?;
                }
                acc
            }
            Node::Power(b, n) => ev(b)?.powi(*n as i32),
            Node::Quotient(n, d) => {
                let den = ev(d)?;
                if den.norm().is_nan() || den.norm() <= guard {
                    return Err(Error::Domain(format!("denominator `{d}` vanishes at x = {x0}")));
                }
                ev(n)? / den
            }
            Node::Exp(a) => ev(a)?.exp(),
            Node::Sin(a) => ev(a)?.sin(),
            Node::Cos(a) => ev(a)?.cos(),
        })
    }

    /// Exact value at a rational point, `Ok(None)` when the value is not
    /// provably rational. `exp(0)`, `sin(0)`, `cos(0)` and products with an
    /// exactly-zero factor are resolved structurally.
    pub fn eval_exact(&self, x: &Rational) -> Result<Option<ComplexRational>> {
        let ev = |e: &SmoothExpr| e.eval_exact(x);
        Ok(match self.node() {
            Node::Const(c) => Some(c.clone()),
            Node::Var => Some(ComplexRational::real(x.clone())),
            Node::Sum(ts) => {
                let mut acc = Some(ComplexRational::zero());
                for t in ts {
                    acc = match (acc, ev(t)?) {
                        (Some(a), Some(v)) => Some(&a + &v),
                        _ => None,
                    };
                }
                acc
            }
            Node::Product(fs) => {
                let mut acc = Some(ComplexRational::from_int(1));
                let mut zero = false;
                for f in fs {
                    match ev(f)? {
                        Some(v) if v.is_zero() => zero = true,
                        Some(v) => acc = acc.map(|a| &a * &v),
                        None => acc = None,
                    }
                }
                if zero {
                    Some(ComplexRational::zero())
                } else {
                    acc
                }
            }
            Node::Power(b, n) => ev(b)?.map(|v| v.pow(*n)),
            Node::Quotient(n, d) => {
                let num = ev(n)?;
                match ev(d)? {
                    Some(den) if den.is_zero() => {
                        return Err(Error::Domain(format!("denominator `{d}` vanishes at x = {x}")))
                    }
                    Some(den) => num.map(|v| &v / &den),
                    None => {
                        // the denominator must still be nonzero numerically
                        self.eval_f64(crate::rational::rational_to_f64(x))?;
                        None
                    }
                }
            }
            Node::Exp(a) => match ev(a)? {
                Some(v) if v.is_zero() => Some(ComplexRational::from_int(1)),
                _ => None,
            },
            Node::Sin(a) => match ev(a)? {
                Some(v) if v.is_zero() => Some(ComplexRational::zero()),
                _ => None,
            },
            Node::Cos(a) => match ev(a)? {
                Some(v) if v.is_zero() => Some(ComplexRational::from_int(1)),
                _ => None,
            },
        })
    }

    /// Exact value if available, otherwise the floating value flagged inexact.
    pub fn point_value(&self, x: &Rational) -> Result<PointValue> {
        match self.eval_exact(x)? {
            Some(v) => Ok(PointValue::Exact(v)),
            None => {
                let z = self.eval_f64(crate::rational::rational_to_f64(x))?;
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::Domain(format!("`{self}` is not finite at x = {x}")));
                }
                Ok(PointValue::Inexact(z))
            }
        }
    }
}
