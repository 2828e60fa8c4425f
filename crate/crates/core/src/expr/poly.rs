use num_traits::{One, Zero};

use super::{Node, SmoothExpr};
use crate::rational::{ComplexRational, Rational};

/// Dense univariate polynomial with exact coefficients, ascending degree.
/// Trailing zeros are always trimmed, so the zero polynomial is `[]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<ComplexRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<ComplexRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: ComplexRational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![ComplexRational::zero(), ComplexRational::one()])
    }

    pub fn coeffs(&self) -> &[ComplexRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<ComplexRational> {
        match self.coeffs.len() {
            0 => Some(ComplexRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = ComplexRational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::default();
        }
        let mut out = vec![ComplexRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &ComplexRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::constant(ComplexRational::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> ComplexRational {
        let x = ComplexRational::real(x.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(ComplexRational::zero(), |acc, c| &(&acc * &x) + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &ComplexRational::from_int(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Poly {
        let mut out = vec![ComplexRational::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            let inv = ComplexRational::real(Rational::new(1.into(), ((k + 1) as i64).into()));
            out.push(c * &inv);
        }
        Poly::new(out)
    }

    /// Canonical expression: `c0 + c1*x + c2*x^2 + ...` with zero terms dropped.
    pub fn to_expr(&self) -> SmoothExpr {
        let terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let monomial = SmoothExpr::x().pow(k as u32);
            SmoothExpr::product([SmoothExpr::constant(c.clone()), monomial])
        });
        SmoothExpr::sum(terms)
    }
}

impl SmoothExpr {
    /// Dense coefficient list when the expression is a polynomial with exact
    /// coefficients. `exp(0)`, `sin(0)`, `cos(0)` and quotients by nonzero
    /// constants are recognised; anything else is not a polynomial.
    pub fn poly_normal_form(&self) -> Option<Poly> {
        match self.node() {
            Node::Const(c) => Some(Poly::constant(c.clone())),
            Node::Var => Some(Poly::x()),
            Node::Sum(ts) => ts
                .iter()
                .try_fold(Poly::default(), |acc, t| Some(acc.add(&t.poly_normal_form()?))),
            Node::Product(fs) => fs.iter().try_fold(Poly::constant(ComplexRational::one()), |acc, f| {
                Some(acc.mul(&f.poly_normal_form()?))
            }),
            Node::Power(b, n) => Some(b.poly_normal_form()?.pow(*n)),
            Node::Quotient(n, d) => {
                let d = d.poly_normal_form()?.as_constant()?;
                let inv = d.inv()?;
                Some(n.poly_normal_form()?.scale(&inv))
            }
            Node::Exp(a) => a.poly_normal_form()?.is_zero().then(|| Poly::constant(ComplexRational::one())),
            Node::Sin(a) => a.poly_normal_form()?.is_zero().then(Poly::default),
            Node::Cos(a) => a.poly_normal_form()?.is_zero().then(|| Poly::constant(ComplexRational::one())),
        }
    }
}
