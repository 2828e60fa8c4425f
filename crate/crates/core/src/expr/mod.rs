//! Symbolic smooth functions of the single variable `x`.
//!
//! A [`SmoothExpr`] is an immutable, reference-counted expression tree over a
//! fixed node set (constants, `x`, sums, products, integer powers, quotients,
//! `exp`, `sin`, `cos`). The set is closed under differentiation and products,
//! which is all the piecewise algebra needs. Constants are exact complex
//! rationals; floating point only appears in [`SmoothExpr::eval`] and friends.

mod canon;
mod diff;
pub(crate) mod display;
pub(crate) mod equal;
mod eval;
mod poly;

use std::sync::Arc;

use num_traits::{One, Zero};

pub use equal::{Verdict, DEFAULT_REL_TOL, DEFAULT_SAMPLES};
pub use eval::{DEFAULT_QUOTIENT_GUARD, PointValue};
pub use poly::Poly;

use crate::error::{Error, Result};
use crate::rational::{ComplexRational, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SmoothExpr(Arc<Node>);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Const(ComplexRational),
    Var,
    Sum(Vec<SmoothExpr>),
    Product(Vec<SmoothExpr>),
    Power(SmoothExpr, u32),
    Quotient(SmoothExpr, SmoothExpr),
    Exp(SmoothExpr),
    Sin(SmoothExpr),
    Cos(SmoothExpr),
}

impl std::fmt::Debug for SmoothExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SmoothExpr({self})")
    }
}

impl SmoothExpr {
    fn wrap(node: Node) -> Self {
        SmoothExpr(Arc::new(node))
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn constant(c: impl Into<ComplexRational>) -> Self {
        Self::wrap(Node::Const(c.into()))
    }

    pub fn rational(r: Rational) -> Self {
        Self::constant(ComplexRational::real(r))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(ComplexRational::from_int(n))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn x() -> Self {
        Self::wrap(Node::Var)
    }

    pub fn as_const(&self) -> Option<&ComplexRational> {
        match self.node() {
            Node::Const(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_zero_const(&self) -> bool {
        self.as_const().is_some_and(Zero::is_zero)
    }

    fn is_one_const(&self) -> bool {
        self.as_const().is_some_and(One::is_one)
    }

    /// Flattening sum with constant folding.
    pub fn sum(terms: impl IntoIterator<Item = SmoothExpr>) -> Self {
        let mut constant = ComplexRational::zero();
        let mut rest = Vec::new();
        for t in terms {
            match t.node() {
                Node::Const(c) => constant += c,
                Node::Sum(inner) => {
                    for s in inner {
                        match s.node() {
                            Node::Const(c) => constant += c,
                            _ => rest.push(s.clone()),
                        }
                    }
                }
                _ => rest.push(t),
            }
        }
        if !constant.is_zero() {
            rest.insert(0, Self::constant(constant));
        }
        match rest.len() {
            0 => Self::zero(),
            1 => rest.pop().unwrap(),
            _ => Self::wrap(Node::Sum(rest)),
        }
    }

    /// Flattening product with constant folding; any zero constant annihilates.
    pub fn product(factors: impl IntoIterator<Item = SmoothExpr>) -> Self {
        let mut constant = ComplexRational::one();
        let mut rest = Vec::new();
        for f in factors {
            match f.node() {
                Node::Const(c) => constant *= c,
                Node::Product(inner) => {
                    for s in inner {
                        match s.node() {
                            Node::Const(c) => constant *= c,
                            _ => rest.push(s.clone()),
                        }
                    }
                }
                _ => rest.push(f),
            }
        }
        if constant.is_zero() {
            return Self::zero();
        }
        if !constant.is_one() || rest.is_empty() {
            rest.insert(0, Self::constant(constant));
        }
        match rest.len() {
            1 => rest.pop().unwrap(),
            _ => Self::wrap(Node::Product(rest)),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        match (n, self.node()) {
            (0, _) => Self::one(),
            (1, _) => self.clone(),
            (_, Node::Const(c)) => Self::constant(c.pow(n)),
            (_, Node::Power(b, m)) => b.pow(m * n),
            _ => Self::wrap(Node::Power(self.clone(), n)),
        }
    }

    /// Quotient; rejects a denominator that is the zero polynomial.
    pub fn quotient(num: &SmoothExpr, den: &SmoothExpr) -> Result<Self> {
        if let Some(p) = den.poly_normal_form() {
            if p.is_zero() {
                return Err(Error::Domain(format!("quotient by zero expression `{den}`")));
            }
            if let Some(c) = p.as_constant() {
                let inv = c.inv().expect("nonzero constant");
                return Ok(Self::product([Self::constant(inv), num.clone()]));
            }
        }
        if num.is_zero_const() {
            return Ok(Self::zero());
        }
        Ok(Self::wrap(Node::Quotient(num.clone(), den.clone())))
    }

    // Internal variant for denominators already known to be nonzero.
    fn quotient_unchecked(num: SmoothExpr, den: SmoothExpr) -> Self {
        if num.is_zero_const() {
            return Self::zero();
        }
        if den.is_one_const() {
            return num;
        }
        Self::wrap(Node::Quotient(num, den))
    }

    pub fn exp(&self) -> Self {
        if self.is_zero_const() {
            return Self::one();
        }
        Self::wrap(Node::Exp(self.clone()))
    }

    pub fn sin(&self) -> Self {
        if self.is_zero_const() {
            return Self::zero();
        }
        Self::wrap(Node::Sin(self.clone()))
    }

    pub fn cos(&self) -> Self {
        if self.is_zero_const() {
            return Self::one();
        }
        Self::wrap(Node::Cos(self.clone()))
    }

    pub fn scale(&self, c: &ComplexRational) -> Self {
        Self::product([Self::constant(c.clone()), self.clone()])
    }

    /// Replaces every occurrence of `x` by `replacement`.
    pub fn substitute(&self, replacement: &SmoothExpr) -> Self {
        let sub = |e: &SmoothExpr| e.substitute(replacement);
        match self.node() {
            Node::Const(_) => self.clone(),
            Node::Var => replacement.clone(),
            Node::Sum(ts) => Self::sum(ts.iter().map(sub)),
            Node::Product(fs) => Self::product(fs.iter().map(sub)),
            Node::Power(b, n) => sub(b).pow(*n),
            Node::Quotient(n, d) => Self::quotient_unchecked(sub(n), sub(d)),
            Node::Exp(a) => sub(a).exp(),
            Node::Sin(a) => sub(a).sin(),
            Node::Cos(a) => sub(a).cos(),
        }
    }

    /// `e(x + h)`.
    pub fn shift(&self, h: &Rational) -> Self {
        let arg = Self::sum([Self::x(), Self::rational(h.clone())]);
        self.substitute(&arg).simplify()
    }

    /// Canonical form: the polynomial normal form when one exists, else the
    /// expanded form over `exp`/`sin`/`cos`/reciprocal kernels, else (for
    /// very large expansions) children simplified and refolded.
    pub fn simplify(&self) -> Self {
        if let Some(p) = self.poly_normal_form() {
            return p.to_expr();
        }
        if let Some(e) = canon::canonical(self) {
            return e;
        }
        match self.node() {
            Node::Const(_) | Node::Var => self.clone(),
            Node::Sum(ts) => Self::sum(ts.iter().map(Self::simplify)),
            Node::Product(fs) => Self::product(fs.iter().map(Self::simplify)),
            Node::Power(b, n) => b.simplify().pow(*n),
            Node::Quotient(n, d) => {
                let (n, d) = (n.simplify(), d.simplify());
                Self::quotient(&n, &d).unwrap_or_else(|_| Self::quotient_unchecked(n, d))
            }
            Node::Exp(a) => a.simplify().exp(),
            Node::Sin(a) => a.simplify().sin(),
            Node::Cos(a) => a.simplify().cos(),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.poly_normal_form().is_some()
    }

    pub fn node_count(&self) -> usize {
        1 + match self.node() {
            Node::Const(_) | Node::Var => 0,
            Node::Sum(v) | Node::Product(v) => v.iter().map(Self::node_count).sum(),
            Node::Power(b, _) => b.node_count(),
            Node::Quotient(n, d) => n.node_count() + d.node_count(),
            Node::Exp(a) | Node::Sin(a) | Node::Cos(a) => a.node_count(),
        }
    }
}

impl From<ComplexRational> for SmoothExpr {
    fn from(c: ComplexRational) -> Self {
        SmoothExpr::constant(c)
    }
}

impl From<Poly> for SmoothExpr {
    fn from(p: Poly) -> Self {
        p.to_expr()
    }
}

impl std::ops::Add for &SmoothExpr {
    type Output = SmoothExpr;
    fn add(self, rhs: &SmoothExpr) -> SmoothExpr {
        SmoothExpr::sum([self.clone(), rhs.clone()])
    }
}

impl std::ops::Sub for &SmoothExpr {
    type Output = SmoothExpr;
    fn sub(self, rhs: &SmoothExpr) -> SmoothExpr {
        SmoothExpr::sum([self.clone(), -rhs])
    }
}

impl std::ops::Mul for &SmoothExpr {
    type Output = SmoothExpr;
    fn mul(self, rhs: &SmoothExpr) -> SmoothExpr {
        SmoothExpr::product([self.clone(), rhs.clone()])
    }
}

impl std::ops::Neg for &SmoothExpr {
    type Output = SmoothExpr;
    fn neg(self) -> SmoothExpr {
        SmoothExpr::product([SmoothExpr::int(-1), self.clone()])
    }
}
