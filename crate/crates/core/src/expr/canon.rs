//! Expanded normal form over non-polynomial kernels.
//!
//! An expression is expanded into `Σ p_m(x) · m` where each monomial `m` is
//! `exp(a) · Π kᵢ^eᵢ` with kernels `kᵢ` among `sin(·)`, `cos(·)` and
//! reciprocals `1/d`, and `p_m` is an exact polynomial. Exponentials combine
//! (`exp(a)·exp(b) = exp(a + b)`), so terms such as `x·exp(-x) - exp(-x)·x`
//! cancel structurally.

use std::collections::BTreeMap;

use super::{Node, Poly, SmoothExpr};
use crate::rational::ComplexRational;

// Expansions larger than this fall back to plain recursive simplification.
const MAX_TERMS: usize = 256;

#[derive(Clone, Debug)]
struct Monomial {
    exp_arg: SmoothExpr,
    kernels: BTreeMap<String, (SmoothExpr, u32)>,
}

impl Monomial {
    fn unit() -> Self {
        Monomial { exp_arg: SmoothExpr::zero(), kernels: BTreeMap::new() }
    }

    fn key(&self) -> String {
        let mut key = String::new();
        if !self.exp_arg.is_zero_const() {
            key.push_str(&format!("exp({})", self.exp_arg));
        }
        for (k, (_, e)) in &self.kernels {
            key.push_str(&format!("|{k}^{e}"));
        }
        key
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let exp_arg = (&self.exp_arg + &other.exp_arg).simplify();
        let mut kernels = self.kernels.clone();
        for (k, (e, n)) in &other.kernels {
            kernels.entry(k.clone()).or_insert_with(|| (e.clone(), 0)).1 += n;
        }
        Monomial { exp_arg, kernels }
    }

    fn to_factors(&self) -> Vec<SmoothExpr> {
        let mut out = Vec::new();
        if !self.exp_arg.is_zero_const() {
            out.push(self.exp_arg.exp());
        }
        out.extend(self.kernels.values().map(|(k, n)| k.pow(*n)));
        out
    }
}

#[derive(Clone, Debug, Default)]
struct Expansion(BTreeMap<String, (Monomial, Poly)>);

impl Expansion {
    fn single(m: Monomial, p: Poly) -> Self {
        let mut map = BTreeMap::new();
        if !p.is_zero() {
            map.insert(m.key(), (m, p));
        }
        Expansion(map)
    }

    fn poly(p: Poly) -> Self {
        Self::single(Monomial::unit(), p)
    }

    fn kernel(k: SmoothExpr) -> Self {
        let mut m = Monomial::unit();
        m.kernels.insert(k.to_string(), (k, 1));
        Self::single(m, Poly::constant(ComplexRational::from_int(1)))
    }

    fn add(mut self, other: Expansion) -> Self {
        for (key, (m, p)) in other.0 {
            match self.0.remove(&key) {
                Some((m0, p0)) => {
                    let s = p0.add(&p);
                    if !s.is_zero() {
                        self.0.insert(key, (m0, s));
                    }
                }
                None => {
                    self.0.insert(key, (m, p));
                }
            }
        }
        self
    }

    fn mul(&self, other: &Expansion) -> Option<Self> {
        if self.0.len() * other.0.len() > MAX_TERMS {
            return None;
        }
        let mut out = Expansion::default();
        for (ma, pa) in self.0.values() {
            for (mb, pb) in other.0.values() {
                out = out.add(Expansion::single(ma.mul(mb), pa.mul(pb)));
            }
        }
        Some(out)
    }

    fn to_expr(&self) -> SmoothExpr {
        let mut groups: Vec<&(Monomial, Poly)> = self.0.values().collect();
        groups.sort_by_key(|(m, _)| (!m.kernels.is_empty() || !m.exp_arg.is_zero_const(), m.key()));
        SmoothExpr::sum(groups.into_iter().map(|(m, p)| {
            let mut factors = vec![p.to_expr()];
            factors.extend(m.to_factors());
            SmoothExpr::product(factors)
        }))
    }
}

fn expand(e: &SmoothExpr) -> Option<Expansion> {
    if let Some(p) = e.poly_normal_form() {
        return Some(Expansion::poly(p));
    }
    match e.node() {
        Node::Const(_) | Node::Var => unreachable!("polynomial"),
        Node::Sum(ts) => ts.iter().try_fold(Expansion::default(), |acc, t| Some(acc.add(expand(t)?))),
        Node::Product(fs) => fs
            .iter()
            .try_fold(Expansion::poly(Poly::constant(ComplexRational::from_int(1))), |acc, f| acc.mul(&expand(f)?)),
        Node::Power(b, n) => {
            let base = expand(b)?;
            (0..*n).try_fold(Expansion::poly(Poly::constant(ComplexRational::from_int(1))), |acc, _| acc.mul(&base))
        }
        Node::Quotient(n, d) => {
            let d = d.simplify();
            let recip = match d.poly_normal_form().and_then(|p| p.as_constant()) {
                Some(c) => Expansion::poly(Poly::constant(c.inv()?)),
                None => Expansion::kernel(SmoothExpr::quotient_unchecked(SmoothExpr::one(), d)),
            };
            expand(n)?.mul(&recip)
        }
        Node::Exp(a) => {
            let mut m = Monomial::unit();
            m.exp_arg = a.simplify();
            Some(Expansion::single(m, Poly::constant(ComplexRational::from_int(1))))
        }
        Node::Sin(a) => Some(Expansion::kernel(a.simplify().sin())),
        Node::Cos(a) => Some(Expansion::kernel(a.simplify().cos())),
    }
}

/// The expanded normal form, or `None` when expansion would be too large.
pub(super) fn canonical(e: &SmoothExpr) -> Option<SmoothExpr> {
    expand(e).map(|x| x.to_expr())
}
