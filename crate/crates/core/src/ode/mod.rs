//! Linear ODEs with smooth coefficients and their confinement to a
//! half-line or an interval.
//!
//! For `Σ aᵢ ψ⁽ⁱ⁾ = f` the confined equation on `]a, +∞[` reads
//!
//! ```text
//! Σ aᵢ ψ⁽ⁱ⁾ = H(x − a)·f + Σ_{1 ≤ j ≤ i} C(i, j)·aᵢ·(δ⁽ʲ⁻¹⁾(x − a) ★ ψ⁽ⁱ⁻ʲ⁾)
//! ```
//!
//! and its solutions in the algebra are exactly `H(x − a)·ψ_U`. On `]a, b[`
//! the upper endpoint contributes the same sum with the opposite sign
//! (`d/dx H(b − x) = −δ(x − b)`) and with `★₂`, which reads the solution from
//! the left of `b`.

mod display;
mod report;

use num_bigint::BigInt;
use serde::Serialize;

pub use display::format_equation;
pub use report::{verify_confinement, ConfinementReport, Sample};

use crate::dist::{DeltaAtom, GenDist};
use crate::error::{Error, Result};
use crate::expr::equal::sample_points;
use crate::expr::SmoothExpr;
use crate::rational::{binomial, ComplexRational, Rational};
use crate::star::{star_variant, VariantTag};

/// `Σ_{i=0..n} aᵢ ψ⁽ⁱ⁾ = f` with `n ≥ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearODE {
    coeffs: Vec<SmoothExpr>,
    rhs: SmoothExpr,
    leading_nonvanishing: bool,
}

/// Samples used for the nonvanishing check on the leading coefficient.
pub const LEADING_SAMPLES: usize = 64;
pub const LEADING_THRESHOLD: f64 = 1e-9;

impl LinearODE {
    /// `coeffs` in ascending order `a₀, …, aₙ`.
    pub fn new(coeffs: Vec<SmoothExpr>, rhs: SmoothExpr) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Shape(format!(
                "an equation of order n >= 1 needs at least 2 coefficients, got {}",
                coeffs.len()
            )));
        }
        let coeffs: Vec<SmoothExpr> = coeffs.iter().map(SmoothExpr::simplify).collect();
        let lead = coeffs.last().expect("nonempty");
        if lead.is_zero_const() || lead.poly_normal_form().is_some_and(|p| p.is_zero()) {
            return Err(Error::DegenerateLeadingCoefficient);
        }
        let leading_nonvanishing = sample_points(-10.0, 10.0, LEADING_SAMPLES)
            .all(|x| lead.eval_f64(x).is_ok_and(|v| v.norm() > LEADING_THRESHOLD));
        Ok(LinearODE { coeffs, rhs: rhs.simplify(), leading_nonvanishing })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[SmoothExpr] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &SmoothExpr {
        &self.coeffs[i]
    }

    pub fn rhs(&self) -> &SmoothExpr {
        &self.rhs
    }

    /// Whether `aₙ` stayed above the threshold at every sample point; this
    /// is a sampled check, not a proof.
    pub fn leading_nonvanishing(&self) -> bool {
        self.leading_nonvanishing
    }

    /// `Σ aᵢ ψ⁽ⁱ⁾` for a smooth `ψ`.
    pub fn apply_smooth(&self, psi: &SmoothExpr) -> SmoothExpr {
        let mut d = psi.clone();
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                d = d.diff();
            }
            terms.push(a * &d);
        }
        SmoothExpr::sum(terms)
    }

    /// `Σ aᵢ ψ⁽ⁱ⁾` in the algebra.
    pub fn apply(&self, psi: &GenDist) -> Result<GenDist> {
        let mut d = psi.clone();
        let mut total = GenDist::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                d = d.differentiate()?;
            }
            if !a.is_zero_const() {
                total = &total + &d.mul_smooth(a)?;
            }
        }
        Ok(total)
    }
}

/// Convenience constructor taking ascending coefficients.
pub fn make_ode(coeffs: Vec<SmoothExpr>, rhs: SmoothExpr) -> Result<LinearODE> {
    LinearODE::new(coeffs, rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Interval {
    /// `]a, +∞[`
    HalfLine(#[serde(serialize_with = "ser_rational")] Rational),
    /// `]a, b[`
    Bounded(
        #[serde(serialize_with = "ser_rational")] Rational,
        #[serde(serialize_with = "ser_rational")] Rational,
    ),
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::rational::rational_to_pq(r))
}

impl Interval {
    /// Characteristic function of the open interval.
    pub fn indicator(&self) -> GenDist {
        match self {
            Interval::HalfLine(a) => GenDist::heaviside(a.clone()),
            Interval::Bounded(a, b) => GenDist::indicator(a.clone(), b.clone()).expect("a < b"),
        }
    }

    pub fn location(&self, e: Endpoint) -> Option<&Rational> {
        match (self, e) {
            (Interval::HalfLine(a), Endpoint::Lower) | (Interval::Bounded(a, _), Endpoint::Lower) => Some(a),
            (Interval::Bounded(_, b), Endpoint::Upper) => Some(b),
            (Interval::HalfLine(_), Endpoint::Upper) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Endpoint {
    Lower,
    Upper,
}

impl Endpoint {
    /// Sign of `dʲ/dxʲ` of the indicator's step at this endpoint, relative
    /// to `δ⁽ʲ⁻¹⁾`.
    pub fn sign(self) -> i64 {
        match self {
            Endpoint::Lower => 1,
            Endpoint::Upper => -1,
        }
    }

    /// Product used for the correction terms at this endpoint.
    pub fn product(self) -> VariantTag {
        match self {
            Endpoint::Lower => VariantTag::Star,
            Endpoint::Upper => VariantTag::Star2,
        }
    }
}

/// One term `sign·C(i, j)·aᵢ·(δ⁽ʲ⁻¹⁾(x − e) ⋆ ψ⁽ⁱ⁻ʲ⁾)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrectionTerm {
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "ser_bigint")]
    pub binomial: BigInt,
    pub endpoint: Endpoint,
    /// Order of the Heaviside derivative, `H⁽ʲ⁾ = δ⁽ʲ⁻¹⁾`.
    pub heaviside_order: usize,
}

fn ser_bigint<S: serde::Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConfinedEquation {
    pub base: LinearODE,
    pub interval: Interval,
    pub terms: Vec<CorrectionTerm>,
}

fn terms_for(ode: &LinearODE, endpoint: Endpoint) -> Vec<CorrectionTerm> {
    let mut out = Vec::new();
    for i in 1..=ode.order() {
        if ode.coeff(i).is_zero_const() {
            continue;
        }
        for j in 1..=i {
            out.push(CorrectionTerm {
                i,
                j,
                binomial: binomial(i as u32, j as u32),
                endpoint,
                heaviside_order: j,
            });
        }
    }
    out
}

pub fn confine_halfline(ode: &LinearODE, a: Rational) -> ConfinedEquation {
    ConfinedEquation { base: ode.clone(), interval: Interval::HalfLine(a), terms: terms_for(ode, Endpoint::Lower) }
}

pub fn confine_interval(ode: &LinearODE, a: Rational, b: Rational) -> Result<ConfinedEquation> {
    if a >= b {
        return Err(Error::Shape(format!("interval ]{a}, {b}[ is empty")));
    }
    let mut terms = terms_for(ode, Endpoint::Lower);
    terms.extend(terms_for(ode, Endpoint::Upper));
    Ok(ConfinedEquation { base: ode.clone(), interval: Interval::Bounded(a, b), terms })
}

impl ConfinedEquation {
    /// `Σ sign·C(i, j)·aᵢ·(δ⁽ʲ⁻¹⁾(x − e) ⋆ ψ⁽ⁱ⁻ʲ⁾)` for a candidate `ψ`.
    pub fn correction_sum(&self, psi: &GenDist) -> Result<GenDist> {
        let n = self.base.order();
        let mut derivs = vec![psi.clone()];
        for _ in 0..n {
            let next = derivs.last().expect("nonempty").differentiate()?;
            derivs.push(next);
        }
        let mut total = GenDist::zero();
        for t in &self.terms {
            let e = self.interval.location(t.endpoint).expect("endpoint exists").clone();
            let step = GenDist::delta(e, (t.heaviside_order - 1) as u32);
            let prod = star_variant(&step, &derivs[t.i - t.j], t.endpoint.product())?;
            let weight = ComplexRational::real((t.binomial.clone() * BigInt::from(t.endpoint.sign())).into());
            total = &total + &prod.mul_smooth(self.base.coeff(t.i))?.scale(&weight);
        }
        Ok(total)
    }

    /// Right-hand side `χ·f + correction_sum(ψ)`.
    pub fn rhs(&self, psi: &GenDist) -> Result<GenDist> {
        let source = self.interval.indicator().mul_smooth(self.base.rhs())?;
        Ok(&source + &self.correction_sum(psi)?)
    }

    /// Left side minus right side; the zero distribution exactly when `ψ`
    /// solves the confined equation.
    pub fn residual(&self, psi: &GenDist) -> Result<GenDist> {
        Ok(&self.base.apply(psi)? - &self.rhs(psi)?)
    }
}

pub fn residual(ceq: &ConfinedEquation, psi: &GenDist) -> Result<GenDist> {
    ceq.residual(psi)
}

/// `Σ_{i=1..n} Σ_{k=0..i−1} aᵢ·ψ_U⁽ᵏ⁾(a)·δ⁽ⁱ⁻¹⁻ᵏ⁾(x − a)`, the delta terms
/// produced by differentiating `H(x − a)·ψ_U`.
pub fn particular_rhs(ode: &LinearODE, values: &[ComplexRational], a: &Rational) -> Result<GenDist> {
    let n = ode.order();
    if values.len() != n {
        return Err(Error::Shape(format!("expected {n} boundary values, got {}", values.len())));
    }
    let mut total = GenDist::zero();
    for i in 1..=n {
        for (k, v) in values.iter().enumerate().take(i) {
            let atom = GenDist::atom(DeltaAtom::new(a.clone(), (i - 1 - k) as u32, v.clone()));
            total = &total + &atom.mul_smooth(ode.coeff(i))?;
        }
    }
    Ok(total)
}
