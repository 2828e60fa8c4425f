//! Numerical weak action `<F, t>` and the translation-limit oracle.
//!
//! The oracle evaluates `<F · G(x + ε), t>` for a decreasing schedule of
//! `ε` with the Hörmander structure (quadrature for the regular part,
//! derivative formulas for the atoms) and extrapolates to `ε → 0⁺`. It never
//! calls the closed-form products, so it can check them.

mod bump;

use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;
use num_complex::Complex64;

pub use bump::{TestFunction, DEFAULT_GUARD};

use crate::dist::{union_grid, GenDist, PiecewiseSmooth, Side};
use crate::error::{Error, Result};
use crate::expr::SmoothExpr;
use crate::rational::{binomial, rat, rational_to_f64, Rational};

pub const DEFAULT_NODES: usize = 64;

/// How the schedule of `ε` values is turned into a limit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Extrapolation {
    /// Value at the smallest `ε`.
    LastValue,
    /// Linear extrapolation through the last two schedule points.
    #[default]
    Richardson,
    /// Richardson tableau over the whole schedule: the interpolating
    /// polynomial in `ε` evaluated at zero.
    RichardsonAll,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureConfig {
    /// Gauss–Legendre nodes per smoothness interval.
    pub nodes: usize,
    /// Guard band passed to [`TestFunction::eval_derivative`].
    pub guard: f64,
    /// Strictly decreasing positive `ε` values.
    pub schedule: Vec<Rational>,
    pub extrapolation: Extrapolation,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            nodes: DEFAULT_NODES,
            guard: DEFAULT_GUARD,
            schedule: vec![rat(1, 100), rat(1, 1000), rat(1, 10000)],
            extrapolation: Extrapolation::Richardson,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.nodes == 0 {
            return Err(Error::Shape("quadrature needs at least one node".into()));
        }
        if self.schedule.is_empty() {
            return Err(Error::Shape("epsilon schedule is empty".into()));
        }
        let zero = rat(0, 1);
        if self.schedule.iter().any(|e| e <= &zero) || self.schedule.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Shape("epsilon schedule must be positive and strictly decreasing".into()));
        }
        Ok(())
    }

    fn rule(&self) -> Result<GaussLegendre> {
        let n = NonZeroUsize::new(self.nodes).ok_or_else(|| Error::Shape("quadrature needs at least one node".into()))?;
        Ok(GaussLegendre::new(n))
    }
}

/// `F(x + h)`: breakpoints and atoms move to `w − h`, pieces are composed
/// with `x ↦ x + h`.
pub fn translate(f: &GenDist, h: &Rational) -> GenDist {
    let breakpoints = f.breakpoints().iter().map(|w| w - h).collect();
    let pieces = f.pieces().iter().map(|p| p.shift(h)).collect();
    let regular = PiecewiseSmooth::new(breakpoints, pieces).expect("translation keeps the shape");
    let mut atoms = f.atoms().to_vec();
    for a in &mut atoms {
        a.location = &a.location - h;
    }
    let mut inexact = f.inexact_atoms().to_vec();
    for a in &mut inexact {
        a.location = &a.location - h;
    }
    GenDist::from_parts(regular, atoms, inexact)
}

/// `∫ integrand · t` over `[a, b]` split at `cuts`, with Gauss–Legendre on
/// each piece. `integrand(k, x)` receives the index of the cell containing
/// `x` in the grid `cuts`.
fn integrate_split(
    cuts: &[Rational],
    t: &TestFunction,
    cfg: &QuadratureConfig,
    rule: &GaussLegendre,
    mut integrand: impl FnMut(&Rational, f64) -> Result<Complex64>,
) -> Result<Complex64> {
    let (a, b) = t.support();
    let mut ends = vec![a.clone()];
    ends.extend(cuts.iter().filter(|c| *c > a && *c < b).cloned());
    ends.push(b.clone());
    let mut total = Complex64::new(0.0, 0.0);
    for w in ends.windows(2) {
        let (lo, hi) = (rational_to_f64(&w[0]), rational_to_f64(&w[1]));
        let mid = (&w[0] + &w[1]) / rat(2, 1);
        let (half, centre) = (0.5 * (hi - lo), 0.5 * (hi + lo));
        for (node, weight) in rule.as_node_weight_pairs() {
            let x = centre + half * node;
            let tx = t.eval_derivative(0, x, cfg.guard)?;
            if tx.norm() == 0.0 {
                continue;
            }
            total += integrand(&mid, x)? * tx * (weight * half);
        }
    }
    Ok(total)
}

/// `<c·δ⁽ᵏ⁾(x − w), φ·t> = c·(−1)ᵏ Σⱼ C(k, j) φ⁽ʲ⁾(w) t⁽ᵏ⁻ʲ⁾(w)`, with `φ`
/// symbolic.
fn atom_against(
    w: &Rational,
    order: u32,
    coeff: Complex64,
    phi: &SmoothExpr,
    t: &TestFunction,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    let x = rational_to_f64(w);
    let (a, b) = t.support();
    if w <= a || w >= b {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut dphi = phi.clone();
    for j in 0..=order {
        if j > 0 {
            dphi = dphi.diff();
        }
        let c = rational_to_f64(&binomial(order, j).into());
        sum += dphi.eval_f64(x)? * t.eval_derivative(order - j, x, cfg.guard)? * c;
    }
    let sign = if order % 2 == 1 { -1.0 } else { 1.0 };
    Ok(coeff * sum * sign)
}

fn atoms_against(f: &GenDist, phi: impl Fn(&Rational) -> SmoothExpr, t: &TestFunction, cfg: &QuadratureConfig) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    for a in f.atoms() {
        total += atom_against(&a.location, a.order, a.coeff.to_complex64(), &phi(&a.location), t, cfg)?;
    }
    for a in f.inexact_atoms() {
        total += atom_against(&a.location, a.order, a.coeff, &phi(&a.location), t, cfg)?;
    }
    Ok(total)
}

/// `<F, t>`: quadrature of each piece against `t` on the part of its
/// interval inside the support, plus `c·(−1)ᵏ t⁽ᵏ⁾(w)` for every atom.
pub fn action(f: &GenDist, t: &TestFunction, cfg: &QuadratureConfig) -> Result<Complex64> {
    let rule = cfg.rule()?;
    let regular = integrate_split(f.breakpoints(), t, cfg, &rule, |mid, x| {
        f.regular().piece_at(mid, Side::Left).eval_f64(x)
    })?;
    Ok(regular + atoms_against(f, |_| SmoothExpr::one(), t, cfg)?)
}

/// `<F · G(x + ε), t>` computed as a Hörmander product: the singular
/// supports of `F` and the translate must be disjoint.
pub fn epsilon_product_action(
    f: &GenDist,
    g: &GenDist,
    t: &TestFunction,
    eps: &Rational,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    let f = f.clone().normalize();
    let g_eps = translate(g, eps);
    let vf = f.singular_support();
    let vg = g_eps.singular_support();
    if let Some(w) = vf.iter().find(|w| vg.binary_search(w).is_ok()) {
        return Err(Error::EpsilonTooLarge(format!("{eps} (collision at {w})")));
    }
    let rule = cfg.rule()?;
    let cuts = union_grid([f.breakpoints(), g_eps.breakpoints()]);
    let regular = integrate_split(&cuts, t, cfg, &rule, |mid, x| {
        let p = f.regular().piece_at(mid, Side::Left).eval_f64(x)?;
        let q = g_eps.regular().piece_at(mid, Side::Left).eval_f64(x)?;
        Ok(p * q)
    })?;
    // Away from its own singular support each factor is smooth, so the piece
    // on either side of another factor's atom is the same function.
    let f_atoms = atoms_against(&f, |w| g_eps.regular().piece_at(w, Side::Left).clone(), t, cfg)?;
    let g_atoms = atoms_against(&g_eps, |w| f.regular().piece_at(w, Side::Left).clone(), t, cfg)?;
    Ok(regular + f_atoms + g_atoms)
}

/// The `ε → 0⁺` limit of [`epsilon_product_action`] along the configured
/// schedule; approximates `<F ★ G, t>`.
pub fn star_oracle(f: &GenDist, g: &GenDist, t: &TestFunction, cfg: &QuadratureConfig) -> Result<Complex64> {
    cfg.validate()?;
    let values = cfg
        .schedule
        .iter()
        .map(|e| epsilon_product_action(f, g, t, e, cfg))
        .collect::<Result<Vec<_>>>()?;
    let n = values.len();
    match (cfg.extrapolation, n) {
        (Extrapolation::Richardson, 2..) => {
            let (e1, e2) = (rational_to_f64(&cfg.schedule[n - 2]), rational_to_f64(&cfg.schedule[n - 1]));
            let (v1, v2) = (values[n - 2], values[n - 1]);
            Ok(v2 + (v2 - v1) * (e2 / (e1 - e2)))
        }
        (Extrapolation::RichardsonAll, 2..) => {
            let eps: Vec<f64> = cfg.schedule.iter().map(rational_to_f64).collect();
            Ok(neville_at_zero(&eps, values))
        }
        _ => Ok(values[n - 1]),
    }
}

fn neville_at_zero(eps: &[f64], mut p: Vec<Complex64>) -> Complex64 {
    let n = p.len();
    for level in 1..n {
        for i in 0..n - level {
            let (lo, hi) = (eps[i], eps[i + level]);
            p[i] = (p[i + 1] * lo - p[i] * hi) / (lo - hi);
        }
    }
    p[0]
}
