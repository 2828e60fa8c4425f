use num_complex::Complex64;
use serde::Serialize;

use super::{ConfinedEquation, Interval};
use crate::dist::{GenDist, GenDistJson, Side};
use crate::error::Result;
use crate::expr::equal::sample_points;
use crate::expr::{SmoothExpr, Verdict};
use crate::rational::{rational_from_f64, rational_to_f64};

/// Points at which the classical residual of `ψ_U` is sampled.
pub const CLASSICAL_SAMPLES: usize = 16;
pub const CLASSICAL_TOL: f64 = 1e-8;
/// Points at which the regular part of the confined residual is sampled.
pub const REGULAR_SAMPLES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Sample {
    pub x: f64,
    /// `[re, im]`
    pub value: [f64; 2],
}

impl Sample {
    fn new(x: f64, v: Complex64) -> Self {
        Sample { x, value: [v.re, v.im] }
    }

    pub fn norm(&self) -> f64 {
        self.value[0].hypot(self.value[1])
    }
}

/// Outcome of [`verify_confinement`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfinementReport {
    /// Whether the residual is the zero distribution.
    pub verdict: Verdict,
    pub residual: GenDistJson,
    /// Regular part of the residual at points spread around the interval.
    pub samples: Vec<Sample>,
    /// True when the residual has no atoms at all, exact or floating.
    pub atoms_exact_zero: bool,
    /// `Σ aᵢ ψ_U⁽ⁱ⁾ − f` at sample points.
    pub classical_samples: Vec<Sample>,
    /// Every classical sample within tolerance; reported, not enforced.
    pub classical_ok: bool,
    /// Sampled nonvanishing of the leading coefficient.
    pub leading_nonvanishing: bool,
    #[serde(skip)]
    pub residual_dist: GenDist,
}

fn window(interval: &Interval) -> (f64, f64) {
    match interval {
        Interval::HalfLine(a) => {
            let a = rational_to_f64(a);
            (a - 5.0, a + 5.0)
        }
        Interval::Bounded(a, b) => {
            let (a, b) = (rational_to_f64(a), rational_to_f64(b));
            let pad = (b - a).max(1.0);
            (a - pad, b + pad)
        }
    }
}

/// Builds `ψ_C = χ·ψ_U`, evaluates the residual of the confined equation,
/// and samples both the residual and the classical equation.
pub fn verify_confinement(ceq: &ConfinedEquation, psi_u: &SmoothExpr) -> Result<ConfinementReport> {
    let ode = &ceq.base;
    let classical = &ode.apply_smooth(psi_u) - ode.rhs();
    let classical_samples: Vec<Sample> = sample_points(-10.0, 10.0, CLASSICAL_SAMPLES)
        .map(|x| classical.eval_f64(x).map(|v| Sample::new(x, v)))
        .collect::<Result<_>>()?;
    let classical_ok = classical_samples.iter().all(|s| {
        let scale = psi_u.eval_f64(s.x).map(|v| v.norm()).unwrap_or(0.0);
        s.norm() <= CLASSICAL_TOL * (1.0 + scale)
    });

    let psi_c = ceq.interval.indicator().mul_smooth(psi_u)?;
    let residual = ceq.residual(&psi_c)?;
    let verdict = residual.equal_dist(&GenDist::zero());
    let (lo, hi) = window(&ceq.interval);
    let samples = sample_points(lo, hi, REGULAR_SAMPLES)
        .map(|x| {
            let at = rational_from_f64(x).expect("finite sample");
            let piece = residual.regular().piece_at(&at, Side::Right);
            piece.eval_f64(x).map(|v| Sample::new(x, v))
        })
        .collect::<Result<_>>()?;

    Ok(ConfinementReport {
        verdict,
        residual: GenDistJson::from(&residual),
        samples,
        atoms_exact_zero: !residual.has_atoms(),
        classical_samples,
        classical_ok,
        leading_nonvanishing: ode.leading_nonvanishing(),
        residual_dist: residual,
    })
}

impl ConfinementReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
