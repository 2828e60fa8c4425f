use serde::{Deserialize, Serialize};

use super::SmoothExpr;

pub const DEFAULT_SAMPLES: usize = 32;
pub const DEFAULT_REL_TOL: f64 = 1e-9;
const DEFAULT_WINDOW: (f64, f64) = (-10.0, 10.0);

/// Outcome of a semi-decision procedure for equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Unequal,
    Unknown,
}

impl Verdict {
    /// Combines two verdicts: any `Unequal` wins, then `Unknown`.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Unequal, _) | (_, Unequal) => Unequal,
            (Unknown, _) | (_, Unknown) => Unknown,
            _ => Equal,
        }
    }

    pub fn is_equal(self) -> bool {
        self == Verdict::Equal
    }
}

/// Deterministic, non-rational-looking sample abscissae in `[lo, hi]`.
pub(crate) fn sample_points(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    const GOLDEN: f64 = 0.618_033_988_749_894_9;
    (0..n).map(move |k| {
        let frac = (k as f64 + (k as f64 * GOLDEN).fract() * 0.8 + 0.1) / n as f64;
        lo + (hi - lo) * frac
    })
}

impl SmoothExpr {
    /// Equality on the default window `[-10, 10]`.
    pub fn equal(&self, other: &SmoothExpr) -> Verdict {
        self.equal_on(other, DEFAULT_WINDOW.0, DEFAULT_WINDOW.1)
    }

    /// `Equal` only with a proof (structural identity, matching polynomial
    /// normal forms, or a difference whose expanded form is zero); `Unequal` when a sample in `[lo, hi]` separates the two
    /// beyond the relative tolerance; `Unknown` otherwise.
    pub fn equal_on(&self, other: &SmoothExpr, lo: f64, hi: f64) -> Verdict {
        if self == other {
            return Verdict::Equal;
        }
        if let (Some(p), Some(q)) = (self.poly_normal_form(), other.poly_normal_form()) {
            return if p == q { Verdict::Equal } else { Verdict::Unequal };
        }
        if (self - other).simplify().is_zero_const() {
            return Verdict::Equal;
        }
        for x in sample_points(lo, hi, DEFAULT_SAMPLES) {
            let (Ok(a), Ok(b)) = (self.eval_f64(x), other.eval_f64(x)) else {
                continue;
            };
            if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
                continue;
            }
            let scale = a.norm().max(b.norm()).max(1.0);
            if (a - b).norm() > DEFAULT_REL_TOL * scale {
                return Verdict::Unequal;
            }
        }
        Verdict::Unknown
    }
}
