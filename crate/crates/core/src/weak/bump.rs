use std::sync::{Arc, Mutex};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::expr::SmoothExpr;
use crate::rational::{rational_to_f64, Rational};

/// Width of the band next to the support endpoints, in the normalized
/// variable, where the test function and all its derivatives are taken to
/// be exactly zero.
pub const DEFAULT_GUARD: f64 = 1e-12;

/// A compactly supported test function `t(x) = c·φ(u)`, with
/// `u = (2x − a − b)/(b − a)` mapping `[a, b]` onto `[−1, 1]`.
///
/// The body `φ` is a [`SmoothExpr`] in `u` (written with the variable `x`);
/// the default is the standard bump `exp(−1/(1 − u²))`. Derivatives are
/// symbolic: `t⁽ᵏ⁾(x) = c·(2/(b − a))ᵏ·φ⁽ᵏ⁾(u)`, and the symbolic
/// derivatives of `φ` are cached and shared between clones.
#[derive(Clone, Debug)]
pub struct TestFunction {
    a: Rational,
    b: Rational,
    amplitude: f64,
    order: u32,
    derivs: Arc<Mutex<Vec<SmoothExpr>>>,
}

impl PartialEq for TestFunction {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
            && self.b == other.b
            && self.amplitude == other.amplitude
            && self.order == other.order
            && self.body() == other.body()
    }
}

impl TestFunction {
    /// `c·exp(−1/(1 − u²))` on `[a, b]`.
    pub fn bump(a: Rational, b: Rational, amplitude: f64) -> Result<Self> {
        let u = SmoothExpr::x();
        let one = SmoothExpr::one();
        let exponent = SmoothExpr::quotient(&SmoothExpr::int(-1), &(&one - &u.pow(2)))?;
        Self::with_body(a, b, amplitude, exponent.exp())
    }

    /// Custom body in the normalized variable. The caller is responsible for
    /// the body and its derivatives vanishing at `u = ±1`.
    pub fn with_body(a: Rational, b: Rational, amplitude: f64, body: SmoothExpr) -> Result<Self> {
        if a >= b {
            return Err(Error::Shape(format!("test function support [{a}, {b}] is empty")));
        }
        Ok(TestFunction { a, b, amplitude, order: 0, derivs: Arc::new(Mutex::new(vec![body])) })
    }

    pub fn support(&self) -> (&Rational, &Rational) {
        (&self.a, &self.b)
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn body(&self) -> SmoothExpr {
        self.body_derivative(0)
    }

    /// Which derivative of the original function this handle evaluates.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `t′`, sharing the derivative cache.
    pub fn derivative(&self) -> TestFunction {
        TestFunction { order: self.order + 1, ..self.clone() }
    }

    fn body_derivative(&self, k: u32) -> SmoothExpr {
        let mut cache = self.derivs.lock().expect("derivative cache poisoned");
        while cache.len() <= k as usize {
            let next = cache.last().expect("body present").diff().simplify();
            cache.push(next);
        }
        cache[k as usize].clone()
    }

    /// `t⁽ᵏ⁾(x)` relative to this handle, i.e. derivative `order + k` of the
    /// original function, with the given guard band.
    pub fn eval_derivative(&self, k: u32, x: f64, guard: f64) -> Result<Complex64> {
        let (a, b) = (rational_to_f64(&self.a), rational_to_f64(&self.b));
        let u = (2.0 * x - a - b) / (b - a);
        if u.is_nan() || u.abs() >= 1.0 - guard {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let n = self.order + k;
        let chain = (2.0 / (b - a)).powi(n as i32);
        Ok(self.body_derivative(n).eval_f64(u)? * (self.amplitude * chain))
    }

    pub fn eval(&self, x: f64) -> Result<Complex64> {
        self.eval_derivative(0, x, DEFAULT_GUARD)
    }
}
