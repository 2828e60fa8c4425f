//! Exact algebra of piecewise-smooth functions plus finite Dirac-delta
//! combinations: canonical forms, distributional calculus, the
//! translation-limit product `★` and its variants, a numerical weak-action
//! oracle, and confinement of linear ODEs to an interval.

pub mod dist;
pub mod error;
pub mod expr;
pub mod ode;
pub mod rational;
pub mod star;
pub mod syntax;
pub mod weak;

pub use dist::{DeltaAtom, GenDist, InexactAtom, PiecewiseSmooth, Side};
pub use error::{Error, Result};
pub use expr::{Poly, SmoothExpr, Verdict};
pub use rational::{ComplexRational, Rational};
pub use syntax::{format_dist, parse_dist, parse_smooth, Format};
pub use star::{bracket, bracket_closed_form, hormander, star, star_variant, VariantTag};
pub use weak::{action, epsilon_product_action, star_oracle, translate, Extrapolation, QuadratureConfig, TestFunction};
pub use ode::{
    confine_halfline, confine_interval, format_equation, make_ode, particular_rhs, residual, verify_confinement,
    ConfinedEquation, ConfinementReport, CorrectionTerm, Endpoint, Interval, LinearODE,
};
