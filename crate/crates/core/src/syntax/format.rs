use std::fmt::Write;

use num_traits::{One, Signed, Zero};

use crate::dist::GenDist;
use crate::error::Error;
use crate::expr::display::{latex_const, latex_rational};
use crate::expr::SmoothExpr;
use crate::rational::{ComplexRational, Rational};

/// Output mode for [`format_dist`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Format {
    #[default]
    Text,
    Latex,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse { position: 0, message: format!("unknown format `{s}`") }),
        }
    }
}

/// Renders `F` in canonical order: regular part by ascending breakpoint,
/// then atoms by `(location, order)`. The text form parses back with
/// [`parse_dist`](super::parse_dist).
pub fn format_dist(f: &GenDist, mode: Format) -> String {
    match mode {
        Format::Text => render(f, &TEXT),
        Format::Latex => render(f, &LATEX),
        Format::Json => f.to_json(),
    }
}

struct Style {
    heaviside: fn(&Rational, bool) -> String,
    delta: fn(&Rational, u32) -> String,
    coeff: fn(&ComplexRational) -> String,
    float: fn(f64) -> String,
    piece: fn(&SmoothExpr) -> String,
    times: &'static str,
}

const TEXT: Style = Style {
    heaviside: |c, reversed| format!("H({})", text_linarg(c, reversed)),
    delta: |c, k| {
        if k == 0 {
            format!("delta({})", text_linarg(c, false))
        } else {
            format!("delta[{k}]({})", text_linarg(c, false))
        }
    },
    coeff: |c| c.to_string(),
    float: |v| format!("{v:?}"),
    piece: SmoothExpr::to_text_factor,
    times: "*",
};

const LATEX: Style = Style {
    heaviside: |c, reversed| format!("H({})", latex_linarg(c, reversed)),
    delta: |c, k| {
        if k == 0 {
            format!("\\delta({})", latex_linarg(c, false))
        } else {
            format!("\\delta^{{({k})}}({})", latex_linarg(c, false))
        }
    },
    coeff: latex_const,
    float: |v| format!("{v}"),
    piece: SmoothExpr::to_latex_factor,
    times: " \\cdot ",
};

fn text_linarg(c: &Rational, reversed: bool) -> String {
    match (reversed, c.is_zero()) {
        (false, true) => "x".into(),
        (true, true) => "-x".into(),
        (false, false) if c.is_negative() => format!("x + {}", -c),
        (false, false) => format!("x - {c}"),
        (true, false) => format!("{c} - x"),
    }
}

fn latex_linarg(c: &Rational, reversed: bool) -> String {
    match (reversed, c.is_zero()) {
        (false, true) => "x".into(),
        (true, true) => "-x".into(),
        (false, false) if c.is_negative() => format!("x + {}", latex_rational(&-c)),
        (false, false) => format!("x - {}", latex_rational(c)),
        (true, false) => format!("{} - x", latex_rational(c)),
    }
}

/// A coefficient whose printed form starts with a minus sign is emitted as a
/// subtraction of its negation.
fn leading_negative(c: &ComplexRational) -> bool {
    (c.im.is_zero() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative())
}

fn render(f: &GenDist, style: &Style) -> String {
    let mut terms: Vec<(bool, String)> = Vec::new();
    let bps = f.breakpoints();
    let pieces = f.pieces();
    let mut start = 0;
    while start < pieces.len() {
        // Atom-only breakpoints split equal pieces; print each run once.
        let piece = &pieces[start];
        let mut end = start;
        while end + 1 < pieces.len() && &pieces[end + 1] == piece {
            end += 1;
        }
        let (k_lo, k_hi) = (start, end);
        start = end + 1;
        if piece.is_zero_const() {
            continue;
        }
        let mut factors = Vec::new();
        if k_lo > 0 {
            factors.push((style.heaviside)(&bps[k_lo - 1], false));
        }
        if k_hi < bps.len() {
            factors.push((style.heaviside)(&bps[k_hi], true));
        }
        let negative = piece.as_const().is_some_and(leading_negative);
        let shown = if negative { -piece } else { piece.clone() };
        match shown.as_const() {
            Some(c) if c.is_one() && !factors.is_empty() => {}
            Some(_) => factors.insert(0, (style.piece)(&shown)),
            None => factors.push((style.piece)(&shown)),
        }
        terms.push((negative, factors.join(style.times)));
    }
    for a in f.atoms() {
        let negative = leading_negative(&a.coeff);
        let c = if negative { -&a.coeff } else { a.coeff.clone() };
        let delta = (style.delta)(&a.location, a.order);
        let body = if c.is_one() { delta } else { format!("{}{}{delta}", (style.coeff)(&c), style.times) };
        terms.push((negative, body));
    }
    for a in f.inexact_atoms() {
        let delta = (style.delta)(&a.location, a.order);
        let (re, im) = (a.coeff.re, a.coeff.im);
        let body = if im == 0.0 {
            format!("{}{}{delta}", (style.float)(re.abs()), style.times)
        } else {
            let sign = if im < 0.0 { "-" } else { "+" };
            let i = if style.times == "*" { "*i" } else { "i" };
            format!("({} {sign} {}{i}){}{delta}", (style.float)(re), (style.float)(im.abs()), style.times)
        };
        terms.push((im == 0.0 && re < 0.0, body));
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (negative, body)) in terms.iter().enumerate() {
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let _ = write!(out, "{body}");
    }
    out
}
