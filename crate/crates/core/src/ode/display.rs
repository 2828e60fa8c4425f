use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::{ConfinedEquation, CorrectionTerm, Endpoint, Interval};
use crate::expr::SmoothExpr;
use crate::rational::ComplexRational;
use crate::syntax::{format_dist, Format};

fn psi_text(order: usize) -> String {
    match order {
        0..=3 => format!("psi{}", "'".repeat(order)),
        n => format!("psi^({n})"),
    }
}

fn psi_latex(order: usize) -> String {
    match order {
        0..=3 => format!("\\psi{}", "'".repeat(order)),
        n => format!("\\psi^{{({n})}}"),
    }
}

fn term_weight(ceq: &ConfinedEquation, t: &CorrectionTerm) -> SmoothExpr {
    let b = ComplexRational::real(t.binomial.clone().into());
    ceq.base.coeff(t.i).scale(&b).simplify()
}

fn step_dist(ceq: &ConfinedEquation, t: &CorrectionTerm) -> crate::dist::GenDist {
    let e = ceq.interval.location(t.endpoint).expect("endpoint exists").clone();
    crate::dist::GenDist::delta(e, (t.heaviside_order - 1) as u32)
}

struct Syntax {
    psi: fn(usize) -> String,
    factor: fn(&SmoothExpr) -> String,
    mode: Format,
    times: &'static str,
    open: &'static str,
    close: &'static str,
    star: fn(Endpoint) -> &'static str,
}

const TEXT: Syntax = Syntax {
    psi: psi_text,
    factor: SmoothExpr::to_text_factor,
    mode: Format::Text,
    times: "*",
    open: "(",
    close: ")",
    star: |e| match e {
        Endpoint::Lower => "star",
        Endpoint::Upper => "star2",
    },
};

const LATEX: Syntax = Syntax {
    psi: psi_latex,
    factor: SmoothExpr::to_latex_factor,
    mode: Format::Latex,
    times: " ",
    open: "\\left(",
    close: "\\right)",
    star: |e| match e {
        Endpoint::Lower => "\\star",
        Endpoint::Upper => "\\star_2",
    },
};

fn join(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (negative, body)) in terms.into_iter().enumerate() {
        match (k, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

fn weighted(weight: &SmoothExpr, body: String, s: &Syntax) -> (bool, String) {
    let negative = weight.as_const().is_some_and(|c| c.is_real() && c.re < num_traits::Zero::zero());
    let w = if negative { -weight } else { weight.clone() };
    if w.as_const().is_some_and(One::is_one) {
        (negative, body)
    } else {
        (negative, format!("{}{}{body}", (s.factor)(&w), s.times))
    }
}

fn render(ceq: &ConfinedEquation, s: &Syntax) -> String {
    let lhs: Vec<(bool, String)> = (0..=ceq.base.order())
        .rev()
        .filter(|&i| !ceq.base.coeff(i).is_zero_const())
        .map(|i| weighted(ceq.base.coeff(i), (s.psi)(i), s))
        .collect();

    let mut rhs = Vec::new();
    let f = ceq.base.rhs();
    if !f.is_zero_const() {
        let source = ceq.interval.indicator().mul_smooth(f).expect("smooth factor");
        rhs.push((false, format_dist(&source, s.mode)));
    }
    for t in &ceq.terms {
        let step = format_dist(&step_dist(ceq, t), s.mode);
        let body = format!("{}{step} {} {}{}", s.open, (s.star)(t.endpoint), (s.psi)(t.i - t.j), s.close);
        let w = term_weight(ceq, t);
        let (negative, text) = weighted(&w, body, s);
        rhs.push((negative ^ (t.endpoint == Endpoint::Upper), text));
    }
    format!("{} = {}", join(lhs), join(rhs))
}

#[derive(Serialize)]
struct TermJson {
    i: usize,
    j: usize,
    binomial: String,
    endpoint: Endpoint,
    heaviside_order: usize,
    product: &'static str,
    weight: String,
    step: String,
}

#[derive(Serialize)]
struct EquationJson<'a> {
    order: usize,
    coefficients: Vec<String>,
    rhs: String,
    interval: &'a Interval,
    terms: Vec<TermJson>,
    text: String,
}

/// Renders a confined equation; `psi` stands for the unknown, `star`/`star2`
/// for the product used at each endpoint.
pub fn format_equation(ceq: &ConfinedEquation, mode: Format) -> String {
    match mode {
        Format::Text => render(ceq, &TEXT),
        Format::Latex => render(ceq, &LATEX),
        Format::Json => {
            let sign = |t: &CorrectionTerm| BigInt::from(t.endpoint.sign());
            let doc = EquationJson {
                order: ceq.base.order(),
                coefficients: ceq.base.coeffs().iter().map(ToString::to_string).collect(),
                rhs: ceq.base.rhs().to_string(),
                interval: &ceq.interval,
                terms: ceq
                    .terms
                    .iter()
                    .map(|t| TermJson {
                        i: t.i,
                        j: t.j,
                        binomial: t.binomial.to_string(),
                        endpoint: t.endpoint,
                        heaviside_order: t.heaviside_order,
                        product: t.endpoint.product().name(),
                        weight: term_weight(ceq, t)
                            .scale(&ComplexRational::real(sign(t).into()))
                            .simplify()
                            .to_string(),
                        step: format_dist(&step_dist(ceq, t), Format::Text),
                    })
                    .collect(),
                text: render(ceq, &TEXT),
            };
            serde_json::to_string(&doc).expect("serializable")
        }
    }
}
