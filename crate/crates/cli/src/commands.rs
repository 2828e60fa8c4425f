use std::io::Read;

use distalg_core::rational::Rational;
use distalg_core::weak::DEFAULT_GUARD;
use distalg_core::{
    action, bracket, confine_halfline, confine_interval, format_dist, format_equation, make_ode,
    parse_dist, parse_smooth, particular_rhs, residual, star_oracle, star_variant, verify_confinement,
    ComplexRational, ConfinedEquation, Error, Extrapolation, Format, GenDist, LinearODE, QuadratureConfig,
    TestFunction, Verdict,
};
use serde_json::json;

use crate::args::{Command, OdeArgs, Quadrature};

pub enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_math_domain() {
            Failure::Math(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// Text printed on success and whether a verdict came out `Unknown`.
pub struct Output {
    pub text: String,
    pub unknown: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, unknown: false }
    }
}

type Res<T> = Result<T, Failure>;

fn stdin_lines() -> Res<Vec<String>> {
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
    Ok(buf.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect())
}

fn dists(args: impl IntoIterator<Item = String>, count: usize) -> Res<Vec<GenDist>> {
    let mut texts: Vec<String> = args.into_iter().collect();
    if texts.len() < count {
        texts.extend(stdin_lines()?);
    }
    if texts.len() != count {
        return Err(Failure::Usage(format!("expected {count} distribution(s), got {}", texts.len())));
    }
    texts.iter().map(|t| parse_dist(t).map_err(Failure::from)).collect()
}

fn one(arg: Option<String>) -> Res<GenDist> {
    Ok(dists(arg, 1)?.remove(0))
}

fn rational(s: &str) -> Res<Rational> {
    let bad = || Failure::Usage(format!("`{}` is not a rational number", s.trim()));
    let c = parse_smooth(s)?.simplify().as_const().cloned().ok_or_else(bad)?;
    if c.is_real() {
        Ok(c.re)
    } else {
        Err(bad())
    }
}

fn constant(s: &str) -> Res<ComplexRational> {
    parse_smooth(s)?
        .simplify()
        .as_const()
        .cloned()
        .ok_or_else(|| Failure::Usage(format!("`{}` is not a constant", s.trim())))
}

fn list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|p| !p.is_empty())
}

fn parse_ode(text: &str) -> Res<LinearODE> {
    let (coeffs, rhs) = text.split_once(';').unwrap_or((text, "0"));
    let mut coeffs = list(coeffs).map(|c| parse_smooth(c).map_err(Failure::from)).collect::<Res<Vec<_>>>()?;
    coeffs.reverse();
    Ok(make_ode(coeffs, parse_smooth(rhs)?)?)
}

fn confined(args: &OdeArgs) -> Res<ConfinedEquation> {
    let ode = parse_ode(&args.ode)?;
    let ends = list(&args.interval).map(rational).collect::<Res<Vec<_>>>()?;
    match ends.as_slice() {
        [a] => Ok(confine_halfline(&ode, a.clone())),
        [a, b] => Ok(confine_interval(&ode, a.clone(), b.clone())?),
        _ => Err(Failure::Usage(format!("interval `{}` needs one or two endpoints", args.interval))),
    }
}

fn bump(q: &Quadrature) -> Res<TestFunction> {
    let parts: Vec<&str> = list(&q.bump).collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(Failure::Usage(format!("bump `{}` must be `a,b,c`", q.bump)));
    };
    let amplitude: f64 = c.parse().map_err(|_| Failure::Usage(format!("amplitude `{c}` is not a number")))?;
    Ok(TestFunction::bump(rational(a)?, rational(b)?, amplitude)?)
}

fn config(q: &Quadrature) -> QuadratureConfig {
    QuadratureConfig { nodes: q.quad_nodes, guard: DEFAULT_GUARD, ..QuadratureConfig::default() }
}

fn complex(v: num_complex::Complex64, mode: Format) -> String {
    match mode {
        Format::Json => json!({ "re": v.re, "im": v.im }).to_string(),
        _ if v.im == 0.0 => v.re.to_string(),
        Format::Latex => format!("{} {} {} i", v.re, if v.im < 0.0 { '-' } else { '+' }, v.im.abs()),
        Format::Text => format!("{}{}{}*i", v.re, if v.im < 0.0 { '-' } else { '+' }, v.im.abs()),
    }
}

fn verdict_output(text: String, verdict: Verdict) -> Output {
    Output { text, unknown: verdict == Verdict::Unknown }
}

pub fn run(command: Command, mode: Format) -> Res<Output> {
    let show = |d: &GenDist| format_dist(d, mode);
    let out = match command {
        Command::Mul { variant, f, g } => {
            let d = dists(f.into_iter().chain(g), 2)?;
            show(&star_variant(&d[0], &d[1], variant)?)
        }
        Command::Diff { n, dist } => show(&one(dist)?.differentiate_n(n)?),
        Command::Antideriv { dist } => show(&one(dist)?.antiderivative()?),
        Command::Bracket { f, g } => {
            let d = dists(f.into_iter().chain(g), 2)?;
            show(&bracket(&d[0], &d[1])?)
        }
        Command::Action { quad, dist } => {
            let f = one(dist)?;
            complex(action(&f, &bump(&quad)?, &config(&quad))?, mode)
        }
        Command::Oracle { quad, eps_schedule, extrapolation, f, g } => {
            let d = dists(f.into_iter().chain(g), 2)?;
            let extrapolation = match extrapolation.as_str() {
                "last" => Extrapolation::LastValue,
                "richardson" => Extrapolation::Richardson,
                "richardson-all" => Extrapolation::RichardsonAll,
                other => return Err(Failure::Usage(format!("unknown extrapolation `{other}`"))),
            };
            let schedule = list(&eps_schedule).map(rational).collect::<Res<Vec<_>>>()?;
            let cfg = QuadratureConfig { schedule, extrapolation, ..config(&quad) };
            complex(star_oracle(&d[0], &d[1], &bump(&quad)?, &cfg)?, mode)
        }
        Command::Confine { ode } => format_equation(&confined(&ode)?, mode),
        Command::Residual { ode, dist } => {
            let ceq = confined(&ode)?;
            let r = residual(&ceq, &one(dist)?)?;
            let verdict = r.equal_dist(&GenDist::zero());
            return Ok(verdict_output(show(&r), verdict));
        }
        Command::ParticularRhs { ode, values, at } => {
            let ode = parse_ode(&ode)?;
            let values = list(&values).map(constant).collect::<Res<Vec<_>>>()?;
            show(&particular_rhs(&ode, &values, &rational(&at)?)?)
        }
        Command::Verify { ode, psi_u } => {
            let ceq = confined(&ode)?;
            let report = verify_confinement(&ceq, &parse_smooth(&psi_u)?)?;
            let text = match mode {
                Format::Json => report.to_json(),
                _ => report_text(&report, mode),
            };
            return Ok(verdict_output(text, report.verdict));
        }
        Command::Fmt { dist } => show(&one(dist)?),
    };
    Ok(out.into())
}

fn report_text(r: &distalg_core::ConfinementReport, mode: Format) -> String {
    let verdict = serde_json::to_value(r.verdict).expect("serializable");
    let mut out = format!(
        "verdict: {}\nresidual: {}\nleading coefficient nonvanishing: {}\nclassical equation satisfied: {}\n",
        verdict.as_str().unwrap_or_default(),
        format_dist(&r.residual_dist, mode),
        r.leading_nonvanishing,
        r.classical_ok,
    );
    out.push_str("x\tre\tim\n");
    for s in &r.samples {
        out.push_str(&format!("{}\t{}\t{}\n", s.x, s.value[0], s.value[1]));
    }
    out.pop();
    out
}
