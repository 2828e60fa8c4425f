//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::time::{Duration, Instant};

use distalg_core::rational::{int, rat, Rational};
use distalg_core::{
    action, bracket, bracket_closed_form, confine_halfline, confine_interval, format_dist, Extrapolation, hormander, make_ode,
    parse_dist, residual, star, star_oracle, star_variant, verify_confinement, ComplexRational, DeltaAtom, Format,
    GenDist, PiecewiseSmooth, QuadratureConfig, SmoothExpr, TestFunction, VariantTag, Verdict,
};
use rand::Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    };
}

fn same(a: &GenDist, b: &GenDist) -> bool {
    a.equal_dist(b) == Verdict::Equal
}

fn s(f: &GenDist, g: &GenDist) -> GenDist {
    star(f, g).expect("star is total on exact inputs")
}

fn c(n: i64) -> SmoothExpr {
    SmoothExpr::int(n)
}

fn line(c0: &Rational, c1: &Rational) -> SmoothExpr {
    &SmoothExpr::rational(c0.clone()) + &(&SmoothExpr::rational(c1.clone()) * &SmoothExpr::x())
}

fn worked_example() -> Outcome {
    let h = GenDist::heaviside(int(0));
    let d = GenDist::delta(int(0), 0);
    let hh = s(&h, &h);
    ensure!(hh == h, "H*H = {hh:?}");
    ensure!(hh.differentiate().unwrap() == d, "D(H*H) is not delta");
    let hd = s(&h, &d);
    ensure!(hd == GenDist::zero(), "H*delta = {hd:?}");
    ensure!(&s(&d, &h) + &hd == d, "delta*H + H*delta is not delta");
    Ok(())
}

fn associativity() -> Outcome {
    let mut r = common::rng(2);
    for n in 0..500 {
        let (f, g, j) = (common::dist(&mut r), common::dist(&mut r), common::dist(&mut r));
        let left = s(&s(&f, &g), &j);
        let right = s(&f, &s(&g, &j));
        ensure!(same(&left, &right), "case {n}: (FG)J != F(GJ) for F={f:?} G={g:?} J={j:?}");
    }
    Ok(())
}

fn laws() -> Outcome {
    let mut r = common::rng(3);
    let zero = GenDist::zero();
    for n in 0..200 {
        let (f, g, j) = (common::dist(&mut r), common::dist(&mut r), common::dist(&mut r));
        let b = |a: &GenDist, b: &GenDist| bracket(a, b).unwrap();
        ensure!(same(&s(&f, &(&g + &j)), &(&s(&f, &g) + &s(&f, &j))), "case {n}: left distributivity");
        ensure!(same(&s(&(&f + &g), &j), &(&s(&f, &j) + &s(&g, &j))), "case {n}: right distributivity");
        let d = |x: &GenDist| x.differentiate().unwrap();
        ensure!(same(&d(&s(&f, &g)), &(&s(&d(&f), &g) + &s(&f, &d(&g)))), "case {n}: Leibniz rule");
        ensure!(same(&b(&f, &g), &b(&g, &f).neg()), "case {n}: antisymmetry");
        let jacobi = &(&b(&f, &b(&g, &j)) + &b(&g, &b(&j, &f))) + &b(&j, &b(&f, &g));
        ensure!(same(&jacobi, &zero), "case {n}: Jacobi identity");
        let lhs = b(&f, &s(&g, &j));
        let rhs = &s(&b(&f, &g), &j) + &s(&g, &b(&f, &j));
        ensure!(same(&lhs, &rhs), "case {n}: bracket Leibniz over star");
        ensure!(same(&b(&f, &g), &bracket_closed_form(&f, &g).unwrap()), "case {n}: closed form");
    }
    Ok(())
}

fn hormander_consistency() -> Outcome {
    let mut r = common::rng(4);
    for n in 0..200 {
        let (f, g) = common::disjoint_pair(&mut r);
        let h = hormander(&f, &g).map_err(|e| format!("case {n}: {e}"))?;
        ensure!(same(&s(&f, &g), &h), "case {n}: star != hormander for F={f:?} G={g:?}");
    }
    Ok(())
}

fn variants() -> Outcome {
    let mut r = common::rng(5);
    let v = |f: &GenDist, g: &GenDist, t| star_variant(f, g, t).unwrap();
    for n in 0..200 {
        let (f, g) = (common::dist(&mut r), common::dist(&mut r));
        let gf = s(&g, &f);
        ensure!(same(&v(&f, &g, VariantTag::Star2), &gf), "case {n}: star2");
        ensure!(same(&v(&f, &g, VariantTag::Star3), &gf), "case {n}: star3");
        ensure!(same(&v(&g, &f, VariantTag::Star4), &gf), "case {n}: star4");
        ensure!(
            same(&v(&f, &g, VariantTag::Star5), &v(&g, &f, VariantTag::Star5)),
            "case {n}: star5 not commutative"
        );
    }
    let (d, h) = (GenDist::delta(int(0), 0), GenDist::heaviside(int(0)));
    let five = |a: &GenDist, b: &GenDist| v(a, b, VariantTag::Star5);
    let left = five(&five(&d, &h), &h);
    let right = five(&d, &five(&h, &h));
    let quarter = d.scale(&rat(1, 4).into());
    let half = d.scale(&rat(1, 2).into());
    ensure!(left == quarter && right == half, "witness gave {left:?} vs {right:?}");
    Ok(())
}

fn oracle() -> Outcome {
    let mut r = common::rng(6);
    // Every singular point of the family lies well inside each support.
    let bumps = [
        TestFunction::bump(rat(-7, 2), rat(7, 2), 1.0).unwrap(),
        TestFunction::bump(int(-3), int(4), 1.5).unwrap(),
        TestFunction::bump(int(-4), int(3), 0.5).unwrap(),
    ];
    let cfg = QuadratureConfig { extrapolation: Extrapolation::RichardsonAll, ..QuadratureConfig::default() };
    let two_point = QuadratureConfig::default();
    let (mut worst, mut worst_two_point) = (0.0f64, 0.0f64);
    for n in 0..50 {
        let (f, g) = (common::dist(&mut r), common::dist(&mut r));
        let fg = s(&f, &g);
        for (k, t) in bumps.iter().enumerate() {
            let exact = action(&fg, t, &cfg).map_err(|e| e.to_string())?;
            let approx = star_oracle(&f, &g, t, &cfg).map_err(|e| e.to_string())?;
            let rel = (approx - exact).norm() / (1.0 + exact.norm());
            worst = worst.max(rel);
            let last_two = star_oracle(&f, &g, t, &two_point).map_err(|e| e.to_string())?;
            worst_two_point = worst_two_point.max((last_two - exact).norm() / (1.0 + exact.norm()));
            ensure!(rel <= 1e-6, "case {n} bump {k}: oracle {approx} vs {exact} (rel {rel:e})");
        }
    }
    println!("        worst relative error {worst:e} (two-point Richardson: {worst_two_point:e})");
    Ok(())
}

fn confinement_forward() -> Outcome {
    let mut r = common::rng(7);
    let ceq = confine_halfline(&make_ode(vec![c(0), c(0), c(1)], c(0)).unwrap(), int(0));
    let h = GenDist::heaviside(int(0));
    for n in 0..100 {
        let (c0, c1) = (common::rational(&mut r), common::rational(&mut r));
        let psi = h.mul_smooth(&line(&c0, &c1)).unwrap();
        let res = residual(&ceq, &psi).unwrap();
        ensure!(res.is_zero(), "case {n}: c0={c0} c1={c1} residual {res:?}");
    }
    let decay = confine_halfline(&make_ode(vec![c(1), c(1)], c(0)).unwrap(), int(0));
    let report = verify_confinement(&decay, &(-&SmoothExpr::x()).exp()).unwrap();
    ensure!(report.atoms_exact_zero, "exp(-x): residual atoms {:?}", report.residual.atoms);
    let worst = report.samples.iter().map(|p| p.norm()).fold(0.0, f64::max);
    ensure!(worst <= 1e-9, "exp(-x): regular sample {worst:e}");
    Ok(())
}

fn confinement_negative() -> Outcome {
    let mut r = common::rng(8);
    let ceq = confine_halfline(&make_ode(vec![c(0), c(0), c(1)], c(0)).unwrap(), int(0));
    let zero = GenDist::zero();
    for n in 0..100 {
        let (c0, c1) = loop {
            let pair = (common::rational(&mut r), common::rational(&mut r));
            if pair != (int(0), int(0)) {
                break pair;
            }
        };
        let psi = GenDist::smooth(line(&c0, &c1));
        let expected = &GenDist::delta(int(0), 1).scale(&c0.clone().into())
            + &GenDist::delta(int(0), 0).scale(&c1.clone().into());
        let rhs_minus_lhs = &ceq.rhs(&psi).unwrap() - &ceq.base.apply(&psi).unwrap();
        ensure!(rhs_minus_lhs == expected, "case {n}: unconfined gives {rhs_minus_lhs:?}");
        let res = residual(&ceq, &psi).unwrap();
        ensure!(res == expected.neg(), "case {n}: residual is not the negation");
    }
    for n in 0..100 {
        let (c0, c1) = (common::rational(&mut r), common::rational(&mut r));
        let (left, atoms) = loop {
            let left = if r.gen_bool(0.7) { common::poly(&mut r, 3) } else { SmoothExpr::zero() };
            let atoms: Vec<DeltaAtom> = (0..r.gen_range(0..=2))
                .map(|_| DeltaAtom::new(int(0), r.gen_range(0..=2), common::nonzero_complex(&mut r)))
                .collect();
            let candidate = GenDist::from_parts(PiecewiseSmooth::smooth(SmoothExpr::zero()), atoms.clone(), Vec::new());
            if !left.simplify().is_zero_const() || !candidate.is_zero() {
                break (left, atoms);
            }
        };
        let regular = PiecewiseSmooth::new(vec![int(0)], vec![left, line(&c0, &c1)]).unwrap();
        let psi = GenDist::from_parts(regular, atoms, Vec::new());
        let res = residual(&ceq, &psi).unwrap();
        ensure!(res.equal_dist(&zero) == Verdict::Unequal, "case {n}: candidate {psi:?} has residual {res:?}");
    }
    Ok(())
}

fn left_support_invisible() -> Outcome {
    let mut r = common::rng(9);
    let h = GenDist::heaviside(int(0));
    for n in 0..100 {
        let order = r.gen_range(1..=3);
        let mut coeffs: Vec<SmoothExpr> = (0..order).map(|_| common::poly(&mut r, 1)).collect();
        coeffs.push(SmoothExpr::constant(common::nonzero_complex(&mut r)));
        let ceq = confine_halfline(&make_ode(coeffs, common::poly(&mut r, 2)).unwrap(), int(0));
        let base = h.mul_smooth(&common::poly(&mut r, 3)).unwrap();
        let extra: Vec<DeltaAtom> = (0..r.gen_range(1..=3))
            .map(|_| {
                let w = rat(-r.gen_range(1..=10), r.gen_range(1..=10));
                DeltaAtom::new(w, r.gen_range(0..=2), common::nonzero_complex(&mut r))
            })
            .collect();
        let f = GenDist::from_parts(PiecewiseSmooth::smooth(SmoothExpr::zero()), extra, Vec::new());
        let with_f = &base + &f;
        let terms = |psi: &GenDist| -> Vec<GenDist> {
            ceq.terms
                .iter()
                .map(|t| {
                    let step = GenDist::delta(int(0), (t.heaviside_order - 1) as u32);
                    let d = psi.differentiate_n((t.i - t.j) as u32).unwrap();
                    let w = ComplexRational::real(t.binomial.clone().into());
                    star(&step, &d).unwrap().mul_smooth(ceq.base.coeff(t.i)).unwrap().scale(&w)
                })
                .collect()
        };
        for (k, (a, b)) in terms(&base).iter().zip(terms(&with_f)).enumerate() {
            ensure!(*a == b, "case {n}, term {k}: {a:?} vs {b:?}");
        }
        ensure!(
            ceq.correction_sum(&base).unwrap() == ceq.correction_sum(&with_f).unwrap(),
            "case {n}: correction sums differ"
        );
    }
    Ok(())
}

fn interval() -> Outcome {
    let mut r = common::rng(10);
    let ceq = confine_interval(&make_ode(vec![c(0), c(0), c(1)], c(0)).unwrap(), int(0), int(1)).unwrap();
    let chi = GenDist::indicator(int(0), int(1)).unwrap();
    let zero = GenDist::zero();
    for n in 0..100 {
        let (c0, c1) = (common::rational(&mut r), common::rational(&mut r));
        let res = residual(&ceq, &chi.mul_smooth(&line(&c0, &c1)).unwrap()).unwrap();
        ensure!(res.is_zero(), "case {n}: confined residual {res:?}");
        if c0 != int(0) || c1 != int(0) {
            let free = residual(&ceq, &GenDist::smooth(line(&c0, &c1))).unwrap();
            ensure!(free.equal_dist(&zero) == Verdict::Unequal, "case {n}: unconfined residual vanished");
        }
    }
    Ok(())
}

fn calculus() -> Outcome {
    let mut r = common::rng(11);
    let cfg = QuadratureConfig::default();
    for n in 0..200 {
        let f = common::dist(&mut r);
        let back = f.antiderivative().unwrap().differentiate().unwrap();
        ensure!(same(&back, &f), "case {n}: D(antiderivative F) != F for {f:?}");
        let a = rat(r.gen_range(-30..=0), 10);
        let b = &a + rat(r.gen_range(5..=30), 10);
        let t = TestFunction::bump(a, b, r.gen_range(0.5..2.0)).unwrap();
        let lhs = action(&f.differentiate().unwrap(), &t, &cfg).unwrap();
        let rhs = action(&f, &t.derivative(), &cfg).unwrap();
        let gap = (lhs + rhs).norm() / (1.0 + lhs.norm().max(rhs.norm()));
        ensure!(gap <= 1e-8, "case {n}: integration by parts off by {gap:e}");
    }
    Ok(())
}

fn parser_round_trip() -> Outcome {
    let mut r = common::rng(12);
    for n in 0..200 {
        let f = common::dist(&mut r);
        let text = format_dist(&f, Format::Text);
        let back = parse_dist(&text).map_err(|e| format!("case {n}: {text:?}: {e}"))?;
        ensure!(same(&back, &f), "case {n}: {text:?} parsed to {back:?}");
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("worked example H*H = H", worked_example, Some(Duration::from_secs(1))),
        ("associativity, 500 triples", associativity, Some(Duration::from_secs(30))),
        ("distributivity, Leibniz, bracket laws", laws, None),
        ("star agrees with Hormander product", hormander_consistency, None),
        ("variant identities and star5 witness", variants, None),
        ("oracle equivalence, 50 pairs x 3 bumps", oracle, Some(Duration::from_secs(60))),
        ("confinement forward", confinement_forward, None),
        ("confinement negative", confinement_negative, None),
        ("correction terms ignore left support", left_support_invisible, None),
        ("interval confinement", interval, None),
        ("calculus round trip", calculus, None),
        ("parser round trip", parser_round_trip, None),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, limit) {
            if took > limit {
                outcome = Err(format!("took {took:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({took:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 12 criteria failed");
        std::process::exit(1);
    }
}
