mod common;

use distalg_core::rational::{int, rat, Rational};
use distalg_core::{
    action, format_dist, make_ode, parse_dist, particular_rhs, ComplexRational, GenDist, QuadratureConfig, SmoothExpr,
    TestFunction, Verdict,
};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn seeded(seed: u64) -> ChaCha8Rng {
    common::rng(seed)
}

fn random_expr(r: &mut ChaCha8Rng, depth: u32) -> SmoothExpr {
    if depth == 0 || r.gen_bool(0.3) {
        return if r.gen_bool(0.5) { SmoothExpr::x() } else { SmoothExpr::rational(rat(r.gen_range(-5..=5), r.gen_range(1..=4))) };
    }
    let a = random_expr(r, depth - 1);
    match r.gen_range(0..6) {
        0 => &a + &random_expr(r, depth - 1),
        1 => &a * &random_expr(r, depth - 1),
        2 => a.scale(&rat(1, 4).into()).exp(),
        3 => a.sin(),
        4 => a.cos(),
        _ => a.pow(r.gen_range(2..=3)),
    }
}

fn equal(a: &GenDist, b: &GenDist) -> bool {
    a.equal_dist(b) == Verdict::Equal
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivative_matches_central_difference(seed in any::<u64>(), x in -1.0f64..1.0) {
        let e = random_expr(&mut seeded(seed), 3);
        let h = 1e-5;
        let fd = (e.eval_f64(x + h).unwrap() - e.eval_f64(x - h).unwrap()) / (2.0 * h);
        let d = e.diff().eval_f64(x).unwrap();
        prop_assert!((fd - d).norm() <= 1e-5 * (1.0 + d.norm()), "{e} at {x}: {d} vs {fd}");
    }

    #[test]
    fn printed_form_is_a_fixed_point(seed in any::<u64>()) {
        let f = common::dist(&mut seeded(seed));
        let text = format_dist(&f, distalg_core::Format::Text);
        let again = format_dist(&parse_dist(&text).unwrap(), distalg_core::Format::Text);
        prop_assert_eq!(text, again);
    }

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        let f = common::dist(&mut seeded(seed));
        prop_assert_eq!(GenDist::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn vector_space_axioms(seed in any::<u64>()) {
        let mut r = seeded(seed);
        let (f, g, j) = (common::dist(&mut r), common::dist(&mut r), common::dist(&mut r));
        let (a, b) = (common::complex(&mut r), common::complex(&mut r));
        prop_assert!(equal(&(&(&f + &g) + &j), &(&f + &(&g + &j))));
        prop_assert!(equal(&(&f + &g), &(&g + &f)));
        prop_assert!((&f - &f).is_zero());
        prop_assert!(equal(&(&f + &g).scale(&a), &(&f.scale(&a) + &g.scale(&a))));
        prop_assert!(equal(&f.scale(&(&a + &b)), &(&f.scale(&a) + &f.scale(&b))));
        prop_assert!(equal(&f.scale(&a).scale(&b), &f.scale(&(&a * &b))));
        prop_assert_eq!(f.scale(&ComplexRational::from_int(1)), f);
    }

    #[test]
    fn normalization_is_idempotent(seed in any::<u64>()) {
        let f = common::dist(&mut seeded(seed));
        let once = f.clone().normalize();
        prop_assert_eq!(once.clone().normalize(), once);
    }

    #[test]
    fn action_is_linear(seed in any::<u64>()) {
        let mut r = seeded(seed);
        let (f, g) = (common::dist(&mut r), common::dist(&mut r));
        let (a, b) = (common::complex(&mut r), common::complex(&mut r));
        let t = TestFunction::bump(rat(-5, 2), rat(7, 3), 1.0).unwrap();
        let cfg = QuadratureConfig::default();
        let combined = action(&(&f.scale(&a) + &g.scale(&b)), &t, &cfg).unwrap();
        let split = action(&f, &t, &cfg).unwrap() * a.to_complex64() + action(&g, &t, &cfg).unwrap() * b.to_complex64();
        prop_assert!((combined - split).norm() <= 1e-10 * (1.0 + split.norm()));
    }

    #[test]
    fn derivative_of_confined_solution_splits(seed in any::<u64>()) {
        let mut r = seeded(seed);
        let order = r.gen_range(1..=3usize);
        let coeffs: Vec<SmoothExpr> = (0..=order)
            .map(|i| if i == order { SmoothExpr::constant(common::nonzero_complex(&mut r)) } else { common::poly(&mut r, 1) })
            .collect();
        let ode = make_ode(coeffs, SmoothExpr::zero()).unwrap();
        let a: Rational = rat(r.gen_range(-4..=4), 2);
        let psi_u = common::poly(&mut r, 3);
        let values: Vec<ComplexRational> = (0..order)
            .map(|k| psi_u.diff_n(k as u32).eval_exact(&a).unwrap().expect("polynomial value"))
            .collect();
        let h = GenDist::heaviside(a.clone());
        let lhs = ode.apply(&h.mul_smooth(&psi_u).unwrap()).unwrap();
        let rhs = &h.mul_smooth(&ode.apply_smooth(&psi_u)).unwrap() + &particular_rhs(&ode, &values, &a).unwrap();
        prop_assert!(equal(&lhs, &rhs), "{:?} vs {:?}", lhs, rhs);
    }
}

#[test]
fn zero_is_additive_identity() {
    let f = common::dist(&mut seeded(1));
    assert_eq!(&f + &GenDist::zero(), f);
    assert_eq!(GenDist::zero().scale(&int(3).into()), GenDist::zero());
}
