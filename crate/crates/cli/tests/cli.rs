use std::io::Write;
use std::process::{Command, Output, Stdio};

use distalg_core::{parse_dist, star, GenDist};

fn distalg(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_distalg"))
        .args(args)
        .env_remove("DISTALG_QUAD_NODES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().expect("stdin");
    pipe.write_all(stdin.unwrap_or("").as_bytes()).expect("write stdin");
    drop(pipe);
    child.wait_with_output().expect("binary exits")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

#[test]
fn delta_times_heaviside() {
    let o = distalg(&["mul", "delta(x)", "H(x)"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "delta(x)");
}

#[test]
fn delta_squared_through_mul_is_zero() {
    let o = distalg(&["mul", "delta(x)", "delta(x)"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0");
}

#[test]
fn json_mul_matches_library_bytes() {
    let pairs = [
        ("x^2*H(x) + 3*delta[1](x - 1)", "H(1 - x)*(2 - i*x) + delta(x)"),
        ("H(x)*H(2 - x)*x^3 - 1/2*delta[2](x - 2)", "delta[1](x) + H(x + 1)"),
        ("delta(x)", "H(x)"),
    ];
    for (f, g) in pairs {
        let o = distalg(&["--mode", "json", "mul", f, g], None);
        assert_eq!(o.status.code(), Some(0));
        let lib: GenDist = star(&parse_dist(f).unwrap(), &parse_dist(g).unwrap()).unwrap();
        assert_eq!(stdout(&o), lib.to_json());
    }
}

#[test]
fn operands_from_stdin() {
    let o = distalg(&["mul"], Some("delta(x)\n\nH(x)\n"));
    assert_eq!(stdout(&o), "delta(x)");
    let o = distalg(&["mul", "H(x)"], Some("delta(x)\n"));
    assert_eq!(stdout(&o), "0");
}

#[test]
fn confine_prints_equation() {
    let o = distalg(&["confine", "--ode", "1,0,0;0", "--interval", "0"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "psi'' = 2*(delta(x) star psi') + (delta[1](x) star psi)");
    let o = distalg(&["confine", "--ode", "1,0,0;0", "--interval", "0,1", "--mode", "json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["mul", "delta(x)*delta(x)", "H(x)"],
        vec!["mul", "H(x^2)", "H(x)"],
        vec!["mul", "--variant", "star9", "H(x)", "H(x)"],
        vec!["frobnicate"],
        vec!["confine", "--ode", "1,1;0", "--interval", "1,0"],
        vec!["action", "--bump", "1,2", "H(x)"],
    ] {
        assert_eq!(distalg(&args, None).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn math_domain_errors_exit_two() {
    let o = distalg(&["confine", "--ode", "0,1;0"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = distalg(&["oracle", "--bump", "-1,1,1", "--eps-schedule", "1/4", "H(x)", "delta(x - 1/4)"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_verdict_exits_three() {
    let o = distalg(&["residual", "--ode", "1,0;sin(x)^2 + cos(x)^2 - 1", "H(x)"], None);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
}

#[test]
fn verify_reports_equal() {
    let o = distalg(&["--mode", "json", "verify", "--ode", "1,1;0", "--psi-u", "exp(-x)"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "equal");
    assert!(v["samples"].as_array().unwrap().len() > 1);
}

#[test]
fn action_and_oracle_agree() {
    let action = distalg(&["action", "--bump", "-1,1,1", "delta(x)"], None);
    let oracle = distalg(&["oracle", "--bump", "-1,1,1", "delta(x)", "H(x)"], None);
    let a: f64 = stdout(&action).parse().unwrap();
    let b: f64 = stdout(&oracle).parse().unwrap();
    assert!((a - b).abs() < 1e-9 && a > 0.0);
}

#[test]
fn quadrature_env_override_is_read() {
    let o = Command::new(env!("CARGO_BIN_EXE_distalg"))
        .args(["action", "--bump", "-1,1,1", "H(x)"])
        .env("DISTALG_QUAD_NODES", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn particular_rhs_and_fmt() {
    let o = distalg(&["particular-rhs", "--ode", "1,0,0;0", "--values", "3,2"], None);
    assert_eq!(stdout(&o), "2*delta(x) + 3*delta[1](x)");
    let o = distalg(&["fmt", "--mode", "latex", "H(x)"], None);
    assert_eq!(stdout(&o), "H(x)");
}
