//! Fixed inputs shared by the benchmarks in `benches/`.

use distalg_core::{parse_dist, GenDist};

const SOURCES: [&str; 6] = [
    "H(x)",
    "delta(x) + 2*delta[1](x - 1)",
    "H(x + 2)*H(1 - x)*(x^3 - 2*x + 1/3) + (1 - i)*delta[2](x + 1)",
    "H(-x)*(4 - x^2) + H(x)*(2 + 3*x) - 5/7*delta(x)",
    "H(x - 1)*x^2 + delta[1](x + 2) - i*delta(x - 2)",
    "H(x + 1)*H(2 - x)*(x - 1)^3 + 3*delta[2](x)",
];

pub fn corpus() -> Vec<GenDist> {
    SOURCES.iter().map(|s| parse_dist(s).expect("fixture parses")).collect()
}
