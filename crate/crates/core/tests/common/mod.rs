//! Seeded random distributions shared by the integration tests.
#![allow(dead_code)]

use distalg_core::rational::{int, rat, Rational};
use distalg_core::{ComplexRational, DeltaAtom, GenDist, PiecewiseSmooth, Poly, SmoothExpr};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_d157;

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

pub fn rational(r: &mut impl Rng) -> Rational {
    rat(r.gen_range(-10..=10), r.gen_range(1..=10))
}

pub fn nonzero_rational(r: &mut impl Rng) -> Rational {
    loop {
        let q = rational(r);
        if q != int(0) {
            return q;
        }
    }
}

pub fn complex(r: &mut impl Rng) -> ComplexRational {
    let im = if r.gen_bool(0.5) { rational(r) } else { int(0) };
    ComplexRational::new(rational(r), im)
}

pub fn nonzero_complex(r: &mut impl Rng) -> ComplexRational {
    ComplexRational::new(nonzero_rational(r), if r.gen_bool(0.5) { rational(r) } else { int(0) })
}

pub fn poly(r: &mut impl Rng, max_degree: usize) -> SmoothExpr {
    let degree = r.gen_range(0..=max_degree);
    Poly::new((0..=degree).map(|_| complex(r)).collect()).to_expr()
}

/// Breakpoints and atom locations are drawn from `locations`.
pub fn dist_on(r: &mut impl Rng, locations: &[Rational]) -> GenDist {
    let nb = r.gen_range(0..=locations.len().min(3));
    let mut breakpoints: Vec<Rational> = locations.choose_multiple(r, nb).cloned().collect();
    breakpoints.sort();
    let pieces = (0..=breakpoints.len()).map(|_| poly(r, 3)).collect();
    let regular = PiecewiseSmooth::new(breakpoints, pieces).expect("sorted breakpoints");
    let na = r.gen_range(0..=3);
    let atoms = (0..na)
        .map(|_| DeltaAtom::new(locations.choose(r).expect("nonempty").clone(), r.gen_range(0..=2), complex(r)))
        .collect();
    GenDist::from_parts(regular, atoms, Vec::new())
}

pub fn grid() -> Vec<Rational> {
    (-2..=2).map(int).collect()
}

pub fn dist(r: &mut impl Rng) -> GenDist {
    dist_on(r, &grid())
}

/// Regular part only, polynomial pieces.
pub fn regular_dist(r: &mut impl Rng) -> GenDist {
    let d = dist(r);
    GenDist::from_parts(d.regular().clone(), Vec::new(), Vec::new())
}

/// Two distributions whose singular supports are disjoint.
pub fn disjoint_pair(r: &mut impl Rng) -> (GenDist, GenDist) {
    let mut pool: Vec<Rational> = (-4..=4).map(|n| rat(n, 2)).collect();
    pool.shuffle(r);
    let split = r.gen_range(1..pool.len());
    let (a, b) = pool.split_at(split);
    (dist_on(r, a), dist_on(r, b))
}
