//! Randomized set corpora shared by the integration suites.
#![allow(dead_code)]

use fuzzy_compare::{FuzzySet, Universe};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Smallest gap between adjacent breakpoints in generated sets.
pub const MIN_GAP: f64 = 0.2;

pub fn universe() -> Universe {
    Universe::new(0.0, 10.0).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sorted_points<R: Rng>(rng: &mut R, k: usize) -> Vec<f64> {
    loop {
        let mut xs: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..=10.0)).collect();
        xs.sort_by(f64::total_cmp);
        if xs.windows(2).all(|w| w[1] - w[0] >= MIN_GAP) {
            return xs;
        }
    }
}

/// Triangle or trapezoid with breakpoints uniform over `[0, 10]`.
pub fn random_set<R: Rng>(rng: &mut R, name: &str) -> FuzzySet {
    if rng.gen_bool(0.5) {
        let x = sorted_points(rng, 3);
        FuzzySet::triangular(name, universe(), x[0], x[1], x[2]).unwrap()
    } else {
        let x = sorted_points(rng, 4);
        FuzzySet::trapezoidal(name, universe(), x[0], x[1], x[2], x[3]).unwrap()
    }
}

pub fn random_pairs(seed: u64, n: usize) -> Vec<(FuzzySet, FuzzySet)> {
    let mut r = rng(seed);
    (0..n)
        .map(|_| (random_set(&mut r, "A"), random_set(&mut r, "B")))
        .collect()
}

pub fn random_triples(seed: u64, n: usize) -> Vec<(FuzzySet, FuzzySet, FuzzySet)> {
    let mut r = rng(seed);
    (0..n)
        .map(|_| {
            (
                random_set(&mut r, "A"),
                random_set(&mut r, "B"),
                random_set(&mut r, "C"),
            )
        })
        .collect()
}

/// Breakpoints `(left foot, core left, core right, right foot)` of a set
/// nested inside `outer`, which share the same layout.
fn shrink<R: Rng>(rng: &mut R, outer: [f64; 4]) -> [f64; 4] {
    let [o1, o2, o3, o4] = outer;
    loop {
        let mut core = [rng.gen_range(o2..=o3), rng.gen_range(o2..=o3)];
        core.sort_by(f64::total_cmp);
        if rng.gen_bool(0.5) {
            core[1] = core[0];
        }
        let left = o1 + rng.gen_range(0.0..=0.9) * (core[0] - o1);
        let right = o4 - rng.gen_range(0.0..=0.9) * (o4 - core[1]);
        let inner = [left, core[0], core[1], right];
        let ok = inner[1] - inner[0] >= MIN_GAP / 4.0
            && inner[3] - inner[2] >= MIN_GAP / 4.0
            && (inner[2] == inner[1] || inner[2] - inner[1] >= MIN_GAP / 4.0);
        if ok {
            return inner;
        }
    }
}

fn from_layout(name: &str, p: [f64; 4]) -> FuzzySet {
    if p[1] == p[2] {
        FuzzySet::triangular(name, universe(), p[0], p[1], p[3]).unwrap()
    } else {
        FuzzySet::trapezoidal(name, universe(), p[0], p[1], p[2], p[3]).unwrap()
    }
}

/// Triples with point-wise membership `A <= B <= C`.
pub fn nested_triples(seed: u64, n: usize) -> Vec<(FuzzySet, FuzzySet, FuzzySet)> {
    let mut r = rng(seed);
    (0..n)
        .map(|_| {
            let c = {
                let x = sorted_points(&mut r, 4);
                [x[0], x[1], x[2], x[3]]
            };
            let b = shrink(&mut r, c);
            let a = shrink(&mut r, b);
            (
                from_layout("A", a),
                from_layout("B", b),
                from_layout("C", c),
            )
        })
        .collect()
}
