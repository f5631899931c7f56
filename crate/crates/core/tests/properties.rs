//! Property tests for the set, measure and fusion invariants.

use fuzzy_compare::fusion::{fuse_normalized, owa, OwaOrdering, WeightVector};
use fuzzy_compare::io::{set_from_json, set_to_json};
use fuzzy_compare::measures::{
    alpha_distance, interval_hausdorff, interval_hausdorff_directional, jaccard, AlphaGrid,
    Convexity, Direction, SampleGrid,
};
use fuzzy_compare::oracle::{oracle_owa, SortKey};
use fuzzy_compare::{build_from_samples, FuzzySet, Interval, Universe};
use proptest::prelude::*;

fn universe() -> Universe {
    Universe::new(0.0, 10.0).unwrap()
}

fn arb_interval() -> impl Strategy<Value = Interval> {
    (-50.0..50.0f64, 0.0..20.0f64).prop_map(|(l, w)| Interval::new(l, l + w).unwrap())
}

/// Convex normal triangle or trapezoid on [0, 10].
fn arb_convex_set() -> impl Strategy<Value = FuzzySet> {
    (
        prop::collection::vec(0.05..3.0f64, 4),
        0.0..1.0f64,
        any::<bool>(),
    )
        .prop_map(|(gaps, offset, triangle)| {
            let total: f64 = gaps.iter().sum();
            let scale = if total > 10.0 { 9.9 / total } else { 1.0 };
            let start = offset * (10.0 - total * scale);
            let mut xs = vec![start];
            for g in &gaps[..3] {
                xs.push(xs.last().unwrap() + g * scale);
            }
            if triangle {
                FuzzySet::triangular("s", universe(), xs[0], xs[1], xs[2]).unwrap()
            } else {
                FuzzySet::trapezoidal("s", universe(), xs[0], xs[1], xs[2], xs[3]).unwrap()
            }
        })
}

/// Arbitrary (possibly non-convex, subnormal) piecewise-linear set.
fn arb_any_set() -> impl Strategy<Value = FuzzySet> {
    prop::collection::btree_map(0u32..=1000, 0.0..=1.0f64, 1..12).prop_filter_map("all-zero", |m| {
        let pts: Vec<(f64, f64)> = m
            .into_iter()
            .map(|(k, mu)| (k as f64 / 100.0, mu))
            .collect();
        FuzzySet::new("any", universe(), pts).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn membership_stays_in_unit_range(set in arb_any_set(), x in -1.0..11.0f64) {
        let mu = set.membership(x);
        prop_assert!((0.0..=1.0).contains(&mu));
    }

    #[test]
    fn membership_is_exact_at_breakpoints(set in arb_any_set()) {
        for &(x, mu) in set.points() {
            prop_assert_eq!(set.membership(x), mu);
        }
    }

    #[test]
    fn alpha_cuts_are_nested(set in arb_any_set(), a1 in 0.001..=1.0f64, a2 in 0.001..=1.0f64) {
        let (lo, hi) = if a1 <= a2 { (a1, a2) } else { (a2, a1) };
        let outer = set.alpha_cut(lo).unwrap();
        let inner = set.alpha_cut(hi).unwrap();
        match (outer, inner) {
            (_, None) => {}
            (None, Some(_)) => prop_assert!(false, "higher cut exists but lower does not"),
            (Some(o), Some(i)) => prop_assert!(o.contains_interval(&i), "{o:?} !⊇ {i:?}"),
        }
    }

    #[test]
    fn alpha_cut_endpoints_sit_on_the_level(set in arb_convex_set(), alpha in 0.001..0.999f64) {
        let cut = set.alpha_cut(alpha).unwrap().unwrap();
        prop_assert!((set.membership(cut.left()) - alpha).abs() < 1e-9);
        prop_assert!((set.membership(cut.right()) - alpha).abs() < 1e-9);
    }

    #[test]
    fn jaccard_symmetric_reflexive_bounded(a in arb_convex_set(), b in arb_convex_set()) {
        let g = SampleGrid::uniform(&universe(), 201).unwrap();
        let ab = jaccard(&a, &b, &g).unwrap();
        prop_assert_eq!(ab, jaccard(&b, &a, &g).unwrap());
        prop_assert!((0.0..=1.0).contains(&ab));
        prop_assert_eq!(jaccard(&a, &a, &g).unwrap(), 1.0);
    }

    #[test]
    fn hausdorff_is_a_metric(a in arb_interval(), b in arb_interval(), c in arb_interval()) {
        prop_assert_eq!(interval_hausdorff(a, a), 0.0);
        prop_assert_eq!(interval_hausdorff(a, b), interval_hausdorff(b, a));
        if a != b {
            prop_assert!(interval_hausdorff(a, b) > 0.0);
        }
        prop_assert!(interval_hausdorff(a, c) <= interval_hausdorff(a, b) + interval_hausdorff(b, c) + 1e-12);
    }

    #[test]
    fn directional_magnitude_matches_hausdorff(a in arb_interval(), b in arb_interval()) {
        let d = interval_hausdorff_directional(a, b);
        prop_assert!(d.abs() <= interval_hausdorff(a, b));
        prop_assert_eq!(d.abs(), interval_hausdorff(a, b));
        prop_assert_eq!(d, -interval_hausdorff_directional(b, a));
    }

    #[test]
    fn alpha_distance_axioms(a in arb_convex_set(), b in arb_convex_set(), c in arb_convex_set()) {
        let g = AlphaGrid::midpoint(100).unwrap();
        let d = |x: &FuzzySet, y: &FuzzySet, dir| alpha_distance(x, y, &g, dir, Convexity::Span).unwrap();
        let sym = Direction::Symmetric;
        prop_assert_eq!(d(&a, &a, sym), 0.0);
        prop_assert!(d(&a, &b, sym) >= 0.0);
        prop_assert_eq!(d(&a, &b, sym), d(&b, &a, sym));
        prop_assert!(d(&a, &c, sym) <= d(&a, &b, sym) + d(&b, &c, sym) + 1e-9);
        let dir = Direction::Directional;
        prop_assert_eq!(d(&a, &b, dir), -d(&b, &a, dir));
        prop_assert!(d(&a, &b, dir).abs() <= d(&a, &b, sym) + 1e-12);
    }

    #[test]
    fn owa_matches_oracle_bit_for_bit(
        values in prop::collection::vec(-1.0..1.0f64, 1..6),
        raw in prop::collection::vec(0.0..1.0f64, 6),
        by_abs in any::<bool>(),
    ) {
        let raw = &raw[..values.len()];
        let total: f64 = raw.iter().sum();
        let w: Vec<f64> = if total == 0.0 {
            vec![1.0 / values.len() as f64; values.len()]
        } else {
            raw.iter().map(|r| r / total).collect()
        };
        let weights = WeightVector::new(w.clone()).unwrap();
        let (ordering, key) = if by_abs {
            (OwaOrdering::ByAbsoluteValue, SortKey::Magnitude)
        } else {
            (OwaOrdering::Standard, SortKey::Value)
        };
        let fast = owa(&values, &weights, ordering).unwrap();
        prop_assert_eq!(fast, oracle_owa(&values, &w, key).unwrap());

        let mut reversed = values.clone();
        reversed.reverse();
        prop_assert_eq!(fast, owa(&reversed, &weights, ordering).unwrap());
    }

    #[test]
    fn fused_value_keeps_distance_sign(s in 0.0..=1.0f64, nd in -1.0..=1.0f64, w1 in 0.0..=1.0f64) {
        let c = fuse_normalized(s, nd, &WeightVector::pair(w1).unwrap()).unwrap();
        prop_assert!(c.abs() <= 1.0 + 1e-12);
        if nd > 0.0 {
            prop_assert!(c >= 0.0);
        }
        if nd < 0.0 {
            prop_assert!(c <= 0.0);
        }
    }

    #[test]
    fn fused_value_is_affine_in_first_weight(s in 0.0..=1.0f64, nd in -1.0..=1.0f64, w1 in 0.0..=1.0f64) {
        let at = |w: f64| fuse_normalized(s, nd, &WeightVector::pair(w).unwrap()).unwrap();
        let expected = at(0.0) + w1 * (at(1.0) - at(0.0));
        prop_assert!((at(w1) - expected).abs() < 1e-12);
    }

    #[test]
    fn json_round_trip_is_bit_exact(set in arb_any_set()) {
        let back = set_from_json(&set_to_json(&set)).unwrap();
        prop_assert_eq!(back.points(), set.points());
        prop_assert_eq!(back, set);
    }

    #[test]
    fn built_sets_are_normal(counts in prop::collection::vec(0usize..50, 5)) {
        prop_assume!(counts.iter().any(|&c| c > 0));
        let samples: Vec<f64> = counts
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat_n((i + 1) as f64, n))
            .collect();
        let u = Universe::new(1.0, 5.0).unwrap();
        let set = build_from_samples("b", &samples, u, &[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        prop_assert_eq!(set.height(), 1.0);
        let peak = *counts.iter().max().unwrap() as f64;
        for (p, &n) in set.points().iter().zip(&counts) {
            prop_assert_eq!(p.1, n as f64 / peak);
        }
    }
}
