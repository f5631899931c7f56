//! Workflows over many sets: pairwise matrices, ranking, nearest-prototype
//! classification and weight sweeps.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{self, ComparativeConfig, ComparisonReport, WeightVector};
use crate::set::FuzzySet;

/// Tolerance below which two classification scores count as tied.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Reports for every ordered pair; `entries[i][j]` compares `i` against `j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonMatrix {
    pub names: Vec<String>,
    pub entries: Vec<Vec<ComparisonReport>>,
}

impl ComparisonMatrix {
    pub fn get(&self, i: usize, j: usize) -> &ComparisonReport {
        &self.entries[i][j]
    }
}

pub fn matrix(sets: &[FuzzySet], config: &ComparativeConfig) -> Result<ComparisonMatrix> {
    if sets.len() < 2 {
        return Err(Error::NotEnoughInputs(format!(
            "a matrix needs at least 2 sets, got {}",
            sets.len()
        )));
    }
    config.validate()?;
    let entries = sets
        .par_iter()
        .map(|a| {
            sets.iter()
                .map(|b| fusion::comparative(a, b, config))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComparisonMatrix {
        names: sets.iter().map(|s| s.name().to_owned()).collect(),
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedCandidate {
    pub label: String,
    pub report: ComparisonReport,
}

/// Candidates ordered closest-first by `|comparative|`, ties by label.
pub fn rank(
    reference: &FuzzySet,
    candidates: &[FuzzySet],
    config: &ComparativeConfig,
) -> Result<Vec<RankedCandidate>> {
    if candidates.is_empty() {
        return Err(Error::NotEnoughInputs("no candidates to rank".into()));
    }
    let mut ranked = candidates
        .par_iter()
        .map(|c| {
            fusion::comparative(reference, c, config).map(|report| RankedCandidate {
                label: c.name().to_owned(),
                report,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ranked.sort_by(|a, b| {
        a.report
            .comparative
            .abs()
            .total_cmp(&b.report.comparative.abs())
            .then_with(|| a.label.cmp(&b.label))
    });
    Ok(ranked)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationResult {
    pub best_label: String,
    /// Complement value per prototype label.
    pub scores: BTreeMap<String, f64>,
    /// Gap between the best and second-best `|complement|`.
    pub margin: f64,
}

/// Picks the prototype whose complement value has the largest magnitude,
/// i.e. lies nearest to 1 on its own side. Each prototype is passed as the
/// first argument of the comparison.
pub fn classify(
    input: &FuzzySet,
    prototypes: &[(String, FuzzySet)],
    config: &ComparativeConfig,
) -> Result<ClassificationResult> {
    if prototypes.len() < 2 {
        return Err(Error::NotEnoughInputs(format!(
            "classification needs at least 2 prototypes, got {}",
            prototypes.len()
        )));
    }
    let scored = prototypes
        .par_iter()
        .map(|(label, proto)| {
            fusion::comparative(proto, input, config).map(|r| (label.clone(), r.complement))
        })
        .collect::<Result<Vec<_>>>()?;
    select_best(scored)
}

/// Classification from precomputed complement scores.
pub fn select_best(scored: Vec<(String, f64)>) -> Result<ClassificationResult> {
    if scored.len() < 2 {
        return Err(Error::NotEnoughInputs(format!(
            "classification needs at least 2 prototypes, got {}",
            scored.len()
        )));
    }
    let mut scores = BTreeMap::new();
    for (label, score) in &scored {
        if !score.is_finite() {
            return Err(Error::NonFinite(*score));
        }
        if scores.insert(label.clone(), *score).is_some() {
            return Err(Error::NotEnoughInputs(format!(
                "duplicate prototype label `{label}`"
            )));
        }
    }

    let mut order: Vec<(&String, f64)> = scores.iter().map(|(l, s)| (l, s.abs())).collect();
    order.sort_by(|a, b| b.1.total_cmp(&a.1));
    let best = order[0].1;
    let tied: Vec<String> = order
        .iter()
        .take_while(|(_, s)| best - s <= TIE_TOLERANCE)
        .map(|(l, _)| (*l).clone())
        .collect();
    if tied.len() > 1 {
        return Err(Error::AmbiguousClassification { labels: tied });
    }
    Ok(ClassificationResult {
        best_label: order[0].0.clone(),
        margin: best - order[1].1,
        scores,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub w1: f64,
    pub w2: f64,
    pub c: f64,
}

/// Comparative value for `steps` evenly spaced first weights from 0 to 1.
pub fn weight_sweep(
    similarity: f64,
    normalized_distance: f64,
    steps: usize,
) -> Result<Vec<SweepRow>> {
    if steps < 2 {
        return Err(Error::NotEnoughInputs(format!(
            "weight sweep needs at least 2 steps, got {steps}"
        )));
    }
    if !(0.0..=1.0).contains(&similarity) {
        return Err(Error::OutOfDomain {
            what: "similarity",
            value: similarity,
            min: 0.0,
            max: 1.0,
        });
    }
    if !(-1.0..=1.0).contains(&normalized_distance) {
        return Err(Error::OutOfDomain {
            what: "normalized distance",
            value: normalized_distance,
            min: -1.0,
            max: 1.0,
        });
    }
    (0..steps)
        .map(|i| {
            let w1 = i as f64 / (steps - 1) as f64;
            let w2 = 1.0 - w1;
            let weights = WeightVector::new(vec![w1, w2])?;
            let c = fusion::fuse_normalized(similarity, normalized_distance, &weights)?;
            Ok(SweepRow { w1, w2, c })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::Universe;

    fn tri(name: &str, universe: Universe, a: f64, b: f64, c: f64) -> FuzzySet {
        FuzzySet::triangular(name, universe, a, b, c).unwrap()
    }

    fn u10() -> Universe {
        Universe::new(0.0, 10.0).unwrap()
    }

    #[test]
    fn matrix_of_identical_sets_is_zero() {
        let a = tri("a", u10(), 1.0, 2.0, 3.0);
        let m = matrix(
            &[a.clone(), a.with_name("a2")],
            &ComparativeConfig::default(),
        )
        .unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.get(i, j).comparative, 0.0);
            }
        }
    }

    #[test]
    fn matrix_directional_entries_are_antisymmetric() {
        let a = tri("a", u10(), 1.0, 2.0, 4.0);
        let b = FuzzySet::trapezoidal("b", u10(), 2.0, 3.0, 5.0, 8.0).unwrap();
        let m = matrix(&[a, b], &ComparativeConfig::default()).unwrap();
        assert_eq!(m.get(0, 1).comparative, -m.get(1, 0).comparative);
        assert_ne!(m.get(0, 1).comparative, 0.0);
    }

    #[test]
    fn matrix_spatial_ordering() {
        let u = Universe::new(1.0, 9.0).unwrap();
        let sets = [
            tri("A", u, 1.0, 2.0, 3.0),
            tri("B", u, 3.0, 4.0, 5.0),
            tri("C", u, 5.0, 6.0, 7.0),
        ];
        let m = matrix(&sets, &ComparativeConfig::default()).unwrap();
        // disjoint pairs: 0.7 * 1 + 0.3 * d / 8
        assert!((m.get(0, 1).comparative - 0.775).abs() < 1e-12);
        assert!((m.get(0, 2).comparative - 0.85).abs() < 1e-12);
        assert!(m.get(0, 2).comparative.abs() > m.get(0, 1).comparative.abs());
    }

    #[test]
    fn matrix_needs_two_sets() {
        let a = tri("a", u10(), 1.0, 2.0, 3.0);
        assert!(matrix(&[a], &ComparativeConfig::default()).is_err());
    }

    #[test]
    fn rank_puts_copy_first() {
        let reference = tri("ref", u10(), 2.0, 3.0, 4.0);
        let cands = vec![
            tri("far", u10(), 7.0, 8.0, 9.0),
            reference.clone().with_name("copy"),
            tri("near", u10(), 3.0, 4.0, 5.0),
        ];
        let r = rank(&reference, &cands, &ComparativeConfig::default()).unwrap();
        let labels: Vec<&str> = r.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, ["copy", "near", "far"]);
        assert_eq!(r[0].report.comparative, 0.0);
    }

    #[test]
    fn rank_prefers_overlap_at_equal_distance() {
        let reference = tri("A", u10(), 2.0, 3.0, 4.0);
        let overlapping = FuzzySet::trapezoidal("B", u10(), 3.0, 4.0, 6.0, 7.0).unwrap();
        let disjoint = tri("C", u10(), 5.0, 6.0, 7.0);
        let r = rank(
            &reference,
            &[disjoint, overlapping],
            &ComparativeConfig::default(),
        )
        .unwrap();
        assert!((r[0].report.distance - r[1].report.distance).abs() < 1e-9);
        assert!((r[0].report.distance - 3.0).abs() < 1e-9);
        assert_eq!(r[0].label, "B");
        assert!(r[0].report.similarity > 0.0);
        assert_eq!(r[1].report.similarity, 0.0);
    }

    #[test]
    fn rank_single_candidate() {
        let reference = tri("ref", u10(), 2.0, 3.0, 4.0);
        let r = rank(
            &reference,
            &[tri("x", u10(), 1.0, 5.0, 9.0)],
            &ComparativeConfig::default(),
        )
        .unwrap();
        assert_eq!(r.len(), 1);
        assert!(rank(&reference, &[], &ComparativeConfig::default()).is_err());
    }

    #[test]
    fn rank_ties_break_by_label() {
        let reference = tri("ref", u10(), 4.0, 5.0, 6.0);
        let cands = vec![
            reference.clone().with_name("b"),
            reference.clone().with_name("a"),
        ];
        let r = rank(&reference, &cands, &ComparativeConfig::default()).unwrap();
        assert_eq!(r[0].label, "a");
    }

    #[test]
    fn select_best_on_table_scores() {
        let scored = vec![
            ("Poor".into(), 0.171),
            ("OK".into(), 0.609),
            ("Great".into(), -0.516),
        ];
        let r = select_best(scored).unwrap();
        assert_eq!(r.best_label, "OK");
        assert!((r.margin - 0.093).abs() < 1e-12);
    }

    #[test]
    fn classify_exact_match_wins() {
        let input = tri("input", u10(), 4.0, 5.0, 6.0);
        let protos = vec![
            ("low".to_string(), tri("low", u10(), 1.0, 2.0, 3.0)),
            ("mid".to_string(), input.clone().with_name("mid")),
            ("high".to_string(), tri("high", u10(), 7.0, 8.0, 9.0)),
        ];
        let r = classify(&input, &protos, &ComparativeConfig::default()).unwrap();
        assert_eq!(r.best_label, "mid");
        assert_eq!(r.scores["mid"], 1.0);
    }

    #[test]
    fn classify_mirror_prototypes_is_ambiguous() {
        let input = tri("input", u10(), 4.0, 5.0, 6.0);
        let protos = vec![
            ("left".to_string(), tri("left", u10(), 3.0, 4.0, 5.0)),
            ("right".to_string(), tri("right", u10(), 5.0, 6.0, 7.0)),
        ];
        match classify(&input, &protos, &ComparativeConfig::default()) {
            Err(Error::AmbiguousClassification { labels }) => assert_eq!(labels.len(), 2),
            other => panic!("expected ambiguity, got {other:?}"),
        }
    }

    #[test]
    fn weight_sweep_examples() {
        let rows = weight_sweep(0.182, 0.331, 11).unwrap();
        assert_eq!(rows.len(), 11);
        assert!((rows[7].w1 - 0.7).abs() < 1e-15);
        assert!((rows[7].c - 0.672).abs() < 1e-3);

        let rows = weight_sweep(1.0, 0.0, 11).unwrap();
        assert!(rows.iter().all(|r| r.c == 0.0));

        assert!(weight_sweep(0.5, 0.5, 1).is_err());
        assert!(weight_sweep(1.5, 0.5, 11).is_err());
        assert!(weight_sweep(0.5, -1.5, 11).is_err());
    }
}
