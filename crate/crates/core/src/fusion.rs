//! OWA aggregation and the comparative measure.
//!
//! The comparative measure fuses dissimilarity `1 - s` with the normalized
//! signed distance `d / lambda` through a two-weight OWA that orders its
//! inputs by magnitude. When `d < 0` the dissimilarity is negated as well, so
//! both inputs share a sign and the result keeps the direction of `d`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::measures::{self, AlphaGrid, Convexity, Direction, GridSpec, LevelScheme};
use crate::set::FuzzySet;

const WEIGHT_TOLERANCE: f64 = 1e-9;

/// OWA weights: each in `[0, 1]`, summing to 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("empty weight vector".into()));
        }
        if let Some(w) = weights.iter().find(|w| !(0.0..=1.0).contains(*w)) {
            return Err(Error::InvalidWeights(format!("weight {w} outside [0, 1]")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_TOLERANCE {
            return Err(Error::InvalidWeights(format!(
                "weights sum to {sum}, not 1"
            )));
        }
        Ok(Self(weights))
    }

    /// Two-element vector `{first, 1 - first}`.
    pub fn pair(first: f64) -> Result<Self> {
        Self::new(vec![first, 1.0 - first])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Default for WeightVector {
    fn default() -> Self {
        Self(vec![0.7, 0.3])
    }
}

/// Key used to sort OWA inputs into descending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OwaOrdering {
    Standard,
    /// Descending magnitude; equal magnitudes put the positive value first.
    ByAbsoluteValue,
}

/// Ordering placing the element that should come first as `Less`.
pub(crate) fn rank_order(ordering: OwaOrdering, a: f64, b: f64) -> Ordering {
    match ordering {
        OwaOrdering::Standard => b.total_cmp(&a),
        OwaOrdering::ByAbsoluteValue => b.abs().total_cmp(&a.abs()).then(b.total_cmp(&a)),
    }
}

/// Ordered weighted average of `values`.
pub fn owa(values: &[f64], weights: &WeightVector, ordering: OwaOrdering) -> Result<f64> {
    if values.len() != weights.len() {
        return Err(Error::LengthMismatch {
            values: values.len(),
            weights: weights.len(),
        });
    }
    if let Some(&v) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::NonFinite(v));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|&a, &b| rank_order(ordering, a, b));
    Ok(sorted
        .iter()
        .zip(weights.as_slice())
        .fold(0.0, |acc, (b, w)| acc + w * b))
}

/// Settings for [`comparative`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparativeConfig {
    pub weights: WeightVector,
    pub alpha_levels: usize,
    pub level_scheme: LevelScheme,
    pub lambda_override: Option<f64>,
    pub direction: Direction,
    pub convexity: Convexity,
    pub grid: GridSpec,
}

impl Default for ComparativeConfig {
    fn default() -> Self {
        Self {
            weights: WeightVector::default(),
            alpha_levels: 100,
            level_scheme: LevelScheme::default(),
            lambda_override: None,
            direction: Direction::Directional,
            convexity: Convexity::Span,
            grid: GridSpec::default(),
        }
    }
}

impl ComparativeConfig {
    pub fn symmetric() -> Self {
        Self {
            direction: Direction::Symmetric,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.weights.len() != 2 {
            return Err(Error::InvalidWeights(format!(
                "the comparative measure takes exactly 2 weights, got {}",
                self.weights.len()
            )));
        }
        if self.alpha_levels == 0 {
            return Err(Error::InvalidGrid("alpha_levels must be positive".into()));
        }
        if let Some(l) = self.lambda_override {
            check_lambda(l)?;
        }
        Ok(())
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidLambda(lambda));
    }
    Ok(())
}

/// Everything computed while comparing one ordered pair of sets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub similarity: f64,
    pub distance: f64,
    pub normalized_distance: f64,
    pub comparative: f64,
    pub complement: f64,
    pub lambda: f64,
}

/// Fuses a similarity and a (signed) distance into the comparative measure
/// and its complement.
pub fn fuse(
    similarity: f64,
    distance: f64,
    lambda: f64,
    weights: &WeightVector,
) -> Result<ComparisonReport> {
    check_lambda(lambda)?;
    if !(0.0..=1.0).contains(&similarity) {
        return Err(Error::OutOfDomain {
            what: "similarity",
            value: similarity,
            min: 0.0,
            max: 1.0,
        });
    }
    if !distance.is_finite() {
        return Err(Error::NonFinite(distance));
    }
    let normalized_distance = distance / lambda;
    let comparative = fuse_normalized(similarity, normalized_distance, weights)?;
    Ok(ComparisonReport {
        similarity,
        distance,
        normalized_distance,
        comparative,
        complement: comparative_complement(comparative)?,
        lambda,
    })
}

/// Comparative measure from a similarity and an already normalized distance.
pub fn fuse_normalized(
    similarity: f64,
    normalized_distance: f64,
    weights: &WeightVector,
) -> Result<f64> {
    if weights.len() != 2 {
        return Err(Error::InvalidWeights(format!(
            "the comparative measure takes exactly 2 weights, got {}",
            weights.len()
        )));
    }
    let dissimilarity = 1.0 - similarity;
    let first = if normalized_distance >= 0.0 {
        dissimilarity
    } else {
        -dissimilarity
    };
    owa(
        &[first, normalized_distance],
        weights,
        OwaOrdering::ByAbsoluteValue,
    )
}

/// Maps the comparative measure so identical sets score 1 (or -1 from the
/// negative side), keeping its sign.
pub fn comparative_complement(c: f64) -> Result<f64> {
    // a hair of slack for weights that sum to 1 only after rounding
    if c.is_nan() || c.abs() > 1.0 + 1e-12 {
        return Err(Error::OutOfDomain {
            what: "comparative value",
            value: c,
            min: -1.0,
            max: 1.0,
        });
    }
    Ok(if c >= 0.0 { 1.0 - c } else { -1.0 - c })
}

/// Compares `a` (first argument) against `b`.
pub fn comparative(
    a: &FuzzySet,
    b: &FuzzySet,
    config: &ComparativeConfig,
) -> Result<ComparisonReport> {
    config.validate()?;
    measures::check_same_universe(a, b)?;
    let grid = config.grid.build(a.universe())?;
    let similarity = measures::jaccard(a, b, &grid)?;
    let alpha_grid = AlphaGrid::with_scheme(config.alpha_levels, config.level_scheme)?;
    let distance = measures::alpha_distance(a, b, &alpha_grid, config.direction, config.convexity)?;
    let lambda = config
        .lambda_override
        .unwrap_or_else(|| a.universe().width());
    fuse(similarity, distance, lambda, &config.weights)
}
