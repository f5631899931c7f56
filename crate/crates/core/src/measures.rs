//! Similarity and distance measures between fuzzy sets.
//!
//! - [`jaccard`]: ratio of summed point-wise minima to summed maxima on a
//!   [`SampleGrid`].
//! - [`interval_hausdorff`] and [`interval_hausdorff_directional`]: metrics on
//!   closed intervals.
//! - [`alpha_distance`]: level-weighted mean of the interval metric over the
//!   alpha-cuts of two normal sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{FuzzySet, Interval, Universe};

/// Uniform sample points along the x-axis of a universe.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleGrid {
    xs: Vec<f64>,
}

impl SampleGrid {
    /// `n` evenly spaced points from `universe.min()` to `universe.max()`.
    pub fn uniform(universe: &Universe, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGrid(format!(
                "uniform grid needs at least 2 points, got {n}"
            )));
        }
        let (lo, hi) = (universe.min(), universe.max());
        let step = (hi - lo) / (n - 1) as f64;
        let mut xs: Vec<f64> = (0..n).map(|i| lo + i as f64 * step).collect();
        xs[n - 1] = hi;
        Ok(Self { xs })
    }

    /// Every integer inside the universe.
    pub fn integers(universe: &Universe) -> Result<Self> {
        let lo = universe.min().ceil();
        let hi = universe.max().floor();
        if lo > hi {
            return Err(Error::InvalidGrid(format!(
                "no integers in [{}, {}]",
                universe.min(),
                universe.max()
            )));
        }
        let xs = (0..=(hi - lo) as usize).map(|i| lo + i as f64).collect();
        Ok(Self { xs })
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }
}

/// How sample grids are laid over a universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridSpec {
    Uniform(usize),
    Integers,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec::Uniform(201)
    }
}

impl GridSpec {
    pub fn build(&self, universe: &Universe) -> Result<SampleGrid> {
        match *self {
            GridSpec::Uniform(n) => SampleGrid::uniform(universe, n),
            GridSpec::Integers => SampleGrid::integers(universe),
        }
    }
}

/// Placement of the `m` alpha levels inside `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelScheme {
    /// `i / m` for `i = 1..=m`; the top level is exactly 1.
    Upper,
    /// `(i - 1/2) / m`; second-order accurate in `m`.
    #[default]
    Midpoint,
}

/// Discretised alpha levels; each level also serves as its own weight.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaGrid {
    levels: Vec<f64>,
}

impl AlphaGrid {
    /// Levels `i / m`, `i = 1..=m`.
    pub fn new(m: usize) -> Result<Self> {
        Self::with_scheme(m, LevelScheme::Upper)
    }

    /// Levels `(i - 1/2) / m`, `i = 1..=m`.
    pub fn midpoint(m: usize) -> Result<Self> {
        Self::with_scheme(m, LevelScheme::Midpoint)
    }

    pub fn with_scheme(m: usize, scheme: LevelScheme) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidGrid(
                "alpha grid needs at least one level".into(),
            ));
        }
        let mf = m as f64;
        let levels = (1..=m)
            .map(|i| match scheme {
                LevelScheme::Upper => i as f64 / mf,
                LevelScheme::Midpoint => (i as f64 - 0.5) / mf,
            })
            .collect();
        Ok(Self { levels })
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// Whether distances carry a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Symmetric,
    #[default]
    Directional,
}

/// Treatment of non-convex inputs in [`alpha_distance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convexity {
    /// Use the enclosing span of each level set.
    #[default]
    Span,
    /// Reject non-convex sets.
    Strict,
}

pub(crate) fn check_same_universe(a: &FuzzySet, b: &FuzzySet) -> Result<()> {
    if a.universe() != b.universe() {
        return Err(Error::UniverseMismatch {
            left: a.name().to_owned(),
            right: b.name().to_owned(),
        });
    }
    Ok(())
}

/// Jaccard similarity of two sets sampled on `grid`.
pub fn jaccard(a: &FuzzySet, b: &FuzzySet, grid: &SampleGrid) -> Result<f64> {
    check_same_universe(a, b)?;
    let (mut lower, mut upper) = (0.0, 0.0);
    for &x in grid.xs() {
        let (ma, mb) = (a.membership(x), b.membership(x));
        lower += ma.min(mb);
        upper += ma.max(mb);
    }
    if upper == 0.0 {
        return Err(Error::DegeneratePair {
            left: a.name().to_owned(),
            right: b.name().to_owned(),
        });
    }
    Ok(lower / upper)
}

/// Hausdorff distance between two closed intervals.
pub fn interval_hausdorff(a: Interval, b: Interval) -> f64 {
    (a.left() - b.left())
        .abs()
        .max((a.right() - b.right()).abs())
}

/// Signed interval distance: the endpoint difference of larger magnitude,
/// positive when `b` lies to the right of `a`. Ties take the right endpoint.
pub fn interval_hausdorff_directional(a: Interval, b: Interval) -> f64 {
    let dl = b.left() - a.left();
    let dr = b.right() - a.right();
    if dl.abs() > dr.abs() {
        dl
    } else {
        dr
    }
}

/// Alpha-cut weighted distance between two normal sets.
///
/// Each level's interval distance is weighted by the level itself, and the
/// weighted sum is divided by the sum of the levels.
pub fn alpha_distance(
    a: &FuzzySet,
    b: &FuzzySet,
    grid: &AlphaGrid,
    direction: Direction,
    convexity: Convexity,
) -> Result<f64> {
    check_same_universe(a, b)?;
    for set in [a, b] {
        if !set.is_normal() {
            return Err(Error::NotNormal {
                name: set.name().to_owned(),
                height: set.height(),
            });
        }
        if convexity == Convexity::Strict && !set.is_convex() {
            return Err(Error::NotConvex {
                name: set.name().to_owned(),
            });
        }
    }

    let metric = match direction {
        Direction::Symmetric => interval_hausdorff,
        Direction::Directional => interval_hausdorff_directional,
    };
    let (mut weighted, mut total) = (0.0, 0.0);
    for &alpha in grid.levels() {
        let cut_a = a.alpha_cut(alpha)?.expect("normal set has every cut");
        let cut_b = b.alpha_cut(alpha)?.expect("normal set has every cut");
        weighted += alpha * metric(cut_a, cut_b);
        total += alpha;
    }
    Ok(weighted / total)
}
