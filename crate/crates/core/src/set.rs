//! Piecewise-linear fuzzy sets over a bounded universe.
//!
//! A set is a list of `(x, mu)` breakpoints. Membership between breakpoints is
//! linear and zero outside the breakpoint span. Sets are immutable once built.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance used for normality and convexity checks.
pub const TOLERANCE: f64 = 1e-9;

/// Bounded universe of discourse `[min, max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawUniverse")]
pub struct Universe {
    min: f64,
    max: f64,
}

#[derive(Deserialize)]
struct RawUniverse {
    min: f64,
    max: f64,
}

impl TryFrom<RawUniverse> for Universe {
    type Error = Error;

    fn try_from(raw: RawUniverse) -> Result<Self> {
        Universe::new(raw.min, raw.max)
    }
}

impl Universe {
    pub fn new(min: f64, max: f64) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Error::InvalidUniverse { min, max });
        }
        Ok(Self { min, max })
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    /// Largest distance attainable inside the universe.
    pub fn width(&self) -> f64 {
        self.max - self.min
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.min && x <= self.max
    }
}

/// Closed interval `[left, right]`; a single point is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    left: f64,
    right: f64,
}

impl Interval {
    pub fn new(left: f64, right: f64) -> Result<Self> {
        if !(left.is_finite() && right.is_finite()) || left > right {
            return Err(Error::InvalidInterval { left, right });
        }
        Ok(Self { left, right })
    }

    pub fn point(x: f64) -> Self {
        Self { left: x, right: x }
    }

    pub fn left(&self) -> f64 {
        self.left
    }

    pub fn right(&self) -> f64 {
        self.right
    }

    pub fn width(&self) -> f64 {
        self.right - self.left
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.left <= other.left && other.right <= self.right
    }
}

/// A named fuzzy set with piecewise-linear membership.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawFuzzySet")]
pub struct FuzzySet {
    name: String,
    universe: Universe,
    points: Vec<(f64, f64)>,
}

#[derive(Deserialize)]
struct RawFuzzySet {
    name: String,
    universe: Universe,
    points: Vec<(f64, f64)>,
}

impl TryFrom<RawFuzzySet> for FuzzySet {
    type Error = Error;

    fn try_from(raw: RawFuzzySet) -> Result<Self> {
        FuzzySet::new(raw.name, raw.universe, raw.points)
    }
}

impl FuzzySet {
    /// Validates and builds a set from breakpoints sorted by `x`.
    pub fn new(
        name: impl Into<String>,
        universe: Universe,
        points: Vec<(f64, f64)>,
    ) -> Result<Self> {
        let name = name.into();
        let invalid = |reason: String| Error::InvalidSet {
            name: name.clone(),
            reason,
        };
        if points.is_empty() {
            return Err(invalid("no breakpoints".into()));
        }
        for (i, &(x, mu)) in points.iter().enumerate() {
            if !x.is_finite() || !mu.is_finite() {
                return Err(invalid(format!("breakpoint {i} is not finite")));
            }
            if !universe.contains(x) {
                return Err(invalid(format!(
                    "breakpoint {i} at x = {x} lies outside [{}, {}]",
                    universe.min, universe.max
                )));
            }
            if !(0.0..=1.0).contains(&mu) {
                return Err(invalid(format!(
                    "membership {mu} at x = {x} outside [0, 1]"
                )));
            }
        }
        if let Some(i) = points.windows(2).position(|w| w[0].0 >= w[1].0) {
            return Err(invalid(format!(
                "breakpoints must strictly increase in x (index {})",
                i + 1
            )));
        }
        if points.iter().all(|&(_, mu)| mu == 0.0) {
            return Err(invalid("membership is zero everywhere".into()));
        }
        Ok(Self {
            name,
            universe,
            points,
        })
    }

    /// Triangle with feet at `a`, `c` and peak at `b`.
    pub fn triangular(
        name: impl Into<String>,
        universe: Universe,
        a: f64,
        b: f64,
        c: f64,
    ) -> Result<Self> {
        Self::new(name, universe, vec![(a, 0.0), (b, 1.0), (c, 0.0)])
    }

    /// Trapezoid with feet at `a`, `d` and plateau `[b, c]`.
    pub fn trapezoidal(
        name: impl Into<String>,
        universe: Universe,
        a: f64,
        b: f64,
        c: f64,
        d: f64,
    ) -> Result<Self> {
        Self::new(name, universe, vec![(a, 0.0), (b, 1.0), (c, 1.0), (d, 0.0)])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Peak membership over all breakpoints.
    pub fn height(&self) -> f64 {
        self.points.iter().map(|p| p.1).fold(0.0, f64::max)
    }

    pub fn is_normal(&self) -> bool {
        (self.height() - 1.0).abs() <= TOLERANCE
    }

    /// Membership sequence rises (weakly) and then falls (weakly).
    pub fn is_convex(&self) -> bool {
        let mut falling = false;
        for w in self.points.windows(2) {
            let step = w[1].1 - w[0].1;
            if step < -TOLERANCE {
                falling = true;
            } else if step > TOLERANCE && falling {
                return false;
            }
        }
        true
    }

    /// Interpolated membership at `x`; zero outside the breakpoint span.
    pub fn membership(&self, x: f64) -> f64 {
        let pts = &self.points;
        // first breakpoint with x_i >= x
        let idx = pts.partition_point(|p| p.0 < x);
        if idx == pts.len() {
            return 0.0;
        }
        let (x1, mu1) = pts[idx];
        if x1 == x {
            return mu1;
        }
        if idx == 0 {
            return 0.0;
        }
        let (x0, mu0) = pts[idx - 1];
        mu0 + (x - x0) / (x1 - x0) * (mu1 - mu0)
    }

    /// Smallest interval enclosing `{x | mu(x) >= alpha}`.
    ///
    /// Returns `None` when `alpha` exceeds the height. A level within
    /// [`TOLERANCE`] above the height is clamped to the height so that
    /// numerically normal sets always have a top cut. For non-convex sets the
    /// result is the enclosing span of the level set.
    pub fn alpha_cut(&self, alpha: f64) -> Result<Option<Interval>> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidAlpha(alpha));
        }
        let height = self.height();
        if alpha > height + TOLERANCE {
            return Ok(None);
        }
        let level = alpha.min(height);
        let pts = &self.points;

        let first = pts
            .iter()
            .position(|p| p.1 >= level)
            .expect("level <= height");
        let left = if first == 0 {
            pts[0].0
        } else {
            crossing(pts[first - 1], pts[first], level)
        };

        let last = pts
            .iter()
            .rposition(|p| p.1 >= level)
            .expect("level <= height");
        let right = if last == pts.len() - 1 {
            pts[last].0
        } else {
            crossing(pts[last + 1], pts[last], level)
        };

        Ok(Some(Interval { left, right }))
    }

    /// Closure of `{x | mu(x) > 0}`.
    pub fn support(&self) -> Interval {
        let pts = &self.points;
        let first = pts
            .iter()
            .position(|p| p.1 > 0.0)
            .expect("set is not all-zero");
        let last = pts
            .iter()
            .rposition(|p| p.1 > 0.0)
            .expect("set is not all-zero");
        let left = pts[first.saturating_sub(1)].0;
        let right = pts[(last + 1).min(pts.len() - 1)].0;
        Interval { left, right }
    }

    pub fn profile(&self) -> SetProfile {
        let height = self.height();
        SetProfile {
            height,
            is_normal: (height - 1.0).abs() <= TOLERANCE,
            is_convex: self.is_convex(),
            support: self.support(),
        }
    }
}

/// x where the segment from `outer` (below `level`) to `inner` (at or above)
/// reaches `level`.
fn crossing(outer: (f64, f64), inner: (f64, f64), level: f64) -> f64 {
    let (xo, muo) = outer;
    let (xi, mui) = inner;
    let x = xo + (level - muo) / (mui - muo) * (xi - xo);
    // keep rounding from stepping past the inner breakpoint
    if xo < xi {
        x.min(xi)
    } else {
        x.max(xi)
    }
}

/// Summary of the shape properties the distance measure depends on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SetProfile {
    pub height: f64,
    pub is_normal: bool,
    pub is_convex: bool,
    pub support: Interval,
}

/// Builds a normal fuzzy set from raw samples by histogramming onto bin
/// centres and dividing each count by the largest count.
///
/// Each sample is assigned to its nearest bin centre (ties go to the lower
/// centre).
pub fn build_from_samples(
    name: impl Into<String>,
    samples: &[f64],
    universe: Universe,
    bins: &[f64],
) -> Result<FuzzySet> {
    if samples.is_empty() {
        return Err(Error::NoData);
    }
    if bins.is_empty() {
        return Err(Error::InvalidBins("no bin centres".into()));
    }
    if bins.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidBins(
            "bin centres must strictly increase".into(),
        ));
    }
    if let Some(&b) = bins.iter().find(|&&b| !universe.contains(b)) {
        return Err(Error::InvalidBins(format!(
            "bin centre {b} outside [{}, {}]",
            universe.min, universe.max
        )));
    }

    let mut counts = vec![0u64; bins.len()];
    for &s in samples {
        if !s.is_finite() || !universe.contains(s) {
            return Err(Error::OutOfRange {
                value: s,
                min: universe.min,
                max: universe.max,
            });
        }
        counts[nearest_bin(bins, s)] += 1;
    }

    let peak = *counts.iter().max().expect("bins non-empty") as f64;
    let points = bins
        .iter()
        .zip(&counts)
        .map(|(&x, &n)| (x, n as f64 / peak))
        .collect();
    FuzzySet::new(name, universe, points)
}

fn nearest_bin(bins: &[f64], x: f64) -> usize {
    let idx = bins.partition_point(|&b| b < x);
    if idx == 0 {
        return 0;
    }
    if idx == bins.len() {
        return bins.len() - 1;
    }
    if x - bins[idx - 1] <= bins[idx] - x {
        idx - 1
    } else {
        idx
    }
}
