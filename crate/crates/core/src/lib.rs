//! Compare fuzzy sets with a single fused measure.
//!
//! Jaccard similarity and an alpha-cut weighted (optionally signed) Hausdorff
//! distance are combined through an ordered weighted average into one value
//! in `[-1, 1]`: 0 for identical sets, magnitude 1 for maximally distant ones,
//! and the sign telling which side the second set lies on.
//!
//! ```
//! use fuzzy_compare::{comparative, ComparativeConfig, FuzzySet, Universe};
//!
//! let u = Universe::new(0.0, 10.0).unwrap();
//! let a = FuzzySet::triangular("a", u, 1.0, 2.0, 3.0).unwrap();
//! let b = FuzzySet::triangular("b", u, 3.0, 4.0, 5.0).unwrap();
//! let report = comparative(&a, &b, &ComparativeConfig::default()).unwrap();
//! assert!(report.comparative > 0.0);
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod fusion;
pub mod io;
pub mod measures;
pub mod oracle;
pub mod set;

pub use analysis::{classify, matrix, rank, weight_sweep, ClassificationResult, ComparisonMatrix};
pub use error::{Error, Result};
pub use fusion::{
    comparative, comparative_complement, fuse, owa, ComparativeConfig, ComparisonReport,
    OwaOrdering, WeightVector,
};
pub use measures::{
    alpha_distance, interval_hausdorff, interval_hausdorff_directional, jaccard, AlphaGrid,
    Convexity, Direction, GridSpec, LevelScheme, SampleGrid,
};
pub use set::{build_from_samples, FuzzySet, Interval, SetProfile, Universe};
