//! Brute-force reference evaluations used to cross-check the measures.
//!
//! Nothing here calls into `set`, `measures` or `fusion` beyond reading a
//! [`FuzzySet`]'s breakpoints and universe: membership is re-derived by a
//! sequential walk over the breakpoints, alpha-cuts come from scanning a dense
//! sample grid, and OWA uses a selection sort. These are slow on purpose.

use crate::error::{Error, Result};
use crate::set::FuzzySet;

/// Fewest sample points a [`DenseSet`] may use.
pub const MIN_DENSE_POINTS: usize = 10_000;

/// A fuzzy set sampled on a fine uniform grid over its universe.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSet {
    xs: Vec<f64>,
    mus: Vec<f64>,
}

impl DenseSet {
    pub fn sample(set: &FuzzySet, n: usize) -> Result<Self> {
        if n < MIN_DENSE_POINTS {
            return Err(Error::InvalidGrid(format!(
                "dense grid needs at least {MIN_DENSE_POINTS} points, got {n}"
            )));
        }
        let lo = set.universe().min();
        let hi = set.universe().max();
        let xs: Vec<f64> = (0..n)
            .map(|i| lo + (hi - lo) * (i as f64) / ((n - 1) as f64))
            .collect();

        let pts = set.points();
        let mut mus = Vec::with_capacity(n);
        let mut seg = 0;
        for &x in &xs {
            while seg < pts.len() && pts[seg].0 < x {
                seg += 1;
            }
            // pts[seg] is the first breakpoint at or right of x
            let mu = if seg == pts.len() {
                0.0
            } else if pts[seg].0 == x {
                pts[seg].1
            } else if seg == 0 {
                0.0
            } else {
                let (x0, y0) = pts[seg - 1];
                let (x1, y1) = pts[seg];
                let t = (x - x0) / (x1 - x0);
                y0 * (1.0 - t) + y1 * t
            };
            mus.push(mu);
        }
        Ok(Self { xs, mus })
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn mus(&self) -> &[f64] {
        &self.mus
    }
}

/// Min/max sum ratio over two dense sets on the same grid.
pub fn oracle_jaccard(a: &DenseSet, b: &DenseSet) -> Result<f64> {
    if a.xs != b.xs {
        return Err(Error::InvalidGrid("dense grids differ".into()));
    }
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..a.mus.len() {
        let (p, q) = (a.mus[i], b.mus[i]);
        if p < q {
            num += p;
            den += q;
        } else {
            num += q;
            den += p;
        }
    }
    if den == 0.0 {
        return Err(Error::InvalidGrid(
            "both dense sets are zero everywhere".into(),
        ));
    }
    Ok(num / den)
}

/// Number of dense points used by [`oracle_alpha_distance`].
pub const ORACLE_GRID_POINTS: usize = 10_001;

/// Level-weighted interval distance with levels `i / m` and cuts found by
/// scanning a dense grid.
pub fn oracle_alpha_distance(
    a: &FuzzySet,
    b: &FuzzySet,
    m: usize,
    directional: bool,
) -> Result<f64> {
    if a.universe() != b.universe() {
        return Err(Error::UniverseMismatch {
            left: a.name().to_owned(),
            right: b.name().to_owned(),
        });
    }
    if m == 0 {
        return Err(Error::InvalidGrid("need at least one level".into()));
    }
    let da = DenseSet::sample(a, ORACLE_GRID_POINTS)?;
    let db = DenseSet::sample(b, ORACLE_GRID_POINTS)?;
    let cuts_a = scan_cuts(&da, m);
    let cuts_b = scan_cuts(&db, m);

    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..m {
        let y = (i + 1) as f64 / m as f64;
        let (al, ar) = cuts_a[i];
        let (bl, br) = cuts_b[i];
        let h = if directional {
            if (bl - al).abs() > (br - ar).abs() {
                bl - al
            } else {
                br - ar
            }
        } else {
            let l = (al - bl).abs();
            let r = (ar - br).abs();
            if l > r {
                l
            } else {
                r
            }
        };
        num += y * h;
        den += y;
    }
    Ok(num / den)
}

/// Outermost grid points with membership at or above each level `i / m`.
/// Levels above the sampled peak use the sampled peak instead.
fn scan_cuts(dense: &DenseSet, m: usize) -> Vec<(f64, f64)> {
    let n = dense.mus.len();
    let mut peak = 0.0;
    for &mu in &dense.mus {
        if mu > peak {
            peak = mu;
        }
    }
    let mut cuts = Vec::with_capacity(m);
    let mut lo = 0;
    let mut hi = n - 1;
    for i in 1..=m {
        let mut level = i as f64 / m as f64;
        if level > peak {
            level = peak;
        }
        // the level set only shrinks as the level rises
        while dense.mus[lo] < level {
            lo += 1;
        }
        while dense.mus[hi] < level {
            hi -= 1;
        }
        cuts.push((dense.xs[lo], dense.xs[hi]));
    }
    cuts
}

/// Sort key for [`oracle_owa`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SortKey {
    Value,
    Magnitude,
}

/// OWA by selection sort then a left-to-right dot product.
pub fn oracle_owa(values: &[f64], weights: &[f64], key: SortKey) -> Result<f64> {
    if values.len() != weights.len() {
        return Err(Error::LengthMismatch {
            values: values.len(),
            weights: weights.len(),
        });
    }
    let mut rest = values.to_vec();
    let mut ordered = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut pick = 0;
        for j in 1..rest.len() {
            let (c, p) = (rest[j], rest[pick]);
            let ahead = match key {
                SortKey::Value => c > p,
                SortKey::Magnitude => c.abs() > p.abs() || (c.abs() == p.abs() && c > p),
            };
            if ahead {
                pick = j;
            }
        }
        ordered.push(rest.remove(pick));
    }
    let mut total = 0.0;
    for i in 0..ordered.len() {
        total += weights[i] * ordered[i];
    }
    Ok(total)
}
