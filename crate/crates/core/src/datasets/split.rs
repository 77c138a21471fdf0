use crate::error::{Error, Result};
use crate::model::Category;

use super::Dataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitRounding {
    /// `fraction * n_c` must be an integer for every category.
    Exact,
    /// Take `floor(fraction * n_c)` points.
    Floor,
}

/// Per-category leading split: the first `fraction` of each category (in
/// source order) trains, the rest tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitSpec {
    pub train_fraction: f64,
    pub rounding: SplitRounding,
}

impl SplitSpec {
    pub fn new(train_fraction: f64) -> Result<Self> {
        Self::with_rounding(train_fraction, SplitRounding::Exact)
    }

    pub fn with_rounding(train_fraction: f64, rounding: SplitRounding) -> Result<Self> {
        if !(train_fraction > 0.0 && train_fraction < 1.0) {
            return Err(Error::InvalidSplit(format!(
                "train fraction must lie in (0, 1), got {train_fraction}"
            )));
        }
        Ok(SplitSpec {
            train_fraction,
            rounding,
        })
    }

    /// Training count for a category of `n` points.
    pub fn train_count(&self, n: usize) -> Result<usize> {
        let exact = self.train_fraction * n as f64;
        let nearest = exact.round();
        // fractions like 0.7 are not exact in binary
        if (exact - nearest).abs() < 1e-9 {
            return Ok(nearest as usize);
        }
        match self.rounding {
            SplitRounding::Exact => Err(Error::NonIntegralSplit {
                fraction: self.train_fraction,
                count: n,
            }),
            SplitRounding::Floor => Ok(exact.floor() as usize),
        }
    }
}

pub fn split_leading_fraction(dataset: &Dataset, spec: &SplitSpec) -> Result<(Dataset, Dataset)> {
    let quota = [
        spec.train_count(dataset.count(Category::One))?,
        spec.train_count(dataset.count(Category::Two))?,
    ];
    let mut taken = [0usize; 2];
    let mut train = Vec::new();
    let mut test = Vec::new();
    for (p, c) in &dataset.points {
        let k = (c.index() - 1) as usize;
        if taken[k] < quota[k] {
            taken[k] += 1;
            train.push((p.clone(), *c));
        } else {
            test.push((p.clone(), *c));
        }
    }
    let provenance = dataset.provenance;
    Ok((
        Dataset::new(format!("{}[train]", dataset.name), train, provenance),
        Dataset::new(format!("{}[test]", dataset.name), test, provenance),
    ))
}
