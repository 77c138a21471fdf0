//! Embedded datasets, the augmented-row codec, leading-fraction splits and
//! grid specifications.
//!
//! The three iris-derived sets are stored as the original augmented,
//! sign-normalized listings (`[y, y*x1, y*x2]`, 4 decimals) and decoded on
//! load.

mod codec;
mod split;
mod synthetic;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{build_model, RreConfig, RreModel, TrainingMultiset};

pub use crate::model::{Category, FeatureVector};
pub use codec::{
    format_augmented_text, format_csv, from_augmented_rows, parse_augmented_text, parse_csv,
    to_augmented_rows, AugmentedRow,
};
pub use split::{split_leading_fraction, SplitRounding, SplitSpec};
pub use synthetic::{generate_support2, xor};

const SETOSA_VERSICOLOR_TEXT: &str = include_str!("../../data/iris_setosa_versicolor.txt");
const VERSICOLOR_VIRGINICA_TEXT: &str = include_str!("../../data/iris_versicolor_virginicaV2.txt");
const SUPPORT1_TEXT: &str = include_str!("../../data/support1.txt");

pub const IRIS_SETOSA_VERSICOLOR: &str = "iris_setosa_versicolor";
pub const IRIS_VERSICOLOR_VIRGINICA_V2: &str = "iris_versicolor_virginicaV2";
pub const SUPPORT1: &str = "support1";
pub const XOR: &str = "xor";
pub const SUPPORT2: &str = "support2";

pub const BUILTIN_NAMES: [&str; 5] = [
    IRIS_SETOSA_VERSICOLOR,
    IRIS_VERSICOLOR_VIRGINICA_V2,
    SUPPORT1,
    XOR,
    SUPPORT2,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    EmbeddedListing,
    BuiltinXor,
    SyntheticSupport2,
    External,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::EmbeddedListing => "embedded-listing",
            Provenance::BuiltinXor => "builtin-xor",
            Provenance::SyntheticSupport2 => "synthetic-support2",
            Provenance::External => "external",
        };
        f.write_str(s)
    }
}

/// A labelled two-category dataset. Point order is significant: splits take
/// the leading points of each category.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    pub points: Vec<(FeatureVector, Category)>,
    pub provenance: Provenance,
}

impl Dataset {
    pub fn new(
        name: impl Into<String>,
        points: Vec<(FeatureVector, Category)>,
        provenance: Provenance,
    ) -> Self {
        Dataset {
            name: name.into(),
            points,
            provenance,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.points.first().map(|(p, _)| p.dim())
    }

    pub fn points_of(&self, category: Category) -> impl Iterator<Item = &FeatureVector> {
        self.points
            .iter()
            .filter(move |(_, c)| *c == category)
            .map(|(p, _)| p)
    }

    pub fn count(&self, category: Category) -> usize {
        self.points_of(category).count()
    }

    /// R.R.E model trained on every point of this dataset.
    pub fn rre_model(&self, config: RreConfig) -> Result<RreModel> {
        build_model(
            TrainingMultiset::from_points(self.points_of(Category::One).cloned()),
            TrainingMultiset::from_points(self.points_of(Category::Two).cloned()),
            config,
        )
    }

    /// Parses either the augmented-row listing or a raw `x1,x2,label` CSV,
    /// depending on whether the text contains commas.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Dataset> {
        let points = if text.contains(',') {
            parse_csv(text)?
        } else {
            from_augmented_rows(&parse_augmented_text(text)?)?
        };
        Ok(Dataset::new(name, points, Provenance::External))
    }
}

pub fn load_builtin(name: &str) -> Result<Dataset> {
    let listing = |text: &str, provenance| -> Result<Dataset> {
        let points = from_augmented_rows(&parse_augmented_text(text)?)?;
        Ok(Dataset::new(name, points, provenance))
    };
    match name {
        IRIS_SETOSA_VERSICOLOR => listing(SETOSA_VERSICOLOR_TEXT, Provenance::EmbeddedListing),
        IRIS_VERSICOLOR_VIRGINICA_V2 => {
            listing(VERSICOLOR_VIRGINICA_TEXT, Provenance::EmbeddedListing)
        }
        SUPPORT1 => listing(SUPPORT1_TEXT, Provenance::EmbeddedListing),
        XOR => Ok(xor()),
        SUPPORT2 => Ok(generate_support2()),
        _ => Err(Error::UnknownDataset(name.to_string())),
    }
}

/// The embedded augmented-row listing for a built-in iris-derived dataset.
pub fn builtin_listing(name: &str) -> Option<&'static str> {
    match name {
        IRIS_SETOSA_VERSICOLOR => Some(SETOSA_VERSICOLOR_TEXT),
        IRIS_VERSICOLOR_VIRGINICA_V2 => Some(VERSICOLOR_VIRGINICA_TEXT),
        SUPPORT1 => Some(SUPPORT1_TEXT),
        _ => None,
    }
}

/// Rectangular evaluation grid over two features. Nodes include both ends
/// of each axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
}

impl GridSpec {
    pub fn new(
        x_min: f64,
        x_max: f64,
        y_min: f64,
        y_max: f64,
        nx: usize,
        ny: usize,
    ) -> Result<Self> {
        let g = GridSpec {
            x_min,
            x_max,
            y_min,
            y_max,
            nx,
            ny,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let bounds = [self.x_min, self.x_max, self.y_min, self.y_max];
        if bounds.iter().any(|b| !b.is_finite()) {
            return Err(Error::InvalidGrid("bounds must be finite".into()));
        }
        if self.x_min >= self.x_max || self.y_min >= self.y_max {
            return Err(Error::InvalidGrid(
                "min must be below max on each axis".into(),
            ));
        }
        if self.nx < 2 || self.ny < 2 {
            return Err(Error::InvalidGrid(
                "resolution must be at least 2 per axis".into(),
            ));
        }
        Ok(())
    }

    /// Bounding box of a 2-D dataset padded by `pad`, `n` nodes per axis.
    pub fn around(dataset: &Dataset, pad: f64, n: usize) -> Result<Self> {
        if dataset.dimension() != Some(2) {
            return Err(Error::InvalidGrid("dataset must be two-dimensional".into()));
        }
        let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
        for (p, _) in &dataset.points {
            for k in 0..2 {
                lo[k] = lo[k].min(p.coords()[k]);
                hi[k] = hi[k].max(p.coords()[k]);
            }
        }
        GridSpec::new(lo[0] - pad, hi[0] + pad, lo[1] - pad, hi[1] + pad, n, n)
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + (self.x_max - self.x_min) * i as f64 / (self.nx - 1) as f64
    }

    pub fn y(&self, j: usize) -> f64 {
        self.y_min + (self.y_max - self.y_min) * j as f64 / (self.ny - 1) as f64
    }
}

/// `xmin,xmax,ymin,ymax,nx,ny`
impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::InvalidGrid(format!(
                "expected 6 comma-separated values, got `{s}`"
            )));
        }
        let f = |t: &str| {
            t.parse::<f64>()
                .map_err(|_| Error::InvalidGrid(format!("bad bound `{t}`")))
        };
        let n = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidGrid(format!("bad resolution `{t}`")))
        };
        GridSpec::new(
            f(parts[0])?,
            f(parts[1])?,
            f(parts[2])?,
            f(parts[3])?,
            n(parts[4])?,
            n(parts[5])?,
        )
    }
}
