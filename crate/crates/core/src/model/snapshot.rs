//! Line-oriented text snapshot of a model.
//!
//! ```text
//! rre v1 dim=2 lambda=1 p1=1 p2=1 f=identity
//! 1 1 -1 1
//! 2 1 -1 -1
//! ```
//!
//! Floats are written in shortest round-trip form, so parsing a snapshot
//! reproduces the model bit for bit.

use std::fmt::Write as _;

use super::{build_model, Category, FeatureVector, RreConfig, RreModel, TrainingMultiset};
use crate::error::{Error, Result};

impl RreModel {
    pub fn to_snapshot(&self) -> String {
        let c = self.config();
        let mut out = format!(
            "rre v1 dim={} lambda={} p1={} p2={} f={}\n",
            self.dimension(),
            c.lambda,
            c.p1,
            c.p2,
            c.f
        );
        for category in [Category::One, Category::Two] {
            for e in self.set(category).entries() {
                write!(out, "{} {}", category.index(), e.multiplicity).unwrap();
                for x in e.point.coords() {
                    write!(out, " {x}").unwrap();
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn from_snapshot(text: &str) -> Result<RreModel> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header"))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("rre") || fields.next() != Some("v1") {
            return Err(Error::parse(1, "expected `rre v1` header"));
        }
        let mut dim = None;
        let mut config = RreConfig::default();
        for field in fields {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::parse(1, format!("bad header field `{field}`")))?;
            let num = || {
                value
                    .parse::<f64>()
                    .map_err(|_| Error::parse(1, format!("bad value for {key}")))
            };
            match key {
                "dim" => {
                    dim = Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| Error::parse(1, "bad dim"))?,
                    )
                }
                "lambda" => config.lambda = num()?,
                "p1" => config.p1 = num()?,
                "p2" => config.p2 = num()?,
                "f" => config.f = value.parse()?,
                _ => return Err(Error::parse(1, format!("unknown header field `{key}`"))),
            }
        }
        let dim = dim.ok_or_else(|| Error::parse(1, "missing dim"))?;

        let mut t1 = TrainingMultiset::new();
        let mut t2 = TrainingMultiset::new();
        for (i, line) in lines {
            let lineno = i + 1;
            let mut tok = line.split_whitespace();
            let category = tok
                .next()
                .and_then(|t| t.parse::<u8>().ok())
                .and_then(Category::from_index)
                .ok_or_else(|| Error::parse(lineno, "category must be 1 or 2"))?;
            let m = tok
                .next()
                .and_then(|t| t.parse::<u32>().ok())
                .filter(|&m| m >= 1)
                .ok_or_else(|| Error::parse(lineno, "multiplicity must be a positive integer"))?;
            let coords = tok
                .map(|t| t.parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::parse(lineno, "bad coordinate"))?;
            if coords.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: coords.len(),
                });
            }
            let point = FeatureVector::new(coords)?;
            match category {
                Category::One => t1.push(point, m),
                Category::Two => t2.push(point, m),
            }
        }
        build_model(t1, t2, config)
    }
}
