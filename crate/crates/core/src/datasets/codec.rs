use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{Category, FeatureVector};

use super::Dataset;

/// Sign-normalized augmented row `[y, y*x1, ..., y*xd]` with `y = +1` for
/// category one and `-1` for category two.
#[derive(Debug, Clone, PartialEq)]
pub struct AugmentedRow(Vec<f64>);

impl AugmentedRow {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        match values.first() {
            Some(&y) if y == 1.0 || y == -1.0 => Ok(AugmentedRow(values)),
            Some(y) => Err(Error::MalformedRow(format!(
                "leading component {y} is not +1 or -1"
            ))),
            None => Err(Error::MalformedRow("empty row".into())),
        }
    }

    pub fn from_point(x: &FeatureVector, category: Category) -> Self {
        let y = category.sign();
        let mut v = Vec::with_capacity(x.dim() + 1);
        v.push(y);
        v.extend(x.coords().iter().map(|c| y * c));
        AugmentedRow(v)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn sign(&self) -> f64 {
        self.0[0]
    }

    pub fn category(&self) -> Category {
        if self.sign() > 0.0 {
            Category::One
        } else {
            Category::Two
        }
    }

    pub fn dot(&self, a: &[f64]) -> f64 {
        self.0.iter().zip(a).map(|(y, w)| y * w).sum()
    }

    /// Listing layout: tab-separated, 4 decimals.
    pub fn to_line(&self) -> String {
        let mut s = String::new();
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                s.push('\t');
            }
            write!(s, "{v:.4}").unwrap();
        }
        s
    }
}

pub fn from_augmented_rows(rows: &[AugmentedRow]) -> Result<Vec<(FeatureVector, Category)>> {
    rows.iter()
        .map(|r| {
            let y = r.sign();
            let x = FeatureVector::new(r.values()[1..].iter().map(|v| y * v).collect())?;
            Ok((x, r.category()))
        })
        .collect()
}

pub fn to_augmented_rows(dataset: &Dataset) -> Vec<AugmentedRow> {
    dataset
        .points
        .iter()
        .map(|(x, c)| AugmentedRow::from_point(x, *c))
        .collect()
}

/// Whitespace-separated augmented rows, one per line.
pub fn parse_augmented_text(text: &str) -> Result<Vec<AugmentedRow>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let values = l
                .split_whitespace()
                .map(str::parse::<f64>)
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::parse(i + 1, format!("bad number in `{l}`")))?;
            if values.len() < 2 {
                return Err(Error::parse(
                    i + 1,
                    "row needs a sign and at least one feature",
                ));
            }
            AugmentedRow::new(values)
        })
        .collect()
}

pub fn format_augmented_text(rows: &[AugmentedRow]) -> String {
    rows.iter().map(|r| r.to_line() + "\n").collect()
}

/// Raw CSV `x1,...,xd,label` with label 1 or 2. A non-numeric first line is
/// treated as a header.
pub fn parse_csv(text: &str) -> Result<Vec<(FeatureVector, Category)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if i == 0 && fields[0].parse::<f64>().is_err() {
            continue;
        }
        if fields.len() < 2 {
            return Err(Error::parse(i + 1, "expected features followed by a label"));
        }
        let (label, features) = fields.split_last().unwrap();
        let category = label
            .parse::<u8>()
            .ok()
            .and_then(Category::from_index)
            .ok_or_else(|| Error::parse(i + 1, format!("label `{label}` must be 1 or 2")))?;
        let coords = features
            .iter()
            .map(|t| t.parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::parse(i + 1, "bad feature value"))?;
        out.push((FeatureVector::new(coords)?, category));
    }
    Ok(out)
}

pub fn format_csv(dataset: &Dataset) -> String {
    let d = dataset.dimension().unwrap_or(2);
    let mut s: String = (1..=d).map(|k| format!("x{k},")).collect();
    s.push_str("label\n");
    for (p, c) in &dataset.points {
        for v in p.coords() {
            write!(s, "{v},").unwrap();
        }
        writeln!(s, "{}", c.index()).unwrap();
    }
    s
}
