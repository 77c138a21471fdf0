//! The R.R.E discriminant and its training-time procedures.
//!
//! A [`RreModel`] is an immutable value: two training multisets plus a
//! [`RreConfig`]. Every operation that "trains" (reinforcement, noise
//! enforcement, unsupervised growth, filtering) returns a new model.

mod grid;
mod snapshot;
mod training;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use grid::GridValues;
pub use training::{EntryId, FilterOutcome, ReinforceOutcome};

/// One of the two categories (`w1`, `w2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    One,
    Two,
}

impl Category {
    /// Class sign used by augmented rows: `+1` for category one, `-1` for two.
    pub fn sign(self) -> f64 {
        match self {
            Category::One => 1.0,
            Category::Two => -1.0,
        }
    }

    pub fn opposite(self) -> Category {
        match self {
            Category::One => Category::Two,
            Category::Two => Category::One,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Category::One => 1,
            Category::Two => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Category> {
        match i {
            1 => Some(Category::One),
            2 => Some(Category::Two),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Category::One => "one",
            Category::Two => "two",
        }
    }
}

/// A point in feature space. Coordinates are always finite.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector(Vec<f64>);

impl FeatureVector {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(FeatureVector(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn squared_distance(&self, other: &FeatureVector) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }
}

/// Panics on non-finite input; meant for literals.
impl<const N: usize> From<[f64; N]> for FeatureVector {
    fn from(coords: [f64; N]) -> Self {
        FeatureVector::new(coords.to_vec()).expect("literal feature vector must be finite")
    }
}

impl fmt::Display for FeatureVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub point: FeatureVector,
    pub multiplicity: u32,
}

/// Training points of one category with integer multiplicities.
///
/// An entry `(x, m)` counts as `m` training points, both in the discriminant
/// sum and in the category size fed to the variance function.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TrainingMultiset {
    entries: Vec<Entry>,
}

impl TrainingMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_points<P: Into<FeatureVector>>(points: impl IntoIterator<Item = P>) -> Self {
        let mut set = Self::new();
        for p in points {
            set.push(p.into(), 1);
        }
        set
    }

    /// Appends a new entry. A zero multiplicity is ignored.
    pub fn push(&mut self, point: FeatureVector, multiplicity: u32) {
        if multiplicity > 0 {
            self.entries.push(Entry {
                point,
                multiplicity,
            });
        }
    }

    /// Adds one copy of `point`, merging into the first entry with equal
    /// coordinates if there is one.
    pub fn add_one(&mut self, point: FeatureVector) {
        match self.entries.iter_mut().find(|e| e.point == point) {
            Some(e) => e.multiplicity += 1,
            None => self.push(point, 1),
        }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut Vec<Entry> {
        &mut self.entries
    }

    /// Total count `n = sum of multiplicities`.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|e| u64::from(e.multiplicity)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Multiplicity of the entries equal to `point`, summed.
    pub fn multiplicity_of(&self, point: &FeatureVector) -> u64 {
        self.entries
            .iter()
            .filter(|e| &e.point == point)
            .map(|e| u64::from(e.multiplicity))
            .sum()
    }
}

/// Variance reduction function `f(n)`; scales the exponent so bumps narrow
/// as a category accumulates evidence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VarianceFunction {
    /// `f(n) = n`
    Identity,
    /// `f(n) = c`
    Constant(f64),
    /// `f(n) = a * n^b`
    Power { a: f64, b: f64 },
}

impl VarianceFunction {
    pub fn eval(&self, n: u64) -> f64 {
        match *self {
            VarianceFunction::Identity => n as f64,
            VarianceFunction::Constant(c) => c,
            VarianceFunction::Power { a, b } => a * (n as f64).powf(b),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            VarianceFunction::Identity => true,
            VarianceFunction::Constant(c) => c.is_finite() && c > 0.0,
            VarianceFunction::Power { a, b } => {
                a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidConfig(format!(
                "variance function {self} must be positive"
            )))
        }
    }
}

impl fmt::Display for VarianceFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarianceFunction::Identity => write!(f, "identity"),
            VarianceFunction::Constant(c) => write!(f, "const:{c}"),
            VarianceFunction::Power { a, b } => write!(f, "pow:{a}:{b}"),
        }
    }
}

impl FromStr for VarianceFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidConfig(format!("bad variance function `{s}`"));
        let num = |t: &str| t.parse::<f64>().map_err(|_| bad());
        let parts: Vec<&str> = s.split(':').collect();
        let f = match parts.as_slice() {
            ["identity"] => VarianceFunction::Identity,
            ["const", c] => VarianceFunction::Constant(num(c)?),
            ["pow", a, b] => VarianceFunction::Power {
                a: num(a)?,
                b: num(b)?,
            },
            _ => return Err(bad()),
        };
        f.validate()?;
        Ok(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RreConfig {
    /// Sensitivity; multiplies every exponent.
    pub lambda: f64,
    /// Cost of choosing category one. Weights the category-two sum.
    pub p1: f64,
    /// Cost of choosing category two. Weights the category-one sum.
    pub p2: f64,
    pub f: VarianceFunction,
}

impl Default for RreConfig {
    fn default() -> Self {
        RreConfig {
            lambda: 1.0,
            p1: 1.0,
            p2: 1.0,
            f: VarianceFunction::Identity,
        }
    }
}

impl RreConfig {
    pub fn with_lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_costs(mut self, p1: f64, p2: f64) -> Self {
        self.p1 = p1;
        self.p2 = p2;
        self
    }

    pub fn with_f(mut self, f: VarianceFunction) -> Self {
        self.f = f;
        self
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("lambda", self.lambda), ("p1", self.p1), ("p2", self.p2)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        self.f.validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Category1,
    Category2,
    Rejected,
}

impl Label {
    pub fn category(self) -> Option<Category> {
        match self {
            Label::Category1 => Some(Category::One),
            Label::Category2 => Some(Category::Two),
            Label::Rejected => None,
        }
    }

    pub fn is(self, category: Category) -> bool {
        self.category() == Some(category)
    }

    /// Sign rule: positive is category one, negative is two, zero rejects.
    pub fn from_score(score: f64) -> Label {
        if score > 0.0 {
            Label::Category1
        } else if score < 0.0 {
            Label::Category2
        } else {
            Label::Rejected
        }
    }
}

impl From<Category> for Label {
    fn from(c: Category) -> Self {
        match c {
            Category::One => Label::Category1,
            Category::Two => Label::Category2,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Label::Category1 => "one",
            Label::Category2 => "two",
            Label::Rejected => "rejected",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecisionOutcome {
    pub score: f64,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RreModel {
    t1: TrainingMultiset,
    t2: TrainingMultiset,
    config: RreConfig,
    dimension: usize,
}

/// Validates the inputs and assembles the discriminant. No numeric work
/// happens here.
pub fn build_model(
    t1: TrainingMultiset,
    t2: TrainingMultiset,
    config: RreConfig,
) -> Result<RreModel> {
    config.validate()?;
    let first = t1
        .entries()
        .first()
        .ok_or(Error::EmptyCategory(1))?
        .point
        .dim();
    if t2.is_empty() {
        return Err(Error::EmptyCategory(2));
    }
    for e in t1.entries().iter().chain(t2.entries()) {
        if e.point.dim() != first {
            return Err(Error::DimensionMismatch {
                expected: first,
                found: e.point.dim(),
            });
        }
    }
    Ok(RreModel {
        t1,
        t2,
        config,
        dimension: first,
    })
}

impl RreModel {
    pub fn t1(&self) -> &TrainingMultiset {
        &self.t1
    }

    pub fn t2(&self) -> &TrainingMultiset {
        &self.t2
    }

    pub fn set(&self, category: Category) -> &TrainingMultiset {
        match category {
            Category::One => &self.t1,
            Category::Two => &self.t2,
        }
    }

    pub fn config(&self) -> &RreConfig {
        &self.config
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn n1(&self) -> u64 {
        self.t1.total()
    }

    pub fn n2(&self) -> u64 {
        self.t2.total()
    }

    /// Returns the same training sets under a different configuration.
    pub fn with_config(&self, config: RreConfig) -> Result<RreModel> {
        build_model(self.t1.clone(), self.t2.clone(), config)
    }

    pub(crate) fn into_parts(self) -> (TrainingMultiset, TrainingMultiset, RreConfig) {
        (self.t1, self.t2, self.config)
    }

    pub(crate) fn check_dim(&self, x: &FeatureVector) -> Result<()> {
        if x.dim() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: x.dim(),
            });
        }
        Ok(())
    }

    /// Unweighted category sums `(S1(x), S2(x))`, so that
    /// `G(x) = p2 * S1(x) - p1 * S2(x)`.
    pub fn category_sums(&self, x: &FeatureVector) -> Result<(f64, f64)> {
        self.check_dim(x)?;
        let lambda = self.config.lambda;
        let k1 = lambda * self.config.f.eval(self.n1());
        let k2 = lambda * self.config.f.eval(self.n2());
        Ok((kernel_sum(&self.t1, k1, x), kernel_sum(&self.t2, k2, x)))
    }

    /// The discriminant `G(x)`.
    pub fn discriminant(&self, x: &FeatureVector) -> Result<f64> {
        let (s1, s2) = self.category_sums(x)?;
        Ok(self.config.p2 * s1 - self.config.p1 * s2)
    }

    /// Upper bound on `|G|`: `p2 * n1 + p1 * n2`.
    pub fn score_bound(&self) -> f64 {
        self.config.p2 * self.n1() as f64 + self.config.p1 * self.n2() as f64
    }

    pub fn classify(&self, x: &FeatureVector) -> Result<DecisionOutcome> {
        let score = self.discriminant(x)?;
        Ok(DecisionOutcome {
            score,
            label: Label::from_score(score),
        })
    }

    /// Like [`classify`](Self::classify) but rejects when `|G(x)| < tau`.
    pub fn classify_with_reject(&self, x: &FeatureVector, tau: f64) -> Result<DecisionOutcome> {
        if tau.is_nan() || tau < 0.0 {
            return Err(Error::NegativeThreshold(tau));
        }
        let mut out = self.classify(x)?;
        if out.score.abs() < tau {
            out.label = Label::Rejected;
        }
        Ok(out)
    }

    /// Distinct training points with their true category, in input order
    /// (category one first).
    pub fn training_points(&self) -> impl Iterator<Item = (&FeatureVector, Category)> {
        self.t1
            .entries()
            .iter()
            .map(|e| (&e.point, Category::One))
            .chain(self.t2.entries().iter().map(|e| (&e.point, Category::Two)))
    }

    /// Training entries whose own classification disagrees with their set.
    pub fn training_misses(&self) -> Vec<EntryId> {
        let mut out = Vec::new();
        for category in [Category::One, Category::Two] {
            for (index, e) in self.set(category).entries().iter().enumerate() {
                let label = Label::from_score(self.discriminant(&e.point).expect("same dimension"));
                if !label.is(category) {
                    out.push(EntryId { category, index });
                }
            }
        }
        out
    }
}

fn kernel_sum(set: &TrainingMultiset, k: f64, x: &FeatureVector) -> f64 {
    set.entries()
        .iter()
        .map(|e| f64::from(e.multiplicity) * (-k * x.squared_distance(&e.point)).exp())
        .sum()
}
