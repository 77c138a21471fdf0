//! Reverse ripple effect (R.R.E) classification laboratory.
//!
//! The R.R.E classifier superimposes a Gaussian bump on every training point
//! and decides by the sign of the difference between the two category sums:
//!
//! ```text
//! G(x) = p2 * sum_i m_i exp(-lambda f(n1) |x - x_i|^2) - p1 * sum_j m_j exp(-lambda f(n2) |x - x_j|^2)
//! ```
//!
//! The bump width shrinks as the category grows (`f(n)` increasing), so the
//! model needs no iterative training; all of the work happens at
//! classification time.
//!
//! Alongside the classifier the crate carries the comparison baselines
//! (batch perceptron criterion, support-vector linear solve, Fisher linear
//! discriminant and a 2-2-1 tanh network), the embedded iris-derived
//! datasets, evaluation tables and decision-surface export.
//!
//! ```
//! use rre::{build_model, FeatureVector, Label, RreConfig, TrainingMultiset};
//!
//! let t1 = TrainingMultiset::from_points([[-1.0, 1.0], [1.0, -1.0]]);
//! let t2 = TrainingMultiset::from_points([[-1.0, -1.0], [1.0, 1.0]]);
//! let model = build_model(t1, t2, RreConfig::default()).unwrap();
//!
//! let out = model.classify(&FeatureVector::from([-1.0, 1.0])).unwrap();
//! assert_eq!(out.label, Label::Category1);
//! assert!((out.score - 0.9993).abs() < 1e-4);
//! ```

pub mod baselines;
pub mod cli;
pub mod datasets;
mod error;
pub mod eval;
pub mod model;

pub use datasets::{Dataset, GridSpec};
pub use error::{Error, Result};
pub use model::{
    build_model, Category, DecisionOutcome, Entry, FeatureVector, Label, RreConfig, RreModel,
    TrainingMultiset, VarianceFunction,
};
