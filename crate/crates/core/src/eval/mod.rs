//! Accuracy tables, the split sweep and decision-surface export.

mod report;
mod surface;
mod sweep;

pub use report::{
    evaluate_classifier, format_percent, rre_predictor, training_accuracy, Counts, EvalReport, Miss,
};
pub use surface::{
    export_surface, has_zero_crossing, parse_surface, sign_regions, tabulate, Surface,
};
pub use sweep::{ratio_label, sweep_splits, Algorithm, SweepReport, SweepRow, TABLE_FRACTIONS};
