use std::fmt::{self, Write as _};

use rayon::prelude::*;

use super::report::{evaluate_classifier, format_percent, rre_predictor, EvalReport};
use crate::baselines::{train_perceptron, PerceptronConfig};
use crate::datasets::{split_leading_fraction, to_augmented_rows, Dataset, SplitSpec};
use crate::error::Result;
use crate::model::RreConfig;

/// Training fractions 0.1 through 0.9.
pub const TABLE_FRACTIONS: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    /// Identity variance function, `lambda = 1`, unit costs.
    Rre,
    /// Batch perceptron criterion with the default configuration.
    Perceptron,
}

impl Algorithm {
    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::Rre => "R.R.E",
            Algorithm::Perceptron => "P.C.A",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub ratio: String,
    pub fraction: f64,
    pub algorithm: Algorithm,
    pub report: EvalReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

/// `"4:6"` for 0.4; fractions off the tenths grid fall back to percentages.
pub fn ratio_label(fraction: f64) -> String {
    let tenths = fraction * 10.0;
    if (tenths - tenths.round()).abs() < 1e-9 {
        let k = tenths.round() as i64;
        format!("{}:{}", k, 10 - k)
    } else {
        let pct = fraction * 100.0;
        format!("{}:{}", pct, 100.0 - pct)
    }
}

/// Trains each algorithm on the leading split for each fraction and evaluates
/// on the remainder. Rows are ordered by fraction, then algorithm.
pub fn sweep_splits(
    dataset: &Dataset,
    algorithms: &[Algorithm],
    fractions: &[f64],
) -> Result<SweepReport> {
    let mut algos = algorithms.to_vec();
    algos.sort();
    algos.dedup();
    let mut fractions = fractions.to_vec();
    fractions.sort_by(f64::total_cmp);
    let splits = fractions
        .iter()
        .map(|&f| Ok((f, split_leading_fraction(dataset, &SplitSpec::new(f)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<_> = splits
        .iter()
        .flat_map(|(f, s)| algos.iter().map(move |a| (*f, s, *a)))
        .collect();
    let rows = jobs
        .into_par_iter()
        .map(|(fraction, (train, test), algorithm)| {
            let report = match algorithm {
                Algorithm::Rre => {
                    let model = train.rre_model(RreConfig::default())?;
                    evaluate_classifier(rre_predictor(&model), train, test)?
                }
                Algorithm::Perceptron => {
                    let fit =
                        train_perceptron(&to_augmented_rows(train), &PerceptronConfig::default())?;
                    evaluate_classifier(|x| fit.predict(x), train, test)?
                }
            };
            Ok(SweepRow {
                ratio: ratio_label(fraction),
                fraction,
                algorithm,
                report,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { rows })
}

impl SweepReport {
    pub fn row(&self, fraction: f64, algorithm: Algorithm) -> Option<&SweepRow> {
        self.rows
            .iter()
            .find(|r| r.algorithm == algorithm && (r.fraction - fraction).abs() < 1e-12)
    }

    pub fn to_table(&self) -> String {
        let mut s = format!(
            "{:<6}  {:<6}  {:>10}  {:>9}  {:>8}  {:>8}\n",
            "ratio", "algo", "train miss", "test miss", "acc excl", "acc incl"
        );
        for r in &self.rows {
            let c = r.report.combined();
            writeln!(
                s,
                "{:<6}  {:<6}  {:>10}  {:>9}  {:>8}  {:>8}",
                r.ratio,
                r.algorithm.tag(),
                format!("{}/{}", c.train_miss, c.train_total),
                format!("{}/{}", c.test_miss, c.test_total),
                format_percent(c.accuracy_excluding_training()),
                format_percent(c.accuracy_including_training()),
            )
            .unwrap();
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from(
            "ratio,algorithm,train_miss,train_total,test_miss,test_total,acc_excl,acc_incl\n",
        );
        for r in &self.rows {
            let c = r.report.combined();
            writeln!(
                s,
                "{},{},{},{},{},{},{},{}",
                r.ratio,
                r.algorithm.tag(),
                c.train_miss,
                c.train_total,
                c.test_miss,
                c.test_total,
                c.accuracy_excluding_training(),
                c.accuracy_including_training()
            )
            .unwrap();
        }
        s
    }
}
