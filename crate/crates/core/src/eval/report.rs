use std::fmt::Write as _;

use crate::datasets::Dataset;
use crate::error::{Error, Result};
use crate::model::{Category, FeatureVector, Label, RreModel};

/// Misclassification counts for one row of an accuracy table.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub train_miss: usize,
    pub train_total: usize,
    pub test_miss: usize,
    pub test_total: usize,
}

impl Counts {
    /// Test correct over test total; 1.0 when there is no test data.
    pub fn accuracy_excluding_training(&self) -> f64 {
        ratio(self.test_total - self.test_miss, self.test_total)
    }

    pub fn accuracy_including_training(&self) -> f64 {
        let total = self.train_total + self.test_total;
        ratio(total - self.train_miss - self.test_miss, total)
    }

    fn add(self, o: Counts) -> Counts {
        Counts {
            train_miss: self.train_miss + o.train_miss,
            train_total: self.train_total + o.train_total,
            test_miss: self.test_miss + o.test_miss,
            test_total: self.test_total + o.test_total,
        }
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        1.0
    } else {
        num as f64 / den as f64
    }
}

/// A misclassified (or rejected) point.
#[derive(Debug, Clone, PartialEq)]
pub struct Miss {
    pub point: FeatureVector,
    pub truth: Category,
    pub predicted: Label,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub one: Counts,
    pub two: Counts,
    pub train_misses: Vec<Miss>,
    pub test_misses: Vec<Miss>,
}

impl EvalReport {
    pub fn category(&self, c: Category) -> Counts {
        match c {
            Category::One => self.one,
            Category::Two => self.two,
        }
    }

    pub fn combined(&self) -> Counts {
        self.one.add(self.two)
    }

    /// `("one", ..)`, `("two", ..)`, `("both", ..)`.
    pub fn rows(&self) -> [(&'static str, Counts); 3] {
        [
            ("one", self.one),
            ("two", self.two),
            ("both", self.combined()),
        ]
    }

    pub fn to_table(&self) -> String {
        let header = [
            "category",
            "train miss",
            "test miss",
            "acc excl",
            "acc incl",
        ];
        let body: Vec<[String; 5]> = self
            .rows()
            .iter()
            .map(|(name, c)| {
                [
                    name.to_string(),
                    format!("{}/{}", c.train_miss, c.train_total),
                    format!("{}/{}", c.test_miss, c.test_total),
                    format_percent(c.accuracy_excluding_training()),
                    format_percent(c.accuracy_including_training()),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &body {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut s = String::new();
        let mut line = |cells: &[&str]| {
            let parts: Vec<String> = cells
                .iter()
                .zip(widths)
                .enumerate()
                .map(|(i, (c, w))| {
                    if i == 0 {
                        format!("{c:<w$}")
                    } else {
                        format!("{c:>w$}")
                    }
                })
                .collect();
            writeln!(s, "{}", parts.join("  ")).unwrap();
        };
        line(&header);
        for row in &body {
            line(&row.each_ref().map(String::as_str));
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from(
            "category,train_miss,train_total,test_miss,test_total,acc_excl,acc_incl\n",
        );
        for (name, c) in self.rows() {
            writeln!(
                s,
                "{name},{},{},{},{},{},{}",
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

/// Percentage with two decimals, e.g. `98.33%`.
pub fn format_percent(fraction: f64) -> String {
    format!("{:.2}%", 100.0 * fraction)
}

/// Classifies both datasets with `predict`. Wrong categories and rejections
/// both count as misses.
pub fn evaluate_classifier<F>(predict: F, train: &Dataset, test: &Dataset) -> Result<EvalReport>
where
    F: Fn(&FeatureVector) -> Label,
{
    let dim = train.dimension().or(test.dimension());
    for (p, _) in train.points.iter().chain(&test.points) {
        if Some(p.dim()) != dim {
            return Err(Error::DimensionMismatch {
                expected: dim.unwrap_or(0),
                found: p.dim(),
            });
        }
    }
    let mut counts = [Counts::default(); 2];
    let mut train_misses = Vec::new();
    let mut test_misses = Vec::new();
    for (is_train, data) in [(true, train), (false, test)] {
        for (p, c) in &data.points {
            let predicted = predict(p);
            let k = &mut counts[(c.index() - 1) as usize];
            let missed = !predicted.is(*c);
            if is_train {
                k.train_total += 1;
                k.train_miss += missed as usize;
            } else {
                k.test_total += 1;
                k.test_miss += missed as usize;
            }
            if missed {
                let miss = Miss {
                    point: p.clone(),
                    truth: *c,
                    predicted,
                };
                if is_train {
                    train_misses.push(miss);
                } else {
                    test_misses.push(miss);
                }
            }
        }
    }
    Ok(EvalReport {
        one: counts[0],
        two: counts[1],
        train_misses,
        test_misses,
    })
}

/// Fraction of `dataset` that `predict` labels correctly; 1.0 when empty.
pub fn training_accuracy<F>(predict: F, dataset: &Dataset) -> f64
where
    F: Fn(&FeatureVector) -> Label,
{
    let correct = dataset
        .points
        .iter()
        .filter(|(p, c)| predict(p).is(*c))
        .count();
    ratio(correct, dataset.len())
}

/// Sign-rule predictor for a model; points the model cannot score are
/// rejected.
pub fn rre_predictor(model: &RreModel) -> impl Fn(&FeatureVector) -> Label + '_ {
    move |x| {
        model
            .classify(x)
            .map(|o| o.label)
            .unwrap_or(Label::Rejected)
    }
}
