//! Published tables recomputed and compared cell by cell.
//!
//! Misclassification counts, accuracies and sign patterns are checked.
//! Quantities that depend on unstated training details (perceptron weights
//! and iteration counts, the training count of the non-converging 90%
//! perceptron run, network epochs and final error) are printed as `INFO`
//! lines and never fail a target.

use std::fmt::Display;
use std::io::Write;

use clap::ValueEnum;

use crate::baselines::{
    nn_forward, svm_support_solve, train_perceptron, train_xor_nn, NnConfig, PerceptronConfig,
    PerceptronResult, XOR_INPUTS, XOR_TARGETS,
};
use crate::datasets::{
    load_builtin, split_leading_fraction, to_augmented_rows, Dataset, SplitSpec,
    IRIS_SETOSA_VERSICOLOR, IRIS_VERSICOLOR_VIRGINICA_V2, SUPPORT1, XOR,
};
use crate::error::Result;
use crate::eval::{
    evaluate_classifier, format_percent, rre_predictor, sweep_splits, training_accuracy, Algorithm,
    Counts, EvalReport, TABLE_FRACTIONS,
};
use crate::model::{Category, FeatureVector, RreConfig, VarianceFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "table3.2a")]
    Table3_2a,
    #[value(name = "table3.2b")]
    Table3_2b,
    #[value(name = "table3.2c")]
    Table3_2c,
    #[value(name = "table3.3a")]
    Table3_3a,
    #[value(name = "table3.3b")]
    Table3_3b,
    #[value(name = "table3.3c")]
    Table3_3c,
    #[value(name = "table3.7")]
    Table3_7,
    #[value(name = "table3.7.2")]
    Table3_7_2,
    #[value(name = "svm4.3")]
    Svm4_3,
    #[value(name = "table5.1")]
    Table5_1,
    #[value(name = "table5.2")]
    Table5_2,
    #[value(name = "table5.3")]
    Table5_3,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Table3_2a => "table3.2a",
            Target::Table3_2b => "table3.2b",
            Target::Table3_2c => "table3.2c",
            Target::Table3_3a => "table3.3a",
            Target::Table3_3b => "table3.3b",
            Target::Table3_3c => "table3.3c",
            Target::Table3_7 => "table3.7",
            Target::Table3_7_2 => "table3.7.2",
            Target::Svm4_3 => "svm4.3",
            Target::Table5_1 => "table5.1",
            Target::Table5_2 => "table5.2",
            Target::Table5_3 => "table5.3",
        }
    }

    pub fn all() -> [Target; 12] {
        [
            Target::Table3_2a,
            Target::Table3_2b,
            Target::Table3_2c,
            Target::Table3_3a,
            Target::Table3_3b,
            Target::Table3_3c,
            Target::Table3_7,
            Target::Table3_7_2,
            Target::Svm4_3,
            Target::Table5_1,
            Target::Table5_2,
            Target::Table5_3,
        ]
    }
}

struct Checker<'a> {
    out: &'a mut dyn Write,
    target: &'static str,
    failed: usize,
}

impl Checker<'_> {
    fn check(
        &mut self,
        cell: &str,
        expected: impl Display,
        got: impl Display,
        ok: bool,
    ) -> Result<()> {
        if !ok {
            self.failed += 1;
        }
        let tag = if ok { "PASS" } else { "FAIL" };
        writeln!(
            self.out,
            "{tag} {} {cell}: expected {expected}, got {got}",
            self.target
        )?;
        Ok(())
    }

    fn info(&mut self, cell: &str, expected: impl Display, got: impl Display) -> Result<()> {
        writeln!(
            self.out,
            "INFO {} {cell}: published {expected}, computed {got}",
            self.target
        )?;
        Ok(())
    }
}

/// One published row: `(name, train miss/total, test miss/total, excl %, incl %)`.
type Row = (&'static str, [usize; 4], f64, f64);

/// Published percentages carry at most two decimals.
fn pct_matches(fraction: f64, published: f64) -> bool {
    (100.0 * fraction - published).abs() < 0.006
}

fn check_counts(
    ck: &mut Checker,
    prefix: &str,
    row: &Row,
    got: Counts,
    train_is_info: bool,
) -> Result<()> {
    let (name, want, excl, incl) = *row;
    let cell = |what: &str| format!("{prefix}{name} {what}");
    let train_want = format!("{}/{}", want[0], want[1]);
    let train_got = format!("{}/{}", got.train_miss, got.train_total);
    let incl_got = got.accuracy_including_training();
    if train_is_info {
        ck.info(&cell("train miss"), train_want, train_got)?;
        ck.info(
            &cell("acc incl"),
            format!("{incl}%"),
            format_percent(incl_got),
        )?;
    } else {
        ck.check(
            &cell("train miss"),
            &train_want,
            &train_got,
            train_want == train_got,
        )?;
        ck.check(
            &cell("acc incl"),
            format!("{incl}%"),
            format_percent(incl_got),
            pct_matches(incl_got, incl),
        )?;
    }
    let test_want = format!("{}/{}", want[2], want[3]);
    let test_got = format!("{}/{}", got.test_miss, got.test_total);
    ck.check(
        &cell("test miss"),
        &test_want,
        &test_got,
        test_want == test_got,
    )?;
    let excl_got = got.accuracy_excluding_training();
    ck.check(
        &cell("acc excl"),
        format!("{excl}%"),
        format_percent(excl_got),
        pct_matches(excl_got, excl),
    )
}

fn check_rows(
    ck: &mut Checker,
    report: &EvalReport,
    rows: &[Row; 3],
    train_is_info: bool,
) -> Result<()> {
    for (row, (_, got)) in rows.iter().zip(report.rows()) {
        check_counts(ck, "", row, got, train_is_info)?;
    }
    Ok(())
}

fn b1_split(fraction: f64) -> Result<(Dataset, Dataset)> {
    split_leading_fraction(
        &load_builtin(IRIS_SETOSA_VERSICOLOR)?,
        &SplitSpec::new(fraction)?,
    )
}

fn rre_table(
    ck: &mut Checker,
    fraction: f64,
    f: f64,
    rows: &[Row; 3],
    outlier: bool,
) -> Result<()> {
    let (train, test) = b1_split(fraction)?;
    let model = train.rre_model(RreConfig::default().with_f(VarianceFunction::Constant(f)))?;
    let report = evaluate_classifier(rre_predictor(&model), &train, &test)?;
    check_rows(ck, &report, rows, false)?;
    if outlier {
        let misses: Vec<String> = report
            .test_misses
            .iter()
            .map(|m| m.point.to_string())
            .collect();
        let got = misses.join(" ");
        ck.check(
            "misclassified point",
            "(4.5, 2.3)",
            &got,
            got == "(4.5, 2.3)",
        )?;
    }
    Ok(())
}

fn perceptron_table(
    ck: &mut Checker,
    fraction: f64,
    rows: &[Row; 3],
    a_published: [f64; 3],
    iterations_published: u32,
    converges: bool,
) -> Result<()> {
    let (train, test) = b1_split(fraction)?;
    let fit = train_perceptron(&to_augmented_rows(&train), &PerceptronConfig::default())?;
    ck.check(
        "converged",
        converges,
        fit.converged,
        fit.converged == converges,
    )?;
    let report = evaluate_classifier(|x| fit.predict(x), &train, &test)?;
    // A non-converged run stops wherever the 300th update leaves it, so its
    // training count depends on update details the source does not give.
    check_rows(ck, &report, rows, !converges)?;
    perceptron_info(ck, &fit, a_published, iterations_published)
}

fn perceptron_info(
    ck: &mut Checker,
    fit: &PerceptronResult,
    a: [f64; 3],
    iterations: u32,
) -> Result<()> {
    let fmt = |v: &[f64]| {
        let parts: Vec<String> = v.iter().map(|x| format!("{x:.4}")).collect();
        format!("[{}]", parts.join(", "))
    };
    ck.info("a_final", fmt(&a), fmt(&fit.a_final))?;
    ck.info("iterations", iterations, fit.iterations)
}

/// Combined rows per ratio 1:9 .. 9:1, R.R.E then P.C.A.
const TABLE_3_7: [[Row; 2]; 9] = [
    [
        ("both", [0, 10, 5, 90], 94.44, 95.0),
        ("both", [0, 10, 1, 90], 98.89, 99.0),
    ],
    [
        ("both", [0, 20, 1, 80], 98.75, 99.0),
        ("both", [0, 20, 1, 80], 98.75, 99.0),
    ],
    [
        ("both", [0, 30, 1, 70], 98.57, 99.0),
        ("both", [0, 30, 1, 70], 98.57, 99.0),
    ],
    [
        ("both", [0, 40, 1, 60], 98.33, 99.0),
        ("both", [0, 40, 2, 60], 96.67, 98.0),
    ],
    [
        ("both", [0, 50, 1, 50], 98.0, 99.0),
        ("both", [0, 50, 2, 50], 96.0, 98.0),
    ],
    [
        ("both", [0, 60, 1, 40], 97.5, 99.0),
        ("both", [0, 60, 1, 40], 97.5, 99.0),
    ],
    [
        ("both", [0, 70, 1, 30], 96.67, 99.0),
        ("both", [0, 70, 1, 30], 96.67, 99.0),
    ],
    [
        ("both", [0, 80, 1, 20], 95.0, 99.0),
        ("both", [0, 80, 1, 20], 95.0, 99.0),
    ],
    [
        ("both", [0, 90, 0, 10], 100.0, 100.0),
        ("both", [1, 90, 0, 10], 100.0, 99.0),
    ],
];

const PUBLISHED_NN_OUTPUTS: [f64; 4] = [-0.9887, 1.0, 1.0, -0.9937];
const PUBLISHED_HIDDEN: [[f64; 2]; 3] = [[1.2031, 3.9577], [2.6005, 4.5555], [-2.5788, 5.2168]];
const PUBLISHED_OUT: [f64; 3] = [-6.4841, 5.8289, -3.2555];

fn corner(x: [f64; 2]) -> String {
    format!("({}, {})", x[0], x[1])
}

fn rre_xor(ck: &mut Checker, prefix: &str) -> Result<()> {
    let model = load_builtin(XOR)?.rre_model(RreConfig::default())?;
    for (x, t) in XOR_INPUTS.iter().zip(XOR_TARGETS) {
        let g = model.discriminant(&FeatureVector::from(*x))?;
        let want = 0.9993 * t;
        ck.check(
            &format!("{prefix}G{}", corner(*x)),
            format!("{want:.4}"),
            format!("{g:.4}"),
            (g - want).abs() < 1e-4,
        )?;
    }
    Ok(())
}

fn nn_published_forward(ck: &mut Checker, prefix: &str) -> Result<()> {
    for (x, want) in XOR_INPUTS.iter().zip(PUBLISHED_NN_OUTPUTS) {
        let z = nn_forward(&PUBLISHED_HIDDEN, &PUBLISHED_OUT, &FeatureVector::from(*x))?;
        ck.check(
            &format!("{prefix}z{} at published weights", corner(*x)),
            format!("{want:.4}"),
            format!("{z:.4}"),
            (z - want).abs() < 0.01,
        )?;
    }
    Ok(())
}

fn nn_trained(ck: &mut Checker, prefix: &str) -> Result<()> {
    let r = train_xor_nn(&NnConfig::default())?;
    ck.check(
        &format!("{prefix}converged"),
        true,
        r.converged,
        r.converged,
    )?;
    for ((x, t), z) in XOR_INPUTS.iter().zip(XOR_TARGETS).zip(r.outputs) {
        ck.check(
            &format!("{prefix}sign of trained z{}", corner(*x)),
            format!("{t:+}"),
            format!("{z:.4}"),
            z * t > 0.0,
        )?;
    }
    ck.info(&format!("{prefix}epochs"), 32, r.epochs)?;
    ck.info(
        &format!("{prefix}final error"),
        0.000432,
        format!("{:.6} ({})", r.final_error, r.convention.name()),
    )
}

/// Runs one target, returning whether every checked cell passed.
pub fn run(target: Target, out: &mut dyn Write) -> Result<bool> {
    let mut ck = Checker {
        out,
        target: target.name(),
        failed: 0,
    };
    match target {
        Target::Table3_2a => rre_table(
            &mut ck,
            0.4,
            20.0,
            &[
                ("one", [0, 20, 1, 30], 96.67, 98.0),
                ("two", [0, 20, 0, 30], 100.0, 100.0),
                ("both", [0, 40, 1, 60], 98.33, 99.0),
            ],
            true,
        )?,
        Target::Table3_2b => rre_table(
            &mut ck,
            0.6,
            30.0,
            &[
                ("one", [0, 30, 1, 20], 95.0, 98.0),
                ("two", [0, 30, 0, 20], 100.0, 100.0),
                ("both", [0, 60, 1, 40], 97.5, 99.0),
            ],
            true,
        )?,
        Target::Table3_2c => rre_table(
            &mut ck,
            0.9,
            45.0,
            &[
                ("one", [0, 45, 0, 5], 100.0, 100.0),
                ("two", [0, 45, 0, 5], 100.0, 100.0),
                ("both", [0, 90, 0, 10], 100.0, 100.0),
            ],
            false,
        )?,
        Target::Table3_3a => perceptron_table(
            &mut ck,
            0.4,
            &[
                ("one", [0, 20, 2, 30], 93.33, 96.0),
                ("two", [0, 20, 0, 30], 100.0, 100.0),
                ("both", [0, 40, 2, 60], 96.67, 98.0),
            ],
            [0.21, -2.586, 4.224],
            42,
            true,
        )?,
        Target::Table3_3b => perceptron_table(
            &mut ck,
            0.6,
            &[
                ("one", [0, 30, 1, 20], 95.0, 98.0),
                ("two", [0, 30, 0, 20], 100.0, 100.0),
                ("both", [0, 60, 1, 40], 97.5, 99.0),
            ],
            [0.51, -3.936, 6.412],
            45,
            true,
        )?,
        Target::Table3_3c => perceptron_table(
            &mut ck,
            0.9,
            &[
                ("one", [1, 45, 0, 5], 100.0, 98.0),
                ("two", [0, 45, 0, 5], 100.0, 100.0),
                ("both", [1, 90, 0, 10], 100.0, 99.0),
            ],
            [1.43, -5.464, 9.223],
            300,
            false,
        )?,
        Target::Table3_7 => {
            let b1 = load_builtin(IRIS_SETOSA_VERSICOLOR)?;
            let sweep = sweep_splits(
                &b1,
                &[Algorithm::Rre, Algorithm::Perceptron],
                &TABLE_FRACTIONS,
            )?;
            for (f, rows) in TABLE_FRACTIONS.iter().zip(TABLE_3_7) {
                for (algo, row) in [(Algorithm::Rre, rows[0]), (Algorithm::Perceptron, rows[1])] {
                    let got = sweep.row(*f, algo).expect("sweep covers every pair");
                    // The 9:1 perceptron run never separates its training set;
                    // where it stops is not pinned down by the source.
                    let train_is_info = algo == Algorithm::Perceptron && row.1[0] > 0;
                    let prefix = format!("{} {} ", got.ratio, algo.tag());
                    check_counts(&mut ck, &prefix, &row, got.report.combined(), train_is_info)?;
                }
            }
        }
        Target::Table3_7_2 => {
            let b2 = load_builtin(IRIS_VERSICOLOR_VIRGINICA_V2)?;
            let model = b2.rre_model(
                RreConfig::default()
                    .with_lambda(3.5)
                    .with_f(VarianceFunction::Constant(50.0)),
            )?;
            let acc = training_accuracy(rre_predictor(&model), &b2);
            ck.check(
                "R.R.E training accuracy",
                "100%",
                format_percent(acc),
                acc == 1.0,
            )?;
            let fit = train_perceptron(
                &to_augmented_rows(&b2),
                &PerceptronConfig::default().with_max_iter(3000),
            )?;
            ck.check("P.C.A converged", false, fit.converged, !fit.converged)?;
            ck.check(
                "P.C.A training accuracy",
                "within [45%, 70%]",
                format_percent(fit.training_accuracy),
                (0.45..=0.70).contains(&fit.training_accuracy),
            )?;
            ck.info(
                "P.C.A training accuracy",
                "56%",
                format_percent(fit.training_accuracy),
            )?;
        }
        Target::Svm4_3 => {
            let support1 = load_builtin(SUPPORT1)?;
            let support = [
                (FeatureVector::from([5.0, 3.0]), Category::One),
                (FeatureVector::from([5.4, 3.3]), Category::One),
                (FeatureVector::from([5.4, 3.0]), Category::Two),
            ];
            for (p, c) in &support {
                let present = support1.points.iter().any(|(q, k)| q == p && k == c);
                ck.check(
                    &format!("support vector {p} in dataset"),
                    true,
                    present,
                    present,
                )?;
            }
            let s = svm_support_solve(&support)?;
            let k = [
                [35.0, 37.9, -37.0],
                [37.9, 41.05, -40.06],
                [-37.0, -40.06, 39.16],
            ];
            for (i, (got_row, want_row)) in s.kernel.iter().zip(k).enumerate() {
                for (j, (got, want)) in got_row.iter().zip(want_row).enumerate() {
                    ck.check(
                        &format!("K[{}][{}]", i + 1, j + 1),
                        want,
                        format!("{got:.4}"),
                        (got - want).abs() < 1e-9,
                    )?;
                }
            }
            for (i, (got, want)) in s.alphas.iter().zip([93.5, -37.78, 49.72]).enumerate() {
                ck.check(
                    &format!("alpha{}", i + 1),
                    want,
                    format!("{got:.4}"),
                    (got - want).abs() < 0.01,
                )?;
            }
            for (i, (got, want)) in s.a_hat.iter().zip([6.0, -5.0, 20.0 / 3.0]).enumerate() {
                ck.check(
                    &format!("a_hat[{}]", i + 1),
                    format!("{want:.4}"),
                    format!("{got:.4}"),
                    (got - want).abs() < 1e-6,
                )?;
            }
            ck.check(
                "rho",
                0.12,
                format!("{:.4}", s.margin),
                (s.margin - 0.12).abs() < 0.005,
            )?;
            ck.check(
                "equal margins",
                "spread < 1e-6",
                format!("{:.1e}", s.margin_spread()),
                s.margin_spread() < 1e-6,
            )?;
        }
        Target::Table5_1 => rre_xor(&mut ck, "")?,
        Target::Table5_2 => {
            nn_published_forward(&mut ck, "")?;
            nn_trained(&mut ck, "")?;
        }
        Target::Table5_3 => {
            rre_xor(&mut ck, "R.R.E ")?;
            nn_published_forward(&mut ck, "network ")?;
            nn_trained(&mut ck, "network ")?;
        }
    }
    let failed = ck.failed;
    writeln!(
        ck.out,
        "{} {}",
        if failed == 0 { "PASS" } else { "FAIL" },
        target.name()
    )?;
    Ok(failed == 0)
}
