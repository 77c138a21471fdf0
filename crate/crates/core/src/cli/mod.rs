//! Command-line front end. [`run`] parses arguments, dispatches and returns
//! the process exit code: 0 on success, 1 on a usage or validation error, 2
//! when a `reproduce` target does not match its expected values.

mod reproduce;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::baselines::{
    curve_csv, fisher_discriminant, nn_forward, svm_support_solve, train_perceptron, train_xor_nn,
    ErrorConvention, NnConfig, PerceptronConfig, XOR_INPUTS, XOR_TARGETS,
};
use crate::datasets::{
    builtin_listing, format_augmented_text, format_csv, load_builtin, split_leading_fraction,
    to_augmented_rows, Dataset, GridSpec, SplitRounding, SplitSpec, BUILTIN_NAMES,
};
use crate::error::{Error, Result};
use crate::eval::{
    evaluate_classifier, export_surface, format_percent, rre_predictor, tabulate,
    training_accuracy, EvalReport,
};
use crate::model::{Category, FeatureVector, Label, RreConfig, RreModel, VarianceFunction};

pub use reproduce::Target;

#[derive(Debug, Parser)]
#[command(name = "rre", version, about = "R.R.E classifier and baselines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Inspect the built-in datasets
    Datasets {
        #[command(subcommand)]
        action: DatasetsCmd,
    },
    /// Evaluate, plot or prune an R.R.E model
    Rre {
        #[command(subcommand)]
        action: RreCmd,
    },
    /// Run one of the comparison classifiers
    Baseline {
        #[command(subcommand)]
        action: BaselineCmd,
    },
    /// Recompute published tables and compare cell by cell
    Reproduce {
        #[arg(required = true)]
        targets: Vec<Target>,
    },
}

#[derive(Debug, Subcommand)]
enum DatasetsCmd {
    /// List built-in dataset names and sizes
    List,
    /// Write a dataset as an augmented-row listing or CSV
    Export {
        #[arg(long)]
        dataset: String,
        #[arg(long, value_enum, default_value_t = DataFormat::Listing)]
        format: DataFormat,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DataFormat {
    Listing,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Csv,
}

#[derive(Debug, Args)]
struct DataArgs {
    /// Built-in dataset name or path to a listing/CSV file
    #[arg(long)]
    dataset: String,
    /// Leading training fraction per category; without it the whole dataset trains
    #[arg(long, allow_hyphen_values = true)]
    split: Option<f64>,
    /// Round split counts down instead of requiring whole numbers
    #[arg(long)]
    floor: bool,
}

#[derive(Debug, Args)]
struct ModelArgs {
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    lambda: f64,
    /// identity | const:C | pow:A:B
    #[arg(long, default_value = "identity")]
    f: VarianceFunction,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    p1: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    p2: f64,
}

impl ModelArgs {
    fn config(&self) -> RreConfig {
        RreConfig::default()
            .with_lambda(self.lambda)
            .with_costs(self.p1, self.p2)
            .with_f(self.f)
    }
}

#[derive(Debug, Subcommand)]
enum RreCmd {
    /// Accuracy table on the training and test split
    Eval {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        model: ModelArgs,
        /// Reject threshold on |G|
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<f64>,
        /// Duplicate misclassified training points for up to this many rounds first
        #[arg(long)]
        reinforce: Option<u32>,
        /// List every evaluated point with its score
        #[arg(long)]
        points: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Discriminant values on a grid as `x1,x2,G` CSV
    Surface {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        model: ModelArgs,
        /// xmin,xmax,ymin,ymax,nx,ny (default: data bounds padded by 0.5, 101x101)
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<GridSpec>,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Remove training copies that are not needed to classify the training set
    Filter {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        model: ModelArgs,
        /// Write the filtered model snapshot here
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum BaselineCmd {
    /// Batch perceptron criterion
    Perceptron {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long, default_value_t = 0.01, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, default_value_t = 300)]
        max_iter: u32,
        /// Write the result snapshot here
        #[arg(long)]
        out: Option<String>,
        /// Write the criterion history as CSV here
        #[arg(long)]
        curve: Option<String>,
    },
    /// Linear SVM from given support vectors
    Svm {
        #[arg(long, default_value = "support1")]
        dataset: String,
        /// Category-one points, `|`, category-two points, e.g. "5,3;5.4,3.3|5.4,3"
        #[arg(long)]
        sv: String,
    },
    /// Fisher linear discriminant
    Fisher {
        #[command(flatten)]
        data: DataArgs,
    },
    /// 2-2-1 tanh network on XOR
    Nn {
        #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long, default_value_t = 0.001, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, default_value_t = 5000)]
        max_epochs: u32,
        #[arg(long, value_enum, default_value_t = Convention::Sum)]
        convention: Convention,
        /// Write the result snapshot here
        #[arg(long)]
        out: Option<String>,
        /// Write the learning curve as CSV here
        #[arg(long)]
        curve: Option<String>,
        /// Also write the network output on this grid as CSV to --surface-out
        #[arg(long, requires = "surface_out", allow_hyphen_values = true)]
        grid: Option<GridSpec>,
        #[arg(long, allow_hyphen_values = true)]
        surface_out: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Convention {
    Halfsum,
    Sum,
    Mean,
}

impl From<Convention> for ErrorConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Halfsum => ErrorConvention::HalfSum,
            Convention::Sum => ErrorConvention::Sum,
            Convention::Mean => ErrorConvention::Mean,
        }
    }
}

enum Status {
    Ok,
    Mismatch,
}

/// Runs the command line `args` (including the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(Status::Ok) => 0,
        Ok(Status::Mismatch) => 2,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    match command {
        Command::Datasets { action } => datasets(action, out),
        Command::Rre { action } => rre(action, out, err),
        Command::Baseline { action } => baseline(action, out),
        Command::Reproduce { targets } => {
            let mut ok = true;
            for t in targets {
                ok &= reproduce::run(t, out)?;
            }
            Ok(if ok { Status::Ok } else { Status::Mismatch })
        }
    }
}

/// Writes `text` to `path`, with `-` meaning `out`.
fn emit(path: &str, text: &str, out: &mut dyn Write) -> Result<()> {
    if path == "-" {
        out.write_all(text.as_bytes())?;
    } else {
        fs::write(path, text)?;
    }
    Ok(())
}

pub fn load_dataset(spec: &str) -> Result<Dataset> {
    if BUILTIN_NAMES.contains(&spec) {
        return load_builtin(spec);
    }
    let path = Path::new(spec);
    if !path.is_file() {
        return Err(Error::UnknownDataset(spec.to_string()));
    }
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| spec.to_string());
    Dataset::parse(name, &fs::read_to_string(path)?)
}

/// Training and test sets; without a split the test set is empty.
fn prepare(data: &DataArgs) -> Result<(Dataset, Dataset)> {
    let dataset = load_dataset(&data.dataset)?;
    match data.split {
        Some(f) => {
            let rounding = if data.floor {
                SplitRounding::Floor
            } else {
                SplitRounding::Exact
            };
            split_leading_fraction(&dataset, &SplitSpec::with_rounding(f, rounding)?)
        }
        None => {
            let empty = Dataset::new(
                format!("{}[test]", dataset.name),
                Vec::new(),
                dataset.provenance,
            );
            Ok((dataset, empty))
        }
    }
}

fn datasets(action: DatasetsCmd, out: &mut dyn Write) -> Result<Status> {
    match action {
        DatasetsCmd::List => {
            for name in BUILTIN_NAMES {
                let d = load_builtin(name)?;
                writeln!(
                    out,
                    "{name:<28} {:>4} points  one={:<3} two={:<3} {}",
                    d.len(),
                    d.count(Category::One),
                    d.count(Category::Two),
                    d.provenance
                )?;
            }
        }
        DatasetsCmd::Export {
            dataset,
            format,
            out: path,
        } => {
            let text = match format {
                DataFormat::Listing => match builtin_listing(&dataset) {
                    Some(listing) => listing.to_string(),
                    None => format_augmented_text(&to_augmented_rows(&load_dataset(&dataset)?)),
                },
                DataFormat::Csv => format_csv(&load_dataset(&dataset)?),
            };
            emit(&path, &text, out)?;
        }
    }
    Ok(Status::Ok)
}

fn point_listing(
    model: &RreModel,
    tau: Option<f64>,
    sets: &[&Dataset],
    csv: bool,
) -> Result<String> {
    let mut s = String::new();
    if csv {
        s.push_str("set,x1,x2,target,G,label\n");
    } else {
        writeln!(
            s,
            "{:<6} {:<18} {:<6} {:>10}  label",
            "set", "point", "target", "G"
        )
        .unwrap();
    }
    for d in sets {
        let tag = if d.name.ends_with("[test]") {
            "test"
        } else {
            "train"
        };
        for (p, c) in &d.points {
            let o = match tau {
                Some(t) => model.classify_with_reject(p, t)?,
                None => model.classify(p)?,
            };
            if csv {
                let coords: Vec<String> = p.coords().iter().map(|v| v.to_string()).collect();
                writeln!(
                    s,
                    "{tag},{},{},{},{}",
                    coords.join(","),
                    c.name(),
                    o.score,
                    o.label
                )
                .unwrap();
            } else {
                writeln!(
                    s,
                    "{tag:<6} {:<18} {:<6} {:>10.4}  {}",
                    p.to_string(),
                    c.name(),
                    o.score,
                    o.label
                )
                .unwrap();
            }
        }
    }
    Ok(s)
}

fn report_text(report: &EvalReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Table => {
            let mut s = report.to_table();
            for (what, misses) in [
                ("train", &report.train_misses),
                ("test", &report.test_misses),
            ] {
                for m in misses {
                    writeln!(
                        s,
                        "{what} miss: {} is {}, predicted {}",
                        m.point,
                        m.truth.name(),
                        m.predicted
                    )
                    .unwrap();
                }
            }
            s
        }
        ReportFormat::Csv => report.to_csv(),
    }
}

fn rre(action: RreCmd, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    match action {
        RreCmd::Eval {
            data,
            model,
            tau,
            reinforce,
            points,
            format,
            out: path,
        } => {
            if let Some(t) = tau {
                if t.is_nan() || t < 0.0 {
                    return Err(Error::NegativeThreshold(t));
                }
            }
            let (train, test) = prepare(&data)?;
            let mut m = train.rre_model(model.config())?;
            if let Some(rounds) = reinforce {
                let r = m.reinforce_training(rounds)?;
                writeln!(
                    err,
                    "reinforcement: {} round(s), converged={}",
                    r.rounds_used, r.converged
                )?;
                m = r.model;
            }
            let report = match tau {
                Some(t) => evaluate_classifier(
                    |x| {
                        m.classify_with_reject(x, t)
                            .map(|o| o.label)
                            .unwrap_or(Label::Rejected)
                    },
                    &train,
                    &test,
                )?,
                None => evaluate_classifier(rre_predictor(&m), &train, &test)?,
            };
            let csv = matches!(format, ReportFormat::Csv);
            let mut text = report_text(&report, format);
            if points || data.split.is_none() {
                if !csv {
                    text.push('\n');
                }
                text.push_str(&point_listing(&m, tau, &[&train, &test], csv)?);
            }
            emit(&path, &text, out)?;
        }
        RreCmd::Surface {
            data,
            model,
            grid,
            out: path,
        } => {
            let (train, _) = prepare(&data)?;
            let m = train.rre_model(model.config())?;
            let grid = match grid {
                Some(g) => g,
                None => GridSpec::around(&train, 0.5, 101)?,
            };
            let values = m.evaluate_grid(&grid)?;
            let mut buf = Vec::new();
            export_surface(&values, &grid, &mut buf)?;
            emit(&path, &String::from_utf8_lossy(&buf), out)?;
        }
        RreCmd::Filter {
            data,
            model,
            out: path,
        } => {
            let (train, _) = prepare(&data)?;
            let m = train.rre_model(model.config())?;
            let before = (m.t1().len(), m.t2().len());
            let f = m.filter_redundant(&m.default_order())?;
            let summary = format!(
                "removed {} copies\ncategory one: {} -> {} entries\ncategory two: {} -> {} entries\ntraining accuracy after filtering: {}\n",
                f.removed,
                before.0,
                f.model.t1().len(),
                before.1,
                f.model.t2().len(),
                format_percent(training_accuracy(rre_predictor(&f.model), &train)),
            );
            match path.as_deref() {
                Some("-") => {
                    err.write_all(summary.as_bytes())?;
                    out.write_all(f.model.to_snapshot().as_bytes())?;
                }
                Some(p) => {
                    fs::write(p, f.model.to_snapshot())?;
                    out.write_all(summary.as_bytes())?;
                }
                None => out.write_all(summary.as_bytes())?,
            }
        }
    }
    Ok(Status::Ok)
}

fn fmt_vec(v: &[f64], decimals: usize) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x:.decimals$}")).collect();
    format!("[{}]", parts.join(", "))
}

/// `"5,3;5.4,3.3|5.4,3"`: category-one points, then category-two points.
pub fn parse_support_vectors(spec: &str) -> Result<Vec<(FeatureVector, Category)>> {
    let groups: Vec<&str> = spec.split('|').collect();
    if groups.len() != 2 {
        return Err(Error::InvalidConfig(
            "support vectors need exactly one `|` between the two categories".into(),
        ));
    }
    let mut out = Vec::new();
    for (group, category) in groups.iter().zip([Category::One, Category::Two]) {
        for point in group.split(';').filter(|p| !p.trim().is_empty()) {
            let coords = point
                .split(',')
                .map(|c| c.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::InvalidConfig(format!("bad support vector `{point}`")))?;
            out.push((FeatureVector::new(coords)?, category));
        }
    }
    Ok(out)
}

fn baseline(action: BaselineCmd, out: &mut dyn Write) -> Result<Status> {
    match action {
        BaselineCmd::Perceptron {
            data,
            eta,
            theta,
            max_iter,
            out: path,
            curve,
        } => {
            let (train, test) = prepare(&data)?;
            let dim = train.dimension().ok_or(Error::EmptyInput)?;
            let mut a_init = vec![0.0; dim + 1];
            a_init[dim] = 1.0;
            let config = PerceptronConfig {
                eta,
                theta,
                a_init,
                max_iter,
            };
            let fit = train_perceptron(&to_augmented_rows(&train), &config)?;
            writeln!(out, "a_final = {}", fmt_vec(&fit.a_final, 4))?;
            writeln!(out, "iterations = {}", fit.iterations)?;
            writeln!(out, "converged = {}", fit.converged)?;
            writeln!(
                out,
                "training accuracy = {}",
                format_percent(fit.training_accuracy)
            )?;
            let report = evaluate_classifier(|x| fit.predict(x), &train, &test)?;
            out.write_all(report_text(&report, ReportFormat::Table).as_bytes())?;
            if let Some(p) = path {
                emit(&p, &fit.to_text(), out)?;
            }
            if let Some(p) = curve {
                emit(&p, &curve_csv(&fit.criterion_history), out)?;
            }
        }
        BaselineCmd::Svm { dataset, sv } => {
            let data = load_dataset(&dataset)?;
            let support = parse_support_vectors(&sv)?;
            for (p, c) in &support {
                if !data.points.iter().any(|(q, k)| q == p && k == c) {
                    return Err(Error::InvalidConfig(format!(
                        "support vector {p} (category {}) is not in {}",
                        c.name(),
                        data.name
                    )));
                }
            }
            let s = svm_support_solve(&support)?;
            writeln!(out, "K =")?;
            for row in &s.kernel {
                writeln!(out, "  {}", fmt_vec(row, 4))?;
            }
            writeln!(out, "alpha = {}", fmt_vec(&s.alphas, 4))?;
            writeln!(out, "a_hat = {}", fmt_vec(&s.a_hat, 4))?;
            writeln!(out, "margins = {}", fmt_vec(&s.margins, 4))?;
            writeln!(out, "rho = {:.4}", s.margin)?;
            writeln!(
                out,
                "training accuracy = {}",
                format_percent(training_accuracy(|x| s.predict(x), &data))
            )?;
        }
        BaselineCmd::Fisher { data } => {
            let (train, test) = prepare(&data)?;
            let p1: Vec<FeatureVector> = train.points_of(Category::One).cloned().collect();
            let p2: Vec<FeatureVector> = train.points_of(Category::Two).cloned().collect();
            let fit = fisher_discriminant(&p1, &p2)?;
            writeln!(out, "mean one = {}", fmt_vec(&fit.mean1, 6))?;
            writeln!(out, "mean two = {}", fmt_vec(&fit.mean2, 6))?;
            writeln!(out, "w = {}", fmt_vec(&fit.w, 6))?;
            writeln!(out, "bias = {:.6}", fit.bias)?;
            writeln!(out, "degenerate = {}", fit.degenerate)?;
            let report = evaluate_classifier(|x| fit.predict(x), &train, &test)?;
            out.write_all(report_text(&report, ReportFormat::Table).as_bytes())?;
        }
        BaselineCmd::Nn {
            eta,
            theta,
            max_epochs,
            convention,
            out: path,
            curve,
            grid,
            surface_out,
        } => {
            let config = NnConfig {
                eta,
                theta,
                max_epochs,
                convention: convention.into(),
                ..NnConfig::default()
            };
            let r = train_xor_nn(&config)?;
            writeln!(out, "epochs = {}", r.epochs)?;
            writeln!(out, "converged = {}", r.converged)?;
            writeln!(
                out,
                "final error = {:.6} ({})",
                r.final_error,
                r.convention.name()
            )?;
            writeln!(out, "hidden weights (x1, x2, bias rows) =")?;
            for row in &r.w_hidden_final {
                writeln!(out, "  {}", fmt_vec(row, 4))?;
            }
            writeln!(
                out,
                "output weights (h1, h2, bias) = {}",
                fmt_vec(&r.w_out_final, 4)
            )?;
            writeln!(out, "{:<10} {:>6} {:>8}", "point", "target", "z")?;
            for ((x, t), z) in XOR_INPUTS.iter().zip(XOR_TARGETS).zip(r.outputs) {
                writeln!(
                    out,
                    "{:<10} {:>6} {:>8.4}",
                    format!("({}, {})", x[0], x[1]),
                    t,
                    z
                )?;
            }
            if let Some(p) = path {
                emit(&p, &r.to_text(), out)?;
            }
            if let Some(p) = curve {
                emit(&p, &curve_csv(&r.learning_curve), out)?;
            }
            if let (Some(g), Some(p)) = (grid, surface_out) {
                let values = tabulate(&g, |x, y| {
                    nn_forward(
                        &r.w_hidden_final,
                        &r.w_out_final,
                        &FeatureVector::from([x, y]),
                    )
                    .expect("two inputs")
                })?;
                let mut buf = Vec::new();
                export_surface(&values, &g, &mut buf)?;
                emit(&p, &String::from_utf8_lossy(&buf), out)?;
            }
        }
    }
    Ok(Status::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("rre").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn support_vector_spec() {
        let sv = parse_support_vectors("5,3;5.4,3.3|5.4,3").unwrap();
        assert_eq!(sv.len(), 3);
        assert_eq!(sv[2], (FeatureVector::from([5.4, 3.0]), Category::Two));
        assert!(parse_support_vectors("5,3;5.4,3.3").is_err());
        assert!(parse_support_vectors("5,x|1,1").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["--help"]).0, 0);
        assert_eq!(run_str(&["bogus"]).0, 1);
        assert_eq!(run_str(&["rre", "eval", "--dataset", "nope"]).0, 1);
        assert_eq!(
            run_str(&["rre", "eval", "--dataset", "xor", "--lambda", "-1"]).0,
            1
        );
        assert_eq!(
            run_str(&["rre", "eval", "--dataset", "xor", "--tau", "-0.5"]).0,
            1
        );
        assert_eq!(run_str(&["datasets", "list"]).0, 0);
    }

    #[test]
    fn unknown_dataset_message() {
        let (_, _, err) = run_str(&["rre", "eval", "--dataset", "nope"]);
        assert!(err.contains("unknown dataset `nope`"), "{err}");
    }
}
