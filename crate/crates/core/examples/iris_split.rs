//! Leading 40/60 split of the setosa/versicolor listing, classified with a
//! fixed-width R.R.E model.

use rre::datasets::{load_builtin, split_leading_fraction, SplitSpec, IRIS_SETOSA_VERSICOLOR};
use rre::eval::{evaluate_classifier, rre_predictor};
use rre::{RreConfig, VarianceFunction};

fn main() -> rre::Result<()> {
    let data = load_builtin(IRIS_SETOSA_VERSICOLOR)?;
    let (train, test) = split_leading_fraction(&data, &SplitSpec::new(0.4)?)?;
    let model = train.rre_model(RreConfig::default().with_f(VarianceFunction::Constant(20.0)))?;
    let report = evaluate_classifier(rre_predictor(&model), &train, &test)?;
    print!("{}", report.to_table());
    for m in &report.test_misses {
        println!("misclassified: {} (category {})", m.point, m.truth.name());
    }
    Ok(())
}
