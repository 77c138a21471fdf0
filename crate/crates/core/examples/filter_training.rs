//! Prune training copies that the rest of the set already covers.

use rre::datasets::{load_builtin, split_leading_fraction, SplitSpec, IRIS_SETOSA_VERSICOLOR};
use rre::eval::{evaluate_classifier, rre_predictor};
use rre::RreConfig;

fn main() -> rre::Result<()> {
    let data = load_builtin(IRIS_SETOSA_VERSICOLOR)?;
    let (train, test) = split_leading_fraction(&data, &SplitSpec::new(0.9)?)?;
    let model = train.rre_model(RreConfig::default())?;
    let out = model.filter_redundant(&model.default_order())?;
    println!(
        "kept {} of {} training copies",
        out.model.n1() + out.model.n2(),
        model.n1() + model.n2()
    );
    let report = evaluate_classifier(rre_predictor(&out.model), &train, &test)?;
    print!("{}", report.to_table());
    Ok(())
}
