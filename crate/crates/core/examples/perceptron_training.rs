//! Batch perceptron criterion on a separable split and on the
//! non-separable versicolor/virginica listing.

use rre::baselines::{curve_csv, train_perceptron, PerceptronConfig};
use rre::datasets::{
    load_builtin, split_leading_fraction, to_augmented_rows, SplitSpec, IRIS_SETOSA_VERSICOLOR,
    IRIS_VERSICOLOR_VIRGINICA_V2,
};
use rre::eval::{rre_predictor, training_accuracy};
use rre::{RreConfig, VarianceFunction};

fn main() -> rre::Result<()> {
    let b1 = load_builtin(IRIS_SETOSA_VERSICOLOR)?;
    let (train, _) = split_leading_fraction(&b1, &SplitSpec::new(0.6)?)?;
    let fit = train_perceptron(&to_augmented_rows(&train), &PerceptronConfig::default())?;
    println!(
        "separable: a = {:?} after {} iterations, converged = {}",
        fit.a_final, fit.iterations, fit.converged
    );
    let curve = curve_csv(&fit.criterion_history);
    println!(
        "criterion curve head:\n{}",
        curve.lines().take(4).collect::<Vec<_>>().join("\n")
    );

    let b2 = load_builtin(IRIS_VERSICOLOR_VIRGINICA_V2)?;
    let fit = train_perceptron(
        &to_augmented_rows(&b2),
        &PerceptronConfig::default().with_max_iter(3000),
    )?;
    println!(
        "non-separable: converged = {}, training accuracy {:.2}",
        fit.converged, fit.training_accuracy
    );
    for lambda in [1.0, 2.0, 3.0, 3.5] {
        let model = b2.rre_model(
            RreConfig::default()
                .with_lambda(lambda)
                .with_f(VarianceFunction::Constant(50.0)),
        )?;
        println!(
            "R.R.E lambda = {lambda}: training accuracy {:.2}",
            training_accuracy(rre_predictor(&model), &b2)
        );
    }
    Ok(())
}
