//! Text snapshots of a trained model and of the baseline results.

use rre::baselines::{train_perceptron, PerceptronConfig, PerceptronResult};
use rre::datasets::{load_builtin, to_augmented_rows, SUPPORT1};
use rre::{RreConfig, RreModel, VarianceFunction};

fn main() -> rre::Result<()> {
    let data = load_builtin(SUPPORT1)?;
    let model = data.rre_model(RreConfig::default().with_f(VarianceFunction::Constant(50.0)))?;
    let text = model.to_snapshot();
    println!("{}", text.lines().take(3).collect::<Vec<_>>().join("\n"));
    assert_eq!(RreModel::from_snapshot(&text)?, model);

    let fit = train_perceptron(&to_augmented_rows(&data), &PerceptronConfig::default())?;
    let text = fit.to_text();
    println!("{}", text.lines().next().unwrap_or_default());
    assert_eq!(PerceptronResult::from_text(&text)?, fit);
    Ok(())
}
