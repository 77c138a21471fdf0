//! Two concentric rings share a mean, so the Fisher direction is undefined;
//! R.R.E separates them anyway.

use rre::baselines::fisher_discriminant;
use rre::datasets::{generate_support2, load_builtin, SUPPORT1};
use rre::eval::{rre_predictor, training_accuracy};
use rre::{Category, Dataset, RreConfig, VarianceFunction};

fn fisher(data: &Dataset) -> rre::Result<()> {
    let ones: Vec<_> = data.points_of(Category::One).cloned().collect();
    let twos: Vec<_> = data.points_of(Category::Two).cloned().collect();
    let fit = fisher_discriminant(&ones, &twos)?;
    println!(
        "{}: means {:?} / {:?}, degenerate = {}, accuracy {:.2}",
        data.name,
        fit.mean1,
        fit.mean2,
        fit.degenerate,
        training_accuracy(|x| fit.predict(x), data)
    );
    Ok(())
}

fn main() -> rre::Result<()> {
    let rings = generate_support2();
    fisher(&load_builtin(SUPPORT1)?)?;
    fisher(&rings)?;
    let model = rings.rre_model(RreConfig::default().with_f(VarianceFunction::Constant(1.0)))?;
    println!(
        "R.R.E on {}: accuracy {:.2}",
        rings.name,
        training_accuracy(rre_predictor(&model), &rings)
    );
    Ok(())
}
