//! A disputed point added to the opposite category cancels its own bump
//! when costs are equal and the width is fixed.

use rre::{build_model, Category, FeatureVector, RreConfig, TrainingMultiset, VarianceFunction};

fn main() -> rre::Result<()> {
    let t1 = TrainingMultiset::from_points([[0.0, 0.0], [0.0, 1.0], [2.0, 2.0]]);
    let t2 = TrainingMultiset::from_points([[3.0, 3.0], [3.0, 4.0]]);
    let config = RreConfig::default().with_f(VarianceFunction::Constant(1.0));
    let model = build_model(t1, t2, config)?;

    let disputed = FeatureVector::from([2.0, 2.0]);
    let cancelled = model.enforce_label(&disputed, Category::Two)?;
    let without = build_model(
        TrainingMultiset::from_points([[0.0, 0.0], [0.0, 1.0]]),
        TrainingMultiset::from_points([[3.0, 3.0], [3.0, 4.0]]),
        config,
    )?;
    for p in [[2.0, 2.0], [1.0, 1.0], [2.5, 3.0]] {
        let x = FeatureVector::from(p);
        println!(
            "{x:<10} original {:+.6}  cancelled {:+.6}  removed {:+.6}",
            model.discriminant(&x)?,
            cancelled.discriminant(&x)?,
            without.discriminant(&x)?
        );
    }
    Ok(())
}
