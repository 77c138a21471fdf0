//! Duplicating misclassified training points until they are classified
//! correctly, then classifying new points while folding them into the model.

use rre::{build_model, FeatureVector, RreConfig, TrainingMultiset, VarianceFunction};

fn main() -> rre::Result<()> {
    let t1 = TrainingMultiset::from_points([[0.0, 0.0], [0.0, 1.0], [0.0, 2.0]]);
    let t2 = TrainingMultiset::from_points([[1.0, 1.0]]);
    let model = build_model(
        t1,
        t2,
        RreConfig::default().with_f(VarianceFunction::Constant(0.5)),
    )?;
    println!("misclassified before: {}", model.training_misses().len());

    let r = model.reinforce_training(100)?;
    println!(
        "after {} round(s): converged = {}, (1, 1) has multiplicity {}",
        r.rounds_used,
        r.converged,
        r.model
            .t2()
            .multiplicity_of(&FeatureVector::from([1.0, 1.0]))
    );

    let mut model = r.model;
    for p in [[0.1, 0.5], [1.2, 1.1], [0.4, 1.8]] {
        let (out, grown) = model.incremental_classify(&FeatureVector::from(p))?;
        println!(
            "{:?} -> {} (G = {:+.4}), sizes now {} / {}",
            p,
            out.label,
            out.score,
            grown.n1(),
            grown.n2()
        );
        model = grown;
    }

    let tau = 0.5;
    let x = FeatureVector::from([0.5, 1.0]);
    println!(
        "reject threshold {tau}: {x} -> {}",
        model.classify_with_reject(&x, tau)?.label
    );
    Ok(())
}
