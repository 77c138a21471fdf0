//! Linear SVM from three known support vectors.

use rre::baselines::svm_support_solve;
use rre::datasets::{load_builtin, SUPPORT1};
use rre::eval::training_accuracy;
use rre::{Category, FeatureVector};

fn main() -> rre::Result<()> {
    let support = [
        (FeatureVector::from([5.0, 3.0]), Category::One),
        (FeatureVector::from([5.4, 3.3]), Category::One),
        (FeatureVector::from([5.4, 3.0]), Category::Two),
    ];
    let s = svm_support_solve(&support)?;
    for row in &s.kernel {
        println!("{row:?}");
    }
    println!("alpha  = {:?}", s.alphas);
    println!("a_hat  = {:?}", s.a_hat);
    println!("margins = {:?}", s.margins);
    let data = load_builtin(SUPPORT1)?;
    println!(
        "accuracy on the full set: {:.2}",
        training_accuracy(|x| s.predict(x), &data)
    );
    Ok(())
}
