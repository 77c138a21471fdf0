//! R.R.E against the batch perceptron over training fractions 0.1 to 0.9.

use rre::datasets::{load_builtin, IRIS_SETOSA_VERSICOLOR};
use rre::eval::{sweep_splits, Algorithm, TABLE_FRACTIONS};

fn main() -> rre::Result<()> {
    let data = load_builtin(IRIS_SETOSA_VERSICOLOR)?;
    let sweep = sweep_splits(
        &data,
        &[Algorithm::Rre, Algorithm::Perceptron],
        &TABLE_FRACTIONS,
    )?;
    print!("{}", sweep.to_table());
    Ok(())
}
