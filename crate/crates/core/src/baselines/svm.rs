use nalgebra::{DMatrix, DVector};

use crate::datasets::AugmentedRow;
use crate::error::{Error, Result};
use crate::model::{Category, FeatureVector, Label};

use super::linear_label;

/// Hard-margin linear SVM from a known set of support vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SvmSolution {
    /// Augmented, sign-normalized support vectors.
    pub phis: Vec<AugmentedRow>,
    /// `K[i][j] = phi_i . phi_j`
    pub kernel: Vec<Vec<f64>>,
    /// Solution of `K alpha = 1`.
    pub alphas: Vec<f64>,
    /// `sum alpha_i phi_i`
    pub a_hat: Vec<f64>,
    /// Distance of each support vector to the separating hyperplane.
    pub margins: Vec<f64>,
    pub margin: f64,
}

impl SvmSolution {
    pub fn predict(&self, x: &FeatureVector) -> Label {
        linear_label(&self.a_hat, x)
    }

    /// Largest relative spread between the per-vector margins.
    pub fn margin_spread(&self) -> f64 {
        let max = self
            .margins
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max);
        let min = self.margins.iter().cloned().fold(f64::INFINITY, f64::min);
        (max - min) / max.abs()
    }
}

pub fn svm_support_solve(support: &[(FeatureVector, Category)]) -> Result<SvmSolution> {
    let has = |c: Category| support.iter().any(|(_, k)| *k == c);
    if !has(Category::One) || !has(Category::Two) {
        return Err(Error::MixedCategoriesMissing);
    }
    let dim = support[0].0.dim();
    if let Some((p, _)) = support.iter().find(|(p, _)| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        });
    }

    let phis: Vec<AugmentedRow> = support
        .iter()
        .map(|(p, c)| AugmentedRow::from_point(p, *c))
        .collect();
    let n = phis.len();
    let kernel: Vec<Vec<f64>> = phis
        .iter()
        .map(|a| phis.iter().map(|b| a.dot(b.values())).collect())
        .collect();

    let k = DMatrix::from_fn(n, n, |i, j| kernel[i][j]);
    let ones = DVector::from_element(n, 1.0);
    let alpha = k.clone().lu().solve(&ones).ok_or(Error::SingularKernel)?;
    let residual = (&k * &alpha - &ones).amax();
    if !residual.is_finite() || residual > 1e-6 {
        return Err(Error::SingularKernel);
    }
    let alphas: Vec<f64> = alpha.iter().copied().collect();

    let mut a_hat = vec![0.0; dim + 1];
    for (a, phi) in alphas.iter().zip(&phis) {
        for (w, y) in a_hat.iter_mut().zip(phi.values()) {
            *w += a * y;
        }
    }
    let norm = a_hat[1..].iter().map(|w| w * w).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::SingularKernel);
    }
    let margins: Vec<f64> = phis.iter().map(|phi| phi.dot(&a_hat) / norm).collect();
    Ok(SvmSolution {
        phis,
        kernel,
        alphas,
        a_hat,
        margin: margins[0],
        margins,
    })
}
