use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::model::{FeatureVector, Label};

/// Ridge added to the within-class scatter before inversion.
pub const FISHER_RIDGE: f64 = 1e-9;
/// Means closer than this leave the direction undefined.
pub const DEGENERATE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct FisherResult {
    pub mean1: Vec<f64>,
    pub mean2: Vec<f64>,
    pub within_scatter: Vec<Vec<f64>>,
    pub w: Vec<f64>,
    pub bias: f64,
    pub degenerate: bool,
}

impl FisherResult {
    pub fn project(&self, x: &FeatureVector) -> f64 {
        self.w
            .iter()
            .zip(x.coords())
            .map(|(w, v)| w * v)
            .sum::<f64>()
            + self.bias
    }

    /// Positive side of the midpoint threshold is category one.
    pub fn predict(&self, x: &FeatureVector) -> Label {
        Label::from_score(self.project(x))
    }
}

fn mean(points: &[FeatureVector], dim: usize) -> DVector<f64> {
    let mut m = DVector::zeros(dim);
    for p in points {
        m += DVector::from_column_slice(p.coords());
    }
    m / points.len() as f64
}

pub fn fisher_discriminant(
    points1: &[FeatureVector],
    points2: &[FeatureVector],
) -> Result<FisherResult> {
    if points1.is_empty() || points2.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dim = points1[0].dim();
    if let Some(p) = points1.iter().chain(points2).find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        });
    }

    let m1 = mean(points1, dim);
    let m2 = mean(points2, dim);
    let mut sw = DMatrix::<f64>::zeros(dim, dim);
    for (points, m) in [(points1, &m1), (points2, &m2)] {
        for p in points {
            let d = DVector::from_column_slice(p.coords()) - m;
            sw += &d * d.transpose();
        }
    }
    let diff = &m1 - &m2;
    let degenerate = diff.norm() < DEGENERATE_TOLERANCE;
    let regularized = &sw + DMatrix::identity(dim, dim) * FISHER_RIDGE;
    let w = regularized.lu().solve(&diff).ok_or(Error::SingularKernel)?;
    let bias = -w.dot(&(&m1 + &m2)) / 2.0;

    Ok(FisherResult {
        mean1: m1.iter().copied().collect(),
        mean2: m2.iter().copied().collect(),
        within_scatter: (0..dim)
            .map(|i| sw.row(i).iter().copied().collect())
            .collect(),
        w: w.iter().copied().collect(),
        bias,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_pair() {
        let f = fisher_discriminant(
            &[FeatureVector::from([0.0, 0.0])],
            &[FeatureVector::from([2.0, 0.0])],
        )
        .unwrap();
        assert!(!f.degenerate);
        assert!(f.w[1].abs() < 1e-12 * f.w[0].abs());
        assert!(f.w[0] < 0.0);
        assert_eq!(
            f.predict(&FeatureVector::from([0.0, 0.0])),
            Label::Category1
        );
        assert_eq!(
            f.predict(&FeatureVector::from([2.0, 0.0])),
            Label::Category2
        );
        assert_eq!(f.project(&FeatureVector::from([1.0, 0.0])), 0.0);
    }

    #[test]
    fn scatter_of_known_sets() {
        let f = fisher_discriminant(
            &[
                FeatureVector::from([0.0, 0.0]),
                FeatureVector::from([2.0, 0.0]),
            ],
            &[
                FeatureVector::from([0.0, 5.0]),
                FeatureVector::from([0.0, 7.0]),
            ],
        )
        .unwrap();
        assert_eq!(f.mean1, vec![1.0, 0.0]);
        assert_eq!(f.mean2, vec![0.0, 6.0]);
        assert_eq!(f.within_scatter, vec![vec![2.0, 0.0], vec![0.0, 2.0]]);
    }

    #[test]
    fn coincident_means_are_degenerate() {
        let f = fisher_discriminant(
            &[
                FeatureVector::from([1.0, 0.0]),
                FeatureVector::from([-1.0, 0.0]),
            ],
            &[
                FeatureVector::from([0.0, 3.0]),
                FeatureVector::from([0.0, -3.0]),
            ],
        )
        .unwrap();
        assert!(f.degenerate);
    }

    #[test]
    fn empty_input() {
        assert!(matches!(
            fisher_discriminant(&[], &[FeatureVector::from([1.0])]),
            Err(Error::EmptyInput)
        ));
    }
}
