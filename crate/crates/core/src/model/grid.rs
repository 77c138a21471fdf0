use rayon::prelude::*;

use super::{FeatureVector, RreModel};
use crate::datasets::GridSpec;
use crate::error::{Error, Result};

/// Values on a grid, row-major: row `r` holds the nodes with `x2 = grid.y(r)`
/// for increasing `x1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridValues {
    pub nx: usize,
    pub ny: usize,
    pub values: Vec<f64>,
}

impl GridValues {
    pub fn get(&self, ix: usize, iy: usize) -> f64 {
        self.values[iy * self.nx + ix]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.values.chunks(self.nx)
    }
}

impl RreModel {
    /// Evaluates `G` at every grid node. Rows are computed in parallel; the
    /// result is identical to the sequential evaluation.
    pub fn evaluate_grid(&self, grid: &GridSpec) -> Result<GridValues> {
        grid.validate()?;
        if self.dimension() != 2 {
            return Err(Error::InvalidGrid(format!(
                "grids are two-dimensional, model has dimension {}",
                self.dimension()
            )));
        }
        let values = (0..grid.ny)
            .into_par_iter()
            .flat_map_iter(|iy| {
                let y = grid.y(iy);
                (0..grid.nx).map(move |ix| {
                    let x = FeatureVector::from([grid.x(ix), y]);
                    self.discriminant(&x).expect("two-dimensional model")
                })
            })
            .collect();
        Ok(GridValues {
            nx: grid.nx,
            ny: grid.ny,
            values,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_model, RreConfig, TrainingMultiset};

    fn xor() -> RreModel {
        build_model(
            TrainingMultiset::from_points([[-1.0, 1.0], [1.0, -1.0]]),
            TrainingMultiset::from_points([[-1.0, -1.0], [1.0, 1.0]]),
            RreConfig::default(),
        )
        .unwrap()
    }

    #[test]
    fn xor_three_by_three() {
        let grid = GridSpec::new(-1.0, 1.0, -1.0, 1.0, 3, 3).unwrap();
        let v = xor().evaluate_grid(&grid).unwrap();
        assert_eq!(v.values.len(), 9);
        assert!((v.get(0, 0) + 0.9993).abs() < 1e-4);
        assert!((v.get(2, 0) - 0.9993).abs() < 1e-4);
        assert!((v.get(0, 2) - 0.9993).abs() < 1e-4);
        assert!((v.get(2, 2) + 0.9993).abs() < 1e-4);
        assert_eq!(v.get(1, 1), 0.0);
    }

    #[test]
    fn two_by_two_matches_pointwise() {
        let m = xor();
        let grid = GridSpec::new(-0.3, 0.8, 0.1, 0.9, 2, 2).unwrap();
        let v = m.evaluate_grid(&grid).unwrap();
        let want: Vec<f64> = [[-0.3, 0.1], [0.8, 0.1], [-0.3, 0.9], [0.8, 0.9]]
            .into_iter()
            .map(|p| m.discriminant(&FeatureVector::from(p)).unwrap())
            .collect();
        assert_eq!(v.values, want);
    }

    #[test]
    fn invariant_under_entry_order() {
        let a = xor();
        let b = build_model(
            TrainingMultiset::from_points([[1.0, -1.0], [-1.0, 1.0]]),
            TrainingMultiset::from_points([[1.0, 1.0], [-1.0, -1.0]]),
            RreConfig::default(),
        )
        .unwrap();
        let grid = GridSpec::new(-1.5, 1.5, -1.5, 1.5, 13, 11).unwrap();
        let va = a.evaluate_grid(&grid).unwrap();
        let vb = b.evaluate_grid(&grid).unwrap();
        for (x, y) in va.values.iter().zip(&vb.values) {
            assert!((x - y).abs() <= 1e-15);
        }
    }

    #[test]
    fn rejects_bad_grid() {
        assert!(GridSpec::new(0.0, 1.0, 0.0, 1.0, 1, 5).is_err());
        assert!(GridSpec::new(1.0, 1.0, 0.0, 1.0, 3, 5).is_err());
        assert!(GridSpec::new(0.0, f64::INFINITY, 0.0, 1.0, 3, 5).is_err());
    }
}
