use crate::datasets::AugmentedRow;
use crate::error::{Error, Result};
use crate::model::{FeatureVector, Label};

#[derive(Debug, Clone, PartialEq)]
pub struct PerceptronConfig {
    pub eta: f64,
    /// Rows with `a . y <= theta` count as misclassified.
    pub theta: f64,
    pub a_init: Vec<f64>,
    pub max_iter: u32,
}

/// `eta = 0.01`, `theta = 0`, `a = [0, 0, 1]`, 300 iterations.
impl Default for PerceptronConfig {
    fn default() -> Self {
        PerceptronConfig {
            eta: 0.01,
            theta: 0.0,
            a_init: vec![0.0, 0.0, 1.0],
            max_iter: 300,
        }
    }
}

impl PerceptronConfig {
    pub fn with_max_iter(mut self, max_iter: u32) -> Self {
        self.max_iter = max_iter;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerceptronResult {
    pub a_final: Vec<f64>,
    /// Criterion evaluations. A converged run ends with one evaluation that
    /// finds no misclassified rows and makes no update.
    pub iterations: u32,
    pub converged: bool,
    /// `J_p` at each iteration, before that iteration's update.
    pub criterion_history: Vec<f64>,
    pub training_accuracy: f64,
}

impl PerceptronResult {
    pub fn predict(&self, x: &FeatureVector) -> Label {
        linear_label(&self.a_final, x)
    }
}

/// Sign of `a . [1, x]`; zero is rejected.
pub fn linear_label(a: &[f64], x: &FeatureVector) -> Label {
    let score = a[0]
        + a[1..]
            .iter()
            .zip(x.coords())
            .map(|(w, v)| w * v)
            .sum::<f64>();
    Label::from_score(score)
}

/// Batch perceptron criterion descent.
///
/// Each iteration collects `M = { y : a . y <= theta }`, records
/// `J_p = sum over M of -a . y`, and steps `a += eta * sum over M of y`.
pub fn train_perceptron(
    rows: &[AugmentedRow],
    config: &PerceptronConfig,
) -> Result<PerceptronResult> {
    let dim = rows.first().ok_or(Error::EmptyInput)?.dim();
    if let Some(r) = rows.iter().find(|r| r.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: r.dim(),
        });
    }
    if config.a_init.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: config.a_init.len(),
        });
    }
    if config.eta.is_nan() || config.eta <= 0.0 || config.max_iter == 0 {
        return Err(Error::InvalidConfig(
            "perceptron needs eta > 0 and max_iter >= 1".into(),
        ));
    }

    let mut a = config.a_init.clone();
    let mut history = Vec::new();
    let mut converged = false;
    let mut step = vec![0.0; dim];
    for _ in 0..config.max_iter {
        step.iter_mut().for_each(|s| *s = 0.0);
        let mut criterion = 0.0;
        let mut misses = 0usize;
        for r in rows {
            let s = r.dot(&a);
            if s <= config.theta {
                misses += 1;
                criterion -= s;
                for (acc, y) in step.iter_mut().zip(r.values()) {
                    *acc += y;
                }
            }
        }
        history.push(criterion);
        if misses == 0 {
            converged = true;
            break;
        }
        for (w, s) in a.iter_mut().zip(&step) {
            *w += config.eta * s;
        }
    }

    let correct = rows.iter().filter(|r| r.dot(&a) > 0.0).count();
    Ok(PerceptronResult {
        a_final: a,
        iterations: history.len() as u32,
        converged,
        criterion_history: history,
        training_accuracy: correct as f64 / rows.len() as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Category;

    fn rows(pts: &[([f64; 2], Category)]) -> Vec<AugmentedRow> {
        pts.iter()
            .map(|(p, c)| AugmentedRow::from_point(&FeatureVector::from(*p), *c))
            .collect()
    }

    #[test]
    fn already_separated() {
        // a = [0, 0, 1] separates by the sign of x2.
        let r = rows(&[([0.0, 1.0], Category::One), ([0.0, -1.0], Category::Two)]);
        let out = train_perceptron(&r, &PerceptronConfig::default()).unwrap();
        assert!(out.converged);
        assert_eq!(out.iterations, 1);
        assert_eq!(out.a_final, vec![0.0, 0.0, 1.0]);
        assert_eq!(out.criterion_history, vec![0.0]);
        assert_eq!(out.training_accuracy, 1.0);
    }

    #[test]
    fn single_update() {
        let r = rows(&[([1.0, 0.0], Category::One), ([-1.0, 0.0], Category::Two)]);
        let cfg = PerceptronConfig {
            eta: 1.0,
            theta: 0.0,
            a_init: vec![0.0, 0.0, 0.0],
            max_iter: 10,
        };
        let out = train_perceptron(&r, &cfg).unwrap();
        // both rows sit on the boundary, step = [1,1,0] + [-1,1,0]
        assert_eq!(out.criterion_history, vec![0.0, 0.0]);
        assert_eq!(out.a_final, vec![0.0, 2.0, 0.0]);
        assert!(out.converged);
    }

    #[test]
    fn xor_never_converges() {
        let r = rows(&[
            ([-1.0, 1.0], Category::One),
            ([1.0, -1.0], Category::One),
            ([-1.0, -1.0], Category::Two),
            ([1.0, 1.0], Category::Two),
        ]);
        let out = train_perceptron(&r, &PerceptronConfig::default().with_max_iter(50)).unwrap();
        assert!(!out.converged);
        assert_eq!(out.iterations, 50);
        assert_eq!(out.criterion_history.len(), 50);
        assert!(out.criterion_history.iter().all(|&j| j >= 0.0));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            train_perceptron(&[], &PerceptronConfig::default()),
            Err(Error::EmptyInput)
        ));
        let r = vec![
            AugmentedRow::new(vec![1.0, 2.0, 3.0]).unwrap(),
            AugmentedRow::new(vec![1.0, 2.0]).unwrap(),
        ];
        assert!(matches!(
            train_perceptron(&r, &PerceptronConfig::default()),
            Err(Error::DimensionMismatch { .. })
        ));
        let r = vec![AugmentedRow::new(vec![1.0, 2.0]).unwrap()];
        assert!(matches!(
            train_perceptron(&r, &PerceptronConfig::default()),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn linear_label_sign() {
        let a = [6.0, -5.0, 20.0 / 3.0];
        assert_eq!(
            linear_label(&a, &FeatureVector::from([5.0, 3.5])),
            Label::Category1
        );
        assert_eq!(
            linear_label(&a, &FeatureVector::from([6.5, 2.8])),
            Label::Category2
        );
        assert_eq!(
            linear_label(&[0.0, 1.0], &FeatureVector::from([0.0])),
            Label::Rejected
        );
    }
}
