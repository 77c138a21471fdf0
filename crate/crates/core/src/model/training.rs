use super::{
    build_model, Category, DecisionOutcome, FeatureVector, Label, RreModel, TrainingMultiset,
};
use crate::error::{Error, Result};

/// Position of an entry inside one of a model's multisets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EntryId {
    pub category: Category,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReinforceOutcome {
    pub model: RreModel,
    pub rounds_used: u32,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FilterOutcome {
    pub model: RreModel,
    /// Number of unit copies removed.
    pub removed: u64,
}

impl RreModel {
    /// Extra supervised training by duplication.
    ///
    /// Each round classifies every training entry and adds one copy of each
    /// misclassified entry to its own multiset. Stops at 100% training
    /// accuracy or after `max_rounds` rounds. Sensitivity is left untouched.
    pub fn reinforce_training(&self, max_rounds: u32) -> Result<ReinforceOutcome> {
        if max_rounds == 0 {
            return Err(Error::InvalidConfig("max_rounds must be at least 1".into()));
        }
        let mut model = self.clone();
        for round in 0..max_rounds {
            let misses = model.training_misses();
            if misses.is_empty() {
                return Ok(ReinforceOutcome {
                    model,
                    rounds_used: round,
                    converged: true,
                });
            }
            let (mut t1, mut t2, config) = model.into_parts();
            for id in misses {
                let set = match id.category {
                    Category::One => &mut t1,
                    Category::Two => &mut t2,
                };
                set.entries_mut()[id.index].multiplicity += 1;
            }
            model = build_model(t1, t2, config)?;
        }
        let converged = model.training_misses().is_empty();
        Ok(ReinforceOutcome {
            model,
            rounds_used: max_rounds,
            converged,
        })
    }

    /// Adds one copy of `x` to the multiset for `label`.
    ///
    /// With `p1 == p2`, enforcing a point that sits once in the opposite set
    /// cancels its Gaussian exactly; a second call trains it into `label`.
    pub fn enforce_label(&self, x: &FeatureVector, label: Category) -> Result<RreModel> {
        self.check_dim(x)?;
        let (mut t1, mut t2, config) = self.clone().into_parts();
        match label {
            Category::One => t1.add_one(x.clone()),
            Category::Two => t2.add_one(x.clone()),
        }
        build_model(t1, t2, config)
    }

    /// Classifies `x`, then grows the winning multiset by `x`. A rejected
    /// point leaves the model unchanged.
    pub fn incremental_classify(&self, x: &FeatureVector) -> Result<(DecisionOutcome, RreModel)> {
        let outcome = self.classify(x)?;
        let model = match outcome.label.category() {
            Some(c) => self.enforce_label(x, c)?,
            None => self.clone(),
        };
        Ok((outcome, model))
    }

    /// Entries in input order: category one first, then category two.
    pub fn default_order(&self) -> Vec<EntryId> {
        let ids =
            |category: Category, n: usize| (0..n).map(move |index| EntryId { category, index });
        ids(Category::One, self.t1.len())
            .chain(ids(Category::Two, self.t2.len()))
            .collect()
    }

    /// Removes training copies that are not needed to classify the original
    /// training points correctly, visiting entries in `order`.
    ///
    /// For each entry, copies are removed one at a time as long as every
    /// original training point (including the one being removed) still
    /// classifies correctly. A category is never emptied. The result depends
    /// on `order`.
    pub fn filter_redundant(&self, order: &[EntryId]) -> Result<FilterOutcome> {
        let misses = self.training_misses();
        if !misses.is_empty() {
            return Err(Error::FilterPreconditionFailed(misses.len()));
        }
        let originals: Vec<(FeatureVector, Category)> = self
            .training_points()
            .map(|(p, c)| (p.clone(), c))
            .collect();
        let mut counts = [
            self.t1
                .entries()
                .iter()
                .map(|e| e.multiplicity)
                .collect::<Vec<_>>(),
            self.t2
                .entries()
                .iter()
                .map(|e| e.multiplicity)
                .collect::<Vec<_>>(),
        ];
        let slot = |c: Category| match c {
            Category::One => 0,
            Category::Two => 1,
        };
        for id in order {
            let s = slot(id.category);
            if id.index >= counts[s].len() {
                return Err(Error::InvalidConfig(format!(
                    "filter order refers to missing entry {} of category {}",
                    id.index,
                    id.category.index()
                )));
            }
            loop {
                let total: u64 = counts[s].iter().map(|&m| u64::from(m)).sum();
                if counts[s][id.index] == 0 || total <= 1 {
                    break;
                }
                counts[s][id.index] -= 1;
                let candidate = self.reduced(&counts)?;
                let all_correct = originals.iter().all(|(p, c)| {
                    Label::from_score(candidate.discriminant(p).expect("same dimension")).is(*c)
                });
                if !all_correct {
                    counts[s][id.index] += 1;
                    break;
                }
            }
        }
        let model = self.reduced(&counts)?;
        let removed = self.n1() + self.n2() - model.n1() - model.n2();
        Ok(FilterOutcome { model, removed })
    }

    fn reduced(&self, counts: &[Vec<u32>; 2]) -> Result<RreModel> {
        let shrink = |set: &TrainingMultiset, m: &[u32]| {
            let mut out = TrainingMultiset::new();
            for (e, &k) in set.entries().iter().zip(m) {
                out.push(e.point.clone(), k);
            }
            out
        };
        build_model(
            shrink(&self.t1, &counts[0]),
            shrink(&self.t2, &counts[1]),
            self.config,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{RreConfig, VarianceFunction};

    fn xor() -> RreModel {
        build_model(
            TrainingMultiset::from_points([[-1.0, 1.0], [1.0, -1.0]]),
            TrainingMultiset::from_points([[-1.0, -1.0], [1.0, 1.0]]),
            RreConfig::default(),
        )
        .unwrap()
    }

    // Found by exhaustive search over 3+1 point layouts on the {0,1,2}^2
    // grid with f = 0.5: the lone category-two point is outvoted by its
    // three category-one neighbours.
    fn one_miss_model() -> RreModel {
        build_model(
            TrainingMultiset::from_points([[0.0, 0.0], [0.0, 1.0], [0.0, 2.0]]),
            TrainingMultiset::from_points([[1.0, 1.0]]),
            RreConfig::default().with_f(VarianceFunction::Constant(0.5)),
        )
        .unwrap()
    }

    /// Written out term by term, independent of the model code.
    fn g_oracle(t1: &[([f64; 2], f64)], t2: &[([f64; 2], f64)], c: f64, x: [f64; 2]) -> f64 {
        let bump = |p: [f64; 2]| (-c * ((x[0] - p[0]).powi(2) + (x[1] - p[1]).powi(2))).exp();
        t1.iter().map(|(p, m)| m * bump(*p)).sum::<f64>()
            - t2.iter().map(|(p, m)| m * bump(*p)).sum::<f64>()
    }

    #[test]
    fn reinforce_fixed_point() {
        let out = xor().reinforce_training(100).unwrap();
        assert!(out.converged);
        assert_eq!(out.rounds_used, 0);
        assert_eq!(out.model, xor());
    }

    #[test]
    fn reinforce_rejects_zero_rounds() {
        assert!(xor().reinforce_training(0).is_err());
    }

    #[test]
    fn one_miss_fixture_matches_oracle() {
        let t1 = [([0.0, 0.0], 1.0), ([0.0, 1.0], 1.0), ([0.0, 2.0], 1.0)];
        let t2 = [([1.0, 1.0], 1.0)];
        let scores: Vec<f64> = t1
            .iter()
            .chain(&t2)
            .map(|(p, _)| g_oracle(&t1, &t2, 0.5, *p))
            .collect();
        assert!(scores[..3].iter().all(|&g| g > 0.0));
        assert!(
            scores[3] > 0.0,
            "category-two point must start misclassified"
        );

        let m = one_miss_model();
        assert_eq!(
            m.training_misses(),
            vec![EntryId {
                category: Category::Two,
                index: 0
            }]
        );
    }

    #[test]
    fn reinforce_duplicates_missed_point() {
        let out = one_miss_model().reinforce_training(100).unwrap();
        assert!(out.converged);
        assert_eq!(out.rounds_used, 1);
        assert_eq!(out.model.t2().entries()[0].multiplicity, 2);
        assert_eq!(out.model.t1(), one_miss_model().t1());
        assert!(out.model.training_misses().is_empty());

        let t1 = [([0.0, 0.0], 1.0), ([0.0, 1.0], 1.0), ([0.0, 2.0], 1.0)];
        let t2 = [([1.0, 1.0], 2.0)];
        assert!(g_oracle(&t1, &t2, 0.5, [1.0, 1.0]) < 0.0);
    }

    #[test]
    fn reinforce_reports_cap() {
        // Same point in both sets with equal weight can never be resolved.
        let m = build_model(
            TrainingMultiset::from_points([[0.0, 0.0]]),
            TrainingMultiset::from_points([[0.0, 0.0]]),
            RreConfig::default(),
        )
        .unwrap();
        let out = m.reinforce_training(3).unwrap();
        assert!(!out.converged);
        assert_eq!(out.rounds_used, 3);
    }

    #[test]
    fn incremental_grows_winner() {
        let (out, grown) = xor()
            .incremental_classify(&FeatureVector::from([-0.9, 0.9]))
            .unwrap();
        assert_eq!(out.label, Label::Category1);
        assert!(out.score > 0.0);
        assert_eq!((grown.n1(), grown.n2()), (3, 2));
    }

    #[test]
    fn incremental_rejected_leaves_model() {
        let m = xor();
        let (out, grown) = m
            .incremental_classify(&FeatureVector::from([0.0, 0.0]))
            .unwrap();
        assert_eq!(out.label, Label::Rejected);
        assert_eq!(grown, m);
    }

    #[test]
    fn incremental_self_consistent() {
        let m = xor();
        for x in [[0.4, -0.7], [-0.2, -0.3], [0.9, 0.1]] {
            let x = FeatureVector::from(x);
            let (out, grown) = m.incremental_classify(&x).unwrap();
            assert_eq!(grown.classify(&x).unwrap().label, out.label);
        }
    }

    #[test]
    fn enforce_label_cost_orderings_on_isolated_point() {
        // x sits once in t1, far away from everything else.
        let x = FeatureVector::from([0.0, 0.0]);
        let cases = [
            ((1.0, 2.0), Label::Category1), // p1 < p2: the noisy point survives
            ((2.0, 1.0), Label::Category2), // p1 > p2: over-compensated
            ((1.0, 1.0), Label::Rejected),  // p1 = p2: exact cancellation
        ];
        for ((p1, p2), want) in cases {
            let m = build_model(
                TrainingMultiset::from_points([[0.0, 0.0], [100.0, 100.0]]),
                TrainingMultiset::from_points([[-100.0, 100.0]]),
                RreConfig::default()
                    .with_costs(p1, p2)
                    .with_f(VarianceFunction::Constant(1.0)),
            )
            .unwrap();
            let enforced = m.enforce_label(&x, Category::Two).unwrap();
            let out = enforced.classify(&x).unwrap();
            assert_eq!(out.label, want, "p1={p1} p2={p2}");
            assert_eq!(out.score, p2 - p1);
        }
    }

    #[test]
    fn enforce_twice_equals_single_training_in_new_category() {
        let cfg = RreConfig::default().with_f(VarianceFunction::Constant(2.0));
        let x = FeatureVector::from([0.5, 0.5]);
        let m = build_model(
            TrainingMultiset::from_points([[0.5, 0.5], [0.0, 1.0]]),
            TrainingMultiset::from_points([[1.0, 0.0], [1.0, 1.0]]),
            cfg,
        )
        .unwrap();
        let twice = m
            .enforce_label(&x, Category::Two)
            .unwrap()
            .enforce_label(&x, Category::Two)
            .unwrap();
        assert_eq!(twice.t2().multiplicity_of(&x), 2);
        let moved = build_model(
            TrainingMultiset::from_points([[0.0, 1.0]]),
            TrainingMultiset::from_points([[1.0, 0.0], [1.0, 1.0], [0.5, 0.5]]),
            cfg,
        )
        .unwrap();
        for i in 0..20 {
            for j in 0..20 {
                let p =
                    FeatureVector::from([i as f64 / 19.0 * 2.0 - 0.5, j as f64 / 19.0 * 2.0 - 0.5]);
                let a = twice.discriminant(&p).unwrap();
                let b = moved.discriminant(&p).unwrap();
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn filter_irreducible_pair() {
        let m = build_model(
            TrainingMultiset::from_points([[0.0, 0.0]]),
            TrainingMultiset::from_points([[10.0, 10.0]]),
            RreConfig::default(),
        )
        .unwrap();
        let out = m.filter_redundant(&m.default_order()).unwrap();
        assert_eq!(out.model, m);
        assert_eq!(out.removed, 0);
    }

    #[test]
    fn filter_drops_duplicate_copy() {
        let mut t1 = TrainingMultiset::new();
        t1.push(FeatureVector::from([0.0, 0.0]), 2);
        let m = build_model(
            t1,
            TrainingMultiset::from_points([[10.0, 10.0]]),
            RreConfig::default(),
        )
        .unwrap();
        let out = m.filter_redundant(&m.default_order()).unwrap();
        assert_eq!(out.model.t1().entries()[0].multiplicity, 1);
        assert_eq!(out.removed, 1);
    }

    #[test]
    fn filter_requires_clean_training() {
        let err = one_miss_model()
            .filter_redundant(&one_miss_model().default_order())
            .unwrap_err();
        assert!(matches!(err, Error::FilterPreconditionFailed(1)));
    }

    #[test]
    fn filter_order_matters() {
        // Two interchangeable category-one points: whichever is visited
        // first is the one that goes.
        let m = build_model(
            TrainingMultiset::from_points([[0.0, 0.0], [0.1, 0.0]]),
            TrainingMultiset::from_points([[10.0, 0.0]]),
            RreConfig::default().with_f(VarianceFunction::Constant(1.0)),
        )
        .unwrap();
        let forward = m.filter_redundant(&m.default_order()).unwrap().model;
        let mut rev = m.default_order();
        rev.reverse();
        let backward = m.filter_redundant(&rev).unwrap().model;
        assert_eq!(
            forward.t1().entries()[0].point,
            FeatureVector::from([0.1, 0.0])
        );
        assert_eq!(
            backward.t1().entries()[0].point,
            FeatureVector::from([0.0, 0.0])
        );
    }
}
