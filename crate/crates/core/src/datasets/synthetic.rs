use std::f64::consts::PI;

use crate::model::{Category, FeatureVector};

use super::{Dataset, Provenance, SUPPORT2, XOR};

/// The four XOR corners: category one at `(-1, 1)`, `(1, -1)`; category two
/// at `(-1, -1)`, `(1, 1)`.
pub fn xor() -> Dataset {
    let pts = [
        ([-1.0, 1.0], Category::One),
        ([1.0, -1.0], Category::One),
        ([-1.0, -1.0], Category::Two),
        ([1.0, 1.0], Category::Two),
    ];
    Dataset::new(
        XOR,
        pts.into_iter()
            .map(|(p, c)| (FeatureVector::from(p), c))
            .collect(),
        Provenance::BuiltinXor,
    )
}

/// Two concentric rings around `(10, 10)` with identical means.
///
/// Category one: 12 points on radius 2 starting at angle 0. Category two:
/// 12 points on radius 5 starting at angle pi/12.
pub fn generate_support2() -> Dataset {
    let ring = |radius: f64, phase: f64, category: Category| {
        (0..12).map(move |k| {
            let t = phase + 2.0 * PI * k as f64 / 12.0;
            (
                FeatureVector::from([10.0 + radius * t.cos(), 10.0 + radius * t.sin()]),
                category,
            )
        })
    };
    let points = ring(2.0, 0.0, Category::One)
        .chain(ring(5.0, PI / 12.0, Category::Two))
        .collect();
    Dataset::new(SUPPORT2, points, Provenance::SyntheticSupport2)
}
