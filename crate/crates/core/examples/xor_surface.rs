//! R.R.E on the XOR corners: corner scores and the sign pattern of the
//! decision surface.
//!
//! cargo run --example xor_surface [-- out.csv]

use std::fs::File;

use rre::datasets::xor;
use rre::eval::{export_surface, has_zero_crossing, sign_regions};
use rre::{FeatureVector, GridSpec, RreConfig};

fn main() -> rre::Result<()> {
    let data = xor();
    let model = data.rre_model(RreConfig::default())?;
    for (p, c) in &data.points {
        let out = model.classify(p)?;
        println!(
            "{p:<10} target {:<3}  G = {:+.4}  -> {}",
            c.name(),
            out.score,
            out.label
        );
    }

    let grid = GridSpec::new(-1.5, 1.5, -1.5, 1.5, 61, 61)?;
    let values = model.evaluate_grid(&grid)?;
    let (pos, neg) = sign_regions(&values);
    println!(
        "{pos} positive and {neg} negative regions, boundary present: {}",
        has_zero_crossing(&values)
    );
    println!(
        "G at the centre: {:+.3e}",
        model.discriminant(&FeatureVector::from([0.0, 0.0]))?
    );

    if let Some(path) = std::env::args().nth(1) {
        export_surface(&values, &grid, File::create(&path)?)?;
        println!("surface written to {path}");
    }
    Ok(())
}
