//! 2-2-1 tanh network on XOR under each error convention.

use rre::baselines::{train_xor_nn, ErrorConvention, NnConfig};

fn main() -> rre::Result<()> {
    for convention in [
        ErrorConvention::HalfSum,
        ErrorConvention::Sum,
        ErrorConvention::Mean,
    ] {
        let r = train_xor_nn(&NnConfig {
            convention,
            ..NnConfig::default()
        })?;
        println!(
            "{:<8} epochs {:>5}  converged {}  outputs {:?}",
            convention.name(),
            r.epochs,
            r.converged,
            r.outputs.map(|z| (z * 1e4).round() / 1e4)
        );
    }
    Ok(())
}
