//! Classify Herglotz functions by their norming constant a = Im M(i):
//! the Donoghue class sits at a = 1, its generalized companions on either
//! side, with the von Neumann parameter kappa = |1 - a|/(1 + a).

use donoghue::herglotz::classify;
use donoghue::{HerglotzMap, Result, SpectralMeasure};

fn main() -> Result<()> {
    let base = SpectralMeasure::from_atoms(&[(1.0, 1.0), (-1.0, 1.0)])?;
    println!("measure: unit masses at +1 and -1 (norming constant 1)\n");

    println!("{:>8}  {:>12}  {:>12}  class", "scale", "a", "kappa");
    for scale in [0.2, 0.5, 1.0, 2.0, 5.0] {
        let f = HerglotzMap::scaled(scale, HerglotzMap::from_measure(base.clone()))?;
        let report = classify(&f)?;
        println!(
            "{:>8}  {:>12.8}  {:>12.8}  {}",
            scale, report.a, report.kappa, report.class_tag
        );
    }

    // A shifted measure (Q != 0) is rejected: classification requires a
    // centered function.
    let shifted = SpectralMeasure::new(
        base.atoms().to_vec(),
        None,
        0.25,
    )?;
    let err = classify(&HerglotzMap::from_measure(shifted)).unwrap_err();
    println!("\nshifted measure -> {err}");
    Ok(())
}
