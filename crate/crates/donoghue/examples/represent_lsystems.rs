//! Build the unique representing L-system for a*M_alpha and read off its
//! parameter bundle, channel vector, entropy and dissipation.

use donoghue::lsystem::{c_entropy, dissipation_coefficient, represent};
use donoghue::{HerglotzMap, Result, SpectralMeasure};

fn main() -> Result<()> {
    let reference = HerglotzMap::from_measure(SpectralMeasure::dirac(0.0));

    for (a, alpha) in [
        (1.0, 0.0),
        (1.0 / 3.0, 0.0),
        (3.0, 0.0),
        (1.0, std::f64::consts::FRAC_PI_2),
    ] {
        let rec = represent(a, alpha, &reference)?;
        println!("a = {a}, alpha = {alpha}  [{}]", rec.provenance);
        println!("  kappa   = {}", rec.kappa);
        println!("  U       = {}", rec.u);
        println!(
            "  chi     = {} phi + {} psi",
            rec.channel.c_phi, rec.channel.c_psi
        );
        println!("  entropy = {}", c_entropy(&rec));
        println!("  dissip  = {}\n", dissipation_coefficient(&rec));
    }

    // The scaled branches refuse a rotated reference; the combination has no
    // representing system here.
    let err = represent(0.5, 0.7, &reference).unwrap_err();
    println!("a = 0.5 with alpha = 0.7 -> {err}");
    Ok(())
}
