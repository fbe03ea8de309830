//! The Cayley pair and the reference-extension rotation: M and s determine
//! each other, and rotating the reference by alpha acts as a Moebius map on
//! M but only as a phase on s.

use num_complex::Complex64;

use donoghue::herglotz::{
    alpha_transform, cayley_m_to_s, cayley_s_to_m, livsic_phase_rotation,
};
use donoghue::{Result, SpectralMeasure};

fn main() -> Result<()> {
    let sigma = SpectralMeasure::from_atoms(&[(0.3, 0.4), (-2.0, 1.5), (5.0, 2.0)])?;
    let z = Complex64::new(0.9, 1.4);
    let m = sigma.herglotz_transform(z)?;
    let s = cayley_m_to_s(m)?;

    println!("M(z) = {m}");
    println!("s(z) = {s}   (|s| = {} < 1)", s.norm());
    println!("back through the inverse Cayley map: {}", cayley_s_to_m(s)?);

    println!("\nrotation by alpha acts on M as a Moebius map, on s as a phase:");
    println!("{:>10}  {:>44}  {:>12}", "alpha", "cayley(M_alpha)", "deviation");
    for alpha in [
        0.0,
        std::f64::consts::FRAC_PI_6,
        std::f64::consts::FRAC_PI_4,
        std::f64::consts::FRAC_PI_2,
        3.0 * std::f64::consts::FRAC_PI_4,
    ] {
        let moebius = cayley_m_to_s(alpha_transform(m, alpha)?)?;
        let phase = livsic_phase_rotation(s, alpha);
        println!(
            "{alpha:>10.6}  {:>44.16}  {:>12.3e}",
            moebius,
            (moebius - phase).norm()
        );
    }

    // At alpha = pi/2 the Moebius map is the inversion M -> -1/M.
    let inverted = alpha_transform(m, std::f64::consts::FRAC_PI_2)?;
    println!("\nM_(pi/2) = {inverted}, -1/M = {}", -Complex64::new(1.0, 0.0) / m);
    Ok(())
}
