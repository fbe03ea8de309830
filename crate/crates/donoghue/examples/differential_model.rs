//! Every closed form of the first-derivative model on [0, ell], checked
//! against the general machinery: Weyl and Livsic functions, the three
//! transfer functions, parameters, and channel coefficients.

use num_complex::Complex64;

use donoghue::differential::DifferentialModel;
use donoghue::herglotz::cayley_m_to_s;
use donoghue::lsystem::transfer_to_impedance;
use donoghue::Result;

fn main() -> Result<()> {
    let model = DifferentialModel::new(std::f64::consts::LN_2)?;
    let p = model.parameters();
    println!("interval length ell = ln 2");
    println!("  kappa       = {}", p.kappa);
    println!("  a           = {}", p.a);
    println!("  entropy     = {}", p.entropy);
    println!("  dissipation = {}", p.dissipation);

    let z = Complex64::new(0.8, 1.1);
    println!("\nat z = {z}:");
    println!("  M(z)                    = {}", model.weyl(z)?);
    println!("  s(z)                    = {}", model.livsic(z)?);
    println!("  cayley(M(z))            = {}", cayley_m_to_s(model.weyl(z)?)?);
    println!("  W for impedance M       = {}", model.transfer_weyl_system(z)?);
    println!("  W for impedance aM      = {}", model.transfer_scaled_system(z)?);
    println!("  W for impedance -1/(aM) = {}", model.transfer_reciprocal_system(z)?);

    let v = transfer_to_impedance(model.transfer_scaled_system(z)?)?;
    let direct = model.weyl(z)? * p.a;
    println!("\nduality check: V from W = {v}, a*M = {direct}");

    let minus_i = Complex64::new(0.0, -1.0);
    println!(
        "entropy two ways: -ln|W(-i)| = {}, ell = {}",
        -model.transfer_scaled_system(minus_i)?.norm().ln(),
        model.ell()
    );

    let c = model.channel_coefficients()?;
    println!("\nboundary-functional prefactors:");
    println!("  phi - psi carries {}", c.difference_prefactor);
    println!("  phi + psi carries {}", c.sum_prefactor);
    println!(
        "  channel vectors vs closed forms deviate by {:.3e}",
        c.max_deviation
    );
    Ok(())
}
