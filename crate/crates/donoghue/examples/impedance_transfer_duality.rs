//! The scalar impedance/transfer duality W = (1 - iV)/(1 + iV) and how the
//! von Neumann parameter shows up in |W| at -i and +i.

use num_complex::Complex64;

use donoghue::lsystem::{
    c_entropy, entropy_via_transfer, entropy_via_transfer_at_i, impedance_to_transfer, represent,
    transfer_to_impedance,
};
use donoghue::{HerglotzMap, Result, SpectralMeasure};

fn main() -> Result<()> {
    // Round trip at an arbitrary value.
    let v = Complex64::new(0.4, 1.7);
    let w = impedance_to_transfer(v)?;
    println!("V = {v}  ->  W = {w}  ->  V = {}", transfer_to_impedance(w)?);

    // For a representing system with impedance a*M the transfer modulus at
    // -i is kappa and at +i is 1/kappa.
    let reference = HerglotzMap::from_measure(
        SpectralMeasure::from_atoms(&[(1.0, 1.0), (-1.0, 1.0)])?,
    );
    println!("\n{:>6}  {:>10}  {:>14}  {:>14}", "a", "kappa", "|W(-i)|", "1/|W(i)|");
    for a in [0.2, 0.5, 2.0, 5.0] {
        let rec = represent(a, 0.0, &reference)?;
        let w_minus = impedance_to_transfer(rec.impedance.eval(Complex64::new(0.0, -1.0))?)?;
        let w_plus = impedance_to_transfer(rec.impedance.eval(Complex64::new(0.0, 1.0))?)?;
        println!(
            "{a:>6}  {:>10.6}  {:>14.10}  {:>14.10}",
            rec.kappa,
            w_minus.norm(),
            1.0 / w_plus.norm()
        );
    }

    // Both transfer routes reproduce -ln kappa.
    let rec = represent(0.25, 0.0, &reference)?;
    println!("\nentropy three ways for a = 0.25:");
    println!("  -ln kappa            = {}", c_entropy(&rec));
    println!("  -ln|W(-i)|           = {}", entropy_via_transfer(&rec)?);
    println!("  +ln|W(+i)|           = {}", entropy_via_transfer_at_i(&rec)?);
    Ok(())
}
