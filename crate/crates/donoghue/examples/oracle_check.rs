//! The built-in oracle: the Weyl function computed from the model operator's
//! resolvent must agree with the Herglotz integral transform of the same
//! atoms, two code paths that share nothing but the data.

use num_complex::Complex64;

use donoghue::model_triple::ModelTriple;
use donoghue::Result;

fn main() -> Result<()> {
    let model = ModelTriple::new(
        vec![0.5, -1.3, 2.2, -3.7, 4.1, 0.05, -0.9, 6.0],
        vec![0.4, 0.8, 1.1, 0.6, 0.9, 0.3, 1.4, 0.7],
        0.0,
    )?;
    println!("model: {} atoms, norming constant a = {:.12}\n", model.len(), model.norming_constant());

    println!("{:>22}  {:>44}  {:>10}", "z", "a * M(z) (resolvent route)", "deviation");
    let mut worst = 0.0f64;
    for k in 0..8 {
        let z = Complex64::new(-3.0 + 0.9 * k as f64, 0.4 + 0.45 * k as f64);
        let cmp = model.oracle_compare(z)?;
        println!("{z:>22.4}  {:>44.16}  {:>10.2e}", cmp.scaled_weyl, cmp.abs_dev);
        worst = worst.max(cmp.abs_dev);
    }
    println!("\nworst deviation between the two routes: {worst:.3e}");

    // The Livsic function from deficiency pairings doubles the check through
    // the Cayley transform once the model is Donoghue-normalized.
    let normalized = model.rescaled_to_norming(1.0)?;
    let z = Complex64::new(0.7, 1.9);
    let direct = normalized.livsic_from_deficiency(z)?;
    let via_cayley =
        donoghue::herglotz::cayley_m_to_s(normalized.weyl_from_resolvent(z)?)?;
    println!("Livsic at {z}: pairing route {direct:.16}, Cayley route {via_cayley:.16}");
    Ok(())
}
