//! The coefficient algebra behind the state-space operators: channel
//! vectors, rank-one perturbations, the Re/Im decomposition, and the
//! annihilation directions on the domain side.

use num_complex::Complex64;

use donoghue::bi_extension::{
    apply_to_dom, decompose_check, re_of, state_space_of, CoeffVector, DomVector, ExtensionParams,
};
use donoghue::Result;

fn main() -> Result<()> {
    let u = Complex64::from_polar(1.0, 1.1);
    let params = ExtensionParams::new(0.4, u)?;

    let chi = params.channel_vector();
    println!("kappa = 0.4, U = exp(1.1 i)");
    println!("chi = {} phi + {} psi", chi.c_phi, chi.c_psi);

    println!("\nstate-space perturbation matrix (rows = bra basis, cols = ket basis):");
    for row in params.state_space().to_coeffs().entries() {
        println!("  {:>24}  {:>24}", format!("{:.6}", row[0]), format!("{:.6}", row[1]));
    }

    println!(
        "\nRe + i Im recombination residual: {:.3e}",
        params.decomposition_residual()
    );

    // Scan the admissible parameter square.
    let mut worst = 0.0f64;
    for i in 0..20 {
        let kappa = 0.95 * i as f64 / 19.0;
        for j in 0..20 {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / 20.0;
            worst = worst.max(decompose_check(kappa, Complex64::from_polar(1.0, theta))?);
        }
    }
    println!("worst recombination residual over a 20x20 grid: {worst:.3e}");

    // The quasi-kernel direction g_plus + U g_minus is annihilated by the
    // real part; g_plus - kappa g_minus by the full perturbation.
    let quasi = apply_to_dom(&re_of(0.4, u)?, &DomVector::new(Complex64::new(1.0, 0.0), u));
    println!(
        "\n|Re applied to (g_plus + U g_minus)|        = {:.3e}",
        quasi.max_abs_diff(&CoeffVector::ZERO)
    );
    let main = apply_to_dom(
        &state_space_of(0.4, u)?,
        &DomVector::new(Complex64::new(1.0, 0.0), Complex64::new(-0.4, 0.0)),
    );
    println!(
        "|perturbation applied to (g_plus - k g_minus)| = {:.3e}",
        main.max_abs_diff(&CoeffVector::ZERO)
    );

    // Approaching kappa = 1 the construction degrades and says so.
    let near = ExtensionParams::new(1.0 - 5e-10, Complex64::new(-1.0, 0.0))?;
    if let Some(w) = near.conditioning_warning() {
        println!("\nnear kappa = 1: conditioning warning, 1 - kappa^2 = {:.3e}", w.one_minus_kappa_sq);
    }
    Ok(())
}
