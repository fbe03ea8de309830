//! Coupling calculus: entropies add, dissipations compose as
//! D1 + D2 - D1 D2, and (infinite entropy, unit dissipation) absorbs.

use donoghue::lsystem::{couple, EntropyReport};

fn main() {
    let half = EntropyReport::from_kappa(0.5);
    let third = EntropyReport::from_kappa(1.0 / 3.0);
    println!("report A (kappa = 1/2):  S = {}, D = {}", half.entropy, half.dissipation);
    println!("report B (kappa = 1/3):  S = {}, D = {}", third.entropy, third.dissipation);

    let joint = couple(&half, &third);
    println!(
        "A coupled with B:        S = {}, D = {} (ln 6 = {})",
        joint.entropy,
        joint.dissipation,
        6.0f64.ln()
    );
    println!("law residual |D - (1 - exp(-2S))| = {:.3e}", joint.law_residual());

    // Repeated self-coupling walks the entropy up linearly and the
    // dissipation toward 1.
    println!("\nself-coupling kappa = 1/2:");
    let mut acc = half;
    for n in 1..=6 {
        println!("  n = {n}: S = {:.10}, D = {:.10}", acc.entropy, acc.dissipation);
        acc = couple(&acc, &half);
    }

    // The absorbing element wins immediately.
    let absorbing = EntropyReport::from_kappa(0.0);
    let hit = couple(&half, &absorbing);
    println!("\ncoupling with the absorbing report: S = {}, D = {}", hit.entropy, hit.dissipation);
}
