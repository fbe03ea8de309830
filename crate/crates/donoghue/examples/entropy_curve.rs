//! Walk the entropy curve S(a) = ln|(a+1)/(a-1)| and its dissipation
//! companion D(a) = 4a/(1+a)^2, demonstrating the involution a -> 1/a and
//! the matching-pair solver.

use donoghue::entropy_geometry::{
    dissipation_of_a, entropy_of_a, matching_pair, residue_probe, MatchingRoots, Pole,
};
use donoghue::Result;

fn main() -> Result<()> {
    println!("{:>10}  {:>12}  {:>12}", "a", "S(a)", "D(a)");
    for k in 0..13 {
        let a = 10f64.powf(-1.5 + 3.0 * k as f64 / 12.0);
        let s = entropy_of_a(a)?;
        let d = dissipation_of_a(a)?;
        println!("{a:>10.5}  {s:>12.8}  {d:>12.8}");
    }

    println!("\ninvolution a -> 1/a:");
    for a in [0.2, 0.5, 2.0, 5.0] {
        let s = entropy_of_a(a)?.as_finite().unwrap();
        let s_inv = entropy_of_a(1.0 / a)?.as_finite().unwrap();
        println!("  S({a}) = {s:.12},  S({:.2}) = {s_inv:.12}", 1.0 / a);
    }

    println!("\npairs sharing one dissipation value:");
    for d in [0.5, 0.75, 35.0 / 36.0] {
        match matching_pair(d)? {
            MatchingRoots::Pair { small, large } => {
                println!("  D = {d:.6}: a = {small:.8} and {large:.8} (product {:.2})", small * large)
            }
            MatchingRoots::Double { a } => println!("  D = {d}: double root a = {a}"),
        }
    }

    println!("\nresidues of dS at the poles:");
    let offsets = [1e-2, 1e-3, 1e-4];
    println!("  at a = +1: {:+.9}", residue_probe(Pole::PlusOne, &offsets)?);
    println!("  at a = -1: {:+.9}", residue_probe(Pole::MinusOne, &offsets)?);
    Ok(())
}
