//! The entropy function S(a) on the positive half-axis and its geometry.
//!
//! ```text
//! S(a) = ln |(a + 1)/(a - 1)|,      D(a) = 4a / (1 + a)^2,
//! ```
//!
//! both invariant under the involution a -> 1/a, with S infinite exactly at
//! a = 1. The differential of S has simple poles at a = +/-1 with residues
//! -/+1; `residue_probe` recovers them from the displayed partial-fraction
//! derivative
//!
//! ```text
//! S'(a) = 1/(a + 1) - 1/(a - 1)
//! ```
//!
//! by Richardson extrapolation of (a - a0) S'(a) as a -> a0, keeping the
//! claim testable without a contour integrator.

use crate::error::{Error, Result};
use crate::lsystem::CEntropy;

/// One row of the entropy/dissipation curve away from the pole a = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyCurvePoint {
    pub a: f64,
    pub entropy: f64,
    pub dissipation: f64,
}

impl EntropyCurvePoint {
    pub fn new(a: f64) -> Result<Self> {
        match entropy_of_a(a)? {
            CEntropy::Finite(entropy) => Ok(EntropyCurvePoint {
                a,
                entropy,
                dissipation: dissipation_of_a(a)?,
            }),
            CEntropy::Infinite => Err(Error::ParameterOutOfRange(
                "curve points require a != 1".into(),
            )),
        }
    }
}

/// S(a): ln((1+a)/(1-a)) below 1, infinite at 1, ln((a+1)/(a-1)) above 1.
pub fn entropy_of_a(a: f64) -> Result<CEntropy> {
    ensure_positive(a)?;
    if a == 1.0 {
        Ok(CEntropy::Infinite)
    } else if a < 1.0 {
        Ok(CEntropy::Finite(((1.0 + a) / (1.0 - a)).ln()))
    } else {
        Ok(CEntropy::Finite(((a + 1.0) / (a - 1.0)).ln()))
    }
}

/// D(a) = 4a/(1+a)^2, in (0, 1] with the maximum 1 exactly at a = 1.
pub fn dissipation_of_a(a: f64) -> Result<f64> {
    ensure_positive(a)?;
    Ok(4.0 * a / ((1.0 + a) * (1.0 + a)))
}

/// derivative of S from the partial-fraction form, defined off a = +/-1.
pub fn entropy_derivative(a: f64) -> f64 {
    1.0 / (a + 1.0) - 1.0 / (a - 1.0)
}

/// Which simple pole of dS to probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pole {
    PlusOne,
    MinusOne,
}

impl Pole {
    fn location(self) -> f64 {
        match self {
            Pole::PlusOne => 1.0,
            Pole::MinusOne => -1.0,
        }
    }
}

/// Residue estimate of dS at the chosen pole: evaluates (a - a0) S'(a) at
/// a = a0 + h for each offset and extrapolates polynomially to h = 0.
/// Converges to -1 at a0 = +1 and +1 at a0 = -1.
pub fn residue_probe(pole: Pole, offsets: &[f64]) -> Result<f64> {
    if offsets.is_empty() {
        return Err(Error::ParameterOutOfRange(
            "residue probe needs at least one offset".into(),
        ));
    }
    if !offsets.iter().all(|h| h.is_finite() && *h > 0.0 && *h <= 0.1) {
        return Err(Error::ParameterOutOfRange(
            "offsets must lie in (0, 0.1]".into(),
        ));
    }
    if !offsets.windows(2).all(|w| w[1] < w[0]) {
        return Err(Error::ParameterOutOfRange(
            "offsets must be strictly decreasing".into(),
        ));
    }
    let a0 = pole.location();
    let samples: Vec<f64> = offsets
        .iter()
        .map(|&h| h * entropy_derivative(a0 + h))
        .collect();
    Ok(neville_at_zero(offsets, &samples))
}

/// Neville's algorithm evaluating the interpolating polynomial at h = 0.
fn neville_at_zero(xs: &[f64], ys: &[f64]) -> f64 {
    let mut table = ys.to_vec();
    let n = table.len();
    for level in 1..n {
        for i in 0..n - level {
            let (x_lo, x_hi) = (xs[i], xs[i + level]);
            table[i] = ((0.0 - x_hi) * table[i] + (x_lo - 0.0) * table[i + 1]) / (x_lo - x_hi);
        }
    }
    table[0]
}

/// The pair of norming constants sharing one dissipation value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatchingRoots {
    /// Distinct roots with product 1; `small` < 1 < `large`.
    Pair { small: f64, large: f64 },
    /// d = 1 collapses the pair onto the double root a = 1.
    Double { a: f64 },
}

/// Solve 4a/(1+a)^2 = d on the positive axis. For d in (0, 1) the two roots
/// are (2 - d +/- 2 sqrt(1 - d))/d; the small one is computed as the
/// reciprocal of the large one, which Vieta makes exact up to rounding.
pub fn matching_pair(d_target: f64) -> Result<MatchingRoots> {
    if !(d_target.is_finite() && d_target > 0.0 && d_target <= 1.0) {
        return Err(Error::ParameterOutOfRange(format!(
            "dissipation target {d_target} must lie in (0, 1]"
        )));
    }
    if d_target == 1.0 {
        return Ok(MatchingRoots::Double { a: 1.0 });
    }
    let large = (2.0 - d_target + 2.0 * (1.0 - d_target).sqrt()) / d_target;
    Ok(MatchingRoots::Pair {
        small: 1.0 / large,
        large,
    })
}

fn ensure_positive(a: f64) -> Result<()> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::ParameterOutOfRange(format!(
            "a = {a} must be positive"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn entropy_fixed_values() {
        let s = entropy_of_a(1.0 / 3.0).unwrap().as_finite().unwrap();
        assert!((s - std::f64::consts::LN_2).abs() < 1e-15);
        assert!(entropy_of_a(1.0).unwrap().is_infinite());
        let s = entropy_of_a(3.0).unwrap().as_finite().unwrap();
        assert!((s - std::f64::consts::LN_2).abs() < 1e-15);
        assert!(entropy_of_a(0.0).is_err());
        assert!(entropy_of_a(-1.0).is_err());
    }

    #[test]
    fn dissipation_fixed_values() {
        assert_eq!(dissipation_of_a(1.0).unwrap(), 1.0);
        assert!((dissipation_of_a(1.0 / 3.0).unwrap() - 0.75).abs() < 1e-15);
        assert!((dissipation_of_a(3.0).unwrap() - 0.75).abs() < 1e-15);
        assert!(dissipation_of_a(0.0).is_err());
    }

    #[test]
    fn residue_probe_recovers_both_poles() {
        let offsets = [1e-2, 1e-3, 1e-4];
        let plus = residue_probe(Pole::PlusOne, &offsets).unwrap();
        assert!((plus + 1.0).abs() < 1e-6, "residue at +1: {plus}");
        let minus = residue_probe(Pole::MinusOne, &offsets).unwrap();
        assert!((minus - 1.0).abs() < 1e-6, "residue at -1: {minus}");

        // Single offset carries the first-order truncation error.
        let rough = residue_probe(Pole::PlusOne, &[1e-2]).unwrap();
        assert!((rough + 1.0).abs() < 1e-2);
    }

    #[test]
    fn residue_probe_validates_offsets() {
        assert!(residue_probe(Pole::PlusOne, &[]).is_err());
        assert!(residue_probe(Pole::PlusOne, &[0.2]).is_err());
        assert!(residue_probe(Pole::PlusOne, &[1e-3, 1e-2]).is_err());
        assert!(residue_probe(Pole::PlusOne, &[-1e-3]).is_err());
    }

    #[test]
    fn matching_pair_fixed_values() {
        match matching_pair(0.75).unwrap() {
            MatchingRoots::Pair { small, large } => {
                assert!((small - 1.0 / 3.0).abs() < 1e-12);
                assert!((large - 3.0).abs() < 1e-12);
            }
            MatchingRoots::Double { .. } => panic!("expected a pair"),
        }
        assert_eq!(matching_pair(1.0).unwrap(), MatchingRoots::Double { a: 1.0 });
        assert!(matching_pair(0.0).is_err());
        assert!(matching_pair(1.5).is_err());

        // From the coupling example: d = 35/36.
        if let MatchingRoots::Pair { small, large } = matching_pair(35.0 / 36.0).unwrap() {
            assert!((small * large - 1.0).abs() < 1e-12);
            assert!((dissipation_of_a(small).unwrap() - 35.0 / 36.0).abs() < 1e-12);
            assert!((dissipation_of_a(large).unwrap() - 35.0 / 36.0).abs() < 1e-12);
        } else {
            panic!("expected a pair");
        }
    }

    #[test]
    fn involution_invariance_on_log_grid() {
        for k in 0..100 {
            let a = 10f64.powf(-2.0 + 4.0 * k as f64 / 99.0);
            if a == 1.0 {
                continue;
            }
            let s = entropy_of_a(a).unwrap().as_finite().unwrap();
            let s_inv = entropy_of_a(1.0 / a).unwrap().as_finite().unwrap();
            assert!((s - s_inv).abs() < 1e-12, "a = {a}");
            let d = dissipation_of_a(a).unwrap();
            let d_inv = dissipation_of_a(1.0 / a).unwrap();
            assert!((d - d_inv).abs() < 1e-12, "a = {a}");
        }
    }

    #[test]
    fn monotonicity_on_sampled_grids() {
        let mut prev = f64::NEG_INFINITY;
        for k in 1..100 {
            let a = k as f64 / 100.0;
            let s = entropy_of_a(a).unwrap().as_finite().unwrap();
            assert!(s > prev, "not increasing at a = {a}");
            prev = s;
        }
        let mut prev = f64::INFINITY;
        for k in 1..100 {
            let a = 1.0 + k as f64 / 10.0;
            let s = entropy_of_a(a).unwrap().as_finite().unwrap();
            assert!(s < prev, "not decreasing at a = {a}");
            prev = s;
        }
    }

    #[test]
    fn kappa_bridge() {
        for k in 1..=99 {
            let a = k as f64 / 50.0; // spans both sides of 1
            if a == 1.0 {
                continue;
            }
            let kappa = if a < 1.0 {
                (1.0 - a) / (1.0 + a)
            } else {
                (a - 1.0) / (1.0 + a)
            };
            let d = dissipation_of_a(a).unwrap();
            assert!((d - (1.0 - kappa * kappa)).abs() < 1e-12, "a = {a}");
        }
    }

    #[test]
    fn consistency_with_lsystem_records() {
        use crate::herglotz::HerglotzMap;
        use crate::lsystem::{c_entropy, dissipation_coefficient, represent};
        use crate::measures::SpectralMeasure;

        let m = HerglotzMap::from_measure(SpectralMeasure::dirac(0.0));
        for &a in &[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.1, 2.0, 5.0, 10.0] {
            let rec = represent(a, 0.0, &m).unwrap();
            let s_curve = entropy_of_a(a).unwrap().as_finite().unwrap();
            let s_system = c_entropy(&rec).as_finite().unwrap();
            assert!((s_curve - s_system).abs() < 1e-12, "a = {a}");
            let d_curve = dissipation_of_a(a).unwrap();
            assert!((d_curve - dissipation_coefficient(&rec)).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn matching_pair_product_is_one(d in 1e-6..0.999999f64) {
            if let MatchingRoots::Pair { small, large } = matching_pair(d).unwrap() {
                prop_assert!((small * large - 1.0).abs() < 1e-12);
                prop_assert!(small < 1.0 && large > 1.0);
                prop_assert!((dissipation_of_a(large).unwrap() - d).abs() < 1e-9);
            } else {
                prop_assert!(false, "expected a pair");
            }
        }

        #[test]
        fn involution_invariance(a in 1e-3..1e3f64) {
            prop_assume!(a != 1.0);
            let s = entropy_of_a(a).unwrap().as_finite().unwrap();
            let s_inv = entropy_of_a(1.0 / a).unwrap().as_finite().unwrap();
            prop_assert!((s - s_inv).abs() < 1e-11 * (1.0 + s.abs()));
        }
    }
}
