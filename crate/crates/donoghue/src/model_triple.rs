//! Finite-dimensional model triple: the brute-force oracle.
//!
//! A [`ModelTriple`] is the diagonal multiplication operator on a discrete
//! weighted space, together with its symmetric restriction (functions of mean
//! zero against the measure) and the dissipative extension indexed by the von
//! Neumann parameter kappa. The Weyl function is evaluated straight from the
//! resolvent,
//!
//! ```text
//! M(z) = ((Bz + I)(B - zI)^{-1} g, g),   g = g_plus / ||g_plus||,
//! ```
//!
//! and the Livsic function from raw deficiency-vector pairings. Neither path
//! shares code with the `measures` transform; agreement between the two is
//! this module's reason to exist.
//!
//! Inner products are sesquilinear, conjugate-linear in the second slot.
//! The model is a finite surrogate: every identity checked here is algebraic
//! in the resolvent and holds verbatim at finite dimension.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::measures::SpectralMeasure;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Largest supported number of atoms; beyond this, use the quadrature path
/// in `measures`.
pub const MAX_ATOMS: usize = 4096;

/// Diagonal model operator data: distinct real eigenvalues, positive masses,
/// and the von Neumann parameter of the dissipative extension.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelTriple {
    lambdas: Vec<f64>,
    weights: Vec<f64>,
    kappa: f64,
}

/// Outcome of the dual-route comparison at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleComparison {
    /// Norming constant times the resolvent-route Weyl value.
    pub scaled_weyl: Complex64,
    /// Integral-transform route on the same atoms with Q = 0.
    pub herglotz: Complex64,
    /// Absolute difference between the two.
    pub abs_dev: f64,
}

impl ModelTriple {
    pub fn new(lambdas: Vec<f64>, weights: Vec<f64>, kappa: f64) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::EmptyMeasure);
        }
        if lambdas.len() != weights.len() {
            return Err(Error::DimensionMismatch {
                expected: lambdas.len(),
                got: weights.len(),
            });
        }
        if lambdas.len() > MAX_ATOMS {
            return Err(Error::ParameterOutOfRange(format!(
                "{} atoms exceed the cap of {MAX_ATOMS}",
                lambdas.len()
            )));
        }
        if !lambdas.iter().all(|l| l.is_finite()) {
            return Err(Error::ParameterOutOfRange("eigenvalues must be finite".into()));
        }
        if !weights.iter().all(|w| w.is_finite() && *w > 0.0) {
            return Err(Error::ParameterOutOfRange("weights must be positive".into()));
        }
        for (i, l) in lambdas.iter().enumerate() {
            if lambdas[i + 1..].contains(l) {
                return Err(Error::ParameterOutOfRange(format!(
                    "duplicate eigenvalue {l}"
                )));
            }
        }
        if !(0.0..1.0).contains(&kappa) {
            return Err(Error::ParameterOutOfRange(format!(
                "kappa = {kappa} must lie in [0, 1)"
            )));
        }
        Ok(ModelTriple {
            lambdas,
            weights,
            kappa,
        })
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one atom
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Raw deficiency vector at +i: g_plus(j) = 1/(lambda_j - i).
    pub fn deficiency_plus(&self) -> Vec<Complex64> {
        self.deficiency_at(I)
    }

    /// Raw deficiency vector at -i: g_minus(j) = 1/(lambda_j + i).
    pub fn deficiency_minus(&self) -> Vec<Complex64> {
        self.deficiency_at(-I)
    }

    /// Kernel vector of (B* - z): g_z(j) = 1/(lambda_j - z).
    pub fn deficiency_at(&self, z: Complex64) -> Vec<Complex64> {
        self.lambdas.iter().map(|&l| 1.0 / (l - z)).collect()
    }

    /// Weighted inner product, conjugate-linear in the second slot.
    pub fn inner(&self, f: &[Complex64], g: &[Complex64]) -> Complex64 {
        self.weights
            .iter()
            .zip(f.iter().zip(g.iter()))
            .map(|(&w, (&fv, &gv))| fv * gv.conj() * w)
            .sum()
    }

    /// Squared sigma-norm of the raw g_plus; equals the norming constant.
    pub fn norming_constant(&self) -> f64 {
        let g = self.deficiency_plus();
        self.inner(&g, &g).re
    }

    /// Weyl function straight from the resolvent sum with the deficiency
    /// vector normalized to 1. Lands in the Donoghue class: M(i) = i.
    pub fn weyl_from_resolvent(&self, z: Complex64) -> Result<Complex64> {
        if z.im == 0.0 {
            return Err(Error::RealAxisEvaluation(z));
        }
        let a = self.norming_constant();
        let mut acc = Complex64::new(0.0, 0.0);
        for (&l, &w) in self.lambdas.iter().zip(&self.weights) {
            let g = 1.0 / (Complex64::new(l, 0.0) - I);
            acc += (l * z + 1.0) / (l - z) * (g * g.conj()) * w;
        }
        Ok(acc / a)
    }

    /// Evaluate both routes at z and report the deviation.
    pub fn oracle_compare(&self, z: Complex64) -> Result<OracleComparison> {
        let a = self.norming_constant();
        let scaled_weyl = self.weyl_from_resolvent(z)? * a;
        let pairs: Vec<(f64, f64)> = self
            .lambdas
            .iter()
            .zip(&self.weights)
            .map(|(&l, &w)| (l, w))
            .collect();
        let herglotz = SpectralMeasure::from_atoms(&pairs)?.herglotz_transform(z)?;
        Ok(OracleComparison {
            scaled_weyl,
            herglotz,
            abs_dev: (scaled_weyl - herglotz).norm(),
        })
    }

    /// Livsic function from deficiency pairings,
    /// s(z) = ((z - i)/(z + i)) (g_z, g_minus)/(g_z, g_plus),
    /// defined for Donoghue-normalized models (norming constant 1).
    pub fn livsic_from_deficiency(&self, z: Complex64) -> Result<Complex64> {
        if z.im == 0.0 {
            return Err(Error::RealAxisEvaluation(z));
        }
        if z.im < 0.0 {
            return Err(Error::ParameterOutOfRange(
                "Livsic evaluation requires Im z > 0".into(),
            ));
        }
        let a = self.norming_constant();
        if (a - 1.0).abs() > 1e-9 {
            return Err(Error::NotDonoghueNormalized(a));
        }
        let g_z = self.deficiency_at(z);
        let num = self.inner(&g_z, &self.deficiency_minus());
        let den = self.inner(&g_z, &self.deficiency_plus());
        if den == Complex64::new(0.0, 0.0) {
            return Err(Error::DegenerateDeficiencyPairing);
        }
        Ok((z - I) / (z + I) * num / den)
    }

    /// The mean-zero functional cutting out the symmetric restriction's
    /// domain surrogate: sum of w_j f(j). Vanishes exactly on that domain;
    /// g_plus - g_minus spans the one-dimensional complement.
    pub fn domain_functional(&self, f: &[Complex64]) -> Result<Complex64> {
        if f.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: f.len(),
            });
        }
        Ok(self
            .weights
            .iter()
            .zip(f.iter())
            .map(|(&w, &fv)| fv * w)
            .sum())
    }

    /// Normalize weights so the norming constant becomes exactly the target.
    /// Handy for building Donoghue-normalized test models.
    pub fn rescaled_to_norming(&self, target: f64) -> Result<Self> {
        if !(target.is_finite() && target > 0.0) {
            return Err(Error::ParameterOutOfRange(format!(
                "target norming constant {target} must be positive"
            )));
        }
        let a = self.norming_constant();
        let weights = self.weights.iter().map(|w| w * target / a).collect();
        ModelTriple::new(self.lambdas.clone(), weights, self.kappa)
    }
}
