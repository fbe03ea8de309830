//! Closed forms for the first-derivative model operator on [0, ell].
//!
//! The symmetric operator i d/dt on [0, ell] with vanishing endpoint values
//! has explicit deficiency vectors, and every attached quantity comes in
//! closed form (writing u = exp(-i ell z)):
//!
//! ```text
//! s(z) = (e^ell - u) / (1 - e^ell u),
//! M(z) = i ((e^ell + 1)/(e^ell - 1)) (u - 1)/(u + 1),
//! ```
//!
//! with transfer functions (e^ell u - 1)/(e^ell - u) for the system whose
//! impedance is M, u for the system with impedance a M where
//! a = (e^ell - 1)/(e^ell + 1), and -u for the reciprocal system with
//! impedance -1/(a M). The attached parameters are kappa = exp(-ell),
//! entropy ell, dissipation 1 - exp(-2 ell).
//!
//! The boundary functionals at t = 0 and t = ell enter only through the
//! scalar prefactors linking {phi, psi} to the basis
//! {delta(t - ell) - delta(t), delta(t - ell) + delta(t)}; no function-space
//! machinery is evaluated.

use num_complex::Complex64;

use crate::bi_extension::{chi_of, CoeffVector};
use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Interval length of the model; all closed forms hang off it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DifferentialModel {
    ell: f64,
}

/// Scalar parameters of the scaled representing system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DifferentialParams {
    pub kappa: f64,
    pub a: f64,
    pub entropy: f64,
    pub dissipation: f64,
}

/// Prefactors tying the formal basis to the boundary functionals, plus the
/// channel vectors recomputed through the general construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelCoefficients {
    /// phi - psi = difference_prefactor * (delta(t - ell) - delta(t)).
    pub difference_prefactor: f64,
    /// phi + psi = sum_prefactor * (delta(t - ell) + delta(t)).
    pub sum_prefactor: f64,
    /// Channel vector of the unit-norming system: (phi - psi)/sqrt(2).
    pub chi_unit: CoeffVector,
    /// Same vector over the boundary basis: difference_prefactor/sqrt(2).
    pub chi_unit_boundary_prefactor: f64,
    /// Channel vector of the scaled system: sqrt(a/2) (phi - psi).
    pub chi_scaled: CoeffVector,
    /// Worst deviation of the two channel vectors from their closed forms.
    pub max_deviation: f64,
}

impl DifferentialModel {
    pub fn new(ell: f64) -> Result<Self> {
        if !(ell.is_finite() && ell > 0.0) {
            return Err(Error::ParameterOutOfRange(format!(
                "interval length ell = {ell} must be positive"
            )));
        }
        Ok(DifferentialModel { ell })
    }

    pub fn ell(&self) -> f64 {
        self.ell
    }

    /// exp(-i ell z), the common building block.
    fn u(&self, z: Complex64) -> Complex64 {
        (-I * self.ell * z).exp()
    }

    /// Livsic function (e^ell - u)/(1 - e^ell u). Contractive on the upper
    /// half-plane; boundary points are continuous limits of the closed form.
    pub fn livsic(&self, z: Complex64) -> Result<Complex64> {
        let e = self.ell.exp();
        let u = self.u(z);
        let denom = 1.0 - u * e;
        if denom == Complex64::new(0.0, 0.0) {
            return Err(Error::DegeneratePoint(z));
        }
        Ok((e - u) / denom)
    }

    /// Weyl function i ((e^ell + 1)/(e^ell - 1)) (u - 1)/(u + 1); lands in
    /// the Donoghue class with M(i) = i.
    pub fn weyl(&self, z: Complex64) -> Result<Complex64> {
        let e = self.ell.exp();
        let u = self.u(z);
        let denom = u + 1.0;
        if denom == Complex64::new(0.0, 0.0) {
            return Err(Error::DegeneratePoint(z));
        }
        Ok(I * ((e + 1.0) / (e - 1.0)) * (u - 1.0) / denom)
    }

    /// Transfer function of the system whose impedance is the Weyl function:
    /// (e^ell u - 1)/(e^ell - u).
    pub fn transfer_weyl_system(&self, z: Complex64) -> Result<Complex64> {
        let e = self.ell.exp();
        let u = self.u(z);
        let denom = e - u;
        if denom == Complex64::new(0.0, 0.0) {
            return Err(Error::DegeneratePoint(z));
        }
        Ok((u * e - 1.0) / denom)
    }

    /// Transfer function of the scaled system (impedance a M): plain u.
    pub fn transfer_scaled_system(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.u(z))
    }

    /// Transfer function of the reciprocal system (impedance -1/(a M)): -u.
    pub fn transfer_reciprocal_system(&self, z: Complex64) -> Result<Complex64> {
        Ok(-self.u(z))
    }

    /// Impedance of the scaled system in closed form: i (u - 1)/(u + 1).
    pub fn impedance_scaled_system(&self, z: Complex64) -> Result<Complex64> {
        let u = self.u(z);
        let denom = u + 1.0;
        if denom == Complex64::new(0.0, 0.0) {
            return Err(Error::DegeneratePoint(z));
        }
        Ok(I * (u - 1.0) / denom)
    }

    /// Impedance of the reciprocal system: i (u + 1)/(u - 1) = -1/V.
    pub fn impedance_reciprocal_system(&self, z: Complex64) -> Result<Complex64> {
        let u = self.u(z);
        let denom = u - 1.0;
        if denom == Complex64::new(0.0, 0.0) {
            return Err(Error::DegeneratePoint(z));
        }
        Ok(I * (u + 1.0) / denom)
    }

    /// kappa = exp(-ell), a = (e^ell - 1)/(e^ell + 1), entropy ell,
    /// dissipation 1 - exp(-2 ell).
    pub fn parameters(&self) -> DifferentialParams {
        let e = self.ell.exp();
        DifferentialParams {
            kappa: (-self.ell).exp(),
            a: (e - 1.0) / (e + 1.0),
            entropy: self.ell,
            dissipation: 1.0 - (-2.0 * self.ell).exp(),
        }
    }

    /// Boundary-basis prefactors and the channel vectors cross-checked
    /// against the general (kappa, U) construction.
    pub fn channel_coefficients(&self) -> Result<ChannelCoefficients> {
        let e = self.ell.exp();
        let params = self.parameters();
        let difference_prefactor = ((e + 1.0) / (e - 1.0)).sqrt();
        let sum_prefactor = ((e - 1.0) / (e + 1.0)).sqrt();

        let minus_one = Complex64::new(-1.0, 0.0);
        let chi_unit = chi_of(0.0, minus_one)?;
        let chi_scaled = chi_of(params.kappa, minus_one)?;

        let expected_unit = CoeffVector::difference(1.0 / std::f64::consts::SQRT_2);
        let expected_scaled = CoeffVector::difference((params.a / 2.0).sqrt());
        let max_deviation = chi_unit
            .max_abs_diff(&expected_unit)
            .max(chi_scaled.max_abs_diff(&expected_scaled));

        Ok(ChannelCoefficients {
            difference_prefactor,
            sum_prefactor,
            chi_unit,
            chi_unit_boundary_prefactor: difference_prefactor / std::f64::consts::SQRT_2,
            chi_scaled,
            max_deviation,
        })
    }
}
