//! Exact coefficient algebra over the formal basis {phi, psi}.
//!
//! Channel vectors and rank-one state-space perturbations are represented by
//! their complex coefficients over phi and psi; domain-side vectors by their
//! coefficients over the deficiency pair g_plus, g_minus. All brackets
//! ( . , u) are conjugate-linear in u, so expanding ( . , c phi) contributes
//! conj(c) to a coefficient matrix. The pairing between the two sides is
//!
//! ```text
//! (g_plus, phi) = 1,  (g_plus, psi) = 0,  (g_minus, phi) = 0,  (g_minus, psi) = 1.
//! ```
//!
//! For admissible parameters (kappa in [0,1), |U| = 1) the module builds the
//! channel vector
//!
//! ```text
//! chi = ((kappa^2 + 1 + 2 kappa U) phi + (kappa^2 U + 2 kappa + U) psi)
//!       / (sqrt(2) |1 + kappa U| sqrt(1 - kappa^2)),
//! ```
//!
//! the state-space perturbation c ( . , kappa phi + psi) chi with
//! c = sqrt(2) i (kappa + conj U) / (|1 + kappa U| sqrt(1 - kappa^2)), the
//! imaginary part ( . , chi) chi, and the real-part perturbation
//! -(i sqrt(1 - kappa^2) / (sqrt(2) |1 + kappa U|)) ( . , phi - U psi) chi,
//! and checks that the three recombine.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ConditioningWarning, Error, Result};

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Coefficients over the formal basis: c_phi * phi + c_psi * psi.
/// Plain binary floating point, no hidden normalization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoeffVector {
    #[serde(with = "crate::serde_complex::reim")]
    pub c_phi: Complex64,
    #[serde(with = "crate::serde_complex::reim")]
    pub c_psi: Complex64,
}

impl CoeffVector {
    pub const ZERO: CoeffVector = CoeffVector {
        c_phi: Complex64::new(0.0, 0.0),
        c_psi: Complex64::new(0.0, 0.0),
    };

    pub fn new(c_phi: Complex64, c_psi: Complex64) -> Self {
        CoeffVector { c_phi, c_psi }
    }

    /// Real multiples of phi - psi and phi + psi come up constantly in the
    /// specialized systems.
    pub fn difference(scale: f64) -> Self {
        CoeffVector::new(Complex64::new(scale, 0.0), Complex64::new(-scale, 0.0))
    }

    pub fn sum(scale: f64) -> Self {
        CoeffVector::new(Complex64::new(scale, 0.0), Complex64::new(scale, 0.0))
    }

    pub fn max_abs_diff(&self, other: &CoeffVector) -> f64 {
        (self.c_phi - other.c_phi)
            .norm()
            .max((self.c_psi - other.c_psi).norm())
    }

    pub fn scale(&self, k: Complex64) -> Self {
        CoeffVector::new(self.c_phi * k, self.c_psi * k)
    }
}

impl std::ops::Add for CoeffVector {
    type Output = CoeffVector;
    fn add(self, rhs: CoeffVector) -> CoeffVector {
        CoeffVector::new(self.c_phi + rhs.c_phi, self.c_psi + rhs.c_psi)
    }
}

impl std::ops::Sub for CoeffVector {
    type Output = CoeffVector;
    fn sub(self, rhs: CoeffVector) -> CoeffVector {
        CoeffVector::new(self.c_phi - rhs.c_phi, self.c_psi - rhs.c_psi)
    }
}

/// Domain-side vector: c_plus * g_plus + c_minus * g_minus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomVector {
    pub c_plus: Complex64,
    pub c_minus: Complex64,
}

impl DomVector {
    pub fn new(c_plus: Complex64, c_minus: Complex64) -> Self {
        DomVector { c_plus, c_minus }
    }

    /// Bracket against a coefficient vector under the fixed pairing rules;
    /// conjugate-linear in the second argument.
    pub fn pair(&self, u: &CoeffVector) -> Complex64 {
        self.c_plus * u.c_phi.conj() + self.c_minus * u.c_psi.conj()
    }
}

/// scalar * ( . , bra) ket added to the adjoint of the symmetric operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankOnePerturbation {
    pub scalar: Complex64,
    pub bra: CoeffVector,
    pub ket: CoeffVector,
}

impl RankOnePerturbation {
    pub fn new(scalar: Complex64, bra: CoeffVector, ket: CoeffVector) -> Self {
        RankOnePerturbation { scalar, bra, ket }
    }

    /// Canonical 2x2 coefficient matrix: M[j][k] = scalar conj(bra_j) ket_k,
    /// the antilinear-bra convention.
    pub fn to_coeffs(&self) -> OperatorCoeffs {
        let bra = [self.bra.c_phi, self.bra.c_psi];
        let ket = [self.ket.c_phi, self.ket.c_psi];
        let mut m = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (j, row) in m.iter_mut().enumerate() {
            for (k, entry) in row.iter_mut().enumerate() {
                *entry = self.scalar * bra[j].conj() * ket[k];
            }
        }
        OperatorCoeffs { m }
    }
}

/// Canonical form of an operator coefficient bundle:
/// sum over j,k of M[j][k] ( . , b_j) b_k with b_1 = phi, b_2 = psi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorCoeffs {
    m: [[Complex64; 2]; 2],
}

impl OperatorCoeffs {
    pub const ZERO: OperatorCoeffs = OperatorCoeffs {
        m: [[Complex64::new(0.0, 0.0); 2]; 2],
    };

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.m
    }

    /// Entries flattened row-major: M[0][0], M[0][1], M[1][0], M[1][1].
    pub fn row_major(&self) -> [Complex64; 4] {
        [self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]]
    }

    pub fn from_row_major(flat: [Complex64; 4]) -> Self {
        OperatorCoeffs {
            m: [[flat[0], flat[1]], [flat[2], flat[3]]],
        }
    }

    pub fn max_abs_diff(&self, other: &OperatorCoeffs) -> f64 {
        self.row_major()
            .iter()
            .zip(other.row_major())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let mut m = self.m;
        for row in &mut m {
            for entry in row {
                *entry *= k;
            }
        }
        OperatorCoeffs { m }
    }
}

impl std::ops::Add for OperatorCoeffs {
    type Output = OperatorCoeffs;
    fn add(self, rhs: OperatorCoeffs) -> OperatorCoeffs {
        let mut m = self.m;
        for (row, other) in m.iter_mut().zip(rhs.m.iter()) {
            for (entry, o) in row.iter_mut().zip(other.iter()) {
                *entry += o;
            }
        }
        OperatorCoeffs { m }
    }
}

// Test fixtures carry the matrix as 4 complex pairs in row-major order.
impl Serialize for OperatorCoeffs {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let flat: Vec<[f64; 2]> = self.row_major().iter().map(|c| [c.re, c.im]).collect();
        flat.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OperatorCoeffs {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let flat: Vec<[f64; 2]> = Vec::deserialize(deserializer)?;
        if flat.len() != 4 {
            return Err(D::Error::invalid_length(flat.len(), &"4 complex pairs"));
        }
        let c: Vec<Complex64> = flat.iter().map(|p| Complex64::new(p[0], p[1])).collect();
        Ok(OperatorCoeffs::from_row_major([c[0], c[1], c[2], c[3]]))
    }
}

/// Validated (kappa, U) pair parametrizing one (*)-extension, with the
/// conditioning warning attached when 1 - kappa^2 drops below threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtensionParams {
    kappa: f64,
    u: Complex64,
    warning: Option<ConditioningWarning>,
}

impl ExtensionParams {
    pub fn new(kappa: f64, u: Complex64) -> Result<Self> {
        if !(kappa.is_finite() && (0.0..1.0).contains(&kappa)) {
            return Err(Error::ParameterOutOfRange(format!(
                "kappa = {kappa} must lie in [0, 1)"
            )));
        }
        let modulus = u.norm();
        if (modulus - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnimodular(modulus));
        }
        let one_minus_kappa_sq = 1.0 - kappa * kappa;
        let warning = (one_minus_kappa_sq < ConditioningWarning::THRESHOLD)
            .then_some(ConditioningWarning { one_minus_kappa_sq });
        Ok(ExtensionParams { kappa, u, warning })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn u(&self) -> Complex64 {
        self.u
    }

    pub fn conditioning_warning(&self) -> Option<ConditioningWarning> {
        self.warning
    }

    /// 1 / (sqrt(2) |1 + kappa U| sqrt(1 - kappa^2)), the common denominator.
    fn common_factor(&self) -> f64 {
        1.0 / (SQRT_2 * self.abs_one_plus_ku() * (1.0 - self.kappa * self.kappa).sqrt())
    }

    fn abs_one_plus_ku(&self) -> f64 {
        (Complex64::new(1.0, 0.0) + self.u * self.kappa).norm()
    }

    /// The channel vector chi.
    pub fn channel_vector(&self) -> CoeffVector {
        let k = self.kappa;
        let u = self.u;
        let f = self.common_factor();
        CoeffVector::new(
            (u * (2.0 * k) + (k * k + 1.0)) * f,
            (u * (k * k) + u + 2.0 * k) * f,
        )
    }

    /// The rank-one perturbation making up the state-space operator on top of
    /// the adjoint: c ( . , kappa phi + psi) chi.
    pub fn state_space(&self) -> RankOnePerturbation {
        let k = self.kappa;
        let c = Complex64::new(0.0, SQRT_2) * (self.u.conj() + k)
            / (self.abs_one_plus_ku() * (1.0 - k * k).sqrt());
        RankOnePerturbation::new(
            c,
            CoeffVector::new(Complex64::new(k, 0.0), Complex64::new(1.0, 0.0)),
            self.channel_vector(),
        )
    }

    /// Imaginary part of the state-space operator: ( . , chi) chi.
    pub fn imaginary_part(&self) -> RankOnePerturbation {
        let chi = self.channel_vector();
        RankOnePerturbation::new(Complex64::new(1.0, 0.0), chi, chi)
    }

    /// Perturbation part of the real part of the state-space operator:
    /// -(i sqrt(1 - kappa^2) / (sqrt(2) |1 + kappa U|)) ( . , phi - U psi) chi.
    pub fn real_part(&self) -> RankOnePerturbation {
        let k = self.kappa;
        let c = Complex64::new(0.0, -1.0) * (1.0 - k * k).sqrt()
            / (SQRT_2 * self.abs_one_plus_ku());
        RankOnePerturbation::new(
            c,
            CoeffVector::new(Complex64::new(1.0, 0.0), -self.u),
            self.channel_vector(),
        )
    }

    /// Max-entry deviation of state_space from real_part + i * imaginary_part.
    pub fn decomposition_residual(&self) -> f64 {
        let recombined = self.real_part().to_coeffs()
            + self.imaginary_part().to_coeffs().scale(Complex64::new(0.0, 1.0));
        self.state_space().to_coeffs().max_abs_diff(&recombined)
    }
}

/// Channel vector for the pair (kappa, U).
pub fn chi_of(kappa: f64, u: Complex64) -> Result<CoeffVector> {
    Ok(ExtensionParams::new(kappa, u)?.channel_vector())
}

/// Canonical matrix of the state-space perturbation (the adjoint part is
/// implicit and excluded).
pub fn state_space_of(kappa: f64, u: Complex64) -> Result<OperatorCoeffs> {
    Ok(ExtensionParams::new(kappa, u)?.state_space().to_coeffs())
}

/// Canonical matrix of the imaginary part ( . , chi) chi.
pub fn im_of(kappa: f64, u: Complex64) -> Result<OperatorCoeffs> {
    Ok(ExtensionParams::new(kappa, u)?.imaginary_part().to_coeffs())
}

/// Canonical matrix of the real-part perturbation.
pub fn re_of(kappa: f64, u: Complex64) -> Result<OperatorCoeffs> {
    Ok(ExtensionParams::new(kappa, u)?.real_part().to_coeffs())
}

/// Deviation of the Re + i Im recombination from the state-space matrix.
pub fn decompose_check(kappa: f64, u: Complex64) -> Result<f64> {
    Ok(ExtensionParams::new(kappa, u)?.decomposition_residual())
}

/// Apply an operator coefficient bundle to a domain-side vector through the
/// pairing rules: sum over j,k of M[j][k] (v, b_j) b_k.
pub fn apply_to_dom(op: &OperatorCoeffs, v: &DomVector) -> CoeffVector {
    let pairings = [v.c_plus, v.c_minus]; // (v, phi), (v, psi)
    let m = op.entries();
    let mut out = CoeffVector::ZERO;
    for (j, &p) in pairings.iter().enumerate() {
        out.c_phi += m[j][0] * p;
        out.c_psi += m[j][1] * p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZERO: Complex64 = Complex64::new(0.0, 0.0);
    const ONE: Complex64 = Complex64::new(1.0, 0.0);
    const MINUS_ONE: Complex64 = Complex64::new(-1.0, 0.0);
    const I: Complex64 = Complex64::new(0.0, 1.0);

    fn unimodular(theta: f64) -> Complex64 {
        Complex64::from_polar(1.0, theta)
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            ExtensionParams::new(1.0, MINUS_ONE),
            Err(Error::ParameterOutOfRange(_))
        ));
        assert!(matches!(
            ExtensionParams::new(-0.1, MINUS_ONE),
            Err(Error::ParameterOutOfRange(_))
        ));
        assert!(matches!(
            ExtensionParams::new(0.5, Complex64::new(0.9, 0.0)),
            Err(Error::NotUnimodular(_))
        ));
    }

    #[test]
    fn conditioning_warning_attaches_near_kappa_one() {
        assert!(ExtensionParams::new(0.5, MINUS_ONE)
            .unwrap()
            .conditioning_warning()
            .is_none());
        let params = ExtensionParams::new(1.0 - 1e-10, MINUS_ONE).unwrap();
        let w = params.conditioning_warning().unwrap();
        assert!(w.one_minus_kappa_sq < ConditioningWarning::THRESHOLD);
    }

    #[test]
    fn chi_specializations() {
        // (0, -1): chi = (phi - psi)/sqrt(2).
        let chi = chi_of(0.0, MINUS_ONE).unwrap();
        assert!(chi.max_abs_diff(&CoeffVector::difference(1.0 / SQRT_2)) < 1e-15);

        // (kappa, -1): chi = sqrt((1-k)/(2+2k)) (phi - psi).
        for kappa in [0.1, 0.5, 0.9] {
            let chi = chi_of(kappa, MINUS_ONE).unwrap();
            let scale = ((1.0 - kappa) / (2.0 + 2.0 * kappa)).sqrt();
            assert!(chi.max_abs_diff(&CoeffVector::difference(scale)) < 1e-14);
        }

        // kappa = 1/2, U = -1: chi = (phi - psi)/sqrt(6).
        let chi = chi_of(0.5, MINUS_ONE).unwrap();
        assert!(chi.max_abs_diff(&CoeffVector::difference(1.0 / 6.0f64.sqrt())) < 1e-15);

        // kappa = (1-a)/(1+a), U = -1: chi = sqrt(a/2) (phi - psi).
        for a in [0.2, 1.0 / 3.0, 0.8] {
            let kappa = (1.0 - a) / (1.0 + a);
            let chi = chi_of(kappa, MINUS_ONE).unwrap();
            assert!(chi.max_abs_diff(&CoeffVector::difference((a / 2.0).sqrt())) < 1e-14);
        }
    }

    #[test]
    fn state_space_specializations() {
        // (0, -1): -i ( . , psi)(phi - psi).
        let got = state_space_of(0.0, MINUS_ONE).unwrap();
        let want =
            RankOnePerturbation::new(-I, CoeffVector::new(ZERO, ONE), CoeffVector::difference(1.0))
                .to_coeffs();
        assert!(got.max_abs_diff(&want) < 1e-15);

        // (0, -e^{2ia}): -i ( . , psi)(e^{-2ia} phi - psi).
        let alpha = 0.37;
        let got = state_space_of(0.0, -unimodular(2.0 * alpha)).unwrap();
        let want = RankOnePerturbation::new(
            -I,
            CoeffVector::new(ZERO, ONE),
            CoeffVector::new(unimodular(-2.0 * alpha), MINUS_ONE),
        )
        .to_coeffs();
        assert!(got.max_abs_diff(&want) < 1e-14);

        // ((1-a)/(1+a), -1): -(i/2) ( . , (1-a) phi + (1+a) psi)(phi - psi).
        let a = 0.4;
        let got = state_space_of((1.0 - a) / (1.0 + a), MINUS_ONE).unwrap();
        let want = RankOnePerturbation::new(
            -I / 2.0,
            CoeffVector::new(Complex64::new(1.0 - a, 0.0), Complex64::new(1.0 + a, 0.0)),
            CoeffVector::difference(1.0),
        )
        .to_coeffs();
        assert!(got.max_abs_diff(&want) < 1e-14);

        // ((a-1)/(1+a), +1): -(i/2) ( . , (1-a) phi - (1+a) psi)(phi + psi).
        let a = 2.5;
        let got = state_space_of((a - 1.0) / (1.0 + a), ONE).unwrap();
        let want = RankOnePerturbation::new(
            -I / 2.0,
            CoeffVector::new(Complex64::new(1.0 - a, 0.0), Complex64::new(-(1.0 + a), 0.0)),
            CoeffVector::sum(1.0),
        )
        .to_coeffs();
        assert!(got.max_abs_diff(&want) < 1e-14);
    }

    #[test]
    fn real_and_imaginary_specializations() {
        for kappa in [0.0, 0.3, 0.7] {
            // Im at U = -1: ((1-k)/(2(1+k))) ( . , phi - psi)(phi - psi).
            let got = im_of(kappa, MINUS_ONE).unwrap();
            let scale = (1.0 - kappa) / (2.0 * (1.0 + kappa));
            let want = RankOnePerturbation::new(
                Complex64::new(scale, 0.0),
                CoeffVector::difference(1.0),
                CoeffVector::difference(1.0),
            )
            .to_coeffs();
            assert!(got.max_abs_diff(&want) < 1e-14);

            // Re at U = -1 is kappa-independent: -(i/2) ( . , phi + psi)(phi - psi).
            let got = re_of(kappa, MINUS_ONE).unwrap();
            let want = RankOnePerturbation::new(
                -I / 2.0,
                CoeffVector::sum(1.0),
                CoeffVector::difference(1.0),
            )
            .to_coeffs();
            assert!(got.max_abs_diff(&want) < 1e-14);

            // Re at U = +1: -(i/2) ( . , phi - psi)(phi + psi).
            let got = re_of(kappa, ONE).unwrap();
            let want = RankOnePerturbation::new(
                -I / 2.0,
                CoeffVector::difference(1.0),
                CoeffVector::sum(1.0),
            )
            .to_coeffs();
            assert!(got.max_abs_diff(&want) < 1e-14);
        }
    }

    #[test]
    fn decomposition_residual_examples() {
        assert!(decompose_check(0.0, MINUS_ONE).unwrap() < 1e-12);
        assert!(decompose_check(0.3, unimodular(std::f64::consts::PI / 3.0)).unwrap() < 1e-12);
        // Documented precision degradation near kappa = 1.
        assert!(decompose_check(0.999999, MINUS_ONE).unwrap() < 1e-8);
    }

    #[test]
    fn apply_to_dom_examples() {
        // Quasi-kernel direction: (g_plus + U g_minus) annihilates the real part.
        let u = unimodular(1.1);
        let re = re_of(0.4, u).unwrap();
        let v = DomVector::new(ONE, u);
        let out = apply_to_dom(&re, &v);
        assert!(out.max_abs_diff(&CoeffVector::ZERO) < 1e-14);

        // Main-operator direction: (g_plus - kappa g_minus) annihilates the
        // state-space perturbation for real kappa.
        let kappa = 0.4;
        let ss = state_space_of(kappa, u).unwrap();
        let v = DomVector::new(ONE, Complex64::new(-kappa, 0.0));
        let out = apply_to_dom(&ss, &v);
        assert!(out.max_abs_diff(&CoeffVector::ZERO) < 1e-14);

        // g_plus against Im at (0, -1) gives (phi - psi)/2.
        let im = im_of(0.0, MINUS_ONE).unwrap();
        let out = apply_to_dom(&im, &DomVector::new(ONE, ZERO));
        assert!(out.max_abs_diff(&CoeffVector::difference(0.5)) < 1e-15);
    }

    #[test]
    fn annihilation_is_exact_on_the_real_unimodular_axis() {
        for u in [ONE, MINUS_ONE] {
            // Quasi-kernel cancellation is sign-exact at U = +/-1 for any kappa.
            for kappa in [0.0, 0.25, 0.5, 0.9] {
                let re = re_of(kappa, u).unwrap();
                let out = apply_to_dom(&re, &DomVector::new(ONE, u));
                assert_eq!(out, CoeffVector::ZERO);
            }
            // The main-operator cancellation commutes with rounding only when
            // scaling by kappa is exact, i.e. dyadic kappa.
            for kappa in [0.0, 0.25, 0.5] {
                let ss = state_space_of(kappa, u).unwrap();
                let out = apply_to_dom(&ss, &DomVector::new(ONE, Complex64::new(-kappa, 0.0)));
                assert_eq!(out, CoeffVector::ZERO);
            }
        }
    }

    #[test]
    fn imaginary_part_is_outer_square_of_chi() {
        for (kappa, theta) in [(0.0, std::f64::consts::PI), (0.3, 1.0), (0.8, 2.5)] {
            let u = unimodular(theta);
            let chi = chi_of(kappa, u).unwrap();
            let outer = RankOnePerturbation::new(ONE, chi, chi).to_coeffs();
            assert!(im_of(kappa, u).unwrap().max_abs_diff(&outer) < 1e-14);
        }
    }

    #[test]
    fn row_major_fixture_round_trip() {
        let op = state_space_of(0.3, unimodular(0.9)).unwrap();
        let json = serde_json::to_string(&op).unwrap();
        let back: OperatorCoeffs = serde_json::from_str(&json).unwrap();
        assert_eq!(op, back);
        // 4 complex pairs, row-major.
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 4);
    }
}
