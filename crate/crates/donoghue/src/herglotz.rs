//! Composable Herglotz-Nevanlinna function values.
//!
//! [`HerglotzMap`] is an immutable expression tree over four variants:
//! measure-backed transforms, registered closed forms, positive scalings and
//! Moebius rotations of the reference extension. Alongside it live the Cayley
//! pair with the contractive Livsic function,
//!
//! ```text
//! s = (M - i)/(M + i),        M = (1/i)(s + 1)/(s - 1),
//! ```
//!
//! the alpha-transformation law
//!
//! ```text
//! M_alpha = (cos(alpha) M - sin(alpha)) / (cos(alpha) + sin(alpha) M),
//! ```
//!
//! and the classifier that splits functions into the Donoghue class (norming
//! constant a = 1, equivalently M(i) = i) and its generalized companions.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::differential::DifferentialModel;
use crate::error::{Error, Result};
use crate::measures::SpectralMeasure;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Tolerance deciding the a = 1 boundary in [`classify`].
pub const CLASS_TOLERANCE: f64 = 1e-9;

/// Closed forms evaluable by identifier. Unknown identifiers are rejected at
/// construction time.
pub const CLOSED_FORM_DIFFERENTIAL_WEYL: &str = "differential_weyl";

/// Analytic map of the open upper half-plane into its closure, as an
/// immutable expression tree. Evaluation is pure and reentrant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum HerglotzMap {
    FromMeasure {
        measure: SpectralMeasure,
    },
    ClosedForm {
        id: String,
        params: BTreeMap<String, f64>,
    },
    Scaled {
        a: f64,
        inner: Box<HerglotzMap>,
    },
    AlphaRotated {
        alpha: f64,
        inner: Box<HerglotzMap>,
    },
}

impl HerglotzMap {
    pub fn from_measure(measure: SpectralMeasure) -> Self {
        HerglotzMap::FromMeasure { measure }
    }

    /// Closed form looked up by identifier; parameters are checked now.
    pub fn closed_form(id: &str, params: &[(&str, f64)]) -> Result<Self> {
        let params: BTreeMap<String, f64> =
            params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        match id {
            CLOSED_FORM_DIFFERENTIAL_WEYL => {
                let ell = params.get("ell").copied().ok_or_else(|| {
                    Error::ParameterOutOfRange("closed form requires parameter ell".into())
                })?;
                DifferentialModel::new(ell)?;
            }
            _ => return Err(Error::UnknownClosedForm(id.to_string())),
        }
        Ok(HerglotzMap::ClosedForm {
            id: id.to_string(),
            params,
        })
    }

    /// `a * inner` with a > 0. Scaled(1, f) evaluates identically to f.
    pub fn scaled(a: f64, inner: HerglotzMap) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::ParameterOutOfRange(format!(
                "scale a = {a} must be positive"
            )));
        }
        Ok(HerglotzMap::Scaled {
            a,
            inner: Box::new(inner),
        })
    }

    /// Moebius rotation of the reference extension; alpha is canonicalized
    /// into [0, pi). AlphaRotated(0, f) evaluates identically to f.
    pub fn alpha_rotated(alpha: f64, inner: HerglotzMap) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::ParameterOutOfRange("alpha must be finite".into()));
        }
        Ok(HerglotzMap::AlphaRotated {
            alpha: canonicalize_alpha(alpha),
            inner: Box::new(inner),
        })
    }

    /// Whether the leaf of this tree is a desk-scale measure standing in for
    /// the class proper (which asks for infinite measures). Closed forms
    /// describe genuine infinite-dimensional models and are not surrogates.
    pub fn is_measure_surrogate(&self) -> bool {
        match self {
            HerglotzMap::FromMeasure { .. } => true,
            HerglotzMap::ClosedForm { .. } => false,
            HerglotzMap::Scaled { inner, .. } | HerglotzMap::AlphaRotated { inner, .. } => {
                inner.is_measure_surrogate()
            }
        }
    }

    /// Evaluate at z off the real axis. The tree is defined on the upper
    /// half-plane; lower half-plane arguments go through the symmetry
    /// identity f(conj z) = conj f(z).
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if z.im == 0.0 {
            return Err(Error::RealAxisEvaluation(z));
        }
        if z.im < 0.0 {
            return Ok(self.eval(z.conj())?.conj());
        }
        match self {
            HerglotzMap::FromMeasure { measure } => measure.herglotz_transform(z),
            HerglotzMap::ClosedForm { id, params } => match id.as_str() {
                CLOSED_FORM_DIFFERENTIAL_WEYL => {
                    let ell = params.get("ell").copied().ok_or_else(|| {
                        Error::ParameterOutOfRange("closed form requires parameter ell".into())
                    })?;
                    DifferentialModel::new(ell)?.weyl(z)
                }
                _ => Err(Error::UnknownClosedForm(id.clone())),
            },
            HerglotzMap::Scaled { a, inner } => Ok(inner.eval(z)? * *a),
            HerglotzMap::AlphaRotated { alpha, inner } => alpha_transform(inner.eval(z)?, *alpha),
        }
    }
}

/// Contractive Cayley transform of a Herglotz map: s(z) = (f(z) - i)/(f(z) + i).
#[derive(Debug, Clone, PartialEq)]
pub struct LivsicMap {
    inner: HerglotzMap,
}

impl LivsicMap {
    pub fn new(inner: HerglotzMap) -> Self {
        LivsicMap { inner }
    }

    pub fn herglotz(&self) -> &HerglotzMap {
        &self.inner
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        cayley_m_to_s(self.inner.eval(z)?)
    }
}

/// Which of the three norming-constant classes a function falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassTag {
    /// a < 1.
    #[serde(rename = "M_kappa")]
    MKappa,
    /// a = 1 (the Donoghue class).
    #[serde(rename = "M_0")]
    M0,
    /// a > 1.
    #[serde(rename = "M_kappa_inv")]
    MKappaInv,
}

impl std::fmt::Display for ClassTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ClassTag::MKappa => "M_kappa",
            ClassTag::M0 => "M_0",
            ClassTag::MKappaInv => "M_kappa_inv",
        })
    }
}

/// Classification outcome: norming constant, von Neumann parameter, class.
/// `surrogate` records that the classified function was backed by a
/// desk-scale measure rather than an exact closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassReport {
    pub a: f64,
    pub kappa: f64,
    pub class_tag: ClassTag,
    pub surrogate: bool,
}

/// s = (m - i)/(m + i). Contracts the upper half-plane into the unit disk.
pub fn cayley_m_to_s(m_value: Complex64) -> Result<Complex64> {
    let denom = m_value + I;
    if denom == Complex64::new(0.0, 0.0) {
        return Err(Error::PoleAtCayleyCenter(m_value));
    }
    Ok((m_value - I) / denom)
}

/// m = (1/i)(s + 1)/(s - 1); exact inverse of [`cayley_m_to_s`] where both
/// are defined.
pub fn cayley_s_to_m(s_value: Complex64) -> Result<Complex64> {
    let denom = s_value - 1.0;
    if denom == Complex64::new(0.0, 0.0) {
        return Err(Error::PoleAtCayleyCenter(s_value));
    }
    Ok((s_value + 1.0) / denom / I)
}

/// The Weyl-function transformation law under rotation of the reference
/// extension: (cos(alpha) m - sin(alpha)) / (cos(alpha) + sin(alpha) m).
pub fn alpha_transform(m_value: Complex64, alpha: f64) -> Result<Complex64> {
    let (sin_a, cos_a) = alpha.sin_cos();
    let denom = cos_a + m_value * sin_a;
    if denom == Complex64::new(0.0, 0.0) {
        return Err(Error::MoebiusPole(m_value));
    }
    Ok((m_value * cos_a - sin_a) / denom)
}

/// Phase picked up by the Livsic function under the same rotation:
/// s goes to exp(-2 i alpha) s, matching [`alpha_transform`] through the
/// Cayley transform.
pub fn livsic_phase_rotation(s_value: Complex64, alpha: f64) -> Complex64 {
    Complex64::from_polar(1.0, -2.0 * alpha) * s_value
}

/// Reduce alpha modulo pi into [0, pi). The Moebius action is pi-periodic.
pub fn canonicalize_alpha(alpha: f64) -> f64 {
    let mut r = alpha.rem_euclid(std::f64::consts::PI);
    if r >= std::f64::consts::PI {
        r = 0.0;
    }
    r
}

/// Read off the norming constant a = Im f(i), the von Neumann parameter
/// kappa = |1 - a|/(1 + a), and the class tag. Requires a centered (Q = 0)
/// Herglotz function.
pub fn classify(f: &HerglotzMap) -> Result<ClassReport> {
    let v = f.eval(I)?;
    if v.re.abs() > CLASS_TOLERANCE {
        return Err(Error::NotCentered(v.re));
    }
    if v.im <= 0.0 {
        return Err(Error::NotHerglotz(v.im));
    }
    let a = v.im;
    let (kappa, class_tag) = if (a - 1.0).abs() <= CLASS_TOLERANCE {
        (0.0, ClassTag::M0)
    } else if a < 1.0 {
        ((1.0 - a) / (1.0 + a), ClassTag::MKappa)
    } else {
        ((a - 1.0) / (1.0 + a), ClassTag::MKappaInv)
    };
    Ok(ClassReport {
        a,
        kappa,
        class_tag,
        surrogate: f.is_measure_surrogate(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn cayley_fixed_values() {
        assert_eq!(cayley_m_to_s(I).unwrap(), Complex64::new(0.0, 0.0));
        assert!(close(
            cayley_m_to_s(I / 3.0).unwrap(),
            Complex64::new(-0.5, 0.0),
            1e-15
        ));
        assert!(close(
            cayley_m_to_s(Complex64::new(0.0, 0.0)).unwrap(),
            Complex64::new(-1.0, 0.0),
            1e-15
        ));
        assert!(close(cayley_s_to_m(Complex64::new(0.0, 0.0)).unwrap(), I, 1e-15));
        assert!(close(
            cayley_s_to_m(Complex64::new(-1.0, 0.0)).unwrap(),
            Complex64::new(0.0, 0.0),
            1e-15
        ));
        assert!(close(
            cayley_s_to_m(Complex64::new(-0.5, 0.0)).unwrap(),
            I / 3.0,
            1e-15
        ));
    }

    #[test]
    fn cayley_poles_are_structured_errors() {
        assert!(matches!(cayley_m_to_s(-I), Err(Error::PoleAtCayleyCenter(_))));
        assert!(matches!(
            cayley_s_to_m(Complex64::new(1.0, 0.0)),
            Err(Error::PoleAtCayleyCenter(_))
        ));
    }

    #[test]
    fn alpha_transform_identity_and_inversion() {
        let m = Complex64::new(0.7, 2.1);
        assert_eq!(alpha_transform(m, 0.0).unwrap(), m);
        let inv = alpha_transform(m, std::f64::consts::FRAC_PI_2).unwrap();
        assert!(close(inv, -Complex64::new(1.0, 0.0) / m, 1e-15));
    }

    #[test]
    fn alpha_transform_fixes_i() {
        let rotated = alpha_transform(I, std::f64::consts::FRAC_PI_4).unwrap();
        assert!(close(rotated, I, 1e-15));
    }

    #[test]
    fn phase_rotation_fixed_values() {
        let s = Complex64::new(0.3, -0.4);
        assert_eq!(livsic_phase_rotation(s, 0.0), s);
        assert!(close(
            livsic_phase_rotation(s, std::f64::consts::FRAC_PI_2),
            -s,
            1e-15
        ));
    }

    #[test]
    fn phase_law_matches_moebius_path() {
        // Both sides computed independently for m = i/3, alpha = pi/4.
        let m = I / 3.0;
        let alpha = std::f64::consts::FRAC_PI_4;
        let moebius = cayley_m_to_s(alpha_transform(m, alpha).unwrap()).unwrap();
        let phase = livsic_phase_rotation(cayley_m_to_s(m).unwrap(), alpha);
        assert!(close(moebius, phase, 1e-12));
    }

    #[test]
    fn classify_fixed_points() {
        let m0 = HerglotzMap::from_measure(SpectralMeasure::dirac(0.0));
        let r = classify(&m0).unwrap();
        assert_eq!(r.class_tag, ClassTag::M0);
        assert!((r.a - 1.0).abs() < 1e-12 && r.kappa == 0.0);
        assert!(r.surrogate);

        let small = HerglotzMap::scaled(1.0 / 3.0, m0.clone()).unwrap();
        let r = classify(&small).unwrap();
        assert_eq!(r.class_tag, ClassTag::MKappa);
        assert!((r.a - 1.0 / 3.0).abs() < 1e-12);
        assert!((r.kappa - 0.5).abs() < 1e-12);

        let large = HerglotzMap::scaled(3.0, m0).unwrap();
        let r = classify(&large).unwrap();
        assert_eq!(r.class_tag, ClassTag::MKappaInv);
        assert!((r.a - 3.0).abs() < 1e-12);
        assert!((r.kappa - 0.5).abs() < 1e-12);
    }

    #[test]
    fn classify_agrees_with_norming_constant_for_mixed_measures() {
        let density = crate::measures::DensityTable::new(
            (0..11).map(|k| -1.0 + 0.2 * k as f64).collect(),
            vec![0.3; 11],
        )
        .unwrap();
        let sigma = SpectralMeasure::new(
            vec![crate::measures::Atom { lambda: 2.0, weight: 0.5 }],
            Some(density),
            0.0,
        )
        .unwrap();
        let a = sigma.norming_constant().unwrap();
        let report = classify(&HerglotzMap::from_measure(sigma)).unwrap();
        assert!((report.a - a).abs() < 1e-12);
        assert_eq!(report.class_tag, ClassTag::MKappa);
    }

    #[test]
    fn classify_rejects_shifted_and_non_herglotz() {
        let shifted = HerglotzMap::from_measure(
            SpectralMeasure::new(
                vec![crate::measures::Atom { lambda: 0.0, weight: 1.0 }],
                None,
                0.25,
            )
            .unwrap(),
        );
        assert!(matches!(classify(&shifted), Err(Error::NotCentered(_))));

        let flat = HerglotzMap::from_measure(SpectralMeasure::empty(0.0).unwrap());
        assert!(matches!(classify(&flat), Err(Error::NotHerglotz(_))));
    }

    #[test]
    fn closed_forms_are_not_surrogates() {
        let f = HerglotzMap::closed_form(CLOSED_FORM_DIFFERENTIAL_WEYL, &[("ell", 1.0)]).unwrap();
        let r = classify(&f).unwrap();
        assert_eq!(r.class_tag, ClassTag::M0);
        assert!(!r.surrogate);
        let scaled = HerglotzMap::scaled(2.0, f).unwrap();
        assert!(!scaled.is_measure_surrogate());
    }

    #[test]
    fn closed_form_registry_rejects_unknown_ids() {
        assert!(matches!(
            HerglotzMap::closed_form("no_such_form", &[("ell", 1.0)]),
            Err(Error::UnknownClosedForm(_))
        ));
        assert!(HerglotzMap::closed_form(CLOSED_FORM_DIFFERENTIAL_WEYL, &[]).is_err());
        assert!(
            HerglotzMap::closed_form(CLOSED_FORM_DIFFERENTIAL_WEYL, &[("ell", 1.0)]).is_ok()
        );
    }

    #[test]
    fn livsic_map_contracts_and_vanishes_at_i_for_donoghue_inners() {
        // s(i) = 0 exactly when M(i) = i.
        let donoghue = LivsicMap::new(HerglotzMap::from_measure(SpectralMeasure::dirac(0.0)));
        assert!(donoghue.eval(I).unwrap().norm() < 1e-15);
        let scaled = LivsicMap::new(
            HerglotzMap::scaled(2.0, donoghue.herglotz().clone()).unwrap(),
        );
        assert!(scaled.eval(I).unwrap().norm() > 0.1);
        for k in 0..20 {
            let z = Complex64::new(-2.0 + 0.2 * k as f64, 0.3 + 0.1 * k as f64);
            assert!(donoghue.eval(z).unwrap().norm() < 1.0);
            assert!(scaled.eval(z).unwrap().norm() < 1.0);
        }
    }

    #[test]
    fn wrappers_with_identity_parameters_evaluate_identically() {
        let f = HerglotzMap::from_measure(
            SpectralMeasure::from_atoms(&[(1.5, 0.7), (-0.4, 1.2)]).unwrap(),
        );
        let scaled = HerglotzMap::scaled(1.0, f.clone()).unwrap();
        let rotated = HerglotzMap::alpha_rotated(0.0, f.clone()).unwrap();
        let z = Complex64::new(0.3, 0.9);
        assert_eq!(f.eval(z).unwrap(), scaled.eval(z).unwrap());
        assert_eq!(f.eval(z).unwrap(), rotated.eval(z).unwrap());
    }

    #[test]
    fn serialization_mirrors_variants_with_kind_tag() {
        let f = HerglotzMap::scaled(
            2.0,
            HerglotzMap::alpha_rotated(
                0.5,
                HerglotzMap::from_measure(SpectralMeasure::dirac(0.0)),
            )
            .unwrap(),
        )
        .unwrap();
        let json = serde_json::to_value(&f).unwrap();
        assert_eq!(json["kind"], "Scaled");
        assert_eq!(json["inner"]["kind"], "AlphaRotated");
        assert_eq!(json["inner"]["inner"]["kind"], "FromMeasure");
        let back: HerglotzMap = serde_json::from_value(json).unwrap();
        assert_eq!(f, back);
    }

    fn upper_half_plane() -> impl Strategy<Value = Complex64> {
        (-10.0..10.0f64, 0.05..10.0f64).prop_map(|(re, im)| Complex64::new(re, im))
    }

    fn test_measures() -> Vec<SpectralMeasure> {
        vec![
            SpectralMeasure::dirac(0.0),
            SpectralMeasure::from_atoms(&[(1.0, 1.0), (-1.0, 1.0)]).unwrap(),
            SpectralMeasure::from_atoms(&[(0.3, 0.4), (-2.0, 1.5), (5.0, 2.0)]).unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn cayley_round_trip(z in upper_half_plane()) {
            let s = cayley_m_to_s(z).unwrap();
            let back = cayley_s_to_m(s).unwrap();
            prop_assert!(close(back, z, 1e-12 * (1.0 + z.norm())));
        }

        #[test]
        fn herglotz_symmetry_and_positivity(z in upper_half_plane()) {
            for sigma in test_measures() {
                let up = sigma.herglotz_transform(z).unwrap();
                let down = sigma.herglotz_transform(z.conj()).unwrap();
                prop_assert!(close(down, up.conj(), 1e-12));
                prop_assert!(up.im > 0.0);
            }
        }

        #[test]
        fn herglotz_linearity_over_atom_union(z in upper_half_plane()) {
            let s1 = SpectralMeasure::from_atoms(&[(0.5, 1.0), (-3.0, 0.25)]).unwrap();
            let s2 = SpectralMeasure::from_atoms(&[(2.0, 0.7)]).unwrap();
            let joint = SpectralMeasure::from_atoms(&[(0.5, 1.0), (-3.0, 0.25), (2.0, 0.7)]).unwrap();
            let sum = s1.herglotz_transform(z).unwrap() + s2.herglotz_transform(z).unwrap();
            prop_assert!(close(joint.herglotz_transform(z).unwrap(), sum, 1e-12));
        }

        #[test]
        fn contractivity_of_cayley_image(z in upper_half_plane()) {
            for sigma in test_measures() {
                let s = cayley_m_to_s(sigma.herglotz_transform(z).unwrap()).unwrap();
                prop_assert!(s.norm() < 1.0);
            }
        }

        #[test]
        fn moebius_group_law(z in upper_half_plane(), alpha in 0.0..std::f64::consts::PI, beta in 0.0..std::f64::consts::PI) {
            let m = SpectralMeasure::dirac(0.5).herglotz_transform(z).unwrap();
            let seq = alpha_transform(alpha_transform(m, alpha).unwrap(), beta).unwrap();
            let joint = alpha_transform(m, canonicalize_alpha(alpha + beta)).unwrap();
            prop_assert!(close(seq, joint, 1e-10 * (1.0 + seq.norm())));
        }

        #[test]
        fn scaled_donoghue_classifies_to_a(a in 0.05..20.0f64) {
            let m0 = HerglotzMap::from_measure(SpectralMeasure::dirac(0.0));
            let f = HerglotzMap::scaled(a, m0).unwrap();
            let r = classify(&f).unwrap();
            prop_assert!((r.a - a).abs() <= 1e-10);
        }
    }

    #[test]
    fn normalization_link_at_i() {
        for sigma in test_measures() {
            let v = sigma.herglotz_transform(I).unwrap();
            let a = sigma.norming_constant().unwrap();
            assert!(close(v, Complex64::new(sigma.shift_q(), a), 1e-12));
        }
    }

    #[test]
    fn moebius_phase_commutation_on_grid() {
        let angles = [
            0.0,
            std::f64::consts::FRAC_PI_6,
            std::f64::consts::FRAC_PI_4,
            std::f64::consts::FRAC_PI_2,
            3.0 * std::f64::consts::FRAC_PI_4,
        ];
        let sigma = SpectralMeasure::from_atoms(&[(0.3, 0.4), (-2.0, 1.5), (5.0, 2.0)]).unwrap();
        for k in 0..100 {
            let z = Complex64::new(-5.0 + 0.1 * k as f64, 0.2 + 0.03 * k as f64);
            let m = sigma.herglotz_transform(z).unwrap();
            let s = cayley_m_to_s(m).unwrap();
            for &alpha in &angles {
                let moebius = cayley_m_to_s(alpha_transform(m, alpha).unwrap()).unwrap();
                let phase = livsic_phase_rotation(s, alpha);
                assert!(
                    close(moebius, phase, 1e-10),
                    "alpha={alpha}, z={z}: {moebius} vs {phase}"
                );
            }
        }
    }
}
