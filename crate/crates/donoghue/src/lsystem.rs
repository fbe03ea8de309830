//! L-system records: impedance/transfer duality, c-entropy, dissipation,
//! coupling calculus, and the representation factories.
//!
//! A scalar L-system is pinned down by its von Neumann parameters (kappa, U),
//! the norming constant a of its impedance, a reference-extension angle
//! alpha, the impedance map itself, and the channel vector. The factories
//! build the unique record whose impedance is `a * M_alpha` for a
//! Donoghue-class reference M:
//!
//! | branch | parameters        | kappa           | U            |
//! |--------|-------------------|-----------------|--------------|
//! | t-6    | a = 1, alpha = 0  | 0               | -1           |
//! | t-8    | a = 1, alpha != 0 | 0               | -exp(2 i a)  |
//! | t-9    | 0 < a < 1         | (1 - a)/(1 + a) | -1           |
//! | t-10   | a > 1             | (a - 1)/(1 + a) | +1           |
//!
//! c-entropy is -ln kappa (infinite at kappa = 0), the dissipation
//! coefficient is 1 - kappa^2, and the two are tied by D = 1 - exp(-2 S).
//! Under coupling, entropies add and dissipations compose as
//! D1 + D2 - D1 D2.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bi_extension::{chi_of, CoeffVector};
use crate::error::{Error, Result};
use crate::herglotz::{canonicalize_alpha, classify, HerglotzMap};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Tolerance around a = 1 selecting the infinite-entropy branch.
const UNIT_NORMING_TOLERANCE: f64 = 1e-9;

/// Extended-real c-entropy. Infinity is a dedicated value, never a floating
/// sentinel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CEntropy {
    Finite(f64),
    Infinite,
}

impl CEntropy {
    /// -ln kappa, infinite at kappa = 0.
    pub fn from_kappa(kappa: f64) -> CEntropy {
        if kappa == 0.0 {
            CEntropy::Infinite
        } else {
            CEntropy::Finite(-kappa.ln())
        }
    }

    /// exp(-2 S), with exp(-infinity) = 0.
    pub fn exp_neg_two(self) -> f64 {
        match self {
            CEntropy::Finite(s) => (-2.0 * s).exp(),
            CEntropy::Infinite => 0.0,
        }
    }

    /// The dissipation value this entropy forces through D = 1 - exp(-2 S).
    pub fn implied_dissipation(self) -> f64 {
        1.0 - self.exp_neg_two()
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, CEntropy::Infinite)
    }

    pub fn as_finite(self) -> Option<f64> {
        match self {
            CEntropy::Finite(s) => Some(s),
            CEntropy::Infinite => None,
        }
    }
}

/// Entropy addition: infinity absorbs.
impl std::ops::Add for CEntropy {
    type Output = CEntropy;
    fn add(self, rhs: CEntropy) -> CEntropy {
        match (self, rhs) {
            (CEntropy::Finite(a), CEntropy::Finite(b)) => CEntropy::Finite(a + b),
            _ => CEntropy::Infinite,
        }
    }
}

impl std::fmt::Display for CEntropy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CEntropy::Finite(s) => std::fmt::Display::fmt(s, f),
            CEntropy::Infinite => f.pad("inf"),
        }
    }
}

/// c-entropy together with the dissipation coefficient it implies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyReport {
    pub entropy: CEntropy,
    pub dissipation: f64,
}

impl EntropyReport {
    pub fn from_kappa(kappa: f64) -> EntropyReport {
        EntropyReport {
            entropy: CEntropy::from_kappa(kappa),
            dissipation: 1.0 - kappa * kappa,
        }
    }

    /// |D - (1 - exp(-2 S))|; zero exactly in the infinite case.
    pub fn law_residual(&self) -> f64 {
        (self.dissipation - self.entropy.implied_dissipation()).abs()
    }
}

/// Which representation theorem branch produced a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "t-6")]
    UnitNorming,
    #[serde(rename = "t-8")]
    RotatedReference,
    #[serde(rename = "t-9")]
    ScaledBelowOne,
    #[serde(rename = "t-10")]
    ScaledAboveOne,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::UnitNorming => "t-6",
            Provenance::RotatedReference => "t-8",
            Provenance::ScaledBelowOne => "t-9",
            Provenance::ScaledAboveOne => "t-10",
        })
    }
}

/// A representing L-system: parameter bundle, impedance map and channel
/// vector. Immutable after construction.
#[derive(Debug, Clone, Serialize)]
pub struct LSystemRecord {
    pub kappa: f64,
    #[serde(with = "crate::serde_complex::reim")]
    pub u: Complex64,
    pub a: f64,
    pub alpha: f64,
    #[serde(skip)]
    pub impedance: HerglotzMap,
    #[serde(rename = "chi")]
    pub channel: CoeffVector,
    pub provenance: Provenance,
}

/// Records are the same system iff (kappa, U, impedance) agree.
impl PartialEq for LSystemRecord {
    fn eq(&self, other: &Self) -> bool {
        self.kappa == other.kappa && self.u == other.u && self.impedance == other.impedance
    }
}

/// Scalar impedance-to-transfer duality: W = (1 - iV)/(1 + iV).
pub fn impedance_to_transfer(v_value: Complex64) -> Result<Complex64> {
    let denom = 1.0 + I * v_value;
    if denom == Complex64::new(0.0, 0.0) {
        return Err(Error::MoebiusPole(v_value));
    }
    Ok((1.0 - I * v_value) / denom)
}

/// Scalar transfer-to-impedance duality: V = i (W - 1)/(W + 1).
pub fn transfer_to_impedance(w_value: Complex64) -> Result<Complex64> {
    let denom = w_value + 1.0;
    if denom == Complex64::new(0.0, 0.0) {
        return Err(Error::MoebiusPole(w_value));
    }
    Ok(I * (w_value - 1.0) / denom)
}

/// Build the unique representing L-system for the impedance `a * M_alpha`.
///
/// The reference map must classify into the Donoghue class (norming constant
/// 1). A nonzero alpha is only supported at a = 1; scaled branches carry
/// U = -1 (a < 1) or U = +1 (a > 1).
pub fn represent(a: f64, alpha: f64, reference: &HerglotzMap) -> Result<LSystemRecord> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::ParameterOutOfRange(format!(
            "norming constant a = {a} must be positive"
        )));
    }
    if !alpha.is_finite() {
        return Err(Error::ParameterOutOfRange("alpha must be finite".into()));
    }
    let alpha = canonicalize_alpha(alpha);
    let unit_norming = (a - 1.0).abs() <= UNIT_NORMING_TOLERANCE;
    if alpha != 0.0 && !unit_norming {
        return Err(Error::UnsupportedCombination);
    }

    let class = classify(reference)?;
    if (class.a - 1.0).abs() > UNIT_NORMING_TOLERANCE {
        return Err(Error::NotDonoghueNormalized(class.a));
    }

    let (kappa, u, provenance) = if unit_norming && alpha == 0.0 {
        (0.0, Complex64::new(-1.0, 0.0), Provenance::UnitNorming)
    } else if unit_norming {
        let u = -Complex64::from_polar(1.0, 2.0 * alpha);
        (0.0, u, Provenance::RotatedReference)
    } else if a < 1.0 {
        (
            (1.0 - a) / (1.0 + a),
            Complex64::new(-1.0, 0.0),
            Provenance::ScaledBelowOne,
        )
    } else {
        (
            (a - 1.0) / (1.0 + a),
            Complex64::new(1.0, 0.0),
            Provenance::ScaledAboveOne,
        )
    };

    let mut impedance = reference.clone();
    if alpha != 0.0 {
        impedance = HerglotzMap::alpha_rotated(alpha, impedance)?;
    }
    if a != 1.0 {
        impedance = HerglotzMap::scaled(a, impedance)?;
    }

    Ok(LSystemRecord {
        kappa,
        u,
        a,
        alpha,
        impedance,
        channel: chi_of(kappa, u)?,
        provenance,
    })
}

/// c-entropy of the record: -ln kappa, infinite at kappa = 0.
pub fn c_entropy(rec: &LSystemRecord) -> CEntropy {
    CEntropy::from_kappa(rec.kappa)
}

/// Dissipation coefficient of the main operator: 1 - kappa^2. The
/// dot-normalized deficiency basis is accounted for analytically.
pub fn dissipation_coefficient(rec: &LSystemRecord) -> f64 {
    1.0 - rec.kappa * rec.kappa
}

/// Residual of the entropy-dissipation law D = 1 - exp(-2 S); exactly zero
/// in the infinite-entropy case.
pub fn entropy_dissipation_check(rec: &LSystemRecord) -> f64 {
    (dissipation_coefficient(rec) - c_entropy(rec).implied_dissipation()).abs()
}

/// Entropy through the transfer function at -i: the impedance is evaluated
/// at -i via the symmetry identity V(conj z) = conj V(z), then
/// S = -ln |W(-i)|.
pub fn entropy_via_transfer(rec: &LSystemRecord) -> Result<CEntropy> {
    let v = rec.impedance.eval(-I)?;
    let w = impedance_to_transfer(v)?;
    let modulus = w.norm();
    if modulus == 0.0 {
        Ok(CEntropy::Infinite)
    } else {
        Ok(CEntropy::Finite(-modulus.ln()))
    }
}

/// Entropy through the transfer function at +i: S = ln |W(i)|, available when
/// i sits in the resolvent set of the main operator. Reported alongside the
/// -i route so callers can compare the two rather than trust one silently.
pub fn entropy_via_transfer_at_i(rec: &LSystemRecord) -> Result<CEntropy> {
    let v = rec.impedance.eval(I)?;
    match impedance_to_transfer(v) {
        // V(i) = i is the pole of the duality: |W(i)| = infinity, so S too.
        Err(Error::MoebiusPole(_)) => Ok(CEntropy::Infinite),
        Err(e) => Err(e),
        Ok(w) => Ok(CEntropy::Finite(w.norm().ln())),
    }
}

/// Couple two systems: entropies add (infinity absorbs), dissipations
/// compose as D1 + D2 - D1 D2. Total dissipation absorbs exactly.
pub fn couple(r1: &EntropyReport, r2: &EntropyReport) -> EntropyReport {
    let dissipation = if r1.dissipation == 1.0 || r2.dissipation == 1.0 {
        1.0
    } else {
        r1.dissipation + r2.dissipation - r1.dissipation * r2.dissipation
    };
    EntropyReport {
        entropy: r1.entropy + r2.entropy,
        dissipation,
    }
}
