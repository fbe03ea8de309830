//! Spectral measures and their Herglotz integral transform.
//!
//! A [`SpectralMeasure`] is a desk-scale Borel measure: a finite atomic part,
//! an optional tabulated density integrated by composite trapezoidal
//! quadrature, and a real shift `Q`. It feeds every Herglotz evaluation in the
//! crate through
//!
//! ```text
//! M(z) = Q + sum_j w_j (1/(lambda_j - z) - lambda_j/(1 + lambda_j^2)) + density part,
//! ```
//!
//! together with the norming constant `a = integral of d(sigma)/(1 + lambda^2)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point mass: location `lambda`, positive weight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub lambda: f64,
    pub weight: f64,
}

/// Tabulated nonnegative density on a strictly increasing grid,
/// integrated by the composite trapezoid rule on exactly that grid.
/// Refinement is the caller's responsibility.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityTable {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
}

impl DensityTable {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        let table = DensityTable { grid, values };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        if self.grid.len() < 2 {
            return Err(Error::InvalidMeasure(
                "density grid needs at least 2 points".into(),
            ));
        }
        if self.grid.len() != self.values.len() {
            return Err(Error::InvalidMeasure(format!(
                "density grid has {} points but {} values",
                self.grid.len(),
                self.values.len()
            )));
        }
        if !self.grid.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidMeasure(
                "density grid must be strictly increasing".into(),
            ));
        }
        if !self.grid.iter().all(|g| g.is_finite()) {
            return Err(Error::InvalidMeasure("density grid must be finite".into()));
        }
        if !self.values.iter().all(|v| v.is_finite() && *v >= 0.0) {
            return Err(Error::InvalidMeasure(
                "density values must be finite and nonnegative".into(),
            ));
        }
        Ok(())
    }

    /// Trapezoid quadrature of `f(lambda) * density(lambda)` over the grid.
    fn quadrature<T, F>(&self, zero: T, f: F) -> T
    where
        T: std::ops::Add<Output = T> + Copy,
        F: Fn(f64) -> T,
        T: std::ops::Mul<f64, Output = T>,
    {
        let mut acc = zero;
        for k in 0..self.grid.len() - 1 {
            let h = self.grid[k + 1] - self.grid[k];
            let left = f(self.grid[k]) * self.values[k];
            let right = f(self.grid[k + 1]) * self.values[k + 1];
            acc = acc + (left + right) * (0.5 * h);
        }
        acc
    }
}

/// Borel spectral measure: atoms + optional tabulated density + real shift Q.
///
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RawMeasure", into = "RawMeasure")]
pub struct SpectralMeasure {
    atoms: Vec<Atom>,
    density: Option<DensityTable>,
    shift_q: f64,
}

/// Serde mirror carrying the exact on-disk field names.
#[derive(Serialize, Deserialize)]
struct RawMeasure {
    q: f64,
    atoms: Vec<Atom>,
    #[serde(default)]
    density: Option<DensityTable>,
}

impl TryFrom<RawMeasure> for SpectralMeasure {
    type Error = Error;
    fn try_from(raw: RawMeasure) -> Result<Self> {
        SpectralMeasure::new(raw.atoms, raw.density, raw.q)
    }
}

impl From<SpectralMeasure> for RawMeasure {
    fn from(m: SpectralMeasure) -> Self {
        RawMeasure {
            q: m.shift_q,
            atoms: m.atoms,
            density: m.density,
        }
    }
}

impl SpectralMeasure {
    pub fn new(atoms: Vec<Atom>, density: Option<DensityTable>, shift_q: f64) -> Result<Self> {
        if !shift_q.is_finite() {
            return Err(Error::InvalidMeasure("shift q must be finite".into()));
        }
        for atom in &atoms {
            if !atom.lambda.is_finite() || !atom.weight.is_finite() {
                return Err(Error::InvalidMeasure("atom fields must be finite".into()));
            }
            if atom.weight <= 0.0 {
                return Err(Error::InvalidMeasure(format!(
                    "atom weight {} is not positive",
                    atom.weight
                )));
            }
        }
        for (i, a) in atoms.iter().enumerate() {
            if atoms[i + 1..].iter().any(|b| b.lambda == a.lambda) {
                return Err(Error::InvalidMeasure(format!(
                    "duplicate atom location {}",
                    a.lambda
                )));
            }
        }
        if let Some(d) = &density {
            d.validate()?;
        }
        Ok(SpectralMeasure {
            atoms,
            density,
            shift_q,
        })
    }

    /// Purely atomic measure with shift Q = 0.
    pub fn from_atoms(pairs: &[(f64, f64)]) -> Result<Self> {
        let atoms = pairs
            .iter()
            .map(|&(lambda, weight)| Atom { lambda, weight })
            .collect();
        Self::new(atoms, None, 0.0)
    }

    /// Unit point mass at `lambda`, Q = 0.
    pub fn dirac(lambda: f64) -> Self {
        Self::from_atoms(&[(lambda, 1.0)]).expect("unit mass is valid")
    }

    /// Measure with no mass at all, carrying only the shift Q.
    pub fn empty(shift_q: f64) -> Result<Self> {
        Self::new(Vec::new(), None, shift_q)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn density(&self) -> Option<&DensityTable> {
        self.density.as_ref()
    }

    pub fn shift_q(&self) -> f64 {
        self.shift_q
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty() && self.density.is_none()
    }

    /// Norming constant `a = integral of d(sigma)/(1 + lambda^2)`.
    ///
    /// Deterministic for a fixed grid; fails on measures with no mass.
    pub fn norming_constant(&self) -> Result<f64> {
        if self.is_empty() {
            return Err(Error::EmptyMeasure);
        }
        let atomic: f64 = self
            .atoms
            .iter()
            .map(|a| a.weight / (1.0 + a.lambda * a.lambda))
            .sum();
        let continuous = match &self.density {
            Some(d) => d.quadrature(0.0, |l| 1.0 / (1.0 + l * l)),
            None => 0.0,
        };
        let a = atomic + continuous;
        if a <= 0.0 {
            return Err(Error::EmptyMeasure);
        }
        Ok(a)
    }

    /// The Herglotz transform
    /// `Q + integral of (1/(lambda - z) - lambda/(1 + lambda^2)) d(sigma)`.
    ///
    /// Defined off the real axis; maps the upper half-plane into itself when
    /// the measure carries mass and Q is real.
    pub fn herglotz_transform(&self, z: Complex64) -> Result<Complex64> {
        if z.im == 0.0 {
            return Err(Error::RealAxisEvaluation(z));
        }
        let kernel = |l: f64| {
            Complex64::new(1.0, 0.0) / (Complex64::new(l, 0.0) - z) - l / (1.0 + l * l)
        };
        let mut value = Complex64::new(self.shift_q, 0.0);
        for a in &self.atoms {
            value += kernel(a.lambda) * a.weight;
        }
        if let Some(d) = &self.density {
            value += d.quadrature(Complex64::new(0.0, 0.0), kernel);
        }
        Ok(value)
    }
}

/// Equality up to atom reordering, with exact field comparison.
impl PartialEq for SpectralMeasure {
    fn eq(&self, other: &Self) -> bool {
        if self.shift_q != other.shift_q
            || self.density != other.density
            || self.atoms.len() != other.atoms.len()
        {
            return false;
        }
        let mut left = self.atoms.clone();
        let mut right = other.atoms.clone();
        left.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
        right.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
        left == right
    }
}
