//! Herglotz-Nevanlinna functions from spectral measures, their unique
//! L-system representations, and the c-entropy/dissipation calculus.
//!
//! The crate covers one tightly connected circle of ideas from the spectral
//! theory of symmetric operators with deficiency indices (1,1):
//!
//! - [`measures`]: spectral measures and the Herglotz integral transform
//!   `M(z) = Q + integral of (1/(lambda - z) - lambda/(1 + lambda^2)) d(sigma)`.
//! - [`herglotz`]: composable Herglotz maps, the Cayley pair with the
//!   contractive Livsic function, the alpha-transformation law, and
//!   classification by the norming constant `a = Im M(i)` into the Donoghue
//!   class (a = 1) and its generalized companions.
//! - [`model_triple`]: a finite diagonal model operator whose resolvent and
//!   deficiency-vector formulas independently reproduce the same functions;
//!   this is the crate's built-in oracle.
//! - [`bi_extension`]: exact coefficient algebra over the formal basis
//!   {phi, psi} for channel vectors and rank-one state-space perturbations.
//! - [`lsystem`]: L-system records, impedance/transfer duality, c-entropy
//!   `S = -ln kappa`, dissipation `D = 1 - kappa^2`, the law
//!   `D = 1 - exp(-2S)`, coupling, and the four representation factories.
//! - [`entropy_geometry`]: the curve S(a) = ln|(a+1)/(a-1)|, its involution
//!   invariance under a -> 1/a, pole residues of dS, and the matching-pair
//!   solver for a given dissipation.
//! - [`differential`]: closed forms for the first-derivative model operator
//!   on [0, ell], cross-validating every general formula.
//! - [`cli`]: the deterministic command-line front end.
//!
//! Everything is plain `f64`/`Complex64` arithmetic; all values are immutable
//! after construction and all operations are pure, so grid sweeps can be
//! parallelized by the caller freely.
//!
//! See the crate examples for a tour: each major capability has one runnable
//! example under `examples/`.

pub mod bi_extension;
pub mod cli;
pub mod differential;
pub mod entropy_geometry;
pub mod error;
pub mod herglotz;
pub mod lsystem;
pub mod measures;
pub mod model_triple;
mod serde_complex;

pub use error::{ConditioningWarning, Error, Result};
pub use herglotz::{ClassReport, ClassTag, HerglotzMap, LivsicMap};
pub use lsystem::{CEntropy, EntropyReport, LSystemRecord, Provenance};
pub use measures::{Atom, DensityTable, SpectralMeasure};
pub use model_triple::ModelTriple;
