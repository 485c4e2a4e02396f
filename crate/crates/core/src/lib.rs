//! Associated Meixner, Charlier, Laguerre, Krawtchouk and Meixner-Pollaczek
//! polynomials in exact rational arithmetic, with closed forms, generating
//! functions and an identity-verification harness.
//!
//! Everything numeric is generic over [`exactnum::Scalar`]; the aliases below
//! fix the scalar to exact rationals.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod families;
pub mod genfun;
pub mod hyperexplicit;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{GaussianRational, Rational, Scalar};
pub use families::{FamilyKind, FamilyParams, Params};

/// Truncated power series over exact rationals.
pub type Series = series::TruncatedSeries<Rational>;
/// Dense polynomial over exact rationals.
pub type Poly = families::PolyX<Rational>;
/// Truncated power series over Gaussian rationals.
pub type GaussianSeries = series::TruncatedSeries<GaussianRational>;
