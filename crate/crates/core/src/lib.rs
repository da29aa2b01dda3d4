//! Gelfand-Tsetlin combinatorics for the classical types B, C and D,
//! quiver Hecke (KLR) algebras and their cyclotomic quotients, all in exact
//! arithmetic.
//!
//! The numeric core is generic over a coefficient field ([`Scalar`]); the
//! aliases below fix it to exact rationals, which is what every
//! verification in the crate uses.

pub mod cyclotomic;
pub mod error;
pub mod klr;
pub mod laurent;
pub mod linalg;
pub mod patterns;
pub mod qmodule;
pub mod rootdata;
pub mod scalar;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use rootdata::{root_datum, DynkinLabels, LieType, RootDatum, WeightCoords};
pub use scalar::Scalar;

/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Laurent polynomials in `q` over the rationals.
pub type QPoly = LaurentPoly<Rational>;
