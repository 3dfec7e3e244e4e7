//! Computer algebra for the tangent cones of monomial curves in affine
//! 4-space whose degrees form an arithmetic progression.
//!
//! The crate builds, from first principles, the binomial generating set of
//! the defining ideal of such a curve, certifies it as a standard basis
//! under the local degree order, extracts the tangent-cone generators,
//! checks Cohen-Macaulayness, constructs the explicit graded minimal free
//! resolution of the tangent cone, verifies its exactness through ranks of
//! minors and regular sequences, and evaluates the Hilbert function three
//! independent ways.
//!
//! Module map:
//! - [`poly`]: exact sparse polynomial arithmetic and monomial orders;
//! - [`grobner`]: Buchberger, reduced bases, ideal quotients, toric ideals;
//! - [`mora`]: weak normal form and standard bases for local orders;
//! - [`curves`]: the curve family, its generators, the CM certificate;
//! - [`resolution`]: free complexes, exactness certificates, syzygies;
//! - [`hilbert`]: the Hilbert function by formula, complex, and semigroup.

pub mod curves;
pub mod error;
pub mod grobner;
pub mod hilbert;
pub mod mora;
pub mod poly;
pub mod resolution;

pub use error::{Error, Result};
