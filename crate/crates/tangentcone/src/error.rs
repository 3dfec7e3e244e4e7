//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("operation requires a local monomial order")]
    NotLocalOrder,
    #[error("operation requires a global monomial order")]
    NotGlobalOrder,
    #[error("ideal has no nonzero generators")]
    EmptyIdeal,
    #[error("generators must be homogeneous")]
    NotHomogeneous,
    #[error("degrees must be strictly increasing positive integers")]
    NotIncreasing,
    #[error("degrees do not form an arithmetic progression")]
    NotArithmetic,
    #[error("gcd of the degrees is not 1")]
    GcdNotOne,
    #[error("smallest degree must be at least 4")]
    TooSmall,
    #[error("matrix shapes are incompatible: {0}")]
    ShapeMismatch(String),
    #[error("the sequence of maps is not a complex")]
    NotAComplex,
    #[error("complex is not minimal: map {map} has a constant entry at row {row}, column {col}")]
    NotMinimal { map: usize, row: usize, col: usize },
    #[error("{0} is not a permutation of the variables")]
    BadPriority(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
