//! Exact arithmetic: rational scalars, sparse multivariate and dense
//! univariate polynomials over a common ring interface, fraction-free
//! Sylvester resultants, and a plain-text polynomial format.

mod mpoly;
mod resultant;
mod ring;
mod textio;
mod unipoly;

pub use mpoly::MPoly;
pub use resultant::{bareiss_determinant, sylvester_resultant};
pub use ring::{Rational, Ring};
pub use textio::{format_poly, format_sym_poly, parse_poly, ParseError};
pub use unipoly::UniPoly;

use thiserror::Error;

/// Failures of the exact kernels. Messages start with the error name so
/// callers can match on it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("ZeroPolynomial: {0}")]
    ZeroPolynomial(&'static str),
    #[error("InexactDivision: division left a remainder")]
    InexactDivision,
}
