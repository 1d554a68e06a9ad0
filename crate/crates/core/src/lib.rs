//! Exact and numeric kernels for Hilbert geometry on strictly convex
//! projective domains: arbitrary-precision polynomial arithmetic and
//! Sylvester resultants, root-ratio polynomials and the shared-ratio
//! decision procedure, proximality and translation lengths of matrices,
//! cross-ratio distances on convex domains, and marked length spectra of
//! triangle-group representations together with their projective duals.

pub mod exact;
pub mod hilbert;
pub mod rootratio;
pub mod spectral;
pub mod structures;

pub use exact::{MPoly, Rational, Ring, UniPoly};

/// Malformed external input (JSON artifacts and similar). Distinct from
/// the domain errors of the individual modules: a format error means the
/// input never became a value, not that an operation rejected one.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("FormatError: {0}")]
pub struct FormatError(pub String);

/// Fixed 12-decimal formatting shared by every emitted numeric artifact.
/// Values that round to zero print unsigned, so reformatting a parsed
/// artifact reproduces it byte for byte.
pub fn fixed12(x: f64) -> String {
    let s = format!("{x:.12}");
    match s.strip_prefix('-') {
        Some(rest) if rest.chars().all(|c| c == '0' || c == '.') => rest.to_string(),
        _ => s,
    }
}
