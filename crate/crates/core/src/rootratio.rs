//! Root-ratio polynomials and the exact shared-root-ratio decision.
//!
//! For a monic polynomial p of degree n with roots a_1, ..., a_n and
//! nonzero constant term, the root-ratio polynomial is
//!
//! ```text
//! R_p(r) = prod over i != j of (a_i * r - a_j)
//! ```
//!
//! whose zeros are exactly the ratios of roots of p. It is computed here
//! purely by resultants, never through numeric roots: eliminating x from
//! the pair (p(r*x), p(x)) yields p(0) * (r - 1)^n * R_p(r), and the two
//! known factors divide out exactly. Two polynomials share a root ratio
//! exactly when the resultant of their root-ratio polynomials vanishes,
//! which is a single exact zero test over the rationals.
//!
//! A repeated root of p makes 1 a root ratio (the definition only excludes
//! equal indices, not equal values), so R_p(1) = 0 and the shared-ratio
//! predicate treats ratio 1 like any other. Callers comparing "genuinely
//! distinct eigenvalue pairs" must screen for repeated roots themselves.

use thiserror::Error;

use crate::exact::{sylvester_resultant, Rational, Ring, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootRatioError {
    #[error("DegreeTooSmall: root ratios need degree at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("ZeroConstantTerm: zero is a root, so root ratios are undefined")]
    ZeroConstantTerm,
    #[error("NotMonic: input must be monic over its coefficient ring")]
    NotMonic,
}

/// The root-ratio polynomial in a fresh variable r, together with the
/// degree of the polynomial it came from. `poly` has degree n(n-1) and
/// leading coefficient p(0)^(n-1).
#[derive(Debug, Clone, PartialEq)]
pub struct RootRatioResult<R: Ring> {
    pub poly: UniPoly<R>,
    pub source_degree: usize,
}

/// Compute R_p by the resultant identity
/// `Res(p(r*x), p(x); x) = p(0) * (r - 1)^n * R_p(r)`.
///
/// Requires p monic of degree at least 2 with p(0) != 0; a zero constant
/// term would put 0 among the roots and no ratio over it is defined.
pub fn root_ratio_poly<R: Ring>(
    p: &UniPoly<R>,
) -> Result<RootRatioResult<R>, RootRatioError> {
    let n = p.degree().unwrap_or(0);
    if n < 2 {
        return Err(RootRatioError::DegreeTooSmall(n));
    }
    if !p.is_monic() {
        return Err(RootRatioError::NotMonic);
    }
    if p.constant_term().is_zero() {
        return Err(RootRatioError::ZeroConstantTerm);
    }
    let res = sylvester_resultant(&p.scale_argument(), &p.lift())
        .expect("inputs of degree >= 2 are nonzero");
    let r_minus_one = UniPoly::from_coeffs(vec![R::one().neg(), R::one()]);
    let divisor = UniPoly::constant(p.constant_term()).mul(&r_minus_one.pow(n as u32));
    let poly = res
        .exact_divide(&divisor)
        .expect("the resultant identity guarantees exact divisibility");
    Ok(RootRatioResult { poly, source_degree: n })
}

/// The common root-ratio polynomial `C_{p,q} = Res(R_p(r), R_q(r); r)`,
/// an element of the coefficient ring. It vanishes whenever p and q share
/// a root ratio, and under the monic and nonzero-constant-term
/// preconditions the converse holds as well.
pub fn common_root_ratio_poly<R: Ring>(
    p: &UniPoly<R>,
    q: &UniPoly<R>,
) -> Result<R, RootRatioError> {
    let rp = root_ratio_poly(p)?.poly;
    let rq = root_ratio_poly(q)?.poly;
    Ok(sylvester_resultant(&rp, &rq).expect("root-ratio polynomials are nonzero"))
}

/// Exact decision: do p and q share a ratio of roots? Non-monic input is
/// normalized by its leading coefficient first (roots are unchanged).
/// Note the repeated-root caveat on the module: a double root in p and
/// any repeated-root q share the ratio 1.
pub fn has_common_root_ratio(
    p: &UniPoly<Rational>,
    q: &UniPoly<Rational>,
) -> Result<bool, RootRatioError> {
    let c = common_root_ratio_poly(&p.monic(), &q.monic())?;
    Ok(c.is_zero())
}
