//! Matrix-level spectral layer: exact characteristic polynomials, numeric
//! eigenvalues, proximality classification, Hilbert translation length,
//! the duality map, and the exact shared-eigenvalue-ratio and equal-length
//! predicates.
//!
//! A matrix is semi-proximal when its eigenvalue of largest modulus is
//! unique, simple and real; proximal when that holds for the matrix and
//! its inverse and the two extreme eigenvalues have the same sign. For a
//! proximal matrix acting on a divided convex domain the Hilbert
//! translation length is log(lambda_top / lambda_bottom), which only
//! depends on the projective class.

mod roots;

pub use roots::polynomial_roots;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::Signed;
use thiserror::Error;

use crate::exact::{Rational, Ring, UniPoly};
use crate::rootratio::{has_common_root_ratio, RootRatioError};
use crate::FormatError;

/// Residual tolerance for eigenvalue refinement; results at this
/// tolerance are cached on the matrix.
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

/// Relative modulus-gap tolerance for proximality decisions.
pub const DEFAULT_PROXIMALITY_TOL: f64 = 1e-9;

const SCALAR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("SingularMatrix: determinant is zero")]
    SingularMatrix,
    #[error("NonConvergence: eigenvalue refinement exceeded {0} sweeps")]
    NonConvergence(usize),
    #[error("DegenerateGap: relative modulus gap {gap:.3e} at or below tolerance {tol:.3e}")]
    DegenerateGap { gap: f64, tol: f64 },
    #[error("NotProximal: matrix classifies as {0}")]
    NotProximal(ProximalityTag),
    #[error(transparent)]
    RootRatio(#[from] RootRatioError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProximalityTag {
    Proximal,
    SemiProximalOnly,
    NotSemiProximal,
    Identity,
}

impl fmt::Display for ProximalityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ProximalityTag::Proximal => "proximal",
            ProximalityTag::SemiProximalOnly => "semi-proximal-only",
            ProximalityTag::NotSemiProximal => "not-semi-proximal",
            ProximalityTag::Identity => "identity",
        };
        f.write_str(name)
    }
}

/// Outcome of a proximality decision. `top` and `bottom` are the extreme
/// eigenvalues when the corresponding end admits one; `gap` is the
/// smallest relative modulus gap the decision relied on (informational;
/// zero when an end was rejected for a complex leading pair).
#[derive(Debug, Clone, PartialEq)]
pub struct ProximalityClass {
    pub tag: ProximalityTag,
    pub top: Option<f64>,
    pub bottom: Option<f64>,
    pub gap: f64,
}

/// Square matrix with exact rational entries. The characteristic
/// polynomial, determinant, and default-tolerance eigenvalues are computed
/// lazily once and cached; the value itself is immutable, so sharing
/// across threads is safe.
#[derive(Debug, Clone)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<Rational>,
    charpoly: OnceLock<UniPoly<Rational>>,
    eigen: OnceLock<Result<Vec<Complex64>, SpectralError>>,
}

impl PartialEq for SquareMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries == other.entries
    }
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// f64 value of a rational whose numerator or denominator may far exceed
/// the f64 range: both are shifted down together first, so huge-over-huge
/// values convert to a finite quotient instead of inf/inf.
pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift = nb.max(db) - 900;
    if shift <= 0 {
        return num_traits::ToPrimitive::to_f64(q).unwrap_or(0.0);
    }
    let n =
        num_traits::ToPrimitive::to_f64(&(q.numer() >> shift as usize)).unwrap_or(f64::INFINITY);
    let d =
        num_traits::ToPrimitive::to_f64(&(q.denom() >> shift as usize)).unwrap_or(f64::INFINITY);
    n / d
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, FormatError> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(FormatError("matrix rows must form a nonempty square".into()));
        }
        Ok(SquareMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
            charpoly: OnceLock::new(),
            eigen: OnceLock::new(),
        })
    }

    /// Lift floating entries exactly (each f64 is a dyadic rational).
    pub fn from_f64_rows(rows: &[Vec<f64>]) -> Result<Self, FormatError> {
        let lifted = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| {
                        Rational::from_float(v)
                            .ok_or_else(|| FormatError("non-finite matrix entry".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(lifted)
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = SquareMatrix {
            dim,
            entries: vec![rat(0); dim * dim],
            charpoly: OnceLock::new(),
            eigen: OnceLock::new(),
        };
        for i in 0..dim {
            m.entries[i * dim + i] = rat(1);
        }
        m
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let dim = values.len();
        let mut m = SquareMatrix {
            dim,
            entries: vec![rat(0); dim * dim],
            charpoly: OnceLock::new(),
            eigen: OnceLock::new(),
        };
        for (i, v) in values.iter().enumerate() {
            m.entries[i * dim + i] = v.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.dim).map(|c| c.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.dim * self.dim);
        for j in 0..self.dim {
            for i in 0..self.dim {
                entries.push(self.entry(i, j).clone());
            }
        }
        SquareMatrix {
            dim: self.dim,
            entries,
            charpoly: OnceLock::new(),
            eigen: OnceLock::new(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut entries = vec![rat(0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if Ring::is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry(k, j);
                    if Ring::is_zero(b) {
                        continue;
                    }
                    entries[i * n + j] += a * b;
                }
            }
        }
        SquareMatrix {
            dim: n,
            entries,
            charpoly: OnceLock::new(),
            eigen: OnceLock::new(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * k).collect(),
            charpoly: OnceLock::new(),
            eigen: OnceLock::new(),
        }
    }

    /// Exact nonnegative matrix power by binary exponentiation.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> Rational {
        let mut t = rat(0);
        for i in 0..self.dim {
            t += self.entry(i, i);
        }
        t
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, SpectralError> {
        let n = self.dim;
        let mut a: Vec<Vec<Rational>> = self.rows();
        let mut b: Vec<Vec<Rational>> = Self::identity(n).rows();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !Ring::is_zero(&a[r][col]))
                .ok_or(SpectralError::SingularMatrix)?;
            a.swap(col, pivot);
            b.swap(col, pivot);
            let inv = {
                let one: Rational = Ring::one();
                &one / &a[col][col]
            };
            for j in 0..n {
                a[col][j] *= &inv;
                b[col][j] *= &inv;
            }
            for r in 0..n {
                if r == col || Ring::is_zero(&a[r][col]) {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..n {
                    let av = &a[col][j] * &factor;
                    a[r][j] -= av;
                    let bv = &b[col][j] * &factor;
                    b[r][j] -= bv;
                }
            }
        }
        Self::from_rows(b).map_err(|_| SpectralError::SingularMatrix)
    }

    /// Exact monic characteristic polynomial by the Faddeev-LeVerrier
    /// recurrence: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M (M_k + c_k I).
    pub fn char_poly(&self) -> &UniPoly<Rational> {
        self.charpoly.get_or_init(|| {
            let n = self.dim;
            let mut coeffs = vec![rat(0); n + 1];
            coeffs[n] = rat(1);
            let mut mk = self.clone();
            for k in 1..=n {
                let ck = -mk.trace() / rat(k as i64);
                coeffs[n - k] = ck.clone();
                if k < n {
                    let shifted = mk.add_scalar_diag(&ck);
                    mk = self.mul(&shifted);
                }
            }
            UniPoly::from_coeffs(coeffs)
        })
    }

    fn add_scalar_diag(&self, c: &Rational) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            m.entries[i * self.dim + i] += c;
        }
        m.charpoly = OnceLock::new();
        m.eigen = OnceLock::new();
        m
    }

    /// Exact determinant, read off the characteristic polynomial:
    /// det = (-1)^dim * charpoly(0).
    pub fn det(&self) -> Rational {
        let c0 = self.char_poly().constant_term();
        if self.dim.is_multiple_of(2) {
            c0
        } else {
            -c0
        }
    }

    /// Numeric eigenvalues with multiplicity, canonically ordered
    /// (descending modulus, then real, then imaginary part). Results at
    /// the default tolerance are cached.
    pub fn eigenvalues(&self, tol: f64) -> Result<Vec<Complex64>, SpectralError> {
        if tol == DEFAULT_ROOT_TOL {
            self.eigen
                .get_or_init(|| rational_roots(self.char_poly(), tol))
                .clone()
        } else {
            rational_roots(self.char_poly(), tol)
        }
    }

    /// All ratios lambda_i / lambda_j over ordered pairs i != j; invariant
    /// under scaling the matrix, so well-defined projectively.
    pub fn eigen_ratios(&self, tol: f64) -> Result<Vec<Complex64>, SpectralError> {
        if Ring::is_zero(&self.det()) {
            return Err(SpectralError::SingularMatrix);
        }
        let ev = self.eigenvalues(tol)?;
        let mut out = Vec::with_capacity(ev.len() * ev.len().saturating_sub(1));
        for (i, a) in ev.iter().enumerate() {
            for (j, b) in ev.iter().enumerate() {
                if i != j {
                    out.push(a / b);
                }
            }
        }
        Ok(out)
    }

    /// The scalar k when the matrix is kI within 1e-12 entrywise
    /// (absolute off the diagonal, relative to k on it).
    pub fn as_scalar(&self) -> Option<f64> {
        let k = rational_to_f64(self.entry(0, 0));
        let scale = k.abs().max(1.0);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = rational_to_f64(self.entry(i, j));
                let target = if i == j { k } else { 0.0 };
                if (v - target).abs() > SCALAR_TOL * scale {
                    return None;
                }
            }
        }
        Some(k)
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.dim)
            .map(|r| r.iter().map(rational_to_f64).collect())
            .collect()
    }

    pub fn to_dmatrix(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.dim, self.dim, |i, j| rational_to_f64(self.entry(i, j)))
    }
}

/// Numeric roots (with multiplicity) of an exact rational polynomial.
///
/// The multiplicity structure is separated off exactly first (Yun square
/// free decomposition), so a repeated root is returned as identical
/// copies of one refined value instead of a cloud of half-precision
/// approximations, and the remaining root finding only ever sees simple
/// roots. Each root is then polished by Newton steps evaluated in exact
/// rational arithmetic: floating evaluation noise on high-degree or
/// badly scaled polynomials cannot stall the refinement, so the returned
/// values carry true forward error near f64 representation level.
pub fn rational_roots(
    p: &UniPoly<Rational>,
    tol: f64,
) -> Result<Vec<Complex64>, SpectralError> {
    let mut out = Vec::with_capacity(p.degree().unwrap_or(0));
    for (factor, mult) in p.square_free_decomposition() {
        let cs: Vec<f64> = factor.coeffs().iter().map(rational_to_f64).collect();
        let root_batch = polynomial_roots(&cs, tol)?;
        let dfactor = factor.derivative();
        let dcs: Vec<f64> = dfactor.coeffs().iter().map(rational_to_f64).collect();
        for z in root_batch {
            let mut z = z;
            if forward_error_bound(&cs, &dcs, z) > 3e-13 * z.norm().max(1.0) {
                z = newton_polish(&factor, &dfactor, newton_polish(&factor, &dfactor, z));
            }
            for _ in 0..mult {
                out.push(z);
            }
        }
    }
    roots::sort_canonical(&mut out);
    Ok(out)
}

/// First-order bound on the distance from z to the nearest root:
/// (|p(z)| + evaluation noise) / |p'(z)|, where the noise term covers the
/// floating Horner rounding so a freak cancellation cannot hide a bad
/// root. Infinite at critical points.
fn forward_error_bound(cs: &[f64], dcs: &[f64], z: Complex64) -> f64 {
    let horner = |c: &[f64]| {
        let mut acc = Complex64::new(0.0, 0.0);
        for &ci in c.iter().rev() {
            acc = acc * z + ci;
        }
        acc
    };
    let noise: f64 = {
        let r = z.norm();
        let mut acc = 0.0;
        for &ci in cs.iter().rev() {
            acc = acc * r + ci.abs();
        }
        acc * cs.len() as f64 * f64::EPSILON
    };
    let dpz = horner(dcs).norm();
    if dpz == 0.0 {
        return f64::INFINITY;
    }
    (horner(cs).norm() + noise) / dpz
}

/// Horner evaluation of p at re + im*i over exact rationals.
fn eval_complex(p: &UniPoly<Rational>, re: &Rational, im: &Rational) -> (Rational, Rational) {
    let mut acc_re = rat(0);
    let mut acc_im = rat(0);
    for c in p.coeffs().iter().rev() {
        let next_re = &acc_re * re - &acc_im * im + c;
        let next_im = &acc_re * im + &acc_im * re;
        acc_re = next_re;
        acc_im = next_im;
    }
    (acc_re, acc_im)
}

/// One Newton step for z on p with exact evaluation, rounded back to f64.
/// The rounding keeps coefficient heights bounded across steps. Returns z
/// unchanged at a critical point or a non-finite input.
fn newton_polish(p: &UniPoly<Rational>, dp: &UniPoly<Rational>, z: Complex64) -> Complex64 {
    let (Some(re), Some(im)) = (Rational::from_float(z.re), Rational::from_float(z.im)) else {
        return z;
    };
    let (pr, pi) = eval_complex(p, &re, &im);
    let (dr, di) = eval_complex(dp, &re, &im);
    let denom = &dr * &dr + &di * &di;
    if Ring::is_zero(&denom) {
        return z;
    }
    let qr = (&pr * &dr + &pi * &di) / &denom;
    let qi = (&pi * &dr - &pr * &di) / &denom;
    Complex64::new(
        z.re - rational_to_f64(&qr),
        z.im - rational_to_f64(&qi),
    )
}

enum EndOutcome {
    /// Unique simple real eigenvalue of largest modulus, and its gap.
    Leading(f64, f64),
    /// The largest modulus is attained by an eigenvalue with significant
    /// imaginary part; definitively not semi-proximal at this end.
    ComplexTop,
}

/// Inspect the largest-modulus band of an eigenvalue list. Every value
/// within relative distance `tol` of the top modulus is considered
/// "tied"; a tie containing a complex value is a definitive complex
/// leading pair, while an all-real tie is an unresolvable gap.
fn end_analysis(values: &[Complex64], tol: f64) -> Result<EndOutcome, SpectralError> {
    let m1 = values
        .iter()
        .map(|z| z.norm())
        .fold(f64::NEG_INFINITY, f64::max);
    let band: Vec<&Complex64> = values
        .iter()
        .filter(|z| z.norm() >= m1 * (1.0 - tol))
        .collect();
    if band.iter().any(|z| z.im.abs() > tol * m1) {
        return Ok(EndOutcome::ComplexTop);
    }
    if band.len() > 1 {
        let mut mods: Vec<f64> = values.iter().map(|z| z.norm()).collect();
        mods.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let gap = (mods[0] - mods[1]) / mods[0];
        return Err(SpectralError::DegenerateGap { gap, tol });
    }
    let top = band[0];
    let gap = values
        .iter()
        .filter(|z| !std::ptr::eq(*z, top))
        .map(|z| (m1 - z.norm()) / m1)
        .fold(f64::INFINITY, f64::min);
    Ok(EndOutcome::Leading(top.re, gap))
}

/// Classify per the definition: semi-proximal needs a unique simple real
/// eigenvalue of largest modulus; proximal needs that at both ends (the
/// matrix and its inverse) plus equal signs of the extreme eigenvalues.
/// Ties within `tol` raise DegenerateGap rather than guessing.
pub fn classify_proximal(
    m: &SquareMatrix,
    tol: f64,
) -> Result<ProximalityClass, SpectralError> {
    if Ring::is_zero(&m.det()) {
        return Err(SpectralError::SingularMatrix);
    }
    if let Some(k) = m.as_scalar() {
        return Ok(ProximalityClass {
            tag: ProximalityTag::Identity,
            top: Some(k),
            bottom: Some(k),
            gap: 0.0,
        });
    }
    let ev = m.eigenvalues(DEFAULT_ROOT_TOL)?;
    // Eigenvalues of the inverse are exact reciprocals; reuse one solve.
    let ev_inv: Vec<Complex64> = ev.iter().map(|z| z.inv()).collect();
    let top = end_analysis(&ev, tol)?;
    let bottom = end_analysis(&ev_inv, tol)?;
    Ok(match (top, bottom) {
        (EndOutcome::ComplexTop, _) => ProximalityClass {
            tag: ProximalityTag::NotSemiProximal,
            top: None,
            bottom: None,
            gap: 0.0,
        },
        (EndOutcome::Leading(t, g), EndOutcome::ComplexTop) => ProximalityClass {
            tag: ProximalityTag::SemiProximalOnly,
            top: Some(t),
            bottom: None,
            gap: g,
        },
        (EndOutcome::Leading(t, gt), EndOutcome::Leading(binv, gb)) => {
            let b = binv.recip();
            let tag = if t * b > 0.0 {
                ProximalityTag::Proximal
            } else {
                ProximalityTag::SemiProximalOnly
            };
            ProximalityClass {
                tag,
                top: Some(t),
                bottom: Some(b),
                gap: gt.min(gb),
            }
        }
    })
}

/// Hilbert translation length log(lambda_top / lambda_bottom) of a
/// proximal matrix; zero for scalar matrices; NotProximal otherwise.
pub fn hilbert_translation_length(m: &SquareMatrix, tol: f64) -> Result<f64, SpectralError> {
    let class = classify_proximal(m, tol)?;
    match class.tag {
        ProximalityTag::Identity => Ok(0.0),
        ProximalityTag::Proximal => {
            let ratio = class.top.unwrap() / class.bottom.unwrap();
            Ok(ratio.ln())
        }
        tag => Err(SpectralError::NotProximal(tag)),
    }
}

/// The global Cartan involution d(A) = (A^t)^{-1}, computed exactly.
pub fn duality_map(m: &SquareMatrix) -> Result<SquareMatrix, SpectralError> {
    Ok(m.inverse()?.transpose())
}

/// Scale to |det| = 1 in floating point. Eigenvalue ratios, proximality,
/// and translation length are all unchanged by this.
pub fn normalize_det(m: &SquareMatrix) -> Result<nalgebra::DMatrix<f64>, SpectralError> {
    let det = m.det();
    if Ring::is_zero(&det) {
        return Err(SpectralError::SingularMatrix);
    }
    let scale = rational_to_f64(&det.abs()).powf(1.0 / m.dim() as f64);
    Ok(m.to_dmatrix() / scale)
}

/// Exact predicate: do the two matrices share an eigenvalue ratio? The
/// decision evaluates the common root-ratio polynomial of the two
/// characteristic polynomials over the rationals; no floating point.
pub fn common_eigenvalue_ratio(
    m: &SquareMatrix,
    n: &SquareMatrix,
) -> Result<bool, SpectralError> {
    if Ring::is_zero(&m.det()) || Ring::is_zero(&n.det()) {
        return Err(SpectralError::SingularMatrix);
    }
    Ok(has_common_root_ratio(m.char_poly(), n.char_poly())?)
}

/// True when both matrices are scalar, or both are proximal with
/// translation lengths within `tol`. Anything else (including inputs this
/// layer refuses to classify) is false, never an error.
pub fn same_length_pair(m: &SquareMatrix, n: &SquareMatrix, tol: f64) -> bool {
    let lm = hilbert_translation_length(m, DEFAULT_PROXIMALITY_TOL);
    let ln = hilbert_translation_length(n, DEFAULT_PROXIMALITY_TOL);
    match (lm, ln) {
        (Ok(a), Ok(b)) => (a - b).abs() < tol,
        _ => false,
    }
}

/// Parse the matrix JSON format `{"dim": 3, "entries": [["1","0","0"],
/// ...]}`; entries are rational strings like `"-3/4"` or plain JSON
/// integers. Floating literals are rejected.
pub fn matrix_from_json(text: &str) -> Result<SquareMatrix, FormatError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| FormatError(format!("invalid JSON: {e}")))?;
    matrix_from_value(&value)
}

pub(crate) fn matrix_from_value(value: &serde_json::Value) -> Result<SquareMatrix, FormatError> {
    let obj = value
        .as_object()
        .ok_or_else(|| FormatError("matrix JSON must be an object".into()))?;
    let dim = obj
        .get("dim")
        .and_then(|d| d.as_u64())
        .ok_or_else(|| FormatError("matrix JSON needs an integer \"dim\"".into()))?
        as usize;
    let entries = obj
        .get("entries")
        .and_then(|e| e.as_array())
        .ok_or_else(|| FormatError("matrix JSON needs an \"entries\" array".into()))?;
    if entries.len() != dim {
        return Err(FormatError(format!(
            "expected {dim} rows, found {}",
            entries.len()
        )));
    }
    let mut rows = Vec::with_capacity(dim);
    for row in entries {
        let row = row
            .as_array()
            .ok_or_else(|| FormatError("each matrix row must be an array".into()))?;
        if row.len() != dim {
            return Err(FormatError(format!(
                "expected {dim} entries per row, found {}",
                row.len()
            )));
        }
        let mut out = Vec::with_capacity(dim);
        for e in row {
            out.push(rational_from_value(e)?);
        }
        rows.push(out);
    }
    SquareMatrix::from_rows(rows)
}

pub(crate) fn rational_from_value(v: &serde_json::Value) -> Result<Rational, FormatError> {
    match v {
        serde_json::Value::String(s) => Rational::from_str(s.trim())
            .map_err(|e| FormatError(format!("bad rational '{s}': {e}"))),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(rat(i))
            } else {
                Err(FormatError(format!(
                    "entry {n} is not an integer; write rationals as strings like \"3/4\""
                )))
            }
        }
        other => Err(FormatError(format!("entry {other} is not a rational"))),
    }
}

/// Serialize to the matrix JSON format with all entries as exact rational
/// strings.
pub fn matrix_to_json(m: &SquareMatrix) -> String {
    let rows: Vec<Vec<String>> = m
        .rows()
        .iter()
        .map(|r| r.iter().map(|e| e.to_string()).collect())
        .collect();
    serde_json::json!({ "dim": m.dim(), "entries": rows }).to_string()
}
