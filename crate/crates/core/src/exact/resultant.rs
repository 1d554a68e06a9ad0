use super::ring::Ring;
use super::unipoly::UniPoly;
use super::ExactError;

/// Determinant by fraction-free Bareiss elimination with row pivoting.
///
/// Every intermediate entry is a minor of the (row-permuted) input matrix,
/// so the divisions by the previous pivot are exact in the ring; a whole
/// zero column under the pivot is an exact zero determinant.
pub fn bareiss_determinant<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    if n == 0 {
        return R::one();
    }
    let mut flipped = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    flipped = !flipped;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division by a prior pivot is exact");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if flipped {
        det.neg()
    } else {
        det
    }
}

fn ring_pow<R: Ring>(x: &R, k: usize) -> R {
    let mut acc = R::one();
    for _ in 0..k {
        acc = acc.mul(x);
    }
    acc
}

/// Resultant of two polynomials as the determinant of their Sylvester
/// matrix, with the convention `Res(A, B) = lc(A)^deg(B) * prod B(alpha)`
/// over the roots `alpha` of `A`. Nonzero constants are allowed and give
/// the degenerate power formula.
pub fn sylvester_resultant<R: Ring>(
    a: &UniPoly<R>,
    b: &UniPoly<R>,
) -> Result<R, ExactError> {
    let (m, n) = match (a.degree(), b.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => {
            return Err(ExactError::ZeroPolynomial(
                "resultant with a zero polynomial",
            ))
        }
    };
    if m == 0 {
        return Ok(ring_pow(a.leading().unwrap(), n));
    }
    if n == 0 {
        return Ok(ring_pow(b.leading().unwrap(), m));
    }
    let size = m + n;
    let mut mat = vec![vec![R::zero(); size]; size];
    for i in 0..n {
        for t in 0..=m {
            mat[i][i + t] = a.coeff(m - t);
        }
    }
    for j in 0..m {
        for t in 0..=n {
            mat[n + j][j + t] = b.coeff(n - t);
        }
    }
    Ok(bareiss_determinant(mat))
}
