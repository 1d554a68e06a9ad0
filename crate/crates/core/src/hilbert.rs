//! Hilbert metric geometry on bounded convex domains.
//!
//! The distance between two interior points is the logarithm of the cross
//! ratio they form with the two boundary points of their chord. Ellipsoids
//! give the Klein model of hyperbolic space up to a factor of two.
//! Polytopes are admitted even though they are not strictly convex:
//! geodesics between their points need not be unique, but the distance
//! itself stays well defined.
//!
//! [`axis_translation_length`] is the geometric counterpart of the
//! spectral formula log(lambda_top/lambda_bottom): it moves the midpoint
//! of the axis of a proximal matrix and measures the displacement as a
//! cross ratio. The two sides are validated against each other in the
//! test suites.

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::spectral::{
    classify_proximal, ProximalityTag, SpectralError, SquareMatrix, DEFAULT_PROXIMALITY_TOL,
};
use crate::FormatError;

/// Points closer to the boundary than this margin are rejected rather
/// than fed into a cross ratio whose factors are about to blow up.
pub const INTERIOR_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("PointsCoincide: a chord needs two distinct points")]
    PointsCoincide,
    #[error("PointNotInterior: point lies outside the open domain (margin 1e-12)")]
    PointNotInterior,
}

/// Open halfspace `<normal, x> < offset`.
#[derive(Debug, Clone, PartialEq)]
pub struct Halfspace {
    pub normal: DVector<f64>,
    pub offset: f64,
}

/// A bounded convex open subset of R^n, in one of the two shapes the
/// suite works with. Construct through [`ConvexDomain::ellipsoid`],
/// [`ConvexDomain::polytope`] or [`ConvexDomain::from_json`]; those
/// validate the invariants (positive definiteness, boundedness, declared
/// interior point), and every operation here assumes they hold.
#[derive(Debug, Clone, PartialEq)]
pub enum ConvexDomain {
    /// (x - center)^t shape (x - center) < 1 with positive definite shape.
    Ellipsoid {
        center: DVector<f64>,
        shape: DMatrix<f64>,
    },
    /// Finite intersection of open halfspaces together with a designated
    /// interior reference point.
    Polytope {
        halfspaces: Vec<Halfspace>,
        interior: DVector<f64>,
    },
}

/// A chord of the domain through two interior points, ordered so that p
/// separates p_inf from q: along the line the parameters satisfy
/// t(p_inf) < t(p) < t(q) < t(q_inf).
#[derive(Debug, Clone, PartialEq)]
pub struct Chord {
    pub p_inf: Vec<f64>,
    pub p: Vec<f64>,
    pub q: Vec<f64>,
    pub q_inf: Vec<f64>,
}

impl ConvexDomain {
    pub fn ellipsoid(center: Vec<f64>, shape: Vec<Vec<f64>>) -> Result<Self, FormatError> {
        let n = center.len();
        if n == 0 || shape.len() != n || shape.iter().any(|row| row.len() != n) {
            return Err(FormatError(
                "ellipsoid shape must be square and match the center dimension".into(),
            ));
        }
        let dom = ConvexDomain::Ellipsoid {
            center: DVector::from_vec(center),
            shape: DMatrix::from_fn(n, n, |i, j| shape[i][j]),
        };
        dom.validate()?;
        Ok(dom)
    }

    /// Halfspaces as (normal, offset) pairs. The interior reference point
    /// defaults to the origin when not supplied.
    pub fn polytope(
        halfspaces: Vec<(Vec<f64>, f64)>,
        interior: Option<Vec<f64>>,
    ) -> Result<Self, FormatError> {
        let n = match halfspaces.first() {
            Some((normal, _)) => normal.len(),
            None => return Err(FormatError("polytope needs at least one halfspace".into())),
        };
        if halfspaces.iter().any(|(normal, _)| normal.len() != n) {
            return Err(FormatError("halfspace normals disagree in dimension".into()));
        }
        let interior = interior.unwrap_or_else(|| vec![0.0; n]);
        if interior.len() != n {
            return Err(FormatError(
                "interior point dimension disagrees with the halfspaces".into(),
            ));
        }
        let dom = ConvexDomain::Polytope {
            halfspaces: halfspaces
                .into_iter()
                .map(|(normal, offset)| Halfspace {
                    normal: DVector::from_vec(normal),
                    offset,
                })
                .collect(),
            interior: DVector::from_vec(interior),
        };
        dom.validate()?;
        Ok(dom)
    }

    /// The open unit ball centered at the origin.
    pub fn unit_ball(dim: usize) -> Self {
        ConvexDomain::Ellipsoid {
            center: DVector::zeros(dim),
            shape: DMatrix::identity(dim, dim),
        }
    }

    /// The open cube (-1, 1)^dim.
    pub fn unit_cube(dim: usize) -> Self {
        let mut halfspaces = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            for sign in [1.0, -1.0] {
                let mut normal = DVector::zeros(dim);
                normal[i] = sign;
                halfspaces.push(Halfspace {
                    normal,
                    offset: 1.0,
                });
            }
        }
        ConvexDomain::Polytope {
            halfspaces,
            interior: DVector::zeros(dim),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ConvexDomain::Ellipsoid { center, .. } => center.len(),
            ConvexDomain::Polytope { interior, .. } => interior.len(),
        }
    }

    fn validate(&self) -> Result<(), FormatError> {
        match self {
            ConvexDomain::Ellipsoid { shape, .. } => {
                let n = shape.nrows();
                for i in 0..n {
                    for j in 0..i {
                        let (a, b) = (shape[(i, j)], shape[(j, i)]);
                        if (a - b).abs() > 1e-12 * (1.0 + a.abs().max(b.abs())) {
                            return Err(FormatError("ellipsoid shape is not symmetric".into()));
                        }
                    }
                }
                // Sylvester's criterion: positive leading principal minors.
                for k in 1..=n {
                    let minor = shape.view((0, 0), (k, k)).determinant();
                    if minor.is_nan() || minor <= 0.0 {
                        return Err(FormatError(
                            "ellipsoid shape is not positive definite".into(),
                        ));
                    }
                }
            }
            ConvexDomain::Polytope {
                halfspaces,
                interior,
            } => {
                let n = interior.len();
                for hs in halfspaces {
                    if hs.normal.len() != n {
                        return Err(FormatError(
                            "halfspace normals disagree in dimension".into(),
                        ));
                    }
                    if hs.normal.iter().all(|&c| c == 0.0) {
                        return Err(FormatError("halfspace normal is zero".into()));
                    }
                    if hs.offset - hs.normal.dot(interior) <= INTERIOR_MARGIN {
                        return Err(FormatError(
                            "declared interior point is not strictly inside".into(),
                        ));
                    }
                }
                // Boundedness check via support in the coordinate
                // directions: every ray from the interior point along
                // +/- e_i must run into some facet. (A polytope can slip
                // past this along a skew direction; the check is the
                // declared methodology, not a decision procedure.)
                for i in 0..n {
                    for sign in [1.0, -1.0] {
                        if !halfspaces.iter().any(|hs| sign * hs.normal[i] > 0.0) {
                            return Err(FormatError(format!(
                                "polytope is unbounded along coordinate {i}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Distance-to-violation of the tightest constraint; positive inside.
    fn gap(&self, x: &DVector<f64>) -> f64 {
        match self {
            ConvexDomain::Ellipsoid { center, shape } => {
                let u = x - center;
                1.0 - u.dot(&(shape * &u))
            }
            ConvexDomain::Polytope { halfspaces, .. } => halfspaces
                .iter()
                .map(|hs| hs.offset - hs.normal.dot(x))
                .fold(f64::INFINITY, f64::min),
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.gap(&DVector::from_column_slice(x)) > INTERIOR_MARGIN
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let raw: DomainRaw = serde_json::from_str(text)
            .map_err(|e| FormatError(format!("invalid domain JSON: {e}")))?;
        match raw {
            DomainRaw::Ellipsoid { center, shape } => ConvexDomain::ellipsoid(center, shape),
            DomainRaw::Polytope {
                halfspaces,
                interior_point,
            } => ConvexDomain::polytope(
                halfspaces.into_iter().map(|h| (h.normal, h.offset)).collect(),
                interior_point,
            ),
        }
    }

    pub fn to_json(&self) -> String {
        let raw = match self {
            ConvexDomain::Ellipsoid { center, shape } => DomainRaw::Ellipsoid {
                center: center.iter().copied().collect(),
                shape: shape
                    .row_iter()
                    .map(|row| row.iter().copied().collect())
                    .collect(),
            },
            ConvexDomain::Polytope {
                halfspaces,
                interior,
            } => DomainRaw::Polytope {
                halfspaces: halfspaces
                    .iter()
                    .map(|hs| HalfspaceRaw {
                        normal: hs.normal.iter().copied().collect(),
                        offset: hs.offset,
                    })
                    .collect(),
                interior_point: Some(interior.iter().copied().collect()),
            },
        };
        serde_json::to_string(&raw).expect("domain serialization cannot fail")
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum DomainRaw {
    Ellipsoid {
        center: Vec<f64>,
        shape: Vec<Vec<f64>>,
    },
    Polytope {
        halfspaces: Vec<HalfspaceRaw>,
        #[serde(default)]
        interior_point: Option<Vec<f64>>,
    },
}

#[derive(serde::Serialize, serde::Deserialize)]
struct HalfspaceRaw {
    normal: Vec<f64>,
    offset: f64,
}

/// Intersect the line through p and q with the boundary and order the
/// four points so that p separates p_inf from q.
///
/// Panics if the point dimensions disagree with the domain.
pub fn chord_endpoints(
    domain: &ConvexDomain,
    p: &[f64],
    q: &[f64],
) -> Result<Chord, HilbertError> {
    let pv = DVector::from_column_slice(p);
    let qv = DVector::from_column_slice(q);
    if domain.gap(&pv) <= INTERIOR_MARGIN || domain.gap(&qv) <= INTERIOR_MARGIN {
        return Err(HilbertError::PointNotInterior);
    }
    if p == q {
        return Err(HilbertError::PointsCoincide);
    }
    let d = &qv - &pv;
    // Parametrize x(t) = p + t d, so t(p) = 0 and t(q) = 1; the boundary
    // hits are the unique t_minus < 0 and t_plus > 1.
    let (t_minus, t_plus) = match domain {
        ConvexDomain::Ellipsoid { center, shape } => {
            let u = &pv - center;
            let sd = shape * &d;
            let a = d.dot(&sd);
            let b = 2.0 * u.dot(&sd);
            let c = u.dot(&(shape * &u)) - 1.0;
            // c < 0 inside, a > 0 by definiteness: real roots straddling 0.
            let s = if b >= 0.0 { 1.0 } else { -1.0 };
            let w = -0.5 * (b + s * (b * b - 4.0 * a * c).sqrt());
            let (r1, r2) = (w / a, c / w);
            (r1.min(r2), r1.max(r2))
        }
        ConvexDomain::Polytope { halfspaces, .. } => {
            let mut lo = f64::NEG_INFINITY;
            let mut hi = f64::INFINITY;
            for hs in halfspaces {
                let den = hs.normal.dot(&d);
                if den == 0.0 {
                    continue;
                }
                let t = (hs.offset - hs.normal.dot(&pv)) / den;
                if den > 0.0 {
                    hi = hi.min(t);
                } else {
                    lo = lo.max(t);
                }
            }
            assert!(
                lo.is_finite() && hi.is_finite(),
                "polytope invariant violated: a chord escapes every facet"
            );
            (lo, hi)
        }
    };
    let at = |t: f64| (&pv + &d * t).iter().copied().collect();
    Ok(Chord {
        p_inf: at(t_minus),
        p: p.to_vec(),
        q: q.to_vec(),
        q_inf: at(t_plus),
    })
}

fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// d_H(p, q) = log((|q - p_inf| / |p - p_inf|) * (|p - q_inf| / |q - q_inf|)).
/// Coinciding interior points have distance zero by convention.
pub fn hilbert_distance(domain: &ConvexDomain, p: &[f64], q: &[f64]) -> Result<f64, HilbertError> {
    if p == q {
        if domain.gap(&DVector::from_column_slice(p)) <= INTERIOR_MARGIN {
            return Err(HilbertError::PointNotInterior);
        }
        return Ok(0.0);
    }
    let chord = chord_endpoints(domain, p, q)?;
    let ratio = (euclid(q, &chord.p_inf) / euclid(p, &chord.p_inf))
        * (euclid(p, &chord.q_inf) / euclid(q, &chord.q_inf));
    Ok(ratio.ln())
}

/// Eigenvector of `a` for the simple eigenvalue nearest `lambda`, by
/// inverse iteration from a slightly offset shift. The sign is fixed so
/// the largest-magnitude entry is positive.
fn refined_eigenvector(a: &DMatrix<f64>, lambda: f64) -> DVector<f64> {
    let n = a.nrows();
    let id = DMatrix::<f64>::identity(n, n);
    let mut v = DVector::from_fn(n, |i, _| 1.0 + i as f64 / (n as f64 + 1.0));
    v /= v.norm();
    let mut offset = 1e-13 * (1.0 + lambda.abs());
    for _ in 0..8 {
        let lu = (a - &id * (lambda + offset)).lu();
        let mut progressed = false;
        for _ in 0..50 {
            let Some(mut w) = lu.solve(&v) else { break };
            let norm = w.norm();
            if !norm.is_finite() || norm == 0.0 {
                break;
            }
            w /= norm;
            if w.dot(&v) < 0.0 {
                w = -w;
            }
            let step = (&w - &v).norm();
            v = w;
            progressed = true;
            if step < 1e-14 {
                break;
            }
        }
        if progressed {
            break;
        }
        // The shifted matrix decomposed exactly singular; back further off.
        offset *= 100.0;
    }
    let top = v
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.abs().total_cmp(&y.1.abs()))
        .map(|(i, _)| i)
        .unwrap();
    if v[top] < 0.0 {
        v = -v;
    }
    v
}

/// Translation length of a proximal matrix measured geometrically: take
/// the midpoint x of the axis joining the repelling and attracting fixed
/// points in an affine chart and return the cross-ratio distance from x
/// to Mx along that segment. Agrees with the spectral value
/// log(lambda_top/lambda_bottom); the suites check this to 1e-8.
///
/// Scalar matrices translate nothing and give 0.
pub fn axis_translation_length(m: &SquareMatrix) -> Result<f64, SpectralError> {
    let class = classify_proximal(m, DEFAULT_PROXIMALITY_TOL)?;
    match class.tag {
        ProximalityTag::Identity => return Ok(0.0),
        ProximalityTag::Proximal => {}
        tag => return Err(SpectralError::NotProximal(tag)),
    }
    let a = m.to_dmatrix();
    let v_plus = refined_eigenvector(&a, class.top.unwrap());
    let v_minus = refined_eigenvector(&a, class.bottom.unwrap());
    // Chart hyperplane <phi, x> = 1. With both eigenvectors sign-fixed
    // they are never close to opposite, so phi sees both of them and, M
    // being proximal (extreme eigenvalues of equal sign), the image of
    // the midpoint as well. Coordinate charts fail already for diagonal
    // matrices, whose axes live inside coordinate hyperplanes.
    let phi = (&v_plus + &v_minus) * 0.5;
    let chart = |x: &DVector<f64>| x / phi.dot(x);
    let e_plus = chart(&v_plus);
    let e_minus = chart(&v_minus);
    let x = (&e_plus + &e_minus) * 0.5;
    let mx = chart(&(&a * &x));
    let u = &e_plus - &e_minus;
    let t_of = |y: &DVector<f64>| (y - &e_minus).dot(&u) / u.dot(&u);
    // On the segment from e_minus (t=0) to e_plus (t=1) the cross-ratio
    // distance between parameters t1 < t2 is log of (t2/t1)*((1-t1)/(1-t2)).
    let (t1, t2) = {
        let (s, t) = (t_of(&x), t_of(&mx));
        (s.min(t), s.max(t))
    };
    Ok(((t2 / t1) * ((1.0 - t1) / (1.0 - t2))).ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn assert_point(p: &[f64], want: &[f64], tol: f64) {
        assert_eq!(p.len(), want.len());
        for (a, b) in p.iter().zip(want) {
            assert_close(*a, *b, tol);
        }
    }

    fn rational(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn chord_on_the_disk_diameter() {
        let disk = ConvexDomain::unit_ball(2);
        let chord = chord_endpoints(&disk, &[0.0, 0.0], &[0.5, 0.0]).unwrap();
        assert_point(&chord.p_inf, &[-1.0, 0.0], 1e-12);
        assert_point(&chord.q_inf, &[1.0, 0.0], 1e-12);

        let down = chord_endpoints(&disk, &[0.0, 0.0], &[0.0, -0.5]).unwrap();
        assert_point(&down.p_inf, &[0.0, 1.0], 1e-12);
        assert_point(&down.q_inf, &[0.0, -1.0], 1e-12);
    }

    #[test]
    fn chord_on_the_square() {
        let square = ConvexDomain::unit_cube(2);
        let chord = chord_endpoints(&square, &[0.0, 0.0], &[0.5, 0.0]).unwrap();
        assert_point(&chord.p_inf, &[-1.0, 0.0], 1e-12);
        assert_point(&chord.q_inf, &[1.0, 0.0], 1e-12);
    }

    #[test]
    fn disk_and_square_distances() {
        let disk = ConvexDomain::unit_ball(2);
        let square = ConvexDomain::unit_cube(2);
        let p = [0.0, 0.0];
        let q = [0.5, 0.0];
        assert_close(hilbert_distance(&disk, &p, &q).unwrap(), 3f64.ln(), 1e-12);
        // The segment meets the same two facets as the circle, so the
        // square agrees with the disk here.
        assert_close(hilbert_distance(&square, &p, &q).unwrap(), 3f64.ln(), 1e-12);
        assert_eq!(hilbert_distance(&disk, &q, &q).unwrap(), 0.0);
    }

    #[test]
    fn boundary_and_exterior_points_are_rejected() {
        let disk = ConvexDomain::unit_ball(2);
        for bad in [[1.0, 0.0], [2.0, 0.0], [1.0 - 1e-13, 0.0]] {
            assert_eq!(
                chord_endpoints(&disk, &[0.0, 0.0], &bad),
                Err(HilbertError::PointNotInterior)
            );
        }
        assert_eq!(
            hilbert_distance(&disk, &[1.5, 0.0], &[1.5, 0.0]),
            Err(HilbertError::PointNotInterior)
        );
        assert_eq!(
            chord_endpoints(&disk, &[0.1, 0.2], &[0.1, 0.2]),
            Err(HilbertError::PointsCoincide)
        );
    }

    #[test]
    fn axis_length_on_a_diagonal_flow() {
        let e2 = std::f64::consts::E * std::f64::consts::E;
        let m = SquareMatrix::from_f64_rows(&[
            vec![e2, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0 / e2],
        ])
        .unwrap();
        assert_close(axis_translation_length(&m).unwrap(), 4.0, 1e-9);
    }

    #[test]
    fn axis_length_matches_spectral_on_a_conjugate() {
        let t = SquareMatrix::from_rows(vec![
            vec![rational(1, 1), rational(1, 1), rational(0, 1)],
            vec![rational(0, 1), rational(1, 1), rational(1, 1)],
            vec![rational(1, 1), rational(0, 1), rational(1, 1)],
        ])
        .unwrap();
        let d = SquareMatrix::diagonal(&[rational(4, 1), rational(1, 1), rational(1, 4)]);
        let m = t.mul(&d).mul(&t.inverse().unwrap());
        assert_close(axis_translation_length(&m).unwrap(), 16f64.ln(), 1e-8);
    }

    #[test]
    fn axis_length_is_symmetric_in_inversion() {
        let t = SquareMatrix::from_rows(vec![
            vec![rational(2, 1), rational(1, 1), rational(1, 1)],
            vec![rational(1, 1), rational(3, 1), rational(0, 1)],
            vec![rational(0, 1), rational(1, 1), rational(1, 1)],
        ])
        .unwrap();
        let d = SquareMatrix::diagonal(&[rational(9, 1), rational(2, 1), rational(1, 3)]);
        let m = t.mul(&d).mul(&t.inverse().unwrap());
        let fwd = axis_translation_length(&m).unwrap();
        let bwd = axis_translation_length(&m.inverse().unwrap()).unwrap();
        assert_close(fwd, bwd, 1e-10);
        assert_close(fwd, 27f64.ln(), 1e-8);
    }

    #[test]
    fn axis_length_rejects_non_proximal_input() {
        // Rotation block times 2 on top of 1: top end is a complex pair.
        let m = SquareMatrix::from_rows(vec![
            vec![rational(0, 1), rational(-2, 1), rational(0, 1)],
            vec![rational(2, 1), rational(0, 1), rational(0, 1)],
            vec![rational(0, 1), rational(0, 1), rational(1, 1)],
        ])
        .unwrap();
        assert!(matches!(
            axis_translation_length(&m),
            Err(SpectralError::NotProximal(_))
        ));
        let id = SquareMatrix::identity(3);
        assert_eq!(axis_translation_length(&id).unwrap(), 0.0);
    }

    #[test]
    fn domain_json_round_trips() {
        let disk = ConvexDomain::ellipsoid(vec![0.5, -1.0], vec![vec![2.0, 0.5], vec![0.5, 1.0]])
            .unwrap();
        assert_eq!(ConvexDomain::from_json(&disk.to_json()).unwrap(), disk);

        let square = ConvexDomain::unit_cube(2);
        assert_eq!(ConvexDomain::from_json(&square.to_json()).unwrap(), square);

        // The interior point is optional in the input and defaults to 0.
        let parsed = ConvexDomain::from_json(
            r#"{"type":"polytope","halfspaces":[
                {"normal":[1.0,0.0],"offset":1.0},
                {"normal":[-1.0,0.0],"offset":1.0},
                {"normal":[0.0,1.0],"offset":1.0},
                {"normal":[0.0,-1.0],"offset":1.0}]}"#,
        )
        .unwrap();
        assert_eq!(parsed, square);
    }

    #[test]
    fn malformed_domains_are_rejected() {
        assert!(ConvexDomain::ellipsoid(vec![0.0, 0.0], vec![vec![1.0, 0.3], vec![0.0, 1.0]])
            .is_err());
        assert!(ConvexDomain::ellipsoid(vec![0.0, 0.0], vec![vec![1.0, 0.0], vec![0.0, -1.0]])
            .is_err());
        // A single halfspace is unbounded in the other coordinate.
        assert!(ConvexDomain::polytope(vec![(vec![1.0, 0.0], 1.0)], None).is_err());
        // Declared interior point outside.
        assert!(
            ConvexDomain::polytope(
                vec![
                    (vec![1.0, 0.0], 1.0),
                    (vec![-1.0, 0.0], 1.0),
                    (vec![0.0, 1.0], 1.0),
                    (vec![0.0, -1.0], 1.0),
                ],
                Some(vec![3.0, 0.0]),
            )
            .is_err()
        );
        assert!(ConvexDomain::from_json(r#"{"type":"simplex"}"#).is_err());
    }
}
