//! Simultaneous polynomial root finding (Ehrlich-Aberth iteration) with
//! Bini-style initial guesses from the Newton polygon of the coefficients.

use num_complex::Complex64;

use super::SpectralError;

/// Iteration budget; exceeding it reports NonConvergence rather than
/// returning unrefined values.
pub const MAX_SWEEPS: usize = 1000;

/// All complex roots of a real polynomial, coefficients ascending.
///
/// Every root is refined until the normalized residual
/// |p(z)| / sum_i |a_i| |z|^i drops below `tol`; that denominator is the
/// natural evaluation magnitude, so the criterion asks the residual to be
/// small relative to the cancellation floor of evaluating p at z. Roots
/// are then clustered at radius 1e2 * tol * max(1, |z|) and each cluster
/// is replaced by its centroid, repeated with multiplicity; centroids
/// with an imaginary part under the cluster radius are snapped to the
/// real axis.
pub fn polynomial_roots(coeffs: &[f64], tol: f64) -> Result<Vec<Complex64>, SpectralError> {
    let mut cs: Vec<f64> = coeffs.to_vec();
    while cs.last() == Some(&0.0) {
        cs.pop();
    }
    assert!(!cs.is_empty(), "root finding needs a nonzero polynomial");
    let mut zero_roots = 0usize;
    while cs.first() == Some(&0.0) {
        zero_roots += 1;
        cs.remove(0);
    }
    let mut roots: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); zero_roots];
    let deg = cs.len() - 1;
    match deg {
        0 => {}
        1 => roots.push(Complex64::new(-cs[0] / cs[1], 0.0)),
        2 => roots.extend(quadratic_roots(cs[0], cs[1], cs[2])),
        _ => roots.extend(aberth(&cs, tol)?),
    }
    Ok(cluster(roots, tol))
}

/// Stable quadratic formula for a*x^2 + b*x + c, c given first.
fn quadratic_roots(c: f64, b: f64, a: f64) -> Vec<Complex64> {
    let disc = b * b - 4.0 * a * c;
    if disc >= 0.0 {
        let q = -0.5 * (b + b.signum() * disc.sqrt());
        if q == 0.0 {
            // b = 0 and disc = 0: double root at the origin.
            return vec![Complex64::new(0.0, 0.0); 2];
        }
        vec![
            Complex64::new(q / a, 0.0),
            Complex64::new(c / q, 0.0),
        ]
    } else {
        let re = -b / (2.0 * a);
        let im = (-disc).sqrt() / (2.0 * a);
        vec![Complex64::new(re, im), Complex64::new(re, -im)]
    }
}

fn eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Horner evaluation together with the magnitude sum used for the
/// normalized residual.
fn eval_with_norm(coeffs: &[f64], z: Complex64) -> (Complex64, f64) {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    let r = z.norm();
    let mut norm = 0.0;
    for &c in coeffs.iter().rev() {
        norm = norm * r + c.abs();
    }
    (acc, norm.max(f64::MIN_POSITIVE))
}

/// Starting points on circles whose radii come from the upper convex hull
/// of (i, ln |a_i|), one batch of points per hull edge.
fn initial_guesses(cs: &[f64]) -> Vec<Complex64> {
    let pts: Vec<(f64, f64)> = cs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0.0)
        .map(|(i, &c)| (i as f64, c.abs().ln()))
        .collect();
    // Upper hull, scanning by ascending degree; pop non-right turns.
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let o = hull[hull.len() - 2];
            let a = hull[hull.len() - 1];
            let cross = (a.0 - o.0) * (p.1 - o.1) - (a.1 - o.1) * (p.0 - o.0);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let n = cs.len() - 1;
    let mut z = Vec::with_capacity(n);
    for (edge, pair) in hull.windows(2).enumerate() {
        let (x1, y1) = pair[0];
        let (x2, y2) = pair[1];
        let m = (x2 - x1).round() as usize;
        let radius = ((y1 - y2) / m as f64).exp();
        for j in 0..m {
            let angle = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / m as f64
                + 0.4 * (edge as f64 + 1.0)
                + std::f64::consts::PI / (2.0 * n as f64);
            z.push(Complex64::from_polar(radius, angle));
        }
    }
    debug_assert_eq!(z.len(), n);
    z
}

fn aberth(cs: &[f64], tol: f64) -> Result<Vec<Complex64>, SpectralError> {
    let n = cs.len() - 1;
    let complex_cs: Vec<Complex64> = cs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
    let deriv: Vec<Complex64> = complex_cs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();
    let mut z = initial_guesses(cs);
    for _ in 0..MAX_SWEEPS {
        let mut settled = true;
        for k in 0..n {
            let zk = z[k];
            let (p, norm) = eval_with_norm(cs, zk);
            if p.norm() <= tol * norm {
                continue;
            }
            settled = false;
            let dp = eval(&deriv, zk);
            let w = if dp.norm() == 0.0 {
                // Stationary point: nudge off it instead of dividing.
                z[k] = zk + Complex64::new(tol.max(1e-12), tol.max(1e-12));
                continue;
            } else {
                p / dp
            };
            let mut s = Complex64::new(0.0, 0.0);
            let mut collided = false;
            for (j, &zj) in z.iter().enumerate() {
                if j == k {
                    continue;
                }
                let d = zk - zj;
                if d.norm() == 0.0 {
                    collided = true;
                    break;
                }
                s += d.inv();
            }
            if collided {
                z[k] = zk + Complex64::new(1e-6 * (1.0 + zk.norm()), 0.0);
                continue;
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            z[k] = if denom.norm() == 0.0 { zk - w } else { zk - w / denom };
        }
        if settled {
            return Ok(z);
        }
    }
    Err(SpectralError::NonConvergence(MAX_SWEEPS))
}

/// Greedy clustering at radius 1e2 * tol * max(1, |z|): each cluster is
/// reported as its centroid with multiplicity, nearly-real centroids
/// snapped onto the real axis. Input order is canonicalized first so the
/// result is deterministic.
fn cluster(mut roots: Vec<Complex64>, tol: f64) -> Vec<Complex64> {
    sort_canonical(&mut roots);
    let radius = |z: Complex64| 1e2 * tol * z.norm().max(1.0);
    let mut groups: Vec<Vec<Complex64>> = Vec::new();
    'next: for &z in &roots {
        for g in groups.iter_mut() {
            let c = centroid(g);
            if (z - c).norm() <= radius(c) {
                g.push(z);
                continue 'next;
            }
        }
        groups.push(vec![z]);
    }
    let mut out = Vec::with_capacity(roots.len());
    for g in &groups {
        let mut c = centroid(g);
        if c.im.abs() <= radius(c) {
            c.im = 0.0;
        }
        for _ in 0..g.len() {
            out.push(c);
        }
    }
    sort_canonical(&mut out);
    out
}

fn centroid(g: &[Complex64]) -> Complex64 {
    g.iter().sum::<Complex64>() / g.len() as f64
}

/// Descending modulus, then descending real part, then descending
/// imaginary part.
pub(crate) fn sort_canonical(zs: &mut [Complex64]) {
    zs.sort_by(|a, b| {
        b.norm()
            .partial_cmp(&a.norm())
            .unwrap()
            .then(b.re.partial_cmp(&a.re).unwrap())
            .then(b.im.partial_cmp(&a.im).unwrap())
    });
}
