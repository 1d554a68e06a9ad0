//! Seeded random generators and numeric helpers shared by the
//! integration suites. Every suite fixes its own seeds, so failures
//! reproduce exactly.
#![allow(dead_code)]

use hilspec::exact::{Rational, UniPoly};
use hilspec::spectral::SquareMatrix;
use hilspec::Ring;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_pow(base: &Rational, k: usize) -> Rational {
    let mut out = int(1);
    for _ in 0..k {
        out *= base.clone();
    }
    out
}

/// Monic over the rationals with nonzero constant term, coefficients of
/// moderate height so numeric roots stay well conditioned.
pub fn random_monic_poly(rng: &mut ChaCha8Rng, deg: usize) -> UniPoly<Rational> {
    loop {
        let mut coeffs: Vec<Rational> = (0..deg)
            .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=6)))
            .collect();
        coeffs.push(int(1));
        let p = UniPoly::from_coeffs(coeffs);
        if !p.constant_term().is_zero() {
            return p;
        }
    }
}

/// Monic with small integer coefficients and nonzero constant term.
pub fn random_monic_int_poly(rng: &mut ChaCha8Rng, deg: usize) -> UniPoly<Rational> {
    loop {
        let mut coeffs: Vec<Rational> =
            (0..deg).map(|_| int(rng.gen_range(-9..=9))).collect();
        coeffs.push(int(1));
        let p = UniPoly::from_coeffs(coeffs);
        if !p.constant_term().is_zero() {
            return p;
        }
    }
}

pub fn poly_f64(p: &UniPoly<Rational>) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap()).collect()
}

/// All ordered ratios x_i/x_j, i != j.
pub fn pairwise_ratios(values: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(values.len() * values.len().saturating_sub(1));
    for (i, x) in values.iter().enumerate() {
        for (j, y) in values.iter().enumerate() {
            if i != j {
                out.push(x / y);
            }
        }
    }
    out
}

pub fn hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    let one_way = |xs: &[Complex64], ys: &[Complex64]| {
        xs.iter()
            .map(|x| {
                ys.iter()
                    .map(|y| (x - y).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, dim: usize, lo: i64, hi: i64) -> SquareMatrix {
    let rows = (0..dim)
        .map(|_| (0..dim).map(|_| int(rng.gen_range(lo..=hi))).collect())
        .collect();
    SquareMatrix::from_rows(rows).unwrap()
}

pub fn random_invertible(rng: &mut ChaCha8Rng, dim: usize) -> SquareMatrix {
    loop {
        let m = random_int_matrix(rng, dim, -5, 5);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// T diag(l+, m, l-) T^-1 with distinct integer moduli and matching outer
/// signs, so the result is proximal with length log(l+/l-) known exactly.
/// Returns the matrix and that length.
pub fn random_proximal_3x3(rng: &mut ChaCha8Rng) -> (SquareMatrix, f64) {
    let mut picks = [0i64; 3];
    loop {
        for p in picks.iter_mut() {
            *p = rng.gen_range(1..=12);
        }
        picks.sort_unstable();
        if picks[0] < picks[1] && picks[1] < picks[2] {
            break;
        }
    }
    let outer_sign = if rng.gen_bool(0.5) { -1 } else { 1 };
    let mid_sign = if rng.gen_bool(0.5) { -1 } else { 1 };
    let top = outer_sign * picks[2];
    let mid = mid_sign * picks[1];
    let bottom = outer_sign * picks[0];

    let t = random_invertible(rng, 3);
    let diag = SquareMatrix::diagonal(&[int(top), int(mid), int(bottom)]);
    let m = t.mul(&diag).mul(&t.inverse().unwrap());
    let length = (picks[2] as f64 / picks[0] as f64).ln();
    (m, length)
}
