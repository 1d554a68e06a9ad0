//! Numeric cross-checks of the exact root-ratio layer: the symbolic
//! construction against brute-force arithmetic on numeric roots.

mod common;

use common::*;
use hilspec::rootratio::{has_common_root_ratio, root_ratio_poly};
use hilspec::spectral::rational_roots;
use hilspec::{Ring, UniPoly};

#[test]
fn root_ratio_zeros_match_pairwise_ratios() {
    let mut rng = rng(0x0b5e_55ed_0001);
    let mut worst = 0.0f64;
    for trial in 0..200 {
        let deg = 2 + trial % 4;
        let p = random_monic_poly(&mut rng, deg);
        let rr = root_ratio_poly(&p).unwrap();
        assert_eq!(rr.source_degree, deg);
        assert_eq!(rr.poly.degree(), Some(deg * (deg - 1)));
        assert_eq!(
            rr.poly.leading(),
            Some(&rat_pow(&p.constant_term(), deg - 1))
        );

        let roots = rational_roots(&p, 1e-12).unwrap();
        let expected = pairwise_ratios(&roots);
        let got = rational_roots(&rr.poly, 1e-12).unwrap();
        let d = hausdorff(&got, &expected);
        assert!(d < 1e-7, "trial {trial}: Hausdorff {d:.3e} for p = {p:?}");
        worst = worst.max(d);
    }
    println!("worst Hausdorff over 200 draws: {worst:.3e}");
}

#[test]
fn ratio_sets_are_closed_under_reciprocal() {
    let mut rng = rng(0x0b5e_55ed_0002);
    for trial in 0..60 {
        let deg = 2 + trial % 4;
        let p = random_monic_poly(&mut rng, deg);
        let rr = root_ratio_poly(&p).unwrap();
        let zeros = rational_roots(&rr.poly, 1e-12).unwrap();
        for z in &zeros {
            let inv = 1.0 / z;
            let nearest = zeros
                .iter()
                .map(|w| (w - inv).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(
                nearest < 1e-9,
                "trial {trial}: 1/{z} is {nearest:.3e} away from the zero set"
            );
        }
    }
}

/// Replace the roots of a monic integer polynomial by k times themselves;
/// ratios are untouched.
fn scale_roots(p: &UniPoly<hilspec::Rational>, k: i64) -> UniPoly<hilspec::Rational> {
    let n = p.degree().unwrap();
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c.mul(&rat_pow(&int(k), n - i)))
        .collect();
    UniPoly::from_coeffs(coeffs)
}

#[test]
fn shared_ratio_predicate_agrees_with_numeric_oracle() {
    let mut rng = rng(0x0b5e_55ed_0003);
    let mut shared = 0usize;
    let mut disjoint = 0usize;
    let mut near_degenerate = 0usize;
    for trial in 0..200 {
        let p = random_monic_int_poly(&mut rng, 2 + trial % 3);
        let q = if trial % 4 == 0 {
            scale_roots(&p, [2, 3, 5][trial % 3])
        } else {
            random_monic_int_poly(&mut rng, 2 + (trial + 1) % 3)
        };

        let verdict = has_common_root_ratio(&p, &q).unwrap();

        let rp = pairwise_ratios(&rational_roots(&p, 1e-12).unwrap());
        let rq = pairwise_ratios(&rational_roots(&q, 1e-12).unwrap());
        let gap = rp
            .iter()
            .flat_map(|x| rq.iter().map(move |y| (x - y).norm()))
            .fold(f64::INFINITY, f64::min);
        let oracle = gap < 1e-8;

        if verdict == oracle {
            if verdict {
                shared += 1;
            } else {
                disjoint += 1;
            }
        } else {
            // Disagreement is admissible only when the numeric ratio sets
            // nearly touch and the oracle itself is unreliable.
            assert!(
                gap < 1e-6,
                "trial {trial}: exact says {verdict}, oracle gap {gap:.3e}\np = {p:?}\nq = {q:?}"
            );
            near_degenerate += 1;
        }
    }
    println!("{shared} shared, {disjoint} disjoint, {near_degenerate} near-degenerate");
    assert!(shared >= 40, "constructed shared-ratio pairs went missing");
    assert!(disjoint >= 120, "random pairs should mostly be disjoint");
}
