//! Random inputs and property checks shared by the property suite and the
//! acceptance run.

#![allow(dead_code)]

use kaehler::coeff::FieldSpec;
use kaehler::groebner::{colon_submodule, Ideal};
use kaehler::hilbert::hf_module_quotient;
use kaehler::kaehler::{
    build_omega_presentation, euler_kernel_hilbert, euler_koszul_alternating_sum, koszul_extended_relations,
    koszul_submodule_hilbert, omega_hilbert,
};
use kaehler::poly::{terms_of_degree, Polynomial, Ring};
use kaehler::schemes::{check_cbp, colength_subschemes, compile, FatPoint, SchemeCtx, SchemeSpec};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type PropResult = Result<(), TestCaseError>;

/// Up to `max` distinct affine points with coordinates in `0..bound`.
pub fn point_set(bound: i64, min: usize, max: usize) -> impl Strategy<Value = Vec<[i64; 2]>> {
    prop::collection::btree_set((0..bound, 0..bound), min..=max)
        .prop_map(|s| s.into_iter().map(|(a, b)| [a, b]).collect())
}

pub fn reduced_scheme(field: FieldSpec, pts: &[[i64; 2]]) -> SchemeCtx {
    let fat = pts
        .iter()
        .map(|p| FatPoint {
            coords: vec![field.one(), field.from_i64(p[0]), field.from_i64(p[1])],
            multiplicity: 1,
        })
        .collect();
    compile(SchemeSpec::fat_points(field, 2, fat)).expect("distinct affine points compile")
}

/// Random homogeneous polynomials of the given degrees in `P^2`.
pub fn homogeneous_gens(field: FieldSpec, degrees: &[u32], coeffs: &[i64]) -> Vec<Polynomial> {
    let r = Ring::projective(field, 2).unwrap();
    let mut k = 0;
    degrees
        .iter()
        .map(|&d| {
            let terms = terms_of_degree(&r, d)
                .into_iter()
                .map(|t| {
                    k += 1;
                    (t, field.from_i64(coeffs[k % coeffs.len()]))
                })
                .collect();
            Polynomial::from_terms(r, terms)
        })
        .collect()
}

pub fn buchberger_post_check(field: FieldSpec, degrees: &[u32], coeffs: &[i64]) -> PropResult {
    let r = Ring::projective(field, 2).unwrap();
    let gens = homogeneous_gens(field, degrees, coeffs);
    let ideal = Ideal::new(r, gens.clone()).unwrap();
    prop_assert!(ideal.gb().is_consistent());
    for g in &gens {
        prop_assert!(ideal.contains(g));
    }
    for g in ideal.gb().polys() {
        prop_assert!(g.is_homogeneous());
    }
    Ok(())
}

/// `Σ X_i ∂f/∂X_i = (d mod p) f`.
pub fn euler_relation(field: FieldSpec, degree: u32, coeffs: &[i64]) -> PropResult {
    let r = Ring::projective(field, 2).unwrap();
    let f = homogeneous_gens(field, &[degree], coeffs).remove(0);
    let mut acc = Polynomial::zero(r);
    for v in r.vars() {
        let xi = Polynomial::var(r, v).unwrap();
        acc = acc.add(&xi.mul(&f.partial_derivative(v)).unwrap()).unwrap();
    }
    prop_assert_eq!(acc, f.scale(&field.from_i64(degree as i64)));
    Ok(())
}

/// `HF_{Ω¹}` does not increase after `r + 1` and strictly drops until the
/// regularity index when that lies beyond `r + 1`.
pub fn omega_monotone(x: &SchemeCtx) -> PropResult {
    let o = omega_hilbert(x, 1).unwrap();
    let r = x.r();
    for i in r + 1..o.ri.max(r + 1) {
        prop_assert!(o.at(i + 1) <= o.at(i), "increase at {} in {:?}", i, o.values);
        if o.ri > r + 1 {
            prop_assert!(o.at(i + 1) < o.at(i), "no drop at {} in {:?}", i, o.values);
        }
    }
    prop_assert!(o.ri <= 2 * r + 1);
    Ok(())
}

/// Each point removal lowers `HF` by a unit step starting at a degree `<= r`.
pub fn separator_step_shape(x: &SchemeCtx, pts: &[[i64; 2]]) -> PropResult {
    for skip in 0..pts.len() {
        let kept: Vec<[i64; 2]> = pts.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, p)| *p).collect();
        let y = reduced_scheme(x.field(), &kept);
        let alpha = (0..=x.r()).find(|&i| y.hf().at(i) != x.hf().at(i));
        prop_assert!(alpha.is_some());
        let alpha = alpha.unwrap();
        for i in 0..=x.r() + 1 {
            prop_assert_eq!(y.hf().at(i), x.hf().at(i) - i64::from(i >= alpha));
        }
    }
    Ok(())
}

/// Separator and differential forms of the Cayley–Bacharach property agree,
/// and the property is monotone in the degree.
pub fn cbp_agreement(x: &SchemeCtx) -> PropResult {
    if x.deg() < 2 {
        return Ok(());
    }
    let alphas: Vec<usize> = colength_subschemes(x, 1).unwrap().iter().map(|y| y.alpha).collect();
    let mut failed = false;
    for d in 0..=x.r() {
        let v = check_cbp(x, d).unwrap();
        prop_assert_eq!(v.holds, alphas.iter().all(|&a| a > d));
        prop_assert_eq!(v.differential, Some(v.holds));
        prop_assert!(!(failed && v.holds));
        failed |= !v.holds;
    }
    Ok(())
}

/// `U_i = Ker(ε)_i` in characteristic 0 and, for `p > 0`, whenever `p ∤ i`
/// or `i >= 2r + 1`; also `Ker(ε) = (U : x_0)`.
pub fn koszul_equals_euler_kernel(x: &SchemeCtx) -> PropResult {
    let u = koszul_submodule_hilbert(x).unwrap();
    let k = euler_kernel_hilbert(x).unwrap();
    let p = x.field().characteristic() as usize;
    for i in 0..=2 * x.r() + 2 {
        prop_assert!(u.at(i) <= k.at(i));
        if p == 0 || i % p != 0 || i >= 2 * x.r() + 1 {
            prop_assert_eq!(u.at(i), k.at(i), "degree {}", i);
        }
    }
    let n = build_omega_presentation(x, 1).unwrap().relations().clone();
    let x0 = Polynomial::var(*x.ring(), 0).unwrap();
    let colon = colon_submodule(&koszul_extended_relations(x).unwrap(), &x0).unwrap();
    let upto = 2 * x.r() + 2;
    let a = hf_module_quotient(&n, upto).unwrap();
    let b = hf_module_quotient(&colon, upto).unwrap();
    for i in 0..=upto {
        prop_assert_eq!(a[i] - b[i], k.at(i), "colon description, degree {}", i);
    }
    Ok(())
}

pub fn alternating_sum_vanishes(n: usize, k: u32) -> PropResult {
    for i in 0..=n + k as usize + 1 {
        prop_assert_eq!(euler_koszul_alternating_sum(FieldSpec::Rationals, n, k, i).unwrap(), 0);
    }
    Ok(())
}
