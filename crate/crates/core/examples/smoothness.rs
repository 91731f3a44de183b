//! Smoothness and weak curvilinearity from Hilbert polynomials of Ω^m.

use kaehler::coeff::FieldSpec;
use kaehler::formulas::hp_curvilinear;
use kaehler::io::parse_polynomial;
use kaehler::poly::Ring;
use kaehler::schemes::{
    check_smooth, check_weakly_curvilinear, compile, local_profile, LocalRing, LocalRingProfile, SchemeSpec,
};

fn main() -> kaehler::Result<()> {
    let q = FieldSpec::Rationals;
    let r = Ring::projective(q, 2)?;

    let points = compile(SchemeSpec::from_integer_points(q, 2, &[&[1, 0, 0], &[1, 1, 2]], 1))?;
    println!("two reduced points: smooth {}", check_smooth(&points)?.smooth);

    let double = compile(SchemeSpec::from_integer_points(q, 2, &[&[1, 0, 0]], 2))?;
    println!("double point: {:?}", check_weakly_curvilinear(&double)?.verdict);

    let gens = vec![
        parse_polynomial("X1^2 + X0^2", &r)?,
        parse_polynomial("(X2^2 - 2*X0^2)^2", &r)?,
    ];
    let mut spec = SchemeSpec::ideal(q, 2, gens);
    // one local ring with residue field Q(i, sqrt 2), nilpotency index 2
    spec.profile = Some(LocalRingProfile { rings: vec![LocalRing { kappa: 4, nu: 2 }] });
    let x = compile(spec)?;
    let v = check_weakly_curvilinear(&x)?;
    println!("quartic: {:?}, HP(Omega^m) = {:?}", v.verdict, v.summary.hp);
    let profile = local_profile(&x)?;
    println!("closed form (HP1, HP2) = {:?}", hp_curvilinear(&profile, 0, x.deg()));
    Ok(())
}
