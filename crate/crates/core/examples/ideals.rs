//! Gröbner bases and the ideal operations built on them.

use kaehler::coeff::FieldSpec;
use kaehler::groebner::{colon, intersect, saturate, Ideal};
use kaehler::io::parse_polynomial;
use kaehler::poly::Ring;

fn main() -> kaehler::Result<()> {
    let r = Ring::projective(FieldSpec::Rationals, 2)?;
    let p = |s: &str| parse_polynomial(s, &r);

    let line = Ideal::new(r, vec![p("X2")?])?;
    let conic = Ideal::new(r, vec![p("X1^2 - X0*X2")?])?;
    let both = line.sum(&conic)?;
    println!("line + conic, reduced basis:");
    for g in both.gb().polys() {
        println!("  {g}");
    }

    let a = Ideal::new(r, vec![p("X1")?, p("X2")?])?;
    let b = Ideal::new(r, vec![p("X1 - X0")?, p("X2")?])?;
    let two_points = intersect(&a, &b)?;
    println!("two points: {:?}", two_points.gb().polys().iter().map(|g| g.to_string()).collect::<Vec<_>>());

    // an embedded component at the irrelevant ideal disappears under saturation
    let m = Ideal::new(r, vec![p("X0")?, p("X1")?, p("X2")?])?;
    let dirty = two_points.product(&m)?;
    let clean = saturate(&dirty, &p("X0")?)?;
    println!("saturation recovers the points: {}", clean.same_as(&two_points));
    println!("(I : X1) = {:?}", colon(&two_points, &p("X1")?)?.gb().polys().iter().map(|g| g.to_string()).collect::<Vec<_>>());
    Ok(())
}
