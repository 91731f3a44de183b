//! Parsing, arithmetic and rendering of polynomials over Q and F_p.

use kaehler::coeff::FieldSpec;
use kaehler::io::{parse_polynomial, render_polynomial};
use kaehler::poly::Ring;

fn main() -> kaehler::Result<()> {
    let p2 = Ring::projective(FieldSpec::Rationals, 2)?;
    let f = parse_polynomial("(X2^2 - 2*X0^2)^2", &p2)?;
    println!("expanded: {}", render_polynomial(&f));
    println!("degree {:?}, homogeneous {}", f.homogeneous_degree(), f.is_homogeneous());
    println!("d/dX2: {}", f.partial_derivative(2));
    println!("dehomogenized: {}", f.dehomogenize());

    let f3 = Ring::projective(FieldSpec::prime(3)?, 2)?;
    let g = parse_polynomial("X0*X1^2 + 4*X1^3 + 1/2*X2^3", &f3)?;
    println!("over F3: {g}");

    match parse_polynomial("X1X2", &p2) {
        Err(e) => println!("rejected: {e}"),
        Ok(p) => println!("unexpectedly parsed {p}"),
    }
    Ok(())
}
