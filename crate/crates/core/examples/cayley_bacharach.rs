//! Separators, Cayley–Bacharach and uniformity, by Hilbert functions and by
//! Ω¹.

use kaehler::coeff::FieldSpec;
use kaehler::schemes::{cbp_differential, check_cbp, check_uniform, colength_subschemes, compile, SchemeSpec};

fn main() -> kaehler::Result<()> {
    let q = FieldSpec::Rationals;
    let pencil: &[&[i64]] = &[&[1, 1, 1], &[1, 1, -1], &[1, -1, 1], &[1, -1, -1]];
    let collinear: &[&[i64]] = &[&[1, 0, 0], &[1, 1, 0], &[1, 2, 0], &[1, 0, 1]];
    for (name, pts) in [("conic pencil", pencil), ("three on a line", collinear)] {
        let x = compile(SchemeSpec::from_integer_points(q, 2, pts, 1))?;
        let alphas: Vec<usize> = colength_subschemes(&x, 1)?.iter().map(|y| y.alpha).collect();
        let v = check_cbp(&x, 1)?;
        println!(
            "{name}: separator degrees {alphas:?}, CBP(1) {} (by Omega1 {}), (2,1)-uniform {}",
            v.holds,
            cbp_differential(&x, 1)?,
            check_uniform(&x, 2, 1)?.holds
        );
    }
    Ok(())
}
