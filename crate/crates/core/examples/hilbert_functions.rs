//! Hilbert function, degree and regularity index of point schemes.

use kaehler::coeff::FieldSpec;
use kaehler::formulas::{deg_fat_points, FatPointParams};
use kaehler::schemes::{compile, SchemeSpec};

fn main() -> kaehler::Result<()> {
    let q = FieldSpec::Rationals;
    let five: &[&[i64]] = &[&[1, 0, 1], &[1, 1, 2], &[1, 2, 2], &[1, 3, 1], &[1, 1, 0]];
    let x = compile(SchemeSpec::from_integer_points(q, 2, five, 1))?;
    println!("five points on a conic: HF {:?}, deg {}, r {}", x.hf().values, x.deg(), x.r());

    for m in 1..=4u32 {
        let fat = compile(SchemeSpec::from_integer_points(q, 2, &[&[1, 0, 0], &[1, 1, 1]], m))?;
        let params = FatPointParams { n: 2, mults: vec![m, m], char: 0 };
        println!(
            "two {m}-fold points: HF {:?}, deg {} (formula {})",
            fat.hf().values,
            fat.deg(),
            deg_fat_points(&params)
        );
    }
    Ok(())
}
