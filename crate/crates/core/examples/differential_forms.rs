//! Hilbert functions of Ω^m for every form degree of a fat point scheme.

use kaehler::coeff::FieldSpec;
use kaehler::io::render_hilbert;
use kaehler::kaehler::{omega_affine_dim, omega_hilbert};
use kaehler::schemes::{compile, FatPoint, SchemeSpec};

fn main() -> kaehler::Result<()> {
    let q = FieldSpec::Rationals;
    let pt = |a: i64, b: i64, m: u32| FatPoint {
        coords: vec![q.one(), q.from_i64(a), q.from_i64(b)],
        multiplicity: m,
    };
    let x = compile(SchemeSpec::fat_points(q, 2, vec![pt(0, 0, 2), pt(1, 3, 1), pt(-2, 1, 3)]))?;
    println!("HF_X: {:?}  deg {}  r {}", x.hf().values, x.deg(), x.r());
    for m in 1..=3 {
        println!("Omega{m}: {}", render_hilbert(&omega_hilbert(&x, m)?));
    }
    for m in 0..=2 {
        println!("dim Omega{m} of the affine ring: {}", omega_affine_dim(&x, m)?);
    }
    Ok(())
}
