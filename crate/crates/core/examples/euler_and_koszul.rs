//! Torsion, Koszul submodule and Euler kernel of Ω¹ for a complete
//! intersection over F3, and a triangular form separating the last two.

use kaehler::coeff::FieldSpec;
use kaehler::io::{parse_polynomial, render_hilbert};
use kaehler::kaehler::{
    euler_kernel_hilbert, gamma_theta, in_euler_kernel, in_koszul_submodule, koszul_submodule_hilbert,
    omega_hilbert, torsion_hilbert, triangular_decompose,
};
use kaehler::poly::Ring;
use kaehler::schemes::{compile, SchemeSpec};

fn main() -> kaehler::Result<()> {
    let f3 = FieldSpec::prime(3)?;
    let r = Ring::projective(f3, 2)?;
    let g1 = parse_polynomial("X1^2 + X2^2", &r)?;
    let g2 = parse_polynomial("X0*X1^2 + X1^3 + X2^3", &r)?;
    let x = compile(SchemeSpec::ideal(f3, 2, vec![g1, g2.clone()]))?;

    println!("Omega1        {}", render_hilbert(&omega_hilbert(&x, 1)?));
    println!("torsion       {}", render_hilbert(&torsion_hilbert(&x)?));
    println!("Koszul        {}", render_hilbert(&koszul_submodule_hilbert(&x)?));
    println!("Euler kernel  {}", render_hilbert(&euler_kernel_hilbert(&x)?));

    let tri = triangular_decompose(&g2)?;
    for (i, c) in tri.components.iter().enumerate() {
        println!("cofactor of X{i}: {c}");
    }
    let w = gamma_theta(&g2)?;
    println!("in Euler kernel: {}", in_euler_kernel(&x, &w)?);
    println!("in Koszul submodule: {}", in_koszul_submodule(&x, &w)?);
    Ok(())
}
