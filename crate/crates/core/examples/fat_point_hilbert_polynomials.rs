//! Hilbert polynomials of Ω^m for random fat point schemes against the
//! closed form.

use kaehler::formulas::{hp_omega_fatpoints, FatPointParams};
use kaehler::kaehler::omega_hilbert;
use kaehler::schemes::{compile, SchemeSource};
use kaehler::verify::random_fat_points;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> kaehler::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 1..=3 {
        let spec = random_fat_points(&mut rng, n);
        let SchemeSource::FatPoints(pts) = &spec.source else { unreachable!() };
        let params = FatPointParams { n, mults: pts.iter().map(|p| p.multiplicity).collect(), char: 0 };
        let x = compile(spec)?;
        print!("n={n} mults {:?} deg {}:", params.mults, x.deg());
        for m in 1..=n + 1 {
            print!(" HP{m} {}/{}", omega_hilbert(&x, m)?.hp, hp_omega_fatpoints(&params, m)?);
        }
        println!();
    }
    Ok(())
}
