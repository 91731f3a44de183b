//! Ω^m of K[x_1..x_n]/q^k: engine, closed forms and the rank oracle, and
//! how characteristic 2 breaks the closed forms.

use kaehler::coeff::FieldSpec;
use kaehler::formulas::{delta_bruteforce, delta_formula, dim_omega_local, hf_omega_local};
use kaehler::kaehler::{euler_koszul_alternating_sum, local_omega_hilbert};

fn main() -> kaehler::Result<()> {
    let q = FieldSpec::Rationals;
    for (n, k, m) in [(2, 2, 1), (2, 3, 2), (3, 3, 2)] {
        let engine = local_omega_hilbert(q, n, k, m)?;
        let formula = hf_omega_local(n, k, m, 0)?;
        println!(
            "n={n} k={k} m={m}: engine {:?} formula {:?} dim {} delta {} (rank {})",
            engine.values,
            formula.values,
            dim_omega_local(n, k, m, 0)?,
            delta_formula(n, k, m),
            delta_bruteforce(q, n, k, m)?
        );
    }

    let f2 = FieldSpec::prime(2)?;
    let w1 = local_omega_hilbert(f2, 2, 2, 1)?;
    println!("over F2: HF {:?}, dim {} vs char-0 value {}", w1.values, w1.total(), dim_omega_local(2, 2, 1, 0)?);
    println!("over F2: delta rank {} vs formula {}", delta_bruteforce(f2, 2, 2, 1)?, delta_formula(2, 2, 1));
    println!("over F2: alternating sum in degree 2 = {}", euler_koszul_alternating_sum(f2, 2, 2, 2)?);
    match hf_omega_local(2, 2, 1, 2) {
        Err(e) => println!("closed form refused: {e}"),
        Ok(_) => println!("closed form accepted"),
    }
    Ok(())
}
