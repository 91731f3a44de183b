//! The built-in verification sweeps.

use kaehler::verify::{run_sweep, Sweep};

fn main() -> kaehler::Result<()> {
    for sweep in [Sweep::WorkedExamples, Sweep::CharGates, Sweep::FatpointSweep] {
        let doc = run_sweep(sweep)?;
        let failed: Vec<&str> = doc.results.iter().filter(|e| e.ok == Some(false)).map(|e| e.name.as_str()).collect();
        println!("{sweep:?}: {} checks, {} failed {failed:?}", doc.results.len(), failed.len());
    }
    Ok(())
}
