//! Hilbert functions of graded quotients by standard-monomial counting.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{GradedFreeModule, Ideal, ModuleGb, Submodule};
use crate::poly::terms_of_degree;

/// Default number of degrees tried before giving up on stabilization.
pub const DEFAULT_CAP: usize = 256;

/// A finite prefix of a Hilbert function with its stable value and the
/// degree from which that value is attained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub values: Vec<i64>,
    pub hp: i64,
    pub ri: usize,
}

impl HilbertData {
    /// Value in degree `i`, extending by `hp` past the recorded prefix.
    pub fn at(&self, i: usize) -> i64 {
        self.values.get(i).copied().unwrap_or(self.hp)
    }

    /// Builds data for a function that is eventually constant at the last
    /// recorded value.
    pub fn from_eventually_constant(values: Vec<i64>) -> Self {
        let hp = values.last().copied().unwrap_or(0);
        let ri = first_stable_index(&values, hp);
        HilbertData { values, hp, ri }
    }

    /// Sum of all values; meaningful when `hp == 0`.
    pub fn total(&self) -> i64 {
        self.values.iter().sum()
    }
}

fn first_stable_index(values: &[i64], hp: i64) -> usize {
    let mut ri = values.len();
    while ri > 0 && values[ri - 1] == hp {
        ri -= 1;
    }
    ri
}

/// Number of standard terms of degree `d` in `F / <leading terms>`.
pub fn count_standard(gb: &ModuleGb, d: u32) -> i64 {
    count_standard_in(gb.module(), d, |pos, t| gb.lead_divides(pos, t))
}

fn count_standard_in(module: &GradedFreeModule, d: u32, in_lead: impl Fn(usize, &crate::poly::Term) -> bool) -> i64 {
    let mut total = 0i64;
    for pos in 0..module.rank() {
        let tw = module.twist(pos);
        if d < tw {
            continue;
        }
        total += terms_of_degree(module.ring(), d - tw)
            .iter()
            .filter(|t| !in_lead(pos, t))
            .count() as i64;
    }
    total
}

/// `HF` of `P / I` in degrees `0..=upto`.
pub fn hf_ring_quotient(ideal: &Ideal, upto: usize) -> Result<Vec<i64>> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneousInput);
    }
    let gb = ideal.gb();
    Ok((0..=upto as u32)
        .map(|d| {
            terms_of_degree(gb.ring(), d)
                .iter()
                .filter(|t| !gb.lead_divides(t))
                .count() as i64
        })
        .collect())
}

/// `HF` of `F / N` in degrees `0..=upto`.
pub fn hf_module_quotient(n: &Submodule, upto: usize) -> Result<Vec<i64>> {
    if !n.is_homogeneous() {
        return Err(Error::NonHomogeneousInput);
    }
    let gb = n.gb();
    Ok((0..=upto as u32).map(|d| count_standard(gb, d)).collect())
}

/// Reads off the stable value at a degree where stability is guaranteed.
/// Requires values up to at least `bound + 1`.
pub fn stabilize(values: Vec<i64>, bound: usize) -> Result<HilbertData> {
    if values.len() < bound + 2 || values[bound] != values[bound + 1] {
        return Err(Error::StabilizationViolated { bound, values });
    }
    let hp = values[bound];
    if values[bound..].iter().any(|&v| v != hp) {
        return Err(Error::StabilizationViolated { bound, values });
    }
    let ri = first_stable_index(&values, hp);
    Ok(HilbertData { values, hp, ri })
}

/// Hilbert function of `P / I` for a zero-dimensional scheme, computed until
/// the first repeated value. `hp` is the degree and `ri` the regularity index.
pub fn hf_x_autostop(ideal: &Ideal, cap: usize) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneousInput);
    }
    let gb = ideal.gb();
    let mut values: Vec<i64> = Vec::new();
    for d in 0..=cap {
        let v = terms_of_degree(gb.ring(), d as u32)
            .iter()
            .filter(|t| !gb.lead_divides(t))
            .count() as i64;
        values.push(v);
        if d > 0 && values[d] == values[d - 1] {
            let hp = v;
            let ri = first_stable_index(&values, hp);
            return Ok(HilbertData { values, hp, ri });
        }
    }
    Err(Error::NotZeroDimensional(cap))
}

/// `dim_K F / N` for a submodule of a free module over the affine ring.
/// Errors if some basis vector lacks a pure power of each variable among the
/// leading terms.
pub fn affine_k_dimension(n: &Submodule) -> Result<u64> {
    let gb = n.gb();
    let module = n.module();
    let ring = module.ring();
    let mut total = 0u64;
    for pos in 0..module.rank() {
        let leads: Vec<_> = gb
            .leading_terms()
            .iter()
            .filter(|(p, _)| *p == pos)
            .map(|(_, t)| *t)
            .collect();
        if leads.iter().any(|t| t.is_one()) {
            continue;
        }
        let mut bound = 0u32;
        for v in ring.vars() {
            let pure = leads
                .iter()
                .filter(|t| t.degree() == t.exp(v))
                .map(|t| t.exp(v))
                .min()
                .ok_or(Error::InfiniteDimensional)?;
            bound += pure - 1;
        }
        for d in 0..=bound {
            total += terms_of_degree(ring, d)
                .iter()
                .filter(|t| !leads.iter().any(|l| l.divides(t)))
                .count() as u64;
        }
    }
    Ok(total)
}

/// `dim_K A / I` for an ideal of the affine ring.
pub fn affine_ideal_k_dimension(ideal: &Ideal) -> Result<u64> {
    let module = GradedFreeModule::new(*ideal.ring(), vec![0]);
    let gens = ideal
        .generators()
        .iter()
        .map(|g| crate::groebner::ModuleElement::single(0, g.clone()))
        .collect();
    affine_k_dimension(&Submodule::new(module, gens)?)
}
