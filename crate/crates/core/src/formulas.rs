//! Closed-form values for fat points and curvilinear schemes, plus a
//! brute-force rank computation of the initial defining space of `Ω^m` of a
//! fat point. All formulas use the convention `C(a, b) = 0` unless
//! `0 <= b <= a`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::hilbert::HilbertData;
use crate::kaehler::exterior_labels;
use crate::linalg::{rank, SparseVec};
use crate::poly::{terms_of_degree, Ring, SLOTS};
use crate::schemes::LocalRingProfile;

/// Binomial coefficient, zero outside `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> u64 {
    if b < 0 || a < b || a < 0 {
        return 0;
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn c(a: i64, b: i64) -> i64 {
    binom(a, b) as i64
}

/// `n`, multiplicities and characteristic of a fat point scheme.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatPointParams {
    pub n: usize,
    pub mults: Vec<u32>,
    pub char: u64,
}

/// Errors unless `char = 0` or `char > bound`.
pub fn char_gate(char: u64, bound: u64) -> Result<()> {
    if char == 0 || char > bound {
        Ok(())
    } else {
        Err(Error::CharTooSmall { char, bound })
    }
}

/// `Σ C(n + m_i - 1, n)`.
pub fn deg_fat_points(params: &FatPointParams) -> u64 {
    let n = params.n as i64;
    params.mults.iter().map(|&m| binom(n + m as i64 - 1, n)).sum()
}

/// `δ = dim (d𝔮^k ∧ Ω^{m-1})_{m+k-1}` for `S = K[x_1..x_n]/𝔮^k`.
pub fn delta_formula(n: usize, k: u32, m: usize) -> i64 {
    let (n, k, m) = (n as i64, k as i64, m as i64);
    c(n, m) * c(n + k - 2, n - 1) - c(m + k - 2, m) * c(n + k - 2, n - m - 1)
}

fn check_local(n: usize, k: u32, m: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidSpec("multiplicity must be at least 1".into()));
    }
    if m == 0 || m > n {
        return Err(Error::FormDegreeOutOfRange { m, n });
    }
    Ok(())
}

/// Graded Hilbert function of `Ω^m_{S/K}`, `S = K[x_1..x_n]/𝔮^k`, `1 <= m <= n`.
pub fn hf_omega_local(n: usize, k: u32, m: usize, char: u64) -> Result<HilbertData> {
    check_local(n, k, m)?;
    char_gate(char, k as u64)?;
    let (ni, ki, mi) = (n as i64, k as i64, m as i64);
    let top = m + k as usize - 1;
    let mut values = Vec::with_capacity(top + 2);
    for i in 0..top {
        values.push(c(ni, mi) * c(ni + i as i64 - mi - 1, ni - 1));
    }
    values.push(c(ni, mi) * c(ni + ki - 2, ni - 1) - delta_formula(n, k, m));
    values.push(0);
    Ok(HilbertData::from_eventually_constant(values))
}

/// `dim_K Ω^m_{S/K}` for `S = K[x_1..x_n]/𝔮^k`; `m = 0` gives `dim_K S`.
pub fn dim_omega_local(n: usize, k: u32, m: usize, char: u64) -> Result<u64> {
    let (ni, ki, mi) = (n as i64, k as i64, m as i64);
    if m == 0 {
        return Ok(binom(ni + ki - 1, ni));
    }
    check_local(n, k, m)?;
    char_gate(char, k as u64)?;
    Ok(binom(ni, mi) * binom(ni + ki - 2, ni) + binom(mi + ki - 2, mi) * binom(ni + ki - 2, ni - mi - 1))
}

/// Rank of the vectors `ρ(dt ∧ dX_J)` over all terms `t` of degree `k` and
/// all `(m-1)`-subsets `J`, by exact elimination over `field`.
pub fn delta_bruteforce(field: FieldSpec, n: usize, k: u32, m: usize) -> Result<usize> {
    check_local(n, k, m)?;
    let a = Ring::affine(field, n)?;
    let vars: Vec<usize> = a.vars().collect();
    let index: HashMap<Vec<usize>, usize> = exterior_labels(&vars, m)
        .into_iter()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    let mut rows: Vec<SparseVec<(usize, [u8; SLOTS])>> = Vec::new();
    for t in terms_of_degree(&a, k) {
        for j in exterior_labels(&vars, m - 1) {
            let mut row = SparseVec::new();
            for &l in vars.iter().filter(|l| !j.contains(l)) {
                let e = t.exp(l);
                if e == 0 {
                    continue;
                }
                let mut coeff = field.from_i64(e as i64);
                if coeff.is_zero() {
                    continue;
                }
                let nu = j.iter().filter(|&&x| x < l).count();
                if nu % 2 == 1 {
                    coeff.neg_assign();
                }
                let mut label = j.clone();
                label.insert(nu, l);
                let mono = crate::poly::Term::var(l).quotient_of(&t);
                row.insert((index[&label], *mono.exponents()), coeff);
            }
            rows.push(row);
        }
    }
    Ok(rank(field, rows))
}

/// `Σ_{j=1}^{n-m} (-1)^{j+1} C(n, m+j) C(n+k-j-2, n-1)`, the alternating
/// sum that an exact Euler–Koszul complex forces to equal
/// `C(m+k-2, m) C(n+k-2, n-m-1)`.
pub fn koszul_alternating_sum(n: usize, k: u32, m: usize) -> i64 {
    let (ni, ki, mi) = (n as i64, k as i64, m as i64);
    (1..=ni - mi)
        .map(|j| {
            let s = if j % 2 == 1 { 1 } else { -1 };
            s * c(ni, mi + j) * c(ni + ki - j - 2, ni - 1)
        })
        .sum()
}

/// Hilbert polynomial of `Ω^m_{R/K}` for a fat point scheme, `1 <= m <= n+1`.
pub fn hp_omega_fatpoints(params: &FatPointParams, m: usize) -> Result<i64> {
    let n = params.n;
    if m == 0 || m > n + 1 {
        return Err(Error::FormDegreeOutOfRange { m, n });
    }
    let max = params.mults.iter().copied().max().unwrap_or(1);
    char_gate(params.char, max as u64)?;
    let (ni, mi) = (n as i64, m as i64);
    let mut total = 0i64;
    for &mult in &params.mults {
        let k = mult as i64;
        total += if m == 1 {
            c(ni + k - 1, ni) + (k - 1) * c(ni + k - 1, ni - 1)
        } else if m <= n {
            let delta = c(mi + k - 2, mi) * c(ni + k - 2, ni - mi - 1) + c(mi + k - 3, mi - 1) * c(ni + k - 2, ni - mi);
            c(ni + 1, mi) * c(ni + k - 2, ni) + delta
        } else {
            c(ni + k - 2, ni)
        };
    }
    Ok(total)
}

/// `(HP(Ω^1), HP(Ω^2))` of a weakly curvilinear scheme:
/// `2·deg - Σ κ_i` and `deg - Σ κ_i`, summing over local rings whose
/// nilpotency index is not divisible by the characteristic.
pub fn hp_curvilinear(profile: &LocalRingProfile, char: u64, deg: u64) -> (i64, i64) {
    let s: u64 = profile
        .rings
        .iter()
        .filter(|r| char == 0 || r.nu % char != 0)
        .map(|r| r.kappa)
        .sum();
    let deg = deg as i64;
    (2 * deg - s as i64, deg - s as i64)
}

/// Hilbert function of `Ω^1` of the truncated integral closure `S[x_0]`:
/// `dim Ω^1_S` in degree 0 and `deg + dim Ω^1_S` afterwards.
pub fn hf_omega_rtilde(deg: u64, dim_omega1_s: u64) -> HilbertData {
    let hp = (deg + dim_omega1_s) as i64;
    let values = vec![dim_omega1_s as i64, hp];
    let ri = usize::from(values[0] != hp);
    HilbertData { values, hp, ri }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), 6);
        assert_eq!(binom(2, -1), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(-1, 0), 0);
    }

    #[test]
    fn fat_point_degrees() {
        let p = |n, mults: Vec<u32>| FatPointParams { n, mults, char: 0 };
        assert_eq!(deg_fat_points(&p(2, vec![2])), 3);
        assert_eq!(deg_fat_points(&p(2, vec![1; 5])), 5);
        assert_eq!(deg_fat_points(&p(3, vec![2, 3])), 14);
    }

    #[test]
    fn local_values() {
        let h = hf_omega_local(2, 2, 1, 0).unwrap();
        assert_eq!(h.values, vec![0, 2, 1, 0]);
        assert_eq!(h.total(), 3);
        let h = hf_omega_local(2, 2, 2, 0).unwrap();
        assert_eq!(h.values, vec![0, 0, 1, 0, 0]);
        assert_eq!(dim_omega_local(2, 2, 1, 0).unwrap(), 3);
        assert_eq!(dim_omega_local(2, 2, 2, 0).unwrap(), 1);
        for m in 1..=3 {
            assert_eq!(dim_omega_local(3, 1, m, 0).unwrap(), 0);
        }
        assert!(matches!(hf_omega_local(2, 2, 1, 2), Err(Error::CharTooSmall { char: 2, bound: 2 })));
    }

    #[test]
    fn bruteforce_delta_examples() {
        assert_eq!(delta_bruteforce(FieldSpec::Rationals, 2, 2, 1).unwrap(), 3);
        assert_eq!(delta_bruteforce(FieldSpec::prime(2).unwrap(), 2, 2, 1).unwrap(), 1);
        for n in 1..=4 {
            for k in 1..=4 {
                assert_eq!(
                    delta_bruteforce(FieldSpec::Rationals, n, k, 1).unwrap() as u64,
                    binom((n + k as usize - 1) as i64, n as i64 - 1)
                );
            }
        }
    }

    #[test]
    fn bruteforce_matches_formula() {
        for n in 1..=4 {
            for k in 1..=4 {
                for m in 1..=n {
                    assert_eq!(
                        delta_bruteforce(FieldSpec::Rationals, n, k, m).unwrap() as i64,
                        delta_formula(n, k, m),
                        "n={n} k={k} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn fat_point_hilbert_polynomials() {
        let p = |n, mults: Vec<u32>| FatPointParams { n, mults, char: 0 };
        assert_eq!(hp_omega_fatpoints(&p(2, vec![1; 5]), 1).unwrap(), 5);
        assert_eq!(hp_omega_fatpoints(&p(2, vec![2]), 1).unwrap(), 6);
        // top form degree counts the scheme with every multiplicity lowered by one
        assert_eq!(hp_omega_fatpoints(&p(2, vec![2, 3]), 3).unwrap(), 1 + 3);
        let small = FatPointParams { n: 2, mults: vec![3], char: 3 };
        assert!(hp_omega_fatpoints(&small, 1).is_err());
        assert!(hp_omega_fatpoints(&p(2, vec![1]), 4).is_err());
    }

    #[test]
    fn curvilinear_values() {
        use crate::schemes::LocalRing;
        let prof = LocalRingProfile {
            rings: vec![LocalRing { kappa: 4, nu: 2 }],
        };
        assert_eq!(hp_curvilinear(&prof, 0, 8), (12, 4));
        assert_eq!(hp_curvilinear(&prof, 2, 8), (16, 8));
        let reduced = LocalRingProfile {
            rings: vec![LocalRing { kappa: 1, nu: 1 }; 5],
        };
        assert_eq!(hp_curvilinear(&reduced, 0, 5), (5, 0));
    }

    #[test]
    fn rtilde() {
        let h = hf_omega_rtilde(5, 0);
        assert_eq!((h.values, h.hp, h.ri), (vec![0, 5], 5, 1));
        let h = hf_omega_rtilde(8, 4);
        assert_eq!((h.values, h.hp), (vec![4, 12], 12));
    }

    proptest! {
        #[test]
        fn local_hf_sums_to_dimension(n in 1usize..=4, k in 1u32..=5, m in 1usize..=4) {
            prop_assume!(m <= n);
            let h = hf_omega_local(n, k, m, 0).unwrap();
            prop_assert_eq!(h.total() as u64, dim_omega_local(n, k, m, 0).unwrap());
        }

        #[test]
        fn alternating_identity(n in 1usize..=6, k in 1u32..=6, m in 1usize..=6) {
            prop_assume!(m <= n);
            let (ni, ki, mi) = (n as i64, k as i64, m as i64);
            prop_assert_eq!(koszul_alternating_sum(n, k, m), c(mi + ki - 2, mi) * c(ni + ki - 2, ni - mi - 1));
        }
    }
}
