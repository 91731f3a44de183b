//! Presentations of the modules of Kähler differential `m`-forms of a
//! zero-dimensional scheme and the Hilbert data derived from them: torsion,
//! Euler-form kernel, Koszul submodule, and the graded fat-point local rings.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::groebner::{saturate_submodule, GradedFreeModule, ModuleElement, Submodule};
use crate::hilbert::{affine_k_dimension, hf_module_quotient, stabilize, HilbertData};
use crate::poly::{terms_of_degree, Polynomial, Ring, Term};
use crate::schemes::SchemeCtx;

/// A free module with basis `dX_L` (ascending `m`-subsets `L` of the ring
/// variables, every basis vector of degree `m`) and the relation submodule
/// `I·Ω^m + dI ∧ Ω^{m-1}`.
#[derive(Clone, Debug)]
pub struct KaehlerPresentation {
    m: usize,
    relations: Submodule,
}

impl KaehlerPresentation {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn module(&self) -> &GradedFreeModule {
        self.relations.module()
    }

    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    /// Hilbert function of the presented module in degrees `0..=upto`.
    pub fn hilbert_values(&self, upto: usize) -> Result<Vec<i64>> {
        hf_module_quotient(&self.relations, upto)
    }
}

/// Ascending `m`-subsets of `vars` in lexicographic order.
pub fn exterior_labels(vars: &[usize], m: usize) -> Vec<Vec<usize>> {
    fn go(vars: &[usize], m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..vars.len() {
            cur.push(vars[i]);
            go(vars, m, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(vars, m, 0, &mut Vec::new(), &mut out);
    out
}

/// `dG ∧ dX_J` written in the basis `dX_L`: inserting `dX_l` in front of
/// `ν` smaller indices contributes the sign `(-1)^ν`.
fn wedge_differential(g: &Polynomial, j: &[usize], index: &HashMap<Vec<usize>, usize>) -> Result<ModuleElement> {
    let ring = *g.ring();
    let mut coords = Vec::new();
    for l in ring.vars() {
        if j.contains(&l) {
            continue;
        }
        let dg = g.partial_derivative(l);
        if dg.is_zero() {
            continue;
        }
        let nu = j.iter().filter(|&&x| x < l).count();
        let mut label = j.to_vec();
        label.insert(nu, l);
        let pos = index[&label];
        coords.push((pos, if nu % 2 == 1 { dg.neg() } else { dg }));
    }
    ModuleElement::new(ring, coords)
}

/// Presentation of `Ω^m` of `ring / <gens>`. For `m = 0` this is the ring
/// quotient itself; for `m` above the number of variables the module is zero.
pub fn presentation(ring: Ring, gens: &[Polynomial], m: usize) -> Result<KaehlerPresentation> {
    let vars: Vec<usize> = ring.vars().collect();
    let labels = exterior_labels(&vars, m);
    let index: HashMap<Vec<usize>, usize> = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    let lower = if m >= 1 { exterior_labels(&vars, m - 1) } else { Vec::new() };
    let module = GradedFreeModule::with_labels(ring, vec![m as u32; labels.len()], labels)?;
    let mut rels = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        for pos in 0..module.rank() {
            rels.push(ModuleElement::single(pos, g.clone()));
        }
        for j in &lower {
            rels.push(wedge_differential(g, j, &index)?);
        }
    }
    Ok(KaehlerPresentation {
        m,
        relations: Submodule::new(module, rels)?,
    })
}

/// Presentation of `Ω^m_{R/K}` built from the reduced Gröbner basis of `I`.
pub fn build_omega_presentation(ctx: &SchemeCtx, m: usize) -> Result<&KaehlerPresentation> {
    if m == 0 {
        return Err(Error::FormDegreeOutOfRange { m, n: ctx.n() });
    }
    ctx.projective_presentation(m)
}

/// Hilbert data of `Ω^m_{R/K}`, computed to `2r + m + 1` and read off at the
/// guaranteed stabilization degree `2r + m`.
pub fn omega_hilbert(ctx: &SchemeCtx, m: usize) -> Result<HilbertData> {
    let bound = 2 * ctx.r() + m;
    let values = build_omega_presentation(ctx, m)?.hilbert_values(bound + 1)?;
    stabilize(values, bound)
}

/// `dim_K Ω^m_{S/K}` for the affine coordinate ring `S`; `m = 0` gives `deg`.
pub fn omega_affine_dim(ctx: &SchemeCtx, m: usize) -> Result<u64> {
    if m == 0 {
        return Ok(ctx.deg());
    }
    affine_k_dimension(ctx.affine_presentation(m)?.relations())
}

/// `X_i e_j - X_j e_i` for `i < j`, in the basis `dX_0, ..., dX_n`.
pub fn koszul_generators(ring: Ring) -> Result<Vec<ModuleElement>> {
    let one = ring.field().one();
    let mut out = Vec::new();
    for i in ring.vars() {
        for j in ring.vars().filter(|&j| j > i) {
            let xi = Polynomial::monomial(ring, Term::var(i), one.clone());
            let xj = Polynomial::monomial(ring, Term::var(j), one.clone());
            let pi = i - ring.first_var();
            let pj = j - ring.first_var();
            out.push(ModuleElement::new(ring, vec![(pj, xi), (pi, xj.neg())])?);
        }
    }
    Ok(out)
}

/// The torsion submodule `(N :_F x_0^∞)` of the `Ω^1` presentation.
pub fn torsion_submodule(ctx: &SchemeCtx) -> Result<Submodule> {
    let pres = build_omega_presentation(ctx, 1)?;
    let x0 = Polynomial::var(*ctx.ring(), 0)?;
    saturate_submodule(pres.relations(), &x0)
}

/// `HF` of `L / N` where `L ⊇ N` are submodules of the same free module.
fn hf_difference(n: &Submodule, l: &Submodule, upto: usize) -> Result<Vec<i64>> {
    let a = hf_module_quotient(n, upto)?;
    let b = hf_module_quotient(l, upto)?;
    Ok(a.iter().zip(&b).map(|(x, y)| x - y).collect())
}

/// Hilbert data of the torsion submodule of `Ω^1_{R/K}`; its stable value
/// must be 0 from degree `2r + 1` on.
pub fn torsion_hilbert(ctx: &SchemeCtx) -> Result<HilbertData> {
    let pres = build_omega_presentation(ctx, 1)?;
    let sat = torsion_submodule(ctx)?;
    let bound = 2 * ctx.r() + 1;
    let values = hf_difference(pres.relations(), &sat, bound + 1)?;
    let data = stabilize(values, bound)?;
    if data.hp != 0 {
        return Err(Error::StabilizationViolated { bound, values: data.values });
    }
    Ok(data)
}

/// `HF` of the kernel of the Euler form `dx_i ↦ x_i`, obtained as
/// `HF_{Ω^1} - HF_𝔪` since the form maps onto the maximal ideal.
pub fn euler_kernel_hilbert(ctx: &SchemeCtx) -> Result<HilbertData> {
    let bound = 2 * ctx.r() + 1;
    let omega = build_omega_presentation(ctx, 1)?.hilbert_values(bound + 1)?;
    let mut values = vec![0];
    for (i, &v) in omega.iter().enumerate().skip(1) {
        let d = v - ctx.hf().at(i);
        if d < 0 {
            return Err(Error::InternalInconsistency(format!(
                "Euler form is not onto the maximal ideal in degree {i}"
            )));
        }
        values.push(d);
    }
    stabilize(values, bound)
}

/// Relations of `Ω^1` together with the Koszul generators.
pub fn koszul_extended_relations(ctx: &SchemeCtx) -> Result<Submodule> {
    let pres = build_omega_presentation(ctx, 1)?;
    pres.relations().extended(koszul_generators(*ctx.ring())?)
}

/// `HF` of the Koszul submodule `U = <x_i dx_j - x_j dx_i>` of `Ω^1_{R/K}`.
pub fn koszul_submodule_hilbert(ctx: &SchemeCtx) -> Result<HilbertData> {
    let pres = build_omega_presentation(ctx, 1)?;
    let bound = 2 * ctx.r() + 1;
    let values = hf_difference(pres.relations(), &koszul_extended_relations(ctx)?, bound + 1)?;
    stabilize(values, bound)
}

/// `F = F_0 X_0 + ... + F_n X_n` with `F_i` free of variables before `X_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularDecomposition {
    /// One component per ring variable, in slot order.
    pub components: Vec<Polynomial>,
}

impl TriangularDecomposition {
    /// `Σ F_i X_i`.
    pub fn recombine(&self) -> Result<Polynomial> {
        let ring = *self.components[0].ring();
        let one = ring.field().one();
        let mut acc = Polynomial::zero(ring);
        for (f, slot) in self.components.iter().zip(ring.vars()) {
            acc = acc.add(&f.mul_term(&Term::var(slot), &one)?)?;
        }
        Ok(acc)
    }
}

/// Assigns every term to the cofactor of its smallest-index variable.
pub fn triangular_decompose(f: &Polynomial) -> Result<TriangularDecomposition> {
    let ring = *f.ring();
    let first = ring.first_var();
    let mut parts: Vec<Vec<(Term, crate::coeff::FieldElem)>> = vec![Vec::new(); ring.nvars()];
    for (t, c) in f.terms() {
        let k = ring.vars().find(|&s| t.exp(s) > 0).ok_or(Error::NonzeroConstantTerm)?;
        parts[k - first].push((Term::var(k).quotient_of(t), c.clone()));
    }
    Ok(TriangularDecomposition {
        components: parts.into_iter().map(|ts| Polynomial::from_terms(ring, ts)).collect(),
    })
}

/// `Σ F_i dx_i` for the triangular decomposition of `g`.
pub fn gamma_theta(g: &Polynomial) -> Result<ModuleElement> {
    let tri = triangular_decompose(g)?;
    ModuleElement::new(*g.ring(), tri.components.into_iter().enumerate().collect())
}

/// Koszul generators plus `Σ F_{j,i} dx_i` for each Gröbner basis element
/// `G_j` of `I`; together they generate the kernel of the Euler form.
pub fn ker_epsilon_generators(ctx: &SchemeCtx) -> Result<Vec<ModuleElement>> {
    let mut out = koszul_generators(*ctx.ring())?;
    for g in ctx.ideal().gb().polys() {
        out.push(gamma_theta(g)?);
    }
    Ok(out)
}

/// `true` iff `Σ w_i x_i` vanishes in `R`.
pub fn in_euler_kernel(ctx: &SchemeCtx, w: &ModuleElement) -> Result<bool> {
    let ring = *ctx.ring();
    let one = ring.field().one();
    let mut acc = Polynomial::zero(ring);
    for (i, p) in w.coords() {
        acc = acc.add(&p.mul_term(&Term::var(ring.first_var() + i), &one)?)?;
    }
    Ok(ctx.ideal().contains(&acc))
}

/// `true` iff `w` represents an element of the Koszul submodule of `Ω^1_{R/K}`.
pub fn in_koszul_submodule(ctx: &SchemeCtx, w: &ModuleElement) -> Result<bool> {
    Ok(koszul_extended_relations(ctx)?.contains(w))
}

/// Presentation of `Ω^m_{S/K}` for `S = K[x_1..x_n] / 𝔮^k`, `𝔮` the
/// homogeneous maximal ideal.
pub fn local_fat_point_presentation(field: FieldSpec, n: usize, k: u32, m: usize) -> Result<KaehlerPresentation> {
    let a = Ring::affine(field, n)?;
    let one = field.one();
    let gens: Vec<Polynomial> = terms_of_degree(&a, k)
        .into_iter()
        .map(|t| Polynomial::monomial(a, t, one.clone()))
        .collect();
    presentation(a, &gens, m)
}

/// Graded Hilbert function of `Ω^m_{S/K}` for `S = K[x_1..x_n] / 𝔮^k`
/// (`m = 0` gives `S`). All values vanish beyond degree `m + k - 1`.
pub fn local_omega_hilbert(field: FieldSpec, n: usize, k: u32, m: usize) -> Result<HilbertData> {
    let pres = local_fat_point_presentation(field, n, k, m)?;
    let upto = m + k as usize + 1;
    stabilize(pres.hilbert_values(upto)?, upto - 1)
}

/// `Σ_{m=0}^{n} (-1)^m HF_{Ω^m_{S/K}}(i)` with `Ω^0_{S/K}` read as `𝔮/𝔮^k`;
/// zero whenever the Euler–Koszul complex is exact in degree `i`.
pub fn euler_koszul_alternating_sum(field: FieldSpec, n: usize, k: u32, i: usize) -> Result<i64> {
    let mut acc = 0i64;
    for m in 0..=n {
        let v = if m == 0 && i == 0 {
            0
        } else {
            local_omega_hilbert(field, n, k, m)?.at(i)
        };
        acc += if m % 2 == 0 { v } else { -v };
    }
    Ok(acc)
}

/// Evidence behind a Hilbert-polynomial based classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialSummary {
    /// `dim_K Ω^m_{S/K}` for `m = 0..=n`.
    pub affine_dims: Vec<u64>,
    /// `HP(Ω^m_{R/K})` for `m = 1..=n+1`.
    pub hp: Vec<i64>,
}

/// Affine dimensions and Hilbert polynomials of all form degrees.
pub fn differential_summary(ctx: &SchemeCtx) -> Result<DifferentialSummary> {
    let n = ctx.n();
    let affine_dims = (0..=n).map(|m| omega_affine_dim(ctx, m)).collect::<Result<Vec<_>>>()?;
    let hp = (1..=n + 1)
        .map(|m| omega_hilbert(ctx, m).map(|d| d.hp))
        .collect::<Result<Vec<_>>>()?;
    Ok(DifferentialSummary { affine_dims, hp })
}
