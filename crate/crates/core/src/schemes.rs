//! Zero-dimensional schemes: construction from fat points, explicit ideals or
//! primary components; subscheme enumeration and separators; smoothness,
//! curvilinearity, Cayley–Bacharach and uniformity checks.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::coeff::{FieldElem, FieldSpec};
use crate::error::{Error, Result};
use crate::formulas::binom;
use crate::groebner::{ideal_power, intersect, saturate, Ideal};
use crate::hilbert::{affine_ideal_k_dimension, hf_x_autostop, HilbertData, DEFAULT_CAP};
use crate::kaehler::{differential_summary, omega_hilbert, presentation, DifferentialSummary, KaehlerPresentation};
use crate::linalg::Echelon;
use crate::poly::{Polynomial, Ring, Term};

/// A point with multiplicity, `m·p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPoint {
    pub coords: Vec<FieldElem>,
    pub multiplicity: u32,
}

/// Where the vanishing ideal comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemeSource {
    /// `I = ∩ I_{p_i}^{m_i}`.
    FatPoints(Vec<FatPoint>),
    /// Homogeneous generators of the (saturated) vanishing ideal.
    Ideal(Vec<Polynomial>),
    /// Generators of ideals, each defining one local piece; `I` is their intersection.
    Components(Vec<Vec<Polynomial>>),
}

/// Residue-field dimension `κ` and nilpotency index `ν` of one local ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalRing {
    pub kappa: u64,
    pub nu: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalRingProfile {
    pub rings: Vec<LocalRing>,
}

impl LocalRingProfile {
    /// `Σ κ_i ν_i`.
    pub fn length(&self) -> u64 {
        self.rings.iter().map(|r| r.kappa * r.nu).sum()
    }
}

/// User-level description of a zero-dimensional scheme in `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeSpec {
    pub field: FieldSpec,
    pub n: usize,
    pub source: SchemeSource,
    pub label: Option<String>,
    pub profile: Option<LocalRingProfile>,
}

impl SchemeSpec {
    pub fn fat_points(field: FieldSpec, n: usize, points: Vec<FatPoint>) -> Self {
        SchemeSpec {
            field,
            n,
            source: SchemeSource::FatPoints(points),
            label: None,
            profile: None,
        }
    }

    pub fn ideal(field: FieldSpec, n: usize, gens: Vec<Polynomial>) -> Self {
        SchemeSpec {
            field,
            n,
            source: SchemeSource::Ideal(gens),
            label: None,
            profile: None,
        }
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    /// Points given by integer coordinates, all with multiplicity `m`.
    pub fn from_integer_points(field: FieldSpec, n: usize, pts: &[&[i64]], m: u32) -> Self {
        let points = pts
            .iter()
            .map(|p| FatPoint {
                coords: p.iter().map(|&c| field.from_i64(c)).collect(),
                multiplicity: m,
            })
            .collect();
        SchemeSpec::fat_points(field, n, points)
    }
}

/// A compiled scheme: saturated vanishing ideal, Hilbert function, degree
/// and regularity index, with cached differential presentations.
#[derive(Debug)]
pub struct SchemeCtx {
    spec: SchemeSpec,
    ring: Ring,
    ideal: Ideal,
    hf: HilbertData,
    projective: Vec<OnceLock<KaehlerPresentation>>,
    affine: Vec<OnceLock<KaehlerPresentation>>,
}

fn cached<T>(lock: &OnceLock<T>, build: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = lock.get() {
        return Ok(v);
    }
    let v = build()?;
    Ok(lock.get_or_init(|| v))
}

impl SchemeCtx {
    pub fn spec(&self) -> &SchemeSpec {
        &self.spec
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn hf(&self) -> &HilbertData {
        &self.hf
    }

    pub fn deg(&self) -> u64 {
        self.hf.hp as u64
    }

    /// Regularity index `r_𝕏`.
    pub fn r(&self) -> usize {
        self.hf.ri
    }

    /// `I^deh` in `K[x_1..x_n]`.
    pub fn affine_ideal(&self) -> Result<Ideal> {
        let gens = self.ideal.gb().polys().iter().map(|g| g.dehomogenize()).collect();
        Ideal::new(self.ring.to_affine(), gens)
    }

    /// `true` iff the source lists reduced points only.
    pub fn is_reduced_point_set(&self) -> bool {
        matches!(&self.spec.source, SchemeSource::FatPoints(ps) if ps.iter().all(|p| p.multiplicity == 1))
    }

    pub(crate) fn projective_presentation(&self, m: usize) -> Result<&KaehlerPresentation> {
        let lock = self
            .projective
            .get(m)
            .ok_or(Error::FormDegreeOutOfRange { m, n: self.n() })?;
        cached(lock, || presentation(self.ring, self.ideal.gb().polys(), m))
    }

    pub(crate) fn affine_presentation(&self, m: usize) -> Result<&KaehlerPresentation> {
        let lock = self.affine.get(m).ok_or(Error::FormDegreeOutOfRange { m, n: self.n() })?;
        cached(lock, || {
            let a = self.affine_ideal()?;
            presentation(*a.ring(), a.gb().polys(), m)
        })
    }
}

/// `<X_i - a_i X_0 : i = 1..n>` for `p = (1 : a_1 : ... : a_n)`.
pub fn point_ideal(ring: Ring, p: &[FieldElem]) -> Result<Ideal> {
    if p.len() != ring.n() + 1 {
        return Err(Error::InvalidSpec(format!(
            "point has {} coordinates, expected {}",
            p.len(),
            ring.n() + 1
        )));
    }
    if p[0].is_zero() {
        return Err(Error::PointAtInfinity);
    }
    let inv = p[0].inv()?;
    let one = ring.field().one();
    let x0 = Polynomial::monomial(ring, Term::var(0), one.clone());
    let mut gens = Vec::new();
    for i in 1..=ring.n() {
        let a = &p[i] * &inv;
        let xi = Polynomial::monomial(ring, Term::var(i), one.clone());
        gens.push(xi.sub(&x0.scale(&a))?);
    }
    Ideal::new(ring, gens)
}

fn normalize_point(p: &[FieldElem]) -> Result<Vec<FieldElem>> {
    let first = p.first().ok_or(Error::InvalidSpec("empty point".into()))?;
    if first.is_zero() {
        return Err(Error::PointAtInfinity);
    }
    let inv = first.inv()?;
    Ok(p.iter().map(|c| c * &inv).collect())
}

/// Compiles with the default safety cap on the Hilbert function loop.
pub fn compile(spec: SchemeSpec) -> Result<SchemeCtx> {
    compile_with_cap(spec, DEFAULT_CAP)
}

pub fn compile_with_cap(spec: SchemeSpec, cap: usize) -> Result<SchemeCtx> {
    let ring = Ring::projective(spec.field, spec.n)?;
    let ideal = match &spec.source {
        SchemeSource::FatPoints(points) => fat_point_ideal(ring, points)?,
        SchemeSource::Ideal(gens) => {
            let ideal = Ideal::new(ring, gens.clone())?;
            check_explicit(&ideal)?;
            ideal
        }
        SchemeSource::Components(parts) => {
            let mut acc: Option<Ideal> = None;
            for gens in parts {
                let c = Ideal::new(ring, gens.clone())?;
                if !c.is_homogeneous() {
                    return Err(Error::NonHomogeneousInput);
                }
                acc = Some(match acc {
                    None => c,
                    Some(a) => intersect(&a, &c)?,
                });
            }
            let ideal = acc.ok_or(Error::InvalidSpec("no components given".into()))?;
            check_explicit(&ideal)?;
            ideal
        }
    };
    let ideal = ideal.reduced();
    let hf = hf_x_autostop(&ideal, cap)?;
    if hf.hp == 0 {
        return Err(Error::InvalidSpec("the ideal defines the empty scheme".into()));
    }
    if hf.values[..=hf.ri].windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InternalInconsistency(format!(
            "Hilbert function {:?} is not strictly increasing up to the regularity index",
            hf.values
        )));
    }
    if let SchemeSource::FatPoints(points) = &spec.source {
        let expected: u64 = points
            .iter()
            .map(|p| binom(spec.n as i64 + p.multiplicity as i64 - 1, spec.n as i64))
            .sum();
        if hf.hp as u64 != expected {
            return Err(Error::InternalInconsistency(format!(
                "fat point degree {} differs from the expected {expected}",
                hf.hp
            )));
        }
    }
    let slots = spec.n + 3;
    Ok(SchemeCtx {
        spec,
        ring,
        ideal,
        hf,
        projective: (0..slots).map(|_| OnceLock::new()).collect(),
        affine: (0..slots).map(|_| OnceLock::new()).collect(),
    })
}

fn fat_point_ideal(ring: Ring, points: &[FatPoint]) -> Result<Ideal> {
    if points.is_empty() {
        return Err(Error::InvalidSpec("no points given".into()));
    }
    let mut seen: Vec<Vec<FieldElem>> = Vec::new();
    let mut acc: Option<Ideal> = None;
    for p in points {
        if p.multiplicity == 0 {
            return Err(Error::InvalidSpec("multiplicities must be at least 1".into()));
        }
        if p.coords.iter().any(|c| c.field() != ring.field()) {
            return Err(Error::RingMismatch);
        }
        let norm = normalize_point(&p.coords)?;
        if seen.contains(&norm) {
            return Err(Error::DuplicatePoint);
        }
        seen.push(norm);
        let q = ideal_power(&point_ideal(ring, &p.coords)?, p.multiplicity)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    Ok(acc.expect("at least one point"))
}

/// Homogeneous, and saturation by `X_0` changes nothing.
fn check_explicit(ideal: &Ideal) -> Result<()> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneousInput);
    }
    let ring = *ideal.ring();
    let sat = saturate(ideal, &Polynomial::var(ring, 0)?)?;
    if !sat.is_subset_of(ideal) {
        return Err(Error::X0ZeroDivisor);
    }
    affine_ideal_k_dimension(&Ideal::new(
        ring.to_affine(),
        ideal.gb().polys().iter().map(|g| g.dehomogenize()).collect(),
    )?)
    .map_err(|_| Error::NotZeroDimensional(0))?;
    Ok(())
}

/// A subscheme obtained by removing points from a reduced point set.
#[derive(Debug)]
pub struct SubschemeRef {
    /// Indices of removed points in the parent's source order.
    pub removed: Vec<usize>,
    pub ctx: SchemeCtx,
    /// Separator degree `α_{Y/X}`.
    pub alpha: usize,
}

fn combinations(t: usize, i: usize) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..t).collect();
    crate::kaehler::exterior_labels(&all, i)
}

/// All subschemes of colength `i` of a reduced scheme with rational support.
pub fn colength_subschemes(ctx: &SchemeCtx, i: usize) -> Result<Vec<SubschemeRef>> {
    let SchemeSource::FatPoints(points) = &ctx.spec.source else {
        return Err(Error::UnsupportedScheme(
            "subschemes are enumerated only for point sets".into(),
        ));
    };
    if !ctx.is_reduced_point_set() {
        return Err(Error::UnsupportedScheme(
            "subschemes are enumerated only for reduced point sets".into(),
        ));
    }
    if i == 0 || i as u64 >= ctx.deg() {
        return Err(Error::InvalidSpec(format!(
            "colength {i} must lie between 1 and deg - 1 = {}",
            ctx.deg() - 1
        )));
    }
    let mut out = Vec::new();
    for removed in combinations(points.len(), i) {
        let kept = points
            .iter()
            .enumerate()
            .filter(|(j, _)| !removed.contains(j))
            .map(|(_, p)| p.clone())
            .collect();
        let y = compile(SchemeSpec::fat_points(ctx.field(), ctx.n(), kept))?;
        let alpha = separator_degree(ctx, &y)?;
        out.push(SubschemeRef { removed, ctx: y, alpha });
    }
    Ok(out)
}

/// First degree in which `HF_Y` drops below `HF_𝕏`. For colength 1 the drop
/// must be a unit step that persists.
pub fn separator_degree(x: &SchemeCtx, y: &SchemeCtx) -> Result<usize> {
    let top = x.r().max(y.r()) + 1;
    let alpha = (0..=top)
        .find(|&i| y.hf().at(i) != x.hf().at(i))
        .ok_or_else(|| Error::InternalInconsistency("subscheme has the same Hilbert function".into()))?;
    if alpha > x.r() {
        return Err(Error::InternalInconsistency(format!(
            "separator degree {alpha} exceeds r = {}",
            x.r()
        )));
    }
    if x.deg() == y.deg() + 1 {
        for i in 0..=top {
            let step = i64::from(i >= alpha);
            if y.hf().at(i) != x.hf().at(i) - step {
                return Err(Error::InternalInconsistency(format!(
                    "colength-one subscheme Hilbert function {:?} is not a unit step below {:?}",
                    y.hf().values,
                    x.hf().values
                )));
            }
        }
    }
    Ok(alpha)
}

/// Smoothness decided by `Ω^1_{S/K} = 0`, with the Hilbert-polynomial form
/// (`HP(Ω^1) = deg`, `HP(Ω^m) = 0` for `m >= 2`) as a cross-check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothVerdict {
    pub smooth: bool,
    pub by_hilbert_polynomials: bool,
    pub summary: DifferentialSummary,
}

pub fn check_smooth(ctx: &SchemeCtx) -> Result<SmoothVerdict> {
    let summary = differential_summary(ctx)?;
    smooth_from_summary(ctx, summary)
}

fn smooth_from_summary(ctx: &SchemeCtx, summary: DifferentialSummary) -> Result<SmoothVerdict> {
    let smooth = summary.affine_dims[1] == 0;
    let by_hp = summary.hp[0] == ctx.deg() as i64 && summary.hp[1..].iter().all(|&h| h == 0);
    if smooth != by_hp {
        return Err(Error::InternalInconsistency(format!(
            "smoothness criteria disagree: dim Ω¹_S = {}, HP = {:?}",
            summary.affine_dims[1], summary.hp
        )));
    }
    Ok(SmoothVerdict {
        smooth,
        by_hilbert_polynomials: by_hp,
        summary,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Curvilinearity {
    Smooth,
    CurvilinearNotSmooth,
    No,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvilinearVerdict {
    pub verdict: Curvilinearity,
    pub summary: DifferentialSummary,
}

/// Weak curvilinearity: `Ω^1_{S/K} ≠ 0` and `Ω^m_{S/K} = 0` for `m >= 2`,
/// cross-checked against `HP(Ω^1) > deg`, `HP(Ω^2) = HP(Ω^1) - deg` and
/// `HP(Ω^m) = 0` for `m > 2`.
pub fn check_weakly_curvilinear(ctx: &SchemeCtx) -> Result<CurvilinearVerdict> {
    let summary = differential_summary(ctx)?;
    let smooth = smooth_from_summary(ctx, summary.clone())?.smooth;
    let deg = ctx.deg() as i64;
    let by_affine = summary.affine_dims[1] != 0 && summary.affine_dims[2..].iter().all(|&d| d == 0);
    let hp = &summary.hp;
    let by_hp = hp[0] > deg && hp.get(1).copied().unwrap_or(0) == hp[0] - deg && hp[2..].iter().all(|&h| h == 0);
    if by_affine != by_hp {
        return Err(Error::InternalInconsistency(format!(
            "curvilinearity criteria disagree: dims {:?}, HP {:?}",
            summary.affine_dims, summary.hp
        )));
    }
    let verdict = if smooth {
        Curvilinearity::Smooth
    } else if by_affine {
        Curvilinearity::CurvilinearNotSmooth
    } else {
        Curvilinearity::No
    };
    Ok(CurvilinearVerdict { verdict, summary })
}

/// `true` when the characteristic makes separators visible in `Ω^1`.
fn differential_form_applies(ctx: &SchemeCtx) -> bool {
    let p = ctx.field().characteristic();
    p == 0 || p > ctx.r() as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniformVerdict {
    /// Every colength-`i` subscheme keeps `HF(j)`.
    pub holds: bool,
    /// Smallest separator degree among the subschemes.
    pub min_separator_degree: usize,
    /// The same verdict read off `HF_{Ω^1}(j)`, when the characteristic allows.
    pub differential: Option<bool>,
}

/// `(i, j)`-uniformity by separator degrees, cross-checked with `Ω^1`.
pub fn check_uniform(ctx: &SchemeCtx, i: usize, j: usize) -> Result<UniformVerdict> {
    let subs = colength_subschemes(ctx, i)?;
    let holds = subs.iter().all(|y| y.ctx.hf().at(j) == ctx.hf().at(j));
    let min_alpha = subs.iter().map(|y| y.alpha).min().unwrap_or(0);
    if holds != (min_alpha > j) {
        return Err(Error::InternalInconsistency(
            "separator degrees disagree with Hilbert function comparison".into(),
        ));
    }
    let differential = if differential_form_applies(ctx) {
        let v = differential_verdict(ctx, &subs, j)?;
        if v != holds {
            return Err(Error::VerificationFailed(format!(
                "differential and separator criteria disagree at degree {j}"
            )));
        }
        Some(v)
    } else {
        None
    };
    Ok(UniformVerdict {
        holds,
        min_separator_degree: min_alpha,
        differential,
    })
}

fn differential_verdict(ctx: &SchemeCtx, subs: &[SubschemeRef], d: usize) -> Result<bool> {
    let own = omega_hilbert(ctx, 1)?.at(d);
    for y in subs {
        if omega_hilbert(&y.ctx, 1)?.at(d) != own {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cayley–Bacharach property in degree `d`: every colength-one subscheme has
/// separator degree at least `d + 1`.
pub fn check_cbp(ctx: &SchemeCtx, d: usize) -> Result<UniformVerdict> {
    check_uniform(ctx, 1, d)
}

/// Cayley–Bacharach property in degree `d` decided purely by comparing
/// `HF_{Ω^1}(d)` with that of every colength-one subscheme.
pub fn cbp_differential(ctx: &SchemeCtx, d: usize) -> Result<bool> {
    if !differential_form_applies(ctx) {
        return Err(Error::CharTooSmall {
            char: ctx.field().characteristic(),
            bound: ctx.r() as u64,
        });
    }
    let subs = colength_subschemes(ctx, 1)?;
    differential_verdict(ctx, &subs, d)
}

/// Profiles of the local rings, for the explicit curvilinear formulas.
pub fn local_profile(ctx: &SchemeCtx) -> Result<LocalRingProfile> {
    if let Some(p) = &ctx.spec.profile {
        return validate_profile(ctx, p).map(|_| p.clone());
    }
    match &ctx.spec.source {
        SchemeSource::FatPoints(points) => {
            let rings = points
                .iter()
                .map(|p| match (p.multiplicity, ctx.n()) {
                    (1, _) => Ok(LocalRing { kappa: 1, nu: 1 }),
                    (m, 1) => Ok(LocalRing { kappa: 1, nu: m as u64 }),
                    (m, n) => Err(Error::ProfileUnavailable(format!(
                        "a point of multiplicity {m} in P^{n} has a non-principal maximal ideal"
                    ))),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(LocalRingProfile { rings })
        }
        SchemeSource::Components(parts) => {
            let mut rings = Vec::new();
            for gens in parts {
                let ideal = Ideal::new(*ctx.ring(), gens.clone())?;
                let a = Ideal::new(
                    ctx.ring().to_affine(),
                    ideal.gb().polys().iter().map(|g| g.dehomogenize()).collect(),
                )?;
                rings.push(single_rational_point_ring(&a)?);
            }
            Ok(LocalRingProfile { rings })
        }
        SchemeSource::Ideal(_) => Ok(LocalRingProfile {
            rings: vec![single_rational_point_ring(&ctx.affine_ideal()?)?],
        }),
    }
}

fn single_rational_point_ring(a: &Ideal) -> Result<LocalRing> {
    let len = affine_ideal_k_dimension(a)?;
    let red = affine_ideal_k_dimension(&radical(a)?)?;
    if red != 1 {
        return Err(Error::ProfileUnavailable(format!(
            "support has {red} geometric points over the base field; supply a profile"
        )));
    }
    Ok(LocalRing { kappa: 1, nu: len })
}

fn validate_profile(ctx: &SchemeCtx, p: &LocalRingProfile) -> Result<()> {
    if p.rings.iter().any(|r| r.kappa == 0 || r.nu == 0) {
        return Err(Error::InvalidSpec("profile entries must be positive".into()));
    }
    if p.length() != ctx.deg() {
        return Err(Error::InvalidSpec(format!(
            "profile length {} differs from deg = {}",
            p.length(),
            ctx.deg()
        )));
    }
    let kappa: u64 = p.rings.iter().map(|r| r.kappa).sum();
    let red = reduced_dimension(ctx)?;
    if kappa != red {
        return Err(Error::InvalidSpec(format!(
            "profile residue dimensions sum to {kappa}, but the reduced ring has dimension {red}"
        )));
    }
    Ok(())
}

/// `dim_K` of the reduced affine coordinate ring.
pub fn reduced_dimension(ctx: &SchemeCtx) -> Result<u64> {
    affine_ideal_k_dimension(&radical(&ctx.affine_ideal()?)?)
}

/// Radical of a zero-dimensional affine ideal: adjoin the squarefree part of
/// the minimal polynomial of every variable.
pub fn radical(a: &Ideal) -> Result<Ideal> {
    let ring = *a.ring();
    let mut gens = a.generators().to_vec();
    for v in ring.vars() {
        let f = univariate::minimal_polynomial(a, v)?;
        let g = univariate::squarefree_part(ring.field(), &f);
        gens.push(univariate::to_polynomial(ring, v, &g));
    }
    Ideal::new(ring, gens)
}

mod univariate {
    //! Dense univariate polynomials, coefficients from low to high degree.

    use super::*;

    pub(super) type Upoly = Vec<FieldElem>;

    fn trim(mut f: Upoly) -> Upoly {
        while f.last().is_some_and(|c| c.is_zero()) {
            f.pop();
        }
        f
    }

    fn monic(f: Upoly) -> Upoly {
        let f = trim(f);
        match f.last() {
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                f.iter().map(|c| c * &inv).collect()
            }
            None => f,
        }
    }

    /// Quotient and remainder.
    fn divmod(field: FieldSpec, f: &Upoly, g: &Upoly) -> (Upoly, Upoly) {
        let g = trim(g.clone());
        let mut r = trim(f.clone());
        if r.len() < g.len() {
            return (Vec::new(), r);
        }
        let lead_inv = g.last().expect("nonzero divisor").inv().expect("nonzero");
        let mut q = vec![field.zero(); r.len() - g.len() + 1];
        while r.len() >= g.len() && !r.is_empty() {
            let shift = r.len() - g.len();
            let c = r.last().unwrap() * &lead_inv;
            for (i, gc) in g.iter().enumerate() {
                r[shift + i].sub_assign(&(&c * gc));
            }
            q[shift] = c;
            r = trim(r);
        }
        (trim(q), r)
    }

    fn gcd(field: FieldSpec, a: &Upoly, b: &Upoly) -> Upoly {
        let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
        while !b.is_empty() {
            let (_, r) = divmod(field, &a, &b);
            a = b;
            b = r;
        }
        monic(a)
    }

    fn derivative(f: &Upoly) -> Upoly {
        trim(f.iter().enumerate().skip(1).map(|(i, c)| c.scale_int(i as u64)).collect())
    }

    /// Product of the distinct irreducible factors of `f`, monic.
    pub(super) fn squarefree_part(field: FieldSpec, f: &Upoly) -> Upoly {
        let f = monic(f.clone());
        if f.len() <= 2 {
            return f;
        }
        let df = derivative(&f);
        if df.is_empty() {
            // f(x) = h(x^p); over a prime field h(x^p) = h(x)^p
            let p = field.characteristic() as usize;
            let root: Upoly = f.iter().step_by(p).cloned().collect();
            return squarefree_part(field, &root);
        }
        let g = gcd(field, &f, &df);
        let (w, _) = divmod(field, &f, &g);
        let rg = squarefree_part(field, &g);
        // lcm(w, rad g)
        let common = gcd(field, &w, &rg);
        let (rest, _) = divmod(field, &rg, &common);
        monic(mul(field, &w, &rest))
    }

    fn mul(field: FieldSpec, a: &Upoly, b: &Upoly) -> Upoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![field.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j].add_assign(&(x * y));
            }
        }
        trim(out)
    }

    /// Monic generator of `K[x_v] ∩ a`.
    pub(super) fn minimal_polynomial(a: &Ideal, v: usize) -> Result<Upoly> {
        let ring = *a.ring();
        let gb = a.gb();
        let x = Polynomial::var(ring, v)?;
        let mut echelon = Echelon::new(ring.field());
        let mut power = gb.normal_form(&Polynomial::one(ring));
        let limit = crate::hilbert::affine_ideal_k_dimension(a)? as usize;
        for _ in 0..=limit {
            let vec: BTreeMap<[u8; crate::poly::SLOTS], FieldElem> =
                power.terms().iter().map(|(t, c)| (*t.exponents(), c.clone())).collect();
            if let Some(dep) = echelon.insert(vec) {
                return Ok(dep);
            }
            power = gb.normal_form(&power.mul(&x)?);
        }
        Err(Error::InternalInconsistency("no minimal polynomial found".into()))
    }

    pub(super) fn to_polynomial(ring: Ring, v: usize, f: &Upoly) -> Polynomial {
        let terms = f
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mut exps = vec![0u32; v + 1];
                exps[v] = i as u32;
                (Term::from_exponents(&exps).expect("small exponent"), c.clone())
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

}
