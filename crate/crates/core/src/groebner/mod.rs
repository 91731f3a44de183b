//! Gröbner bases of ideals and of submodules of graded free modules, and the
//! operations built on them: normal forms, intersection, powers, colon,
//! saturation and syzygies.

mod engine;
mod scalar;

use std::collections::HashSet;
use std::sync::OnceLock;

use num_rational::BigRational;

use crate::coeff::{FieldElem, FieldSpec};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring, Term, SLOTS};
use engine::{EOrder, Options, Reducers, RingOrd, Vector};
use scalar::{clear_denominators, Fp, Scalar, ZInt};

/// A free module `⊕ R(-twist_i)` with optional labels for its basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    ring: Ring,
    twists: Vec<u32>,
    labels: Vec<Vec<usize>>,
}

impl GradedFreeModule {
    /// Basis vector `i` has degree `twists[i]`. Labels default to `[i]`.
    pub fn new(ring: Ring, twists: Vec<u32>) -> Self {
        let labels = (0..twists.len()).map(|i| vec![i]).collect();
        GradedFreeModule { ring, twists, labels }
    }

    pub fn with_labels(ring: Ring, twists: Vec<u32>, labels: Vec<Vec<usize>>) -> Result<Self> {
        if twists.len() != labels.len() {
            return Err(Error::InternalInconsistency("label count differs from rank".into()));
        }
        Ok(GradedFreeModule { ring, twists, labels })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[u32] {
        &self.twists
    }

    pub fn twist(&self, i: usize) -> u32 {
        self.twists[i]
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    /// Index of the basis vector with the given label.
    pub fn index_of(&self, label: &[usize]) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `self ⊕ other` (same ring).
    fn direct_sum(&self, other: &GradedFreeModule) -> GradedFreeModule {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        GradedFreeModule::new(self.ring, twists)
    }
}

/// A vector of polynomials, stored sparsely by basis index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    ring: Ring,
    coords: Vec<(usize, Polynomial)>,
}

impl ModuleElement {
    /// Merges repeated indices and drops zero coordinates.
    pub fn new(ring: Ring, mut coords: Vec<(usize, Polynomial)>) -> Result<Self> {
        coords.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Polynomial)> = Vec::with_capacity(coords.len());
        for (i, p) in coords {
            if *p.ring() != ring {
                return Err(Error::RingMismatch);
            }
            match out.last_mut() {
                Some((j, q)) if *j == i => *q = q.add(&p)?,
                _ => out.push((i, p)),
            }
        }
        out.retain(|(_, p)| !p.is_zero());
        Ok(ModuleElement { ring, coords: out })
    }

    pub fn zero(ring: Ring) -> Self {
        ModuleElement {
            ring,
            coords: Vec::new(),
        }
    }

    pub fn unit(ring: Ring, i: usize) -> Self {
        ModuleElement {
            ring,
            coords: vec![(i, Polynomial::one(ring))],
        }
    }

    /// `p * e_i`.
    pub fn single(i: usize, p: Polynomial) -> Self {
        let ring = *p.ring();
        let coords = if p.is_zero() { Vec::new() } else { vec![(i, p)] };
        ModuleElement { ring, coords }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coords(&self) -> &[(usize, Polynomial)] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> Polynomial {
        self.coords
            .iter()
            .find(|(j, _)| *j == i)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| Polynomial::zero(self.ring))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &ModuleElement) -> Result<ModuleElement> {
        let mut c = self.coords.clone();
        c.extend(other.coords.iter().cloned());
        ModuleElement::new(self.ring, c)
    }

    pub fn sub(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ModuleElement {
        ModuleElement {
            ring: self.ring,
            coords: self.coords.iter().map(|(i, p)| (*i, p.neg())).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Result<ModuleElement> {
        let mut c = Vec::with_capacity(self.coords.len());
        for (i, p) in &self.coords {
            c.push((*i, p.mul(f)?));
        }
        ModuleElement::new(self.ring, c)
    }

    pub fn scale(&self, c: &FieldElem) -> ModuleElement {
        let coords = self
            .coords
            .iter()
            .map(|(i, p)| (*i, p.scale(c)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        ModuleElement { ring: self.ring, coords }
    }

    /// Common degree of all terms (twists included), if any.
    pub fn homogeneous_degree(&self, module: &GradedFreeModule) -> Option<u32> {
        let mut degs = self
            .coords
            .iter()
            .flat_map(|(i, p)| p.terms().iter().map(move |(t, _)| t.degree() + module.twist(*i)));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Largest term degree with twists; `None` for zero.
    pub fn degree(&self, module: &GradedFreeModule) -> Option<u32> {
        self.coords
            .iter()
            .filter_map(|(i, p)| p.degree().map(|d| d + module.twist(*i)))
            .max()
    }

    fn raw_terms(&self) -> impl Iterator<Item = (Term, usize, &FieldElem)> + '_ {
        self.coords
            .iter()
            .flat_map(|(i, p)| p.terms().iter().map(move |(t, c)| (*t, *i, c)))
    }
}

/// Module term order: total degree including twists, then the ring order on
/// the monomial, then position, where a lower basis index is larger.
/// For non-graded ring orders the degree step is skipped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub ring: MonomialOrder,
}

impl ModuleOrder {
    fn engine(&self, module: &GradedFreeModule) -> EOrder {
        let ring = match self.ring {
            MonomialOrder::DegRevLex => RingOrd::DegRevLex,
            MonomialOrder::Lex => RingOrd::Lex,
            MonomialOrder::Elimination(s) => RingOrd::Elimination(s),
        };
        EOrder::new(ring, module.twists.clone())
    }
}

#[derive(Clone, Debug)]
enum EngineBasis {
    Q(Vec<Vector<ZInt>>),
    Fp(Vec<Vector<Fp>>, u64),
}

fn to_q_vector(ord: &EOrder, terms: Vec<(Term, usize, &FieldElem)>) -> Vector<ZInt> {
    let rats: Vec<&BigRational> = terms
        .iter()
        .map(|(_, _, c)| match c {
            FieldElem::Rational(r) => r,
            FieldElem::Residue { .. } => panic!("field mismatch"),
        })
        .collect();
    let ints = clear_denominators(&rats);
    let raw = terms.iter().zip(ints).map(|((t, p, _), z)| (*t, *p, z)).collect();
    Vector::from_terms(ord, raw, ())
}

fn to_fp_vector(ord: &EOrder, terms: Vec<(Term, usize, &FieldElem)>, p: u64) -> Vector<Fp> {
    let raw = terms
        .into_iter()
        .map(|(t, i, c)| match c {
            FieldElem::Residue { value, .. } => (t, i, Fp(*value)),
            FieldElem::Rational(_) => panic!("field mismatch"),
        })
        .collect();
    Vector::from_terms(ord, raw, p)
}

fn from_vector<S: Scalar>(ring: Ring, v: &Vector<S>, den: &S, cx: S::Ctx) -> ModuleElement {
    let mut by_pos: Vec<(usize, Vec<(Term, FieldElem)>)> = Vec::new();
    for e in &v.terms {
        let pos = e.pos as usize;
        let c = e.c.to_field(den, cx);
        match by_pos.iter_mut().find(|(p, _)| *p == pos) {
            Some((_, ts)) => ts.push((e.mono, c)),
            None => by_pos.push((pos, vec![(e.mono, c)])),
        }
    }
    let coords = by_pos
        .into_iter()
        .map(|(p, ts)| (p, Polynomial::from_terms(ring, ts)))
        .collect();
    ModuleElement::new(ring, coords).expect("same ring")
}

/// Runs the engine on module elements, returning the reduced basis in engine form.
fn run_engine(field: FieldSpec, ord: &EOrder, gens: &[ModuleElement], opts: Options) -> EngineBasis {
    match field {
        FieldSpec::Rationals => {
            let vs = gens.iter().map(|g| to_q_vector(ord, g.raw_terms().collect())).collect();
            EngineBasis::Q(engine::buchberger(vs, ord, (), opts))
        }
        FieldSpec::PrimeField(p) => {
            let p = p.get();
            let vs = gens.iter().map(|g| to_fp_vector(ord, g.raw_terms().collect(), p)).collect();
            EngineBasis::Fp(engine::buchberger(vs, ord, p, opts), p)
        }
    }
}

impl EngineBasis {
    fn elements(&self, ring: Ring) -> Vec<ModuleElement> {
        match self {
            EngineBasis::Q(vs) => vs.iter().map(|v| from_vector(ring, v, &ZInt::S(1), ())).collect(),
            EngineBasis::Fp(vs, p) => vs.iter().map(|v| from_vector(ring, v, &Fp(1), *p)).collect(),
        }
    }

    fn leads(&self) -> Vec<(usize, Term)> {
        match self {
            EngineBasis::Q(vs) => vs.iter().map(|v| (v.lead().pos as usize, v.lead().mono)).collect(),
            EngineBasis::Fp(vs, _) => vs.iter().map(|v| (v.lead().pos as usize, v.lead().mono)).collect(),
        }
    }

    fn reduce(&self, ord: &EOrder, v: &ModuleElement) -> ModuleElement {
        let ring = *v.ring();
        match self {
            EngineBasis::Q(gb) => {
                let x = to_q_vector(ord, v.raw_terms().collect());
                // `x` is `v` times the lcm of its denominators; undo that at the end.
                let scale = denominator_lcm(v);
                let (r, lambda) = Reducers::new(gb.iter()).reduce(x, ord, (), false);
                from_vector(ring, &r, &ZInt::from_big(lambda.to_big() * scale), ())
            }
            EngineBasis::Fp(gb, p) => {
                let x = to_fp_vector(ord, v.raw_terms().collect(), *p);
                let (r, lambda) = Reducers::new(gb.iter()).reduce(x, ord, *p, false);
                from_vector(ring, &r, &lambda, *p)
            }
        }
    }

    fn is_consistent(&self, ord: &EOrder) -> bool {
        match self {
            EngineBasis::Q(gb) => engine::is_groebner(gb, ord, ()),
            EngineBasis::Fp(gb, p) => engine::is_groebner(gb, ord, *p),
        }
    }
}

fn denominator_lcm(v: &ModuleElement) -> num_bigint::BigInt {
    use num_integer::Integer;
    let mut l = num_bigint::BigInt::from(1);
    for (_, _, c) in v.raw_terms() {
        if let FieldElem::Rational(r) = c {
            l = l.lcm(r.denom());
        }
    }
    l
}

/// Reduced Gröbner basis of a submodule for a fixed module order.
#[derive(Clone, Debug)]
pub struct ModuleGb {
    module: GradedFreeModule,
    order: ModuleOrder,
    eorder: EOrder,
    elements: Vec<ModuleElement>,
    leads: Vec<(usize, Term)>,
    inner: EngineBasis,
}

impl ModuleGb {
    fn from_engine(module: GradedFreeModule, order: ModuleOrder, eorder: EOrder, inner: EngineBasis) -> Self {
        let ring = module.ring;
        let mut elements = inner.elements(ring);
        let leads = inner.leads();
        // Make leading coefficients 1.
        for (e, (pos, mono)) in elements.iter_mut().zip(&leads) {
            let lc = e
                .coord(*pos)
                .terms()
                .iter()
                .find(|(t, _)| t == mono)
                .map(|(_, c)| c.clone())
                .expect("leading term present");
            if !lc.is_one() {
                *e = e.scale(&lc.inv().expect("nonzero"));
            }
        }
        ModuleGb {
            module,
            order,
            eorder,
            elements,
            leads,
            inner,
        }
    }

    pub fn module(&self) -> &GradedFreeModule {
        &self.module
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    /// Basis elements, sorted by increasing leading term, leading coefficient 1.
    pub fn elements(&self) -> &[ModuleElement] {
        &self.elements
    }

    /// `(position, monomial)` of each leading term, parallel to [`ModuleGb::elements`].
    pub fn leading_terms(&self) -> &[(usize, Term)] {
        &self.leads
    }

    /// Remainder of `v`: no term is divisible by a leading term, and `v - NF(v)`
    /// lies in the submodule.
    pub fn normal_form(&self, v: &ModuleElement) -> ModuleElement {
        self.inner.reduce(&self.eorder, v)
    }

    pub fn contains(&self, v: &ModuleElement) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Checks Buchberger's criterion: every S-vector reduces to zero.
    pub fn is_consistent(&self) -> bool {
        self.inner.is_consistent(&self.eorder)
    }

    /// `true` iff some leading term at `pos` divides `t`.
    pub fn lead_divides(&self, pos: usize, t: &Term) -> bool {
        self.leads.iter().any(|(p, m)| *p == pos && m.divides(t))
    }
}

/// A submodule given by generators, with a lazily computed Gröbner basis.
#[derive(Clone, Debug)]
pub struct Submodule {
    module: GradedFreeModule,
    gens: Vec<ModuleElement>,
    gb: OnceLock<ModuleGb>,
}

impl Submodule {
    pub fn new(module: GradedFreeModule, gens: Vec<ModuleElement>) -> Result<Self> {
        for g in &gens {
            if *g.ring() != module.ring {
                return Err(Error::RingMismatch);
            }
            if g.coords.iter().any(|(i, _)| *i >= module.rank()) {
                return Err(Error::InternalInconsistency("coordinate index exceeds rank".into()));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Submodule {
            module,
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn module(&self) -> &GradedFreeModule {
        &self.module
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.homogeneous_degree(&self.module).is_some())
    }

    /// Reduced Gröbner basis for the default DegRevLex position order, cached.
    pub fn gb(&self) -> &ModuleGb {
        self.gb.get_or_init(|| module_buchberger(self, ModuleOrder::default()))
    }

    /// Gröbner basis up to total degree `d`; exact in degrees `<= d` for graded input.
    pub fn gb_truncated(&self, d: u32) -> ModuleGb {
        let order = ModuleOrder::default();
        let eorder = order.engine(&self.module);
        let opts = Options {
            max_degree: Some(d),
            product_criterion: self.module.rank() == 1,
        };
        let inner = run_engine(self.module.ring.field(), &eorder, &self.gens, opts);
        ModuleGb::from_engine(self.module.clone(), order, eorder, inner)
    }

    pub fn contains(&self, v: &ModuleElement) -> bool {
        self.gb().contains(v)
    }

    /// Submodule generated by these generators and `extra`.
    pub fn extended(&self, extra: impl IntoIterator<Item = ModuleElement>) -> Result<Submodule> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Submodule::new(self.module.clone(), gens)
    }

    /// `true` iff both submodules are equal.
    pub fn same_as(&self, other: &Submodule) -> bool {
        other.gens.iter().all(|g| self.contains(g)) && self.gens.iter().all(|g| other.contains(g))
    }
}

/// Reduced Gröbner basis of `n` for `order`.
pub fn module_buchberger(n: &Submodule, order: ModuleOrder) -> ModuleGb {
    let eorder = order.engine(&n.module);
    let opts = Options {
        max_degree: None,
        product_criterion: n.module.rank() == 1,
    };
    let inner = run_engine(n.module.ring.field(), &eorder, &n.gens, opts);
    ModuleGb::from_engine(n.module.clone(), order, eorder, inner)
}

/// Reduced Gröbner basis of an ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    inner: ModuleGb,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    fn new(inner: ModuleGb) -> Self {
        let polys = inner.elements.iter().map(|e| e.coord(0)).collect();
        GroebnerBasis { inner, polys }
    }

    pub fn ring(&self) -> &Ring {
        self.inner.module.ring()
    }

    pub fn order(&self) -> MonomialOrder {
        self.inner.order.ring
    }

    /// Basis polynomials sorted by increasing leading term, each monic.
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.inner.leads.iter().map(|(_, t)| *t).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.inner.normal_form(&ModuleElement::single(0, f.clone())).coord(0)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_consistent(&self) -> bool {
        self.inner.is_consistent()
    }

    pub fn lead_divides(&self, t: &Term) -> bool {
        self.inner.lead_divides(0, t)
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.inner.leads.iter().any(|(_, t)| t.is_one())
    }
}

/// Reduced Gröbner basis of `<gens>` for `order`.
pub fn buchberger(ring: Ring, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let ideal = Ideal::new(ring, gens.to_vec())?;
    Ok(ideal.gb_for(order))
}

/// Remainder of `f` modulo a Gröbner basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(f)
}

/// An ideal given by generators, with a cached DegRevLex Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| *g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring,
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal {
            ring,
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    fn as_submodule(&self) -> Submodule {
        let module = GradedFreeModule::new(self.ring, vec![0]);
        let gens = self.gens.iter().map(|g| ModuleElement::single(0, g.clone())).collect();
        Submodule::new(module, gens).expect("same ring")
    }

    fn gb_for(&self, order: MonomialOrder) -> GroebnerBasis {
        GroebnerBasis::new(module_buchberger(&self.as_submodule(), ModuleOrder { ring: order }))
    }

    /// Reduced DegRevLex Gröbner basis, cached.
    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| self.gb_for(MonomialOrder::DegRevLex))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.gb().contains(f)
    }

    /// Ideal generated by the reduced Gröbner basis (canonical generators).
    pub fn reduced(&self) -> Ideal {
        Ideal::new(self.ring, self.gb().polys().to_vec()).expect("same ring")
    }

    pub fn same_as(&self, other: &Ideal) -> bool {
        self.gb().polys() == other.gb().polys()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::new();
        let mut seen = HashSet::new();
        for f in &self.gens {
            for g in &other.gens {
                let p = f.mul(g)?.monic();
                if seen.insert(p.clone()) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(self.ring, gens)
    }
}

/// `I ∩ J` via `t·I + (1 - t)·J` and elimination of `t`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if i.ring != j.ring {
        return Err(Error::RingMismatch);
    }
    let ring = i.ring;
    let t_slot = SLOTS - 1;
    let t = Term::var(t_slot);
    let one = ring.field().one();
    let mut gens = Vec::new();
    for f in &i.gens {
        gens.push(ModuleElement::single(0, f.mul_term(&t, &one)?));
    }
    for g in &j.gens {
        let tg = g.mul_term(&t, &one)?;
        gens.push(ModuleElement::single(0, g.sub(&tg)?));
    }
    let module = GradedFreeModule::new(ring, vec![0]);
    let order = ModuleOrder {
        ring: MonomialOrder::Elimination(t_slot),
    };
    let eorder = order.engine(&module);
    let opts = Options {
        max_degree: None,
        product_criterion: true,
    };
    let basis = run_engine(ring.field(), &eorder, &gens, opts);
    let gens = basis
        .elements(ring)
        .into_iter()
        .map(|e| e.coord(0))
        .filter(|p| p.terms().iter().all(|(m, _)| m.exp(t_slot) == 0))
        .collect();
    Ideal::new(ring, gens)
}

/// `I^m`, generated by all `m`-fold products of generators.
pub fn ideal_power(i: &Ideal, m: u32) -> Result<Ideal> {
    if m == 0 {
        return Err(Error::InvalidSpec("ideal power must be at least 1".into()));
    }
    let mut acc = i.clone();
    for _ in 1..m {
        acc = acc.product(i)?;
    }
    Ok(acc)
}

/// `I : f`.
pub fn colon(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let n = colon_submodule(&i.as_submodule(), f)?;
    Ideal::new(i.ring, n.gens.iter().map(|g| g.coord(0)).collect())
}

/// `I : f^∞`.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let n = saturate_submodule(&i.as_submodule(), f)?;
    Ideal::new(i.ring, n.gens.iter().map(|g| g.coord(0)).collect())
}

/// `N :_F f = { v ∈ F : f·v ∈ N }`.
pub fn colon_submodule(n: &Submodule, f: &Polynomial) -> Result<Submodule> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let r = n.module.rank();
    let df = f.degree().unwrap_or(0);
    let shifted = GradedFreeModule::new(n.module.ring, n.module.twists.iter().map(|t| t + df).collect());
    let big = n.module.direct_sum(&shifted);
    let mut gens = Vec::new();
    for i in 0..r {
        let v = ModuleElement::new(
            n.module.ring,
            vec![(i, f.clone()), (r + i, Polynomial::one(n.module.ring))],
        )?;
        gens.push(v);
    }
    gens.extend(n.gens.iter().cloned());
    let quotient = elimination_tail(&big, r, &gens)?;
    Submodule::new(n.module.clone(), quotient)
}

/// Computes the reduced basis of `gens` in `big` with positions `< split`
/// dominating, and returns the elements living entirely in positions
/// `>= split`, shifted back to start at 0.
fn elimination_tail(big: &GradedFreeModule, split: usize, gens: &[ModuleElement]) -> Result<Vec<ModuleElement>> {
    let mut eorder = ModuleOrder::default().engine(big);
    eorder.split = Some(split);
    let opts = Options {
        max_degree: None,
        product_criterion: false,
    };
    let basis = run_engine(big.ring.field(), &eorder, gens, opts);
    let ring = big.ring;
    Ok(basis
        .elements(ring)
        .into_iter()
        .filter(|e| e.coords.iter().all(|(i, _)| *i >= split))
        .map(|e| ModuleElement {
            ring,
            coords: e.coords.into_iter().map(|(i, p)| (i - split, p)).collect(),
        })
        .collect())
}

/// `N :_F f^∞`.
///
/// For `f = X_0` with homogeneous generators and equal twists the saturation
/// is read off a Gröbner basis in which `X_0` is the smallest variable;
/// otherwise colon ideals are iterated until they stabilize.
pub fn saturate_submodule(n: &Submodule, f: &Polynomial) -> Result<Submodule> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let equal_twists = n.module.twists.windows(2).all(|w| w[0] == w[1]);
    let is_x0 = f.len() == 1 && {
        let (t, _) = &f.terms()[0];
        t.degree() == 1 && t.exp(0) == 1
    };
    if is_x0 && equal_twists && n.is_homogeneous() {
        return saturate_by_x0(n);
    }
    saturate_iterated(n, f)
}

pub(crate) fn saturate_by_x0(n: &Submodule) -> Result<Submodule> {
    let eorder = EOrder::new(RingOrd::DegRevLexX0Last, n.module.twists.clone());
    let opts = Options {
        max_degree: None,
        product_criterion: n.module.rank() == 1,
    };
    let basis = run_engine(n.module.ring.field(), &eorder, &n.gens, opts);
    let ring = n.module.ring;
    let gens = basis
        .elements(ring)
        .into_iter()
        .map(|e| {
            let k = e
                .coords
                .iter()
                .flat_map(|(_, p)| p.terms().iter().map(|(t, _)| t.exp(0)))
                .min()
                .unwrap_or(0);
            let coords = e
                .coords
                .into_iter()
                .map(|(i, p)| {
                    let terms = p
                        .terms()
                        .iter()
                        .map(|(t, c)| {
                            let mut s = *t;
                            s.set_exp(0, (t.exp(0) - k) as u8);
                            (s, c.clone())
                        })
                        .collect();
                    (i, Polynomial::from_terms(ring, terms))
                })
                .collect();
            ModuleElement { ring, coords }
        })
        .collect();
    Submodule::new(n.module.clone(), gens)
}

pub(crate) fn saturate_iterated(n: &Submodule, f: &Polynomial) -> Result<Submodule> {
    let mut cur = n.clone();
    loop {
        let next = colon_submodule(&cur, f)?;
        if next.gens.iter().all(|g| cur.contains(g)) {
            return Ok(cur);
        }
        cur = next;
    }
}

/// First syzygies of `gens` (elements of `module`). The result lives in a
/// free module whose `j`-th basis vector has the degree of `gens[j]`.
pub fn syzygies(module: &GradedFreeModule, gens: &[ModuleElement]) -> Result<Submodule> {
    let r = module.rank();
    let twists: Vec<u32> = gens.iter().map(|g| g.degree(module).unwrap_or(0)).collect();
    let target = GradedFreeModule::new(module.ring, twists);
    let big = module.direct_sum(&target);
    let ring = module.ring;
    let mut aug = Vec::with_capacity(gens.len());
    for (j, g) in gens.iter().enumerate() {
        aug.push(g.add(&ModuleElement::unit(ring, r + j))?);
    }
    let syz = elimination_tail(&big, r, &aug)?;
    Submodule::new(target, syz)
}

/// Syzygies of a list of polynomials.
pub fn polynomial_syzygies(ring: Ring, gens: &[Polynomial]) -> Result<Submodule> {
    let module = GradedFreeModule::new(ring, vec![0]);
    let elems: Vec<ModuleElement> = gens.iter().map(|g| ModuleElement::single(0, g.clone())).collect();
    syzygies(&module, &elems)
}

#[cfg(test)]
mod tests;
